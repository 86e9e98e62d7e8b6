#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "akc/word.hpp"

namespace akc {

using StateId = std::uint32_t;

/// One component per tape.
using EdgeLabel = std::vector<Symbol>;

struct Edge {
    StateId from = 0;
    StateId to = 0;
    EdgeLabel label;

    auto operator<=>(const Edge&) const = default;
};

/// Directed graph whose edges carry one letter-or-epsilon per tape.
///
/// There are no initial or accepting states: every directed path, including
/// the empty path at any vertex, is a run, and the relation of the automaton
/// is the set of word tuples spelled along runs.
class LabeledAutomaton {
public:
    LabeledAutomaton() = default;
    LabeledAutomaton(std::vector<Alphabet> alphabets, std::size_t states);

    std::size_t arity() const { return alphabets_.size(); }
    const std::vector<Alphabet>& alphabets() const { return alphabets_; }
    const Alphabet& alphabet(std::size_t tape) const { return alphabets_.at(tape); }
    std::size_t state_count() const { return states_; }
    const std::vector<Edge>& edges() const { return edges_; }

    StateId add_state();
    StateId add_states(std::size_t n);
    void add_edge(StateId from, StateId to, EdgeLabel label);

    /// Edge indices grouped by source state.
    std::vector<std::vector<std::size_t>> out_edges() const;

    bool operator==(const LabeledAutomaton&) const = default;

private:
    std::vector<Alphabet> alphabets_;
    std::size_t states_ = 0;
    std::vector<Edge> edges_;
};

/// How many objects a single description may relate to, and how we know.
struct ValuednessCertificate {
    enum class Kind { finite, unbounded, unknown };
    enum class Method { none, structural_infinite_witness, brute_force, asserted_by_construction };

    Kind kind = Kind::unknown;
    Method method = Method::none;
    std::size_t bound = 0;                 ///< valid when kind == finite
    std::size_t exhausted_length = 0;      ///< brute_force: descriptions up to this length
    std::string construction;              ///< asserted_by_construction: which one
    std::vector<std::size_t> witness_cycle; ///< unbounded: edge indices of the cycle

    static ValuednessCertificate unknown();
    static ValuednessCertificate asserted(std::size_t bound, std::string construction);
    static ValuednessCertificate brute_force(std::size_t bound, std::size_t length);
    static ValuednessCertificate unbounded(std::vector<std::size_t> witness_cycle);

    bool is_finite() const { return kind == Kind::finite; }
    bool is_unbounded() const { return kind == Kind::unbounded; }

    bool operator==(const ValuednessCertificate&) const = default;
};

std::string describe(const ValuednessCertificate& c);

/// Saturating helpers for certificate arithmetic.
std::size_t bound_sum(std::size_t a, std::size_t b);
std::size_t bound_product(std::size_t a, std::size_t b);

/// Tape 0 is the description tape, tape 1 the object tape.
struct DescriptionMode {
    LabeledAutomaton automaton;
    ValuednessCertificate certificate;

    static constexpr std::size_t description_tape = 0;
    static constexpr std::size_t object_tape = 1;
};

/// Tapes 0 and 1 are description tapes (u, v), tape 2 is the object tape (w).
struct PairDescriptionMode {
    LabeledAutomaton automaton;
    ValuednessCertificate certificate;

    static constexpr std::size_t object_tape = 2;
};

/// Wraps an arity-2 automaton; throws ContractError on other arities.
DescriptionMode make_mode(LabeledAutomaton a, ValuednessCertificate c = ValuednessCertificate::unknown());
PairDescriptionMode make_pair_mode(LabeledAutomaton a, ValuednessCertificate c = ValuednessCertificate::unknown());

using WordTuple = std::vector<Word>;
using RelationSet = std::set<WordTuple>;

/// Default cap on configurations visited by enumerate_relation.
inline constexpr std::size_t kDefaultEnumerationBudget = 8'000'000;

struct EnumerationLimits {
    std::vector<std::size_t> max_len;    ///< per tape
    std::vector<std::size_t> summed_tapes; ///< optional joint cap over these tapes
    std::size_t summed_cap = std::numeric_limits<std::size_t>::max();
    std::size_t budget = kDefaultEnumerationBudget;
};

/// True iff some directed path spells exactly `words` (one word per tape).
bool read_relation_contains(const LabeledAutomaton& aut, std::span<const Word> words);
bool read_relation_contains(const LabeledAutomaton& aut, std::initializer_list<Word> words);

/// Every tuple of the relation whose components respect the limits.
/// Throws ResourceError when more than limits.budget configurations are
/// explored.
RelationSet enumerate_relation(const LabeledAutomaton& aut, const EnumerationLimits& limits);
RelationSet enumerate_relation(const LabeledAutomaton& aut, std::vector<std::size_t> max_len,
                               std::size_t budget = kDefaultEnumerationBudget);

/// Every edge reversed; the relation becomes the set of reversed tuples.
LabeledAutomaton reverse(const LabeledAutomaton& aut);

/// Exchange tapes i and j in every label.
LabeledAutomaton swap_tapes(const LabeledAutomaton& aut, std::size_t i, std::size_t j);

/// Reversal keeps the valuedness certificate.
DescriptionMode reverse(const DescriptionMode& m);

/// Inversion of a description mode; the certificate becomes unknown.
DescriptionMode invert(const DescriptionMode& m);

} // namespace akc
