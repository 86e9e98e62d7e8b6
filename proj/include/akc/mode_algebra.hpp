#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "akc/automaton.hpp"

namespace akc {

/// One state, a self-loop (a,a) per letter. K(x) = |x|.
DescriptionMode identity_mode(const Alphabet& alphabet = Alphabet::binary());

/// Disjoint union; K_union(x) = min(K_1(x), K_2(x)).
DescriptionMode union_modes(const DescriptionMode& m1, const DescriptionMode& m2);

/// Product construction for {(p, v) : exists q, (p, q) in R1 and (q, v) in R2}.
DescriptionMode compose(const DescriptionMode& m1, const DescriptionMode& m2);

/// Adds a sink reachable from every state by an (eps, s) edge.
DescriptionMode append_symbol(const DescriptionMode& m, Letter s);

/// Cycle of c+1 states: one edge reads a description 1, c edges emit an
/// object 1. Relation: {(1^k, 1^l) : (k-1)c <= l <= (k+1)c}. Both tapes use
/// the binary alphabet.
DescriptionMode unary_compressor(std::size_t c);

/// N+1 layered copies of the base plus one extra copy. Every N description
/// letters of the first part are followed by an auxiliary bit; 0 continues,
/// 1 jumps into the extra copy, which describes the second part:
///     K'(xy) <= K(x) + floor(K(x)/N) + 1 + K(y).
DescriptionMode layered_concat(const DescriptionMode& m, std::size_t n_layers);

/// Lifted to any arity: which tapes count as descriptions and which one is
/// the object tape.
struct TapeRoles {
    std::vector<std::size_t> description_tapes;
    std::size_t object_tape = 1;

    static TapeRoles binary() { return {{0}, 1}; }
    static TapeRoles pair() { return {{0, 1}, 2}; }
};

/// Edge indices of a cycle that emits an object letter and reads no
/// description letter, or nullopt when none exists. Absence of such a cycle
/// is necessary (not sufficient) for bounded valuedness.
std::optional<std::vector<std::size_t>> eps_cycle_check(const LabeledAutomaton& aut, const TapeRoles& roles);
std::optional<std::vector<std::size_t>> eps_cycle_check(const DescriptionMode& m);

/// Returns m with its certificate replaced by "unbounded" when
/// eps_cycle_check finds a witness; otherwise m unchanged.
DescriptionMode with_structural_check(DescriptionMode m);

struct ValuednessProfile {
    /// Maximum number of objects related to one description; nullopt when
    /// eps_cycle_check found an unboundedness witness.
    std::optional<std::size_t> max_fanout;
    std::vector<std::size_t> witness_cycle;
    std::size_t description_length = 0;  ///< L: descriptions up to this (total) length
    std::size_t object_cap = 0;          ///< (L+1) * states

    ValuednessCertificate certificate() const;
};

/// Exact maximum fan-out over all descriptions of (total) length <= L.
/// Objects are searched up to (L+1)*states letters, which covers every
/// object once the structural check passes.
ValuednessProfile valuedness_profile(const LabeledAutomaton& aut, const TapeRoles& roles, std::size_t max_len,
                                     std::size_t budget = kDefaultEnumerationBudget);
ValuednessProfile valuedness_profile(const DescriptionMode& m, std::size_t max_len,
                                     std::size_t budget = kDefaultEnumerationBudget);
ValuednessProfile valuedness_profile(const PairDescriptionMode& m, std::size_t max_len,
                                     std::size_t budget = kDefaultEnumerationBudget);

} // namespace akc
