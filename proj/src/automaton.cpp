#include "akc/automaton.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>

#include "akc/errors.hpp"

namespace akc {

LabeledAutomaton::LabeledAutomaton(std::vector<Alphabet> alphabets, std::size_t states)
    : alphabets_(std::move(alphabets)), states_(states) {
    if (alphabets_.empty()) throw ContractError("automaton needs at least one tape");
}

StateId LabeledAutomaton::add_state() { return add_states(1); }

StateId LabeledAutomaton::add_states(std::size_t n) {
    const auto first = static_cast<StateId>(states_);
    states_ += n;
    return first;
}

void LabeledAutomaton::add_edge(StateId from, StateId to, EdgeLabel label) {
    if (from >= states_ || to >= states_)
        throw ContractError("edge endpoint out of range: " + std::to_string(from) + " -> " +
                            std::to_string(to) + " with " + std::to_string(states_) + " states");
    if (label.size() != arity())
        throw ContractError("edge label has " + std::to_string(label.size()) + " components, arity is " +
                            std::to_string(arity()));
    for (std::size_t t = 0; t < label.size(); ++t)
        if (!alphabets_[t].contains(label[t]))
            throw ContractError("edge label letter outside alphabet of tape " + std::to_string(t));
    edges_.push_back(Edge{from, to, std::move(label)});
}

std::vector<std::vector<std::size_t>> LabeledAutomaton::out_edges() const {
    std::vector<std::vector<std::size_t>> out(states_);
    for (std::size_t i = 0; i < edges_.size(); ++i) out[edges_[i].from].push_back(i);
    return out;
}

ValuednessCertificate ValuednessCertificate::unknown() { return {}; }

ValuednessCertificate ValuednessCertificate::asserted(std::size_t bound, std::string construction) {
    ValuednessCertificate c;
    c.kind = Kind::finite;
    c.method = Method::asserted_by_construction;
    c.bound = bound;
    c.construction = std::move(construction);
    return c;
}

ValuednessCertificate ValuednessCertificate::brute_force(std::size_t bound, std::size_t length) {
    ValuednessCertificate c;
    c.kind = Kind::finite;
    c.method = Method::brute_force;
    c.bound = bound;
    c.exhausted_length = length;
    return c;
}

ValuednessCertificate ValuednessCertificate::unbounded(std::vector<std::size_t> witness_cycle) {
    if (witness_cycle.empty()) throw ContractError("an unbounded certificate needs a witness cycle");
    ValuednessCertificate c;
    c.kind = Kind::unbounded;
    c.method = Method::structural_infinite_witness;
    c.witness_cycle = std::move(witness_cycle);
    return c;
}

std::string describe(const ValuednessCertificate& c) {
    switch (c.kind) {
    case ValuednessCertificate::Kind::unknown:
        return "unknown";
    case ValuednessCertificate::Kind::unbounded: {
        std::string s = "unbounded (witness cycle over edges";
        for (std::size_t e : c.witness_cycle) s += " " + std::to_string(e);
        return s + ")";
    }
    case ValuednessCertificate::Kind::finite:
        break;
    }
    std::string s = "finite, bound " + std::to_string(c.bound);
    if (c.method == ValuednessCertificate::Method::brute_force)
        s += " (brute force up to description length " + std::to_string(c.exhausted_length) + ")";
    else if (c.method == ValuednessCertificate::Method::asserted_by_construction)
        s += " (asserted by construction: " + c.construction + ")";
    return s;
}

std::size_t bound_sum(std::size_t a, std::size_t b) {
    const std::size_t max = std::numeric_limits<std::size_t>::max();
    return a > max - b ? max : a + b;
}

std::size_t bound_product(std::size_t a, std::size_t b) {
    const std::size_t max = std::numeric_limits<std::size_t>::max();
    if (a == 0 || b == 0) return 0;
    return a > max / b ? max : a * b;
}

DescriptionMode make_mode(LabeledAutomaton a, ValuednessCertificate c) {
    if (a.arity() != 2) throw ContractError("a description mode needs arity 2");
    return DescriptionMode{std::move(a), std::move(c)};
}

PairDescriptionMode make_pair_mode(LabeledAutomaton a, ValuednessCertificate c) {
    if (a.arity() != 3) throw ContractError("a pair description mode needs arity 3");
    return PairDescriptionMode{std::move(a), std::move(c)};
}

namespace {

void check_words(const LabeledAutomaton& aut, std::span<const Word> words) {
    if (words.size() != aut.arity())
        throw ContractError("expected " + std::to_string(aut.arity()) + " words, got " +
                            std::to_string(words.size()));
    for (std::size_t t = 0; t < words.size(); ++t)
        for (Letter l : words[t])
            if (l >= aut.alphabet(t).size())
                throw RejectedInput("letter " + std::to_string(l) + " outside alphabet of tape " +
                                    std::to_string(t));
}

constexpr std::size_t kMaxMembershipConfigs = std::size_t{1} << 28;

} // namespace

bool read_relation_contains(const LabeledAutomaton& aut, std::span<const Word> words) {
    check_words(aut, words);
    const std::size_t n_states = aut.state_count();
    if (n_states == 0) return false;
    const std::size_t arity = aut.arity();
    if (std::all_of(words.begin(), words.end(), [](const Word& w) { return w.empty(); })) return true;

    // Configuration = (state, read position on every tape), mixed-radix encoded.
    std::vector<std::size_t> radix(arity);
    std::size_t positions = 1;
    for (std::size_t t = 0; t < arity; ++t) {
        radix[t] = words[t].size() + 1;
        if (positions > kMaxMembershipConfigs / radix[t])
            throw ResourceError("membership table exceeds " + std::to_string(kMaxMembershipConfigs) +
                                " configurations");
        positions *= radix[t];
    }
    if (positions > kMaxMembershipConfigs / n_states)
        throw ResourceError("membership table exceeds " + std::to_string(kMaxMembershipConfigs) +
                            " configurations");

    const auto out = aut.out_edges();
    const auto& edges = aut.edges();
    std::vector<bool> seen(n_states * positions, false);
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < n_states; ++s) {
        seen[s * positions] = true;
        queue.push_back(s * positions);
    }
    const std::size_t full = positions - 1;
    std::vector<std::size_t> pos(arity);

    while (!queue.empty()) {
        const std::size_t code = queue.front();
        queue.pop_front();
        const std::size_t state = code / positions;
        std::size_t rest = code % positions;
        if (rest == full) return true;
        for (std::size_t t = arity; t-- > 0;) {
            pos[t] = rest % radix[t];
            rest /= radix[t];
        }
        for (std::size_t ei : out[state]) {
            const Edge& e = edges[ei];
            std::size_t next = 0;
            bool ok = true;
            for (std::size_t t = 0; t < arity && ok; ++t) {
                std::size_t p = pos[t];
                if (e.label[t].is_letter()) {
                    if (p < words[t].size() && words[t][p] == e.label[t].index())
                        ++p;
                    else
                        ok = false;
                }
                next = next * radix[t] + p;
            }
            if (!ok) continue;
            const std::size_t ncode = static_cast<std::size_t>(e.to) * positions + next;
            if (!seen[ncode]) {
                seen[ncode] = true;
                queue.push_back(ncode);
            }
        }
    }
    return false;
}

bool read_relation_contains(const LabeledAutomaton& aut, std::initializer_list<Word> words) {
    return read_relation_contains(aut, std::span<const Word>(words.begin(), words.size()));
}

namespace {

std::string config_key(StateId s, const WordTuple& words) {
    std::string key;
    key.append(reinterpret_cast<const char*>(&s), sizeof s);
    for (const Word& w : words) {
        const auto len = static_cast<std::uint32_t>(w.size());
        key.append(reinterpret_cast<const char*>(&len), sizeof len);
        key.append(w.begin(), w.end());
    }
    return key;
}

} // namespace

RelationSet enumerate_relation(const LabeledAutomaton& aut, const EnumerationLimits& limits) {
    const std::size_t arity = aut.arity();
    if (limits.max_len.size() != arity)
        throw ContractError("enumeration needs one length cap per tape");
    for (std::size_t t : limits.summed_tapes)
        if (t >= arity) throw ContractError("summed tape index out of range");

    RelationSet result;
    if (aut.state_count() == 0) return result;

    struct Config {
        StateId state;
        WordTuple words;
    };
    const auto out = aut.out_edges();
    const auto& edges = aut.edges();
    std::unordered_set<std::string> seen;
    std::deque<Config> queue;
    const WordTuple empty(arity);
    result.insert(empty);
    for (StateId s = 0; s < aut.state_count(); ++s) {
        seen.insert(config_key(s, empty));
        queue.push_back(Config{s, empty});
    }
    if (seen.size() > limits.budget)
        throw ResourceError("enumeration budget of " + std::to_string(limits.budget) + " configurations exceeded");

    while (!queue.empty()) {
        Config cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t ei : out[cur.state]) {
            const Edge& e = edges[ei];
            bool ok = true;
            for (std::size_t t = 0; t < arity && ok; ++t)
                if (e.label[t].is_letter() && cur.words[t].size() >= limits.max_len[t]) ok = false;
            if (!ok) continue;
            if (!limits.summed_tapes.empty()) {
                std::size_t total = 0;
                for (std::size_t t : limits.summed_tapes)
                    total += cur.words[t].size() + (e.label[t].is_letter() ? 1 : 0);
                if (total > limits.summed_cap) continue;
            }
            WordTuple next = cur.words;
            for (std::size_t t = 0; t < arity; ++t)
                if (e.label[t].is_letter()) next[t].push_back(e.label[t].index());
            if (!seen.insert(config_key(e.to, next)).second) continue;
            if (seen.size() > limits.budget)
                throw ResourceError("enumeration budget of " + std::to_string(limits.budget) +
                                    " configurations exceeded");
            result.insert(next);
            queue.push_back(Config{e.to, std::move(next)});
        }
    }
    return result;
}

RelationSet enumerate_relation(const LabeledAutomaton& aut, std::vector<std::size_t> max_len, std::size_t budget) {
    EnumerationLimits limits;
    limits.max_len = std::move(max_len);
    limits.budget = budget;
    return enumerate_relation(aut, limits);
}

LabeledAutomaton reverse(const LabeledAutomaton& aut) {
    LabeledAutomaton r(aut.alphabets(), aut.state_count());
    for (const Edge& e : aut.edges()) r.add_edge(e.to, e.from, e.label);
    return r;
}

LabeledAutomaton swap_tapes(const LabeledAutomaton& aut, std::size_t i, std::size_t j) {
    if (i >= aut.arity() || j >= aut.arity()) throw ContractError("tape index out of range");
    std::vector<Alphabet> alphabets = aut.alphabets();
    std::swap(alphabets[i], alphabets[j]);
    LabeledAutomaton r(std::move(alphabets), aut.state_count());
    for (const Edge& e : aut.edges()) {
        EdgeLabel label = e.label;
        std::swap(label[i], label[j]);
        r.add_edge(e.from, e.to, std::move(label));
    }
    return r;
}

DescriptionMode reverse(const DescriptionMode& m) {
    return DescriptionMode{reverse(m.automaton), m.certificate};
}

DescriptionMode invert(const DescriptionMode& m) {
    return DescriptionMode{swap_tapes(m.automaton, 0, 1), ValuednessCertificate::unknown()};
}

} // namespace akc
