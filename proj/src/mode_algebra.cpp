#include "akc/mode_algebra.hpp"

#include <deque>
#include <map>
#include <set>

#include "akc/errors.hpp"
#include "akc/scc.hpp"

namespace akc {

DescriptionMode identity_mode(const Alphabet& alphabet) {
    if (alphabet.empty()) throw ContractError("identity mode needs a nonempty alphabet");
    LabeledAutomaton a({alphabet, alphabet}, 1);
    for (std::size_t l = 0; l < alphabet.size(); ++l)
        a.add_edge(0, 0, {sym(static_cast<Letter>(l)), sym(static_cast<Letter>(l))});
    return make_mode(std::move(a), ValuednessCertificate::asserted(1, "identity"));
}

DescriptionMode union_modes(const DescriptionMode& m1, const DescriptionMode& m2) {
    if (m1.automaton.alphabets() != m2.automaton.alphabets())
        throw ContractError("union needs equal alphabets on every tape");
    const std::size_t offset = m1.automaton.state_count();
    LabeledAutomaton a(m1.automaton.alphabets(), offset + m2.automaton.state_count());
    for (const Edge& e : m1.automaton.edges()) a.add_edge(e.from, e.to, e.label);
    for (const Edge& e : m2.automaton.edges())
        a.add_edge(static_cast<StateId>(e.from + offset), static_cast<StateId>(e.to + offset), e.label);

    ValuednessCertificate c = ValuednessCertificate::unknown();
    if (m1.certificate.is_finite() && m2.certificate.is_finite()) {
        c = ValuednessCertificate::asserted(bound_sum(m1.certificate.bound, m2.certificate.bound), "union");
    } else if (m1.certificate.is_unbounded()) {
        c = m1.certificate;
    } else if (m2.certificate.is_unbounded()) {
        std::vector<std::size_t> shifted;
        for (std::size_t e : m2.certificate.witness_cycle) shifted.push_back(e + m1.automaton.edges().size());
        c = ValuednessCertificate::unbounded(std::move(shifted));
    }
    return make_mode(std::move(a), std::move(c));
}

DescriptionMode compose(const DescriptionMode& m1, const DescriptionMode& m2) {
    const LabeledAutomaton& k = m1.automaton;
    const LabeledAutomaton& l = m2.automaton;
    if (k.alphabet(1) != l.alphabet(0))
        throw ContractError("compose: object alphabet of the first mode must equal the description alphabet of the second");
    const std::size_t nl = l.state_count();
    auto id = [nl](StateId ks, StateId ls) { return static_cast<StateId>(ks * nl + ls); };

    LabeledAutomaton a({k.alphabet(0), l.alphabet(1)}, k.state_count() * nl);
    for (const Edge& ek : k.edges()) {
        if (ek.label[1].is_epsilon()) {
            for (StateId ls = 0; ls < nl; ++ls) a.add_edge(id(ek.from, ls), id(ek.to, ls), {ek.label[0], eps});
            continue;
        }
        for (const Edge& el : l.edges())
            if (el.label[0] == ek.label[1]) a.add_edge(id(ek.from, el.from), id(ek.to, el.to), {ek.label[0], el.label[1]});
    }
    for (const Edge& el : l.edges()) {
        if (!el.label[0].is_epsilon()) continue;
        for (StateId ks = 0; ks < k.state_count(); ++ks) a.add_edge(id(ks, el.from), id(ks, el.to), {eps, el.label[1]});
    }

    ValuednessCertificate c = ValuednessCertificate::unknown();
    if (m1.certificate.is_finite() && m2.certificate.is_finite())
        c = ValuednessCertificate::asserted(bound_product(m1.certificate.bound, m2.certificate.bound), "compose");
    return make_mode(std::move(a), std::move(c));
}

DescriptionMode append_symbol(const DescriptionMode& m, Letter s) {
    if (s >= m.automaton.alphabet(1).size()) throw ContractError("append_symbol: letter outside object alphabet");
    LabeledAutomaton a = m.automaton;
    const StateId sink = a.add_state();
    for (StateId q = 0; q < sink; ++q) a.add_edge(q, sink, {eps, sym(s)});

    // Objects of p: R(p) together with R(p)·s.
    ValuednessCertificate c = ValuednessCertificate::unknown();
    if (m.certificate.is_finite())
        c = ValuednessCertificate::asserted(bound_product(2, m.certificate.bound), "append-symbol");
    return make_mode(std::move(a), std::move(c));
}

DescriptionMode unary_compressor(std::size_t c) {
    if (c == 0) throw ContractError("unary_compressor needs c >= 1");
    const Letter one = 1;
    LabeledAutomaton a({Alphabet::binary(), Alphabet::binary()}, c + 1);
    a.add_edge(0, 1, {sym(one), eps});
    for (std::size_t i = 1; i <= c; ++i)
        a.add_edge(static_cast<StateId>(i), static_cast<StateId>((i + 1) % (c + 1)), {eps, sym(one)});
    return make_mode(std::move(a),
                     ValuednessCertificate::asserted(2 * c + 1, "unary-compressor-c" + std::to_string(c)));
}

DescriptionMode layered_concat(const DescriptionMode& m, std::size_t n_layers) {
    if (n_layers == 0) throw ContractError("layered_concat needs N >= 1");
    if (m.automaton.alphabet(0) != Alphabet::binary())
        throw ContractError("layered_concat needs a binary description alphabet");
    const LabeledAutomaton& base = m.automaton;
    const std::size_t s = base.state_count();
    const std::size_t top = n_layers;  // layers 0..N, extra copy at index N+1
    auto id = [s](std::size_t layer, StateId q) { return static_cast<StateId>(layer * s + q); };

    LabeledAutomaton a(base.alphabets(), (n_layers + 2) * s);
    for (const Edge& e : base.edges()) {
        if (e.label[0].is_epsilon()) {
            for (std::size_t layer = 0; layer <= top; ++layer) a.add_edge(id(layer, e.from), id(layer, e.to), e.label);
        } else {
            for (std::size_t layer = 0; layer < top; ++layer) a.add_edge(id(layer, e.from), id(layer + 1, e.to), e.label);
        }
        a.add_edge(id(top + 1, e.from), id(top + 1, e.to), e.label);
    }
    for (StateId q = 0; q < s; ++q) {
        a.add_edge(id(top, q), id(0, q), {sym(0), eps});
        for (StateId t = 0; t < s; ++t) a.add_edge(id(top, q), id(top + 1, t), {sym(1), eps});
    }

    // Per start layer the auxiliary positions are fixed; the first part and
    // the second part each contribute at most `bound` objects.
    ValuednessCertificate c = ValuednessCertificate::unknown();
    if (m.certificate.is_finite()) {
        const std::size_t b = m.certificate.bound;
        c = ValuednessCertificate::asserted(
            bound_sum(bound_product(n_layers + 1, bound_product(b, b)), b),
            "layered-concat-N" + std::to_string(n_layers));
    }
    return make_mode(std::move(a), std::move(c));
}

std::optional<std::vector<std::size_t>> eps_cycle_check(const LabeledAutomaton& aut, const TapeRoles& roles) {
    if (roles.object_tape >= aut.arity()) throw ContractError("object tape out of range");
    for (std::size_t t : roles.description_tapes)
        if (t >= aut.arity()) throw ContractError("description tape out of range");

    const auto& edges = aut.edges();
    auto silent = [&](const Edge& e) {
        for (std::size_t t : roles.description_tapes)
            if (e.label[t].is_letter()) return false;
        return true;
    };
    std::vector<std::vector<std::size_t>> succ(aut.state_count());
    for (const Edge& e : edges)
        if (silent(e)) succ[e.from].push_back(e.to);
    const SccDecomposition scc = strongly_connected_components(succ);
    const auto out = aut.out_edges();

    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
        const Edge& e = edges[ei];
        if (!silent(e) || e.label[roles.object_tape].is_epsilon()) continue;
        if (scc.component[e.from] != scc.component[e.to]) continue;

        // Close the cycle: shortest silent path e.to -> e.from inside the component.
        const std::size_t comp = scc.component[e.from];
        std::vector<std::size_t> via(aut.state_count(), edges.size());
        std::vector<bool> seen(aut.state_count(), false);
        std::deque<StateId> queue{e.to};
        seen[e.to] = true;
        while (!queue.empty() && !seen[e.from]) {
            const StateId v = queue.front();
            queue.pop_front();
            for (std::size_t fi : out[v]) {
                const Edge& f = edges[fi];
                if (!silent(f) || scc.component[f.to] != comp || seen[f.to]) continue;
                seen[f.to] = true;
                via[f.to] = fi;
                queue.push_back(f.to);
            }
        }
        std::vector<std::size_t> back;
        for (StateId v = e.from; v != e.to; v = edges[via[v]].from) back.push_back(via[v]);
        std::vector<std::size_t> cycle{ei};
        cycle.insert(cycle.end(), back.rbegin(), back.rend());
        return cycle;
    }
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> eps_cycle_check(const DescriptionMode& m) {
    return eps_cycle_check(m.automaton, TapeRoles::binary());
}

DescriptionMode with_structural_check(DescriptionMode m) {
    if (auto w = eps_cycle_check(m)) m.certificate = ValuednessCertificate::unbounded(std::move(*w));
    return m;
}

ValuednessCertificate ValuednessProfile::certificate() const {
    if (!max_fanout) return ValuednessCertificate::unbounded(witness_cycle);
    return ValuednessCertificate::brute_force(*max_fanout, description_length);
}

ValuednessProfile valuedness_profile(const LabeledAutomaton& aut, const TapeRoles& roles, std::size_t max_len,
                                     std::size_t budget) {
    ValuednessProfile p;
    p.description_length = max_len;
    if (auto w = eps_cycle_check(aut, roles)) {
        p.witness_cycle = std::move(*w);
        return p;
    }
    p.object_cap = bound_product(max_len + 1, aut.state_count());

    EnumerationLimits limits;
    limits.max_len.assign(aut.arity(), 0);
    for (std::size_t t : roles.description_tapes) limits.max_len[t] = max_len;
    limits.max_len[roles.object_tape] = p.object_cap;
    limits.summed_tapes = roles.description_tapes;
    limits.summed_cap = max_len;
    limits.budget = budget;

    std::map<WordTuple, std::set<Word>> objects;
    for (const WordTuple& t : enumerate_relation(aut, limits)) {
        WordTuple desc;
        for (std::size_t d : roles.description_tapes) desc.push_back(t[d]);
        objects[desc].insert(t[roles.object_tape]);
    }
    std::size_t best = 0;
    for (const auto& [desc, objs] : objects) best = std::max(best, objs.size());
    p.max_fanout = best;
    return p;
}

ValuednessProfile valuedness_profile(const DescriptionMode& m, std::size_t max_len, std::size_t budget) {
    return valuedness_profile(m.automaton, TapeRoles::binary(), max_len, budget);
}

ValuednessProfile valuedness_profile(const PairDescriptionMode& m, std::size_t max_len, std::size_t budget) {
    return valuedness_profile(m.automaton, TapeRoles::pair(), max_len, budget);
}

} // namespace akc
