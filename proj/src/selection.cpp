#include "akc/selection.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <sstream>

#include "akc/errors.hpp"
#include "akc/scc.hpp"

namespace akc {

SelectionRule::SelectionRule(std::size_t states, StateId initial, std::vector<StateId> accepting,
                             std::vector<std::array<StateId, 2>> transitions)
    : initial_(initial), accepting_(states, false), transitions_(std::move(transitions)) {
    if (states == 0) throw ContractError("a selection rule needs at least one state");
    if (transitions_.size() != states) throw ContractError("transition table must have one row per state");
    if (initial >= states) throw ContractError("initial state out of range");
    for (StateId a : accepting) {
        if (a >= states) throw ContractError("accepting state out of range");
        accepting_[a] = true;
    }
    for (const auto& row : transitions_)
        for (StateId t : row)
            if (t >= states) throw ContractError("transition target out of range");
}

SelectionRule SelectionRule::all() { return SelectionRule(1, 0, {0}, {{0, 0}}); }

SelectionRule SelectionRule::none() { return SelectionRule(1, 0, {}, {{0, 0}}); }

SelectionRule SelectionRule::parity() { return SelectionRule(2, 0, {0}, {{1, 1}, {0, 0}}); }

SplitWord apply_selection_from(const SelectionRule& rule, StateId start, const Word& w) {
    if (start >= rule.state_count()) throw ContractError("start state out of range");
    SplitWord out;
    StateId s = start;
    for (Letter l : w) {
        if (l > 1) throw RejectedInput("selection rules read binary words");
        (rule.accepting(s) ? out.selected : out.non_selected).push_back(l);
        s = rule.step(s, l);
    }
    return out;
}

SplitWord apply_selection(const SelectionRule& rule, const Word& w) {
    return apply_selection_from(rule, rule.initial(), w);
}

std::optional<Word> merge(const SelectionRule& rule, const Word& u, const Word& v) {
    Word w;
    w.reserve(u.size() + v.size());
    std::size_t iu = 0, iv = 0;
    StateId s = rule.initial();
    while (iu < u.size() || iv < v.size()) {
        Letter l;
        if (rule.accepting(s)) {
            if (iu == u.size()) return std::nullopt;
            l = u[iu++];
        } else {
            if (iv == v.size()) return std::nullopt;
            l = v[iv++];
        }
        if (l > 1) throw RejectedInput("selection rules read binary words");
        w.push_back(l);
        s = rule.step(s, l);
    }
    return w;
}

PairDescriptionMode splitter_mode(const SelectionRule& rule) {
    const Alphabet bin = Alphabet::binary();
    LabeledAutomaton a({bin, bin, bin}, rule.state_count());
    for (StateId q = 0; q < rule.state_count(); ++q)
        for (Letter b = 0; b < 2; ++b) {
            if (rule.accepting(q))
                a.add_edge(q, rule.step(q, b), {sym(b), eps, sym(b)});
            else
                a.add_edge(q, rule.step(q, b), {eps, sym(b), sym(b)});
        }
    return make_pair_mode(std::move(a), ValuednessCertificate::asserted(rule.state_count(), "splitter"));
}

PairDescriptionMode joint(const DescriptionMode& q, const PairDescriptionMode& r) {
    const LabeledAutomaton& k = q.automaton;
    const LabeledAutomaton& l = r.automaton;
    if (k.alphabet(1) != l.alphabet(0))
        throw ContractError("joint: object alphabet of Q must equal the first description alphabet of R");
    const std::size_t nl = l.state_count();
    auto id = [nl](StateId ks, StateId ls) { return static_cast<StateId>(ks * nl + ls); };

    LabeledAutomaton a({k.alphabet(0), l.alphabet(1), l.alphabet(2)}, k.state_count() * nl);
    for (const Edge& ek : k.edges()) {
        if (ek.label[1].is_epsilon()) {
            for (StateId ls = 0; ls < nl; ++ls) a.add_edge(id(ek.from, ls), id(ek.to, ls), {ek.label[0], eps, eps});
            continue;
        }
        for (const Edge& el : l.edges())
            if (el.label[0] == ek.label[1])
                a.add_edge(id(ek.from, el.from), id(ek.to, el.to), {ek.label[0], el.label[1], el.label[2]});
    }
    for (const Edge& el : l.edges()) {
        if (!el.label[0].is_epsilon()) continue;
        for (StateId ks = 0; ks < k.state_count(); ++ks)
            a.add_edge(id(ks, el.from), id(ks, el.to), {eps, el.label[1], el.label[2]});
    }

    ValuednessCertificate c = ValuednessCertificate::unknown();
    if (q.certificate.is_finite() && r.certificate.is_finite())
        c = ValuednessCertificate::asserted(bound_product(q.certificate.bound, r.certificate.bound), "joint");
    return make_pair_mode(std::move(a), std::move(c));
}

std::string to_string(SelectionClass c) {
    switch (c) {
    case SelectionClass::finite_on_normal:
        return "finite-on-normal";
    case SelectionClass::positive_density_on_normal:
        return "positive-density-on-normal";
    case SelectionClass::mixed:
        return "mixed";
    }
    return "?";
}

std::vector<std::vector<StateId>> terminal_components(const SelectionRule& rule) {
    const std::size_t n = rule.state_count();
    std::vector<bool> reachable(n, false);
    std::deque<StateId> queue{rule.initial()};
    reachable[rule.initial()] = true;
    while (!queue.empty()) {
        const StateId s = queue.front();
        queue.pop_front();
        for (StateId t : rule.transitions()[s])
            if (!reachable[t]) {
                reachable[t] = true;
                queue.push_back(t);
            }
    }
    std::vector<std::vector<std::size_t>> succ(n);
    for (StateId s = 0; s < n; ++s)
        if (reachable[s])
            for (StateId t : rule.transitions()[s]) succ[s].push_back(t);
    const SccDecomposition scc = strongly_connected_components(succ);

    std::vector<bool> leaves_component(scc.count, false);
    for (StateId s = 0; s < n; ++s)
        for (std::size_t t : succ[s])
            if (scc.component[t] != scc.component[s]) leaves_component[scc.component[s]] = true;

    std::vector<std::vector<StateId>> by_component(scc.count);
    for (StateId s = 0; s < n; ++s)
        if (reachable[s]) by_component[scc.component[s]].push_back(s);
    std::vector<std::vector<StateId>> out;
    for (std::size_t c = 0; c < scc.count; ++c)
        if (!by_component[c].empty() && !leaves_component[c]) out.push_back(by_component[c]);
    std::sort(out.begin(), out.end());
    return out;
}

SelectionClass classify_selection(const SelectionRule& rule) {
    bool any_accepting = false, any_rejecting = false;
    for (const auto& comp : terminal_components(rule)) {
        const bool acc = std::any_of(comp.begin(), comp.end(), [&](StateId s) { return rule.accepting(s); });
        (acc ? any_accepting : any_rejecting) = true;
    }
    if (any_accepting && any_rejecting) return SelectionClass::mixed;
    return any_accepting ? SelectionClass::positive_density_on_normal : SelectionClass::finite_on_normal;
}

namespace {

[[noreturn]] void rule_fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

std::size_t rule_number(std::string_view tok, std::size_t line) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        rule_fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return v;
}

} // namespace

SelectionRule parse_selection_rule(std::string_view text) {
    std::optional<std::size_t> states;
    std::optional<StateId> initial;
    std::optional<std::vector<StateId>> accepting;
    std::vector<std::array<std::optional<StateId>, 2>> trans;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        if (tok[0] == "states") {
            if (states) rule_fail(line_no, "duplicate states line");
            if (tok.size() != 2) rule_fail(line_no, "usage: states N");
            states = rule_number(tok[1], line_no);
            if (*states == 0) rule_fail(line_no, "a selection rule needs at least one state");
            trans.assign(*states, {});
        } else if (tok[0] == "initial") {
            if (initial) rule_fail(line_no, "duplicate initial line");
            if (tok.size() != 2) rule_fail(line_no, "usage: initial Q");
            initial = static_cast<StateId>(rule_number(tok[1], line_no));
        } else if (tok[0] == "accepting") {
            if (accepting) rule_fail(line_no, "duplicate accepting line");
            accepting.emplace();
            for (std::size_t i = 1; i < tok.size(); ++i)
                accepting->push_back(static_cast<StateId>(rule_number(tok[i], line_no)));
        } else if (tok[0] == "trans") {
            if (!states) rule_fail(line_no, "trans before states");
            if (tok.size() != 4) rule_fail(line_no, "usage: trans FROM LETTER TO");
            const std::size_t from = rule_number(tok[1], line_no);
            const std::size_t to = rule_number(tok[3], line_no);
            if (tok[2] != "0" && tok[2] != "1") rule_fail(line_no, "letter must be 0 or 1");
            if (from >= *states || to >= *states) rule_fail(line_no, "state out of range");
            auto& slot = trans[from][tok[2] == "1" ? 1 : 0];
            if (slot) rule_fail(line_no, "duplicate transition");
            slot = static_cast<StateId>(to);
        } else {
            rule_fail(line_no, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!states) throw ParseError("missing states line", line_no);
    if (!initial) throw ParseError("missing initial line", line_no);
    std::vector<std::array<StateId, 2>> table(*states);
    for (std::size_t s = 0; s < *states; ++s)
        for (std::size_t l = 0; l < 2; ++l) {
            if (!trans[s][l])
                throw ParseError("missing transition from state " + std::to_string(s) + " on " + std::to_string(l),
                                 line_no);
            table[s][l] = *trans[s][l];
        }
    try {
        return SelectionRule(*states, *initial, accepting.value_or(std::vector<StateId>{}), std::move(table));
    } catch (const ContractError& e) {
        throw ParseError(e.what(), line_no);
    }
}

std::string serialize_selection_rule(const SelectionRule& rule) {
    std::ostringstream os;
    os << "states " << rule.state_count() << '\n' << "initial " << rule.initial() << '\n' << "accepting";
    for (StateId s = 0; s < rule.state_count(); ++s)
        if (rule.accepting(s)) os << ' ' << s;
    os << '\n';
    for (StateId s = 0; s < rule.state_count(); ++s)
        for (Letter l = 0; l < 2; ++l) os << "trans " << s << ' ' << int(l) << ' ' << rule.step(s, l) << '\n';
    return os.str();
}

} // namespace akc
