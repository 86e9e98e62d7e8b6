#include <doctest.h>

#include <algorithm>

#include "akc/automaton.hpp"
#include "akc/automaton_io.hpp"
#include "akc/errors.hpp"
#include "akc/mode_algebra.hpp"
#include "akc/wall.hpp"
#include "support/oracles.hpp"
#include "support/printers.hpp"

using namespace akc;
using akc::testing::Rng;

namespace {

LabeledAutomaton identity_automaton() { return identity_mode().automaton; }

// 0 -(0,0)-> 1 -(1,eps)-> 2 : reads ("01", "0").
LabeledAutomaton chain_01_0() {
    LabeledAutomaton a({Alphabet::binary(), Alphabet::binary()}, 3);
    a.add_edge(0, 1, {sym(0), sym(0)});
    a.add_edge(1, 2, {sym(1), eps});
    return a;
}

std::multiset<Edge> edge_multiset(const LabeledAutomaton& a) { return {a.edges().begin(), a.edges().end()}; }

} // namespace

TEST_CASE("membership on the identity automaton") {
    const auto id = identity_automaton();
    CHECK(read_relation_contains(id, {bits("0110"), bits("0110")}));
    CHECK_FALSE(read_relation_contains(id, {bits("0110"), bits("0111")}));
    CHECK(read_relation_contains(id, {Word{}, Word{}}));
    CHECK_FALSE(read_relation_contains(id, {bits("0"), Word{}}));
}

TEST_CASE("the empty path accepts the all-empty tuple") {
    LabeledAutomaton lonely({Alphabet::binary(), Alphabet::binary(), Alphabet::binary()}, 1);
    CHECK(read_relation_contains(lonely, {Word{}, Word{}, Word{}}));
    CHECK(enumerate_relation(lonely, {3, 3, 3}) == RelationSet{WordTuple(3)});

    LabeledAutomaton nothing({Alphabet::binary(), Alphabet::binary()}, 0);
    CHECK_FALSE(read_relation_contains(nothing, {Word{}, Word{}}));
}

TEST_CASE("membership errors") {
    const auto id = identity_automaton();
    CHECK_THROWS_AS(read_relation_contains(id, {bits("01")}), ContractError);
    CHECK_THROWS_AS(read_relation_contains(id, {Word{2}, Word{0}}), RejectedInput);
}

TEST_CASE("enumerate the identity automaton") {
    const RelationSet expected{{Word{}, Word{}}, {bits("0"), bits("0")}, {bits("1"), bits("1")}};
    CHECK(enumerate_relation(identity_automaton(), {1, 1}) == expected);
}

TEST_CASE("enumerate the unary compressor with c = 2") {
    // Direct oracle: every (1^k, 1^l) with (k-1)*2 <= l <= (k+1)*2.
    RelationSet expected;
    for (std::size_t k = 0; k <= 1; ++k)
        for (std::size_t l = 0; l <= 4; ++l)
            if (static_cast<long>(l) >= (static_cast<long>(k) - 1) * 2 && l <= (k + 1) * 2)
                expected.insert({Word(k, 1), Word(l, 1)});
    CHECK(enumerate_relation(unary_compressor(2).automaton, {1, 4}) == expected);
}

TEST_CASE("enumeration budget") {
    LabeledAutomaton free({Alphabet::binary(), Alphabet::binary()}, 1);
    free.add_edge(0, 0, {sym(0), eps});
    free.add_edge(0, 0, {sym(1), eps});
    CHECK_THROWS_AS(enumerate_relation(free, {20, 0}, 1000), ResourceError);
    CHECK(enumerate_relation(free, {3, 0}).size() == 15);
}

TEST_CASE("reverse") {
    const auto chain = chain_01_0();
    const auto r = reverse(chain);
    CHECK(read_relation_contains(r, {bits("10"), bits("0")}));
    CHECK_FALSE(read_relation_contains(r, {bits("01"), bits("0")}));
    CHECK(edge_multiset(reverse(r)) == edge_multiset(chain));
    CHECK(edge_multiset(reverse(identity_automaton())) == edge_multiset(identity_automaton()));
}

TEST_CASE("swap_tapes") {
    const auto id = identity_automaton();
    CHECK(edge_multiset(swap_tapes(id, 0, 1)) == edge_multiset(id));
    const auto chain = chain_01_0();
    CHECK(swap_tapes(swap_tapes(chain, 0, 1), 0, 1) == chain);
    CHECK_THROWS_AS(swap_tapes(chain, 0, 2), ContractError);

    const auto w3 = wall_mode(3, 0).automaton;
    const auto inv = swap_tapes(w3, 0, 1);
    CHECK(read_relation_contains(w3, {bits("0011"), bits("1001")}));
    CHECK(read_relation_contains(inv, {bits("1001"), bits("0011")}) ==
          read_relation_contains(w3, {bits("0011"), bits("1001")}));
    const RelationSet forward = enumerate_relation(w3, {4, 4});
    RelationSet swapped;
    for (const auto& t : enumerate_relation(inv, {4, 4})) swapped.insert({t[1], t[0]});
    CHECK(forward == swapped);

    CHECK(invert(identity_mode()).certificate.kind == ValuednessCertificate::Kind::unknown);
}

TEST_CASE("reverse and swap keep state and edge counts") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const auto a = akc::testing::random_automaton(rng, 3, 5, 8);
        for (const auto& b : {reverse(a), swap_tapes(a, 0, 2)}) {
            CHECK(b.state_count() == a.state_count());
            CHECK(b.edges().size() == a.edges().size());
        }
    }
}

TEST_CASE("membership agrees with enumeration on random automata") {
    Rng rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = akc::testing::random_automaton(rng, 2, 5, 7);
        const std::size_t cap = 4;
        const RelationSet rel = enumerate_relation(a, {cap, cap});
        for (const Word& p : akc::testing::all_words(cap))
            for (const Word& x : akc::testing::all_words(cap))
                REQUIRE(read_relation_contains(a, {p, x}) == (rel.count({p, x}) == 1));
    }
}

TEST_CASE("every segment of a run is a run") {
    Rng rng(2);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = akc::testing::random_automaton(rng, 2, 4, 8);
        const auto out = a.out_edges();
        std::uniform_int_distribution<StateId> start(0, static_cast<StateId>(a.state_count() - 1));
        StateId s = start(rng);
        std::vector<std::size_t> path;
        for (int step = 0; step < 8 && !out[s].empty(); ++step) {
            std::uniform_int_distribution<std::size_t> pick(0, out[s].size() - 1);
            const std::size_t e = out[s][pick(rng)];
            path.push_back(e);
            s = a.edges()[e].to;
        }
        for (std::size_t i = 0; i <= path.size(); ++i)
            for (std::size_t j = i; j <= path.size(); ++j) {
                WordTuple t(2);
                for (std::size_t k = i; k < j; ++k)
                    for (std::size_t tape = 0; tape < 2; ++tape)
                        if (a.edges()[path[k]].label[tape].is_letter())
                            t[tape].push_back(a.edges()[path[k]].label[tape].index());
                REQUIRE(read_relation_contains(a, t));
            }
    }
}

TEST_CASE("add_edge validates its arguments") {
    LabeledAutomaton a({Alphabet::binary(), Alphabet::binary()}, 2);
    CHECK_THROWS_AS(a.add_edge(0, 2, {eps, eps}), ContractError);
    CHECK_THROWS_AS(a.add_edge(0, 1, {eps}), ContractError);
    CHECK_THROWS_AS(a.add_edge(0, 1, {sym(2), eps}), ContractError);
    a.add_edge(0, 1, {eps, eps});
    CHECK(a.edges().size() == 1);
}

TEST_CASE("text format round trip") {
    const std::string text =
        "arity 2\n"
        "alphabet 0 0 1\n"
        "alphabet 1 a b c\n"
        "states 3\n"
        "certificate finite 4 brute-force 6\n"
        "edge 0 1 1 -\n"
        "edge 1 2 - c\n"
        "edge 2 0 0 a\n";
    const AutomatonFile f = parse_automaton(text);
    CHECK(f.automaton.arity() == 2);
    CHECK(f.automaton.alphabet(1).size() == 3);
    REQUIRE(f.certificate);
    CHECK(f.certificate->bound == 4);
    CHECK(serialize_automaton(f.automaton, f.certificate) == text);

    const std::string commented =
        "# a comment\narity 2   # trailing\nalphabet 1 a b c\nalphabet 0 0 1\n\nstates 3\n"
        "certificate finite 4 brute-force 6\nedge 0 1 1 -\nedge 1 2 - c\nedge 2 0 0 a\n";
    CHECK(serialize_automaton(parse_automaton(commented).automaton, f.certificate) == text);
}

TEST_CASE("serialized constructions parse back identically") {
    for (const DescriptionMode& m : {identity_mode(), unary_compressor(3), wall_mode(3, 0),
                                     layered_concat(identity_mode(), 2)}) {
        const std::string text = serialize_mode(m);
        const DescriptionMode back = parse_mode(text);
        CHECK(back.automaton == m.automaton);
        CHECK(back.certificate == m.certificate);
        CHECK(serialize_mode(back) == text);
    }
    const auto unbounded = ValuednessCertificate::unbounded({0, 2});
    CHECK(parse_automaton(serialize_automaton(identity_automaton(), unbounded)).certificate == unbounded);
}

TEST_CASE("text format errors carry line numbers") {
    auto line_of = [](const std::string& text) {
        try {
            parse_automaton(text);
        } catch (const ParseError& e) {
            return e.where();
        }
        return std::size_t{0};
    };
    CHECK(line_of("arity 2\nalphabet 0 0 1\nalphabet 1 0 1\nstates 1\nedge 0 1 0 0\n") == 5);
    CHECK(line_of("arity 2\nalphabet 0 0 1\nalphabet 1 0 1\nstates 1\nedge 0 0 2 0\n") == 5);
    CHECK(line_of("arity 2\nalphabet 0 0 1\nstates 1\nedge 0 0 0 0\n") == 4);
    CHECK(line_of("arity 2\nbogus\n") == 2);
    CHECK(line_of("arity x\n") == 1);
    CHECK_THROWS_AS(parse_mode("arity 3\nalphabet 0 0\nalphabet 1 0\nalphabet 2 0\nstates 1\n"), ParseError);
}
