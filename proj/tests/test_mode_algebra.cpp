#include <doctest.h>

#include "akc/complexity.hpp"
#include "akc/errors.hpp"
#include "akc/mode_algebra.hpp"
#include "akc/wall.hpp"
#include "support/oracles.hpp"
#include "support/printers.hpp"

using namespace akc;
using akc::testing::Rng;

namespace {

std::uint64_t K(const DescriptionMode& m, const Word& x) {
    const ComplexityValue v = complexity(m, x);
    REQUIRE(v.has_value());
    return *v;
}

Word ones(std::size_t n) { return Word(n, 1); }

} // namespace

TEST_CASE("identity mode") {
    const auto id = identity_mode();
    CHECK(K(id, bits("0110")) == 4);
    CHECK(K(id, Word{}) == 0);
    CHECK(K(id, ones(7)) == 7);
    CHECK(id.automaton.state_count() == 1);
    CHECK(id.certificate.bound == 1);
    CHECK_THROWS_AS(identity_mode(Alphabet(std::vector<std::string>{})), ContractError);
}

TEST_CASE("union") {
    const auto id = identity_mode();
    const auto u = union_modes(id, unary_compressor(3));
    // Start on the state after the reading edge: emit 3, read 1, emit 3.
    CHECK(K(u, ones(6)) == 1);
    CHECK(akc::testing::brute_force_complexities(u, 6).at(ones(6)) == 1);
    CHECK(u.certificate.bound == 1 + 7);

    const auto uu = union_modes(id, id);
    for (const Word& x : akc::testing::all_words(5)) CHECK(K(uu, x) == x.size());

    LabeledAutomaton ternary({Alphabet::binary(), Alphabet({"a", "b", "c"})}, 1);
    CHECK_THROWS_AS(union_modes(id, make_mode(ternary)), ContractError);
}

TEST_CASE("union is the pointwise minimum") {
    Rng rng(3);
    const std::vector<DescriptionMode> modes{identity_mode(), unary_compressor(2), wall_mode(3, 0),
                                             append_symbol(identity_mode(), 1), layered_concat(identity_mode(), 2)};
    for (const auto& m1 : modes)
        for (const auto& m2 : modes) {
            const auto u = union_modes(m1, m2);
            for (int i = 0; i < 20; ++i) {
                const Word x = akc::testing::random_word_upto(rng, 10);
                const auto a = complexity(m1, x), b = complexity(m2, x);
                const ComplexityValue expected = complexity_leq(a, b) ? a : b;
                REQUIRE(complexity(u, x) == expected);
            }
        }
}

TEST_CASE("compose with identity keeps the relation") {
    Rng rng(4);
    const auto id = identity_mode();
    for (int i = 0; i < 20; ++i) {
        const auto m = akc::testing::random_checked_mode(rng, 3, 5);
        CHECK(enumerate_relation(compose(id, m).automaton, {4, 4}) == enumerate_relation(m.automaton, {4, 4}));
        CHECK(enumerate_relation(compose(m, id).automaton, {4, 4}) == enumerate_relation(m.automaton, {4, 4}));
    }
}

TEST_CASE("compose of two unary compressors matches the brute-force join") {
    const auto m1 = unary_compressor(2), m2 = unary_compressor(3);
    const auto c = compose(m1, m2);
    const std::size_t cap = 6;
    RelationSet composed;
    for (const auto& t : enumerate_relation(c.automaton, {cap, cap})) composed.insert(t);
    CHECK(composed == akc::testing::brute_force_join(m1, m2, cap));
    CHECK(read_relation_contains(c.automaton, {ones(1), ones(12)}));
    CHECK(c.certificate.bound == 5 * 7);

    LabeledAutomaton ternary({Alphabet({"a", "b", "c"}), Alphabet::binary()}, 1);
    CHECK_THROWS_AS(compose(m1, make_mode(ternary)), ContractError);
}

TEST_CASE("compose on random automata") {
    Rng rng(5);
    for (int i = 0; i < 25; ++i) {
        const auto m1 = akc::testing::random_checked_mode(rng, 4, 6);
        const auto m2 = akc::testing::random_checked_mode(rng, 4, 6);
        REQUIRE(enumerate_relation(compose(m1, m2).automaton, {4, 4}) == akc::testing::brute_force_join(m1, m2, 4));
    }
}

TEST_CASE("append_symbol") {
    const auto base = identity_mode();
    const auto m = append_symbol(base, 0);
    CHECK(K(m, bits("01100")) <= 4);
    CHECK(read_relation_contains(m.automaton, {bits("011"), bits("0110")}));
    const StateId sink = static_cast<StateId>(m.automaton.state_count() - 1);
    CHECK(m.automaton.out_edges()[sink].empty());
    CHECK(m.certificate.bound == 2);
    CHECK_THROWS_AS(append_symbol(base, 2), ContractError);
    CHECK(valuedness_profile(m, 6).max_fanout == 2);
}

TEST_CASE("unary compressor") {
    CHECK(K(unary_compressor(3), ones(9)) == 2);
    CHECK(K(unary_compressor(3), Word{}) == 0);
    const auto rel = enumerate_relation(unary_compressor(1).automaton, {5, 5});
    for (std::size_t k = 0; k <= 5; ++k) CHECK(rel.count({ones(k), ones(k)}) == 1);
    CHECK_THROWS_AS(unary_compressor(0), ContractError);
    CHECK(unary_compressor(4).certificate.bound == 9);
    CHECK(complexity(unary_compressor(2), bits("0")) == std::nullopt);
}

TEST_CASE("unary compressor envelopes") {
    for (std::size_t c : {1, 2, 3, 5}) {
        const auto m = unary_compressor(c);
        for (std::size_t n = 0; n <= 40; ++n) {
            const std::uint64_t k = K(m, ones(n));
            CHECK((k == 0 || (k - 1) * c <= n));
            CHECK(n <= (k + 1) * c);
        }
    }
}

TEST_CASE("layered concatenation") {
    const auto m4 = layered_concat(identity_mode(), 4);
    CHECK(K(m4, bits("11100")) <= 6);
    CHECK(K(m4, Word{}) == 0);
    CHECK(m4.certificate.bound == 5 * 1 * 1 + 1);

    Rng rng(6);
    const auto m1 = layered_concat(identity_mode(), 1);
    for (int i = 0; i < 200; ++i) {
        const Word x = akc::testing::random_word_upto(rng, 5), y = akc::testing::random_word_upto(rng, 5);
        Word xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        CHECK(K(m1, xy) <= 2 * x.size() + 1 + y.size());
    }
    LabeledAutomaton ternary({Alphabet({"a", "b", "c"}), Alphabet::binary()}, 1);
    CHECK_THROWS_AS(layered_concat(make_mode(ternary), 2), ContractError);
    CHECK_THROWS_AS(layered_concat(identity_mode(), 0), ContractError);
}

TEST_CASE("eps_cycle_check") {
    CHECK_FALSE(eps_cycle_check(identity_mode()));
    CHECK_FALSE(eps_cycle_check(unary_compressor(3)));

    LabeledAutomaton loop({Alphabet::binary(), Alphabet::binary()}, 1);
    loop.add_edge(0, 0, {eps, sym(0)});
    const auto w = eps_cycle_check(make_mode(loop));
    REQUIRE(w);
    CHECK(*w == std::vector<std::size_t>{0});

    // A silent cycle through two states, one of which emits.
    LabeledAutomaton two({Alphabet::binary(), Alphabet::binary()}, 3);
    two.add_edge(0, 1, {sym(1), sym(1)});
    two.add_edge(1, 2, {eps, eps});
    two.add_edge(2, 1, {eps, sym(0)});
    const auto w2 = eps_cycle_check(make_mode(two));
    REQUIRE(w2);
    CHECK(std::set<std::size_t>(w2->begin(), w2->end()) == std::set<std::size_t>{1, 2});

    const auto checked = with_structural_check(make_mode(loop));
    CHECK(checked.certificate.is_unbounded());
    CHECK_THROWS_AS(complexity(checked, bits("0")), ContractError);
    CHECK_FALSE(valuedness_profile(make_mode(loop), 3).max_fanout);
}

TEST_CASE("valuedness profile") {
    CHECK(valuedness_profile(identity_mode(), 6).max_fanout == 1);
    const auto p2 = valuedness_profile(unary_compressor(2), 3);
    REQUIRE(p2.max_fanout);
    CHECK(*p2.max_fanout <= 5);
    const auto w3 = valuedness_profile(wall_mode(3, 0), 6);
    REQUIRE(w3.max_fanout);
    CHECK(*w3.max_fanout <= 4);
    CHECK(w3.certificate().method == ValuednessCertificate::Method::brute_force);
    CHECK(w3.certificate().exhausted_length == 6);
}

TEST_CASE("eps_cycle_check never passes an automaton with growing fan-out") {
    // Once the check passes, no object longer than (L+1)*states shows up even
    // when the enumeration is allowed to look further.
    Rng rng(7);
    for (int i = 0; i < 60; ++i) {
        const auto m = make_mode(akc::testing::random_automaton(rng, 2, 4, 7));
        if (eps_cycle_check(m)) continue;
        const std::size_t L = 3;
        const std::size_t cap = (L + 1) * m.automaton.state_count();
        const auto wide = enumerate_relation(m.automaton, {L, cap + 4});
        for (const auto& t : wide) REQUIRE(t[1].size() <= cap);
        REQUIRE(valuedness_profile(m, L).max_fanout);
    }
}

TEST_CASE("reverse keeps complexity of reversed words") {
    Rng rng(8);
    for (int i = 0; i < 30; ++i) {
        const auto m = akc::testing::random_checked_mode(rng, 4, 6);
        const auto r = reverse(m);
        CHECK(r.certificate == m.certificate);
        for (int j = 0; j < 10; ++j) {
            const Word x = akc::testing::random_word_upto(rng, 8);
            CHECK(complexity(r, reversed(x)) == complexity(m, x));
        }
    }
}
