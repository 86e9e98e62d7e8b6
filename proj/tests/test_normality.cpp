#include <doctest.h>

#include <cmath>

#include "akc/complexity.hpp"
#include "akc/errors.hpp"
#include "akc/normality.hpp"
#include "akc/seqgen.hpp"
#include "support/oracles.hpp"
#include "support/printers.hpp"

using namespace akc;
using akc::testing::Rng;

namespace {

Word periodic_01(std::size_t n) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<Letter>(i % 2);
    return w;
}

BlockHistogram histogram_of(std::size_t k, std::vector<std::uint64_t> counts) {
    BlockHistogram h;
    h.k = k;
    h.counts = std::move(counts);
    for (auto c : h.counts) h.n += c * k;
    return h;
}

} // namespace

TEST_CASE("aligned and sliding histograms") {
    const auto h = block_histogram(bits("00011011"), 8, 2, BlockMode::aligned);
    CHECK(h.counts == std::vector<std::uint64_t>{1, 1, 1, 1});

    const Word p = periodic_01(100);
    CHECK(block_histogram(p, 100, 2, BlockMode::aligned).counts == std::vector<std::uint64_t>{0, 50, 0, 0});
    CHECK(block_histogram(p, 100, 2, BlockMode::sliding).counts == std::vector<std::uint64_t>{0, 50, 49, 0});

    CHECK(block_histogram(p, 99, 4, BlockMode::aligned).total() == 24);
    CHECK(block_histogram(p, 99, 4, BlockMode::sliding).total() == 96);

    CHECK_THROWS_AS(block_histogram(p, 3, 4, BlockMode::aligned), ContractError);
    CHECK_THROWS_AS(block_histogram(p, 101, 2, BlockMode::aligned), ContractError);
    CHECK_THROWS_AS(block_histogram(Word(100, 0), 100, 25, BlockMode::sliding), ResourceError);
}

TEST_CASE("offset classes add up to the sliding count") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const Word w = akc::testing::random_word(rng, 1 + trial % 200);
        for (std::size_t k = 1; k <= std::min<std::size_t>(6, w.size()); ++k) {
            std::vector<std::uint64_t> sum(std::size_t{1} << k, 0);
            for (std::size_t j = 0; j < k; ++j) {
                const auto h = aligned_histogram_at_offset(w, w.size(), k, j);
                for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += h.counts[r];
            }
            REQUIRE(sum == block_histogram(w, w.size(), k, BlockMode::sliding).counts);
            REQUIRE(aligned_histogram_at_offset(w, w.size(), k, 0).counts ==
                    block_histogram(w, w.size(), k, BlockMode::aligned).counts);
        }
    }
}

TEST_CASE("discrepancy, entropy and ps ratio") {
    const auto uniform = histogram_of(2, {5, 5, 5, 5});
    const auto single = histogram_of(2, {0, 7, 0, 0});
    CHECK(discrepancy(uniform) == doctest::Approx(0.0));
    CHECK(discrepancy(single) == doctest::Approx(0.75));
    CHECK(empirical_entropy(uniform) == doctest::Approx(2.0));
    CHECK(empirical_entropy(single) == doctest::Approx(0.0));
    CHECK(ps_ratio(uniform) == doctest::Approx(1.0));
    CHECK(ps_ratio(single) == doctest::Approx(4.0));
    CHECK(block_name(1, 2) == "01");
}

TEST_CASE("entropy never exceeds k") {
    Rng rng(32);
    for (int i = 0; i < 100; ++i) {
        const Word w = akc::testing::random_word(rng, 64);
        for (std::size_t k = 1; k <= 4; ++k) {
            const auto h = block_histogram(w, 64, k, BlockMode::sliding);
            CHECK(empirical_entropy(h) <= static_cast<double>(k) + 1e-12);
        }
    }
}

TEST_CASE("entropy of a Bernoulli(0.9) stream") {
    const Word w = bernoulli_bits(0.9, 1, 100000);
    const double h = -(0.9 * std::log2(0.9) + 0.1 * std::log2(0.1));
    CHECK(std::abs(empirical_entropy(block_histogram(w, w.size(), 1, BlockMode::aligned)) - h) <= 0.02);
}

TEST_CASE("huffman lengths") {
    CHECK(huffman_lengths(std::vector<std::uint64_t>{1, 1, 1, 1}) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(huffman_lengths(std::vector<std::uint64_t>{8, 4, 2, 1, 1}) == std::vector<std::size_t>{1, 2, 3, 4, 4});
    CHECK_THROWS_AS(huffman_lengths(std::vector<std::uint64_t>{5}), ContractError);
}

TEST_CASE("huffman never loses to the Shannon code") {
    Rng rng(33);
    std::uniform_int_distribution<std::uint64_t> count(1, 1000);
    for (int i = 0; i < 200; ++i) {
        std::vector<std::uint64_t> w(2 + i % 30);
        for (auto& x : w) x = count(rng);
        std::uint64_t total = 0;
        for (auto x : w) total += x;
        const auto lengths = huffman_lengths(w);
        double kraft = 0, huffman = 0, shannon = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
            const double p = static_cast<double>(w[j]) / static_cast<double>(total);
            kraft += std::ldexp(1.0, -static_cast<int>(lengths[j]));
            huffman += p * static_cast<double>(lengths[j]);
            shannon += p * std::ceil(-std::log2(p));
        }
        CHECK(kraft <= 1.0 + 1e-12);
        CHECK(huffman <= shannon + 1e-9);
    }
}

TEST_CASE("block coder on a uniform histogram") {
    const auto coder = build_block_coder(histogram_of(2, {3, 3, 3, 3}));
    for (const Word& cw : coder.codewords) CHECK(cw.size() == 2);
    // A free start may begin inside a block chain, which saves at most the
    // first codeword.
    const auto oracle = akc::testing::brute_force_complexities(coder.mode, 6);
    Rng rng(34);
    for (int i = 0; i < 30; ++i) {
        const Word x = akc::testing::random_word(rng, 2 * (1 + i % 6));
        const auto k = complexity(coder.mode, x);
        REQUIRE(k);
        CHECK(*k <= x.size());
        CHECK(*k + 2 >= x.size());
        if (x.size() <= 6) CHECK(*k == oracle.at(x));
    }
    CHECK_FALSE(eps_cycle_check(coder.mode));
    const auto profile = valuedness_profile(coder.mode, 4);
    REQUIRE(profile.max_fanout);
    CHECK(*profile.max_fanout <= coder.mode.certificate.bound);
}

TEST_CASE("block coder on a degenerate histogram") {
    const auto coder = build_block_coder(histogram_of(2, {100, 0, 0, 0}));
    const std::size_t len = coder.codewords[0].size();
    CHECK(len == 1);
    for (std::size_t m = 1; m <= 10; ++m) {
        Word x(2 * m, 0);
        const auto k = complexity(coder.mode, x);
        REQUIRE(k);
        CHECK(*k <= m * len);
    }
    // Prefix-free codewords.
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b)
            if (a != b) {
                const Word& x = coder.codewords[a];
                const Word& y = coder.codewords[b];
                CHECK_FALSE((x.size() <= y.size() && std::equal(x.begin(), x.end(), y.begin())));
            }
    CHECK_THROWS_AS(build_block_coder(block_histogram(periodic_01(8), 8, 2, BlockMode::sliding)), ContractError);
}

TEST_CASE("block coder average length within one bit of the entropy") {
    const Word w = bernoulli_bits(0.9, 3, 100000);
    const auto h = block_histogram(w, w.size(), 8, BlockMode::aligned);
    const auto coder = build_block_coder(h);
    const double avg = coder.average_length(h);
    const double ent = empirical_entropy(h);
    CHECK(avg >= ent - 1e-9);
    CHECK(avg <= ent + 1.0);
}

TEST_CASE("block coders pass the valuedness checks") {
    Rng rng(35);
    for (std::size_t k = 1; k <= 3; ++k) {
        const Word w = akc::testing::random_word(rng, 60);
        const auto coder = build_block_coder(block_histogram(w, 60, k, BlockMode::aligned));
        CHECK_FALSE(eps_cycle_check(coder.mode));
        const auto profile = valuedness_profile(coder.mode, 2 * k);
        REQUIRE(profile.max_fanout);
        CHECK(*profile.max_fanout <= coder.mode.certificate.bound);
    }
}

TEST_CASE("normality report") {
    const Word p = periodic_01(10000);
    const auto rows = normality_report(p, p.size(), 2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[1].aligned_discrepancy == doctest::Approx(0.75));
    // One bit per 2-block, so the ratio sits at 1/2.
    CHECK(rows[1].coder_ratio == doctest::Approx(0.5).epsilon(0.001));

    const std::string csv = report_csv(rows);
    CHECK(csv.rfind("k,aligned_disc,sliding_disc,entropy,ps_ratio,coder_ratio\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK_THROWS_AS(normality_report(p, p.size(), 17), ContractError);
}

TEST_CASE("Bernoulli(0.5) discrepancies") {
    const Word w = bernoulli_bits(0.5, 42, 1000000);
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(discrepancy(block_histogram(w, w.size(), k, BlockMode::aligned)) <= 0.01);
        CHECK(discrepancy(block_histogram(w, w.size(), k, BlockMode::sliding)) <= 0.01);
    }
}
