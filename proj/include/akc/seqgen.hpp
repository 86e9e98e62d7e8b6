#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "akc/word.hpp"

namespace akc {

/// 64-bit SplitMix generator: state += 0x9E3779B97F4A7C15, then the
/// xor-shift-multiply finalizer with 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB. Platform independent.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();

private:
    std::uint64_t state_;
};

/// Streaming cursor over one of the binary digit sequences.
class SequenceSource {
public:
    struct Champernowne {};
    struct Rational {
        std::uint64_t p = 0;
        std::uint64_t q = 1;
    };
    struct Bernoulli {
        double p = 0.5;
        std::uint64_t seed = 0;
    };
    struct File {
        std::string path;
    };
    using Kind = std::variant<Champernowne, Rational, Bernoulli, File>;

    explicit SequenceSource(Kind kind);

    static SequenceSource champernowne() { return SequenceSource(Champernowne{}); }
    static SequenceSource rational(std::uint64_t p, std::uint64_t q) { return SequenceSource(Rational{p, q}); }
    static SequenceSource bernoulli(double p, std::uint64_t seed) { return SequenceSource(Bernoulli{p, seed}); }
    static SequenceSource file(std::string path) { return SequenceSource(File{std::move(path)}); }

    const Kind& kind() const { return kind_; }
    std::size_t position() const { return position_; }

    /// Next letter; nullopt only at the end of a file source.
    std::optional<Letter> next();
    /// Up to n letters (fewer only when a file ends).
    Word take(std::size_t n);

private:
    Kind kind_;
    std::size_t position_ = 0;

    // champernowne: bits of the current integer, most significant first
    std::uint64_t current_ = 0;
    int bit_ = -1;
    // rational: running remainder
    std::uint64_t remainder_ = 0;
    // bernoulli
    SplitMix64 rng_{0};
    std::uint64_t threshold_ = 0;
    bool always_one_ = false;
    // file
    Word file_bits_;
};

/// 0 1 10 11 100 ... : a leading 0 followed by the positive integers in binary.
Word champernowne_bits(std::size_t n);

/// First n digits of frac(p/q) by integer long division.
Word rational_bits(std::uint64_t p, std::uint64_t q, std::size_t n);

/// bit_i = 1 iff the i-th SplitMix64 draw is below p * 2^64.
Word bernoulli_bits(double p, std::uint64_t seed, std::size_t n);

/// ASCII '0'/'1' with whitespace ignored; anything else is a ParseError
/// carrying the byte offset.
Word parse_sequence(std::string_view text);
Word read_sequence_file(const std::string& path);
void write_sequence_file(const std::string& path, const Word& bits);

} // namespace akc
