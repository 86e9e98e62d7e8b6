#include "akc/seqgen.hpp"

#include <bit>
#include <cmath>

#include "akc/automaton_io.hpp"
#include "akc/errors.hpp"

namespace akc {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

} // namespace

SequenceSource::SequenceSource(Kind kind) : kind_(std::move(kind)) {
    std::visit(overloaded{
                   [](const Champernowne&) {},
                   [this](const Rational& r) {
                       if (r.q == 0) throw ContractError("rational source needs q > 0");
                       if (r.p >= r.q) throw ContractError("rational source needs 0 <= p < q");
                       if (r.q > (std::uint64_t{1} << 62)) throw ContractError("rational source needs q < 2^62");
                       remainder_ = r.p;
                   },
                   [this](const Bernoulli& b) {
                       if (!(b.p >= 0.0 && b.p <= 1.0)) throw ContractError("bernoulli source needs p in [0,1]");
                       rng_ = SplitMix64(b.seed);
                       always_one_ = b.p >= 1.0;
                       // p < 1, so p * 2^64 < 2^64 and the conversion is exact for doubles.
                       threshold_ = always_one_ ? 0 : static_cast<std::uint64_t>(std::ldexp(b.p, 64));
                   },
                   [this](const File& f) { file_bits_ = read_sequence_file(f.path); },
               },
               kind_);
}

std::optional<Letter> SequenceSource::next() {
    std::optional<Letter> out = std::visit(
        overloaded{
            [this](const Champernowne&) -> std::optional<Letter> {
                if (position_ == 0) return Letter{0};
                if (bit_ < 0) {
                    ++current_;
                    bit_ = static_cast<int>(std::bit_width(current_)) - 1;
                }
                const auto b = static_cast<Letter>((current_ >> bit_) & 1u);
                --bit_;
                return b;
            },
            [this](const Rational& r) -> std::optional<Letter> {
                remainder_ *= 2;
                const bool one = remainder_ >= r.q;
                if (one) remainder_ -= r.q;
                return static_cast<Letter>(one);
            },
            [this](const Bernoulli&) -> std::optional<Letter> {
                const std::uint64_t draw = rng_.next();
                return static_cast<Letter>(always_one_ || draw < threshold_);
            },
            [this](const File&) -> std::optional<Letter> {
                if (position_ >= file_bits_.size()) return std::nullopt;
                return file_bits_[position_];
            },
        },
        kind_);
    if (out) ++position_;
    return out;
}

Word SequenceSource::take(std::size_t n) {
    Word w;
    w.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto l = next();
        if (!l) break;
        w.push_back(*l);
    }
    return w;
}

Word champernowne_bits(std::size_t n) { return SequenceSource::champernowne().take(n); }

Word rational_bits(std::uint64_t p, std::uint64_t q, std::size_t n) {
    if (q == 0) throw ContractError("rational_bits needs q > 0");
    return SequenceSource::rational(p, q).take(n);
}

Word bernoulli_bits(double p, std::uint64_t seed, std::size_t n) {
    return SequenceSource::bernoulli(p, seed).take(n);
}

Word parse_sequence(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '0' || c == '1')
            w.push_back(static_cast<Letter>(c - '0'));
        else if (c != ' ' && c != '\t' && c != '\n' && c != '\r' && c != '\f' && c != '\v')
            throw ParseError("unexpected byte 0x" + [c] {
                const char* hex = "0123456789abcdef";
                const auto u = static_cast<unsigned char>(c);
                return std::string{hex[u >> 4], hex[u & 15]};
            }() + " at offset " + std::to_string(i) + " in sequence text", i);
    }
    return w;
}

Word read_sequence_file(const std::string& path) { return parse_sequence(read_text_file(path)); }

void write_sequence_file(const std::string& path, const Word& bits) { write_text_file(path, to_string(bits) + "\n"); }

} // namespace akc
