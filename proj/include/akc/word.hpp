#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace akc {

/// Index of a letter inside a tape alphabet.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline constexpr std::size_t kMaxAlphabetSize = 255;

/// A letter index or the epsilon marker ("no letter on this tape").
class Symbol {
public:
    constexpr Symbol() = default;

    static constexpr Symbol epsilon() { return Symbol(); }
    static constexpr Symbol letter(Letter l) { return Symbol(static_cast<std::int16_t>(l)); }

    constexpr bool is_epsilon() const { return value_ < 0; }
    constexpr bool is_letter() const { return value_ >= 0; }
    /// Only meaningful when is_letter().
    constexpr Letter index() const { return static_cast<Letter>(value_); }

    constexpr auto operator<=>(const Symbol&) const = default;

private:
    constexpr explicit Symbol(std::int16_t v) : value_(v) {}

    std::int16_t value_ = -1;
};

inline constexpr Symbol eps = Symbol::epsilon();
constexpr Symbol sym(Letter l) { return Symbol::letter(l); }

/// Finite alphabet with printable symbol names. Names are single tokens
/// without whitespace; "-" and "#" are reserved by the text formats.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    static Alphabet binary();
    static Alphabet unary();

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    const std::string& name(Letter l) const { return names_.at(l); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Letter> find(std::string_view name) const;
    bool contains(Symbol s) const { return s.is_epsilon() || s.index() < names_.size(); }

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> names_;
};

/// "0110" -> {0,1,1,0}. Throws RejectedInput on any character other than 0/1.
Word bits(std::string_view text);

/// Inverse of bits(); letters above 1 are printed as '?'.
std::string to_string(const Word& w);

/// Spell a word with an alphabet's symbol names (concatenated).
std::string spell(const Word& w, const Alphabet& alphabet);

Word reversed(Word w);

} // namespace akc
