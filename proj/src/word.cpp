#include "akc/word.hpp"

#include <algorithm>

#include "akc/errors.hpp"

namespace akc {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxAlphabetSize)
        throw ContractError("alphabet larger than " + std::to_string(kMaxAlphabetSize) + " symbols");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        const std::string& n = names_[i];
        if (n.empty() || n == "-" || n.find_first_of(" \t\r\n#") != std::string::npos)
            throw ContractError("invalid alphabet symbol name '" + n + "'");
        for (std::size_t j = 0; j < i; ++j)
            if (names_[j] == n) throw ContractError("duplicate alphabet symbol '" + n + "'");
    }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

Alphabet Alphabet::unary() { return Alphabet({"1"}); }

std::optional<Letter> Alphabet::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<Letter>(i);
    return std::nullopt;
}

Word bits(std::string_view text) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1')
            throw RejectedInput(std::string("not a binary digit: '") + c + "'");
        w.push_back(static_cast<Letter>(c - '0'));
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Letter l : w) s.push_back(l <= 1 ? static_cast<char>('0' + l) : '?');
    return s;
}

std::string spell(const Word& w, const Alphabet& alphabet) {
    std::string s;
    for (Letter l : w) s += alphabet.name(l);
    return s;
}

Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

} // namespace akc
