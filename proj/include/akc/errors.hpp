#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace akc {

/// Violated precondition on the caller's side (bad index, mismatched arity,
/// a mode with an unbounded certificate passed to a complexity query, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Input data that does not fit the declared alphabets.
class RejectedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size or work budget was exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text in one of the file formats. `where` is a 1-based line
/// number for line-oriented formats and a 0-based byte offset for
/// sequence files.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t where)
        : std::runtime_error(what), where_(where) {}

    std::size_t where() const noexcept { return where_; }

private:
    std::size_t where_;
};

} // namespace akc
