#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "akc/automaton.hpp"

namespace akc {

/// Line-oriented automaton text format:
///
///     arity 2
///     alphabet 0 0 1          # tape 0, its symbols
///     alphabet 1 0 1
///     states 3
///     certificate finite 5 asserted unary-compressor   # optional
///     edge 0 1 1 -            # from to, one symbol or '-' per tape
///
/// `#` starts a comment. serialize_automaton emits the header lines in the
/// order above and the edges in stored order.
struct AutomatonFile {
    LabeledAutomaton automaton;
    std::optional<ValuednessCertificate> certificate;
};

AutomatonFile parse_automaton(std::string_view text);
std::string serialize_automaton(const LabeledAutomaton& aut,
                                const std::optional<ValuednessCertificate>& certificate = std::nullopt);

std::string serialize_mode(const DescriptionMode& m);
std::string serialize_mode(const PairDescriptionMode& m);

/// Arity-2 file to a mode; a missing certificate line means "unknown".
DescriptionMode parse_mode(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

} // namespace akc
