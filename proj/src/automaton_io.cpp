#include "akc/automaton_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "akc/errors.hpp"

namespace akc {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("line " + std::to_string(line) + ": expected a non-negative integer, got '" +
                             std::string(tok) + "'",
                         line);
    return v;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

ValuednessCertificate parse_certificate(const std::vector<std::string_view>& tok, std::size_t line) {
    if (tok.size() < 2) fail(line, "certificate needs a kind");
    if (tok[1] == "unknown" && tok.size() == 2) return ValuednessCertificate::unknown();
    if (tok[1] == "unbounded") {
        std::vector<std::size_t> cycle;
        for (std::size_t i = 2; i < tok.size(); ++i) cycle.push_back(parse_count(tok[i], line));
        if (cycle.empty()) fail(line, "an unbounded certificate needs witness edges");
        return ValuednessCertificate::unbounded(std::move(cycle));
    }
    if (tok[1] == "finite" && tok.size() == 5) {
        const std::size_t bound = parse_count(tok[2], line);
        if (tok[3] == "asserted") return ValuednessCertificate::asserted(bound, std::string(tok[4]));
        if (tok[3] == "brute-force") return ValuednessCertificate::brute_force(bound, parse_count(tok[4], line));
    }
    fail(line, "malformed certificate line");
}

std::string certificate_line(const ValuednessCertificate& c) {
    using K = ValuednessCertificate::Kind;
    using M = ValuednessCertificate::Method;
    switch (c.kind) {
    case K::unknown:
        return "certificate unknown";
    case K::unbounded: {
        std::string s = "certificate unbounded";
        for (std::size_t e : c.witness_cycle) s += " " + std::to_string(e);
        return s;
    }
    case K::finite:
        break;
    }
    std::string s = "certificate finite " + std::to_string(c.bound);
    if (c.method == M::brute_force) return s + " brute-force " + std::to_string(c.exhausted_length);
    std::string name = c.construction.empty() ? "unspecified" : c.construction;
    for (char& ch : name)
        if (ch == ' ' || ch == '\t' || ch == '#') ch = '_';
    return s + " asserted " + name;
}

} // namespace

AutomatonFile parse_automaton(std::string_view text) {
    std::optional<std::size_t> arity;
    std::vector<std::optional<Alphabet>> alphabets;
    std::optional<std::size_t> states;
    std::optional<ValuednessCertificate> certificate;
    std::optional<LabeledAutomaton> aut;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        const auto tok = tokenize(line);
        if (tok.empty()) continue;

        if (tok[0] == "arity") {
            if (arity) fail(line_no, "duplicate arity");
            if (tok.size() != 2) fail(line_no, "usage: arity N");
            arity = parse_count(tok[1], line_no);
            if (*arity == 0) fail(line_no, "arity must be positive");
            alphabets.assign(*arity, std::nullopt);
        } else if (tok[0] == "alphabet") {
            if (!arity) fail(line_no, "alphabet before arity");
            if (tok.size() < 2) fail(line_no, "usage: alphabet TAPE SYMBOLS...");
            const std::size_t tape = parse_count(tok[1], line_no);
            if (tape >= *arity) fail(line_no, "tape index out of range");
            if (alphabets[tape]) fail(line_no, "duplicate alphabet for tape " + std::to_string(tape));
            std::vector<std::string> names(tok.begin() + 2, tok.end());
            try {
                alphabets[tape] = Alphabet(std::move(names));
            } catch (const ContractError& e) {
                fail(line_no, e.what());
            }
        } else if (tok[0] == "states") {
            if (states) fail(line_no, "duplicate states line");
            if (tok.size() != 2) fail(line_no, "usage: states N");
            states = parse_count(tok[1], line_no);
        } else if (tok[0] == "certificate") {
            if (certificate) fail(line_no, "duplicate certificate line");
            certificate = parse_certificate(tok, line_no);
        } else if (tok[0] == "edge") {
            if (!aut) {
                if (!arity || !states) fail(line_no, "edge before arity/states header");
                std::vector<Alphabet> full;
                for (std::size_t t = 0; t < *arity; ++t) {
                    if (!alphabets[t]) fail(line_no, "missing alphabet for tape " + std::to_string(t));
                    full.push_back(*alphabets[t]);
                }
                aut.emplace(std::move(full), *states);
            }
            if (tok.size() != 3 + *arity) fail(line_no, "edge needs FROM TO and one symbol per tape");
            const std::size_t from = parse_count(tok[1], line_no);
            const std::size_t to = parse_count(tok[2], line_no);
            if (from >= *states || to >= *states) fail(line_no, "edge endpoint out of range");
            EdgeLabel label;
            for (std::size_t t = 0; t < *arity; ++t) {
                const std::string_view s = tok[3 + t];
                if (s == "-") {
                    label.push_back(eps);
                } else if (auto l = aut->alphabet(t).find(s)) {
                    label.push_back(sym(*l));
                } else {
                    fail(line_no, "symbol '" + std::string(s) + "' not in alphabet of tape " + std::to_string(t));
                }
            }
            aut->add_edge(static_cast<StateId>(from), static_cast<StateId>(to), std::move(label));
        } else {
            fail(line_no, "unknown directive '" + std::string(tok[0]) + "'");
        }
    }

    if (!aut) {
        if (!arity) throw ParseError("missing arity line", line_no);
        if (!states) throw ParseError("missing states line", line_no);
        std::vector<Alphabet> full;
        for (std::size_t t = 0; t < *arity; ++t) {
            if (!alphabets[t]) throw ParseError("missing alphabet for tape " + std::to_string(t), line_no);
            full.push_back(*alphabets[t]);
        }
        aut.emplace(std::move(full), *states);
    }
    return AutomatonFile{std::move(*aut), std::move(certificate)};
}

std::string serialize_automaton(const LabeledAutomaton& aut, const std::optional<ValuednessCertificate>& certificate) {
    std::ostringstream os;
    os << "arity " << aut.arity() << '\n';
    for (std::size_t t = 0; t < aut.arity(); ++t) {
        os << "alphabet " << t;
        for (const auto& n : aut.alphabet(t).names()) os << ' ' << n;
        os << '\n';
    }
    os << "states " << aut.state_count() << '\n';
    if (certificate) os << certificate_line(*certificate) << '\n';
    for (const Edge& e : aut.edges()) {
        os << "edge " << e.from << ' ' << e.to;
        for (std::size_t t = 0; t < e.label.size(); ++t) {
            if (e.label[t].is_epsilon())
                os << " -";
            else
                os << ' ' << aut.alphabet(t).name(e.label[t].index());
        }
        os << '\n';
    }
    return os.str();
}

std::string serialize_mode(const DescriptionMode& m) { return serialize_automaton(m.automaton, m.certificate); }

std::string serialize_mode(const PairDescriptionMode& m) { return serialize_automaton(m.automaton, m.certificate); }

DescriptionMode parse_mode(std::string_view text) {
    AutomatonFile f = parse_automaton(text);
    if (f.automaton.arity() != 2) throw ParseError("description mode files need arity 2", 0);
    return make_mode(std::move(f.automaton), f.certificate.value_or(ValuednessCertificate::unknown()));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

} // namespace akc
