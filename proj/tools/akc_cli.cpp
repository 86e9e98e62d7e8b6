#include "akc_cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "akc/automaton_io.hpp"
#include "akc/complexity.hpp"
#include "akc/errors.hpp"
#include "akc/mode_algebra.hpp"
#include "akc/normality.hpp"
#include "akc/selection.hpp"
#include "akc/seqgen.hpp"
#include "akc/wall.hpp"

namespace akc::cli {

namespace {

/// Thrown for argument problems that CLI11 itself cannot see.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown by check-mode when the mode fails its checks (exit code 1).
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw UsageError(std::string(what) + ": expected a non-negative integer, got '" + s + "'");
    return v;
}

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
    if (path)
        write_text_file(*path, text);
    else
        out << text;
}

Word load_prefix(const std::string& path, std::optional<std::size_t> n) {
    Word w = read_sequence_file(path);
    if (!n) return w;
    if (*n > w.size())
        throw UsageError("--n " + std::to_string(*n) + " exceeds the " + std::to_string(w.size()) + " digits in " +
                         path);
    w.resize(*n);
    return w;
}

AutomatonFile load_automaton(const std::string& path) { return parse_automaton(read_text_file(path)); }

DescriptionMode load_mode(const std::string& path) {
    AutomatonFile f = load_automaton(path);
    if (f.automaton.arity() != 2)
        throw UsageError(path + ": expected a description mode (arity 2), found arity " +
                         std::to_string(f.automaton.arity()));
    return make_mode(std::move(f.automaton), f.certificate.value_or(ValuednessCertificate::unknown()));
}

PairDescriptionMode load_pair_mode(const std::string& path) {
    AutomatonFile f = load_automaton(path);
    if (f.automaton.arity() != 3)
        throw UsageError(path + ": expected a pair description mode (arity 3), found arity " +
                         std::to_string(f.automaton.arity()));
    return make_pair_mode(std::move(f.automaton), f.certificate.value_or(ValuednessCertificate::unknown()));
}

/// Symbols are single characters when every name is one character long,
/// otherwise whitespace-separated tokens.
Word parse_word(const std::string& text, const Alphabet& alphabet) {
    const bool single = std::all_of(alphabet.names().begin(), alphabet.names().end(),
                                    [](const std::string& n) { return n.size() == 1; });
    std::vector<std::string> tokens;
    if (single) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) tokens.emplace_back(1, ch);
    } else {
        std::istringstream is(text);
        for (std::string t; is >> t;) tokens.push_back(t);
    }
    Word w;
    for (const auto& t : tokens) {
        const auto l = alphabet.find(t);
        if (!l) throw RejectedInput("symbol '" + t + "' is not in the object alphabet");
        w.push_back(*l);
    }
    return w;
}

std::string show(const ComplexityValue& v) { return v ? std::to_string(*v) : "unreachable"; }

// ---- gen -------------------------------------------------------------------

struct GenArgs {
    std::string kind;
    std::string param;
    std::uint64_t seed = 0;
    std::size_t bits = 0;
    std::optional<std::string> out;
};

void cmd_gen(const GenArgs& a, std::ostream& out) {
    Word w;
    if (a.kind == "champernowne") {
        if (!a.param.empty()) throw UsageError("gen champernowne takes no parameter");
        w = champernowne_bits(a.bits);
    } else if (a.kind == "rational") {
        const auto slash = a.param.find('/');
        if (slash == std::string::npos) throw UsageError("gen rational expects P/Q, got '" + a.param + "'");
        const std::uint64_t p = parse_u64(a.param.substr(0, slash), "numerator");
        const std::uint64_t q = parse_u64(a.param.substr(slash + 1), "denominator");
        if (q == 0) throw UsageError("denominator must be positive");
        w = rational_bits(p % q, q, a.bits);
    } else {
        if (a.param.empty()) throw UsageError("gen bernoulli expects a probability");
        double p = 0;
        try {
            std::size_t used = 0;
            p = std::stod(a.param, &used);
            if (used != a.param.size()) throw std::invalid_argument(a.param);
        } catch (const std::exception&) {
            throw UsageError("bad probability '" + a.param + "'");
        }
        if (!(p >= 0.0 && p <= 1.0)) throw UsageError("probability must lie in [0, 1]");
        w = bernoulli_bits(p, a.seed, a.bits);
    }
    if (a.out)
        write_sequence_file(*a.out, w);
    else
        out << to_string(w) << '\n';
}

// ---- stats / report --------------------------------------------------------

struct StatsArgs {
    std::string input;
    std::size_t k = 1;
    std::string mode = "aligned";
    std::optional<std::size_t> n;
    bool blocks = false;
};

void cmd_stats(const StatsArgs& a, std::ostream& out) {
    const Word w = load_prefix(a.input, a.n);
    const BlockMode mode = a.mode == "sliding" ? BlockMode::sliding : BlockMode::aligned;
    const BlockHistogram h = block_histogram(w, w.size(), a.k, mode);
    if (a.blocks) {
        out << "block,count,frequency\n";
        for (std::size_t b = 0; b < h.counts.size(); ++b)
            out << block_name(b, a.k) << ',' << h.counts[b] << ',' << fixed6(h.frequency(b)) << '\n';
        return;
    }
    out << "k,mode,n,discrepancy,entropy,ps_ratio\n"
        << a.k << ',' << a.mode << ',' << w.size() << ',' << fixed6(discrepancy(h)) << ','
        << fixed6(empirical_entropy(h)) << ',' << fixed6(ps_ratio(h)) << '\n';
}

struct ReportArgs {
    std::string input;
    std::optional<std::size_t> n;
    std::size_t kmax = 8;
};

void cmd_report(const ReportArgs& a, std::ostream& out) {
    const Word w = load_prefix(a.input, a.n);
    out << report_csv(normality_report(w, w.size(), a.kmax));
}

// ---- mode ------------------------------------------------------------------

struct ModeArgs {
    std::optional<std::string> out;
    std::uint64_t c = 0;
    std::size_t verify = 10;
    std::vector<std::string> files;
    std::size_t layers = 1;
    std::string symbol;
    std::size_t k = 8;
    std::string train;
    std::optional<std::size_t> n;
    std::string rule;
};

std::string cmd_mode(const std::string& which, const ModeArgs& a) {
    if (which == "identity") return serialize_mode(identity_mode());
    if (which == "unary") return serialize_mode(unary_compressor(a.c));
    if (which == "wall") return serialize_mode(wall_mode(a.c, a.verify));
    if (which == "union") return serialize_mode(union_modes(load_mode(a.files.at(0)), load_mode(a.files.at(1))));
    if (which == "compose") return serialize_mode(compose(load_mode(a.files.at(0)), load_mode(a.files.at(1))));
    if (which == "reverse") return serialize_mode(reverse(load_mode(a.files.at(0))));
    if (which == "invert") return serialize_mode(invert(load_mode(a.files.at(0))));
    if (which == "layered") return serialize_mode(layered_concat(load_mode(a.files.at(0)), a.layers));
    if (which == "append") {
        const DescriptionMode m = load_mode(a.files.at(0));
        const auto s = m.automaton.alphabet(DescriptionMode::object_tape).find(a.symbol);
        if (!s) throw UsageError("symbol '" + a.symbol + "' is not in the object alphabet");
        return serialize_mode(append_symbol(m, *s));
    }
    if (which == "build-coder") {
        const Word w = load_prefix(a.train, a.n);
        return serialize_mode(build_block_coder(block_histogram(w, w.size(), a.k, BlockMode::aligned)).mode);
    }
    if (which == "splitter") return serialize_mode(splitter_mode(parse_selection_rule(read_text_file(a.rule))));
    if (which == "joint") return serialize_mode(joint(load_mode(a.files.at(0)), load_pair_mode(a.files.at(1))));
    throw UsageError("unknown mode construction '" + which + "'");
}

// ---- complexity ------------------------------------------------------------

struct ComplexityArgs {
    std::string mode;
    std::optional<std::string> word;
    std::optional<std::string> input;
    std::optional<std::size_t> n;
    std::optional<std::size_t> curve;
};

void cmd_complexity(const ComplexityArgs& a, std::ostream& out) {
    if (a.word.has_value() == a.input.has_value()) throw UsageError("give exactly one of --word and --input");
    if (a.curve && !a.input) throw UsageError("--curve needs --input");
    const AutomatonFile f = load_automaton(a.mode);
    const std::size_t arity = f.automaton.arity();
    if (arity != 2 && arity != 3) throw UsageError(a.mode + ": arity must be 2 or 3");
    const Alphabet& objects = f.automaton.alphabet(arity - 1);

    Word x;
    if (a.word) {
        x = parse_word(*a.word, objects);
    } else {
        if (objects != Alphabet::binary()) throw UsageError("--input needs a mode with object alphabet {0,1}");
        x = load_prefix(*a.input, a.n);
    }
    const ValuednessCertificate cert = f.certificate.value_or(ValuednessCertificate::unknown());

    if (arity == 3) {
        if (a.curve) throw UsageError("--curve is only available for description modes");
        out << show(pair_complexity(make_pair_mode(f.automaton, cert), x)) << '\n';
        return;
    }
    const DescriptionMode m = make_mode(f.automaton, cert);
    if (a.curve) {
        out << curve_csv(complexity_curve(m, x, x.size(), *a.curve, a.mode));
        return;
    }
    out << show(complexity(m, x)) << '\n';
}

// ---- check-mode ------------------------------------------------------------

struct CheckArgs {
    std::string mode;
    std::size_t max_len = 8;
    std::size_t budget = kDefaultEnumerationBudget;
};

void cmd_check_mode(const CheckArgs& a, std::ostream& out) {
    const AutomatonFile f = load_automaton(a.mode);
    const std::size_t arity = f.automaton.arity();
    if (arity != 2 && arity != 3) throw UsageError(a.mode + ": arity must be 2 or 3");
    const TapeRoles roles = arity == 2 ? TapeRoles::binary() : TapeRoles::pair();
    const ValuednessCertificate cert = f.certificate.value_or(ValuednessCertificate::unknown());

    out << "arity: " << arity << '\n'
        << "states: " << f.automaton.state_count() << '\n'
        << "edges: " << f.automaton.edges().size() << '\n'
        << "certificate: " << describe(cert) << '\n';

    const ValuednessProfile p = valuedness_profile(f.automaton, roles, a.max_len, a.budget);
    if (!p.max_fanout) {
        out << "structural check: unbounded, cycle over edges";
        for (std::size_t e : p.witness_cycle) out << ' ' << e;
        out << '\n' << "verdict: unbounded\n";
        throw CheckFailed("mode is not O(1)-valued: an object-emitting cycle reads no description letter");
    }
    out << "structural check: pass\n"
        << "profile: max fan-out " << *p.max_fanout << " over descriptions up to length " << a.max_len
        << " (objects up to length " << p.object_cap << ")\n";
    if (cert.is_unbounded()) {
        out << "verdict: inconsistent\n";
        throw CheckFailed("certificate claims unbounded but no witness cycle exists");
    }
    if (cert.is_finite() && *p.max_fanout > cert.bound) {
        out << "verdict: inconsistent\n";
        throw CheckFailed("profiled fan-out " + std::to_string(*p.max_fanout) + " exceeds the certificate bound " +
                          std::to_string(cert.bound));
    }
    out << "verdict: " << (cert.is_finite() ? "consistent" : "no certificate; profile only") << '\n';
}

// ---- select ----------------------------------------------------------------

struct SelectArgs {
    std::string rule;
    std::string input;
    std::optional<std::size_t> n;
    std::optional<std::string> selected_out;
    std::optional<std::string> rest_out;
    std::optional<std::string> density_out;
    std::optional<std::size_t> step;
};

void cmd_select(const SelectArgs& a, std::ostream& out) {
    const SelectionRule rule = parse_selection_rule(read_text_file(a.rule));
    const Word w = load_prefix(a.input, a.n);
    const std::size_t step = a.step.value_or(std::max<std::size_t>(1, w.size() / 100));
    if (step == 0) throw UsageError("--step must be positive");

    SplitWord split;
    std::string density = "n,selected,density\n";
    StateId s = rule.initial();
    for (std::size_t i = 0; i < w.size(); ++i) {
        (rule.accepting(s) ? split.selected : split.non_selected).push_back(w[i]);
        s = rule.step(s, w[i]);
        if ((i + 1) % step == 0 || i + 1 == w.size())
            density += std::to_string(i + 1) + ',' + std::to_string(split.selected.size()) + ',' +
                       fixed6(static_cast<double>(split.selected.size()) / static_cast<double>(i + 1)) + '\n';
    }
    if (a.selected_out) write_sequence_file(*a.selected_out, split.selected);
    if (a.rest_out) write_sequence_file(*a.rest_out, split.non_selected);
    if (a.density_out) write_text_file(*a.density_out, density);

    const double d = w.empty() ? 0.0 : static_cast<double>(split.selected.size()) / static_cast<double>(w.size());
    out << "class: " << to_string(classify_selection(rule)) << '\n'
        << "n: " << w.size() << '\n'
        << "selected: " << split.selected.size() << '\n'
        << "non_selected: " << split.non_selected.size() << '\n'
        << "density: " << fixed6(d) << '\n';
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Automatic Kolmogorov complexity toolkit", "akc"};
    app.require_subcommand(1);
    std::function<void()> action;

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a binary digit sequence");
    g->add_option("kind", gen.kind, "champernowne | rational | bernoulli")
        ->required()
        ->check(CLI::IsMember({"champernowne", "rational", "bernoulli"}));
    g->add_option("param", gen.param, "P/Q for rational, p for bernoulli");
    g->add_option("--seed", gen.seed, "Seed for bernoulli");
    g->add_option("--bits", gen.bits, "Number of digits")->required();
    g->add_option("--out", gen.out, "Output file (default: stdout)");
    g->callback([&] { action = [&] { cmd_gen(gen, out); }; });

    StatsArgs stats;
    auto* st = app.add_subcommand("stats", "Block statistics of a sequence prefix");
    st->add_option("--input", stats.input, "Sequence file")->required();
    st->add_option("--k", stats.k, "Block length")->required();
    st->add_option("--mode", stats.mode, "aligned | sliding")->check(CLI::IsMember({"aligned", "sliding"}));
    st->add_option("--n", stats.n, "Prefix length (default: whole file)");
    st->add_flag("--blocks", stats.blocks, "Print per-block counts instead of the summary");
    st->callback([&] { action = [&] { cmd_stats(stats, out); }; });

    ReportArgs report;
    auto* rp = app.add_subcommand("report", "Normality report for k = 1..kmax");
    rp->add_option("--input", report.input, "Sequence file")->required();
    rp->add_option("--n", report.n, "Prefix length (default: whole file)");
    rp->add_option("--kmax", report.kmax, "Largest block length (<= 16)");
    rp->callback([&] { action = [&] { cmd_report(report, out); }; });

    ModeArgs margs;
    auto* mode = app.add_subcommand("mode", "Build a description mode and write it as an automaton file");
    mode->require_subcommand(1);
    auto add_mode = [&](const std::string& name, const std::string& help) {
        auto* sc = mode->add_subcommand(name, help);
        sc->add_option("--out", margs.out, "Output file (default: stdout)");
        sc->callback([&, name] {
            action = [&, name] { emit(out, margs.out, cmd_mode(name, margs)); };
        });
        return sc;
    };
    add_mode("identity", "Identity relation on {0,1}");
    add_mode("unary", "Unary compressor")->add_option("--c", margs.c, "Letters emitted per description letter")->required();
    {
        auto* w = add_mode("wall", "Multiplication by c on binary expansions");
        w->add_option("--c", margs.c, "Multiplier (>= 2)")->required();
        w->add_option("--verify", margs.verify, "Profile the bound up to this length (0 = skip)");
    }
    add_mode("union", "Union of two modes")->add_option("files", margs.files, "A B")->required()->expected(2);
    add_mode("compose", "Composition of two modes")->add_option("files", margs.files, "A B")->required()->expected(2);
    add_mode("reverse", "Reverse every edge")->add_option("files", margs.files, "A")->required()->expected(1);
    add_mode("invert", "Swap description and object tapes")
        ->add_option("files", margs.files, "A")
        ->required()
        ->expected(1);
    {
        auto* l = add_mode("layered", "Layered concatenation");
        l->add_option("files", margs.files, "A")->required()->expected(1);
        l->add_option("--layers", margs.layers, "Number of layers N")->required();
    }
    {
        auto* ap = add_mode("append", "Allow one extra object symbol at the end");
        ap->add_option("files", margs.files, "A")->required()->expected(1);
        ap->add_option("--symbol", margs.symbol, "Object symbol to append")->required();
    }
    {
        auto* bc = add_mode("build-coder", "Huffman block coder trained on a sequence");
        bc->add_option("--k", margs.k, "Block length")->required();
        bc->add_option("--train", margs.train, "Training sequence file")->required();
        bc->add_option("--n", margs.n, "Training prefix length (default: whole file)");
    }
    add_mode("splitter", "Pair mode splitting a word by a selection rule")
        ->add_option("--rule", margs.rule, "Selection rule file")
        ->required();
    add_mode("joint", "Joint of a mode Q and a pair mode R")
        ->add_option("files", margs.files, "Q R")
        ->required()
        ->expected(2);

    ComplexityArgs cx;
    auto* c = app.add_subcommand("complexity", "Shortest description length, or a curve over prefixes");
    c->add_option("--mode", cx.mode, "Automaton file (arity 2 or 3)")->required();
    c->add_option("--word", cx.word, "Object word");
    c->add_option("--input", cx.input, "Sequence file");
    c->add_option("--n", cx.n, "Prefix length (default: whole file)");
    c->add_option("--curve", cx.curve, "Sample every STEP letters and print CSV");
    c->callback([&] { action = [&] { cmd_complexity(cx, out); }; });

    CheckArgs ck;
    auto* cm = app.add_subcommand("check-mode", "Structural check and valuedness profile");
    cm->add_option("--mode", ck.mode, "Automaton file")->required();
    cm->add_option("--max-len", ck.max_len, "Profile descriptions up to this length");
    cm->add_option("--budget", ck.budget, "Enumeration budget (configurations)");
    cm->callback([&] { action = [&] { cmd_check_mode(ck, out); }; });

    SelectArgs sel;
    auto* s = app.add_subcommand("select", "Apply a selection rule to a sequence");
    s->add_option("--rule", sel.rule, "Selection rule file")->required();
    s->add_option("--input", sel.input, "Sequence file")->required();
    s->add_option("--n", sel.n, "Prefix length (default: whole file)");
    s->add_option("--selected", sel.selected_out, "Write the selected letters here");
    s->add_option("--rest", sel.rest_out, "Write the other letters here");
    s->add_option("--density", sel.density_out, "Write n,selected,density CSV here");
    s->add_option("--step", sel.step, "Density sampling step (default: n/100)");
    s->callback([&] { action = [&] { cmd_select(sel, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "akc: error: " << one_line(e.what()) << '\n';
        return 2;
    }

    try {
        action();
        return 0;
    } catch (const CheckFailed& e) {
        err << "akc: check failed: " << one_line(e.what()) << '\n';
    } catch (const akc::ParseError& e) {
        err << "akc: error: " << one_line(e.what()) << '\n';
    } catch (const std::invalid_argument& e) {
        // UsageError and RejectedInput
        err << "akc: error: " << one_line(e.what()) << '\n';
        return 2;
    } catch (const ContractError& e) {
        err << "akc: error: " << one_line(e.what()) << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "akc: error: " << one_line(e.what()) << '\n';
    }
    return 1;
}

} // namespace akc::cli
