#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "akc/automaton.hpp"
#include "akc/mode_algebra.hpp"

namespace akc {

/// Minimal description length, or nullopt for "unreachable" (no path spells
/// the object; min of the empty set is +infinity).
using ComplexityValue = std::optional<std::uint64_t>;

/// a <= b with nullopt read as +infinity.
constexpr bool complexity_leq(ComplexityValue a, ComplexityValue b) {
    if (!b) return true;
    if (!a) return false;
    return *a <= *b;
}

ComplexityValue complexity_sum(ComplexityValue a, ComplexityValue b);

/// Shortest-path search over nodes (state, i), i = number of object letters
/// spelled so far. Edges without an object letter stay in layer i, edges
/// with object letter x_i move to layer i+1. An edge costs the number of
/// description tapes on which it carries a letter. Every state is a source at
/// layer 0 and a sink at every layer, so best() after feeding x is K(x).
///
/// Only the current layer is kept, which makes prefix curves incremental.
class LayeredSearch {
public:
    LayeredSearch(const LabeledAutomaton& aut, const TapeRoles& roles);

    /// Back to layer 0 (every state at distance 0).
    void reset();
    void advance(Letter object_letter);
    void feed(std::span<const Letter> word);

    /// Minimum over the current layer.
    ComplexityValue best() const;
    std::size_t position() const { return position_; }

private:
    static constexpr std::uint32_t kInf = 0xFFFFFFFFu;

    void close_layer();

    std::size_t states_ = 0;
    std::size_t alphabet_size_ = 0;
    // Object-epsilon edges in CSR form.
    std::vector<std::uint32_t> silent_begin_, silent_to_;
    std::vector<std::uint8_t> silent_weight_;
    // Object-letter edges, CSR keyed by (state, letter).
    std::vector<std::uint32_t> step_begin_, step_to_;
    std::vector<std::uint8_t> step_weight_;

    std::vector<std::uint32_t> dist_, next_dist_;
    std::vector<std::uint32_t> active_, next_active_;
    std::vector<std::vector<std::uint32_t>> buckets_;
    std::size_t position_ = 0;
};

/// K_m(x). Throws ContractError for an unbounded certificate and
/// RejectedInput for letters outside the object alphabet.
ComplexityValue complexity(const DescriptionMode& m, std::span<const Letter> x);

/// min{|u| + |v| : (u, v, w) in R}.
ComplexityValue pair_complexity(const PairDescriptionMode& m, std::span<const Letter> w);

struct CurveSample {
    std::size_t n = 0;
    ComplexityValue k;
};

struct ComplexityCurve {
    std::string mode_id;
    std::vector<CurveSample> samples;
};

/// K of the prefixes of length step, 2*step, ... <= n_max, computed in one
/// left-to-right pass. `verify_points` sampled prefixes are recomputed from
/// scratch (fixed seed) and a mismatch throws std::logic_error.
ComplexityCurve complexity_curve(const DescriptionMode& m, std::span<const Letter> source, std::size_t n_max,
                                 std::size_t step, std::string mode_id = "mode", std::size_t verify_points = 3);

/// CSV with header n,complexity,ratio; unreachable rows print
/// "unreachable,inf".
std::string curve_csv(const ComplexityCurve& curve);

/// K(xy) >= K(x) + K(y), unreachable counted as +infinity.
bool superadditivity_check(const DescriptionMode& m, const Word& x, const Word& y);

} // namespace akc
