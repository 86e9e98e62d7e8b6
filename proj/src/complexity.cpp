#include "akc/complexity.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "akc/errors.hpp"

namespace akc {

ComplexityValue complexity_sum(ComplexityValue a, ComplexityValue b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

LayeredSearch::LayeredSearch(const LabeledAutomaton& aut, const TapeRoles& roles)
    : states_(aut.state_count()), alphabet_size_(aut.alphabet(roles.object_tape).size()) {
    const auto& edges = aut.edges();
    auto weight = [&](const Edge& e) {
        std::uint8_t w = 0;
        for (std::size_t t : roles.description_tapes)
            if (e.label.at(t).is_letter()) ++w;
        return w;
    };

    silent_begin_.assign(states_ + 1, 0);
    step_begin_.assign(states_ * alphabet_size_ + 1, 0);
    for (const Edge& e : edges) {
        const Symbol o = e.label[roles.object_tape];
        if (o.is_epsilon())
            ++silent_begin_[e.from + 1];
        else
            ++step_begin_[e.from * alphabet_size_ + o.index() + 1];
    }
    for (std::size_t i = 1; i < silent_begin_.size(); ++i) silent_begin_[i] += silent_begin_[i - 1];
    for (std::size_t i = 1; i < step_begin_.size(); ++i) step_begin_[i] += step_begin_[i - 1];
    silent_to_.resize(silent_begin_.back());
    silent_weight_.resize(silent_begin_.back());
    step_to_.resize(step_begin_.back());
    step_weight_.resize(step_begin_.back());
    std::vector<std::uint32_t> fill_silent(silent_begin_.begin(), silent_begin_.end() - 1);
    std::vector<std::uint32_t> fill_step(step_begin_.begin(), step_begin_.end() - 1);
    for (const Edge& e : edges) {
        const Symbol o = e.label[roles.object_tape];
        if (o.is_epsilon()) {
            const std::uint32_t at = fill_silent[e.from]++;
            silent_to_[at] = e.to;
            silent_weight_[at] = weight(e);
        } else {
            const std::uint32_t at = fill_step[e.from * alphabet_size_ + o.index()]++;
            step_to_[at] = e.to;
            step_weight_[at] = weight(e);
        }
    }
    dist_.assign(states_, kInf);
    next_dist_.assign(states_, kInf);
    reset();
}

void LayeredSearch::reset() {
    position_ = 0;
    std::fill(dist_.begin(), dist_.end(), kInf);
    active_.clear();
    for (std::uint32_t s = 0; s < states_; ++s) {
        dist_[s] = 0;
        active_.push_back(s);
    }
}

void LayeredSearch::advance(Letter object_letter) {
    if (object_letter >= alphabet_size_)
        throw RejectedInput("letter " + std::to_string(object_letter) + " outside the object alphabet");
    for (std::uint32_t s : next_active_) next_dist_[s] = kInf;
    next_active_.clear();
    for (std::uint32_t s : active_) {
        const std::uint32_t d = dist_[s];
        const std::size_t key = s * alphabet_size_ + object_letter;
        for (std::uint32_t i = step_begin_[key]; i < step_begin_[key + 1]; ++i) {
            const std::uint32_t t = step_to_[i];
            const std::uint32_t nd = d + step_weight_[i];
            if (nd < next_dist_[t]) {
                if (next_dist_[t] == kInf) next_active_.push_back(t);
                next_dist_[t] = nd;
            }
        }
    }
    for (std::uint32_t s : active_) dist_[s] = kInf;
    std::swap(dist_, next_dist_);
    std::swap(active_, next_active_);
    ++position_;
    close_layer();
}

void LayeredSearch::feed(std::span<const Letter> word) {
    for (Letter l : word) advance(l);
}

void LayeredSearch::close_layer() {
    if (active_.empty()) return;
    // Dial's algorithm: buckets indexed by distance - base, weights 0..2.
    std::uint32_t base = kInf;
    for (std::uint32_t s : active_) base = std::min(base, dist_[s]);
    for (auto& b : buckets_) b.clear();
    auto push = [&](std::uint32_t s) {
        const std::size_t slot = dist_[s] - base;
        if (slot >= buckets_.size()) buckets_.resize(slot + 1);
        buckets_[slot].push_back(s);
    };
    for (std::uint32_t s : active_) push(s);

    for (std::size_t slot = 0; slot < buckets_.size(); ++slot) {
        for (std::size_t i = 0; i < buckets_[slot].size(); ++i) {
            const std::uint32_t s = buckets_[slot][i];
            const std::uint32_t d = dist_[s];
            if (d - base != slot) continue;
            for (std::uint32_t e = silent_begin_[s]; e < silent_begin_[s + 1]; ++e) {
                const std::uint32_t t = silent_to_[e];
                const std::uint32_t nd = d + silent_weight_[e];
                if (nd < dist_[t]) {
                    if (dist_[t] == kInf) active_.push_back(t);
                    dist_[t] = nd;
                    push(t);
                }
            }
        }
    }
}

ComplexityValue LayeredSearch::best() const {
    std::uint32_t m = kInf;
    for (std::uint32_t s : active_) m = std::min(m, dist_[s]);
    if (m == kInf) return std::nullopt;
    return m;
}

namespace {

void require_usable(const ValuednessCertificate& c) {
    if (c.is_unbounded())
        throw ContractError("complexity is undefined for a mode with an unbounded valuedness certificate");
}

} // namespace

ComplexityValue complexity(const DescriptionMode& m, std::span<const Letter> x) {
    require_usable(m.certificate);
    if (m.automaton.state_count() == 0) return std::nullopt;
    LayeredSearch search(m.automaton, TapeRoles::binary());
    search.feed(x);
    return search.best();
}

ComplexityValue pair_complexity(const PairDescriptionMode& m, std::span<const Letter> w) {
    require_usable(m.certificate);
    if (m.automaton.state_count() == 0) return std::nullopt;
    LayeredSearch search(m.automaton, TapeRoles::pair());
    search.feed(w);
    return search.best();
}

ComplexityCurve complexity_curve(const DescriptionMode& m, std::span<const Letter> source, std::size_t n_max,
                                 std::size_t step, std::string mode_id, std::size_t verify_points) {
    if (step == 0) throw ContractError("curve step must be >= 1");
    if (n_max > source.size()) throw ContractError("curve needs n_max <= length of the source");
    require_usable(m.certificate);

    ComplexityCurve curve;
    curve.mode_id = std::move(mode_id);
    if (m.automaton.state_count() == 0) {
        for (std::size_t n = step; n <= n_max; n += step) curve.samples.push_back({n, std::nullopt});
        return curve;
    }
    LayeredSearch search(m.automaton, TapeRoles::binary());
    for (std::size_t n = step; n <= n_max; n += step) {
        search.feed(source.subspan(search.position(), n - search.position()));
        curve.samples.push_back({n, search.best()});
    }

    if (!curve.samples.empty() && verify_points > 0) {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, curve.samples.size() - 1);
        for (std::size_t i = 0; i < verify_points; ++i) {
            const CurveSample& s = curve.samples[pick(rng)];
            if (complexity(m, source.first(s.n)) != s.k)
                throw std::logic_error("incremental curve disagrees with from-scratch complexity at n = " +
                                       std::to_string(s.n));
        }
    }
    return curve;
}

std::string curve_csv(const ComplexityCurve& curve) {
    std::ostringstream os;
    os << "n,complexity,ratio\n";
    char ratio[64];
    for (const CurveSample& s : curve.samples) {
        if (!s.k) {
            os << s.n << ",unreachable,inf\n";
            continue;
        }
        std::snprintf(ratio, sizeof ratio, "%.6f", static_cast<double>(*s.k) / static_cast<double>(s.n));
        os << s.n << ',' << *s.k << ',' << ratio << '\n';
    }
    return os.str();
}

bool superadditivity_check(const DescriptionMode& m, const Word& x, const Word& y) {
    Word xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    return complexity_leq(complexity_sum(complexity(m, x), complexity(m, y)), complexity(m, xy));
}

} // namespace akc
