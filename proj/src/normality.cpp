#include "akc/normality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <deque>
#include <queue>
#include <sstream>

#include "akc/complexity.hpp"
#include "akc/errors.hpp"

namespace akc {

std::uint64_t BlockHistogram::total() const {
    std::uint64_t t = 0;
    for (std::uint64_t c : counts) t += c;
    return t;
}

double BlockHistogram::frequency(std::size_t block) const {
    const std::uint64_t t = total();
    if (t == 0) throw ContractError("frequency of an empty histogram");
    return static_cast<double>(counts.at(block)) / static_cast<double>(t);
}

namespace {

void check_block_args(std::span<const Letter> source, std::size_t n, std::size_t k) {
    if (k == 0) throw ContractError("block length must be >= 1");
    if (k > kMaxBlockLength)
        throw ResourceError("block length " + std::to_string(k) + " exceeds the table limit of " +
                            std::to_string(kMaxBlockLength));
    if (n < k) throw ContractError("prefix length n must be >= block length k");
    if (n > source.size()) throw ContractError("prefix length exceeds the available sequence");
}

std::size_t block_at(std::span<const Letter> source, std::size_t pos, std::size_t k) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const Letter l = source[pos + i];
        if (l > 1) throw RejectedInput("block statistics are binary-only");
        v = (v << 1) | l;
    }
    return v;
}

} // namespace

BlockHistogram block_histogram(std::span<const Letter> source, std::size_t n, std::size_t k, BlockMode mode) {
    check_block_args(source, n, k);
    BlockHistogram h;
    h.k = k;
    h.mode = mode;
    h.n = n;
    h.counts.assign(std::size_t{1} << k, 0);
    if (mode == BlockMode::aligned) {
        for (std::size_t pos = 0; pos + k <= n; pos += k) ++h.counts[block_at(source, pos, k)];
        return h;
    }
    const std::size_t mask = (std::size_t{1} << k) - 1;
    std::size_t rolling = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Letter l = source[i];
        if (l > 1) throw RejectedInput("block statistics are binary-only");
        rolling = ((rolling << 1) | l) & mask;
        if (i + 1 >= k) ++h.counts[rolling];
    }
    return h;
}

BlockHistogram aligned_histogram_at_offset(std::span<const Letter> source, std::size_t n, std::size_t k,
                                           std::size_t offset) {
    check_block_args(source, n, k);
    if (offset >= k) throw ContractError("offset must be < k");
    BlockHistogram h;
    h.k = k;
    h.mode = BlockMode::aligned;
    h.n = n;
    h.counts.assign(std::size_t{1} << k, 0);
    for (std::size_t pos = offset; pos + k <= n; pos += k) ++h.counts[block_at(source, pos, k)];
    return h;
}

double discrepancy(const BlockHistogram& h) {
    const std::uint64_t t = h.total();
    if (t == 0) throw ContractError("discrepancy of an empty histogram");
    const double uniform = std::ldexp(1.0, -static_cast<int>(h.k));
    double worst = 0;
    for (std::uint64_t c : h.counts)
        worst = std::max(worst, std::abs(static_cast<double>(c) / static_cast<double>(t) - uniform));
    return worst;
}

double empirical_entropy(const BlockHistogram& h) {
    const std::uint64_t t = h.total();
    if (t == 0) throw ContractError("entropy of an empty histogram");
    double e = 0;
    for (std::uint64_t c : h.counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(t);
        e -= p * std::log2(p);
    }
    return std::clamp(e, 0.0, static_cast<double>(h.k));
}

double ps_ratio(const BlockHistogram& h) {
    const std::uint64_t t = h.total();
    if (t == 0) throw ContractError("ps_ratio of an empty histogram");
    const std::uint64_t top = *std::max_element(h.counts.begin(), h.counts.end());
    return std::ldexp(static_cast<double>(top) / static_cast<double>(t), static_cast<int>(h.k));
}

std::string block_name(std::size_t block, std::size_t k) {
    std::string s(k, '0');
    for (std::size_t i = 0; i < k; ++i)
        if ((block >> (k - 1 - i)) & 1u) s[i] = '1';
    return s;
}

namespace {

struct HuffmanTree {
    // Nodes 0..leaves-1 are leaves; internal nodes follow. children[i] = {zero, one}.
    std::size_t leaves = 0;
    std::vector<std::array<std::size_t, 2>> children;
    std::size_t root = 0;
};

HuffmanTree build_huffman(std::span<const std::uint64_t> weights) {
    if (weights.size() < 2) throw ContractError("a Huffman code needs at least two symbols");
    struct Item {
        std::uint64_t weight;
        std::size_t min_leaf;
        std::size_t node;
        bool operator>(const Item& o) const {
            return weight != o.weight ? weight > o.weight : min_leaf > o.min_leaf;
        }
    };
    HuffmanTree t;
    t.leaves = weights.size();
    t.children.assign(weights.size(), {0, 0});
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] == 0) throw ContractError("Huffman weights must be positive");
        heap.push({weights[i], i, i});
    }
    while (heap.size() > 1) {
        const Item a = heap.top();
        heap.pop();
        const Item b = heap.top();
        heap.pop();
        const std::size_t node = t.children.size();
        t.children.push_back({a.node, b.node});
        heap.push({a.weight + b.weight, std::min(a.min_leaf, b.min_leaf), node});
    }
    t.root = heap.top().node;
    return t;
}

} // namespace

std::vector<std::size_t> huffman_lengths(std::span<const std::uint64_t> weights) {
    const HuffmanTree t = build_huffman(weights);
    std::vector<std::size_t> len(weights.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{t.root, 0}};
    while (!stack.empty()) {
        const auto [node, depth] = stack.back();
        stack.pop_back();
        if (node < t.leaves) {
            len[node] = depth;
            continue;
        }
        stack.push_back({t.children[node][0], depth + 1});
        stack.push_back({t.children[node][1], depth + 1});
    }
    return len;
}

double BlockCoder::average_length(const BlockHistogram& h) const {
    if (h.k != k) throw ContractError("histogram block length differs from the coder's");
    const std::uint64_t t = h.total();
    if (t == 0) throw ContractError("average length over an empty histogram");
    double sum = 0;
    for (std::size_t b = 0; b < h.counts.size(); ++b)
        sum += static_cast<double>(h.counts[b]) * static_cast<double>(codewords[b].size());
    return sum / static_cast<double>(t);
}

BlockCoder build_block_coder(const BlockHistogram& h) {
    if (h.mode != BlockMode::aligned) throw ContractError("the block coder is trained on an aligned histogram");
    if (h.k == 0) throw ContractError("block length must be >= 1");
    if (h.k > 16) throw ResourceError("block coder limited to k <= 16");
    const std::size_t k = h.k;
    const std::size_t blocks = std::size_t{1} << k;

    std::vector<std::uint64_t> weights(h.counts);
    for (auto& w : weights) w = std::max<std::uint64_t>(w, 1);
    const HuffmanTree tree = build_huffman(weights);

    // Internal trie nodes get states in breadth-first order (root = 0), then
    // each leaf gets a chain of k states.
    std::vector<std::size_t> state_of(tree.children.size(), 0);
    std::vector<std::size_t> internal_order;
    std::deque<std::size_t> queue{tree.root};
    while (!queue.empty()) {
        const std::size_t node = queue.front();
        queue.pop_front();
        state_of[node] = internal_order.size();
        internal_order.push_back(node);
        for (std::size_t child : tree.children[node])
            if (child >= tree.leaves) queue.push_back(child);
    }
    const std::size_t internal = internal_order.size();
    for (std::size_t b = 0; b < blocks; ++b) state_of[b] = internal + b * k;

    BlockCoder coder;
    coder.k = k;
    coder.root = 0;
    coder.codewords.assign(blocks, Word{});
    LabeledAutomaton a({Alphabet::binary(), Alphabet::binary()}, internal + blocks * k);

    std::vector<std::pair<std::size_t, Word>> stack{{tree.root, Word{}}};
    while (!stack.empty()) {
        auto [node, prefix] = std::move(stack.back());
        stack.pop_back();
        if (node < tree.leaves) {
            coder.codewords[node] = std::move(prefix);
            continue;
        }
        for (Letter bit = 0; bit < 2; ++bit) {
            const std::size_t child = tree.children[node][bit];
            a.add_edge(static_cast<StateId>(state_of[node]), static_cast<StateId>(state_of[child]), {sym(bit), eps});
            Word next = prefix;
            next.push_back(bit);
            stack.push_back({child, std::move(next)});
        }
    }
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t first = internal + b * k;
        for (std::size_t j = 0; j < k; ++j) {
            const auto bit = static_cast<Letter>((b >> (k - 1 - j)) & 1u);
            const std::size_t to = j + 1 < k ? first + j + 1 : coder.root;
            a.add_edge(static_cast<StateId>(first + j), static_cast<StateId>(to), {eps, sym(bit)});
        }
    }

    // A start state and the description fix the path; only the stopping
    // point inside the final chain (k+1 choices) is free.
    const std::size_t states = a.state_count();
    coder.mode = make_mode(std::move(a), ValuednessCertificate::asserted(bound_product(states, k + 1),
                                                                         "block-coder-k" + std::to_string(k)));
    return coder;
}

std::vector<NormalityRow> normality_report(std::span<const Letter> source, std::size_t n, std::size_t k_max) {
    if (k_max == 0 || k_max > 16) throw ContractError("normality report needs 1 <= k_max <= 16");
    if (n > source.size()) throw ContractError("report prefix exceeds the available sequence");
    if (n / 2 < k_max) throw ContractError("report needs n >= 2 * k_max");
    const auto prefix = source.first(n);
    std::vector<NormalityRow> rows;
    for (std::size_t k = 1; k <= k_max; ++k) {
        NormalityRow row;
        row.k = k;
        const BlockHistogram aligned = block_histogram(prefix, n, k, BlockMode::aligned);
        const BlockHistogram sliding = block_histogram(prefix, n, k, BlockMode::sliding);
        row.aligned_discrepancy = discrepancy(aligned);
        row.sliding_discrepancy = discrepancy(sliding);
        row.entropy = empirical_entropy(aligned);
        row.ps_ratio = ps_ratio(sliding);
        const BlockCoder coder = build_block_coder(block_histogram(prefix, n / 2, k, BlockMode::aligned));
        const ComplexityValue kx = complexity(coder.mode, prefix);
        row.coder_ratio = kx ? static_cast<double>(*kx) / static_cast<double>(n) : INFINITY;
        rows.push_back(row);
    }
    return rows;
}

std::string report_csv(const std::vector<NormalityRow>& rows) {
    std::ostringstream os;
    os << "k,aligned_disc,sliding_disc,entropy,ps_ratio,coder_ratio\n";
    char line[256];
    for (const NormalityRow& r : rows) {
        std::snprintf(line, sizeof line, "%zu,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.k, r.aligned_discrepancy,
                      r.sliding_discrepancy, r.entropy, r.ps_ratio, r.coder_ratio);
        os << line;
    }
    return os.str();
}

} // namespace akc
