#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "akc/automaton.hpp"
#include "akc/word.hpp"

namespace akc {

enum class BlockMode { aligned, sliding };

inline constexpr std::size_t kMaxBlockLength = 24;

/// Counts of binary k-blocks over a prefix of length n. Blocks are indexed
/// by their value read most-significant-bit first.
struct BlockHistogram {
    std::size_t k = 0;
    BlockMode mode = BlockMode::aligned;
    std::size_t n = 0;
    std::vector<std::uint64_t> counts;  ///< size 2^k

    std::uint64_t total() const;
    double frequency(std::size_t block) const;
};

/// Throws ContractError when n < k or n exceeds the source, ResourceError
/// when k > kMaxBlockLength.
BlockHistogram block_histogram(std::span<const Letter> source, std::size_t n, std::size_t k, BlockMode mode);

/// Blocks starting at offset, offset+k, offset+2k, ... that end inside the
/// prefix of length n. Summed over offset 0..k-1 this is the sliding count.
BlockHistogram aligned_histogram_at_offset(std::span<const Letter> source, std::size_t n, std::size_t k,
                                           std::size_t offset);

/// max_r |freq(r) - 2^-k| over all 2^k blocks.
double discrepancy(const BlockHistogram& h);
/// Shannon entropy of the block frequencies, in bits.
double empirical_entropy(const BlockHistogram& h);
/// max_r freq(r) * 2^k.
double ps_ratio(const BlockHistogram& h);

std::string block_name(std::size_t block, std::size_t k);

/// Huffman code over k-blocks realized as a description mode: a code trie
/// whose edges read description bits, each leaf followed by a chain of k
/// edges writing the block and returning to the root.
struct BlockCoder {
    std::size_t k = 0;
    DescriptionMode mode;
    std::vector<Word> codewords;  ///< indexed by block
    StateId root = 0;

    /// Average codeword length under the histogram's frequencies.
    double average_length(const BlockHistogram& h) const;
};

/// Needs an aligned histogram. Blocks with zero count are smoothed to
/// count 1 so every block gets a codeword. Huffman ties are broken in favour
/// of the subtree holding the lexicographically smallest block.
BlockCoder build_block_coder(const BlockHistogram& h);

/// Huffman codeword lengths for arbitrary positive weights, same tie rule.
std::vector<std::size_t> huffman_lengths(std::span<const std::uint64_t> weights);

struct NormalityRow {
    std::size_t k = 0;
    double aligned_discrepancy = 0;
    double sliding_discrepancy = 0;
    double entropy = 0;        ///< aligned k-block entropy
    double ps_ratio = 0;       ///< sliding
    double coder_ratio = 0;    ///< K_coder(prefix)/n, coder trained on the first half
};

/// One row per k = 1..k_max (k_max <= 16).
std::vector<NormalityRow> normality_report(std::span<const Letter> source, std::size_t n, std::size_t k_max);

/// CSV: k,aligned_disc,sliding_disc,entropy,ps_ratio,coder_ratio
std::string report_csv(const std::vector<NormalityRow>& rows);

} // namespace akc
