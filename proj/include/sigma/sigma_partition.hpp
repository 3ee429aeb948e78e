#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sigma {

/// Bitmask over partition blocks. Bit i is block i; the highest usable bit
/// (index = block_count()) stands for the implicit residual block holding
/// every prime outside the explicit blocks.
using BlockMask = std::uint32_t;

/// A partition of a finite prime set into disjoint blocks. Primes outside
/// the explicit blocks all fall into one implicit residual block, so the
/// partition extends to all primes.
///
/// Text syntax: blocks separated by '|', primes by ',', e.g. "2,3,5|7".
/// The keyword "singletons" expands to one block per prime of the given
/// prime set, "whole" to a single block covering it.
class SigmaPartition {
 public:
  SigmaPartition() = default;  // zero explicit blocks: everything residual

  /// Validates primality, non-emptiness and disjointness; blocks are
  /// canonicalized (primes ascending, blocks by smallest prime).
  static SigmaPartition from_blocks(std::vector<std::vector<std::uint64_t>> blocks);

  static SigmaPartition singletons(const std::vector<std::uint64_t>& primes);
  static SigmaPartition whole(const std::vector<std::uint64_t>& primes);

  /// Parses the text syntax; keywords expand against `pi` (usually pi(G)).
  static SigmaPartition parse(const std::string& text, const std::vector<std::uint64_t>& pi = {});

  /// All set partitions of `primes`, deterministic order.
  static std::vector<SigmaPartition> all_partitions(const std::vector<std::uint64_t>& primes);

  std::size_t block_count() const { return blocks_.size(); }
  std::size_t residual_index() const { return blocks_.size(); }
  const std::vector<std::uint64_t>& block(std::size_t i) const { return blocks_[i]; }

  /// Index of the block containing p (residual_index() if unlisted).
  std::size_t block_of(std::uint64_t p) const;

  bool in_block(std::uint64_t p, std::size_t block_index) const;

  /// sigma(n): mask of blocks meeting pi(n). Throws on n == 0.
  BlockMask classify(std::uint64_t n) const;

  /// |sigma(n)| <= 1.
  bool is_primary(std::uint64_t n) const;

  /// pi(n) contained in the union of the blocks selected by `pi_mask`.
  bool is_pi_number(std::uint64_t n, BlockMask pi_mask) const;

  std::string to_string() const;  // canonical "2,3,5|7" form

  friend bool operator==(const SigmaPartition& a, const SigmaPartition& b) = default;

 private:
  std::vector<std::vector<std::uint64_t>> blocks_;
};

inline int mask_popcount(BlockMask m) { return __builtin_popcount(m); }

}  // namespace sigma
