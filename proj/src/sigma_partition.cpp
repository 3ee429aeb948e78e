#include "sigma/sigma_partition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sigma/numbers.hpp"

namespace sigma {

SigmaPartition SigmaPartition::from_blocks(std::vector<std::vector<std::uint64_t>> blocks) {
  std::set<std::uint64_t> seen;
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition block must be non-empty");
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    for (std::uint64_t p : b) {
      if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
      if (!seen.insert(p).second)
        throw std::invalid_argument("prime " + std::to_string(p) + " appears in two blocks");
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  if (blocks.size() > 30) throw std::invalid_argument("too many partition blocks");
  SigmaPartition out;
  out.blocks_ = std::move(blocks);
  return out;
}

SigmaPartition SigmaPartition::singletons(const std::vector<std::uint64_t>& primes) {
  std::vector<std::vector<std::uint64_t>> blocks;
  for (std::uint64_t p : primes) blocks.push_back({p});
  return from_blocks(std::move(blocks));
}

SigmaPartition SigmaPartition::whole(const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) return SigmaPartition();
  return from_blocks({primes});
}

SigmaPartition SigmaPartition::parse(const std::string& text,
                                     const std::vector<std::uint64_t>& pi) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s == "singletons") return singletons(pi);
  if (s == "whole") return whole(pi);
  if (s.empty()) throw std::invalid_argument("empty partition string");
  std::vector<std::vector<std::uint64_t>> blocks;
  std::istringstream bs(s);
  std::string blk;
  while (std::getline(bs, blk, '|')) {
    std::vector<std::uint64_t> primes;
    std::istringstream ps(blk);
    std::string tok;
    while (std::getline(ps, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("empty prime in partition string");
      std::uint64_t v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9')
          throw std::invalid_argument("bad prime \"" + tok + "\" in partition string");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
      }
      primes.push_back(v);
    }
    blocks.push_back(std::move(primes));
  }
  return from_blocks(std::move(blocks));
}

std::vector<SigmaPartition> SigmaPartition::all_partitions(
    const std::vector<std::uint64_t>& primes) {
  std::vector<std::uint64_t> ps = primes;
  std::sort(ps.begin(), ps.end());
  std::vector<SigmaPartition> out;
  std::vector<std::vector<std::uint64_t>> blocks;
  // classic recursion: each prime joins an existing block or opens a new one
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == ps.size()) {
      out.push_back(from_blocks(blocks));
      return;
    }
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      blocks[bi].push_back(ps[i]);
      self(self, i + 1);
      blocks[bi].pop_back();
    }
    blocks.push_back({ps[i]});
    self(self, i + 1);
    blocks.pop_back();
  };
  if (ps.empty()) return {SigmaPartition()};
  rec(rec, 0);
  return out;
}

std::size_t SigmaPartition::block_of(std::uint64_t p) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), p)) return i;
  return residual_index();
}

bool SigmaPartition::in_block(std::uint64_t p, std::size_t block_index) const {
  return block_of(p) == block_index;
}

BlockMask SigmaPartition::classify(std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("sigma classification of 0");
  BlockMask m = 0;
  for (std::uint64_t p : prime_divisors(n)) m |= BlockMask{1} << block_of(p);
  return m;
}

bool SigmaPartition::is_primary(std::uint64_t n) const {
  return mask_popcount(classify(n)) <= 1;
}

bool SigmaPartition::is_pi_number(std::uint64_t n, BlockMask pi_mask) const {
  return (classify(n) & ~pi_mask) == 0;
}

std::string SigmaPartition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) os << '|';
    for (std::size_t k = 0; k < blocks_[i].size(); ++k) {
      if (k) os << ',';
      os << blocks_[i][k];
    }
  }
  return os.str();
}

}  // namespace sigma
