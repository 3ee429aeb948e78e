#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "sigma/sigma_partition.hpp"
#include "sigma/subgroup_lattice.hpp"
#include "sigma/witness.hpp"

namespace sigma {

/// One Hall subgroup per partition block meeting pi of the ambient group;
/// the identity subgroup is an implicit member.
struct CompleteHallSet {
  std::vector<std::pair<std::size_t, SubIdx>> members;  // (block index, subgroup)
};

/// All sigma-dependent predicates over one lattice and one partition.
/// Results are memoized; an instance is meant to be driven by a single
/// thread (the underlying lattice caches are shared and thread-safe).
///
/// Ambient-relative: every query takes the ambient subgroup index, so the
/// same context answers questions inside any subgroup of the lattice.
class SigmaContext {
 public:
  SigmaContext(const SubgroupLattice& lat, SigmaPartition sigma);
  SigmaContext(SigmaContext&&) noexcept;
  SigmaContext& operator=(SigmaContext&&) noexcept;
  ~SigmaContext();

  const SubgroupLattice& lattice() const { return *lat_; }
  const SigmaPartition& partition() const { return sigma_; }

  // --- sigma arithmetic ---
  BlockMask classify(std::uint64_t n) const { return sigma_.classify(n); }
  bool primary(std::uint64_t n) const { return sigma_.is_primary(n); }
  /// Blocks meeting pi(|amb|), ascending.
  std::vector<std::size_t> block_list(SubIdx amb) const;
  /// Product of the prime powers of n whose primes lie in the masked blocks.
  std::uint64_t pi_part(std::uint64_t n, BlockMask mask) const;

  // --- Hall structure ---
  std::vector<SubIdx> hall_subgroups(SubIdx amb, BlockMask mask) const;
  /// Hall subgroups for one block, grouped into conjugacy classes of amb.
  const std::vector<std::vector<SubIdx>>& hall_classes(SubIdx amb, std::size_t block) const;
  /// A complete Hall sigma-set exists.
  bool sigma_full(SubIdx amb) const;
  /// Every choice of one Hall subgroup per block (cartesian product).
  std::vector<CompleteHallSet> complete_hall_sets(SubIdx amb) const;
  /// Every subgroup of amb has Hall sigma_i-subgroups that exist, are
  /// conjugate, and dominate every sigma_i-subgroup, for each block.
  bool sylow_type(SubIdx amb) const;

  // --- sigma-subnormality ---
  bool sigma_subnormal(SubIdx h, SubIdx amb) const;
  /// Ascending chain h = c_0 <= ... <= c_k = amb with each step normal or
  /// sigma-primary over the step core; empty when not sigma-subnormal.
  std::vector<SubIdx> subnormal_chain(SubIdx h, SubIdx amb) const;

  // --- sigma-permutability ---
  /// Existential over complete Hall sigma-sets (the definition's reading).
  bool sigma_permutable(SubIdx h, SubIdx amb) const;
  /// Universal over complete Hall sigma-sets, recorded for comparison.
  bool sigma_permutable_universal(SubIdx h, SubIdx amb) const;
  /// The Hall set backing a positive existential answer.
  std::optional<CompleteHallSet> sigma_permutable_witness(SubIdx h, SubIdx amb) const;

  /// Join of the subgroups of h that are sigma-permutable in amb.
  SubIdx sigma_core(SubIdx h, SubIdx amb) const;

  struct WeakResult {
    bool ok = false;
    SubIdx supplement = 0;
  };
  /// Smallest sigma-subnormal T with amb = hT and h meet T inside the
  /// sigma-core of h.
  WeakResult weakly_sigma_permutable(SubIdx h, SubIdx amb) const;

  /// Full re-verifiable witness for a positive weak-permutability answer.
  WeakPermutabilityWitness weak_witness(SubIdx h, SubIdx amb) const;

  // --- sigma structure ---
  bool sigma_soluble(SubIdx amb) const;
  bool sigma_nilpotent(SubIdx amb) const;
  /// Block mask of each chief factor of amb.
  std::vector<BlockMask> chief_factor_masks(SubIdx amb) const;

  /// O^Pi: subgroup generated by all Pi'-subgroups.
  SubIdx o_upper(BlockMask mask, SubIdx amb) const;
  /// O_Pi: subgroup generated by all normal Pi-subgroups.
  SubIdx o_lower(BlockMask mask, SubIdx amb) const;

  FiniteGroup hall_member_group(const CompleteHallSet& set, std::size_t i) const;

 private:
  struct PermFlags {
    char existential = -1;  // -1 unknown
    char universal = -1;
    std::optional<CompleteHallSet> witness;
  };
  const PermFlags& perm_flags(SubIdx h, SubIdx amb) const;

  const SubgroupLattice* lat_;
  SigmaPartition sigma_;

  struct Memo;
  std::unique_ptr<Memo> memo_;
};

/// Lattice plus per-partition contexts for one group.
class SigmaAnalysis {
 public:
  explicit SigmaAnalysis(const FiniteGroup& g,
                         std::uint32_t cutoff = SubgroupLattice::kDefaultCutoff);

  const FiniteGroup& group() const { return lat_.group(); }
  const SubgroupLattice& lattice() const { return lat_; }
  SigmaContext& context(const SigmaPartition& sigma);
  SubIdx locate(const FiniteGroup& sub) const { return lat_.locate(sub); }
  std::vector<std::uint64_t> pi() const;

 private:
  SubgroupLattice lat_;
  std::mutex mu_;
  std::map<std::string, std::unique_ptr<SigmaContext>> contexts_;
};

}  // namespace sigma
