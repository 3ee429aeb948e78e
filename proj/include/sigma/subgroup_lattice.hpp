#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "sigma/finite_group.hpp"

namespace sigma {

using Bitset = boost::dynamic_bitset<std::uint64_t>;
using SubIdx = std::uint32_t;
using EltIdx = std::uint16_t;

/// Raised when a group is too large for complete lattice enumeration.
/// Callers get a refusal, never a silent partial lattice.
class CutoffExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ChiefFactor {
  std::uint64_t order = 1;
  bool prime_order = false;
  std::uint64_t centralizer_index = 1;  // |G : C_G(H/K)|
};

struct ChiefSeries {
  std::vector<SubIdx> terms;  // ascending, terms.front() trivial, terms.back() ambient
  std::vector<ChiefFactor> factors;
};

struct NormalStructure {
  std::vector<SubIdx> normal_subgroups;
  std::vector<SubIdx> minimal_normal_subgroups;
  std::vector<SubIdx> maximal_subgroups;
};

/// The complete subgroup lattice of a finite group, over an indexed element
/// table with multiplication and inverse lookups. Subgroups are element
/// bitsets in a canonical order (by order, then by the lexicographic
/// fingerprint of their sorted element lists); index 0 is the trivial
/// subgroup and size()-1 the whole group.
///
/// Enumeration seeds with the cyclic subgroups of prime order and closes
/// under joins with cyclic subgroups of prime-power order.
///
/// The finished lattice is immutable; the lazy analysis caches fill
/// idempotently and may be shared across threads.
class SubgroupLattice {
 public:
  static constexpr std::uint32_t kDefaultCutoff = 2016;

  static SubgroupLattice build(const FiniteGroup& g, std::uint32_t cutoff = kDefaultCutoff);

  SubgroupLattice(SubgroupLattice&&) noexcept;
  SubgroupLattice& operator=(SubgroupLattice&&) noexcept;
  ~SubgroupLattice();

  const FiniteGroup& group() const { return *group_; }

  // --- element table ---
  std::uint32_t element_count() const { return n_; }
  const Permutation& element(EltIdx i) const { return elements_[i]; }
  EltIdx element_index(const Permutation& p) const;
  EltIdx mult(EltIdx a, EltIdx b) const { return mult_[std::size_t(a) * n_ + b]; }
  EltIdx inv(EltIdx a) const { return inv_[a]; }
  EltIdx conj_elt(EltIdx a, EltIdx by) const { return mult(mult(inv_[by], a), by); }
  std::uint64_t element_order(EltIdx i) const { return elt_order_[i]; }

  // --- subgroup table ---
  SubIdx size() const { return static_cast<SubIdx>(subs_.size()); }
  SubIdx bottom() const { return 0; }
  SubIdx top() const { return size() - 1; }
  std::uint64_t order_of(SubIdx s) const { return sub_order_[s]; }
  const Bitset& bits(SubIdx s) const { return subs_[s]; }
  const std::vector<EltIdx>& gens_of(SubIdx s) const { return sub_gens_[s]; }
  SubIdx index_of_bits(const Bitset& b) const;
  FiniteGroup as_group(SubIdx s) const;
  SubIdx locate(const FiniteGroup& sub) const;

  bool contains(SubIdx sub, SubIdx amb) const { return subs_[sub].is_subset_of(subs_[amb]); }

  /// Strict lexicographic order on sorted element lists (the fingerprint
  /// order used for all deterministic tie-breaking).
  static bool bits_less(const Bitset& a, const Bitset& b);

  // --- conjugation ---
  SubIdx conjugate_subgroup(SubIdx s, EltIdx by) const;
  const std::vector<std::vector<SubIdx>>& conjugacy_classes() const { return classes_; }
  std::uint32_t class_of(SubIdx s) const { return class_of_[s]; }
  /// Orbits of the subgroups of amb under conjugation by amb.
  std::vector<std::vector<SubIdx>> conjugacy_classes_in(SubIdx amb) const;

  // --- lattice algebra (ambient-relative, memoized) ---
  const std::vector<SubIdx>& subgroups_of(SubIdx amb) const;
  bool is_normal_in(SubIdx sub, SubIdx amb) const;
  SubIdx core_in(SubIdx sub, SubIdx amb) const;
  SubIdx normal_closure_in(SubIdx sub, SubIdx amb) const;
  SubIdx join_of(SubIdx a, SubIdx b) const;
  SubIdx meet_of(SubIdx a, SubIdx b) const;
  SubIdx join_all(const std::vector<SubIdx>& parts) const;
  SubIdx normalizer_of(SubIdx sub, SubIdx amb) const;
  SubIdx centralizer_of(SubIdx sub, SubIdx amb) const;

  /// Product-set test: the element set {hk} equals {kh}.
  bool permutes(SubIdx a, SubIdx b) const;

  // --- normal structure ---
  const std::vector<SubIdx>& normal_subgroups_of(SubIdx amb) const;
  std::vector<SubIdx> minimal_normal_subgroups_of(SubIdx amb) const;
  const std::vector<SubIdx>& maximal_subgroups_of(SubIdx amb) const;
  NormalStructure normal_structure(SubIdx amb) const;
  SubIdx frattini(SubIdx amb) const;
  SubIdx fitting(SubIdx amb) const;

  /// Chief series chosen deterministically (smallest candidate by order,
  /// then fingerprint). `through` forces the series to pass through a
  /// normal subgroup.
  const ChiefSeries& chief_series(SubIdx amb) const;
  ChiefSeries chief_series_through(SubIdx amb, SubIdx through) const;
  /// Random tie-breaking variant, test hook for Jordan-Hoelder invariance.
  ChiefSeries chief_series_randomized(SubIdx amb, std::mt19937_64& rng) const;

  // --- structure predicates ---
  bool is_subnormal(SubIdx sub, SubIdx amb) const;   // normal-closure descent
  bool is_soluble(SubIdx amb) const;                 // chief factors of prime-power order
  bool is_supersoluble(SubIdx amb) const;            // chief factors of prime order
  bool is_nilpotent_subgroup(SubIdx s) const;        // one Sylow subgroup per prime
  bool is_cyclic_subgroup(SubIdx s) const;
  bool is_abelian_subgroup(SubIdx s) const;

  bool hypercyclically_embedded(SubIdx e, SubIdx amb) const;
  SubIdx z_u_hypercentre(SubIdx amb) const;

  // --- classical permutability ---
  std::vector<SubIdx> sylows_of(SubIdx amb, std::uint64_t p) const;
  bool s_permutable(SubIdx h, SubIdx amb) const;
  SubIdx s_core(SubIdx h, SubIdx amb) const;
  bool c_normal(SubIdx h, SubIdx amb) const;
  struct Supplement {
    bool ok = false;
    SubIdx t = 0;
  };
  Supplement weakly_s_permutable(SubIdx h, SubIdx amb) const;

 private:
  SubgroupLattice() = default;

  Bitset close_gens(const std::vector<EltIdx>& gens) const;
  Bitset conj_bits(const Bitset& s, EltIdx by) const;
  ChiefSeries make_chief_series(SubIdx amb, SubIdx through,
                                std::mt19937_64* rng) const;

  std::shared_ptr<const FiniteGroup> group_;
  std::uint32_t n_ = 0;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, EltIdx, Permutation::Hash> elt_index_;
  std::vector<EltIdx> mult_;
  std::vector<EltIdx> inv_;
  std::vector<std::uint64_t> elt_order_;
  std::vector<EltIdx> group_gens_;  // ambient generators as element indices

  std::vector<Bitset> subs_;
  std::vector<std::uint64_t> sub_order_;
  std::vector<std::vector<EltIdx>> sub_gens_;
  std::map<Bitset, SubIdx> sub_index_;  // keyed by numeric bitset order
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<SubIdx>> classes_;

  struct Cache;
  std::unique_ptr<Cache> cache_;
};

}  // namespace sigma
