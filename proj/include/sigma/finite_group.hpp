#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sigma/permutation.hpp"
#include "sigma/stabilizer_chain.hpp"

namespace sigma {

/// Full element enumeration is allowed up to this order; larger groups are
/// restricted to stabilizer-chain queries (order, membership).
inline constexpr std::uint64_t kEnumerationCutoff = 200000;

/// A finite permutation group given by degree and generators. Values are
/// immutable; order, element list and stabilizer chain are cached lazily
/// and the caches are safe to fill from concurrent readers.
///
/// Subgroups produced by the operations below carry a reference to the
/// group they were derived from (the parent).
class FiniteGroup {
 public:
  FiniteGroup(Point degree, std::vector<Permutation> generators);
  static FiniteGroup trivial(Point degree);

  Point degree() const;
  const std::vector<Permutation>& generators() const;

  const FiniteGroup* parent() const;  // nullptr at top level
  FiniteGroup with_parent(const FiniteGroup& parent) const;

  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }
  bool is_abelian() const;
  bool is_cyclic() const;

  bool contains(const Permutation& p) const;
  bool contains_group(const FiniteGroup& h) const;  // every generator of h

  /// All elements, sorted lexicographically by image array. Throws
  /// std::runtime_error if order() exceeds kEnumerationCutoff.
  const std::vector<Permutation>& elements() const;

  const StabilizerChain& chain() const;

  /// Mutual generator membership (spec's notion of subgroup equality).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  explicit FiniteGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
};

/// sub <= ambient, validated at construction.
struct SubgroupPair {
  FiniteGroup sub;
  FiniteGroup ambient;
  SubgroupPair(FiniteGroup sub_, FiniteGroup ambient_);
};

FiniteGroup group_from_generators(Point degree, std::vector<Permutation> gens);

/// <seeds> as a subgroup of ambient; every seed must lie in ambient.
FiniteGroup subgroup_generated(const FiniteGroup& ambient, std::vector<Permutation> seeds);

/// Smallest normal subgroup of ambient containing h.
FiniteGroup normal_closure(const FiniteGroup& ambient, const FiniteGroup& h);

/// Largest normal subgroup of ambient contained in h (the normal core).
FiniteGroup core(const FiniteGroup& ambient, const FiniteGroup& h);

bool is_normal_in(const FiniteGroup& h, const FiniteGroup& ambient);

/// Both require ambient to be enumerable (element scan).
FiniteGroup normalizer(const FiniteGroup& ambient, const FiniteGroup& h);
FiniteGroup centralizer(const FiniteGroup& ambient, const FiniteGroup& h);

/// HK == KH as element sets. Both groups must be enumerable.
bool permutes(const FiniteGroup& h, const FiniteGroup& k);

/// Cardinality of the product set HK (always |H||K| / |H meet K|).
std::uint64_t product_set_size(const FiniteGroup& h, const FiniteGroup& k);

FiniteGroup meet(const FiniteGroup& h, const FiniteGroup& k);
FiniteGroup join(const FiniteGroup& h, const FiniteGroup& k);

FiniteGroup conjugate_subgroup(const FiniteGroup& h, const Permutation& x);

/// A Sylow p-subgroup; the trivial subgroup when p does not divide |G|.
FiniteGroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

/// Faithful permutation representation of g / n on the right cosets of n,
/// with the projection map for pushing subgroups forward.
class Quotient {
 public:
  const FiniteGroup& group() const { return group_; }
  Permutation project(const Permutation& g) const;
  FiniteGroup push(const FiniteGroup& sub) const;  // H -> HN/N

 private:
  friend Quotient quotient_group(const FiniteGroup&, const FiniteGroup&);
  FiniteGroup source_;
  FiniteGroup kernel_;
  FiniteGroup group_;
  std::vector<Permutation> reps_;
  std::unordered_map<Permutation, Point, Permutation::Hash> coset_of_;

  Quotient(FiniteGroup source, FiniteGroup kernel, FiniteGroup group,
           std::vector<Permutation> reps,
           std::unordered_map<Permutation, Point, Permutation::Hash> coset_of)
      : source_(std::move(source)),
        kernel_(std::move(kernel)),
        group_(std::move(group)),
        reps_(std::move(reps)),
        coset_of_(std::move(coset_of)) {}
};

Quotient quotient_group(const FiniteGroup& g, const FiniteGroup& n);

struct StructureFlags {
  bool soluble = false;
  bool nilpotent = false;
};

/// Solubility via the derived series, nilpotency via the lower central
/// series, both run down to the trivial subgroup or a fixed point.
StructureFlags structure_predicates(const FiniteGroup& g);

FiniteGroup derived_subgroup(const FiniteGroup& g);

/// Small generating set for the subgroup formed by `elements` (greedy).
std::vector<Permutation> reduce_generators(Point degree, const std::vector<Permutation>& elements);

}  // namespace sigma
