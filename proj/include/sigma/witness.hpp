#pragma once

#include <string>
#include <vector>

#include "sigma/finite_group.hpp"
#include "sigma/sigma_partition.hpp"

namespace sigma {

enum class WitnessKind { subnormal_chain, hall_set, supplement, core_generators };

/// A checkable certificate attached to a positive predicate answer.
struct SigmaWitness {
  WitnessKind kind;
  std::vector<FiniteGroup> groups;
  std::string summary() const;
};

/// Everything needed to re-verify "H is weakly sigma-permutable in G"
/// without consulting the lattice machinery that produced it.
struct WeakPermutabilityWitness {
  FiniteGroup subject;                 // H
  FiniteGroup supplement;              // T with G = HT
  std::vector<FiniteGroup> chain;      // T = chain[0] <= ... <= chain.back() = G
  /// Sigma-permutable subgroups of H whose join covers H meet T, each with
  /// the complete Hall sigma-set it permutes against.
  struct CorePart {
    FiniteGroup part;
    std::vector<FiniteGroup> hall_set;
  };
  std::vector<CorePart> core_cover;

  std::vector<SigmaWitness> to_witnesses() const;
};

// Independent verifiers. These work on element sets through the
// FiniteGroup primitives only (permutes / contains / order / core) and
// never touch a SubgroupLattice.

/// Each chain step is normal or has sigma-primary quotient over its core.
bool verify_subnormal_chain(const std::vector<FiniteGroup>& chain, const FiniteGroup& g,
                            const SigmaPartition& sigma);

/// Members have pairwise-coprime-against-index orders: one Hall
/// sigma_i-subgroup per block of sigma(|G|).
bool verify_hall_set(const std::vector<FiniteGroup>& members, const FiniteGroup& g,
                     const SigmaPartition& sigma);

/// h permutes with every conjugate of every member.
bool verify_sigma_permutable(const FiniteGroup& h, const std::vector<FiniteGroup>& members,
                             const FiniteGroup& g, const SigmaPartition& sigma);

bool verify_weak_witness(const WeakPermutabilityWitness& w, const FiniteGroup& g,
                         const SigmaPartition& sigma);

}  // namespace sigma
