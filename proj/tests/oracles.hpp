#pragma once

// Test-only brute-force oracles. These deliberately avoid the library's
// stabilizer chain, lattice closure and predicate machinery so that the
// values they produce are independent checks on the implementations.

#include <cstdint>
#include <set>
#include <vector>

#include "sigma/finite_group.hpp"
#include "sigma/permutation.hpp"

namespace oracles {

using Images = std::vector<sigma::Point>;

/// Naive set closure of the generated group; returns all image arrays.
std::set<Images> closure(sigma::Point degree, const std::vector<sigma::Permutation>& gens);

std::uint64_t order(const sigma::FiniteGroup& g);

/// All subgroups of g as element-index sets over the sorted element list,
/// found by repeatedly extending closed sets one element at a time. Works
/// directly on a multiplication table built here.
std::vector<std::set<std::uint32_t>> all_subgroups(const sigma::FiniteGroup& g);

/// Subset-scan enumeration: tries every subset of each divisor size.
/// Only feasible for |g| <= ~16; independent of all_subgroups.
std::vector<std::set<std::uint32_t>> all_subgroups_subset_scan(const sigma::FiniteGroup& g);

/// HK == KH via explicit product sets on elements.
bool permutes(const sigma::FiniteGroup& h, const sigma::FiniteGroup& k);

/// Classical subnormality by descending normal closures, written against
/// FiniteGroup primitives only.
bool subnormal(const sigma::FiniteGroup& h, const sigma::FiniteGroup& g);

}  // namespace oracles
