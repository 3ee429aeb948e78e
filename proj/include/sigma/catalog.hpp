#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sigma/finite_group.hpp"
#include "sigma/sigma_partition.hpp"

namespace sigma {

// Classical families at their minimal natural degrees: cyclic(n) on n
// points, dihedral(2n) on n points, symmetric/alternating(n) on n points.

FiniteGroup cyclic(std::uint64_t n);
/// Dihedral group given by its order (even, >= 6).
FiniteGroup dihedral(std::uint64_t order);
FiniteGroup symmetric(std::uint32_t n);
FiniteGroup alternating(std::uint32_t n);
FiniteGroup elementary_abelian(std::uint64_t p, std::uint32_t k);

/// The non-abelian group of order 21 on 7 points (Sylow 7 normal).
FiniteGroup frobenius21();

/// Direct product on disjoint point sets, with the factor embeddings.
struct DirectProduct {
  FiniteGroup group;
  Point left_degree = 0;
  Point right_degree = 0;
  /// Lift a subgroup of the left/right factor into the product.
  FiniteGroup embed_left(const FiniteGroup& sub) const;
  FiniteGroup embed_right(const FiniteGroup& sub) const;
};
DirectProduct direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// The order-1260 worked example: the product of the non-abelian group of
/// order 21 with the alternating group of degree 5, together with its
/// named cast of subgroups and the partition {2,3,5} | {7}.
struct Example12 {
  FiniteGroup G;
  FiniteGroup B;          // order 12 inside the alternating factor
  FiniteGroup A;          // a Sylow 5-subgroup of the alternating factor
  FiniteGroup C3_factor;  // complement of order 3 in the order-21 factor
  FiniteGroup C7;
  FiniteGroup A5_factor;
  FiniteGroup T1;  // (order-21 factor) x A, order 105
  FiniteGroup T2;  // C7 x A5, order 420
  FiniteGroup H;   // B C3, order 36
  FiniteGroup A5C3;  // order 180 Hall subgroup
  SigmaPartition sigma;
};
Example12 example_1_2();

struct CatalogEntry {
  std::string name;
  std::string expression;  // manifest constructor expression
  FiniteGroup group;
  std::uint64_t expected_order = 0;
  std::set<std::string> tags;
};

/// Curated corpus: classical families, pairwise direct products within the
/// order bound, the order-21 and order-1260 named groups, and conjugacy
/// class representatives of the subgroups of symmetric(n) for n <= 5.
/// Every entry's order is validated against its expected order; entries
/// with identical degree and element set are deduplicated.
std::vector<CatalogEntry> corpus(std::uint64_t max_order);

/// Evaluates a manifest constructor expression, e.g.
/// "product(frobenius21(), alternating(5))" or
/// "subgroup(symmetric(4), \"(0 1)(2 3)\")".
FiniteGroup parse_constructor(const std::string& expr);

/// One "name = expression" line per entry.
std::string catalog_manifest(const std::vector<CatalogEntry>& entries);

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& entries, const std::string& name);

}  // namespace sigma
