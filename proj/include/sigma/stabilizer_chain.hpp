#pragma once

#include <cstdint>
#include <vector>

#include "sigma/permutation.hpp"

namespace sigma {

/// Base and strong generating set for a permutation group, built with a
/// deterministic Schreier-Sims. Answers order and membership queries
/// without enumerating elements.
class StabilizerChain {
 public:
  static StabilizerChain build(Point degree, const std::vector<Permutation>& gens);

  Point degree() const { return degree_; }

  /// Group order. Throws std::overflow_error past 2^64.
  std::uint64_t order() const;

  bool contains(const Permutation& p) const;

  const std::vector<Point>& base() const { return base_; }

 private:
  struct Level {
    Point beta = 0;
    std::vector<Permutation> gens;    // strong generators fixing all earlier base points
    std::vector<std::int32_t> slot;   // point -> transversal slot, -1 if outside orbit
    std::vector<Permutation> trans;   // transversal element mapping beta -> point
    std::vector<Point> orbit;
  };

  explicit StabilizerChain(Point degree) : degree_(degree) {}

  void rebuild_orbit(std::size_t i);
  // Sift g through levels [start..); returns level where it stuck and the residue.
  std::pair<std::size_t, Permutation> sift_from(std::size_t start, Permutation g) const;

  Point degree_;
  std::vector<Level> levels_;
  std::vector<Point> base_;
};

}  // namespace sigma
