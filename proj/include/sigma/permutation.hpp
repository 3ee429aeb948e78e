#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sigma {

using Point = std::uint32_t;

/// A permutation of {0..degree-1}, stored as its image array.
///
/// Composition convention used throughout this project: (p * q) means
/// "apply p first, then q", i.e. (p * q)[i] == q[p[i]]. Conjugation
/// p ^ x is x^-1 * p * x under the same convention.
class Permutation {
 public:
  /// Identity of the given degree.
  static Permutation identity(Point degree);

  /// Validates that `images` is a bijection; throws std::invalid_argument.
  explicit Permutation(std::vector<Point> images);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::uint64_t order() const;  // lcm of cycle lengths

  /// Cycles of length >= 2, each rotated to start at its smallest point,
  /// sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Disjoint-cycle notation with 0-based points, e.g. "(0 1 2)(3 4)".
  /// The identity prints as "()".
  std::string to_cycle_string() const;

  /// Parses disjoint-cycle notation. Points must be < degree and no point
  /// may repeat. "()" is the identity. Throws std::invalid_argument.
  static Permutation parse_cycles(const std::string& text, Point degree);

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  struct Hash {
    std::size_t operator()(const Permutation& p) const noexcept;
  };

 private:
  struct unchecked_tag {};
  Permutation(std::vector<Point> images, unchecked_tag) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation conjugate(const Permutation&, const Permutation&);
};

/// compose(p, q): apply p, then q. Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

/// conjugate(p, x) = x^-1 * p * x.
Permutation conjugate(const Permutation& p, const Permutation& x);

inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

/// Commutator [a, b] = a^-1 * b^-1 * a * b.
Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace sigma
