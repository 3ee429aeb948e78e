#include <random>

#include <stdexcept>

#include "doctest.h"
#include "sigma/permutation.hpp"

using sigma::Permutation;
using sigma::Point;

namespace {

Permutation perm(const std::string& cycles, Point degree) {
  return Permutation::parse_cycles(cycles, degree);
}

Permutation random_perm(std::mt19937_64& rng, Point degree) {
  std::vector<Point> im(degree);
  for (Point i = 0; i < degree; ++i) im[i] = i;
  std::shuffle(im.begin(), im.end(), rng);
  return Permutation(std::move(im));
}

}  // namespace

TEST_CASE("composition applies left factor first") {
  // (0 1 2) then (0 1) sends 0->0, 1->2, 2->1
  Permutation p = perm("(0 1 2)", 3);
  Permutation q = perm("(0 1)", 3);
  CHECK(compose(p, q) == perm("(1 2)", 3));
}

TEST_CASE("inverse of a 3-cycle") {
  CHECK(perm("(0 1 2)", 3).inverse() == perm("(0 2 1)", 3));
}

TEST_CASE("compose with inverse gives identity, random degree 8") {
  std::mt19937_64 rng(20240817);
  for (int t = 0; t < 50; ++t) {
    Permutation p = random_perm(rng, 8);
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
  }
}

TEST_CASE("conjugation relabels cycles") {
  Permutation p = perm("(0 1)", 4);
  Permutation x = perm("(0 2)(1 3)", 4);
  CHECK(conjugate(p, x) == perm("(2 3)", 4));
  // p^x = x^-1 p x as a product
  CHECK(conjugate(p, x) == x.inverse() * p * x);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(perm("(0 1)(2 3 4)", 5).order() == 6);
  CHECK(Permutation::identity(4).order() == 1);
}

TEST_CASE("cycle notation round trips") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    Permutation p = random_perm(rng, 9);
    CHECK(Permutation::parse_cycles(p.to_cycle_string(), 9) == p);
  }
  CHECK(Permutation::identity(5).to_cycle_string() == "()");
  CHECK(Permutation::parse_cycles("()", 5) == Permutation::identity(5));
}

TEST_CASE("cycle parser rejects malformed input") {
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 1", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_cycles("(0 1)(1 2)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_cycles("", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse_cycles("0 1 2", 3), std::invalid_argument);
}

TEST_CASE("image arrays must be bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("degree mismatch in composition is an error") {
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                  std::invalid_argument);
}
