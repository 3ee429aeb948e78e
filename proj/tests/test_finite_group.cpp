#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sigma/finite_group.hpp"

using namespace sigma;

namespace {

Permutation perm(const std::string& cycles, Point degree) {
  return Permutation::parse_cycles(cycles, degree);
}

FiniteGroup symmetric4() {
  return FiniteGroup(4, {perm("(0 1)", 4), perm("(0 1 2 3)", 4)});
}

FiniteGroup alternating5() {
  return FiniteGroup(5, {perm("(0 1 2)", 5), perm("(0 1 2 3 4)", 5)});
}

FiniteGroup frob21() {
  return FiniteGroup(7, {perm("(0 1 2 3 4 5 6)", 7), perm("(1 2 4)(3 6 5)", 7)});
}

}  // namespace

TEST_CASE("orders match the closure oracle") {
  CHECK(symmetric4().order() == 24);
  CHECK(oracles::order(symmetric4()) == 24);
  CHECK(alternating5().order() == 60);
  CHECK(oracles::order(alternating5()) == 60);
  CHECK(frob21().order() == 21);
  CHECK(oracles::order(frob21()) == 21);
  CHECK_FALSE(frob21().is_abelian());
  CHECK(FiniteGroup::trivial(5).order() == 1);
}

TEST_CASE("stabilizer chain order equals naive closure on random subgroups of S6") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 25; ++t) {
    std::vector<Permutation> gens;
    int k = 1 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) {
      std::vector<Point> im(6);
      for (Point j = 0; j < 6; ++j) im[j] = j;
      std::shuffle(im.begin(), im.end(), rng);
      gens.emplace_back(std::move(im));
    }
    FiniteGroup g(6, gens);
    CHECK(g.order() == oracles::closure(6, gens).size());
  }
}

TEST_CASE("large groups answer order and membership without enumeration") {
  // S9 is past the enumeration cutoff? No: 362880 > 200000, good.
  FiniteGroup s9(9, {perm("(0 1)", 9), perm("(0 1 2 3 4 5 6 7 8)", 9)});
  CHECK(s9.order() == 362880);
  CHECK(s9.contains(perm("(2 5)(3 7)", 9)));
  CHECK_THROWS_AS(s9.elements(), std::runtime_error);
}

TEST_CASE("contains agrees with enumerated elements") {
  FiniteGroup a4(4, {perm("(0 1 2)", 4), perm("(1 2 3)", 4)});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(perm("(0 1)", 4)));  // odd
  CHECK(a4.contains(perm("(0 1)(2 3)", 4)));
  CHECK(a4.contains(Permutation::identity(4)));
  FiniteGroup s4 = symmetric4();
  int count = 0;
  for (const Permutation& e : s4.elements())
    if (a4.contains(e)) ++count;
  CHECK(count == 12);
}

TEST_CASE("subgroup_generated validates seeds and builds the join") {
  FiniteGroup s5(5, {perm("(0 1)", 5), perm("(0 1 2 3 4)", 5)});
  std::vector<Permutation> three_cycles;
  for (const Permutation& e : s5.elements())
    if (e.order() == 3) three_cycles.push_back(e);
  FiniteGroup gen = subgroup_generated(s5, three_cycles);
  CHECK(gen.order() == 60);
  CHECK(gen.parent() != nullptr);

  CHECK(subgroup_generated(s5, {}).order() == 1);
  CHECK(subgroup_generated(symmetric4(), {perm("(0 1)", 4)}).order() == 2);
  CHECK_THROWS_AS(subgroup_generated(alternating5(), {perm("(0 1)", 5)}), std::invalid_argument);
}

TEST_CASE("core and normal closure") {
  FiniteGroup s4 = symmetric4();
  // point stabilizer of 3: S3 on {0,1,2}
  FiniteGroup stab = subgroup_generated(s4, {perm("(0 1)", 4), perm("(0 1 2)", 4)});
  CHECK(stab.order() == 6);
  CHECK(core(s4, stab).order() == 1);

  FiniteGroup v4 = subgroup_generated(s4, {perm("(0 1)(2 3)", 4), perm("(0 2)(1 3)", 4)});
  CHECK(core(s4, v4) == v4);  // normal subgroup is its own core

  FiniteGroup a5 = alternating5();
  FiniteGroup h = subgroup_generated(a5, {perm("(0 1 2)", 5)});
  CHECK(normal_closure(a5, h).order() == 60);  // A5 simple

  // idempotence
  FiniteGroup nc = normal_closure(s4, subgroup_generated(s4, {perm("(0 1)", 4)}));
  CHECK(normal_closure(s4, nc) == nc);
  FiniteGroup c = core(s4, stab);
  CHECK(core(s4, c) == c);
}

TEST_CASE("normalizer and centralizer") {
  FiniteGroup s4 = symmetric4();
  FiniteGroup c3 = subgroup_generated(s4, {perm("(0 1 2)", 4)});
  CHECK(normalizer(s4, c3).order() == 6);

  FiniteGroup v4 = subgroup_generated(s4, {perm("(0 1)(2 3)", 4), perm("(0 2)(1 3)", 4)});
  CHECK(normalizer(s4, v4) == s4);
  CHECK(centralizer(s4, v4) == v4);
}

TEST_CASE("permutes agrees with the product-set oracle") {
  FiniteGroup s4 = symmetric4();
  FiniteGroup h = subgroup_generated(s4, {perm("(0 1)(2 3)", 4)});
  FiniteGroup k = subgroup_generated(s4, {perm("(0 1 2)", 4)});
  CHECK_FALSE(permutes(h, k));
  CHECK_FALSE(oracles::permutes(h, k));

  FiniteGroup a4 = subgroup_generated(s4, {perm("(0 1 2)", 4), perm("(1 2 3)", 4)});
  FiniteGroup any = subgroup_generated(s4, {perm("(0 1)", 4)});
  CHECK(permutes(a4, any));  // normal subgroup permutes with everything
  CHECK(oracles::permutes(a4, any));
}

TEST_CASE("product formula |HK| |HmeetK| = |H| |K| on random subgroup pairs") {
  std::mt19937_64 rng(4242);
  FiniteGroup s4 = symmetric4();
  const auto& elems = s4.elements();
  for (int t = 0; t < 30; ++t) {
    FiniteGroup h = subgroup_generated(s4, {elems[rng() % elems.size()]});
    FiniteGroup k = subgroup_generated(s4, {elems[rng() % elems.size()]});
    CHECK(product_set_size(h, k) * meet(h, k).order() == h.order() * k.order());
  }
}

TEST_CASE("meet and join basics") {
  FiniteGroup s4 = symmetric4();
  FiniteGroup h = subgroup_generated(s4, {perm("(0 1 2)", 4)});
  CHECK(meet(h, h) == h);
  CHECK(join(h, FiniteGroup::trivial(4)) == h);

  FiniteGroup p1 = sylow_subgroup(s4, 2);
  CHECK(p1.order() == 8);
  // find a distinct conjugate and intersect
  FiniteGroup p2 = p1;
  for (const Permutation& x : s4.elements()) {
    FiniteGroup cand = conjugate_subgroup(p1, x);
    if (!(cand == p1)) {
      p2 = cand;
      break;
    }
  }
  CHECK_FALSE(p2 == p1);
  CHECK(meet(p1, p2).order() == 4);
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(symmetric4(), 2).order() == 8);
  CHECK(sylow_subgroup(symmetric4(), 3).order() == 3);
  CHECK(sylow_subgroup(symmetric4(), 5).order() == 1);
  CHECK_THROWS_AS(sylow_subgroup(symmetric4(), 4), std::invalid_argument);

  FiniteGroup f = frob21();
  FiniteGroup p7 = sylow_subgroup(f, 7);
  CHECK(p7.order() == 7);
  CHECK(is_normal_in(p7, f));
}

TEST_CASE("quotient groups act faithfully on cosets") {
  FiniteGroup s4 = symmetric4();
  Quotient q1 = quotient_group(s4, s4);
  CHECK(q1.group().order() == 1);

  FiniteGroup v4 = subgroup_generated(s4, {perm("(0 1)(2 3)", 4), perm("(0 2)(1 3)", 4)});
  Quotient q = quotient_group(s4, v4);
  CHECK(q.group().order() == 6);
  CHECK(q.group().degree() == 6);
  CHECK_FALSE(q.group().is_abelian());

  // pushing a subgroup H forward gives |HN| / |N|
  FiniteGroup d8 = sylow_subgroup(s4, 2);
  CHECK(q.push(d8).order() == join(d8, v4).order() / 4);

  FiniteGroup a4 = subgroup_generated(s4, {perm("(0 1 2)", 4), perm("(1 2 3)", 4)});
  CHECK_THROWS_AS(quotient_group(s4, subgroup_generated(s4, {perm("(0 1)", 4)})),
                  std::invalid_argument);
  CHECK(quotient_group(s4, a4).group().order() == 2);
}

TEST_CASE("solubility and nilpotency via series") {
  CHECK_FALSE(structure_predicates(alternating5()).soluble);
  CHECK(structure_predicates(symmetric4()).soluble);
  CHECK_FALSE(structure_predicates(symmetric4()).nilpotent);

  FiniteGroup f = frob21();
  auto fl = structure_predicates(f);
  CHECK(fl.soluble);
  CHECK_FALSE(fl.nilpotent);

  FiniteGroup d8 = sylow_subgroup(symmetric4(), 2);
  auto dl = structure_predicates(FiniteGroup(4, d8.generators()));
  CHECK(dl.soluble);
  CHECK(dl.nilpotent);
}

TEST_CASE("subgroup pair validation") {
  CHECK_THROWS_AS(SubgroupPair(FiniteGroup(5, {perm("(0 1)", 5)}), alternating5()),
                  std::invalid_argument);
  SubgroupPair ok(subgroup_generated(symmetric4(), {perm("(0 1)", 4)}), symmetric4());
  CHECK(ok.ambient.order() == 24);
}
