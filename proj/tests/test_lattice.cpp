#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sigma/subgroup_lattice.hpp"

using namespace sigma;

namespace {

Permutation perm(const std::string& c, Point d) { return Permutation::parse_cycles(c, d); }

FiniteGroup symmetric4() { return FiniteGroup(4, {perm("(0 1)", 4), perm("(0 1 2 3)", 4)}); }
FiniteGroup alternating5() { return FiniteGroup(5, {perm("(0 1 2)", 5), perm("(0 1 2 3 4)", 5)}); }
FiniteGroup frob21() {
  return FiniteGroup(7, {perm("(0 1 2 3 4 5 6)", 7), perm("(1 2 4)(3 6 5)", 7)});
}
FiniteGroup dihedral8() { return FiniteGroup(4, {perm("(0 1 2 3)", 4), perm("(1 3)", 4)}); }

std::set<std::set<std::uint32_t>> lattice_as_sets(const SubgroupLattice& lat) {
  std::set<std::set<std::uint32_t>> out;
  for (SubIdx s = 0; s < lat.size(); ++s) {
    std::set<std::uint32_t> elems;
    const Bitset& b = lat.bits(s);
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i))
      elems.insert(static_cast<std::uint32_t>(i));
    out.insert(std::move(elems));
  }
  return out;
}

}  // namespace

TEST_CASE("lattice matches brute-force enumeration") {
  // element-augmentation oracle
  for (const FiniteGroup& g : {symmetric4(), frob21(), dihedral8(), alternating5()}) {
    SubgroupLattice lat = SubgroupLattice::build(g);
    auto oracle = oracles::all_subgroups(g);
    auto mine = lattice_as_sets(lat);
    CHECK(mine == std::set<std::set<std::uint32_t>>(oracle.begin(), oracle.end()));
  }
  // independent subset-scan oracle at very small orders
  for (const FiniteGroup& g :
       {dihedral8(), FiniteGroup(12, {perm("(0 1 2 3 4 5 6 7 8 9 10 11)", 12)})}) {
    SubgroupLattice lat = SubgroupLattice::build(g);
    auto oracle = oracles::all_subgroups_subset_scan(g);
    CHECK(lat.size() == oracle.size());
  }
}

TEST_CASE("frozen subgroup counts") {
  CHECK(SubgroupLattice::build(symmetric4()).size() == 30);
  CHECK(SubgroupLattice::build(frob21()).size() == 10);
  CHECK(SubgroupLattice::build(alternating5()).size() == 59);
  CHECK(SubgroupLattice::build(FiniteGroup(7, {perm("(0 1 2 3 4 5 6)", 7)})).size() == 2);
}

TEST_CASE("F21 lattice composition") {
  SubgroupLattice lat = SubgroupLattice::build(frob21());
  int order3 = 0, order7 = 0;
  for (SubIdx s = 0; s < lat.size(); ++s) {
    if (lat.order_of(s) == 3) ++order3;
    if (lat.order_of(s) == 7) ++order7;
  }
  CHECK(order3 == 7);
  CHECK(order7 == 1);
}

TEST_CASE("lattice refuses groups beyond the cutoff") {
  FiniteGroup s7(7, {perm("(0 1)", 7), perm("(0 1 2 3 4 5 6)", 7)});
  CHECK(s7.order() == 5040);
  CHECK_THROWS_AS(SubgroupLattice::build(s7), CutoffExceeded);
}

TEST_CASE("conjugacy classes of subgroups") {
  SubgroupLattice s4 = SubgroupLattice::build(symmetric4());
  CHECK(s4.conjugacy_classes().size() == 11);
  std::uint64_t total = 0;
  for (const auto& cls : s4.conjugacy_classes()) {
    total += cls.size();
    CHECK(24 % cls.size() == 0);  // class size divides |G|
  }
  CHECK(total == 30);

  SubgroupLattice a5 = SubgroupLattice::build(alternating5());
  for (const auto& cls : a5.conjugacy_classes())
    if (a5.order_of(cls.front()) == 12) CHECK(cls.size() == 5);

  // abelian ambient: every class is a singleton
  SubgroupLattice c12 =
      SubgroupLattice::build(FiniteGroup(12, {perm("(0 1 2 3 4 5 6 7 8 9 10 11)", 12)}));
  for (const auto& cls : c12.conjugacy_classes()) CHECK(cls.size() == 1);
}

TEST_CASE("normal structure of S4") {
  SubgroupLattice lat = SubgroupLattice::build(symmetric4());
  NormalStructure ns = lat.normal_structure(lat.top());
  std::multiset<std::uint64_t> normal_orders;
  for (SubIdx s : ns.normal_subgroups) normal_orders.insert(lat.order_of(s));
  CHECK(normal_orders == std::multiset<std::uint64_t>{1, 4, 12, 24});
  REQUIRE(ns.minimal_normal_subgroups.size() == 1);
  CHECK(lat.order_of(ns.minimal_normal_subgroups.front()) == 4);
  for (SubIdx m : ns.maximal_subgroups) {
    std::uint64_t o = lat.order_of(m);
    CHECK((o == 12 || o == 8 || o == 6));
  }
}

TEST_CASE("a simple ambient group is its own minimal normal subgroup") {
  SubgroupLattice lat = SubgroupLattice::build(alternating5());
  auto mins = lat.minimal_normal_subgroups_of(lat.top());
  REQUIRE(mins.size() == 1);
  CHECK(mins.front() == lat.top());
}

TEST_CASE("chief series") {
  SubgroupLattice s4 = SubgroupLattice::build(symmetric4());
  const ChiefSeries& cs = s4.chief_series(s4.top());
  std::vector<std::uint64_t> orders;
  for (const ChiefFactor& f : cs.factors) orders.push_back(f.order);
  CHECK(orders == std::vector<std::uint64_t>{4, 3, 2});

  SubgroupLattice c8 = SubgroupLattice::build(FiniteGroup(8, {perm("(0 1 2 3 4 5 6 7)", 8)}));
  CHECK(c8.chief_series(c8.top()).factors.size() == 3);
  for (const ChiefFactor& f : c8.chief_series(c8.top()).factors) CHECK(f.order == 2);
}

TEST_CASE("chief factor order multiset is invariant under random tie-breaking") {
  std::mt19937_64 rng(20240818);
  for (const FiniteGroup& g : {symmetric4(), frob21(), dihedral8()}) {
    SubgroupLattice lat = SubgroupLattice::build(g);
    std::multiset<std::uint64_t> reference;
    for (const ChiefFactor& f : lat.chief_series(lat.top()).factors) reference.insert(f.order);
    for (int t = 0; t < 8; ++t) {
      ChiefSeries cs = lat.chief_series_randomized(lat.top(), rng);
      std::multiset<std::uint64_t> got;
      for (const ChiefFactor& f : cs.factors) got.insert(f.order);
      CHECK(got == reference);
    }
  }
}

TEST_CASE("frattini and fitting subgroups") {
  SubgroupLattice c4 = SubgroupLattice::build(FiniteGroup(4, {perm("(0 1 2 3)", 4)}));
  CHECK(c4.order_of(c4.frattini(c4.top())) == 2);

  FiniteGroup e8(6, {perm("(0 1)", 6), perm("(2 3)", 6), perm("(4 5)", 6)});
  SubgroupLattice le8 = SubgroupLattice::build(e8);
  CHECK(le8.order_of(le8.frattini(le8.top())) == 1);

  SubgroupLattice s4 = SubgroupLattice::build(symmetric4());
  SubIdx fit = s4.fitting(s4.top());
  CHECK(s4.order_of(fit) == 4);
  CHECK(s4.is_normal_in(fit, s4.top()));
  CHECK(s4.is_nilpotent_subgroup(fit));
  CHECK(s4.order_of(s4.frattini(s4.top())) == 1);
}

TEST_CASE("classical subnormality agrees with the descent oracle") {
  FiniteGroup s4g = symmetric4();
  SubgroupLattice lat = SubgroupLattice::build(s4g);
  SubIdx dbl = lat.locate(subgroup_generated(s4g, {perm("(0 1)(2 3)", 4)}));
  SubIdx transposition = lat.locate(subgroup_generated(s4g, {perm("(0 1)", 4)}));
  CHECK(lat.is_subnormal(dbl, lat.top()));
  CHECK_FALSE(lat.is_subnormal(transposition, lat.top()));

  for (SubIdx s = 0; s < lat.size(); ++s) {
    bool expected = oracles::subnormal(lat.as_group(s), s4g);
    CHECK(lat.is_subnormal(s, lat.top()) == expected);
    if (lat.is_normal_in(s, lat.top())) CHECK(lat.is_subnormal(s, lat.top()));
  }

  // every subgroup of a nilpotent group is subnormal
  SubgroupLattice d8 = SubgroupLattice::build(dihedral8());
  for (SubIdx s = 0; s < d8.size(); ++s) CHECK(d8.is_subnormal(s, d8.top()));
}

TEST_CASE("supersolubility via chief factors") {
  SubgroupLattice s3 =
      SubgroupLattice::build(FiniteGroup(3, {perm("(0 1)", 3), perm("(0 1 2)", 3)}));
  CHECK(s3.is_supersoluble(s3.top()));
  SubgroupLattice s4 = SubgroupLattice::build(symmetric4());
  CHECK_FALSE(s4.is_supersoluble(s4.top()));
  CHECK(s4.is_soluble(s4.top()));
  SubgroupLattice c12 =
      SubgroupLattice::build(FiniteGroup(12, {perm("(0 1 2 3 4 5 6 7 8 9 10 11)", 12)}));
  CHECK(c12.is_supersoluble(c12.top()));
  SubgroupLattice a5 = SubgroupLattice::build(alternating5());
  CHECK_FALSE(a5.is_soluble(a5.top()));
}

TEST_CASE("lattice algebra cross-checks") {
  FiniteGroup s4g = symmetric4();
  SubgroupLattice lat = SubgroupLattice::build(s4g);

  // permutes(H, K) iff |<H,K>| == |H||K| / |H meet K|
  std::mt19937_64 rng(5150);
  for (int t = 0; t < 120; ++t) {
    SubIdx a = rng() % lat.size();
    SubIdx b = rng() % lat.size();
    std::uint64_t join_order = lat.order_of(lat.join_of(a, b));
    std::uint64_t meet_order = lat.order_of(lat.meet_of(a, b));
    bool by_formula = join_order * meet_order == lat.order_of(a) * lat.order_of(b);
    CHECK(lat.permutes(a, b) == by_formula);
  }

  // core/normal closure: normal, idempotent, on the right side of H
  for (SubIdx s = 0; s < lat.size(); ++s) {
    SubIdx c = lat.core_in(s, lat.top());
    CHECK(lat.is_normal_in(c, lat.top()));
    CHECK(lat.contains(c, s));
    CHECK(lat.core_in(c, lat.top()) == c);
    SubIdx nc = lat.normal_closure_in(s, lat.top());
    CHECK(lat.is_normal_in(nc, lat.top()));
    CHECK(lat.contains(s, nc));
    CHECK(lat.normal_closure_in(nc, lat.top()) == nc);
  }
}

TEST_CASE("normalizer and centralizer in the lattice") {
  FiniteGroup s4g = symmetric4();
  SubgroupLattice lat = SubgroupLattice::build(s4g);
  SubIdx c3 = lat.locate(subgroup_generated(s4g, {perm("(0 1 2)", 4)}));
  CHECK(lat.order_of(lat.normalizer_of(c3, lat.top())) == 6);
  SubIdx v4 =
      lat.locate(subgroup_generated(s4g, {perm("(0 1)(2 3)", 4), perm("(0 2)(1 3)", 4)}));
  CHECK(lat.normalizer_of(v4, lat.top()) == lat.top());
  CHECK(lat.centralizer_of(v4, lat.top()) == v4);
}

TEST_CASE("hypercyclic embedding and the U-hypercentre") {
  SubgroupLattice s4 = SubgroupLattice::build(symmetric4());
  CHECK(s4.hypercyclically_embedded(s4.bottom(), s4.top()));
  CHECK(s4.order_of(s4.z_u_hypercentre(s4.top())) == 1);

  SubgroupLattice s3 =
      SubgroupLattice::build(FiniteGroup(3, {perm("(0 1)", 3), perm("(0 1 2)", 3)}));
  CHECK(s3.z_u_hypercentre(s3.top()) == s3.top());

  // the hypercentre itself passes the embedding check
  for (const FiniteGroup& g : {symmetric4(), dihedral8(), frob21()}) {
    SubgroupLattice lat = SubgroupLattice::build(g);
    CHECK(lat.hypercyclically_embedded(lat.z_u_hypercentre(lat.top()), lat.top()));
  }
}

TEST_CASE("s-permutable subgroups of S4 are exactly 1, V4, A4, S4") {
  FiniteGroup s4g = symmetric4();
  SubgroupLattice lat = SubgroupLattice::build(s4g);
  // brute-force expectation from the product-set oracle
  std::set<std::uint64_t> sperm_orders;
  int count = 0;
  for (SubIdx s = 0; s < lat.size(); ++s) {
    bool expected = true;
    for (std::uint64_t p : {2, 3}) {
      for (SubIdx syl : lat.sylows_of(lat.top(), p))
        if (!oracles::permutes(lat.as_group(s), lat.as_group(syl))) expected = false;
    }
    CHECK(lat.s_permutable(s, lat.top()) == expected);
    if (expected) {
      ++count;
      sperm_orders.insert(lat.order_of(s));
    }
  }
  CHECK(count == 4);
  CHECK(sperm_orders == std::set<std::uint64_t>{1, 4, 12, 24});
}
