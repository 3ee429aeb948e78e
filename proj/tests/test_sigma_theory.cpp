#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "sigma/catalog.hpp"
#include "sigma/sigma_context.hpp"

using namespace sigma;

namespace {

// shared fixtures; the 1260-element lattice is built once
SigmaAnalysis& g1260_analysis() {
  static SigmaAnalysis an(example_1_2().G);
  return an;
}

const Example12& ex12() {
  static Example12 ex = example_1_2();
  return ex;
}

SigmaContext& ctx1260() {
  static SigmaContext& c = g1260_analysis().context(ex12().sigma);
  return c;
}

SigmaAnalysis& s4_analysis() {
  static SigmaAnalysis an(symmetric(4));
  return an;
}

}  // namespace

TEST_CASE("hall subgroups") {
  SigmaAnalysis a5(alternating(5));
  SigmaContext& c = a5.context(SigmaPartition::parse("2,3|5"));
  auto halls23 = c.hall_subgroups(a5.lattice().top(), 0b01);
  CHECK(halls23.size() == 5);  // the five order-12 subgroups
  for (SubIdx h : halls23) CHECK(a5.lattice().order_of(h) == 12);
  // Pi covering sigma(G) gives G itself
  auto whole = c.hall_subgroups(a5.lattice().top(), 0b11);
  REQUIRE(whole.size() == 1);
  CHECK(whole.front() == a5.lattice().top());

  // the 1260 example: Hall subgroups of order 180 for block {2,3,5}
  SigmaContext& c12 = ctx1260();
  const SubgroupLattice& lat = g1260_analysis().lattice();
  auto halls = c12.hall_subgroups(lat.top(), 0b01);
  CHECK(!halls.empty());
  for (SubIdx h : halls) CHECK(lat.order_of(h) == 180);
  SubIdx a5c3 = lat.locate(ex12().A5C3);
  CHECK(std::find(halls.begin(), halls.end(), a5c3) != halls.end());
}

TEST_CASE("complete Hall sigma-sets") {
  SigmaAnalysis s4(symmetric(4));
  SigmaContext& c = s4.context(SigmaPartition::parse("2|3"));
  CHECK(c.complete_hall_sets(s4.lattice().top()).size() == 12);  // 3 Sylow2 x 4 Sylow3

  // sigma-primary group: the single set {G}
  SigmaAnalysis c9(cyclic(9));
  SigmaContext& cc = c9.context(SigmaPartition::parse("3"));
  auto sets = cc.complete_hall_sets(c9.lattice().top());
  REQUIRE(sets.size() == 1);
  REQUIRE(sets.front().members.size() == 1);
  CHECK(sets.front().members.front().second == c9.lattice().top());

  // 1260 example: sets of the form {order 180, order 7}
  auto sets1260 = ctx1260().complete_hall_sets(g1260_analysis().lattice().top());
  CHECK(sets1260.size() == 7);
  for (const auto& set : sets1260) {
    REQUIRE(set.members.size() == 2);
    CHECK(g1260_analysis().lattice().order_of(set.members[0].second) == 180);
    CHECK(g1260_analysis().lattice().order_of(set.members[1].second) == 7);
  }
}

TEST_CASE("sigma-full of Sylow type") {
  // soluble groups pass for every partition of pi(G)
  for (const FiniteGroup& g : {symmetric(4), dihedral(12), frobenius21()}) {
    SigmaAnalysis an(g);
    for (const SigmaPartition& sigma : SigmaPartition::all_partitions(an.pi()))
      CHECK(an.context(sigma).sylow_type(an.lattice().top()));
  }
  // sigma-primary group trivially passes
  SigmaAnalysis c8(cyclic(8));
  CHECK(c8.context(SigmaPartition::parse("2")).sylow_type(c8.lattice().top()));

  // A5 with {2,3}|{5}: an order-6 subgroup lies in no Hall {2,3}-subgroup
  SigmaAnalysis a5(alternating(5));
  CHECK_FALSE(a5.context(SigmaPartition::parse("2,3|5")).sylow_type(a5.lattice().top()));
  // but the singleton partition is fine (Sylow theory)
  CHECK(a5.context(SigmaPartition::parse("2|3|5")).sylow_type(a5.lattice().top()));

  // the worked example is sigma-full of Sylow type for its partition
  CHECK(ctx1260().sylow_type(g1260_analysis().lattice().top()));
}

TEST_CASE("sigma-subnormality") {
  SigmaContext& c = ctx1260();
  const SubgroupLattice& lat = g1260_analysis().lattice();
  SubIdx t1 = lat.locate(ex12().T1);
  CHECK(c.sigma_subnormal(t1, lat.top()));
  auto chain = c.subnormal_chain(t1, lat.top());
  REQUIRE(chain.size() >= 2);
  CHECK(chain.front() == t1);
  CHECK(chain.back() == lat.top());
  // one step suffices: G over the core of T1 is a sigma_1-group
  CHECK(chain.size() == 2);

  // H = G: trivially sigma-subnormal
  CHECK(c.sigma_subnormal(lat.top(), lat.top()));

  // T1 is not classically subnormal (its normal closure is all of G)
  CHECK_FALSE(lat.is_subnormal(t1, lat.top()));
}

TEST_CASE("singleton partition collapses sigma-subnormal to subnormal on S4") {
  SigmaAnalysis& an = s4_analysis();
  SigmaContext& c = an.context(SigmaPartition::parse("2|3"));
  const SubgroupLattice& lat = an.lattice();
  for (SubIdx s = 0; s < lat.size(); ++s)
    CHECK(c.sigma_subnormal(s, lat.top()) == lat.is_subnormal(s, lat.top()));
}

TEST_CASE("one-block partition makes everything sigma-subnormal and permutable") {
  SigmaAnalysis& an = s4_analysis();
  SigmaContext& c = an.context(SigmaPartition::parse("2,3"));
  const SubgroupLattice& lat = an.lattice();
  for (SubIdx s = 0; s < lat.size(); ++s) {
    CHECK(c.sigma_subnormal(s, lat.top()));
    CHECK(c.sigma_permutable(s, lat.top()));
  }
  CHECK(c.sigma_soluble(lat.top()));
  CHECK(c.sigma_nilpotent(lat.top()));
}

TEST_CASE("sigma-permutability in the worked example") {
  SigmaContext& c = ctx1260();
  const SubgroupLattice& lat = g1260_analysis().lattice();
  SubIdx b = lat.locate(ex12().B);
  SubIdx h = lat.locate(ex12().H);
  CHECK(c.sigma_permutable(b, lat.top()));
  CHECK_FALSE(c.sigma_permutable(h, lat.top()));

  // normal subgroups of a sigma-full group are sigma-permutable
  for (SubIdx n : lat.normal_subgroups_of(lat.top())) CHECK(c.sigma_permutable(n, lat.top()));

  // positive answers carry a verifiable Hall-set witness
  auto witness = c.sigma_permutable_witness(b, lat.top());
  REQUIRE(witness.has_value());
  std::vector<FiniteGroup> members;
  for (std::size_t i = 0; i < witness->members.size(); ++i)
    members.push_back(c.hall_member_group(*witness, i));
  CHECK(verify_sigma_permutable(ex12().B, members, ex12().G, ex12().sigma));
}

TEST_CASE("sigma-core") {
  SigmaContext& c = ctx1260();
  const SubgroupLattice& lat = g1260_analysis().lattice();
  SubIdx h = lat.locate(ex12().H);
  SubIdx b = lat.locate(ex12().B);
  CHECK(c.sigma_core(h, lat.top()) == b);

  // sigma-permutable subgroups are their own core
  CHECK(c.sigma_core(b, lat.top()) == b);

  // a non-subnormal C2 in S4 with singletons has trivial core
  SigmaAnalysis& s4 = s4_analysis();
  SigmaContext& cs = s4.context(SigmaPartition::parse("2|3"));
  FiniteGroup s4g = symmetric(4);
  SubIdx c2 = s4.locate(subgroup_generated(s4g, {Permutation::parse_cycles("(0 1)", 4)}));
  CHECK(cs.sigma_core(c2, s4.lattice().top()) == s4.lattice().bottom());

  // monotone and idempotent
  for (SubIdx s = 0; s < s4.lattice().size(); ++s) {
    SubIdx core = cs.sigma_core(s, s4.lattice().top());
    CHECK(s4.lattice().contains(core, s));
    CHECK(cs.sigma_core(core, s4.lattice().top()) == core);
  }
}

TEST_CASE("weak sigma-permutability in the worked example") {
  SigmaContext& c = ctx1260();
  const SubgroupLattice& lat = g1260_analysis().lattice();
  SubIdx b = lat.locate(ex12().B);
  auto rb = c.weakly_sigma_permutable(b, lat.top());
  CHECK(rb.ok);
  CHECK(lat.order_of(rb.supplement) == 105);

  // the paper's witness T1 works as a supplement
  SubIdx t1 = lat.locate(ex12().T1);
  CHECK(c.sigma_subnormal(t1, lat.top()));
  CHECK(lat.order_of(b) * lat.order_of(t1) == 1260 * lat.order_of(lat.meet_of(b, t1)));

  SubIdx h = lat.locate(ex12().H);
  auto rh = c.weakly_sigma_permutable(h, lat.top());
  CHECK(rh.ok);
  // T2 = C7 A5 supplies H: G = HT and H meet T = B inside the core
  SubIdx t2 = lat.locate(ex12().T2);
  CHECK(lat.meet_of(h, t2) == b);
  CHECK(lat.order_of(h) * lat.order_of(t2) == 1260 * lat.order_of(b));

  // H = G is weakly sigma-permutable with T = G
  auto rg = c.weakly_sigma_permutable(lat.top(), lat.top());
  CHECK(rg.ok);
  CHECK(rg.supplement == lat.top());

  // full witnesses re-verify through the independent element-set checker
  CHECK(verify_weak_witness(c.weak_witness(b, lat.top()), ex12().G, ex12().sigma));
  CHECK(verify_weak_witness(c.weak_witness(h, lat.top()), ex12().G, ex12().sigma));

  // sigma-permutable implies weakly sigma-permutable
  for (SubIdx s = 0; s < 40; ++s)
    if (c.sigma_permutable(s, lat.top())) CHECK(c.weakly_sigma_permutable(s, lat.top()).ok);
}

TEST_CASE("sigma-solubility and sigma-nilpotency") {
  // the 1260 example is sigma-soluble for its partition: factors 60, 7, 3
  SigmaContext& c = ctx1260();
  const SubgroupLattice& lat = g1260_analysis().lattice();
  CHECK(c.sigma_soluble(lat.top()));
  std::multiset<std::uint64_t> factor_orders;
  for (const ChiefFactor& f : lat.chief_series(lat.top()).factors) factor_orders.insert(f.order);
  CHECK(factor_orders == std::multiset<std::uint64_t>{3, 7, 60});

  // A5 with singletons is not sigma-soluble
  SigmaAnalysis a5(alternating(5));
  CHECK_FALSE(a5.context(SigmaPartition::parse("2|3|5")).sigma_soluble(a5.lattice().top()));

  // sigma-primary groups are both
  SigmaAnalysis d8(dihedral(8));
  SigmaContext& cd = d8.context(SigmaPartition::parse("2"));
  CHECK(cd.sigma_soluble(d8.lattice().top()));
  CHECK(cd.sigma_nilpotent(d8.lattice().top()));
}

TEST_CASE("singleton collapse of solubility and nilpotency on small groups") {
  for (const FiniteGroup& g :
       {symmetric(4), frobenius21(), dihedral(12), alternating(4), cyclic(36)}) {
    SigmaAnalysis an(g);
    SigmaContext& c = an.context(SigmaPartition::singletons(an.pi()));
    StructureFlags flags = structure_predicates(g);
    CHECK(c.sigma_soluble(an.lattice().top()) == flags.soluble);
    CHECK(c.sigma_nilpotent(an.lattice().top()) == flags.nilpotent);
  }
}

TEST_CASE("the sigma operators") {
  SigmaContext& c = ctx1260();
  const SubgroupLattice& lat = g1260_analysis().lattice();
  SubIdx c7 = lat.locate(ex12().C7);
  SubIdx a5f = lat.locate(ex12().A5_factor);
  SubIdx t2 = lat.locate(ex12().T2);

  // O^{sigma_1}(G) is C7: generated by all {7}-subgroups
  SubIdx upper = c.o_upper(0b01, lat.top());
  CHECK(upper == c7);
  CHECK(c.partition().is_pi_number(lat.order_of(lat.top()) / lat.order_of(upper), 0b01));

  // O_Pi(G) with Pi covering sigma(G) is G
  CHECK(c.o_lower(0b11, lat.top()) == lat.top());

  // O_{sigma_1}(G) is the A5 factor, inside C7 A5
  SubIdx lower = c.o_lower(0b01, lat.top());
  CHECK(lower == a5f);
  CHECK(lat.contains(lower, t2));
}

TEST_CASE("classical predicates in the worked example") {
  const SubgroupLattice& lat = g1260_analysis().lattice();
  SubIdx b = lat.locate(ex12().B);

  CHECK_FALSE(lat.s_permutable(b, lat.top()));
  CHECK_FALSE(lat.c_normal(b, lat.top()));
  CHECK_FALSE(lat.weakly_s_permutable(b, lat.top()).ok);
  CHECK(lat.s_core(b, lat.top()) == lat.bottom());

  // normal subgroups satisfy all four
  SubIdx t2 = lat.locate(ex12().T2);
  CHECK(lat.s_permutable(t2, lat.top()));
  CHECK(lat.c_normal(t2, lat.top()));
  CHECK(lat.weakly_s_permutable(t2, lat.top()).ok);
  CHECK(lat.s_core(t2, lat.top()) == t2);
}

TEST_CASE("singleton collapse: sigma predicates equal classical ones on S4 and D12") {
  for (const FiniteGroup& g : {symmetric(4), dihedral(12)}) {
    SigmaAnalysis an(g);
    const SubgroupLattice& lat = an.lattice();
    SigmaContext& c = an.context(SigmaPartition::singletons(an.pi()));
    for (SubIdx s = 0; s < lat.size(); ++s) {
      CHECK(c.sigma_permutable(s, lat.top()) == lat.s_permutable(s, lat.top()));
      CHECK(c.sigma_core(s, lat.top()) == lat.s_core(s, lat.top()));
      CHECK(c.weakly_sigma_permutable(s, lat.top()).ok ==
            lat.weakly_s_permutable(s, lat.top()).ok);
    }
  }
}

TEST_CASE("witness chains re-verify independently") {
  SigmaAnalysis an(symmetric(4));
  SigmaContext& c = an.context(SigmaPartition::parse("2|3"));
  const SubgroupLattice& lat = an.lattice();
  for (SubIdx s = 0; s < lat.size(); ++s) {
    if (!c.sigma_subnormal(s, lat.top())) continue;
    std::vector<FiniteGroup> chain;
    for (SubIdx idx : c.subnormal_chain(s, lat.top())) chain.push_back(lat.as_group(idx));
    CHECK(verify_subnormal_chain(chain, an.group(), c.partition()));
  }
  for (SubIdx s = 0; s < lat.size(); ++s) {
    auto r = c.weakly_sigma_permutable(s, lat.top());
    if (r.ok) CHECK(verify_weak_witness(c.weak_witness(s, lat.top()), an.group(), c.partition()));
  }
}
