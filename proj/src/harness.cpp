#include "sigma/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "sigma/group_io.hpp"
#include "sigma/numbers.hpp"

namespace sigma {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
  Clock::time_point start = Clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  }
};

std::string order_tag(const SubgroupLattice& lat, SubIdx s) {
  return "|" + std::to_string(lat.order_of(s)) + "|#" + std::to_string(s);
}

/// Evaluates weak sigma-permutability and re-verifies every positive answer
/// from its witness through the element-set checker, once per subgroup.
class WeakChecker {
 public:
  WeakChecker(SigmaAnalysis& an, SigmaContext& ctx) : an_(an), ctx_(ctx) {}

  bool ok(SubIdx h) {
    SubIdx top = ctx_.lattice().top();
    auto r = ctx_.weakly_sigma_permutable(h, top);
    if (!r.ok) return false;
    if (verified_.insert(h).second) {
      WeakPermutabilityWitness w = ctx_.weak_witness(h, top);
      if (!verify_weak_witness(w, an_.group(), ctx_.partition()))
        throw std::logic_error("weak-permutability witness failed re-verification");
    }
    return true;
  }

  std::string summary(SubIdx h) {
    SubIdx top = ctx_.lattice().top();
    auto r = ctx_.weakly_sigma_permutable(h, top);
    return "|H|=" + std::to_string(ctx_.lattice().order_of(h)) +
           " supplement |T|=" + std::to_string(ctx_.lattice().order_of(r.supplement));
  }

 private:
  SigmaAnalysis& an_;
  SigmaContext& ctx_;
  std::set<SubIdx> verified_;
};

/// Per-block conjugacy-class representatives of nilpotent Hall subgroups.
struct NilpotentHalls {
  bool every_block_has_one = true;
  std::vector<std::size_t> blocks;
  std::vector<std::vector<SubIdx>> reps;  // aligned with blocks
};

NilpotentHalls nilpotent_hall_reps(SigmaContext& ctx) {
  const SubgroupLattice& lat = ctx.lattice();
  SubIdx top = lat.top();
  NilpotentHalls out;
  out.blocks = ctx.block_list(top);
  for (std::size_t block : out.blocks) {
    std::vector<SubIdx> reps;
    for (const auto& cls : ctx.hall_classes(top, block))
      if (lat.is_nilpotent_subgroup(cls.front())) reps.push_back(cls.front());
    if (reps.empty()) out.every_block_has_one = false;
    out.reps.push_back(std::move(reps));
  }
  return out;
}

/// Existential and universal readings of a per-block condition over the
/// complete Hall sigma-sets with nilpotent members.
std::pair<bool, bool> hall_set_readings(
    const NilpotentHalls& halls, const std::function<bool(std::size_t, SubIdx)>& condition) {
  bool exists = true, forall = true;
  for (std::size_t i = 0; i < halls.blocks.size(); ++i) {
    bool block_exists = false, block_forall = true;
    for (SubIdx rep : halls.reps[i]) {
      bool ok = condition(halls.blocks[i], rep);
      block_exists = block_exists || ok;
      block_forall = block_forall && ok;
    }
    if (halls.reps[i].empty()) block_exists = false;
    exists = exists && block_exists;
    forall = forall && block_forall;
  }
  return {exists, forall};
}

void note_reading_disagreement(TheoremOutcome& out, bool exists, bool forall) {
  if (exists != forall)
    out.notes.push_back("existential and universal Hall-set readings disagree");
}

void finish(TheoremOutcome& out, const Timer& t) {
  out.consistent = !out.hypothesis || out.conclusion;
  out.elapsed_ms = t.ms();
}

}  // namespace

bool VerificationReport::all_consistent() const {
  for (const TheoremOutcome& o : outcomes)
    if (!o.consistent) return false;
  return true;
}

bool VerificationReport::suites_clean() const {
  for (const auto& [name, counts] : suites)
    if (counts.passed != counts.checked) return false;
  return true;
}

TheoremOutcome check_theorem_1_4(SigmaAnalysis& an, const SigmaPartition& sigma,
                                 const std::string& group_name) {
  Timer t;
  SigmaContext& ctx = an.context(sigma);
  const SubgroupLattice& lat = an.lattice();
  SubIdx top = lat.top();
  TheoremOutcome out;
  out.theorem_id = "theorem-1.4";
  out.group_name = group_name;
  out.partition = sigma.to_string();

  out.conclusion = ctx.sigma_soluble(top);

  bool hyp = ctx.sylow_type(top);
  if (!hyp) out.notes.push_back("not sigma-full of Sylow type");
  if (hyp) {
    WeakChecker wc(an, ctx);
    int listed = 0, total = 0;
    for (std::size_t block : ctx.block_list(top)) {
      for (SubIdx h : ctx.hall_subgroups(top, BlockMask{1} << block)) {
        ++total;
        if (!wc.ok(h)) {
          hyp = false;
          out.notes.push_back("Hall subgroup " + order_tag(lat, h) +
                              " is not weakly sigma-permutable");
          break;
        }
        if (listed < 4) {
          out.witnesses.push_back(wc.summary(h));
          ++listed;
        }
      }
      if (!hyp) break;
    }
    if (hyp && total > listed)
      out.witnesses.push_back("+" + std::to_string(total - listed) + " more verified");
  }
  out.hypothesis = hyp;
  finish(out, t);
  return out;
}

TheoremOutcome check_theorem_1_5(SigmaAnalysis& an, const SigmaPartition& sigma,
                                 const std::string& group_name) {
  Timer t;
  SigmaContext& ctx = an.context(sigma);
  const SubgroupLattice& lat = an.lattice();
  SubIdx top = lat.top();
  TheoremOutcome out;
  out.theorem_id = "theorem-1.5";
  out.group_name = group_name;
  out.partition = sigma.to_string();
  out.conclusion = lat.is_supersoluble(top);

  bool hyp = ctx.sylow_type(top);
  if (!hyp) out.notes.push_back("not sigma-full of Sylow type");
  NilpotentHalls halls = nilpotent_hall_reps(ctx);
  if (hyp && !halls.every_block_has_one) {
    hyp = false;
    out.notes.push_back("no nilpotent complete Hall sigma-set");
  }
  if (hyp) {
    WeakChecker wc(an, ctx);
    auto condition = [&](std::size_t, SubIdx rep) {
      if (lat.is_cyclic_subgroup(rep)) return true;
      for (SubIdx m : lat.maximal_subgroups_of(rep))
        if (!wc.ok(m)) return false;
      return true;
    };
    auto [exists, forall] = hall_set_readings(halls, condition);
    note_reading_disagreement(out, exists, forall);
    hyp = exists;
    if (!hyp) out.notes.push_back("a non-cyclic Hall member has a non-weak maximal subgroup");
  }
  out.hypothesis = hyp;
  finish(out, t);
  return out;
}

TheoremOutcome check_proposition_4_1(SigmaAnalysis& an, const SigmaPartition& sigma,
                                     const std::string& group_name) {
  Timer t;
  SigmaContext& ctx = an.context(sigma);
  const SubgroupLattice& lat = an.lattice();
  SubIdx top = lat.top();
  TheoremOutcome out;
  out.theorem_id = "proposition-4.1";
  out.group_name = group_name;
  out.partition = sigma.to_string();
  out.conclusion = lat.is_soluble(top);

  bool hyp = ctx.sylow_type(top);
  if (!hyp) out.notes.push_back("not sigma-full of Sylow type");
  NilpotentHalls halls = nilpotent_hall_reps(ctx);
  if (hyp && !halls.every_block_has_one) {
    hyp = false;
    out.notes.push_back("no nilpotent complete Hall sigma-set");
  }
  if (hyp && lat.order_of(top) > 1) {
    std::size_t pblock = sigma.block_of(prime_divisors(lat.order_of(top)).front());
    WeakChecker wc(an, ctx);
    auto condition = [&](std::size_t block, SubIdx rep) {
      if (block != pblock) return true;
      for (SubIdx m : lat.maximal_subgroups_of(rep))
        if (!wc.ok(m)) return false;
      return true;
    };
    auto [exists, forall] = hall_set_readings(halls, condition);
    note_reading_disagreement(out, exists, forall);
    hyp = exists;
    if (!hyp)
      out.notes.push_back("the Hall member for the smallest prime fails the maximal condition");
  }
  out.hypothesis = hyp;
  finish(out, t);
  return out;
}

std::vector<TheoremOutcome> check_theorem_1_13(SigmaAnalysis& an, const SigmaPartition& sigma,
                                               const std::string& group_name) {
  SigmaContext& ctx = an.context(sigma);
  const SubgroupLattice& lat = an.lattice();
  SubIdx top = lat.top();
  std::vector<TheoremOutcome> outs;

  bool sylow = ctx.sylow_type(top);
  NilpotentHalls halls = nilpotent_hall_reps(ctx);
  for (SubIdx e : lat.normal_subgroups_of(top)) {
    Timer t;
    TheoremOutcome out;
    out.theorem_id = "theorem-1.13";
    out.group_name = group_name;
    out.partition = sigma.to_string();
    out.subject = "E=" + order_tag(lat, e);
    out.conclusion = lat.hypercyclically_embedded(e, top);

    bool hyp = sylow && halls.every_block_has_one;
    if (!sylow) out.notes.push_back("not sigma-full of Sylow type");
    if (sylow && !halls.every_block_has_one)
      out.notes.push_back("no nilpotent complete Hall sigma-set");
    if (hyp) {
      WeakChecker wc(an, ctx);
      auto condition = [&](std::size_t, SubIdx rep) {
        SubIdx we = lat.meet_of(rep, e);
        for (SubIdx m : lat.maximal_subgroups_of(we))
          if (!wc.ok(m)) return false;
        return true;
      };
      auto [exists, forall] = hall_set_readings(halls, condition);
      note_reading_disagreement(out, exists, forall);
      hyp = exists;
    }
    out.hypothesis = hyp;
    finish(out, t);
    outs.push_back(std::move(out));
  }
  return outs;
}

std::vector<TheoremOutcome> check_corollary_1_14(SigmaAnalysis& an, const SigmaPartition& sigma,
                                                 const std::string& group_name) {
  SigmaContext& ctx = an.context(sigma);
  const SubgroupLattice& lat = an.lattice();
  SubIdx top = lat.top();
  std::vector<TheoremOutcome> outs;

  bool sylow = ctx.sylow_type(top);
  NilpotentHalls halls = nilpotent_hall_reps(ctx);
  for (SubIdx e : lat.normal_subgroups_of(top)) {
    Timer t;
    TheoremOutcome out;
    out.theorem_id = "corollary-1.14";
    out.group_name = group_name;
    out.partition = sigma.to_string();
    out.subject = "E=" + order_tag(lat, e);
    out.conclusion = lat.is_supersoluble(top);

    // G/E supersoluble: the chief factors above E have prime order
    bool quotient_ok = true;
    ChiefSeries series = lat.chief_series_through(top, e);
    for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
      if (lat.contains(series.terms[i + 1], e)) continue;  // still below e
      if (!series.factors[i].prime_order) quotient_ok = false;
    }

    bool hyp = quotient_ok && sylow && halls.every_block_has_one;
    if (!quotient_ok) out.notes.push_back("the quotient by E is not supersoluble");
    if (hyp) {
      WeakChecker wc(an, ctx);
      auto condition = [&](std::size_t, SubIdx rep) {
        SubIdx we = lat.meet_of(rep, e);
        for (SubIdx m : lat.maximal_subgroups_of(we))
          if (!wc.ok(m)) return false;
        return true;
      };
      auto [exists, forall] = hall_set_readings(halls, condition);
      note_reading_disagreement(out, exists, forall);
      hyp = exists;
    }
    out.hypothesis = hyp;
    finish(out, t);
    outs.push_back(std::move(out));
  }
  return outs;
}

std::vector<TheoremOutcome> check_corollaries(SigmaAnalysis& an, const std::string& group_name) {
  const SubgroupLattice& lat = an.lattice();
  SubIdx top = lat.top();
  SigmaPartition singles = SigmaPartition::singletons(an.pi());
  std::vector<TheoremOutcome> outs;
  std::vector<std::uint64_t> primes = an.pi();

  auto emit = [&](const std::string& id, bool hyp, bool concl, const std::string& subject,
                  const Timer& t) {
    TheoremOutcome out;
    out.theorem_id = id;
    out.group_name = group_name;
    out.partition = singles.to_string();
    out.subject = subject;
    out.hypothesis = hyp;
    out.conclusion = concl;
    finish(out, t);
    outs.push_back(std::move(out));
  };

  bool supersoluble = lat.is_supersoluble(top);
  bool soluble = lat.is_soluble(top);

  {  // 1.6: every Sylow subgroup weakly s-permutable, then soluble
    Timer t;
    bool hyp = true;
    for (std::uint64_t p : primes)
      for (SubIdx s : lat.sylows_of(top, p))
        if (!lat.weakly_s_permutable(s, top).ok) {
          hyp = false;
          break;
        }
    emit("corollary-1.6", hyp, soluble, "", t);
  }
  {  // 1.7: every Sylow subgroup cyclic, then supersoluble
    Timer t;
    bool hyp = true;
    for (std::uint64_t p : primes)
      if (!lat.is_cyclic_subgroup(lat.sylows_of(top, p).front())) hyp = false;
    emit("corollary-1.7", hyp, supersoluble, "", t);
  }

  // maximal subgroups of Sylow subgroups under the classical conditions
  struct MaxCondition {
    const char* id;
    bool only_non_cyclic;
    std::function<bool(SubIdx)> pred;
  };
  const std::vector<MaxCondition> conditions{
      {"corollary-1.8", false, [&](SubIdx m) { return lat.weakly_s_permutable(m, top).ok; }},
      {"corollary-1.9", true, [&](SubIdx m) { return lat.weakly_s_permutable(m, top).ok; }},
      {"corollary-1.10", false, [&](SubIdx m) { return lat.is_normal_in(m, top); }},
      {"corollary-1.11", false, [&](SubIdx m) { return lat.s_permutable(m, top); }},
      {"corollary-1.12", false, [&](SubIdx m) { return lat.c_normal(m, top); }},
  };
  for (const MaxCondition& c : conditions) {
    Timer t;
    bool hyp = true;
    for (std::uint64_t p : primes) {
      for (SubIdx s : lat.sylows_of(top, p)) {
        if (c.only_non_cyclic && lat.is_cyclic_subgroup(s)) continue;
        for (SubIdx m : lat.maximal_subgroups_of(s))
          if (!c.pred(m)) {
            hyp = false;
            break;
          }
        if (!hyp) break;
      }
      if (!hyp) break;
    }
    emit(c.id, hyp, supersoluble, "", t);
  }

  // 1.15/1.16 (s-permutable) and 1.17 (c-normal): over every normal E with
  // a supersoluble quotient, the maximal subgroups of the Sylow subgroups
  // of E, tested in G
  for (SubIdx e : lat.normal_subgroups_of(top)) {
    ChiefSeries series = lat.chief_series_through(top, e);
    bool quotient_ok = true;
    for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
      if (lat.contains(series.terms[i + 1], e)) continue;
      if (!series.factors[i].prime_order) quotient_ok = false;
    }
    auto check_sylow_max = [&](const std::function<bool(SubIdx)>& pred) {
      for (std::uint64_t p : prime_divisors(lat.order_of(e)))
        for (SubIdx s : lat.sylows_of(e, p))
          for (SubIdx m : lat.maximal_subgroups_of(s))
            if (!pred(m)) return false;
      return true;
    };
    std::string subject = "E=" + order_tag(lat, e);
    {
      Timer t;
      bool hyp =
          quotient_ok && check_sylow_max([&](SubIdx m) { return lat.s_permutable(m, top); });
      emit("corollary-1.15", hyp, supersoluble, subject, t);
      emit("corollary-1.16", hyp, supersoluble, subject, t);
    }
    {
      Timer t;
      bool hyp = quotient_ok && check_sylow_max([&](SubIdx m) { return lat.c_normal(m, top); });
      emit("corollary-1.17", hyp, supersoluble, subject, t);
    }
  }
  return outs;
}

VerificationReport example_1_2_report() {
  VerificationReport rep;
  rep.config["command"] = "example12";

  Example12 ex = example_1_2();
  SigmaAnalysis an(ex.G);
  SigmaContext& ctx = an.context(ex.sigma);
  const SubgroupLattice& lat = an.lattice();
  SubIdx top = lat.top();
  SubIdx b = an.locate(ex.B);
  SubIdx h = an.locate(ex.H);
  SubIdx t1 = an.locate(ex.T1);
  SubIdx t2 = an.locate(ex.T2);
  SubIdx a5c3 = an.locate(ex.A5C3);
  SubIdx c7 = an.locate(ex.C7);

  struct Claim {
    const char* id;
    const char* text;
    std::function<bool()> check;
  };
  const std::vector<Claim> claims{
      {"example-1.2(a)", "B is weakly sigma-permutable with a supplement of order 105",
       [&] {
         auto r = ctx.weakly_sigma_permutable(b, top);
         if (!r.ok || lat.order_of(r.supplement) != 105) return false;
         // the named order-105 supplement qualifies on its own
         if (!ctx.sigma_subnormal(t1, top)) return false;
         if (lat.meet_of(b, t1) != lat.bottom()) return false;
         if (lat.order_of(b) * lat.order_of(t1) != lat.order_of(top)) return false;
         return verify_weak_witness(ctx.weak_witness(b, top), ex.G, ex.sigma);
       }},
      {"example-1.2(b)", "B is not weakly s-permutable (exhaustive over subnormal supplements)",
       [&] { return !lat.weakly_s_permutable(b, top).ok; }},
      {"example-1.2(c)", "B is neither s-permutable nor c-normal",
       [&] { return !lat.s_permutable(b, top) && !lat.c_normal(b, top); }},
      {"example-1.2(d)", "H = BC3 is weakly sigma-permutable with the normal supplement C7A5",
       [&] {
         if (!ctx.weakly_sigma_permutable(h, top).ok) return false;
         if (!lat.is_normal_in(t2, top)) return false;
         if (lat.meet_of(h, t2) != b) return false;
         if (lat.order_of(h) * lat.order_of(t2) != lat.order_of(top) * lat.order_of(b))
           return false;
         return verify_weak_witness(ctx.weak_witness(h, top), ex.G, ex.sigma);
       }},
      {"example-1.2(e)", "the sigma-core of H is B, so H is not sigma-permutable",
       [&] {
         return ctx.sigma_core(h, top) == b && !ctx.sigma_permutable(h, top) &&
                ctx.sigma_permutable(b, top);
       }},
      {"example-1.2(f)", "{A5C3, C7} is a complete Hall sigma-set",
       [&] {
         if (!verify_hall_set({ex.A5C3, ex.C7}, ex.G, ex.sigma)) return false;
         auto halls1 = ctx.hall_subgroups(top, 0b01);
         auto halls2 = ctx.hall_subgroups(top, 0b10);
         return std::find(halls1.begin(), halls1.end(), a5c3) != halls1.end() &&
                std::find(halls2.begin(), halls2.end(), c7) != halls2.end();
       }},
      {"example-1.2(g)", "the order-105 subgroup is sigma-subnormal in G",
       [&] {
         if (!ctx.sigma_subnormal(t1, top)) return false;
         std::vector<FiniteGroup> chain;
         for (SubIdx idx : ctx.subnormal_chain(t1, top)) chain.push_back(lat.as_group(idx));
         return verify_subnormal_chain(chain, ex.G, ex.sigma);
       }},
  };

  for (const Claim& claim : claims) {
    Timer t;
    TheoremOutcome out;
    out.theorem_id = claim.id;
    out.group_name = "g1260";
    out.partition = ex.sigma.to_string();
    out.subject = claim.text;
    out.hypothesis = true;
    out.conclusion = claim.check();
    finish(out, t);
    bool failed = !out.consistent;
    rep.outcomes.push_back(std::move(out));
    if (failed) {
      rep.aborted = true;
      rep.abort_reason = std::string("claim failed: ") + claim.id;
      rep.counterexample_group_file = format_group(ex.G);
      rep.counterexample_partition = ex.sigma.to_string();
      rep.counterexample_theorem = claim.id;
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// lemma suites

namespace {

struct SuiteRecorder {
  std::map<std::string, SuiteCounts>& into;
  std::string context_tag;

  void record(const std::string& suite, bool pass, const std::string& detail) {
    SuiteCounts& c = into[suite];
    ++c.checked;
    if (pass)
      ++c.passed;
    else
      c.failures.push_back(context_tag + " " + detail);
  }
};

template <typename T>
std::vector<T> sample_up_to(std::vector<T> pool, std::size_t n, std::mt19937_64& rng) {
  std::shuffle(pool.begin(), pool.end(), rng);
  if (pool.size() > n) pool.resize(n);
  return pool;
}

}  // namespace

void run_lemma_suites(SigmaAnalysis& an, const SigmaPartition& sigma,
                      const std::string& group_name, std::uint64_t seed, int samples_per_suite,
                      std::map<std::string, SuiteCounts>& into) {
  SigmaContext& ctx = an.context(sigma);
  const SubgroupLattice& lat = an.lattice();
  SubIdx top = lat.top();
  const std::size_t samples = static_cast<std::size_t>(samples_per_suite);
  std::mt19937_64 rng(seed);
  SuiteRecorder rec{into, group_name + "/" + sigma.to_string()};

  std::vector<SubIdx> all_subs(lat.size());
  std::iota(all_subs.begin(), all_subs.end(), 0u);
  std::vector<SubIdx> sn_subs;
  for (SubIdx s = 0; s < lat.size(); ++s)
    if (ctx.sigma_subnormal(s, top)) sn_subs.push_back(s);
  const std::vector<SubIdx>& normals = lat.normal_subgroups_of(top);

  auto tag2 = [&](SubIdx a, SubIdx b) { return order_tag(lat, a) + " " + order_tag(lat, b); };

  // 2.1: subgroups and quotients of sigma-soluble groups are sigma-soluble
  if (ctx.sigma_soluble(top)) {
    for (SubIdx s : sample_up_to(all_subs, samples, rng))
      rec.record("lemma-2.1", ctx.sigma_soluble(s), "subgroup " + order_tag(lat, s));
    for (SubIdx n : sample_up_to(normals, 2, rng)) {
      Quotient q = quotient_group(an.group(), lat.as_group(n));
      SigmaAnalysis qan(q.group(), lat.element_count());
      bool ok = qan.context(sigma).sigma_soluble(qan.lattice().top());
      rec.record("lemma-2.1", ok, "quotient by " + order_tag(lat, n));
    }
  }

  // 2.2(1): A sigma-subnormal in G makes A meet K sigma-subnormal in K
  for (int i = 0; i < samples_per_suite && !sn_subs.empty(); ++i) {
    SubIdx a = sn_subs[rng() % sn_subs.size()];
    SubIdx k = all_subs[rng() % all_subs.size()];
    SubIdx m = lat.meet_of(a, k);
    rec.record("lemma-2.2(1)", ctx.sigma_subnormal(m, k), tag2(a, k));
  }

  // 2.2(3): meets and joins of sigma-subnormal subgroups stay sigma-subnormal
  for (int i = 0; i < samples_per_suite && !sn_subs.empty(); ++i) {
    SubIdx a = sn_subs[rng() % sn_subs.size()];
    SubIdx k = sn_subs[rng() % sn_subs.size()];
    bool ok = ctx.sigma_subnormal(lat.meet_of(a, k), top) &&
              ctx.sigma_subnormal(lat.join_of(a, k), top);
    rec.record("lemma-2.2(3)", ok, tag2(a, k));
  }

  // 2.2(4): AN/N is sigma-subnormal in G/N
  if (!sn_subs.empty()) {
    for (SubIdx n : sample_up_to(normals, 2, rng)) {
      Quotient q = quotient_group(an.group(), lat.as_group(n));
      SigmaAnalysis qan(q.group(), lat.element_count());
      SigmaContext& qctx = qan.context(sigma);
      for (int i = 0; i < 2; ++i) {
        SubIdx a = sn_subs[rng() % sn_subs.size()];
        SubIdx image = qan.locate(q.push(lat.as_group(a)));
        rec.record("lemma-2.2(4)", qctx.sigma_subnormal(image, qan.lattice().top()), tag2(a, n));
      }
    }
  }

  // 2.2(6): subgroups of sigma-nilpotent groups are sigma-subnormal in them
  {
    std::vector<SubIdx> nilpotent;
    for (SubIdx s : all_subs)
      if (ctx.sigma_nilpotent(s)) nilpotent.push_back(s);
    for (int i = 0; i < samples_per_suite && !nilpotent.empty(); ++i) {
      SubIdx a = nilpotent[rng() % nilpotent.size()];
      const auto& inside = lat.subgroups_of(a);
      SubIdx k = inside[rng() % inside.size()];
      rec.record("lemma-2.2(6)", ctx.sigma_subnormal(k, a), tag2(k, a));
    }
  }

  // 2.2(7): |G:A| a Pi-number and A sigma-subnormal give O^Pi(A) = O^Pi(G)
  {
    BlockMask full = ctx.classify(lat.order_of(top));
    int done = 0;
    for (SubIdx a : sample_up_to(sn_subs, samples * 4, rng)) {
      if (done >= samples_per_suite) break;
      std::uint64_t index = lat.order_of(top) / lat.order_of(a);
      for (BlockMask mask = 1; mask <= full && done < samples_per_suite; ++mask) {
        if ((mask & ~full) != 0) continue;
        if (!sigma.is_pi_number(index, mask)) continue;
        bool ok = ctx.o_upper(mask, a) == ctx.o_upper(mask, top);
        rec.record("lemma-2.2(7)", ok, order_tag(lat, a) + " mask=" + std::to_string(mask));
        ++done;
      }
    }
  }

  // 2.2(8): a sigma-subnormal Pi-subgroup of a Pi-full group lies in O_Pi(G)
  {
    int done = 0;
    for (SubIdx a : sample_up_to(sn_subs, samples * 4, rng)) {
      if (done >= samples_per_suite) break;
      BlockMask amask = ctx.classify(lat.order_of(a));
      if (amask == 0) continue;  // trivial subgroup is uninformative
      bool pi_full = true;
      for (std::size_t block = 0; (amask >> block) != 0; ++block)
        if ((amask & (BlockMask{1} << block)) &&
            ctx.hall_subgroups(top, BlockMask{1} << block).empty())
          pi_full = false;
      if (!pi_full) continue;
      bool ok = lat.contains(a, ctx.o_lower(amask, top));
      rec.record("lemma-2.2(8)", ok, order_tag(lat, a) + " mask=" + std::to_string(amask));
      ++done;
    }
  }

  // 2.3(4): the sigma-core is sigma-permutable, and sigma-subnormal when the
  // group is sigma-full of Sylow type
  {
    bool sylow = ctx.sylow_type(top);
    for (SubIdx h : sample_up_to(all_subs, samples, rng)) {
      SubIdx core = ctx.sigma_core(h, top);
      bool ok = ctx.sigma_permutable(core, top) && (!sylow || ctx.sigma_subnormal(core, top));
      rec.record("lemma-2.3(4)", ok, order_tag(lat, h));
    }
  }

  // 2.4: a sigma_1-subgroup of a sigma-full group is sigma-permutable iff
  // O^{sigma_1}(G) lies in its normalizer
  if (ctx.sigma_full(top)) {
    int done = 0;
    for (std::size_t block : ctx.block_list(top)) {
      BlockMask bit = BlockMask{1} << block;
      std::vector<SubIdx> candidates;
      for (SubIdx s : all_subs)
        if ((ctx.classify(lat.order_of(s)) & ~bit) == 0) candidates.push_back(s);
      for (SubIdx h : sample_up_to(candidates, samples, rng)) {
        if (done >= samples_per_suite * 2) break;
        SubIdx oup = ctx.o_upper(bit, top);
        bool lhs = ctx.sigma_permutable(h, top);
        bool rhs = lat.contains(oup, lat.normalizer_of(h, top));
        rec.record("lemma-2.4", lhs == rhs, order_tag(lat, h) + " block=" + std::to_string(block));
        ++done;
      }
    }
  }

  // 2.5 transfers hold over sigma-full groups of Sylow type
  if (ctx.sylow_type(top)) {
    std::vector<SubIdx> weak_subs;
    for (SubIdx s : sample_up_to(all_subs, samples * 3, rng))
      if (ctx.weakly_sigma_permutable(s, top).ok) weak_subs.push_back(s);

    // 2.5(1): weakly sigma-permutable in G stays weakly so in intermediate K
    for (int i = 0; i < samples_per_suite && !weak_subs.empty(); ++i) {
      SubIdx h = weak_subs[rng() % weak_subs.size()];
      std::vector<SubIdx> overs;
      for (SubIdx k : all_subs)
        if (lat.contains(h, k)) overs.push_back(k);
      SubIdx k = overs[rng() % overs.size()];
      rec.record("lemma-2.5(1)", ctx.weakly_sigma_permutable(h, k).ok, tag2(h, k));
    }

    // 2.5(2): with N normal, N <= H, weak permutability transfers between
    // H in G and H/N in G/N, in both directions
    for (SubIdx n : sample_up_to(normals, 2, rng)) {
      Quotient q = quotient_group(an.group(), lat.as_group(n));
      SigmaAnalysis qan(q.group(), lat.element_count());
      SigmaContext& qctx = qan.context(sigma);
      std::vector<SubIdx> overs;
      for (SubIdx h : all_subs)
        if (lat.contains(n, h)) overs.push_back(h);
      for (SubIdx h : sample_up_to(overs, 2, rng)) {
        bool in_g = ctx.weakly_sigma_permutable(h, top).ok;
        SubIdx image = qan.locate(q.push(lat.as_group(h)));
        bool in_q = qctx.weakly_sigma_permutable(image, qan.lattice().top()).ok;
        rec.record("lemma-2.5(2)", in_g == in_q, tag2(h, n));
      }
    }

    // 2.5(3): coprime push-forward of a weakly sigma-permutable subgroup
    for (SubIdx n : sample_up_to(normals, 2, rng)) {
      Quotient q = quotient_group(an.group(), lat.as_group(n));
      SigmaAnalysis qan(q.group(), lat.element_count());
      SigmaContext& qctx = qan.context(sigma);
      int done = 0;
      for (SubIdx h : weak_subs) {
        if (done >= 2) break;
        if (std::gcd(lat.order_of(h), lat.order_of(n)) != 1) continue;
        SubIdx image = qan.locate(q.push(lat.as_group(h)));
        rec.record("lemma-2.5(3)", qctx.weakly_sigma_permutable(image, qan.lattice().top()).ok,
                   tag2(h, n));
        ++done;
      }
    }
  }

  // 2.6: P/Phi(P) inside the hypercentre of G/Phi(P) puts P inside Z_U(G)
  {
    std::vector<SubIdx> normal_p;
    for (SubIdx n : normals)
      if (lat.order_of(n) > 1 && is_prime_power(lat.order_of(n))) normal_p.push_back(n);
    for (SubIdx p : sample_up_to(normal_p, 2, rng)) {
      SubIdx phi = lat.frattini(p);
      if (!lat.is_normal_in(phi, top)) {
        rec.record("lemma-2.6", false, order_tag(lat, p) + " frattini not normal in G");
        continue;
      }
      bool condition;
      if (phi == lat.bottom()) {
        condition = lat.hypercyclically_embedded(p, top);
      } else {
        Quotient q = quotient_group(an.group(), lat.as_group(phi));
        SigmaAnalysis qan(q.group(), lat.element_count());
        SubIdx image = qan.locate(q.push(lat.as_group(p)));
        condition = qan.lattice().hypercyclically_embedded(image, qan.lattice().top());
      }
      bool ok = !condition || lat.hypercyclically_embedded(p, top);
      rec.record("lemma-2.6", ok, order_tag(lat, p));
    }
  }
}

// ---------------------------------------------------------------------------
// campaign

PartitionPolicy parse_policy(const std::string& s) {
  if (s == "all") return PartitionPolicy::all;
  if (s == "singletons") return PartitionPolicy::singletons;
  if (s == "whole") return PartitionPolicy::whole;
  if (s == "listed") return PartitionPolicy::listed;
  throw std::invalid_argument("unknown partition policy \"" + s + "\"");
}

std::string policy_name(PartitionPolicy p) {
  switch (p) {
    case PartitionPolicy::all: return "all";
    case PartitionPolicy::singletons: return "singletons";
    case PartitionPolicy::whole: return "whole";
    case PartitionPolicy::listed: return "listed";
  }
  return "?";
}

namespace {

std::vector<SigmaPartition> partitions_for(PartitionPolicy policy,
                                           const std::vector<std::uint64_t>& pi,
                                           const std::vector<std::string>& listed) {
  switch (policy) {
    case PartitionPolicy::all: return SigmaPartition::all_partitions(pi);
    case PartitionPolicy::singletons: return {SigmaPartition::singletons(pi)};
    case PartitionPolicy::whole: return {SigmaPartition::whole(pi)};
    case PartitionPolicy::listed: {
      std::vector<SigmaPartition> out;
      for (const std::string& s : listed) out.push_back(SigmaPartition::parse(s, pi));
      return out;
    }
  }
  return {};
}

struct JobResult {
  std::vector<TheoremOutcome> outcomes;
  std::map<std::string, SuiteCounts> suites;
  std::vector<std::string> skipped;
  bool partial = false;
  std::string error;
};

JobResult run_partition_job(SigmaAnalysis& an, const SigmaPartition& sigma,
                            const std::string& group_name, const CampaignConfig& cfg) {
  JobResult job;
  Timer budget;
  auto over_budget = [&] {
    return budget.ms() > static_cast<std::int64_t>(cfg.budget_seconds * 1000.0);
  };
  auto mark_skip = [&](const char* stage) {
    job.skipped.push_back(group_name + "/" + sigma.to_string() + ": " + stage +
                          " skipped (budget)");
    job.partial = true;
  };

  job.outcomes.push_back(check_theorem_1_4(an, sigma, group_name));
  if (over_budget()) {
    mark_skip("theorem-1.5 onwards");
    return job;
  }
  job.outcomes.push_back(check_theorem_1_5(an, sigma, group_name));
  if (over_budget()) {
    mark_skip("proposition-4.1 onwards");
    return job;
  }
  job.outcomes.push_back(check_proposition_4_1(an, sigma, group_name));
  if (over_budget()) {
    mark_skip("theorem-1.13 onwards");
    return job;
  }
  for (TheoremOutcome& o : check_theorem_1_13(an, sigma, group_name))
    job.outcomes.push_back(std::move(o));
  if (over_budget()) {
    mark_skip("corollary-1.14 onwards");
    return job;
  }
  for (TheoremOutcome& o : check_corollary_1_14(an, sigma, group_name))
    job.outcomes.push_back(std::move(o));
  if (cfg.lemma_suites) {
    if (over_budget()) {
      mark_skip("lemma suites");
      return job;
    }
    std::uint64_t seed = cfg.seed ^ std::hash<std::string>{}(group_name) ^
                         (std::hash<std::string>{}(sigma.to_string()) << 1);
    run_lemma_suites(an, sigma, group_name, seed, cfg.samples_per_suite, job.suites);
  }
  return job;
}

}  // namespace

VerificationReport run_campaign(const std::vector<CatalogEntry>& entries,
                                const CampaignConfig& cfg) {
  VerificationReport rep;
  rep.config["max_order"] = std::to_string(cfg.max_order);
  rep.config["policy"] = policy_name(cfg.policy);
  {
    std::string joined;
    for (const std::string& s : cfg.listed_partitions) joined += (joined.empty() ? "" : ";") + s;
    rep.config["partitions"] = joined;
  }
  rep.config["jobs"] = std::to_string(cfg.jobs);
  rep.config["budget_seconds"] = std::to_string(cfg.budget_seconds);
  rep.config["seed"] = std::to_string(cfg.seed);
  rep.config["lattice_cutoff"] = std::to_string(cfg.lattice_cutoff);
  rep.config["lemma_suites"] = cfg.lemma_suites ? "true" : "false";
  rep.config["samples_per_suite"] = std::to_string(cfg.samples_per_suite);

  for (const CatalogEntry& entry : entries) {
    if (entry.group.order() > cfg.max_order) continue;
    std::unique_ptr<SigmaAnalysis> an;
    try {
      an = std::make_unique<SigmaAnalysis>(entry.group, cfg.lattice_cutoff);
    } catch (const CutoffExceeded& e) {
      rep.skipped.push_back(entry.name + ": " + e.what());
      rep.partial = true;
      continue;
    }

    for (TheoremOutcome& o : check_corollaries(*an, entry.name))
      rep.outcomes.push_back(std::move(o));

    std::vector<SigmaPartition> parts = partitions_for(cfg.policy, an->pi(), cfg.listed_partitions);
    std::vector<JobResult> slots(parts.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < parts.size(); i = next.fetch_add(1)) {
        try {
          slots[i] = run_partition_job(*an, parts[i], entry.name, cfg);
        } catch (const std::exception& e) {
          slots[i].error = e.what();
        }
      }
    };
    unsigned nthreads = std::max(
        1u, std::min<unsigned>(static_cast<unsigned>(std::max(cfg.jobs, 1)),
                               static_cast<unsigned>(parts.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < nthreads; ++i) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    // merge in partition order for determinism
    for (std::size_t i = 0; i < slots.size() && !rep.aborted; ++i) {
      JobResult& job = slots[i];
      if (!job.error.empty()) {
        rep.aborted = true;
        rep.abort_reason = entry.name + "/" + parts[i].to_string() + ": " + job.error;
        rep.counterexample_group_file = format_group(entry.group);
        rep.counterexample_partition = parts[i].to_string();
        break;
      }
      for (TheoremOutcome& o : job.outcomes) rep.outcomes.push_back(std::move(o));
      for (auto& [name, counts] : job.suites) {
        SuiteCounts& dst = rep.suites[name];
        dst.checked += counts.checked;
        dst.passed += counts.passed;
        for (std::string& f : counts.failures) dst.failures.push_back(std::move(f));
      }
      for (std::string& s : job.skipped) rep.skipped.push_back(std::move(s));
      rep.partial = rep.partial || job.partial;
    }
    if (rep.aborted) break;

    // a counterexample invalidates every aggregate downstream: stop, bundle
    for (const TheoremOutcome& o : rep.outcomes) {
      if (o.consistent) continue;
      rep.aborted = true;
      rep.abort_reason =
          "inconsistent outcome: " + o.theorem_id + " on " + o.group_name + " / " + o.partition;
      rep.counterexample_group_file = format_group(entry.group);
      rep.counterexample_partition = o.partition;
      rep.counterexample_theorem = o.theorem_id;
      break;
    }
    if (rep.aborted) break;
  }

  std::stable_sort(rep.outcomes.begin(), rep.outcomes.end(),
                   [](const TheoremOutcome& a, const TheoremOutcome& b) {
                     return std::tie(a.group_name, a.partition, a.theorem_id, a.subject) <
                            std::tie(b.group_name, b.partition, b.theorem_id, b.subject);
                   });
  return rep;
}

}  // namespace sigma
