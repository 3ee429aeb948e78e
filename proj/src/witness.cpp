#include "sigma/witness.hpp"

#include <set>
#include <sstream>

#include "sigma/numbers.hpp"

namespace sigma {

std::string SigmaWitness::summary() const {
  std::ostringstream os;
  switch (kind) {
    case WitnessKind::subnormal_chain: {
      os << "chain";
      for (const FiniteGroup& g : groups) os << " " << g.order();
      break;
    }
    case WitnessKind::hall_set: {
      os << "hall-set{";
      for (std::size_t i = 0; i < groups.size(); ++i) os << (i ? "," : "") << groups[i].order();
      os << "}";
      break;
    }
    case WitnessKind::supplement:
      os << "supplement |T|=" << (groups.empty() ? 0 : groups.front().order());
      break;
    case WitnessKind::core_generators: {
      os << "core-parts{";
      for (std::size_t i = 0; i < groups.size(); ++i) os << (i ? "," : "") << groups[i].order();
      os << "}";
      break;
    }
  }
  return os.str();
}

std::vector<SigmaWitness> WeakPermutabilityWitness::to_witnesses() const {
  std::vector<SigmaWitness> out;
  out.push_back({WitnessKind::supplement, {supplement}});
  out.push_back({WitnessKind::subnormal_chain, chain});
  std::vector<FiniteGroup> parts;
  for (const CorePart& cp : core_cover) parts.push_back(cp.part);
  if (!parts.empty()) out.push_back({WitnessKind::core_generators, std::move(parts)});
  return out;
}

bool verify_subnormal_chain(const std::vector<FiniteGroup>& chain, const FiniteGroup& g,
                            const SigmaPartition& sigma) {
  if (chain.empty()) return false;
  if (!(chain.back() == g)) return false;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const FiniteGroup& a = chain[i];
    const FiniteGroup& b = chain[i + 1];
    if (!b.contains_group(a)) return false;
    if (is_normal_in(a, b)) continue;
    FiniteGroup c = core(b, a);
    if (!sigma.is_primary(b.order() / c.order())) return false;
  }
  return true;
}

bool verify_hall_set(const std::vector<FiniteGroup>& members, const FiniteGroup& g,
                     const SigmaPartition& sigma) {
  std::uint64_t n = g.order();
  std::set<std::size_t> blocks_covered;
  for (const FiniteGroup& m : members) {
    if (!g.contains_group(m)) return false;
    std::uint64_t order = m.order();
    if (order == 1) continue;  // the identity member carries no block
    // one sigma_i: all primes of |m| in one block, and the index coprime
    std::size_t block = sigma.block_of(prime_divisors(order).front());
    for (std::uint64_t p : prime_divisors(order))
      if (sigma.block_of(p) != block) return false;
    std::uint64_t index = n / order;
    for (std::uint64_t p : prime_divisors(index))
      if (sigma.block_of(p) == block) return false;
    if (!blocks_covered.insert(block).second) return false;  // one member per block
  }
  // every block meeting pi(G) is covered
  for (std::uint64_t p : prime_divisors(n))
    if (!blocks_covered.count(sigma.block_of(p))) return false;
  return true;
}

namespace {

// All distinct conjugates of a subgroup, by scanning the ambient elements.
std::vector<FiniteGroup> distinct_conjugates(const FiniteGroup& a, const FiniteGroup& g) {
  std::vector<FiniteGroup> out;
  std::set<std::vector<Permutation>> seen;
  for (const Permutation& x : g.elements()) {
    FiniteGroup conj = conjugate_subgroup(a, x);
    std::vector<Permutation> fingerprint = conj.elements();
    if (seen.insert(fingerprint).second) out.push_back(std::move(conj));
  }
  return out;
}

}  // namespace

bool verify_sigma_permutable(const FiniteGroup& h, const std::vector<FiniteGroup>& members,
                             const FiniteGroup& g, const SigmaPartition& sigma) {
  if (!verify_hall_set(members, g, sigma)) return false;
  for (const FiniteGroup& a : members)
    for (const FiniteGroup& conj : distinct_conjugates(a, g))
      if (!permutes(h, conj)) return false;
  return true;
}

bool verify_weak_witness(const WeakPermutabilityWitness& w, const FiniteGroup& g,
                         const SigmaPartition& sigma) {
  const FiniteGroup& h = w.subject;
  const FiniteGroup& t = w.supplement;
  if (!g.contains_group(h) || !g.contains_group(t)) return false;

  // G = HT via the product formula
  FiniteGroup inter = meet(h, t);
  if (h.order() * t.order() != g.order() * inter.order()) return false;

  // T sigma-subnormal, certified by its chain
  if (w.chain.empty() || !(w.chain.front() == t)) return false;
  if (!verify_subnormal_chain(w.chain, g, sigma)) return false;

  // H meet T lies under the join of the sigma-permutable cover parts
  std::vector<Permutation> cover_gens;
  for (const auto& cp : w.core_cover) {
    if (!h.contains_group(cp.part)) return false;
    if (!verify_sigma_permutable(cp.part, cp.hall_set, g, sigma)) return false;
    for (const Permutation& p : cp.part.generators()) cover_gens.push_back(p);
  }
  FiniteGroup cover(g.degree(), std::move(cover_gens));
  for (const Permutation& e : inter.elements())
    if (!cover.contains(e)) return false;
  return true;
}

}  // namespace sigma
