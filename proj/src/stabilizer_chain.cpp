#include "sigma/stabilizer_chain.hpp"

#include <stdexcept>

#include "sigma/numbers.hpp"

namespace sigma {

namespace {

Point first_moved(const Permutation& p) {
  for (Point i = 0; i < p.degree(); ++i)
    if (p[i] != i) return i;
  return p.degree();
}

}  // namespace

void StabilizerChain::rebuild_orbit(std::size_t i) {
  Level& lv = levels_[i];
  lv.slot.assign(degree_, -1);
  lv.trans.clear();
  lv.orbit.clear();
  lv.orbit.push_back(lv.beta);
  lv.trans.push_back(Permutation::identity(degree_));
  lv.slot[lv.beta] = 0;
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    Point p = lv.orbit[k];
    const Permutation u = lv.trans[static_cast<std::size_t>(lv.slot[p])];
    for (const Permutation& g : lv.gens) {
      Point q = g[p];
      if (lv.slot[q] >= 0) continue;
      lv.slot[q] = static_cast<std::int32_t>(lv.orbit.size());
      lv.orbit.push_back(q);
      lv.trans.push_back(compose(u, g));  // maps beta -> q
    }
  }
}

std::pair<std::size_t, Permutation> StabilizerChain::sift_from(std::size_t start,
                                                               Permutation g) const {
  for (std::size_t i = start; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    Point q = g[lv.beta];
    if (lv.slot[q] < 0) return {i, std::move(g)};
    g = compose(g, lv.trans[static_cast<std::size_t>(lv.slot[q])].inverse());
  }
  return {levels_.size(), std::move(g)};
}

StabilizerChain StabilizerChain::build(Point degree, const std::vector<Permutation>& gens) {
  StabilizerChain chain(degree);
  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (g.is_identity()) continue;
    if (chain.levels_.empty()) {
      chain.levels_.push_back(Level{first_moved(g), {}, {}, {}, {}});
    }
    chain.levels_[0].gens.push_back(g);
  }
  if (chain.levels_.empty()) return chain;
  chain.rebuild_orbit(0);

  // Deterministic Schreier-Sims: repeat full verification passes, adding the
  // residue of any Schreier generator that fails to sift, until a pass is
  // clean. Restarting keeps the invariants simple; group sizes here are
  // desk scale. Note levels_ may reallocate on insertion, so every access
  // below re-indexes instead of holding references across mutations.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < chain.levels_.size() && !changed; ++i) {
      for (std::size_t k = 0; k < chain.levels_[i].orbit.size() && !changed; ++k) {
        for (std::size_t gi = 0; gi < chain.levels_[i].gens.size() && !changed; ++gi) {
          const Level& lv = chain.levels_[i];
          Point p = lv.orbit[k];
          const Permutation& u = lv.trans[static_cast<std::size_t>(lv.slot[p])];
          const Permutation& g = lv.gens[gi];
          Point q = g[p];
          Permutation schreier =
              compose(compose(u, g), lv.trans[static_cast<std::size_t>(lv.slot[q])].inverse());
          if (schreier.is_identity()) continue;
          auto [j, residue] = chain.sift_from(i + 1, std::move(schreier));
          if (residue.is_identity()) continue;
          // The residue fixes base points 0..j-1, so it is a strong
          // generator for every level i+1..j; adding it to all of them
          // keeps the generator sets nested.
          if (j == chain.levels_.size())
            chain.levels_.push_back(Level{first_moved(residue), {}, {}, {}, {}});
          for (std::size_t l = i + 1; l <= j; ++l) {
            chain.levels_[l].gens.push_back(residue);
            chain.rebuild_orbit(l);
          }
          changed = true;
        }
      }
    }
  }

  chain.base_.clear();
  for (const Level& lv : chain.levels_) chain.base_.push_back(lv.beta);
  return chain;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t ord = 1;
  for (const Level& lv : levels_) {
    if (!checked_mul(ord, lv.orbit.size(), ord))
      throw std::overflow_error("group order exceeds 2^64");
  }
  return ord;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
  auto [i, residue] = sift_from(0, p);
  (void)i;
  return residue.is_identity();
}

}  // namespace sigma
