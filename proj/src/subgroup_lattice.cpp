#include "sigma/subgroup_lattice.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

#include "sigma/numbers.hpp"

namespace sigma {

namespace {

std::uint64_t pair_key(SubIdx a, SubIdx b) {
  return (std::uint64_t(a) << 32) | b;
}

}  // namespace

struct SubgroupLattice::Cache {
  std::mutex mu;
  std::unordered_map<SubIdx, std::vector<SubIdx>> subgroups_of;
  std::unordered_map<std::uint64_t, bool> normal_in;
  std::unordered_map<std::uint64_t, SubIdx> core_in;
  std::unordered_map<std::uint64_t, SubIdx> normal_closure_in;
  std::unordered_map<std::uint64_t, SubIdx> join_of;
  std::unordered_map<std::uint64_t, SubIdx> normalizer_of;
  std::unordered_map<std::uint64_t, SubIdx> centralizer_of;
  std::unordered_map<SubIdx, std::vector<SubIdx>> normals_of;
  std::unordered_map<SubIdx, std::vector<SubIdx>> maximals_of;
  std::unordered_map<SubIdx, ChiefSeries> chief;
  std::unordered_map<std::uint64_t, bool> subnormal;
  std::unordered_map<SubIdx, char> nilpotent;
  std::unordered_map<SubIdx, char> cyclic;
  std::unordered_map<std::uint64_t, bool> s_perm;
  std::unordered_map<std::uint64_t, SubIdx> s_core;
  std::unordered_map<SubIdx, SubIdx> z_u;
  std::unordered_map<std::uint64_t, char> hyper_embedded;
  std::unordered_map<SubIdx, std::vector<std::vector<SubIdx>>> classes_in;
};

SubgroupLattice::SubgroupLattice(SubgroupLattice&&) noexcept = default;
SubgroupLattice& SubgroupLattice::operator=(SubgroupLattice&&) noexcept = default;
SubgroupLattice::~SubgroupLattice() = default;

// Generic memo helper: one lock for lookup, compute outside the lock,
// idempotent insert under a second lock. Node references of the unordered
// maps stay valid, so returning a reference is safe.
template <typename Map, typename Key, typename Fn>
static auto& memoized(std::mutex& mu, Map& map, const Key& key, Fn&& fn) {
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = map.find(key);
    if (it != map.end()) return it->second;
  }
  auto value = fn();
  std::lock_guard<std::mutex> lock(mu);
  return map.emplace(key, std::move(value)).first->second;
}

bool SubgroupLattice::bits_less(const Bitset& a, const Bitset& b) {
  // lexicographic on sorted element lists; a strict prefix is smaller
  auto pa = a.find_first();
  auto pb = b.find_first();
  while (true) {
    if (pa == Bitset::npos) return pb != Bitset::npos;
    if (pb == Bitset::npos) return false;
    if (pa != pb) return pa < pb;
    pa = a.find_next(pa);
    pb = b.find_next(pb);
  }
}

Bitset SubgroupLattice::close_gens(const std::vector<EltIdx>& gens) const {
  Bitset bs(n_);
  bs.set(0);
  std::vector<EltIdx> stack{0};
  while (!stack.empty()) {
    EltIdx x = stack.back();
    stack.pop_back();
    for (EltIdx g : gens) {
      EltIdx y = mult(x, g);
      if (!bs.test(y)) {
        bs.set(y);
        stack.push_back(y);
      }
    }
  }
  return bs;
}

Bitset SubgroupLattice::conj_bits(const Bitset& s, EltIdx by) const {
  Bitset out(n_);
  for (auto i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
    out.set(conj_elt(static_cast<EltIdx>(i), by));
  return out;
}

SubgroupLattice SubgroupLattice::build(const FiniteGroup& g, std::uint32_t cutoff) {
  if (cutoff > 60000) throw std::invalid_argument("lattice cutoff above element-index limit");
  std::uint64_t order = g.order();
  if (order > cutoff)
    throw CutoffExceeded("group of order " + std::to_string(order) +
                         " exceeds the lattice cutoff " + std::to_string(cutoff));

  SubgroupLattice lat;
  lat.group_ = std::make_shared<const FiniteGroup>(g);
  lat.elements_ = g.elements();  // sorted; identity is index 0
  lat.n_ = static_cast<std::uint32_t>(lat.elements_.size());
  lat.cache_ = std::make_unique<Cache>();

  lat.elt_index_.reserve(lat.n_ * 2);
  for (std::uint32_t i = 0; i < lat.n_; ++i)
    lat.elt_index_.emplace(lat.elements_[i], static_cast<EltIdx>(i));

  lat.mult_.resize(std::size_t(lat.n_) * lat.n_);
  for (std::uint32_t i = 0; i < lat.n_; ++i)
    for (std::uint32_t j = 0; j < lat.n_; ++j)
      lat.mult_[std::size_t(i) * lat.n_ + j] =
          lat.elt_index_.at(compose(lat.elements_[i], lat.elements_[j]));

  lat.inv_.resize(lat.n_);
  lat.elt_order_.resize(lat.n_);
  for (std::uint32_t i = 0; i < lat.n_; ++i) {
    lat.inv_[i] = lat.elt_index_.at(lat.elements_[i].inverse());
    lat.elt_order_[i] = lat.elements_[i].order();
  }
  for (const Permutation& gen : g.generators()) lat.group_gens_.push_back(lat.elt_index_.at(gen));

  // Atoms: cyclic subgroups of prime-power order, deduplicated.
  std::map<Bitset, EltIdx> atom_map;
  for (std::uint32_t i = 1; i < lat.n_; ++i) {
    if (!is_prime_power(lat.elt_order_[i])) continue;
    Bitset bs(lat.n_);
    EltIdx x = static_cast<EltIdx>(i);
    EltIdx cur = x;
    bs.set(0);
    while (!bs.test(cur)) {
      bs.set(cur);
      cur = lat.mult(cur, x);
    }
    atom_map.emplace(std::move(bs), x);
  }
  struct Atom {
    Bitset bits;
    EltIdx gen;
  };
  std::vector<Atom> atoms;
  for (auto& [bs, gen] : atom_map) atoms.push_back({bs, gen});
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    if (a.bits.count() != b.bits.count()) return a.bits.count() < b.bits.count();
    return bits_less(a.bits, b.bits);
  });

  // Join closure from the trivial subgroup: every subgroup is the join of
  // its prime-power cyclic subgroups, so this reaches all of them.
  struct Work {
    Bitset bits;
    std::vector<EltIdx> gens;
  };
  std::map<Bitset, SubIdx> seen;
  std::vector<Work> work;
  auto push = [&](Bitset bs, std::vector<EltIdx> gens) {
    if (seen.emplace(bs, static_cast<SubIdx>(work.size())).second)
      work.push_back({std::move(bs), std::move(gens)});
  };
  Bitset triv(lat.n_);
  triv.set(0);
  push(std::move(triv), {});
  for (const Atom& a : atoms) push(a.bits, {a.gen});
  push(lat.close_gens(lat.group_gens_), lat.group_gens_);  // ambient itself

  for (std::size_t w = 0; w < work.size(); ++w) {
    for (const Atom& a : atoms) {
      if (a.bits.is_subset_of(work[w].bits)) continue;
      std::vector<EltIdx> gens = work[w].gens;
      gens.push_back(a.gen);
      Bitset joined = lat.close_gens(gens);
      if (!seen.count(joined)) push(std::move(joined), std::move(gens));
    }
  }

  // canonical order: by order, then fingerprint
  std::vector<SubIdx> perm(work.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](SubIdx x, SubIdx y) {
    std::size_t cx = work[x].bits.count(), cy = work[y].bits.count();
    if (cx != cy) return cx < cy;
    return bits_less(work[x].bits, work[y].bits);
  });
  lat.subs_.reserve(work.size());
  for (SubIdx w : perm) {
    lat.sub_index_.emplace(work[w].bits, static_cast<SubIdx>(lat.subs_.size()));
    lat.sub_order_.push_back(work[w].bits.count());
    lat.sub_gens_.push_back(std::move(work[w].gens));
    lat.subs_.push_back(std::move(work[w].bits));
  }

  // conjugacy classes: orbits under conjugation by the ambient generators
  lat.class_of_.assign(lat.subs_.size(), UINT32_MAX);
  for (SubIdx s = 0; s < lat.subs_.size(); ++s) {
    if (lat.class_of_[s] != UINT32_MAX) continue;
    std::uint32_t cls = static_cast<std::uint32_t>(lat.classes_.size());
    std::vector<SubIdx> orbit{s};
    lat.class_of_[s] = cls;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (EltIdx g : lat.group_gens_) {
        SubIdx img = lat.sub_index_.at(lat.conj_bits(lat.subs_[orbit[k]], g));
        if (lat.class_of_[img] == UINT32_MAX) {
          lat.class_of_[img] = cls;
          orbit.push_back(img);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    lat.classes_.push_back(std::move(orbit));
  }
  return lat;
}

EltIdx SubgroupLattice::element_index(const Permutation& p) const {
  auto it = elt_index_.find(p);
  if (it == elt_index_.end()) throw std::invalid_argument("element not in the ambient group");
  return it->second;
}

SubIdx SubgroupLattice::index_of_bits(const Bitset& b) const {
  auto it = sub_index_.find(b);
  if (it == sub_index_.end()) throw std::logic_error("bitset is not a subgroup of the lattice");
  return it->second;
}

FiniteGroup SubgroupLattice::as_group(SubIdx s) const {
  std::vector<Permutation> gens;
  for (EltIdx g : sub_gens_[s]) gens.push_back(elements_[g]);
  return FiniteGroup(group().degree(), std::move(gens)).with_parent(group());
}

SubIdx SubgroupLattice::locate(const FiniteGroup& sub) const {
  if (sub.degree() != group().degree()) throw std::invalid_argument("locate: degree mismatch");
  std::vector<EltIdx> gens;
  for (const Permutation& g : sub.generators()) gens.push_back(element_index(g));
  return index_of_bits(close_gens(gens));
}

SubIdx SubgroupLattice::conjugate_subgroup(SubIdx s, EltIdx by) const {
  return sub_index_.at(conj_bits(subs_[s], by));
}

std::vector<std::vector<SubIdx>> SubgroupLattice::conjugacy_classes_in(SubIdx amb) const {
  return memoized(cache_->mu, cache_->classes_in, amb, [&] {
    std::vector<std::vector<SubIdx>> out;
    const std::vector<SubIdx> subs = subgroups_of(amb);
    std::unordered_map<SubIdx, bool> seen;
    for (SubIdx s : subs) {
      if (seen.count(s)) continue;
      std::vector<SubIdx> orbit{s};
      seen[s] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (EltIdx g : sub_gens_[amb]) {
          SubIdx img = sub_index_.at(conj_bits(subs_[orbit[k]], g));
          if (!seen.count(img)) {
            seen[img] = true;
            orbit.push_back(img);
          }
        }
      std::sort(orbit.begin(), orbit.end());
      out.push_back(std::move(orbit));
    }
    return out;
  });
}

const std::vector<SubIdx>& SubgroupLattice::subgroups_of(SubIdx amb) const {
  return memoized(cache_->mu, cache_->subgroups_of, amb, [&] {
    std::vector<SubIdx> out;
    for (SubIdx s = 0; s < subs_.size(); ++s)
      if (subs_[s].is_subset_of(subs_[amb])) out.push_back(s);
    return out;
  });
}

bool SubgroupLattice::is_normal_in(SubIdx sub, SubIdx amb) const {
  return memoized(cache_->mu, cache_->normal_in, pair_key(sub, amb), [&] {
    for (EltIdx g : sub_gens_[amb])
      if (conj_bits(subs_[sub], g) != subs_[sub]) return false;
    return true;
  });
}

SubIdx SubgroupLattice::core_in(SubIdx sub, SubIdx amb) const {
  return memoized(cache_->mu, cache_->core_in, pair_key(sub, amb), [&] {
    Bitset cur = subs_[sub];
    bool shrank = true;
    while (shrank) {
      shrank = false;
      for (EltIdx g : sub_gens_[amb]) {
        Bitset conj = conj_bits(cur, g);
        if (conj != cur) {
          cur &= conj;
          shrank = true;
        }
      }
    }
    return index_of_bits(cur);
  });
}

SubIdx SubgroupLattice::normal_closure_in(SubIdx sub, SubIdx amb) const {
  return memoized(cache_->mu, cache_->normal_closure_in, pair_key(sub, amb), [&] {
    SubIdx cur = sub;
    bool grew = true;
    while (grew) {
      grew = false;
      for (EltIdx g : sub_gens_[amb]) {
        Bitset conj = conj_bits(subs_[cur], g);
        if (!conj.is_subset_of(subs_[cur])) {
          cur = join_of(cur, sub_index_.at(conj));
          grew = true;
        }
      }
    }
    return cur;
  });
}

SubIdx SubgroupLattice::join_of(SubIdx a, SubIdx b) const {
  if (contains(a, b)) return b;
  if (contains(b, a)) return a;
  SubIdx lo = std::min(a, b), hi = std::max(a, b);
  return memoized(cache_->mu, cache_->join_of, pair_key(lo, hi), [&] {
    std::vector<EltIdx> gens = sub_gens_[lo];
    gens.insert(gens.end(), sub_gens_[hi].begin(), sub_gens_[hi].end());
    return index_of_bits(close_gens(gens));
  });
}

SubIdx SubgroupLattice::meet_of(SubIdx a, SubIdx b) const {
  return index_of_bits(subs_[a] & subs_[b]);
}

SubIdx SubgroupLattice::join_all(const std::vector<SubIdx>& parts) const {
  SubIdx cur = bottom();
  for (SubIdx p : parts) cur = join_of(cur, p);
  return cur;
}

SubIdx SubgroupLattice::normalizer_of(SubIdx sub, SubIdx amb) const {
  return memoized(cache_->mu, cache_->normalizer_of, pair_key(sub, amb), [&] {
    Bitset out(n_);
    const Bitset& a = subs_[amb];
    const Bitset& s = subs_[sub];
    for (auto x = a.find_first(); x != Bitset::npos; x = a.find_next(x)) {
      bool ok = true;
      for (EltIdx g : sub_gens_[sub])
        if (!s.test(conj_elt(g, static_cast<EltIdx>(x)))) {
          ok = false;
          break;
        }
      if (ok) out.set(x);
    }
    return index_of_bits(out);
  });
}

SubIdx SubgroupLattice::centralizer_of(SubIdx sub, SubIdx amb) const {
  return memoized(cache_->mu, cache_->centralizer_of, pair_key(sub, amb), [&] {
    Bitset out(n_);
    const Bitset& a = subs_[amb];
    for (auto x = a.find_first(); x != Bitset::npos; x = a.find_next(x)) {
      bool ok = true;
      for (EltIdx g : sub_gens_[sub])
        if (mult(static_cast<EltIdx>(x), g) != mult(g, static_cast<EltIdx>(x))) {
          ok = false;
          break;
        }
      if (ok) out.set(x);
    }
    return index_of_bits(out);
  });
}

bool SubgroupLattice::permutes(SubIdx a, SubIdx b) const {
  const Bitset& A = subs_[a];
  const Bitset& B = subs_[b];
  Bitset prod(n_);
  for (auto x = A.find_first(); x != Bitset::npos; x = A.find_next(x))
    for (auto y = B.find_first(); y != Bitset::npos; y = B.find_next(y))
      prod.set(mult(static_cast<EltIdx>(x), static_cast<EltIdx>(y)));
  // AB = BA iff the product set is inverse-closed
  for (auto p = prod.find_first(); p != Bitset::npos; p = prod.find_next(p))
    if (!prod.test(inv_[p])) return false;
  return true;
}

const std::vector<SubIdx>& SubgroupLattice::normal_subgroups_of(SubIdx amb) const {
  return memoized(cache_->mu, cache_->normals_of, amb, [&] {
    std::vector<SubIdx> out;
    for (SubIdx s : subgroups_of(amb))
      if (is_normal_in(s, amb)) out.push_back(s);
    return out;
  });
}

std::vector<SubIdx> SubgroupLattice::minimal_normal_subgroups_of(SubIdx amb) const {
  std::vector<SubIdx> out;
  const auto& normals = normal_subgroups_of(amb);
  for (SubIdx n : normals) {
    if (n == bottom()) continue;
    bool minimal = true;
    for (SubIdx m : normals) {
      if (m == bottom() || m == n) continue;
      if (order_of(m) < order_of(n) && contains(m, n)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

const std::vector<SubIdx>& SubgroupLattice::maximal_subgroups_of(SubIdx amb) const {
  return memoized(cache_->mu, cache_->maximals_of, amb, [&] {
    std::vector<SubIdx> out;
    const auto& subs = subgroups_of(amb);
    for (SubIdx s : subs) {
      if (s == amb) continue;
      bool maximal = true;
      for (SubIdx t : subs) {
        if (t == amb || t == s) continue;
        if (order_of(t) > order_of(s) && contains(s, t)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(s);
    }
    return out;
  });
}

NormalStructure SubgroupLattice::normal_structure(SubIdx amb) const {
  return NormalStructure{normal_subgroups_of(amb), minimal_normal_subgroups_of(amb),
                         maximal_subgroups_of(amb)};
}

SubIdx SubgroupLattice::frattini(SubIdx amb) const {
  const auto& maxes = maximal_subgroups_of(amb);
  if (maxes.empty()) return amb;  // trivial ambient
  Bitset cur = subs_[maxes.front()];
  for (SubIdx m : maxes) cur &= subs_[m];
  return index_of_bits(cur);
}

SubIdx SubgroupLattice::fitting(SubIdx amb) const {
  std::vector<SubIdx> parts;
  for (SubIdx s : normal_subgroups_of(amb))
    if (is_nilpotent_subgroup(s)) parts.push_back(s);
  return join_all(parts);
}

ChiefSeries SubgroupLattice::make_chief_series(SubIdx amb, SubIdx through,
                                               std::mt19937_64* rng) const {
  ChiefSeries out;
  const auto normals = normal_subgroups_of(amb);
  SubIdx cur = bottom();
  out.terms.push_back(cur);
  bool reached_through = (through == bottom());
  while (cur != amb) {
    // Candidates: normal subgroups strictly above cur (restricted to lie
    // inside `through` until it is reached). A candidate of minimal order
    // is automatically a chief step.
    std::vector<SubIdx> cands;
    for (SubIdx nrm : normals) {
      if (nrm == cur || !contains(cur, nrm)) continue;
      if (!reached_through && !contains(nrm, through)) continue;
      cands.push_back(nrm);
    }
    if (cands.empty()) throw std::logic_error("chief series: no candidate step");
    SubIdx next;
    if (rng) {
      // any containment-minimal candidate, chosen at random
      std::vector<SubIdx> minimal;
      for (SubIdx cnd : cands) {
        bool ok = true;
        for (SubIdx other : cands)
          if (other != cnd && order_of(other) < order_of(cnd) && contains(other, cnd)) {
            ok = false;
            break;
          }
        if (ok) minimal.push_back(cnd);
      }
      next = minimal[(*rng)() % minimal.size()];
    } else {
      next = cands.front();
      for (SubIdx cnd : cands) {
        if (order_of(cnd) < order_of(next) ||
            (order_of(cnd) == order_of(next) && bits_less(subs_[cnd], subs_[next])))
          next = cnd;
      }
    }
    ChiefFactor f;
    f.order = order_of(next) / order_of(cur);
    f.prime_order = is_prime(f.order);
    // centralizer of the factor H/K in amb: x with [x, gens(H)] inside K
    Bitset cent(n_);
    const Bitset& a = subs_[amb];
    const Bitset& kbits = subs_[cur];
    for (auto x = a.find_first(); x != Bitset::npos; x = a.find_next(x)) {
      bool ok = true;
      for (EltIdx h : sub_gens_[next]) {
        EltIdx comm = mult(mult(mult(inv_[x], inv_[h]), static_cast<EltIdx>(x)), h);
        if (!kbits.test(comm)) {
          ok = false;
          break;
        }
      }
      if (ok) cent.set(x);
    }
    f.centralizer_index = order_of(amb) / cent.count();
    out.factors.push_back(f);
    out.terms.push_back(next);
    cur = next;
    if (cur == through) reached_through = true;
  }
  return out;
}

const ChiefSeries& SubgroupLattice::chief_series(SubIdx amb) const {
  return memoized(cache_->mu, cache_->chief, amb,
                  [&] { return make_chief_series(amb, bottom(), nullptr); });
}

ChiefSeries SubgroupLattice::chief_series_through(SubIdx amb, SubIdx through) const {
  if (!contains(through, amb) || !is_normal_in(through, amb))
    throw std::invalid_argument("chief_series_through: subgroup is not normal in the ambient");
  return make_chief_series(amb, through, nullptr);
}

ChiefSeries SubgroupLattice::chief_series_randomized(SubIdx amb, std::mt19937_64& rng) const {
  return make_chief_series(amb, bottom(), &rng);
}

bool SubgroupLattice::is_subnormal(SubIdx sub, SubIdx amb) const {
  return memoized(cache_->mu, cache_->subnormal, pair_key(sub, amb), [&] {
    SubIdx cur = amb;
    while (true) {
      SubIdx next = normal_closure_in(sub, cur);
      if (next == cur) return cur == sub;
      cur = next;
    }
  });
}

bool SubgroupLattice::is_soluble(SubIdx amb) const {
  for (const ChiefFactor& f : chief_series(amb).factors)
    if (!is_prime_power(f.order)) return false;
  return true;
}

bool SubgroupLattice::is_supersoluble(SubIdx amb) const {
  for (const ChiefFactor& f : chief_series(amb).factors)
    if (!f.prime_order) return false;
  return true;
}

bool SubgroupLattice::is_nilpotent_subgroup(SubIdx s) const {
  return memoized(cache_->mu, cache_->nilpotent, s, [&]() -> char {
    for (auto& [p, e] : factorize(order_of(s)))
      if (sylows_of(s, p).size() != 1) return 0;
    return 1;
  }) != 0;
}

bool SubgroupLattice::is_cyclic_subgroup(SubIdx s) const {
  return memoized(cache_->mu, cache_->cyclic, s, [&]() -> char {
    const Bitset& b = subs_[s];
    for (auto x = b.find_first(); x != Bitset::npos; x = b.find_next(x))
      if (elt_order_[x] == order_of(s)) return 1;
    return 0;
  }) != 0;
}

bool SubgroupLattice::is_abelian_subgroup(SubIdx s) const {
  const auto& gens = sub_gens_[s];
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (mult(gens[i], gens[j]) != mult(gens[j], gens[i])) return false;
  return true;
}

bool SubgroupLattice::hypercyclically_embedded(SubIdx e, SubIdx amb) const {
  return memoized(cache_->mu, cache_->hyper_embedded, pair_key(e, amb), [&]() -> char {
    if (e == bottom()) return 1;
    ChiefSeries series = chief_series_through(amb, e);
    for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
      if (!contains(series.terms[i + 1], e)) break;  // only factors below e
      if (!series.factors[i].prime_order) return 0;
    }
    return 1;
  }) != 0;
}

SubIdx SubgroupLattice::z_u_hypercentre(SubIdx amb) const {
  return memoized(cache_->mu, cache_->z_u, amb, [&] {
    std::vector<SubIdx> parts;
    for (SubIdx nrm : normal_subgroups_of(amb))
      if (hypercyclically_embedded(nrm, amb)) parts.push_back(nrm);
    return join_all(parts);
  });
}

std::vector<SubIdx> SubgroupLattice::sylows_of(SubIdx amb, std::uint64_t p) const {
  std::uint64_t n = order_of(amb);
  std::uint64_t ppart = 1;
  while (n % p == 0) {
    ppart *= p;
    n /= p;
  }
  std::vector<SubIdx> out;
  for (SubIdx s : subgroups_of(amb))
    if (order_of(s) == ppart) out.push_back(s);
  return out;
}

bool SubgroupLattice::s_permutable(SubIdx h, SubIdx amb) const {
  return memoized(cache_->mu, cache_->s_perm, pair_key(h, amb), [&] {
    for (auto& [p, e] : factorize(order_of(amb)))
      for (SubIdx syl : sylows_of(amb, p))
        if (!permutes(h, syl)) return false;
    return true;
  });
}

SubIdx SubgroupLattice::s_core(SubIdx h, SubIdx amb) const {
  return memoized(cache_->mu, cache_->s_core, pair_key(h, amb), [&] {
    SubIdx cur = bottom();
    for (SubIdx s : subgroups_of(h))
      if (!contains(s, cur) && s_permutable(s, amb)) cur = join_of(cur, s);
    return cur;
  });
}

bool SubgroupLattice::c_normal(SubIdx h, SubIdx amb) const {
  std::uint64_t target = order_of(amb);
  SubIdx hcore = core_in(h, amb);
  for (SubIdx t : normal_subgroups_of(amb)) {
    Bitset inter = subs_[h] & subs_[t];
    if (order_of(h) * order_of(t) != target * inter.count()) continue;
    if (inter.is_subset_of(subs_[hcore])) return true;
  }
  return false;
}

SubgroupLattice::Supplement SubgroupLattice::weakly_s_permutable(SubIdx h, SubIdx amb) const {
  std::uint64_t target = order_of(amb);
  SubIdx score = s_core(h, amb);
  for (SubIdx t : subgroups_of(amb)) {
    if (order_of(t) * order_of(h) < target) continue;
    Bitset inter = subs_[h] & subs_[t];
    if (order_of(h) * order_of(t) != target * inter.count()) continue;
    if (!inter.is_subset_of(subs_[score])) continue;
    if (is_subnormal(t, amb)) return {true, t};
  }
  return {false, 0};
}

}  // namespace sigma
