#include "sigma/finite_group.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "sigma/numbers.hpp"

namespace sigma {

using PermSet = std::unordered_set<Permutation, Permutation::Hash>;

struct FiniteGroup::Impl {
  Point degree;
  std::vector<Permutation> gens;
  std::optional<FiniteGroup> parent;

  mutable std::mutex mu;
  mutable std::shared_ptr<const StabilizerChain> chain;
  mutable std::shared_ptr<const std::vector<Permutation>> elements;
  mutable std::shared_ptr<const PermSet> element_set;
};

FiniteGroup::FiniteGroup(Point degree, std::vector<Permutation> generators) {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
  for (const Permutation& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  // drop identities, they contribute nothing
  std::erase_if(generators, [](const Permutation& g) { return g.is_identity(); });
  impl->gens = std::move(generators);
  impl_ = std::move(impl);
}

FiniteGroup FiniteGroup::trivial(Point degree) { return FiniteGroup(degree, {}); }

Point FiniteGroup::degree() const { return impl_->degree; }

const std::vector<Permutation>& FiniteGroup::generators() const { return impl_->gens; }

const FiniteGroup* FiniteGroup::parent() const {
  return impl_->parent ? &*impl_->parent : nullptr;
}

FiniteGroup FiniteGroup::with_parent(const FiniteGroup& parent) const {
  auto impl = std::make_shared<Impl>();
  impl->degree = impl_->degree;
  impl->gens = impl_->gens;
  impl->parent = parent;
  return FiniteGroup(std::move(impl));
}

const StabilizerChain& FiniteGroup::chain() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (!impl_->chain)
    impl_->chain = std::make_shared<const StabilizerChain>(
        StabilizerChain::build(impl_->degree, impl_->gens));
  return *impl_->chain;
}

std::uint64_t FiniteGroup::order() const { return chain().order(); }

bool FiniteGroup::is_abelian() const {
  const auto& gs = impl_->gens;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (compose(gs[i], gs[j]) != compose(gs[j], gs[i])) return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  std::uint64_t n = order();
  if (n == 1) return true;
  if (n > kEnumerationCutoff) throw std::runtime_error("cyclicity test needs enumeration");
  for (const Permutation& e : elements())
    if (e.order() == n) return true;
  return false;
}

bool FiniteGroup::contains(const Permutation& p) const {
  if (p.degree() != impl_->degree) throw std::invalid_argument("degree mismatch in contains");
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (impl_->element_set) return impl_->element_set->count(p) > 0;
  }
  return chain().contains(p);
}

bool FiniteGroup::contains_group(const FiniteGroup& h) const {
  if (h.degree() != degree()) return false;
  for (const Permutation& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

const std::vector<Permutation>& FiniteGroup::elements() const {
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (impl_->elements) return *impl_->elements;
  }
  std::uint64_t n = order();
  if (n > kEnumerationCutoff)
    throw std::runtime_error("group of order " + std::to_string(n) +
                             " exceeds the enumeration cutoff " +
                             std::to_string(kEnumerationCutoff));
  // Cayley-graph BFS from the identity.
  PermSet seen;
  seen.reserve(static_cast<std::size_t>(n) * 2);
  std::vector<Permutation> todo;
  Permutation id = Permutation::identity(impl_->degree);
  seen.insert(id);
  todo.push_back(id);
  for (std::size_t k = 0; k < todo.size(); ++k) {
    Permutation cur = todo[k];
    for (const Permutation& g : impl_->gens) {
      Permutation nxt = compose(cur, g);
      if (seen.insert(nxt).second) todo.push_back(std::move(nxt));
    }
  }
  std::sort(todo.begin(), todo.end());
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->elements) {
      impl_->elements = std::make_shared<const std::vector<Permutation>>(std::move(todo));
      impl_->element_set = std::make_shared<const PermSet>(std::move(seen));
    }
    return *impl_->elements;
  }
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.impl_ == b.impl_) return true;
  if (a.degree() != b.degree()) return false;
  return a.contains_group(b) && b.contains_group(a);
}

SubgroupPair::SubgroupPair(FiniteGroup sub_, FiniteGroup ambient_)
    : sub(std::move(sub_)), ambient(std::move(ambient_)) {
  if (sub.degree() != ambient.degree())
    throw std::invalid_argument("subgroup/ambient degree mismatch");
  if (!ambient.contains_group(sub))
    throw std::invalid_argument("not a subgroup: a generator lies outside the ambient group");
}

FiniteGroup group_from_generators(Point degree, std::vector<Permutation> gens) {
  return FiniteGroup(degree, std::move(gens));
}

FiniteGroup subgroup_generated(const FiniteGroup& ambient, std::vector<Permutation> seeds) {
  for (const Permutation& s : seeds) {
    if (s.degree() != ambient.degree()) throw std::invalid_argument("seed degree mismatch");
    if (!ambient.contains(s)) throw std::invalid_argument("seed not contained in ambient group");
  }
  return FiniteGroup(ambient.degree(), std::move(seeds)).with_parent(ambient);
}

FiniteGroup normal_closure(const FiniteGroup& ambient, const FiniteGroup& h) {
  if (!ambient.contains_group(h)) throw std::invalid_argument("normal_closure: not a subgroup pair");
  std::vector<Permutation> gens = h.generators();
  FiniteGroup cur(ambient.degree(), gens);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Permutation> snapshot = cur.generators();
    for (const Permutation& g : ambient.generators()) {
      for (const Permutation& x : snapshot) {
        Permutation y = conjugate(x, g);
        if (!cur.contains(y)) {
          gens.push_back(std::move(y));
          cur = FiniteGroup(ambient.degree(), gens);
          grew = true;
        }
      }
    }
  }
  return cur.with_parent(ambient);
}

bool is_normal_in(const FiniteGroup& h, const FiniteGroup& ambient) {
  for (const Permutation& g : ambient.generators())
    for (const Permutation& x : h.generators())
      if (!h.contains(conjugate(x, g))) return false;
  return true;
}

FiniteGroup conjugate_subgroup(const FiniteGroup& h, const Permutation& x) {
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const Permutation& g : h.generators()) gens.push_back(conjugate(g, x));
  FiniteGroup out(h.degree(), std::move(gens));
  if (h.parent()) out = out.with_parent(*h.parent());
  return out;
}

FiniteGroup meet(const FiniteGroup& h, const FiniteGroup& k) {
  if (h.degree() != k.degree()) throw std::invalid_argument("meet: degree mismatch");
  const FiniteGroup& small = h.order() <= k.order() ? h : k;
  const FiniteGroup& other = h.order() <= k.order() ? k : h;
  std::vector<Permutation> inter;
  for (const Permutation& e : small.elements())
    if (other.contains(e)) inter.push_back(e);
  std::vector<Permutation> gens = reduce_generators(h.degree(), inter);
  FiniteGroup out(h.degree(), std::move(gens));
  if (h.parent()) out = out.with_parent(*h.parent());
  return out;
}

FiniteGroup join(const FiniteGroup& h, const FiniteGroup& k) {
  if (h.degree() != k.degree()) throw std::invalid_argument("join: degree mismatch");
  std::vector<Permutation> gens = h.generators();
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  FiniteGroup out(h.degree(), std::move(gens));
  if (h.parent()) out = out.with_parent(*h.parent());
  return out;
}

FiniteGroup core(const FiniteGroup& ambient, const FiniteGroup& h) {
  if (!ambient.contains_group(h)) throw std::invalid_argument("core: not a subgroup pair");
  // Fixed point of N -> N meet N^g over the ambient generators; ends at the
  // largest subgroup of h normal in ambient.
  FiniteGroup cur = h;
  bool shrank = true;
  while (shrank) {
    shrank = false;
    for (const Permutation& g : ambient.generators()) {
      FiniteGroup conj = conjugate_subgroup(cur, g);
      if (!cur.contains_group(conj) || !conj.contains_group(cur)) {
        cur = meet(cur, conj);
        shrank = true;
      }
    }
  }
  return cur.with_parent(ambient);
}

FiniteGroup normalizer(const FiniteGroup& ambient, const FiniteGroup& h) {
  if (!ambient.contains_group(h)) throw std::invalid_argument("normalizer: not a subgroup pair");
  std::vector<Permutation> fix;
  for (const Permutation& x : ambient.elements()) {
    bool ok = true;
    for (const Permutation& g : h.generators())
      if (!h.contains(conjugate(g, x))) {
        ok = false;
        break;
      }
    if (ok) fix.push_back(x);
  }
  return FiniteGroup(ambient.degree(), reduce_generators(ambient.degree(), fix))
      .with_parent(ambient);
}

FiniteGroup centralizer(const FiniteGroup& ambient, const FiniteGroup& h) {
  if (!ambient.contains_group(h)) throw std::invalid_argument("centralizer: not a subgroup pair");
  std::vector<Permutation> fix;
  for (const Permutation& x : ambient.elements()) {
    bool ok = true;
    for (const Permutation& g : h.generators())
      if (compose(x, g) != compose(g, x)) {
        ok = false;
        break;
      }
    if (ok) fix.push_back(x);
  }
  return FiniteGroup(ambient.degree(), reduce_generators(ambient.degree(), fix))
      .with_parent(ambient);
}

std::uint64_t product_set_size(const FiniteGroup& h, const FiniteGroup& k) {
  PermSet prod;
  for (const Permutation& a : h.elements())
    for (const Permutation& b : k.elements()) prod.insert(compose(a, b));
  return prod.size();
}

bool permutes(const FiniteGroup& h, const FiniteGroup& k) {
  if (h.degree() != k.degree()) throw std::invalid_argument("permutes: degree mismatch");
  PermSet prod;
  for (const Permutation& a : h.elements())
    for (const Permutation& b : k.elements()) prod.insert(compose(a, b));
  // HK = KH iff the product set is inverse-closed.
  for (const Permutation& p : prod)
    if (!prod.count(p.inverse())) return false;
  return true;
}

std::vector<Permutation> reduce_generators(Point degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> gens;
  FiniteGroup cur = FiniteGroup::trivial(degree);
  for (const Permutation& e : elements) {
    if (e.is_identity() || cur.contains(e)) continue;
    gens.push_back(e);
    cur = FiniteGroup(degree, gens);
  }
  return gens;
}

FiniteGroup sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("sylow_subgroup: p must be prime");
  std::uint64_t n = g.order();
  std::uint64_t ppart = 1;
  while (n % p == 0) {
    ppart *= p;
    n /= p;
  }
  if (ppart == 1) return FiniteGroup::trivial(g.degree()).with_parent(g);

  auto p_part_of = [&](const Permutation& x) {
    // power x down to its p-element component
    std::uint64_t m = x.order();
    std::uint64_t q = m;
    while (q % p == 0) q /= p;
    Permutation y = Permutation::identity(x.degree());
    Permutation base = x;
    std::uint64_t e = q;
    while (e) {  // y = x^q
      if (e & 1) y = compose(y, base);
      base = compose(base, base);
      e >>= 1;
    }
    return y;
  };

  // Start from any p-element, then grow inside normalizers until the order
  // reaches the full p-part.
  FiniteGroup sub = FiniteGroup::trivial(g.degree());
  for (const Permutation& e : g.elements()) {
    Permutation y = p_part_of(e);
    if (!y.is_identity()) {
      sub = FiniteGroup(g.degree(), {y});
      break;
    }
  }
  if (sub.order() == 1) throw std::logic_error("sylow_subgroup: no p-element found");
  while (sub.order() < ppart) {
    FiniteGroup nz = normalizer(g, sub);
    bool grew = false;
    for (const Permutation& e : nz.elements()) {
      Permutation y = p_part_of(e);
      if (y.is_identity() || sub.contains(y)) continue;
      std::vector<Permutation> gens = sub.generators();
      gens.push_back(y);
      sub = FiniteGroup(g.degree(), gens);
      grew = true;
      break;
    }
    if (!grew) throw std::logic_error("sylow_subgroup: failed to grow p-subgroup");
  }
  return sub.with_parent(g);
}

FiniteGroup derived_subgroup(const FiniteGroup& g) {
  std::vector<Permutation> comms;
  const auto& gs = g.generators();
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j) {
      Permutation c = commutator(gs[i], gs[j]);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(g, FiniteGroup(g.degree(), std::move(comms)));
}

StructureFlags structure_predicates(const FiniteGroup& g) {
  StructureFlags out;

  FiniteGroup cur = g;
  while (true) {
    if (cur.order() == 1) {
      out.soluble = true;
      break;
    }
    FiniteGroup next = derived_subgroup(cur);
    if (next.order() == cur.order()) break;  // perfect, not soluble
    cur = next;
  }

  // lower central series: L_{k+1} = [G, L_k]
  FiniteGroup lcs = g;
  while (true) {
    if (lcs.order() == 1) {
      out.nilpotent = true;
      break;
    }
    std::vector<Permutation> comms;
    for (const Permutation& a : g.generators())
      for (const Permutation& b : lcs.generators()) {
        Permutation c = commutator(a, b);
        if (!c.is_identity()) comms.push_back(std::move(c));
      }
    FiniteGroup next = normal_closure(g, FiniteGroup(g.degree(), std::move(comms)));
    if (next.order() == lcs.order()) break;
    lcs = next;
  }
  return out;
}

Quotient quotient_group(const FiniteGroup& g, const FiniteGroup& n) {
  if (!g.contains_group(n)) throw std::invalid_argument("quotient: N is not a subgroup of G");
  if (!is_normal_in(n, g)) throw std::invalid_argument("quotient: N is not normal in G");

  const std::vector<Permutation>& nelems = n.elements();
  auto canonical = [&](const Permutation& x) {
    // minimal element of the coset Nx
    Permutation best = compose(nelems[0], x);
    for (std::size_t i = 1; i < nelems.size(); ++i) {
      Permutation cand = compose(nelems[i], x);
      if (cand < best) best = std::move(cand);
    }
    return best;
  };

  std::vector<Permutation> reps;
  std::unordered_map<Permutation, Point, Permutation::Hash> coset_of;
  Permutation id_rep = canonical(Permutation::identity(g.degree()));
  reps.push_back(id_rep);
  coset_of.emplace(id_rep, 0);
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (const Permutation& gen : g.generators()) {
      Permutation rep = canonical(compose(reps[k], gen));
      if (!coset_of.count(rep)) {
        coset_of.emplace(rep, static_cast<Point>(reps.size()));
        reps.push_back(std::move(rep));
      }
    }
  }

  Point qdeg = static_cast<Point>(reps.size());
  auto act = [&](const Permutation& x) {
    std::vector<Point> im(qdeg);
    for (Point c = 0; c < qdeg; ++c) im[c] = coset_of.at(canonical(compose(reps[c], x)));
    return Permutation(std::move(im));
  };

  std::vector<Permutation> qgens;
  if (qdeg == 1) {
    // trivial quotient still needs a well-formed degree-1 group
    return Quotient(g, n, FiniteGroup::trivial(1), std::move(reps), std::move(coset_of));
  }
  for (const Permutation& gen : g.generators()) qgens.push_back(act(gen));
  FiniteGroup q(qdeg, std::move(qgens));
  return Quotient(g, n, std::move(q), std::move(reps), std::move(coset_of));
}

Permutation Quotient::project(const Permutation& g) const {
  if (!source_.contains(g)) throw std::invalid_argument("project: element not in source group");
  Point qdeg = group_.degree();
  if (qdeg == 1) return Permutation::identity(1);
  const std::vector<Permutation>& nelems = kernel_.elements();
  auto canonical = [&](const Permutation& x) {
    Permutation best = compose(nelems[0], x);
    for (std::size_t i = 1; i < nelems.size(); ++i) {
      Permutation cand = compose(nelems[i], x);
      if (cand < best) best = std::move(cand);
    }
    return best;
  };
  std::vector<Point> im(qdeg);
  for (Point c = 0; c < qdeg; ++c) im[c] = coset_of_.at(canonical(compose(reps_[c], g)));
  return Permutation(std::move(im));
}

FiniteGroup Quotient::push(const FiniteGroup& sub) const {
  std::vector<Permutation> gens;
  for (const Permutation& g : sub.generators()) gens.push_back(project(g));
  return FiniteGroup(group_.degree(), std::move(gens)).with_parent(group_);
}

}  // namespace sigma
