#include "sigma/sigma_context.hpp"

#include <algorithm>

#include "sigma/numbers.hpp"

namespace sigma {

namespace {

std::uint64_t pair_key(SubIdx a, SubIdx b) {
  return (std::uint64_t(a) << 32) | b;
}

}  // namespace

struct SigmaContext::Memo {
  // per-ambient sigma-subnormal DP: reachability flags plus successor links
  struct SnTable {
    std::vector<char> reach;
    std::vector<SubIdx> succ;
  };
  std::unordered_map<SubIdx, SnTable> sn;
  std::unordered_map<std::uint64_t, PermFlags> perm;
  std::unordered_map<std::uint64_t, SubIdx> score;
  std::unordered_map<std::uint64_t, WeakResult> weak;
  std::unordered_map<std::uint64_t, std::vector<std::vector<SubIdx>>> hall_cls;
  std::unordered_map<SubIdx, char> sylow_type;
};

SigmaContext::SigmaContext(const SubgroupLattice& lat, SigmaPartition sigma)
    : lat_(&lat), sigma_(std::move(sigma)), memo_(std::make_unique<Memo>()) {}

SigmaContext::SigmaContext(SigmaContext&&) noexcept = default;
SigmaContext& SigmaContext::operator=(SigmaContext&&) noexcept = default;
SigmaContext::~SigmaContext() = default;

std::vector<std::size_t> SigmaContext::block_list(SubIdx amb) const {
  BlockMask m = sigma_.classify(lat_->order_of(amb));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m >> i; ++i)
    if (m & (BlockMask{1} << i)) out.push_back(i);
  return out;
}

std::uint64_t SigmaContext::pi_part(std::uint64_t n, BlockMask mask) const {
  std::uint64_t out = 1;
  for (auto& [p, e] : factorize(n)) {
    if (!(mask & (BlockMask{1} << sigma_.block_of(p)))) continue;
    for (unsigned k = 0; k < e; ++k) out *= p;
  }
  return out;
}

std::vector<SubIdx> SigmaContext::hall_subgroups(SubIdx amb, BlockMask mask) const {
  // a Hall Pi-subgroup is exactly a subgroup whose order is the Pi-part
  std::uint64_t target = pi_part(lat_->order_of(amb), mask);
  std::vector<SubIdx> out;
  for (SubIdx s : lat_->subgroups_of(amb))
    if (lat_->order_of(s) == target) out.push_back(s);
  return out;
}

const std::vector<std::vector<SubIdx>>& SigmaContext::hall_classes(SubIdx amb,
                                                                   std::size_t block) const {
  std::uint64_t key = pair_key(amb, static_cast<SubIdx>(block));
  auto it = memo_->hall_cls.find(key);
  if (it != memo_->hall_cls.end()) return it->second;

  std::vector<std::vector<SubIdx>> classes;
  std::vector<SubIdx> halls = hall_subgroups(amb, BlockMask{1} << block);
  std::vector<char> seen(halls.size(), 0);
  for (std::size_t i = 0; i < halls.size(); ++i) {
    if (seen[i]) continue;
    std::vector<SubIdx> orbit{halls[i]};
    seen[i] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (EltIdx g : lat_->gens_of(amb)) {
        SubIdx img = lat_->conjugate_subgroup(orbit[k], g);
        auto pos = std::find(halls.begin(), halls.end(), img);
        std::size_t j = static_cast<std::size_t>(pos - halls.begin());
        if (!seen[j]) {
          seen[j] = 1;
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return memo_->hall_cls.emplace(key, std::move(classes)).first->second;
}

bool SigmaContext::sigma_full(SubIdx amb) const {
  for (std::size_t block : block_list(amb))
    if (hall_classes(amb, block).empty()) return false;
  return true;
}

std::vector<CompleteHallSet> SigmaContext::complete_hall_sets(SubIdx amb) const {
  std::vector<CompleteHallSet> out{{}};
  for (std::size_t block : block_list(amb)) {
    std::vector<SubIdx> halls = hall_subgroups(amb, BlockMask{1} << block);
    if (halls.empty()) return {};
    std::vector<CompleteHallSet> next;
    next.reserve(out.size() * halls.size());
    for (const CompleteHallSet& partial : out)
      for (SubIdx h : halls) {
        CompleteHallSet ext = partial;
        ext.members.emplace_back(block, h);
        next.push_back(std::move(ext));
      }
    out = std::move(next);
  }
  return out;
}

FiniteGroup SigmaContext::hall_member_group(const CompleteHallSet& set, std::size_t i) const {
  return lat_->as_group(set.members[i].second);
}

bool SigmaContext::sylow_type(SubIdx amb) const {
  auto it = memo_->sylow_type.find(amb);
  if (it != memo_->sylow_type.end()) return it->second != 0;

  char ok = 1;
  const auto blocks = block_list(amb);
  for (const auto& cls : lat_->conjugacy_classes_in(amb)) {
    SubIdx e = cls.front();  // the D-properties are conjugation invariant
    for (std::size_t block : blocks) {
      BlockMask bit = BlockMask{1} << block;
      std::uint64_t ppart = pi_part(lat_->order_of(e), bit);
      std::vector<SubIdx> halls;
      for (SubIdx s : lat_->subgroups_of(e))
        if (lat_->order_of(s) == ppart) halls.push_back(s);
      if (halls.empty()) {  // existence
        ok = 0;
        break;
      }
      // conjugacy: all Hall subgroups of e form one orbit under e
      std::vector<SubIdx> orbit{halls.front()};
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (EltIdx g : lat_->gens_of(e)) {
          SubIdx img = lat_->conjugate_subgroup(orbit[k], g);
          if (std::find(orbit.begin(), orbit.end(), img) == orbit.end()) orbit.push_back(img);
        }
      for (SubIdx h : halls)
        if (std::find(orbit.begin(), orbit.end(), h) == orbit.end()) {
          ok = 0;
          break;
        }
      if (!ok) break;
      // dominance: every block-number subgroup of e lies inside some Hall
      for (SubIdx s : lat_->subgroups_of(e)) {
        if ((sigma_.classify(lat_->order_of(s)) & ~bit) != 0) continue;
        bool covered = false;
        for (SubIdx h : halls)
          if (lat_->contains(s, h)) {
            covered = true;
            break;
          }
        if (!covered) {
          ok = 0;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) break;
  }
  memo_->sylow_type.emplace(amb, ok);
  return ok != 0;
}

bool SigmaContext::sigma_subnormal(SubIdx h, SubIdx amb) const {
  auto it = memo_->sn.find(amb);
  if (it == memo_->sn.end()) {
    // Reachability over the lattice, processed by descending order so every
    // potential successor is decided first. Edge a -> b (a < b) iff a is
    // normal in b or b over the core of a in b is sigma-primary.
    Memo::SnTable table;
    table.reach.assign(lat_->size(), 0);
    table.succ.assign(lat_->size(), amb);
    table.reach[amb] = 1;
    const auto& subs = lat_->subgroups_of(amb);  // ascending order
    for (auto rit = subs.rbegin(); rit != subs.rend(); ++rit) {
      SubIdx a = *rit;
      if (a == amb) continue;
      for (auto bit = subs.rbegin(); bit != subs.rend(); ++bit) {
        SubIdx b = *bit;
        if (lat_->order_of(b) <= lat_->order_of(a)) break;
        if (!table.reach[b] || !lat_->contains(a, b)) continue;
        bool edge = lat_->is_normal_in(a, b);
        if (!edge) {
          SubIdx core = lat_->core_in(a, b);
          edge = sigma_.is_primary(lat_->order_of(b) / lat_->order_of(core));
        }
        if (edge) {
          table.reach[a] = 1;
          table.succ[a] = b;
          break;
        }
      }
    }
    it = memo_->sn.emplace(amb, std::move(table)).first;
  }
  return it->second.reach[h] != 0;
}

std::vector<SubIdx> SigmaContext::subnormal_chain(SubIdx h, SubIdx amb) const {
  if (!sigma_subnormal(h, amb)) return {};
  const auto& table = memo_->sn.at(amb);
  std::vector<SubIdx> chain{h};
  while (chain.back() != amb) chain.push_back(table.succ[chain.back()]);
  return chain;
}

const SigmaContext::PermFlags& SigmaContext::perm_flags(SubIdx h, SubIdx amb) const {
  std::uint64_t key = pair_key(h, amb);
  auto it = memo_->perm.find(key);
  if (it != memo_->perm.end()) return it->second;

  PermFlags flags;
  if (!sigma_full(amb)) {
    // no complete Hall sigma-set exists; only the stated degenerate
    // conventions for the whole group and the trivial subgroup apply
    char v = (h == amb || h == lat_->bottom()) ? 1 : 0;
    flags.existential = v;
    flags.universal = v;
  } else {
    flags.existential = 1;
    flags.universal = 1;
    CompleteHallSet witness;
    for (std::size_t block : block_list(amb)) {
      const auto& classes = hall_classes(amb, block);
      int chosen = -1;
      for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        bool all_ok = true;
        for (SubIdx member : classes[ci])
          if (!lat_->permutes(h, member)) {
            all_ok = false;
            break;
          }
        if (all_ok && chosen < 0) chosen = static_cast<int>(ci);
        if (!all_ok) flags.universal = 0;
      }
      if (chosen < 0) {
        flags.existential = 0;
        break;
      }
      witness.members.emplace_back(block, classes[static_cast<std::size_t>(chosen)].front());
    }
    if (flags.existential) flags.witness = std::move(witness);
  }
  return memo_->perm.emplace(key, std::move(flags)).first->second;
}

bool SigmaContext::sigma_permutable(SubIdx h, SubIdx amb) const {
  return perm_flags(h, amb).existential != 0;
}

bool SigmaContext::sigma_permutable_universal(SubIdx h, SubIdx amb) const {
  return perm_flags(h, amb).universal != 0;
}

std::optional<CompleteHallSet> SigmaContext::sigma_permutable_witness(SubIdx h, SubIdx amb) const {
  return perm_flags(h, amb).witness;
}

SubIdx SigmaContext::sigma_core(SubIdx h, SubIdx amb) const {
  std::uint64_t key = pair_key(h, amb);
  auto it = memo_->score.find(key);
  if (it != memo_->score.end()) return it->second;
  SubIdx cur = lat_->bottom();
  for (SubIdx s : lat_->subgroups_of(h)) {
    if (lat_->contains(s, cur)) continue;
    if (sigma_permutable(s, amb)) cur = lat_->join_of(cur, s);
  }
  memo_->score.emplace(key, cur);
  return cur;
}

SigmaContext::WeakResult SigmaContext::weakly_sigma_permutable(SubIdx h, SubIdx amb) const {
  std::uint64_t key = pair_key(h, amb);
  auto it = memo_->weak.find(key);
  if (it != memo_->weak.end()) return it->second;

  WeakResult result;
  if (h == amb) {
    result = {true, amb};
  } else {
    std::uint64_t target = lat_->order_of(amb);
    SubIdx score = sigma_core(h, amb);
    for (SubIdx t : lat_->subgroups_of(amb)) {  // smallest supplements first
      if (lat_->order_of(t) * lat_->order_of(h) < target) continue;
      Bitset inter = lat_->bits(h) & lat_->bits(t);
      if (lat_->order_of(h) * lat_->order_of(t) != target * inter.count()) continue;
      if (!inter.is_subset_of(lat_->bits(score))) continue;
      if (sigma_subnormal(t, amb)) {
        result = {true, t};
        break;
      }
    }
  }
  memo_->weak.emplace(key, result);
  return result;
}

WeakPermutabilityWitness SigmaContext::weak_witness(SubIdx h, SubIdx amb) const {
  WeakResult r = weakly_sigma_permutable(h, amb);
  if (!r.ok) throw std::logic_error("weak_witness: predicate is false");
  WeakPermutabilityWitness w{lat_->as_group(h), lat_->as_group(r.supplement), {}, {}};
  for (SubIdx c : subnormal_chain(r.supplement, amb)) w.chain.push_back(lat_->as_group(c));

  Bitset inter = lat_->bits(h) & lat_->bits(r.supplement);
  SubIdx covered = lat_->bottom();
  for (SubIdx s : lat_->subgroups_of(h)) {
    if (inter.is_subset_of(lat_->bits(covered))) break;
    if (s == lat_->bottom() || lat_->contains(s, covered)) continue;
    if (!sigma_permutable(s, amb)) continue;
    SubIdx next = lat_->join_of(covered, s);
    if (next == covered) continue;
    covered = next;
    WeakPermutabilityWitness::CorePart part{lat_->as_group(s), {}};
    if (auto hs = sigma_permutable_witness(s, amb))
      for (std::size_t i = 0; i < hs->members.size(); ++i)
        part.hall_set.push_back(lat_->as_group(hs->members[i].second));
    w.core_cover.push_back(std::move(part));
  }
  return w;
}

bool SigmaContext::sigma_soluble(SubIdx amb) const {
  for (const ChiefFactor& f : lat_->chief_series(amb).factors)
    if (!sigma_.is_primary(f.order)) return false;
  return true;
}

bool SigmaContext::sigma_nilpotent(SubIdx amb) const {
  // the chief factor extended by its induced automorphism group must be
  // sigma-primary, measured by |H/K| * |G : C_G(H/K)|
  for (const ChiefFactor& f : lat_->chief_series(amb).factors)
    if (!sigma_.is_primary(f.order * f.centralizer_index)) return false;
  return true;
}

std::vector<BlockMask> SigmaContext::chief_factor_masks(SubIdx amb) const {
  std::vector<BlockMask> out;
  for (const ChiefFactor& f : lat_->chief_series(amb).factors)
    out.push_back(sigma_.classify(f.order));
  return out;
}

SubIdx SigmaContext::o_upper(BlockMask mask, SubIdx amb) const {
  std::vector<SubIdx> parts;
  for (SubIdx s : lat_->subgroups_of(amb))
    if ((sigma_.classify(lat_->order_of(s)) & mask) == 0) parts.push_back(s);
  return lat_->join_all(parts);
}

SubIdx SigmaContext::o_lower(BlockMask mask, SubIdx amb) const {
  std::vector<SubIdx> parts;
  for (SubIdx s : lat_->subgroups_of(amb)) {
    if ((sigma_.classify(lat_->order_of(s)) & ~mask) != 0) continue;
    if (lat_->is_normal_in(s, amb)) parts.push_back(s);
  }
  return lat_->join_all(parts);
}

SigmaAnalysis::SigmaAnalysis(const FiniteGroup& g, std::uint32_t cutoff)
    : lat_(SubgroupLattice::build(g, cutoff)) {}

SigmaContext& SigmaAnalysis::context(const SigmaPartition& sigma) {
  std::lock_guard<std::mutex> lock(mu_);
  std::string key = sigma.to_string();
  auto it = contexts_.find(key);
  if (it == contexts_.end())
    it = contexts_.emplace(key, std::make_unique<SigmaContext>(lat_, sigma)).first;
  return *it->second;
}

std::vector<std::uint64_t> SigmaAnalysis::pi() const {
  return prime_divisors(lat_.order_of(lat_.top()));
}

}  // namespace sigma
