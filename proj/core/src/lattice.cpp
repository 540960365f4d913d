#include "korbit/lattice.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "korbit/error.hpp"

namespace korbit {

namespace {

std::vector<Perm> closure_from(unsigned degree, const std::vector<Perm>& gens) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> frontier;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& a : frontier)
      for (const Perm& g : gens) {
        Perm b = g * a;
        if (seen.insert(b).second) next.push_back(std::move(b));
      }
    frontier = std::move(next);
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> conjugate_sorted(const std::vector<Perm>& elems, const Perm& x) {
  Perm xi = x.inverse();
  std::vector<Perm> out;
  out.reserve(elems.size());
  for (const Perm& e : elems) out.push_back(x * e * xi);
  std::sort(out.begin(), out.end());
  return out;
}

bool subset_sorted(const std::vector<Perm>& small, const std::vector<Perm>& big) {
  if (small.size() > big.size()) return false;
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Perm> intersect_sorted(const std::vector<Perm>& a,
                                   const std::vector<Perm>& b) {
  std::vector<Perm> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

/// Core of a subgroup given as a sorted element list: survivors of
/// conjugation by every group element.
std::vector<Perm> core_elems(const PermGroup& g, const std::vector<Perm>& sub) {
  std::vector<Perm> core = sub;
  for (const Perm& x : g.elements()) {
    if (core.size() == 1) break;
    Perm xi = x.inverse();
    std::vector<Perm> kept;
    for (const Perm& y : core)
      if (std::binary_search(sub.begin(), sub.end(), xi * y * x))
        kept.push_back(y);
    core = std::move(kept);
  }
  return core;
}

}  // namespace

SubgroupLattice build_subgroup_lattice(const PermGroup& g) {
  const unsigned n = g.degree();
  const auto& all = g.elements();

  // seed: all cyclic subgroups, keyed by element list
  std::map<std::vector<Perm>, Perm> cyclic;  // elements -> one generator
  for (const Perm& e : all) {
    std::vector<Perm> powers;
    Perm p = Perm::identity(n);
    do {
      powers.push_back(p);
      p = e * p;
    } while (!p.is_identity());
    std::sort(powers.begin(), powers.end());
    cyclic.emplace(std::move(powers), e);
  }

  std::map<std::vector<Perm>, std::vector<Perm>> subs;  // elements -> generators
  std::vector<const std::vector<Perm>*> work;
  for (const auto& [elems, gen] : cyclic) {
    auto [it, fresh] = subs.emplace(
        elems, gen.is_identity() ? std::vector<Perm>{} : std::vector<Perm>{gen});
    if (fresh) work.push_back(&it->first);
  }

  // join every known subgroup with every cyclic seed until fixpoint; any
  // subgroup is a left-fold of joins of its cyclic subgroups, so this is
  // complete
  while (!work.empty()) {
    const std::vector<Perm>* h = work.back();
    work.pop_back();
    std::vector<Perm> hgens = subs.at(*h);
    for (const auto& [celems, cgen] : cyclic) {
      if (cgen.is_identity() || std::binary_search(h->begin(), h->end(), cgen))
        continue;
      std::vector<Perm> jgens = hgens;
      jgens.push_back(cgen);
      std::vector<Perm> joined = closure_from(n, jgens);
      auto [it, fresh] = subs.emplace(std::move(joined), std::move(jgens));
      if (fresh) work.push_back(&it->first);
    }
  }

  SubgroupLattice lat;
  for (auto& [elems, gens] : subs) {
    Subgroup s;
    s.degree = n;
    s.elements = elems;
    s.generators = gens;
    lat.subgroups.push_back(std::move(s));
  }
  std::sort(lat.subgroups.begin(), lat.subgroups.end(),
            [](const Subgroup& a, const Subgroup& b) {
              if (a.elements.size() != b.elements.size())
                return a.elements.size() < b.elements.size();
              return a.elements < b.elements;
            });

  // conjugacy classes via explicit conjugation orbits
  std::map<std::vector<Perm>, std::size_t> index_of;
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i)
    index_of.emplace(lat.subgroups[i].elements, i);
  lat.class_of.assign(lat.subgroups.size(), SIZE_MAX);
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    if (lat.class_of[i] != SIZE_MAX) continue;
    std::size_t cls = lat.classes.size();
    std::vector<std::size_t> members;
    for (const Perm& x : all) {
      auto conj = conjugate_sorted(lat.subgroups[i].elements, x);
      std::size_t j = index_of.at(conj);
      if (lat.class_of[j] == SIZE_MAX) {
        lat.class_of[j] = cls;
        members.push_back(j);
      }
    }
    std::sort(members.begin(), members.end());
    lat.classes.push_back(std::move(members));
  }
  return lat;
}

std::vector<Subgroup> md_stabilizers(const PermGroup& g) {
  const SubgroupLattice& lat = g.lattice();
  std::vector<bool> corefree(lat.subgroups.size(), false);
  // core-freeness is a class invariant; test one representative per class
  for (const auto& cls : lat.classes) {
    bool cf = core_elems(g, lat.subgroups[cls.front()].elements).size() == 1;
    for (std::size_t i : cls) corefree[i] = cf;
  }
  std::vector<Subgroup> out;
  for (const auto& cls : lat.classes) {
    std::size_t i = cls.front();
    if (!corefree[i]) continue;
    bool maximal = true;
    for (std::size_t j = 0; j < lat.subgroups.size() && maximal; ++j) {
      if (!corefree[j] || lat.subgroups[j].order() <= lat.subgroups[i].order())
        continue;
      if (subset_sorted(lat.subgroups[i].elements, lat.subgroups[j].elements))
        maximal = false;
    }
    if (maximal) out.push_back(lat.subgroups[i]);
  }
  return out;
}

bool is_md_representation(const PermGroup& g, const Subgroup& a) {
  const SubgroupLattice& lat = g.lattice();
  if (core_elems(g, a.elements).size() != 1) return false;
  for (const Subgroup& b : lat.subgroups) {
    if (b.order() <= a.order()) continue;
    if (!subset_sorted(a.elements, b.elements)) continue;
    if (core_elems(g, b.elements).size() == 1) return false;
  }
  return true;
}

bool is_maximal_subgroup(const PermGroup& g, const Subgroup& a) {
  const SubgroupLattice& lat = g.lattice();
  if (a.order() == g.order()) return false;
  for (const Subgroup& b : lat.subgroups) {
    if (b.order() <= a.order() || b.order() == g.order()) continue;
    if (subset_sorted(a.elements, b.elements)) return false;
  }
  return true;
}

FaithfulDegreeResult minimal_faithful_degree(const PermGroup& g) {
  const SubgroupLattice& lat = g.lattice();
  const std::uint64_t order = g.order();

  FaithfulDegreeResult res;
  if (order == 1) {
    res.degree = 1;
    res.collection = {lat.subgroups.front()};
    res.best_transitive = 1;
    return res;
  }

  // candidates: one representative per class of proper subgroups, with
  // cores and indices; two conjugates share a core, and G itself only pads
  // a collection with fixed points
  struct Cand {
    const Subgroup* sub;
    std::vector<Perm> core;
    std::uint64_t index;
  };
  std::vector<Cand> cands;
  for (const auto& cls : lat.classes) {
    const Subgroup& rep = lat.subgroups[cls.front()];
    if (rep.order() == order) continue;
    cands.push_back({&rep, core_elems(g, rep.elements), order / rep.order()});
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Cand& a, const Cand& b) { return a.index < b.index; });

  // best single subgroup: smallest index with trivial core
  std::optional<std::uint64_t> best_t;
  std::size_t best_t_at = 0;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (cands[k].core.size() == 1) {
      best_t = cands[k].index;
      best_t_at = k;
      break;  // sorted by index
    }
  }

  // best collections of size >= 2 split into two shapes:
  //  (a) a faithful single padded with the cheapest other candidate;
  //  (b) antichains where every member strictly shrinks the core
  //      intersection (any minimal collection without a faithful single
  //      member has this form in every ordering)
  std::optional<std::uint64_t> best_i;
  std::vector<std::size_t> best_i_pick;
  if (best_t && cands.size() >= 2) {
    for (std::size_t k = 0; k < cands.size(); ++k) {
      if (cands[k].core.size() != 1) continue;
      std::size_t other = (k == 0) ? 1 : 0;
      std::uint64_t deg = cands[k].index + cands[other].index;
      if (!best_i || deg < *best_i) {
        best_i = deg;
        best_i_pick = {std::min(k, other), std::max(k, other)};
      }
      if (k == best_t_at) break;  // later faithful singles have larger index
    }
  }

  std::vector<std::size_t> pick;
  auto dfs = [&](auto&& self, std::size_t from, std::uint64_t deg,
                 const std::vector<Perm>& inter) -> void {
    if (inter.size() == 1 && pick.size() >= 2) {
      if (!best_i || deg < *best_i) {
        best_i = deg;
        best_i_pick = pick;
      }
      return;  // extensions only increase the degree
    }
    for (std::size_t k = from; k < cands.size(); ++k) {
      std::uint64_t ndeg = deg + cands[k].index;
      if (best_i && ndeg >= *best_i) break;  // sorted by index
      std::vector<Perm> ninter =
          pick.empty() ? cands[k].core : intersect_sorted(inter, cands[k].core);
      if (!pick.empty() && ninter.size() == inter.size())
        continue;  // member adds degree without shrinking the intersection
      pick.push_back(k);
      self(self, k + 1, ndeg, ninter);
      pick.pop_back();
    }
  };
  dfs(dfs, 0, 0, g.elements());

  if (best_t && (!best_i || *best_t <= *best_i)) {
    res.degree = *best_t;
    res.collection = {*cands[best_t_at].sub};
  } else {
    res.degree = *best_i;
    for (std::size_t k : best_i_pick) res.collection.push_back(*cands[k].sub);
  }
  res.best_transitive = best_t;
  res.best_intransitive = best_i;
  return res;
}

AutomorphicNumbers automorphic_numbers(const PermGroup& g) {
  AutomorphicNumbers out;
  try {
    const SubgroupLattice& lat = g.lattice();
    out.from_lattice = true;
    for (const Subgroup& s : lat.subgroups)
      for (const auto& orb : orbits_of(s.generators, g.degree()))
        out.values.insert(static_cast<unsigned>(orb.size()));
  } catch (const CapError&) {
    out.from_lattice = false;
    for (Point v = 0; v < g.degree(); ++v) {
      Subgroup stab = point_stabilizer(g, v);
      for (const auto& orb : orbits_of(stab.generators, g.degree()))
        out.values.insert(static_cast<unsigned>(orb.size()));
    }
  }
  return out;
}

}  // namespace korbit
