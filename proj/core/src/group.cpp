#include "korbit/group.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "korbit/error.hpp"
#include "korbit/lattice.hpp"

namespace korbit {

namespace {

/// Breadth-first closure of a generator set, then sorted.
std::vector<Perm> closure_sorted(unsigned degree, std::span<const Perm> gens,
                                 std::uint64_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> frontier;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& a : frontier) {
      for (const Perm& g : gens) {
        Perm b = g * a;
        if (seen.insert(b).second) {
          if (seen.size() > cap)
            throw CapError("element materialization", seen.size(), cap);
          next.push_back(std::move(b));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup make_subgroup(unsigned degree, std::vector<Perm> sorted_elements) {
  Subgroup s;
  s.degree = degree;
  s.generators = canonical_generators(degree, sorted_elements);
  s.elements = std::move(sorted_elements);
  return s;
}

}  // namespace

bool Subgroup::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

struct PermGroup::Impl {
  unsigned degree = 0;
  std::vector<Perm> generators;
  GroupConfig config;
  bsgs::Chain chain;

  mutable std::once_flag elements_once;
  mutable std::vector<Perm> elements;
  mutable std::atomic<bool> elements_ready{false};

  mutable std::once_flag lattice_once;
  mutable std::shared_ptr<const SubgroupLattice> lattice;
};

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators,
                     GroupConfig config) {
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  // drop identity generators; they add nothing and muddy coset tables
  std::erase_if(generators, [](const Perm& p) { return p.is_identity(); });
  impl->generators = std::move(generators);
  impl->config = config;
  impl->chain = bsgs::Chain(degree, impl->generators);
  impl_ = std::move(impl);
}

PermGroup PermGroup::from_elements(unsigned degree, std::vector<Perm> elements,
                                   GroupConfig config) {
  std::sort(elements.begin(), elements.end());
  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->generators = canonical_generators(degree, elements);
  impl->config = config;
  impl->chain = bsgs::Chain(degree, impl->generators);
  impl->elements = std::move(elements);
  impl->elements_ready = true;
  return PermGroup(std::shared_ptr<const Impl>(std::move(impl)));
}

unsigned PermGroup::degree() const noexcept { return impl_->degree; }
const std::vector<Perm>& PermGroup::generators() const noexcept {
  return impl_->generators;
}
const GroupConfig& PermGroup::config() const noexcept { return impl_->config; }
std::uint64_t PermGroup::order() const noexcept { return impl_->chain.order(); }

bool PermGroup::contains(const Perm& p) const {
  if (impl_->elements_ready)
    return std::binary_search(impl_->elements.begin(), impl_->elements.end(), p);
  return impl_->chain.contains(p);
}

const std::vector<Perm>& PermGroup::elements() const {
  if (impl_->elements_ready.load(std::memory_order_acquire))
    return impl_->elements;
  if (order() > impl_->config.element_cap)
    throw CapError("element materialization", order(), impl_->config.element_cap);
  std::call_once(impl_->elements_once, [this] {
    impl_->elements =
        closure_sorted(impl_->degree, impl_->generators, impl_->config.element_cap);
    impl_->elements_ready.store(true, std::memory_order_release);
  });
  return impl_->elements;
}

const SubgroupLattice& PermGroup::lattice() const {
  if (order() > impl_->config.lattice_cap)
    throw CapError("subgroup lattice", order(), impl_->config.lattice_cap);
  std::call_once(impl_->lattice_once, [this] {
    impl_->lattice = std::make_shared<const SubgroupLattice>(
        build_subgroup_lattice(*this));
  });
  return *impl_->lattice;
}

bool PermGroup::is_abelian() const {
  const auto& gens = impl_->generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

Subgroup PermGroup::as_subgroup() const {
  Subgroup s;
  s.degree = degree();
  s.elements = elements();
  s.generators = generators();
  return s;
}

std::vector<Perm> canonical_generators(unsigned degree,
                                       const std::vector<Perm>& elements) {
  std::vector<Perm> gens;
  if (elements.size() <= 1) return gens;
  std::unordered_set<Perm, PermHash> have;
  have.insert(Perm::identity(degree));
  for (const Perm& e : elements) {
    if (have.count(e)) continue;
    gens.push_back(e);
    // regenerate the partial closure with the enlarged generating set
    auto closed = closure_sorted(degree, gens,
                                 std::numeric_limits<std::uint64_t>::max());
    have = std::unordered_set<Perm, PermHash>(closed.begin(), closed.end());
    if (have.size() == elements.size()) break;
  }
  return gens;
}

std::vector<std::vector<Point>> orbits_of(std::span<const Perm> generators,
                                          unsigned degree) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree, false);
  for (Point start = 0; start < degree; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Perm& g : generators) {
        Point q = g(orbit[head]);
        if (!seen[q]) {
          seen[q] = true;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup& g) {
  return orbits_of(g.generators(), g.degree());
}

std::vector<Point> orbit_of_point(const PermGroup& g, Point v) {
  if (v >= g.degree()) throw Error("point out of range");
  for (auto& orb : orbits(g))
    if (std::binary_search(orb.begin(), orb.end(), v)) return orb;
  return {v};  // unreachable
}

bool is_transitive(const PermGroup& g) {
  return g.degree() > 0 && orbits(g).size() == 1;
}

Subgroup point_stabilizer(const PermGroup& g, Point v) {
  if (v >= g.degree()) throw Error("point out of range");
  std::vector<Perm> members;
  for (const Perm& p : g.elements())
    if (p(v) == v) members.push_back(p);
  return make_subgroup(g.degree(), std::move(members));
}

Subgroup setwise_stabilizer(const PermGroup& g, std::span<const Point> set) {
  if (set.empty()) throw Error("setwise stabilizer of empty set");
  std::vector<bool> in_set(g.degree(), false);
  for (Point v : set) {
    if (v >= g.degree()) throw Error("point out of range");
    in_set[v] = true;
  }
  std::vector<Perm> members;
  for (const Perm& p : g.elements()) {
    bool ok = true;
    for (Point v : set)
      if (!in_set[p(v)]) {
        ok = false;
        break;
      }
    if (ok) members.push_back(p);
  }
  return make_subgroup(g.degree(), std::move(members));
}

bool is_normal(const PermGroup& g, const Subgroup& h) {
  for (const Perm& x : g.generators()) {
    Perm xi = x.inverse();
    for (const Perm& s : h.generators)
      if (!h.contains(x * s * xi)) return false;
  }
  return true;
}

Subgroup normal_closure(const PermGroup& g, std::span<const Perm> seed) {
  // close the seed under conjugation by generators, then under the group law
  std::unordered_set<Perm, PermHash> conj(seed.begin(), seed.end());
  std::vector<Perm> frontier(seed.begin(), seed.end());
  std::vector<Perm> gen_invs;
  for (const Perm& x : g.generators()) gen_invs.push_back(x.inverse());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& s : frontier) {
      for (std::size_t i = 0; i < g.generators().size(); ++i) {
        Perm t = g.generators()[i] * s * gen_invs[i];
        if (conj.insert(t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Perm> gens(conj.begin(), conj.end());
  std::sort(gens.begin(), gens.end());
  auto elems = closure_sorted(g.degree(), gens, g.config().element_cap);
  return make_subgroup(g.degree(), std::move(elems));
}

Subgroup core_of(const PermGroup& g, const Subgroup& a) {
  std::vector<Perm> core = a.elements;  // sorted
  const auto& all = g.elements();
  std::vector<bool> covered(all.size(), false);
  auto index_of = [&](const Perm& p) {
    return std::lower_bound(all.begin(), all.end(), p) - all.begin();
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (covered[i]) continue;
    const Perm& rep = all[i];
    for (const Perm& x : a.elements) covered[index_of(rep * x)] = true;
    // keep y with rep^{-1} y rep in A
    Perm ri = rep.inverse();
    std::vector<Perm> kept;
    for (const Perm& y : core)
      if (a.contains(ri * y * rep)) kept.push_back(y);
    core = std::move(kept);
    if (core.size() == 1) break;  // already trivial
  }
  return make_subgroup(g.degree(), std::move(core));
}

std::vector<std::vector<Perm>> left_cosets(const PermGroup& g, const Subgroup& a) {
  const auto& all = g.elements();
  std::vector<std::vector<Perm>> cosets;
  std::unordered_set<Perm, PermHash> covered;
  for (const Perm& rep : all) {
    if (covered.count(rep)) continue;
    std::vector<Perm> coset;
    coset.reserve(a.elements.size());
    for (const Perm& x : a.elements) {
      Perm y = rep * x;
      covered.insert(y);
      coset.push_back(std::move(y));
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  // `all` is sorted, so cosets are discovered in order of minimal element
  return cosets;
}

std::vector<std::vector<Perm>> right_cosets(const PermGroup& g, const Subgroup& a) {
  const auto& all = g.elements();
  std::vector<std::vector<Perm>> cosets;
  std::unordered_set<Perm, PermHash> covered;
  for (const Perm& rep : all) {
    if (covered.count(rep)) continue;
    std::vector<Perm> coset;
    coset.reserve(a.elements.size());
    for (const Perm& x : a.elements) {
      Perm y = x * rep;
      covered.insert(y);
      coset.push_back(std::move(y));
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

CosetAction coset_action(const PermGroup& g, const Subgroup& a) {
  std::uint64_t index = g.order() / a.order();
  if (index > g.config().coset_index_cap)
    throw CapError("coset index", index, g.config().coset_index_cap);

  auto cosets = left_cosets(g, a);
  unsigned n = static_cast<unsigned>(cosets.size());

  std::unordered_map<Perm, unsigned, PermHash> coset_of;
  for (unsigned i = 0; i < n; ++i)
    for (const Perm& x : cosets[i]) coset_of.emplace(x, i);

  auto image_of = [&](const Perm& f) {
    std::vector<Point> img(n);
    for (unsigned i = 0; i < n; ++i)
      img[i] = coset_of.at(f * cosets[i].front());
    return Perm(std::move(img));
  };

  std::vector<Perm> generator_images;
  for (const Perm& s : g.generators()) generator_images.push_back(image_of(s));
  PermGroup image(n, generator_images, g.config());

  Perm id_n = Perm::identity(n);
  std::vector<Perm> kernel_elems;
  for (const Perm& f : g.elements())
    if (image_of(f) == id_n) kernel_elems.push_back(f);

  return CosetAction{a, std::move(cosets), std::move(generator_images),
                     std::move(image),
                     make_subgroup(g.degree(), std::move(kernel_elems))};
}

std::vector<std::vector<Point>> suborbits(const PermGroup& g, Point v) {
  if (!is_transitive(g)) throw Error("suborbits need a transitive group");
  Subgroup stab = point_stabilizer(g, v);
  return orbits_of(stab.generators, g.degree());
}

}  // namespace korbit
