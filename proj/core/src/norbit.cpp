#include "korbit/norbit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "korbit/error.hpp"

namespace korbit {

NOrbitMatrix NOrbitMatrix::from_group(const PermGroup& g) {
  NOrbitMatrix m;
  m.degree_ = g.degree();
  m.rows_ = std::make_shared<const std::vector<Perm>>(g.elements());
  return m;
}

bool NOrbitMatrix::has_row(const Perm& p) const {
  return std::binary_search(rows_->begin(), rows_->end(), p);
}

NOrbitMatrix n_orbit(const PermGroup& g) { return NOrbitMatrix::from_group(g); }

NOrbitMatrix n_orbit_from_cosets(const PermGroup& g, const Subgroup& a) {
  return NOrbitMatrix::from_group(coset_action(g, a).image);
}

KOrbit k_projection(const NOrbitMatrix& x, std::span<const unsigned> columns) {
  std::set<unsigned> distinct(columns.begin(), columns.end());
  if (columns.empty() || distinct.size() != columns.size())
    throw Error("projection columns must be distinct and nonempty");
  for (unsigned c : columns)
    if (c >= x.degree())
      throw Error("projection column " + std::to_string(c) +
                  " out of range for degree " + std::to_string(x.degree()));
  std::set<std::vector<Point>> tuples;
  for (const Perm& row : x.rows()) {
    std::vector<Point> t;
    t.reserve(columns.size());
    for (unsigned c : columns) t.push_back(row(c));
    tuples.insert(std::move(t));
  }
  KOrbit k;
  k.index_tuple.assign(columns.begin(), columns.end());
  k.tuples.assign(tuples.begin(), tuples.end());
  return k;
}

PermGroup aut_of_n_orbit(const NOrbitMatrix& x) {
  std::vector<Perm> auts;
  for (const Perm& cand : x.rows()) {
    bool ok = true;
    for (const Perm& row : x.rows())
      if (!x.has_row(cand * row)) {
        ok = false;
        break;
      }
    if (ok) auts.push_back(cand);
  }
  return PermGroup::from_elements(x.degree(), std::move(auts));
}

namespace {

/// Multiset of cycle types over all rows: the cheapest conjugacy invariant.
std::multiset<CycleType> cycle_type_multiset(const NOrbitMatrix& x) {
  std::multiset<CycleType> out;
  for (const Perm& row : x.rows()) out.insert(cycle_type(row));
  return out;
}

std::multiset<std::size_t> orbit_size_multiset(const NOrbitMatrix& x,
                                               const std::vector<Perm>& gens) {
  std::multiset<std::size_t> out;
  for (const auto& orb : orbits_of(gens, x.degree())) out.insert(orb.size());
  return out;
}

/// Backtracking search for s in S_n with s X s^{-1} = Y. Point images are
/// assigned in order; for every generator g of X a list of still-possible
/// images h in Y is maintained, pruned by h(s(p)) = s(g(p)) on assigned
/// points. An empty list kills the branch. At a full assignment each list
/// pins h = s g s^{-1}, which therefore lies in Y.
class IsoSearch {
public:
  IsoSearch(const NOrbitMatrix& x, const NOrbitMatrix& y, std::uint64_t budget)
      : x_(x), y_(y), n_(x.degree()), budget_(budget),
        gens_(canonical_generators(n_, x.rows())),
        sigma_(n_, kUnset), used_(n_, false) {
    for (const Perm& g : gens_) gen_invs_.push_back(g.inverse());
    candidates_.resize(gens_.size());
    for (auto& cand : candidates_) {
      cand.reserve(y_.row_count());
      for (const Perm& h : y_.rows()) cand.push_back(&h);
    }
  }

  IsoResult run() {
    IsoResult res;
    if (gens_.empty()) {  // trivial group; the identity conjugates
      res.verdict = IsoVerdict::isomorphic;
      res.witness = Perm::identity(n_);
      return res;
    }
    bool found = dfs(0);
    res.nodes = nodes_;
    if (found) {
      Perm sigma{std::vector<Point>(sigma_.begin(), sigma_.end())};
      if (verify(sigma)) {
        res.verdict = IsoVerdict::isomorphic;
        res.witness = std::move(sigma);
        return res;
      }
      res.verdict = IsoVerdict::undecided;  // defensive; see class comment
      return res;
    }
    res.verdict = exhausted_ ? IsoVerdict::undecided : IsoVerdict::non_isomorphic;
    return res;
  }

private:
  static constexpr Point kUnset = ~0u;

  bool verify(const Perm& sigma) const {
    Perm si = sigma.inverse();
    for (const Perm& row : x_.rows())
      if (!y_.has_row(sigma * row * si)) return false;
    return true;
  }

  bool compatible(const Perm& h, std::size_t gi, Point p, Point q) const {
    Point gp = gens_[gi](p);
    if (sigma_[gp] != kUnset && h(q) != sigma_[gp]) return false;
    Point pre = gen_invs_[gi](p);  // g(pre) = p
    if (sigma_[pre] != kUnset && h(sigma_[pre]) != q) return false;
    return true;
  }

  bool dfs(Point p) {
    if (p == n_) return true;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    for (Point q = 0; q < n_; ++q) {
      if (used_[q]) continue;
      sigma_[p] = q;
      used_[q] = true;
      auto saved = candidates_;
      bool viable = true;
      for (std::size_t gi = 0; gi < gens_.size() && viable; ++gi) {
        auto& cand = candidates_[gi];
        std::erase_if(cand, [&](const Perm* h) {
          return !compatible(*h, gi, p, q);
        });
        if (cand.empty()) viable = false;
      }
      if (viable && dfs(p + 1)) return true;
      candidates_ = std::move(saved);
      sigma_[p] = kUnset;
      used_[q] = false;
      if (exhausted_) return false;
    }
    return false;
  }

  const NOrbitMatrix& x_;
  const NOrbitMatrix& y_;
  unsigned n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Perm> gens_;
  std::vector<Perm> gen_invs_;
  std::vector<std::vector<const Perm*>> candidates_;
  std::vector<Point> sigma_;
  std::vector<bool> used_;
};

}  // namespace

IsoResult n_orbits_isomorphic(const NOrbitMatrix& x, const NOrbitMatrix& y,
                              std::uint64_t node_budget) {
  IsoResult res;
  if (x.degree() != y.degree() || x.row_count() != y.row_count()) {
    res.verdict = IsoVerdict::non_isomorphic;
    return res;
  }
  if (cycle_type_multiset(x) != cycle_type_multiset(y)) {
    res.verdict = IsoVerdict::non_isomorphic;
    return res;
  }
  auto xg = canonical_generators(x.degree(), x.rows());
  auto yg = canonical_generators(y.degree(), y.rows());
  if (orbit_size_multiset(x, xg) != orbit_size_multiset(y, yg)) {
    res.verdict = IsoVerdict::non_isomorphic;
    return res;
  }
  return IsoSearch(x, y, node_budget).run();
}

}  // namespace korbit
