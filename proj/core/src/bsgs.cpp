#include "korbit/bsgs.hpp"

#include <cassert>

#include "korbit/error.hpp"

namespace korbit::bsgs {

namespace {

Point first_moved_point(const Perm& p) {
  for (Point i = 0; i < p.degree(); ++i)
    if (p(i) != i) return i;
  return p.degree();
}

}  // namespace

Chain::Chain(unsigned degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw Error("generator degree mismatch");
    auto [residue, level] = strip(g, 0);
    if (!residue.is_identity()) extend(level, residue);
  }
  order_ = 1;
  for (const Level& lv : levels_) order_ *= lv.orbit.size();
}

Chain::StripResult Chain::strip(Perm g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    Point img = g(levels_[l].base);
    const Perm& u = levels_[l].transversal[img];
    if (u.degree() == 0) return {std::move(g), l};
    g = u.inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

void Chain::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  lv.transversal.assign(degree_, Perm());
  lv.orbit.clear();
  lv.transversal[lv.base] = Perm::identity(degree_);
  lv.orbit.push_back(lv.base);
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    Point p = lv.orbit[head];
    for (const Perm& s : lv.generators) {
      Point q = s(p);
      if (lv.transversal[q].degree() == 0) {
        lv.transversal[q] = s * lv.transversal[p];
        lv.orbit.push_back(q);
      }
    }
  }
}

void Chain::extend(std::size_t level, const Perm& g) {
  assert(level <= levels_.size());
  if (level == levels_.size()) {
    Level lv;
    lv.base = first_moved_point(g);
    assert(lv.base < degree_);
    levels_.push_back(std::move(lv));
  }
  levels_[level].generators.push_back(g);
  rebuild_orbit(level);

  // Close the level: every Schreier generator must strip to identity below.
  // Recursive extends can reallocate levels_, so index every access; only
  // extend() at this same level mutates this orbit, and that re-runs the loop.
  for (std::size_t head = 0; head < levels_[level].orbit.size(); ++head) {
    Point p = levels_[level].orbit[head];
    for (std::size_t si = 0; si < levels_[level].generators.size(); ++si) {
      const Level& lv = levels_[level];
      Perm schreier =
          lv.transversal[lv.generators[si](p)].inverse() *
          (lv.generators[si] * lv.transversal[p]);
      if (schreier.is_identity()) continue;
      auto [residue, at] = strip(std::move(schreier), level + 1);
      if (!residue.is_identity()) extend(at, residue);
    }
  }
}

bool Chain::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, level] = strip(p, 0);
  (void)level;
  return residue.is_identity();
}

}  // namespace korbit::bsgs
