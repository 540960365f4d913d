#pragma once

#include <cstdint>
#include <vector>

#include "korbit/perm.hpp"

namespace korbit::bsgs {

/// One level of a stabilizer chain: a base point, the strong generators
/// fixing all earlier base points, and a transversal of the base orbit
/// (transversal[p] maps the base point to p).
struct Level {
  Point base = 0;
  std::vector<Perm> generators;
  std::vector<Perm> transversal;   // indexed by point; degree()==0 means "not in orbit"
  std::vector<Point> orbit;        // in BFS discovery order
};

/// A base and strong generating set built with a deterministic
/// Schreier-Sims procedure. Gives group order and membership without
/// materializing elements.
class Chain {
public:
  Chain() = default;
  Chain(unsigned degree, const std::vector<Perm>& generators);

  unsigned degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return order_; }
  bool contains(const Perm& p) const;
  const std::vector<Level>& levels() const noexcept { return levels_; }

private:
  struct StripResult {
    Perm residue;
    std::size_t level;
  };
  StripResult strip(Perm g, std::size_t from_level) const;
  void extend(std::size_t level, const Perm& g);
  void rebuild_orbit(std::size_t level);

  unsigned degree_ = 0;
  std::uint64_t order_ = 1;
  std::vector<Level> levels_;
};

}  // namespace korbit::bsgs
