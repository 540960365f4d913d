#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "korbit/bsgs.hpp"
#include "korbit/perm.hpp"

namespace korbit {

struct SubgroupLattice;

/// Resource caps for the two-tier engine: element filters need full
/// materialization, order/membership work off the stabilizer chain alone.
struct GroupConfig {
  std::uint64_t element_cap = 200'000;  // full materialization limit
  std::uint64_t lattice_cap = 500;      // |G| limit for subgroup lattices
  std::uint64_t coset_index_cap = 10'000;
};

/// A subgroup given by its full sorted element list. Self-contained so it
/// can outlive the group it was cut from; construction sites check
/// membership and Lagrange against the parent.
struct Subgroup {
  unsigned degree = 0;
  std::vector<Perm> elements;    // sorted, contains the identity
  std::vector<Perm> generators;  // deterministic small generating set

  std::uint64_t order() const noexcept { return elements.size(); }
  bool contains(const Perm& p) const;
  bool is_trivial() const noexcept { return elements.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.degree == b.degree && a.elements == b.elements;
  }
};

/// A permutation group of fixed degree, immutable after construction.
/// Cheap to copy (shared immutable state); lazy caches are internally
/// synchronized, so all queries are safe from concurrent threads.
class PermGroup {
public:
  /// Generate from generators. The stabilizer chain is built eagerly;
  /// elements are materialized lazily and only under the element cap.
  PermGroup(unsigned degree, std::vector<Perm> generators,
            GroupConfig config = {});

  /// Adopt an already-closed, sorted element list (e.g. a subgroup).
  static PermGroup from_elements(unsigned degree, std::vector<Perm> elements,
                                 GroupConfig config = {});

  unsigned degree() const noexcept;
  const std::vector<Perm>& generators() const noexcept;
  const GroupConfig& config() const noexcept;

  /// Group order, from the stabilizer chain (no materialization needed).
  std::uint64_t order() const noexcept;

  /// Membership test via sifting.
  bool contains(const Perm& p) const;

  /// Sorted element list; throws CapError beyond config().element_cap.
  const std::vector<Perm>& elements() const;

  /// Full subgroup lattice with conjugacy classes; lazy, cached, throws
  /// CapError when order() exceeds config().lattice_cap.
  const SubgroupLattice& lattice() const;

  bool is_abelian() const;

  /// This group as a Subgroup value of itself.
  Subgroup as_subgroup() const;

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit PermGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

/// Greedy deterministic generating set for a sorted element list.
std::vector<Perm> canonical_generators(unsigned degree,
                                       const std::vector<Perm>& elements);

/// Orbits of the group generated by `generators` on {0,...,degree-1},
/// each sorted, ordered by smallest point.
std::vector<std::vector<Point>> orbits_of(std::span<const Perm> generators,
                                          unsigned degree);

std::vector<std::vector<Point>> orbits(const PermGroup& g);
std::vector<Point> orbit_of_point(const PermGroup& g, Point v);
bool is_transitive(const PermGroup& g);

/// {g in G : g(v) = v}, by element filter.
Subgroup point_stabilizer(const PermGroup& g, Point v);

/// {g in G : g(U) = U setwise}; U must be a nonempty subset of the points.
Subgroup setwise_stabilizer(const PermGroup& g, std::span<const Point> set);

/// True iff x H x^{-1} = H for every generator x of g.
bool is_normal(const PermGroup& g, const Subgroup& h);

/// Smallest normal subgroup of g containing the seed elements.
Subgroup normal_closure(const PermGroup& g, std::span<const Perm> seed);

/// Largest normal subgroup of g contained in a: the intersection of the
/// conjugates x a x^{-1} over left-coset representatives of a.
Subgroup core_of(const PermGroup& g, const Subgroup& a);

/// Left cosets xA ordered by their minimal element (A, containing the
/// identity, always comes first). Right cosets Ax likewise.
std::vector<std::vector<Perm>> left_cosets(const PermGroup& g, const Subgroup& a);
std::vector<std::vector<Perm>> right_cosets(const PermGroup& g, const Subgroup& a);

/// The action of g on the left cosets of a by left multiplication.
struct CosetAction {
  Subgroup subgroup;                      // A
  std::vector<std::vector<Perm>> cosets;  // ordered as left_cosets
  std::vector<Perm> generator_images;     // image of each generator of g
  PermGroup image;                        // the induced permutation group
  Subgroup kernel;                        // elements acting trivially
};

/// Throws CapError when the index exceeds config().coset_index_cap.
CosetAction coset_action(const PermGroup& g, const Subgroup& a);

/// Orbits of the point stabilizer of v (g must be transitive).
std::vector<std::vector<Point>> suborbits(const PermGroup& g, Point v);

}  // namespace korbit
