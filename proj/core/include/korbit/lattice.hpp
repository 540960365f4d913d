#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "korbit/group.hpp"

namespace korbit {

/// The complete subgroup lattice of a small group, with conjugacy classes.
/// Subgroups are sorted by (order, element list); each class lists indices
/// into `subgroups` and is represented by its smallest member.
struct SubgroupLattice {
  std::vector<Subgroup> subgroups;
  std::vector<std::vector<std::size_t>> classes;  // indices, sorted
  std::vector<std::size_t> class_of;              // subgroup index -> class index

  const Subgroup& class_rep(std::size_t cls) const {
    return subgroups[classes[cls].front()];
  }
};

/// Cyclic-seed + join closure over the full element set. Complete for the
/// materialized regime; cost grows quickly with the number of subgroups.
SubgroupLattice build_subgroup_lattice(const PermGroup& g);

/// Subgroups with trivial core that are maximal by inclusion among the
/// core-free subgroups, one representative per conjugacy class.
std::vector<Subgroup> md_stabilizers(const PermGroup& g);

/// True iff a is core-free and no strictly larger core-free subgroup exists.
bool is_md_representation(const PermGroup& g, const Subgroup& a);

/// True iff a is a maximal subgroup of g (used to flag the alternate
/// reading of "maximal ... that contains no normal subgroup").
bool is_maximal_subgroup(const PermGroup& g, const Subgroup& a);

/// Result of the minimal-faithful-degree search over collections
/// {A_1,...,A_m} of proper subgroups with trivial intersection of cores,
/// minimizing the total index. m=1 is the best transitive representation,
/// m>=2 the best intransitive one.
struct FaithfulDegreeResult {
  std::uint64_t degree = 0;
  std::vector<Subgroup> collection;                  // achieving subgroups
  std::optional<std::uint64_t> best_transitive;      // m = 1
  std::optional<std::uint64_t> best_intransitive;    // m >= 2
  bool achieved_intransitively() const { return collection.size() >= 2; }
};

/// Exhaustive branch-and-bound over antichains of conjugacy-class
/// representatives. For the trivial group the result is degree 1.
FaithfulDegreeResult minimal_faithful_degree(const PermGroup& g);

/// Sizes of orbits of subgroups of g. With a feasible lattice this ranges
/// over every subgroup; otherwise it falls back to suborbit sizes, and
/// from_lattice records which mode produced the values.
struct AutomorphicNumbers {
  std::set<unsigned> values;
  bool from_lattice = false;
};
AutomorphicNumbers automorphic_numbers(const PermGroup& g);

}  // namespace korbit
