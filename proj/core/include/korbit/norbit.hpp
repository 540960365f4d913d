#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "korbit/group.hpp"

namespace korbit {

/// The |G| x n matrix whose rows are the image tuples (g(0),...,g(n-1)) of
/// the group elements. Rows are exactly the sorted element list read as
/// tuples, so the matrix is stored as the permutations themselves.
class NOrbitMatrix {
public:
  static NOrbitMatrix from_group(const PermGroup& g);

  unsigned degree() const noexcept { return degree_; }
  std::size_t row_count() const noexcept { return rows_->size(); }
  const std::vector<Perm>& rows() const noexcept { return *rows_; }
  bool has_row(const Perm& p) const;

private:
  unsigned degree_ = 0;
  std::shared_ptr<const std::vector<Perm>> rows_;  // sorted
};

/// Rows of all elements of g. Throws CapError beyond the element cap.
NOrbitMatrix n_orbit(const PermGroup& g);

/// The n-orbit of the image of the coset action of g on the left cosets
/// of a; row count is |G| / |core(A)|.
NOrbitMatrix n_orbit_from_cosets(const PermGroup& g, const Subgroup& a);

/// Deduplicated projection of the rows to a tuple of distinct columns.
struct KOrbit {
  std::vector<unsigned> index_tuple;
  std::vector<std::vector<Point>> tuples;  // sorted
};
KOrbit k_projection(const NOrbitMatrix& x, std::span<const unsigned> columns);

/// All degree-n permutations s with {s * row : row in X} = X. Since the
/// identity tuple is a row, every such s is itself a row, so candidates
/// are tested directly against the row set. For a group n-orbit this
/// recovers the represented group.
PermGroup aut_of_n_orbit(const NOrbitMatrix& x);

enum class IsoVerdict { isomorphic, non_isomorphic, undecided };

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::undecided;
  std::optional<Perm> witness;  // s with s X s^{-1} = Y, verified
  std::uint64_t nodes = 0;      // backtrack nodes visited
};

/// Decide whether two group n-orbits are conjugate in the symmetric group:
/// is there s with {s * row * s^{-1}} = Y? Cheap invariants (degree, row
/// count, cycle-type and orbit-size multisets) run first; then a
/// backtracking search over point images with per-generator candidate
/// filtering. Exceeding the node budget yields `undecided`, never a
/// silent false.
IsoResult n_orbits_isomorphic(const NOrbitMatrix& x, const NOrbitMatrix& y,
                              std::uint64_t node_budget = 1'000'000);

}  // namespace korbit
