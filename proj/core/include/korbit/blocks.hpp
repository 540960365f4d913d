#pragma once

#include <vector>

#include "korbit/group.hpp"

namespace korbit {

/// A G-invariant partition of the point set into equal-size blocks, each
/// block sorted, blocks ordered by smallest point.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;

  unsigned block_size() const {
    return blocks.empty() ? 0 : static_cast<unsigned>(blocks.front().size());
  }
  unsigned block_count() const { return static_cast<unsigned>(blocks.size()); }

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// True iff every generator maps every block onto a block.
bool is_invariant(const PermGroup& g, const BlockSystem& q);

/// All minimal nontrivial block systems of a transitive group, found by
/// closing {0, b} for every b != 0 and keeping the refinement-minimal
/// results. Throws Error for intransitive groups.
std::vector<BlockSystem> minimal_block_systems(const PermGroup& g);

/// Standard primitivity: transitive with no nontrivial block system.
bool is_primitive(const PermGroup& g);

/// Primitivity in the stricter convention used throughout the claim
/// checks: primitive and non-abelian.
bool is_primitive_paper(const PermGroup& g);

/// The kernel of the action on blocks: all elements fixing every block
/// setwise. Equals the intersection of the setwise stabilizers of the
/// blocks. Throws Error when q is not G-invariant.
Subgroup block_kernel(const PermGroup& g, const BlockSystem& q);

}  // namespace korbit
