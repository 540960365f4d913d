#include "korbit/blocks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "korbit/error.hpp"

namespace korbit {

namespace {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(unsigned n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

/// Finest G-invariant partition joining a and b (Atkinson's closure).
std::vector<std::vector<Point>> pair_closure(const PermGroup& g, Point a, Point b) {
  UnionFind uf(g.degree());
  std::vector<std::pair<Point, Point>> queue{{a, b}};
  uf.unite(a, b);
  while (!queue.empty()) {
    auto [x, y] = queue.back();
    queue.pop_back();
    for (const Perm& s : g.generators())
      if (uf.unite(s(x), s(y))) queue.emplace_back(s(x), s(y));
  }
  std::map<Point, std::vector<Point>> by_root;
  for (Point v = 0; v < g.degree(); ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<Point>> blocks;
  for (auto& [root, blk] : by_root) blocks.push_back(std::move(blk));
  return blocks;
}

bool refines(const BlockSystem& fine, const BlockSystem& coarse) {
  for (const auto& fb : fine.blocks) {
    bool inside = false;
    for (const auto& cb : coarse.blocks) {
      if (std::includes(cb.begin(), cb.end(), fb.begin(), fb.end())) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace

bool is_invariant(const PermGroup& g, const BlockSystem& q) {
  std::set<std::vector<Point>> block_set(q.blocks.begin(), q.blocks.end());
  for (const Perm& s : g.generators()) {
    for (const auto& blk : q.blocks) {
      std::vector<Point> img;
      img.reserve(blk.size());
      for (Point v : blk) img.push_back(s(v));
      std::sort(img.begin(), img.end());
      if (!block_set.count(img)) return false;
    }
  }
  return true;
}

std::vector<BlockSystem> minimal_block_systems(const PermGroup& g) {
  if (!is_transitive(g)) throw Error("block systems need a transitive group");
  const unsigned n = g.degree();
  std::vector<BlockSystem> found;
  std::set<std::vector<std::vector<Point>>> seen;
  for (Point b = 1; b < n; ++b) {
    auto blocks = pair_closure(g, 0, b);
    if (blocks.size() <= 1 || blocks.size() >= n) continue;  // trivial
    if (seen.insert(blocks).second) found.push_back(BlockSystem{std::move(blocks)});
  }
  // keep only refinement-minimal systems
  std::vector<BlockSystem> minimal;
  for (const auto& q : found) {
    bool has_finer = false;
    for (const auto& r : found) {
      if (&r == &q) continue;
      if (refines(r, q)) {
        has_finer = true;
        break;
      }
    }
    if (!has_finer) minimal.push_back(q);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const BlockSystem& a, const BlockSystem& b) {
              if (a.block_size() != b.block_size())
                return a.block_size() < b.block_size();
              return a.blocks < b.blocks;
            });
  return minimal;
}

bool is_primitive(const PermGroup& g) {
  if (!is_transitive(g)) return false;
  return minimal_block_systems(g).empty();
}

bool is_primitive_paper(const PermGroup& g) {
  return is_primitive(g) && !g.is_abelian();
}

Subgroup block_kernel(const PermGroup& g, const BlockSystem& q) {
  if (!is_invariant(g, q)) throw Error("partition is not G-invariant");
  std::vector<std::vector<bool>> membership;
  for (const auto& blk : q.blocks) {
    std::vector<bool> m(g.degree(), false);
    for (Point v : blk) m[v] = true;
    membership.push_back(std::move(m));
  }
  std::vector<Perm> members;
  for (const Perm& p : g.elements()) {
    bool fixes_all = true;
    for (std::size_t bi = 0; bi < q.blocks.size() && fixes_all; ++bi)
      for (Point v : q.blocks[bi])
        if (!membership[bi][p(v)]) {
          fixes_all = false;
          break;
        }
    if (fixes_all) members.push_back(p);
  }
  Subgroup s;
  s.degree = g.degree();
  s.generators = canonical_generators(g.degree(), members);
  s.elements = std::move(members);
  return s;
}

}  // namespace korbit
