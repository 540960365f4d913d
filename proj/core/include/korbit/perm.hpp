#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace korbit {

/// 0-based point on which permutations act.
using Point = unsigned;

/// An immutable permutation of {0,...,n-1}, stored as a dense image map.
///
/// Composition convention: (p * q) applies q first, then p, i.e.
/// (p * q)(i) = p(q(i)). This is fixed once here and used everywhere.
class Perm {
public:
  Perm() = default;

  /// Identity of the given degree.
  explicit Perm(unsigned degree);

  /// From an image map; throws Error unless it is a bijection.
  explicit Perm(std::vector<Point> images);

  static Perm identity(unsigned degree) { return Perm(degree); }

  unsigned degree() const noexcept { return static_cast<unsigned>(images_.size()); }
  Point operator()(Point p) const { return images_[p]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Perm inverse() const;

  /// q first, then p. Throws Error on degree mismatch.
  friend Perm operator*(const Perm& p, const Perm& q);

  friend bool operator==(const Perm&, const Perm&) = default;
  /// Lexicographic order on image maps; the canonical element order.
  friend auto operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

/// Hash over the raw image bytes, for unordered containers of permutations.
struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// Multiset of cycle lengths of a permutation (sorted ascending).
struct CycleType {
  std::vector<unsigned> lengths;
  unsigned fixed_count = 0;

  /// True iff every cycle has the same length (identity included).
  bool uniform() const noexcept;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

/// Disjoint cycles covering every point (1-cycles included), each cycle
/// rotated to start at its minimum, cycles sorted by that minimum.
std::vector<std::vector<Point>> cycle_decomposition(const Perm& p);

CycleType cycle_type(const Perm& p);

/// Rebuild a permutation from disjoint cycles. Unlisted points are fixed.
Perm perm_from_cycles(unsigned degree,
                      const std::vector<std::vector<Point>>& cycles);

/// Points i with p(i) = i.
std::vector<Point> fixed_points(const Perm& p);

/// True iff the cycle decomposition has all cycles of one length.
bool is_regular_element(const Perm& p);

/// Canonical cycle notation: fixed points omitted, each cycle starting at
/// its minimum, cycles ordered by minimum; identity prints as "()".
std::string to_cycle_string(const Perm& p);

/// Parse cycle notation like "(0 1 2)(3 4)" or "()" into a permutation of
/// the given degree. Throws Error on malformed text, repeated or
/// out-of-range points.
Perm parse_perm(std::string_view text, unsigned degree);

}  // namespace korbit
