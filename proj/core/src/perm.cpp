#include "korbit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "korbit/error.hpp"

namespace korbit {

Perm::Perm(unsigned degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error("image map is not a bijection on {0,...," +
                  std::to_string(images_.size() ? images_.size() - 1 : 0) + "}");
    seen[v] = true;
  }
}

bool Perm::is_identity() const noexcept {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Perm r;
  r.images_ = std::move(inv);
  return r;
}

Perm operator*(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw Error("degree mismatch in composition: " +
                std::to_string(p.degree()) + " vs " + std::to_string(q.degree()));
  std::vector<Point> out(p.degree());
  for (Point i = 0; i < p.degree(); ++i) out[i] = p.images_[q.images_[i]];
  Perm r;
  r.images_ = std::move(out);
  return r;
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image words
  std::size_t h = 14695981039346656037ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

bool CycleType::uniform() const noexcept {
  if (lengths.empty()) return true;
  return lengths.front() == lengths.back();  // sorted
}

std::vector<std::vector<Point>> cycle_decomposition(const Perm& p) {
  std::vector<std::vector<Point>> cycles;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    std::vector<Point> cycle{i};
    seen[i] = true;
    for (Point j = p(i); j != i; j = p(j)) {
      cycle.push_back(j);
      seen[j] = true;
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;  // scan order guarantees min-first rotation and min-sorted cycles
}

CycleType cycle_type(const Perm& p) {
  CycleType t;
  for (const auto& c : cycle_decomposition(p)) {
    t.lengths.push_back(static_cast<unsigned>(c.size()));
    if (c.size() == 1) ++t.fixed_count;
  }
  std::sort(t.lengths.begin(), t.lengths.end());
  return t;
}

Perm perm_from_cycles(unsigned degree,
                      const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      Point from = c[k];
      Point to = c[(k + 1) % c.size()];
      if (from >= degree || used[from])
        throw Error("cycle notation repeats or exceeds degree at point " +
                    std::to_string(from));
      used[from] = true;
      images[from] = to;
    }
  }
  return Perm(std::move(images));
}

std::vector<Point> fixed_points(const Perm& p) {
  std::vector<Point> out;
  for (Point i = 0; i < p.degree(); ++i)
    if (p(i) == i) out.push_back(i);
  return out;
}

bool is_regular_element(const Perm& p) {
  return cycle_type(p).uniform();
}

std::string to_cycle_string(const Perm& p) {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycle_decomposition(p)) {
    if (c.size() == 1) continue;
    any = true;
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) os << ' ';
      os << c[k];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

Perm parse_perm(std::string_view text, unsigned degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error("empty permutation text");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw Error("expected '(' in cycle notation at offset " + std::to_string(i));
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i == text.size()) throw Error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw Error("expected point or ')' in cycle at offset " + std::to_string(i));
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > 1'000'000'000UL) throw Error("point out of range");
        ++i;
      }
      if (v >= degree)
        throw Error("point " + std::to_string(v) + " out of range for degree " +
                    std::to_string(degree));
      cycle.push_back(static_cast<Point>(v));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return perm_from_cycles(degree, cycles);
}

}  // namespace korbit
