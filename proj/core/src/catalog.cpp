#include "korbit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "korbit/error.hpp"
#include "korbit/lattice.hpp"

namespace korbit::catalog {

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no;

  explicit Scanner(std::string_view t, std::size_t ln) : text(t), line_no(ln) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line_no, pos + 1, msg);
  }
  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != ',' && text[pos] != '(' && text[pos] != ')')
      ++pos;
    if (pos == start) fail("expected a word");
    return std::string(text.substr(start, pos - start));
  }

  void expect_word(std::string_view kw) {
    skip_ws();
    std::size_t at = pos;
    std::string w = word();
    if (w != kw) {
      pos = at;
      fail("expected '" + std::string(kw) + "', got '" + w + "'");
    }
  }

  unsigned number(const char* what) {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(std::string("expected ") + what);
    unsigned long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<unsigned>(text[pos] - '0');
      if (v > 1'000'000'000UL) fail("number out of range");
      ++pos;
    }
    return static_cast<unsigned>(v);
  }
};

/// One generator: "()" or one or more parenthesized cycles.
Perm parse_generator(Scanner& sc, unsigned degree) {
  std::vector<std::vector<Point>> cycles;
  sc.skip_ws();
  if (sc.peek() != '(') sc.fail("expected '(' to start a generator");
  while (true) {
    sc.skip_ws();
    if (sc.peek() != '(') break;
    ++sc.pos;
    std::vector<Point> cycle;
    while (true) {
      sc.skip_ws();
      if (sc.peek() == ')') {
        ++sc.pos;
        break;
      }
      unsigned v = sc.number("a point");
      if (v >= degree)
        sc.fail("point " + std::to_string(v) + " out of range for degree " +
                std::to_string(degree));
      cycle.push_back(static_cast<Point>(v));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  try {
    return perm_from_cycles(degree, cycles);
  } catch (const Error& e) {
    sc.fail(e.what());
  }
}

}  // namespace

GroupSpec parse_spec_line(std::string_view line, std::size_t line_no,
                          GroupSpec::Source source) {
  Scanner sc(line, line_no);
  sc.expect_word("group");
  GroupSpec spec;
  spec.source = source;
  spec.id = sc.word();
  sc.expect_word("deg");
  spec.degree = sc.number("a degree");
  if (spec.degree == 0) sc.fail("degree must be positive");
  sc.expect_word("gens");
  while (true) {
    Perm g = parse_generator(sc, spec.degree);
    spec.generators.push_back(to_cycle_string(g));
    sc.skip_ws();
    if (sc.peek() == ',') {
      ++sc.pos;
      continue;
    }
    break;
  }
  if (!sc.done()) {
    sc.expect_word("tags");
    while (!sc.done()) spec.tags.insert(sc.word());
    if (spec.tags.empty()) sc.fail("expected at least one tag after 'tags'");
  }
  return spec;
}

std::string print_spec(const GroupSpec& spec) {
  std::ostringstream os;
  os << "group " << spec.id << " deg " << spec.degree << " gens ";
  for (std::size_t i = 0; i < spec.generators.size(); ++i) {
    if (i) os << ", ";
    os << spec.generators[i];
  }
  if (!spec.tags.empty()) {
    os << " tags";
    for (const auto& t : spec.tags) os << ' ' << t;
  }
  return os.str();
}

std::vector<GroupSpec> parse_catalog(std::istream& in, GroupSpec::Source source) {
  std::vector<GroupSpec> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_spec_line(line, line_no, source));
  }
  return out;
}

std::vector<GroupSpec> parse_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file: " + path);
  return parse_catalog(in, GroupSpec::Source::file);
}

namespace {

std::string nat_cycle(unsigned n) {
  std::ostringstream os;
  os << '(';
  for (unsigned i = 0; i < n; ++i) {
    if (i) os << ' ';
    os << i;
  }
  os << ')';
  return os.str();
}

std::string dihedral_flip(unsigned n) {
  // i -> -i mod n, written as disjoint transpositions
  std::ostringstream os;
  bool any = false;
  for (unsigned i = 1; 2 * i < n; ++i) {
    os << '(' << i << ' ' << (n - i) << ')';
    any = true;
  }
  return any ? os.str() : "()";
}

GroupSpec builtin(std::string id, unsigned degree,
                  std::vector<std::string> gens, std::uint64_t order,
                  std::set<std::string> tags = {}) {
  GroupSpec s;
  s.id = std::move(id);
  s.degree = degree;
  s.generators = std::move(gens);
  s.tags = std::move(tags);
  s.source = GroupSpec::Source::builtin;
  s.expected_order = order;
  return s;
}

}  // namespace

std::vector<GroupSpec> builtin_catalog() {
  std::vector<GroupSpec> out;
  out.push_back(builtin("C1", 1, {"()"}, 1));
  for (unsigned n = 2; n <= 8; ++n)
    out.push_back(builtin("C" + std::to_string(n), n, {nat_cycle(n)}, n));
  for (unsigned n = 3; n <= 8; ++n)
    out.push_back(builtin("D" + std::to_string(n), n,
                          {nat_cycle(n), dihedral_flip(n)}, 2 * n));
  out.push_back(builtin("S3", 3, {"(0 1 2)", "(0 1)"}, 6));
  out.push_back(builtin("S4", 4, {"(0 1 2 3)", "(0 1)"}, 24));
  out.push_back(builtin("A4", 4, {"(0 1 2)", "(1 2 3)"}, 12));
  out.push_back(builtin("A5", 5, {"(0 1 2 3 4)", "(0 1 2)"}, 60,
                        {"simple-declared"}));
  out.push_back(builtin("C2xC2", 4, {"(0 1)", "(2 3)"}, 4));
  out.push_back(builtin("C2xC2reg", 4, {"(0 1)(2 3)", "(0 2)(1 3)"}, 4));
  out.push_back(builtin("C3xC3", 6, {"(0 1 2)", "(3 4 5)"}, 9));
  // Frobenius p:q as <p-cycle, x -> r x mod p>
  out.push_back(builtin("F21", 7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"}, 21,
                        {"odd-order"}));
  out.push_back(builtin("F55", 11,
                        {"(0 1 2 3 4 5 6 7 8 9 10)", "(1 3 9 5 4)(2 6 7 10 8)"},
                        55, {"odd-order"}));
  out.push_back(builtin("F39", 13,
                        {"(0 1 2 3 4 5 6 7 8 9 10 11 12)",
                         "(1 3 9)(2 6 5)(4 12 10)(7 8 11)"},
                        39, {"odd-order"}));
  // collineations of the point-line geometry on Z7 with lines {i, i+1, i+3}
  out.push_back(builtin("PSL27", 7,
                        {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)", "(2 4)(5 6)"},
                        168, {"simple-declared"}));
  // quaternion group acting on itself by left multiplication
  out.push_back(builtin("Q8reg", 8,
                        {"(0 2 1 3)(4 6 5 7)", "(0 4 1 5)(2 7 3 6)"}, 8));
  // S3 acting on itself: a faithful degree-6 action far above its minimal degree
  out.push_back(builtin("S3reg", 6, {"(0 2)(1 3)(4 5)", "(0 3 4)(1 2 5)"}, 6));
  return out;
}

std::vector<GroupSpec> enumerate_transitive(unsigned degree) {
  if (degree == 0) throw Error("degree must be positive");
  if (degree > 6) throw CapError("transitive enumeration degree", degree, 6);

  std::vector<Perm> sym_gens;
  if (degree >= 2) {
    sym_gens.push_back(parse_perm(nat_cycle(degree), degree));
    if (degree >= 3) sym_gens.push_back(parse_perm("(0 1)", degree));
  }
  GroupConfig cfg;
  cfg.lattice_cap = 1'000;  // S6 has order 720; bypass the desk default
  PermGroup sym(degree, sym_gens, cfg);
  SubgroupLattice lat = build_subgroup_lattice(sym);

  std::vector<GroupSpec> out;
  unsigned k = 0;
  for (const auto& cls : lat.classes) {
    const Subgroup& rep = lat.subgroups[cls.front()];
    auto orbs = orbits_of(rep.generators, degree);
    if (orbs.size() != 1) continue;
    GroupSpec s;
    s.id = "T" + std::to_string(degree) + "." + std::to_string(++k);
    s.degree = degree;
    if (rep.generators.empty())
      s.generators = {"()"};
    else
      for (const Perm& g : rep.generators)
        s.generators.push_back(to_cycle_string(g));
    s.source = GroupSpec::Source::enumerated;
    s.expected_order = rep.order();
    out.push_back(std::move(s));
  }
  return out;
}

CatalogGroup realize(const GroupSpec& spec, GroupConfig config) {
  std::vector<Perm> gens;
  for (const auto& text : spec.generators)
    gens.push_back(parse_perm(text, spec.degree));
  PermGroup g(spec.degree, std::move(gens), config);
  if (spec.expected_order && g.order() != *spec.expected_order)
    throw Error("catalog entry " + spec.id + ": generated order " +
                std::to_string(g.order()) + " does not match recorded order " +
                std::to_string(*spec.expected_order));
  return CatalogGroup{spec, std::move(g)};
}

std::vector<CatalogGroup> realize_all(const std::vector<GroupSpec>& specs,
                                      GroupConfig config) {
  std::vector<CatalogGroup> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(realize(s, config));
  return out;
}

const GroupSpec* find_spec(const std::vector<GroupSpec>& specs,
                           const std::string& id) {
  for (const auto& s : specs)
    if (s.id == id) return &s;
  return nullptr;
}

}  // namespace korbit::catalog
