#include "korbit/group.hpp"

#include "doctest.h"
#include "korbit/catalog.hpp"
#include "korbit/error.hpp"
#include "oracles.hpp"

using namespace korbit;

namespace {

PermGroup make(unsigned degree, std::initializer_list<const char*> gens,
               GroupConfig cfg = {}) {
  std::vector<Perm> parsed;
  for (const char* g : gens) parsed.push_back(parse_perm(g, degree));
  return PermGroup(degree, std::move(parsed), cfg);
}

std::set<oracle::Image> to_oracle(const std::vector<Perm>& elems) {
  std::set<oracle::Image> out;
  for (const Perm& p : elems)
    out.insert(oracle::Image(p.images().begin(), p.images().end()));
  return out;
}

std::set<oracle::Image> oracle_closure(const PermGroup& g) {
  std::vector<oracle::Image> gens;
  for (const Perm& p : g.generators())
    gens.emplace_back(p.images().begin(), p.images().end());
  return oracle::o_closure(gens, g.degree());
}

}  // namespace

TEST_CASE("generation and order") {
  CHECK(make(3, {"(0 1)", "(0 1 2)"}).order() == 6);
  CHECK(make(4, {}).order() == 1);
  // Frobenius group of order 21, checked against the brute-force closure
  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  CHECK(f21.order() == 21);
  CHECK(oracle_closure(f21).size() == 21);
  CHECK(to_oracle(f21.elements()) == oracle_closure(f21));
}

TEST_CASE("chain order equals closure order on every builtin group") {
  for (const auto& spec : catalog::builtin_catalog()) {
    auto cg = catalog::realize(spec);
    CAPTURE(spec.id);
    CHECK(cg.group.order() == oracle_closure(cg.group).size());
  }
}

TEST_CASE("membership") {
  PermGroup s4 = make(4, {"(0 1 2 3)", "(0 1)"});
  CHECK(s4.contains(parse_perm("(0 2)(1 3)", 4)));
  PermGroup a4 = make(4, {"(0 1 2)", "(1 2 3)"});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(parse_perm("(0 1)", 4)));
}

TEST_CASE("element materialization cap") {
  GroupConfig cfg;
  cfg.element_cap = 10;
  PermGroup s4 = make(4, {"(0 1 2 3)", "(0 1)"}, cfg);
  CHECK(s4.order() == 24);  // chain-only mode still answers
  CHECK_THROWS_AS(s4.elements(), CapError);
  try {
    s4.elements();
  } catch (const CapError& e) {
    CHECK(e.cap_name() == "element materialization");
  }
}

TEST_CASE("orbits and transitivity") {
  PermGroup s3 = make(3, {"(0 1 2)", "(0 1)"});
  CHECK(orbits(s3).size() == 1);
  CHECK(is_transitive(s3));

  PermGroup g = make(4, {"(0 1)"});
  auto orbs = orbits(g);
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0] == std::vector<Point>{0, 1});
  CHECK(orbs[1] == std::vector<Point>{2});
  CHECK_FALSE(is_transitive(g));

  CHECK(is_transitive(make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"})));
}

TEST_CASE("point stabilizer and orbit-stabilizer identity") {
  PermGroup s3 = make(3, {"(0 1 2)", "(0 1)"});
  CHECK(point_stabilizer(s3, 0).order() == 2);

  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  CHECK(point_stabilizer(f21, 0).order() == 3);

  PermGroup trivial = make(5, {});
  CHECK(point_stabilizer(trivial, 2).order() == 1);

  for (const auto& spec : catalog::builtin_catalog()) {
    auto cg = catalog::realize(spec);
    CAPTURE(spec.id);
    for (Point v = 0; v < cg.group.degree(); ++v) {
      CHECK(orbit_of_point(cg.group, v).size() *
                point_stabilizer(cg.group, v).order() ==
            cg.group.order());
    }
  }
}

TEST_CASE("setwise stabilizer") {
  PermGroup s4 = make(4, {"(0 1 2 3)", "(0 1)"});
  std::vector<Point> pair{0, 1};
  Subgroup stab = setwise_stabilizer(s4, pair);
  CHECK(stab.order() == 4);
  CHECK(stab.contains(parse_perm("(0 1)", 4)));
  CHECK(stab.contains(parse_perm("(2 3)", 4)));
  CHECK(stab.contains(parse_perm("(0 1)(2 3)", 4)));

  std::vector<Point> all{0, 1, 2, 3};
  CHECK(setwise_stabilizer(s4, all).order() == 24);

  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  std::vector<Point> zero{0};
  CHECK(setwise_stabilizer(f21, zero) == point_stabilizer(f21, 0));

  CHECK_THROWS_AS(setwise_stabilizer(s4, std::vector<Point>{}), Error);
}

TEST_CASE("normality") {
  PermGroup s3 = make(3, {"(0 1 2)", "(0 1)"});
  CHECK(is_normal(s3, s3.as_subgroup()));

  Subgroup c2 = point_stabilizer(s3, 2);  // <(0 1)>
  CHECK(c2.order() == 2);
  CHECK_FALSE(is_normal(s3, c2));

  PermGroup d4 = make(4, {"(0 1 2 3)", "(1 3)"});
  std::vector<Perm> seed{parse_perm("(0 2)(1 3)", 4)};
  Subgroup center = normal_closure(d4, seed);
  CHECK(center.order() == 2);
  CHECK(is_normal(d4, center));

  std::vector<Perm> refl{parse_perm("(1 3)", 4)};
  Subgroup closure = normal_closure(d4, refl);
  CHECK(closure.order() == 4);  // both diagonal reflections and the center
  CHECK(is_normal(d4, closure));
}

TEST_CASE("core of a subgroup") {
  PermGroup s4 = make(4, {"(0 1 2 3)", "(0 1)"});
  // D4 inside S4
  std::vector<Perm> d4gens{parse_perm("(0 1 2 3)", 4), parse_perm("(1 3)", 4)};
  PermGroup d4(4, d4gens);
  Subgroup core = core_of(s4, d4.as_subgroup());
  CHECK(core.order() == 4);
  CHECK(core.contains(parse_perm("(0 1)(2 3)", 4)));
  CHECK(core.contains(parse_perm("(0 2)(1 3)", 4)));
  CHECK(core.contains(parse_perm("(0 3)(1 2)", 4)));

  // independent route
  auto s4_elems = to_oracle(s4.elements());
  auto d4_elems = to_oracle(d4.elements());
  CHECK(to_oracle(core.elements) == oracle::o_core(s4_elems, d4_elems));

  // core of a normal subgroup is the subgroup itself
  PermGroup a4 = make(4, {"(0 1 2)", "(1 2 3)"});
  CHECK(core_of(s4, a4.as_subgroup()).order() == 12);

  // core of a reflection inside D4 is trivial
  PermGroup d4g = make(4, {"(0 1 2 3)", "(1 3)"});
  std::vector<Perm> refl_elems{Perm(4), parse_perm("(1 3)", 4)};
  Subgroup refl{4, refl_elems, {parse_perm("(1 3)", 4)}};
  CHECK(core_of(d4g, refl).order() == 1);
}

TEST_CASE("cosets and the coset action") {
  PermGroup s4 = make(4, {"(0 1 2 3)", "(0 1)"});
  PermGroup d4 = make(4, {"(0 1 2 3)", "(1 3)"});
  Subgroup a = d4.as_subgroup();

  auto lc = left_cosets(s4, a);
  REQUIRE(lc.size() == 3);
  CHECK(lc[0] == a.elements);  // A first
  for (const auto& coset : lc) CHECK(coset.size() == 8);

  auto rc = right_cosets(s4, a);
  REQUIRE(rc.size() == 3);

  CosetAction act = coset_action(s4, a);
  CHECK(act.image.degree() == 3);
  CHECK(act.image.order() == 6);
  CHECK(act.kernel.order() == 4);
  // the kernel is exactly the core (two independent routes)
  CHECK(act.kernel == core_of(s4, a));

  // regular representation: cosets of the trivial subgroup
  PermGroup s3 = make(3, {"(0 1 2)", "(0 1)"});
  Subgroup triv{3, {Perm(3)}, {}};
  CosetAction reg = coset_action(s3, triv);
  CHECK(reg.image.degree() == 6);
  CHECK(reg.image.order() == 6);
  CHECK(reg.kernel.order() == 1);

  // F21 on cosets of a point stabilizer: degree 7, trivial kernel
  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  CosetAction f21act = coset_action(f21, point_stabilizer(f21, 0));
  CHECK(f21act.image.degree() == 7);
  CHECK(f21act.image.order() == 21);
  CHECK(f21act.kernel.order() == 1);
}

TEST_CASE("coset action kernel equals core across the S4 lattice") {
  PermGroup s4 = make(4, {"(0 1 2 3)", "(0 1)"});
  const auto& lat = s4.lattice();
  for (const auto& cls : lat.classes) {
    const Subgroup& a = lat.subgroups[cls.front()];
    CHECK(coset_action(s4, a).kernel == core_of(s4, a));
  }
  PermGroup d4 = make(4, {"(0 1 2 3)", "(1 3)"});
  for (const auto& cls : d4.lattice().classes) {
    const Subgroup& a = d4.lattice().subgroups[cls.front()];
    CHECK(coset_action(d4, a).kernel == core_of(d4, a));
  }
}

TEST_CASE("coset index cap") {
  GroupConfig cfg;
  cfg.coset_index_cap = 4;
  PermGroup s4 = make(4, {"(0 1 2 3)", "(0 1)"}, cfg);
  Subgroup triv{4, {Perm(4)}, {}};
  CHECK_THROWS_AS(coset_action(s4, triv), CapError);
}

TEST_CASE("suborbits") {
  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  auto subs = suborbits(f21, 0);
  std::multiset<std::size_t> sizes;
  for (const auto& s : subs) sizes.insert(s.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 3, 3});

  // regular group: all suborbits are singletons
  PermGroup c5 = make(5, {"(0 1 2 3 4)"});
  CHECK(suborbits(c5, 0).size() == 5);

  PermGroup s4 = make(4, {"(0 1 2 3)", "(0 1)"});
  auto s4subs = suborbits(s4, 0);
  std::multiset<std::size_t> s4sizes;
  for (const auto& s : s4subs) s4sizes.insert(s.size());
  CHECK(s4sizes == std::multiset<std::size_t>{1, 3});

  CHECK_THROWS_AS(suborbits(make(4, {"(0 1)"}), 0), Error);
}

TEST_CASE("degree-1 group is legal everywhere") {
  PermGroup g = make(1, {});
  CHECK(g.order() == 1);
  CHECK(is_transitive(g));
  CHECK(point_stabilizer(g, 0).order() == 1);
}
