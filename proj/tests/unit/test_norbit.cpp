#include "korbit/norbit.hpp"

#include <random>

#include "doctest.h"
#include "korbit/catalog.hpp"
#include "korbit/error.hpp"

using namespace korbit;

namespace {

PermGroup make(unsigned degree, std::initializer_list<const char*> gens) {
  std::vector<Perm> parsed;
  for (const char* g : gens) parsed.push_back(parse_perm(g, degree));
  return PermGroup(degree, std::move(parsed));
}

PermGroup conjugated(const PermGroup& g, const Perm& sigma) {
  Perm si = sigma.inverse();
  std::vector<Perm> gens;
  for (const Perm& x : g.generators()) gens.push_back(sigma * x * si);
  return PermGroup(g.degree(), std::move(gens));
}

Perm random_perm(unsigned degree, std::mt19937& rng) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Perm(std::move(img));
}

}  // namespace

TEST_CASE("n-orbit rows") {
  NOrbitMatrix trivial = n_orbit(make(3, {}));
  REQUIRE(trivial.row_count() == 1);
  CHECK(trivial.rows().front() == Perm(3));

  NOrbitMatrix s3 = n_orbit(make(3, {"(0 1 2)", "(0 1)"}));
  CHECK(s3.row_count() == 6);  // all tuples over 3 points

  NOrbitMatrix f21 = n_orbit(make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"}));
  CHECK(f21.row_count() == 21);
  CHECK(f21.degree() == 7);

  for (const auto& spec : catalog::builtin_catalog()) {
    auto cg = catalog::realize(spec);
    CAPTURE(spec.id);
    CHECK(n_orbit(cg.group).row_count() == cg.group.order());
  }
}

TEST_CASE("n-orbit from cosets") {
  PermGroup s4 = make(4, {"(0 1 2 3)", "(0 1)"});
  PermGroup d4 = make(4, {"(0 1 2 3)", "(1 3)"});
  NOrbitMatrix m = n_orbit_from_cosets(s4, d4.as_subgroup());
  CHECK(m.degree() == 3);
  CHECK(m.row_count() == 6);  // |S4| / |core| = 24 / 4

  // cosets of the trivial subgroup: the regular n-orbit
  PermGroup s3 = make(3, {"(0 1 2)", "(0 1)"});
  Subgroup triv{3, {Perm(3)}, {}};
  NOrbitMatrix reg = n_orbit_from_cosets(s3, triv);
  CHECK(reg.degree() == 6);
  CHECK(reg.row_count() == 6);

  // F21 on cosets of a point stabilizer is the natural n-orbit again
  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  NOrbitMatrix from_cosets = n_orbit_from_cosets(f21, point_stabilizer(f21, 0));
  NOrbitMatrix natural = n_orbit(f21);
  CHECK(from_cosets.rows() == natural.rows());
}

TEST_CASE("k-projections") {
  PermGroup s3 = make(3, {"(0 1 2)", "(0 1)"});
  NOrbitMatrix m = n_orbit(s3);

  std::vector<unsigned> all{0, 1, 2};
  KOrbit full = k_projection(m, all);
  CHECK(full.tuples.size() == m.row_count());

  std::vector<unsigned> one{0};
  KOrbit col = k_projection(m, one);
  CHECK(col.tuples.size() == 3);  // transitivity

  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  std::vector<unsigned> pair{0, 1};
  KOrbit k2 = k_projection(n_orbit(f21), pair);
  CHECK(k2.tuples.size() == 21);  // the pair stabilizer is trivial

  std::vector<unsigned> bad{0, 9};
  CHECK_THROWS_AS(k_projection(n_orbit(f21), bad), Error);
  std::vector<unsigned> dup{0, 0};
  CHECK_THROWS_AS(k_projection(m, dup), Error);
}

TEST_CASE("single-column projection is the point orbit") {
  for (const auto& spec : catalog::builtin_catalog()) {
    auto cg = catalog::realize(spec);
    CAPTURE(spec.id);
    NOrbitMatrix m = n_orbit(cg.group);
    for (Point v = 0; v < cg.group.degree(); ++v) {
      std::vector<unsigned> col{v};
      KOrbit k = k_projection(m, col);
      std::vector<Point> values;
      for (const auto& t : k.tuples) values.push_back(t.front());
      CHECK(values == orbit_of_point(cg.group, v));
    }
  }
}

TEST_CASE("orbit-stabilizer identity on k-orbit tuples") {
  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  NOrbitMatrix m = n_orbit(f21);
  for (unsigned a = 0; a < 7; ++a)
    for (unsigned b = 0; b < 7; ++b) {
      if (a == b) continue;
      std::vector<unsigned> cols{a, b};
      KOrbit k = k_projection(m, cols);
      // tuple stabilizer of the base pair (a, b)
      std::size_t stab = 0;
      for (const Perm& g : f21.elements())
        if (g(a) == a && g(b) == b) ++stab;
      CHECK(k.tuples.size() * stab == f21.order());
    }
}

TEST_CASE("automorphisms of an n-orbit recover the group") {
  PermGroup s3 = make(3, {"(0 1 2)", "(0 1)"});
  CHECK(aut_of_n_orbit(n_orbit(s3)).elements() == s3.elements());

  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  CHECK(aut_of_n_orbit(n_orbit(f21)).order() == 21);

  PermGroup s4 = make(4, {"(0 1 2 3)", "(0 1)"});
  PermGroup d4 = make(4, {"(0 1 2 3)", "(1 3)"});
  NOrbitMatrix coset_orbit = n_orbit_from_cosets(s4, d4.as_subgroup());
  CHECK(aut_of_n_orbit(coset_orbit).order() == 6);
}

TEST_CASE("isomorphism: reflexivity and trivial rejections") {
  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  NOrbitMatrix m = n_orbit(f21);
  IsoResult self = n_orbits_isomorphic(m, m);
  REQUIRE(self.verdict == IsoVerdict::isomorphic);
  CHECK(*self.witness == Perm(7));

  NOrbitMatrix c4 = n_orbit(make(4, {"(0 1 2 3)"}));
  NOrbitMatrix v4 = n_orbit(make(4, {"(0 1)(2 3)", "(0 2)(1 3)"}));
  CHECK(n_orbits_isomorphic(c4, v4).verdict == IsoVerdict::non_isomorphic);

  // same degree, same order, still different: C6 vs regular S3
  NOrbitMatrix c6 = n_orbit(make(6, {"(0 1 2 3 4 5)"}));
  NOrbitMatrix s3reg = n_orbit(make(6, {"(0 2)(1 3)(4 5)", "(0 3 4)(1 2 5)"}));
  CHECK(n_orbits_isomorphic(c6, s3reg).verdict == IsoVerdict::non_isomorphic);

  // different row counts reject immediately
  NOrbitMatrix c2 = n_orbit(make(4, {"(0 1)(2 3)"}));
  CHECK(n_orbits_isomorphic(c4, c2).verdict == IsoVerdict::non_isomorphic);
}

TEST_CASE("isomorphism: hand-built conjugate with witness") {
  PermGroup s3 = make(3, {"(0 1 2)", "(0 1)"});
  Perm sigma = parse_perm("(1 2)", 3);
  PermGroup other = conjugated(s3, sigma);
  IsoResult iso = n_orbits_isomorphic(n_orbit(s3), n_orbit(other));
  REQUIRE(iso.verdict == IsoVerdict::isomorphic);
  REQUIRE(iso.witness.has_value());
  // the witness really conjugates rows onto rows
  Perm w = *iso.witness;
  Perm wi = w.inverse();
  NOrbitMatrix target = n_orbit(other);
  for (const Perm& row : n_orbit(s3).rows()) CHECK(target.has_row(w * row * wi));
}

TEST_CASE("isomorphism under random conjugation, witness verified") {
  std::mt19937 rng(97531);
  for (const char* id : {"S4", "F21", "D6", "Q8reg", "C2xC2"}) {
    auto spec = catalog::find_spec(catalog::builtin_catalog(), id);
    REQUIRE(spec != nullptr);
    auto cg = catalog::realize(*spec);
    NOrbitMatrix x = n_orbit(cg.group);
    for (int trial = 0; trial < 4; ++trial) {
      Perm sigma = random_perm(cg.group.degree(), rng);
      NOrbitMatrix y = n_orbit(conjugated(cg.group, sigma));
      IsoResult iso = n_orbits_isomorphic(x, y);
      CAPTURE(id);
      REQUIRE(iso.verdict == IsoVerdict::isomorphic);
      Perm w = *iso.witness;
      Perm wi = w.inverse();
      for (const Perm& row : x.rows()) CHECK(y.has_row(w * row * wi));
    }
  }
}

TEST_CASE("undecided under a starved node budget") {
  PermGroup f21 = make(7, {"(0 1 2 3 4 5 6)", "(1 2 4)(3 6 5)"});
  Perm sigma = parse_perm("(0 3)(1 5)", 7);
  NOrbitMatrix x = n_orbit(f21);
  NOrbitMatrix y = n_orbit(conjugated(f21, sigma));
  IsoResult iso = n_orbits_isomorphic(x, y, 1);
  CHECK(iso.verdict == IsoVerdict::undecided);
}
