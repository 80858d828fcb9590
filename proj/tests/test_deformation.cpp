#include "dendro/deformation.hpp"

#include "doctest.h"

#include <random>

using namespace dendro;

namespace {

DendriformAlgebra a1() {
  return DendriformAlgebra::make(1, {Rational(1)}, {Rational(0)});
}

DendriformAlgebra a2() {
  std::vector<Rational> prec(8, Rational(0)), succ(8, Rational(0));
  prec[(0 * 2 + 0) * 2 + 1] = 1;
  return DendriformAlgebra::make(2, prec, succ);
}

DendriformAlgebra a3() {
  // K[x]/(x^3) with a < b = ab, a > b = 0
  const int d = 3;
  std::vector<Rational> p(27, Rational(0)), s(27, Rational(0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i + j < d) p[(i * d + j) * d + (i + j)] = 1;
  return DendriformAlgebra::make(d, p, s);
}

RationalMatrix euler(int d) {
  RationalMatrix m = RationalMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k) m(k, k) = k;
  return m;
}

MultiMap cocycle_of(const DendriformAlgebra& a, int degree, int index) {
  return cohomology_dim(a, Representation::adjoint(a), degree).cocycle_basis.at(index);
}

}  // namespace

TEST_CASE("order-by-order validity") {
  DendriformAlgebra a = a2();
  MultiMap pi1 = cocycle_of(a, 2, 0);
  TruncatedDeformation def{a, 1, {pi1}};
  auto reports = check_deformation(def);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) CHECK(r.ok);

  // a random non-cocycle fails at order 1
  MultiMap junk(2, 2, 2);
  junk.coeff(1, 0, 3) = 1;
  TruncatedDeformation bad{a, 1, {junk}};
  bool cocycle =
      dend_coboundary(junk, a, Representation::adjoint(a)).is_zero();
  auto bad_reports = check_deformation(bad);
  CHECK(bad_reports[1].ok == cocycle);
}

TEST_CASE("the infinitesimal is a cocycle") {
  DendriformAlgebra a = a2();
  MultiMap pi1 = cocycle_of(a, 2, 0);
  TruncatedDeformation def{a, 2, {MultiMap(2, 2, 2), pi1}};
  auto inf = infinitesimal(def);
  CHECK_FALSE(inf.trivial);
  CHECK(inf.order == 2);
  CHECK(inf.cochain == pi1);
  CHECK(inf.is_cocycle);
  auto none = infinitesimal(TruncatedDeformation{a, 1, {MultiMap(2, 2, 2)}});
  CHECK(none.trivial);
}

TEST_CASE("rigidity: order-1 deformations of the model algebra transport to trivial") {
  DendriformAlgebra a = a1();
  Representation rep = Representation::adjoint(a);
  CHECK(cohomology_dim(a, rep, 2).dim_h == 0);
  auto z2 = cohomology_dim(a, rep, 2).cocycle_basis;
  for (const MultiMap& pi1 : z2) {
    TruncatedDeformation def{a, 1, {pi1}};
    for (const auto& r : check_deformation(def)) CHECK(r.ok);
    // every 2-cocycle is delta(g); phi = id + t g undoes the deformation
    auto g = extensions_equivalent(a, rep, pi1, MultiMap(2, 1, 1));
    REQUIRE(g.has_value());
    RationalMatrix gm(1, 1);
    gm(0, 0) = g->coeff(1, 0, 0);
    TruncatedDeformation moved = transport(def, FormalIsomorphism{1, {gm}});
    CHECK(moved.term(1).is_zero());
  }
}

TEST_CASE("transport round trips under the inverse series") {
  DendriformAlgebra a = a2();
  MultiMap pi1 = cocycle_of(a, 2, 0);
  TruncatedDeformation def{a, 2, {pi1, MultiMap(2, 2, 2)}};
  SUBCASE("only when valid") {
    auto ext = extend_deformation(TruncatedDeformation{a, 1, {pi1}});
    REQUIRE(ext.pi_next.has_value());
    def.terms[1] = *ext.pi_next;
  }
  for (const auto& r : check_deformation(def)) CHECK(r.ok);
  std::mt19937 rng(31);
  RationalMatrix g1(2, 2), g2(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      g1(i, j) = Rational(static_cast<int>(rng() % 5) - 2);
      g2(i, j) = Rational(static_cast<int>(rng() % 5) - 2);
    }
  FormalIsomorphism phi{2, {g1, g2}};
  TruncatedDeformation moved = transport(def, phi);
  for (const auto& r : check_deformation(moved)) CHECK(r.ok);
  TruncatedDeformation back = transport(moved, inverse_series(phi));
  for (int k = 1; k <= 2; ++k) CHECK(back.term(k) == def.term(k));
}

TEST_CASE("obstructions are cocycles") {
  std::mt19937 rng(808);
  int produced = 0;
  while (produced < 50) {
    DendriformAlgebra a = (rng() % 2 == 0) ? a1() : a2();
    Representation rep = Representation::adjoint(a);
    auto basis = cohomology_dim(a, rep, 2).cocycle_basis;
    MultiMap pi1(2, a.dim(), a.dim());
    for (const auto& b : basis)
      pi1 += Rational(static_cast<int>(rng() % 5) - 2) * b;
    TruncatedDeformation def{a, 1, {pi1}};
    auto ext = extend_deformation(def);
    TruncatedDeformation use = def;
    if (ext.pi_next && rng() % 2 == 0) {
      use.order = 2;
      use.terms.push_back(*ext.pi_next);
    }
    bool valid = true;
    for (const auto& r : check_deformation(use)) valid = valid && r.ok;
    if (!valid) continue;
    MultiMap ob = obstruction(use);
    CHECK(dend_coboundary(ob, a, rep).is_zero());
    ++produced;
  }
}

TEST_CASE("an obstructed deformation is detected") {
  // zero product, pi_1 = the full 2-cochain on one generator: the obstruction
  // class is nonzero, so no order-2 extension exists
  DendriformAlgebra z = DendriformAlgebra::zero(1);
  MultiMap pi1(2, 1, 1);
  pi1.coeff(1, 0, 0) = 1;
  pi1.coeff(2, 0, 0) = 1;
  TruncatedDeformation def{z, 1, {pi1}};
  for (const auto& r : check_deformation(def)) CHECK(r.ok);
  MultiMap ob = obstruction(def);
  CHECK_FALSE(ob.is_zero());
  auto ext = extend_deformation(def);
  CHECK_FALSE(ext.pi_next.has_value());
}

TEST_CASE("an unobstructed deformation extends") {
  DendriformAlgebra a = a2();
  MultiMap pi1 = cocycle_of(a, 2, 0);
  TruncatedDeformation def{a, 1, {pi1}};
  auto ext = extend_deformation(def);
  REQUIRE(ext.pi_next.has_value());
  TruncatedDeformation longer = def;
  longer.order = 2;
  longer.terms.push_back(*ext.pi_next);
  for (const auto& r : check_deformation(longer)) CHECK(r.ok);
  CHECK(ext.cocycle_dim == cohomology_dim(a, Representation::adjoint(a), 2).dim_z);
}

TEST_CASE("derivation checking") {
  DendriformAlgebra a = a3();
  CHECK(check_derivation(a, euler(3)).ok);
  // d/dx does not survive the quotient by x^3
  RationalMatrix ddx = RationalMatrix::Zero(3, 3);
  ddx(0, 1) = 1;
  ddx(1, 2) = 2;
  CHECK_FALSE(check_derivation(a, ddx).ok);
  // x < x = y, D(x) = y on the nilpotent algebra
  DendriformAlgebra b = a2();
  RationalMatrix d = RationalMatrix::Zero(2, 2);
  d(1, 0) = 1;
  CHECK(check_derivation(b, d).ok);
}

TEST_CASE("universal deformation formula") {
  DendriformAlgebra a = a3();
  SUBCASE("commuting Euler pair, first-order term nonzero") {
    TruncatedDeformation def = udf_generate(a, euler(3), euler(3), 4);
    for (const auto& r : check_deformation(def)) CHECK(r.ok);
    CHECK_FALSE(def.terms[0].is_zero());
  }
  SUBCASE("one factor zero gives the constant deformation") {
    TruncatedDeformation def = udf_generate(a, euler(3), RationalMatrix::Zero(3, 3), 4);
    for (const auto& r : check_deformation(def)) CHECK(r.ok);
    for (const auto& t : def.terms) CHECK(t.is_zero());
  }
  SUBCASE("nilpotent derivation on the two-dimensional algebra") {
    DendriformAlgebra b = a2();
    RationalMatrix d = RationalMatrix::Zero(2, 2);
    d(1, 0) = 1;
    TruncatedDeformation def = udf_generate(b, d, d, 4);
    for (const auto& r : check_deformation(def)) CHECK(r.ok);
  }
  SUBCASE("invalid inputs throw") {
    RationalMatrix ddx = RationalMatrix::Zero(3, 3);
    ddx(0, 1) = 1;
    CHECK_THROWS_AS(udf_generate(a, ddx, ddx, 2), std::invalid_argument);
    RationalMatrix sq = RationalMatrix::Zero(3, 3);
    sq(2, 1) = 1;  // x -> x^2: commutes with Euler? no: [E, x^2 d/dx] != 0
    CHECK_THROWS_AS(udf_generate(a, euler(3), sq, 2), std::invalid_argument);
  }
}
