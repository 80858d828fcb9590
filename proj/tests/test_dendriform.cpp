#include "dendro/dendriform.hpp"

#include "doctest.h"

#include <random>

using namespace dendro;

namespace {

DendriformAlgebra a1() {
  return DendriformAlgebra::make(1, {Rational(1)}, {Rational(0)});
}

DendriformAlgebra a2() {
  std::vector<Rational> prec(8, Rational(0)), succ(8, Rational(0));
  prec[(0 * 2 + 0) * 2 + 1] = 1;  // x < x = y
  return DendriformAlgebra::make(2, prec, succ);
}

AssociativeAlgebra p1_assoc() {
  // span{1, x}, unital, x^2 = 0
  std::vector<Rational> m(8, Rational(0));
  m[(0 * 2 + 0) * 2 + 0] = 1;
  m[(0 * 2 + 1) * 2 + 1] = 1;
  m[(1 * 2 + 0) * 2 + 1] = 1;
  return AssociativeAlgebra(2, m);
}

RationalMatrix p1_op() {
  RationalMatrix r = RationalMatrix::Zero(2, 2);
  r(1, 0) = 1;  // R(1) = x, R(x) = 0
  return r;
}

}  // namespace

TEST_CASE("axioms hold on the corpus and fail on the counterexample") {
  CHECK(a1().check().ok);
  CHECK(a2().check().ok);
  DendriformAlgebra bad(1, {Rational(1)}, {Rational(1)});
  auto report = bad.check();
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.failures.empty());
  CHECK_FALSE(bad.valid());
  CHECK_THROWS_AS(DendriformAlgebra::make(1, {Rational(1)}, {Rational(1)}),
                  std::invalid_argument);
}

TEST_CASE("the star product is associative") {
  for (const DendriformAlgebra& a : {a1(), a2()}) {
    AssociativeAlgebra assoc = associated_associative(a);
    CHECK(assoc.check().ok);
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          CHECK(assoc.mult(i, j, k) == a.prec(i, j, k) + a.succ(i, j, k));
  }
}

TEST_CASE("adjoint and trivial representations verify") {
  for (const DendriformAlgebra& a : {a1(), a2()}) {
    CHECK(check_representation(a, Representation::adjoint(a)).ok);
    CHECK(check_representation(a, Representation::trivial(a.dim(), 2)).ok);
  }
  // perturbing one action coefficient breaks at least one identity
  DendriformAlgebra a = a2();
  Representation rep = Representation::adjoint(a);
  rep.theta1(1, 0, 0, 0) += 1;
  CHECK_FALSE(check_representation(a, rep).ok);
}

TEST_CASE("representations induce bimodules over the star product") {
  DendriformAlgebra a = a2();
  Representation rep = Representation::adjoint(a);
  AssocBimodule bimod = rep_to_assoc_rep(a, rep);
  CHECK(check_bimodule(associated_associative(a), bimod).ok);
}

TEST_CASE("semidirect product is dendriform and restricts correctly") {
  for (const DendriformAlgebra& a : {a1(), a2()}) {
    Representation rep = Representation::adjoint(a);
    DendriformAlgebra e = semidirect(a, rep);
    CHECK(e.dim() == 2 * a.dim());
    CHECK(e.check().ok);
    const int d = a.dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          CHECK(e.prec(i, j, k) == a.prec(i, j, k));
          // M < M = M > M = 0 in the semidirect product
          CHECK(e.prec(d + i, d + j, k) == 0);
          CHECK(e.prec(d + i, d + j, d + k) == 0);
          CHECK(e.succ(d + i, d + j, k) == 0);
          CHECK(e.succ(d + i, d + j, d + k) == 0);
        }
  }
}

TEST_CASE("Rota-Baxter verification") {
  CHECK(check_rota_baxter(p1_assoc(), p1_op()).ok);
  CHECK_FALSE(check_rota_baxter(p1_assoc(), RationalMatrix::Identity(2, 2)).ok);
}

TEST_CASE("the dendriform structure of a Rota-Baxter operator") {
  DendriformAlgebra d = aguiar(p1_assoc(), p1_op());
  CHECK(d.check().ok);
  // 1 < 1 = 1 * R(1) = x and 1 > 1 = R(1) * 1 = x
  CHECK(d.prec(0, 0, 1) == 1);
  CHECK(d.succ(0, 0, 1) == 1);
  CHECK(d.prec(0, 0, 0) == 0);
  // star product recovers a * R(b) + R(a) * b
  AssociativeAlgebra star = associated_associative(d);
  CHECK(star.check().ok);
  CHECK_THROWS_AS(aguiar(p1_assoc(), RationalMatrix::Identity(2, 2)), std::invalid_argument);
}

TEST_CASE("random dendriform identities via the compact form") {
  // check_dendriform agrees with a direct evaluation of the three axioms
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 2);
    std::vector<Rational> prec(d * d * d), succ(d * d * d);
    for (auto& v : prec) v = Rational(static_cast<int>(rng() % 5) - 2);
    for (auto& v : succ) v = Rational(static_cast<int>(rng() % 5) - 2);
    DendriformAlgebra a(d, prec, succ);
    bool direct = true;
    for (int i = 0; i < d && direct; ++i)
      for (int j = 0; j < d && direct; ++j)
        for (int k = 0; k < d && direct; ++k) {
          RationalVector ei = RationalVector::Zero(d), ej = RationalVector::Zero(d),
                         ek = RationalVector::Zero(d);
          ei(i) = 1;
          ej(j) = 1;
          ek(k) = 1;
          auto star = [&](const RationalVector& x, const RationalVector& y) {
            return RationalVector(a.prec_vec(x, y) + a.succ_vec(x, y));
          };
          direct = direct &&
                   a.prec_vec(a.prec_vec(ei, ej), ek) == a.prec_vec(ei, star(ej, ek)) &&
                   a.prec_vec(a.succ_vec(ei, ej), ek) == a.succ_vec(ei, a.prec_vec(ej, ek)) &&
                   a.succ_vec(ei, a.succ_vec(ej, ek)) == a.succ_vec(star(ei, ej), ek);
        }
    CHECK(a.check().ok == direct);
  }
}
