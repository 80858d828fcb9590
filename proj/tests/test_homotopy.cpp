#include "dendro/cohomology.hpp"
#include "dendro/homotopy.hpp"

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

GradedAInfSystem p1_system() {
  GradedAInfSystem s = GradedAInfSystem::zero(GradedSpace{{2}}, 3);
  auto& mu2 = s.op(2);
  mu2.at(0, 0 * 2 + 0) = 1;
  mu2.at(1, 0 * 2 + 1) = 1;
  mu2.at(1, 1 * 2 + 0) = 1;
  return s;
}

TwoTermDend strict_from(const DendriformAlgebra& a) {
  TwoTermDend t = TwoTermDend::zero(a.dim(), a.dim());
  t.d = RationalMatrix::Identity(a.dim(), a.dim());
  for (int r = 1; r <= 2; ++r)
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        for (int o = 0; o < a.dim(); ++o) {
          Rational v = r == 1 ? a.prec(i, j, o) : a.succ(i, j, o);
          t.m00(r, i, j, o) = v;
          t.m01(r, i, j, o) = v;
          t.m10(r, i, j, o) = v;
        }
  return t;
}

}  // namespace

TEST_CASE("degree-0 systems encode the dendriform axioms") {
  CHECK(check_dend_infinity(dend_from_algebra(a1(), 3)).ok);
  CHECK(check_dend_infinity(dend_from_algebra(a2(), 3)).ok);
  DendriformAlgebra bad(1, {Rational(1)}, {Rational(1)});
  auto report = check_dend_infinity(dend_from_algebra(bad, 3));
  CHECK_FALSE(report.ok);
  CHECK(report.failures.front().basis.front() == 3);  // fails first at n = 3
}

TEST_CASE("shift round trips and lands in the shifted convention") {
  for (const DendriformAlgebra& a : {a1(), a2()}) {
    GradedDendSystem s = dend_from_algebra(a, 3);
    GradedDendSystem sh = shift(s);
    CHECK(check_dend_inf1(sh).ok);
    GradedDendSystem back = unshift(sh);
    CHECK(back.space == s.space);
    for (int k = 1; k <= 3; ++k)
      for (int r = 1; r <= k; ++r) CHECK(back.op(k, r) == s.op(k, r));
  }
}

TEST_CASE("label sums produce Stasheff systems") {
  std::vector<GradedDendSystem> corpus;
  corpus.push_back(dend_from_algebra(a1(), 3));
  corpus.push_back(dend_from_algebra(a2(), 3));
  corpus.push_back(embed_a_infinity(p1_system()));
  corpus.push_back(two_term_to_graded(strict_from(a2())));
  corpus.push_back(direct_sum(dend_from_algebra(a1(), 3), dend_from_algebra(a2(), 3)));
  for (const auto& s : corpus) {
    REQUIRE(check_dend_infinity(s).ok);
    CHECK(check_a_infinity(dend_to_a_infinity(s)).ok);
  }
}

TEST_CASE("label-[1] embeddings of Stasheff systems") {
  GradedAInfSystem s = p1_system();
  REQUIRE(check_a_infinity(s).ok);
  CHECK(check_dend_infinity(embed_a_infinity(s)).ok);
}

TEST_CASE("Rota-Baxter operators on Stasheff systems") {
  GradedAInfSystem s = p1_system();
  RationalMatrix r = RationalMatrix::Zero(2, 2);
  r(1, 0) = 1;
  CHECK(check_rb_a_infinity(s, r).ok);
  CHECK_FALSE(check_rb_a_infinity(s, RationalMatrix::Identity(2, 2)).ok);
  GradedDendSystem ind = induced_dend_infinity(s, r);
  CHECK(check_dend_infinity(ind).ok);
  // binary part agrees with the associative-level construction
  std::vector<Rational> m(8, Rational(0));
  m[(0 * 2 + 0) * 2 + 0] = 1;
  m[(0 * 2 + 1) * 2 + 1] = 1;
  m[(1 * 2 + 0) * 2 + 1] = 1;
  DendriformAlgebra ag = aguiar(AssociativeAlgebra(2, m), r);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int o = 0; o < 2; ++o) {
        CHECK(ind.op(2, 1).at(o, i * 2 + j) == ag.prec(i, j, o));
        CHECK(ind.op(2, 2).at(o, i * 2 + j) == ag.succ(i, j, o));
      }
}

TEST_CASE("module morphisms of Rota-Baxter type") {
  // N -d-> A + M with A = M = N the unital rank-2 algebra, all three
  // operators the same square-zero R; degree 0 holds A + M, degree 1 holds N
  GradedAInfSystem mm = GradedAInfSystem::zero(GradedSpace{{4, 2}}, 3);
  auto mul = [](int i, int j, int o) {
    std::vector<Rational> m(8, Rational(0));
    m[(0 * 2 + 0) * 2 + 0] = 1;
    m[(0 * 2 + 1) * 2 + 1] = 1;
    m[(1 * 2 + 0) * 2 + 1] = 1;
    return m[(i * 2 + j) * 2 + o];
  };
  mm.op(1).at(2, 4) = 1;
  mm.op(1).at(3, 5) = 1;
  auto& m2 = mm.op(2);
  const int T = 6;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int o = 0; o < 2; ++o) {
        Rational c = mul(i, j, o);
        if (c == 0) continue;
        m2.at(o, i * T + j) = c;
        m2.at(2 + o, i * T + (2 + j)) = c;
        m2.at(2 + o, (2 + i) * T + j) = c;
        m2.at(4 + o, i * T + (4 + j)) = c;
        m2.at(4 + o, (4 + i) * T + j) = c;
      }
  REQUIRE(check_a_infinity(mm).ok);
  RationalMatrix rbar = RationalMatrix::Zero(6, 6);
  rbar(1, 0) = 1;
  rbar(3, 2) = 1;
  rbar(5, 4) = 1;
  CHECK(check_rb_a_infinity(mm, rbar).ok);
  GradedDendSystem ind = induced_dend_infinity(mm, rbar);
  CHECK(check_dend_infinity(ind).ok);
  CHECK(check_a_infinity(dend_to_a_infinity(ind)).ok);
}

TEST_CASE("two-term structures against the generic checker") {
  TwoTermDend strict = strict_from(a2());
  CHECK(check_two_term(strict).ok);
  CHECK(check_dend_infinity(two_term_to_graded(strict)).ok);
  // perturbations break both checkers consistently
  std::mt19937 rng(417);
  for (int trial = 0; trial < 10; ++trial) {
    TwoTermDend t = strict;
    t.m3(1 + static_cast<int>(rng() % 3), rng() % 2, rng() % 2, rng() % 2, rng() % 2) +=
        Rational(1 + static_cast<int>(rng() % 3));
    t.m01(1 + static_cast<int>(rng() % 2), rng() % 2, rng() % 2, rng() % 2) +=
        Rational(static_cast<int>(rng() % 5) - 2);
    CHECK(check_two_term(t).ok == check_dend_infinity(two_term_to_graded(t)).ok);
  }
}

TEST_CASE("skeletal structures and their classifying cocycles") {
  DendriformAlgebra a = a1();
  Representation adj = Representation::adjoint(a);
  auto coh = cohomology_dim(a, adj, 3);
  REQUIRE_FALSE(coh.cocycle_basis.empty());
  MultiMap sigma = coh.cocycle_basis.front();
  TwoTermDend sk = triple_to_skeletal(a, adj, sigma);
  CHECK(check_two_term(sk).ok);
  CHECK(check_dend_infinity(two_term_to_graded(sk)).ok);
  SkeletalTriple tri = skeletal_to_triple(sk);
  CHECK(tri.sigma == sigma);
  CHECK(tri.algebra.prec_tensor() == a.prec_tensor());
  // a non-cocycle is rejected
  MultiMap junk(3, 1, 1);
  junk.coeff(2, 0, 0) = 1;
  if (!dend_coboundary(junk, a, adj).is_zero())
    CHECK_THROWS_AS(triple_to_skeletal(a, adj, junk), std::invalid_argument);
}

TEST_CASE("longer skeletal complexes from higher cocycles") {
  DendriformAlgebra a = a1();
  Representation adj = Representation::adjoint(a);
  auto coh = cohomology_dim(a, adj, 4);
  REQUIRE_FALSE(coh.cocycle_basis.empty());
  GradedDendSystem g = n_term_skeletal(a, adj, coh.cocycle_basis.front(), 3);
  CHECK(g.space.dims == std::vector<int>{1, 0, 1});
  CHECK(check_dend_infinity(g).ok);
}

TEST_CASE("strict structures and crossed modules") {
  TwoTermDend strict = strict_from(a2());
  CrossedModule x = strict_to_crossed(strict);
  CHECK(check_crossed_module(x).ok);
  TwoTermDend back = crossed_to_strict(x);
  CHECK(back.d == strict.d);
  CHECK(back.mu2_00 == strict.mu2_00);
  CHECK(back.mu2_01 == strict.mu2_01);
  CHECK(back.mu2_10 == strict.mu2_10);
  CHECK(back.mu3 == strict.mu3);
  // breaking equivariance is caught
  CrossedModule broken = x;
  broken.dt(0, 0) += 1;
  CHECK_FALSE(check_crossed_module(broken).ok);
}

TEST_CASE("semidirect two-term structures") {
  DendriformAlgebra a = a1();
  Representation adj = Representation::adjoint(a);
  for (const Rational& c : {Rational(0), Rational(1), Rational(-2)}) {
    RationalMatrix f(1, 1);
    f(0, 0) = c;
    TwoTermDend t = semidirect_two_term(a, adj, adj, f);
    CHECK(check_two_term(t).ok);
    CHECK(check_dend_infinity(two_term_to_graded(t)).ok);
  }
}

TEST_CASE("homogeneity is enforced") {
  GradedDendSystem s = dend_from_algebra(a2(), 2);
  GradedOp& op = s.op(2, 1);
  GradedOp copy = op;
  CHECK(op_homogeneous(copy, s.space));
}
