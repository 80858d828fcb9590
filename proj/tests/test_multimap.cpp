#include "dendro/dendriform.hpp"
#include "dendro/multimap.hpp"

#include "doctest.h"

#include <random>

using namespace dendro;

namespace {

MultiMap random_map(std::mt19937& rng, int arity, int dim) {
  MultiMap f(arity, dim, dim);
  for (int label = 1; label <= arity; ++label)
    for (int out = 0; out < dim; ++out)
      for (int t = 0; t < f.tuples(); ++t)
        f.coeff(label, out, t) = Rational(static_cast<int>(rng() % 7) - 3);
  return f;
}

DendriformAlgebra a1() {
  return DendriformAlgebra::make(1, {Rational(1)}, {Rational(0)});
}

}  // namespace

TEST_CASE("identity element of O(1)") {
  MultiMap id = MultiMap::identity(3);
  for (int i = 0; i < 3; ++i) {
    RationalVector a = RationalVector::Zero(3);
    a(i) = 1;
    CHECK(id.eval(label_singleton(1, 1), {a}) == a);
  }
  std::mt19937 rng(7);
  for (int arity = 1; arity <= 3; ++arity) {
    MultiMap f = random_map(rng, arity, 2);
    MultiMap id2 = MultiMap::identity(2);
    for (int i = 1; i <= arity; ++i) CHECK(partial_compose(f, id2, i) == f);
    CHECK(partial_compose(id2, f, 1) == f);
  }
}

TEST_CASE("evaluation is linear in the label argument") {
  std::mt19937 rng(11);
  MultiMap f = random_map(rng, 2, 2);
  RationalVector a(2), b(2);
  a << Rational(1), Rational(2);
  b << Rational(-1), Rational(3);
  LabelSum sum{2, {{1, Rational(1)}, {2, Rational(1)}}};
  CHECK(f.eval(sum, {a, b}) ==
        f.eval(label_singleton(2, 1), {a, b}) + f.eval(label_singleton(2, 2), {a, b}));
}

TEST_CASE("composition on the one-dimensional model algebra") {
  DendriformAlgebra a = a1();
  MultiMap pi = a.multiplication();
  // hand values: (pi o_1 pi)([1]; e,e,e) = e, the other labels vanish
  MultiMap c1 = partial_compose(pi, pi, 1);
  MultiMap c2 = partial_compose(pi, pi, 2);
  CHECK(c1.coeff(1, 0, 0) == 1);
  CHECK(c1.coeff(2, 0, 0) == 0);
  CHECK(c1.coeff(3, 0, 0) == 0);
  CHECK(c1 == c2);
  CHECK(circle(pi, pi).is_zero());
  CHECK(is_multiplication(pi).ok);
}

TEST_CASE("a non-dendriform product is caught") {
  DendriformAlgebra bad(1, {Rational(1)}, {Rational(1)});
  auto res = is_multiplication(bad.multiplication());
  CHECK_FALSE(res.ok);
  CHECK_FALSE(res.residual.is_zero());
}

TEST_CASE("operad axioms on random triples") {
  std::mt19937 rng(2024);
  int checked = 0;
  while (checked < 200) {
    const int dim = 1 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    const int p = 1 + static_cast<int>(rng() % 3);
    MultiMap f = random_map(rng, m, dim);
    MultiMap g = random_map(rng, n, dim);
    MultiMap h = random_map(rng, p, dim);
    // sequential associativity
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= n; ++j)
        CHECK(partial_compose(partial_compose(f, g, i), h, i + j - 1) ==
              partial_compose(f, partial_compose(g, h, j), i));
    // parallel associativity
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        CHECK(partial_compose(partial_compose(f, g, i), h, j + n - 1) ==
              partial_compose(partial_compose(f, h, j), g, i));
    ++checked;
  }
}

TEST_CASE("pre-Lie identity and bracket symmetries") {
  std::mt19937 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 1 + static_cast<int>(rng() % 2);
    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    const int p = 1 + static_cast<int>(rng() % 3);
    MultiMap f = random_map(rng, m, dim);
    MultiMap g = random_map(rng, n, dim);
    MultiMap h = random_map(rng, p, dim);
    const int sign = ((n - 1) * (p - 1)) % 2 == 0 ? 1 : -1;
    MultiMap lhs = circle(circle(f, g), h) - circle(f, circle(g, h));
    MultiMap rhs = circle(circle(f, h), g) - circle(f, circle(h, g));
    CHECK(lhs == Rational(sign) * rhs);
    // graded antisymmetry of the bracket
    const int bs = ((m - 1) * (n - 1)) % 2 == 0 ? 1 : -1;
    CHECK(bracket(f, g) == Rational(-bs) * bracket(g, f));
  }
}

TEST_CASE("differential of a multiplication") {
  DendriformAlgebra a = a1();
  MultiMap pi = a.multiplication();
  CHECK(d_pi(pi, pi).is_zero());
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    for (int arity = 1; arity <= 3; ++arity) {
      MultiMap f = random_map(rng, arity, 1);
      CHECK(d_pi(d_pi(f, pi), pi).is_zero());
    }
  }
}

TEST_CASE("cup product Leibniz rule") {
  // empirical sign pattern: d(f.g) = (-1)^n (df).g + f.(dg), n = arity of g
  std::vector<Rational> prec(8, Rational(0)), succ(8, Rational(0));
  prec[(0 * 2 + 0) * 2 + 1] = 1;
  DendriformAlgebra a = DendriformAlgebra::make(2, prec, succ);
  MultiMap pi = a.multiplication();
  std::mt19937 rng(314);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 3);
    const int n = 1 + static_cast<int>(rng() % 3);
    MultiMap f = random_map(rng, m, 2);
    MultiMap g = random_map(rng, n, 2);
    MultiMap lhs = d_pi(cup(f, g, pi), pi);
    MultiMap rhs = (n % 2 == 0 ? Rational(1) : Rational(-1)) * cup(d_pi(f, pi), g, pi) +
                   cup(f, d_pi(g, pi), pi);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("vector round trip") {
  std::mt19937 rng(8);
  MultiMap f = random_map(rng, 2, 2);
  CHECK(MultiMap::from_vector(f.to_vector(), 2, 2, 2) == f);
}
