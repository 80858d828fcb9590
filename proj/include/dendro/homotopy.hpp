#pragma once

#include "dendro/cohomology.hpp"
#include "dendro/dendriform.hpp"
#include "dendro/multimap.hpp"

#include <vector>

namespace dendro {

/// Graded space concentrated in degrees 0..D; basis elements get global
/// indices, degree blocks in order.
struct GradedSpace {
  std::vector<int> dims;

  int total() const;
  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  int offset(int deg) const;
  int degree_of(int idx) const;
  bool operator==(const GradedSpace&) const = default;
};

/// Dense k-ary map on a graded space of total dimension dim; entry
/// (out, input tuple) at [out * dim^k + tuple]. Homogeneous of the stated
/// intrinsic degree (outputs landing outside 0..D are dropped as zeros).
struct GradedOp {
  int arity;
  int degree;
  int dim;
  std::vector<Rational> data;

  GradedOp(int arity, int degree, int dim);
  Rational& at(int out, int tuple);
  const Rational& at(int out, int tuple) const;
  int tuples() const;
  int tuple_index(const std::vector<int>& in) const;
  bool is_zero() const;
  bool operator==(const GradedOp&) const = default;
};

/// Output of op on a basis tuple, as a dense vector.
RationalVector op_column(const GradedOp& op, int tuple);
/// Multilinear evaluation on dense vector arguments.
RationalVector op_eval(const GradedOp& op, const std::vector<RationalVector>& args);

/// Checks entries vanish unless deg(out) = sum deg(in) + op.degree.
bool op_homogeneous(const GradedOp& op, const GradedSpace& space);

struct GradedDendSystem {
  GradedSpace space;
  int arity_bound;
  std::vector<std::vector<GradedOp>> ops;  // ops[k-1][r-1], r in 1..k

  static GradedDendSystem zero(GradedSpace space, int arity_bound, int op_degree_shift = -2);
  GradedOp& op(int k, int r) { return ops[k - 1][r - 1]; }
  const GradedOp& op(int k, int r) const { return ops[k - 1][r - 1]; }
};

struct GradedAInfSystem {
  GradedSpace space;
  int arity_bound;
  std::vector<GradedOp> mu;  // mu[k-1]

  static GradedAInfSystem zero(GradedSpace space, int arity_bound, int op_degree_shift = -2);
  GradedOp& op(int k) { return mu[k - 1]; }
  const GradedOp& op(int k) const { return mu[k - 1]; }
};

/// Identities for n <= min(2K-1, cap); residual per (n, r, basis tuple).
CheckReport check_dend_infinity(const GradedDendSystem& s, int n_cap = 5);
/// Shifted-sign variant: ops of degree -1, Koszul sign only.
CheckReport check_dend_inf1(const GradedDendSystem& s, int n_cap = 5);
CheckReport check_a_infinity(const GradedAInfSystem& s, int n_cap = 5);

/// V = sA: degree-(-1) system on the suspension.
GradedDendSystem shift(const GradedDendSystem& s);
GradedDendSystem unshift(const GradedDendSystem& s);

/// Def 5.1 Rota-Baxter identity for a degree-0 operator, per arity.
CheckReport check_rb_a_infinity(const GradedAInfSystem& s, const RationalMatrix& r);
/// mu_{k,[r]}(a_1..a_k) = mu_k(R a_1, .., a_r, .., R a_k).
GradedDendSystem induced_dend_infinity(const GradedAInfSystem& s, const RationalMatrix& r);
/// Label sum mu_k = mu_{k,[1]} + ... + mu_{k,[k]}.
GradedAInfSystem dend_to_a_infinity(const GradedDendSystem& s);

/// Dendriform algebra as a Dend-infinity structure concentrated in degree 0.
GradedDendSystem dend_from_algebra(const DendriformAlgebra& algebra, int arity_bound);
/// A-infinity system embedded with every label mass on [1].
GradedDendSystem embed_a_infinity(const GradedAInfSystem& s);

GradedDendSystem direct_sum(const GradedDendSystem& s1, const GradedDendSystem& s2);

/// 2-term structure on A_1 -d-> A_0; mu_2 components split by input degrees,
/// mu_3 : K[C_3] (x) A_0^3 -> A_1. mu_2 on A_1 (x) A_1 is zero for degree
/// reasons (condition (i) holds structurally).
struct TwoTermDend {
  int dim0 = 0, dim1 = 0;
  RationalMatrix d;                // dim0 x dim1
  std::vector<Rational> mu2_00;    // [r][a][b][out], out in A_0
  std::vector<Rational> mu2_01;    // [r][a][m][out], out in A_1
  std::vector<Rational> mu2_10;    // [r][m][a][out], out in A_1
  std::vector<Rational> mu3;       // [s][a][b][c][out], out in A_1

  static TwoTermDend zero(int dim0, int dim1);
  Rational& m00(int r, int a, int b, int o);
  Rational& m01(int r, int a, int m, int o);
  Rational& m10(int r, int m, int a, int o);
  Rational& m3(int s, int a, int b, int c, int o);
  const Rational& m00(int r, int a, int b, int o) const;
  const Rational& m01(int r, int a, int m, int o) const;
  const Rational& m10(int r, int m, int a, int o) const;
  const Rational& m3(int s, int a, int b, int c, int o) const;
};

/// Def 6.1 conditions (i)-(vii), reported per family.
CheckReport check_two_term(const TwoTermDend& t);

GradedDendSystem two_term_to_graded(const TwoTermDend& t);

struct SkeletalTriple {
  DendriformAlgebra algebra;
  Representation rep;
  MultiMap sigma;  // 3-cocycle, dim_in = dim A, dim_out = dim M
};

/// d = 0 required; the extracted sigma is verified to be a 3-cocycle.
SkeletalTriple skeletal_to_triple(const TwoTermDend& t);
TwoTermDend triple_to_skeletal(const DendriformAlgebra& algebra, const Representation& rep,
                               const MultiMap& sigma);

/// Complex A_{n-1} -> 0 -> ... -> A_0 with mu_{n+1} = sigma, an (n+1)-cocycle
/// (2 <= n <= 3; n = 2 is the skeletal 2-term case).
GradedDendSystem n_term_skeletal(const DendriformAlgebra& algebra, const Representation& rep,
                                 const MultiMap& sigma, int n);

struct CrossedModule {
  DendriformAlgebra a;  // the "module" algebra
  DendriformAlgebra b;
  RationalMatrix dt;    // dim B x dim A
  Representation rep;   // B acting on A: dim_a = dim B, dim_m = dim A
};

CheckReport check_crossed_module(const CrossedModule& x);

/// mu_3 = 0 required; pi_A([r]; m, n) := mu_2([r]; dm, n).
CrossedModule strict_to_crossed(const TwoTermDend& t);
TwoTermDend crossed_to_strict(const CrossedModule& x);

/// Semi-direct product of A and a morphism f : N -> M of representations:
/// N -f-> A + M with mu_3 = 0.
TwoTermDend semidirect_two_term(const DendriformAlgebra& algebra, const Representation& rep_m,
                                const Representation& rep_n, const RationalMatrix& f);

}  // namespace dendro
