#pragma once

#include "dendro/combimaps.hpp"
#include "dendro/rational.hpp"

#include <span>
#include <vector>

namespace dendro {

/// An element of O(n) = Hom(K[C_n] (x) A^(x)n, M): one coefficient tensor of
/// shape dim_out x dim_in^n per label. Storage is label-major, then row-major
/// output x input, which fixes the coordinate order used by golden files and
/// cohomology matrices.
///
/// Immutable by convention after construction; all composition operations
/// return fresh values.
class MultiMap {
 public:
  MultiMap(int arity, int dim_in, int dim_out);
  static MultiMap identity(int dim);  // id in O(1): id([1]; a) = a

  int arity() const { return arity_; }
  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  int tuples() const { return tuples_; }  // dim_in^arity

  /// Coefficient of e_out in f([label]; e_{in[0]}, ..., e_{in[arity-1]}).
  /// Labels are 1-based, basis indices 0-based.
  Rational& at(int label, int out, std::span<const int> in);
  const Rational& at(int label, int out, std::span<const int> in) const;

  Rational& coeff(int label, int out, int tuple);
  const Rational& coeff(int label, int out, int tuple) const;

  /// f([label]; e_{in tuple}) as a vector in the target space.
  RationalVector eval_basis(int label, int tuple) const;

  /// Full multilinear evaluation, linear in the label argument.
  RationalVector eval(const LabelSum& xi, const std::vector<RationalVector>& args) const;

  bool is_zero() const;

  /// Flat coordinates (label-major, then out, then input tuple); the
  /// canonical cochain coordinate system.
  RationalVector to_vector() const;
  static MultiMap from_vector(const RationalVector& v, int arity, int dim_in, int dim_out);

  MultiMap& operator+=(const MultiMap& other);
  MultiMap& operator-=(const MultiMap& other);
  MultiMap& operator*=(const Rational& scalar);
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
  friend MultiMap operator*(const Rational& s, MultiMap a) { return a *= s; }
  bool operator==(const MultiMap& other) const;

  int tuple_index(std::span<const int> in) const;

 private:
  int arity_, dim_in_, dim_out_, tuples_;
  std::vector<Rational> data_;  // size arity * dim_out * tuples_
};

/// f o_i g with the labels routed through R_0 / R_i.
MultiMap partial_compose(const MultiMap& f, const MultiMap& g, int i);

/// f o g = sum_i (-1)^{(i-1)(n-1)} f o_i g.
MultiMap circle(const MultiMap& f, const MultiMap& g);

/// [f, g] = f o g - (-1)^{(m-1)(n-1)} g o f.
MultiMap bracket(const MultiMap& f, const MultiMap& g);

/// Cup product f . g = (pi o_2 g) o_1 f. Unsigned convention; see the
/// Leibniz tests for the empirical justification.
MultiMap cup(const MultiMap& f, const MultiMap& g, const MultiMap& pi);

/// d_pi f = pi o f - (-1)^{k-1} f o pi for f of arity k.
MultiMap d_pi(const MultiMap& f, const MultiMap& pi);

struct MultiplicationCheck {
  bool ok;
  MultiMap residual;  // pi o_1 pi - pi o_2 pi
};
MultiplicationCheck is_multiplication(const MultiMap& pi);

/// Iterates 0-based input tuples in row-major order. Returns false once
/// exhausted.
bool next_tuple(std::vector<int>& tuple, int base);

}  // namespace dendro
