#pragma once

#include "dendro/multimap.hpp"
#include "dendro/rational.hpp"

#include <string>
#include <vector>

namespace dendro {

/// One failing identity instance: which identity, on which basis tuple, and
/// the exact residual vector (lhs - rhs).
struct IdentityFailure {
  std::string identity;
  std::vector<int> basis;
  RationalVector residual;
};

struct CheckReport {
  bool ok = true;
  std::vector<IdentityFailure> failures;
  void add(std::string identity, std::vector<int> basis, RationalVector residual);
};

/// Structure constants of a finite-dimensional dendriform algebra.
/// prec[i][j] / succ[i][j] hold the coordinates of e_i < e_j and e_i > e_j;
/// tensor convention: entry (i, j, k) is the coefficient of e_k.
/// Construction does not validate; call check() or use make().
class DendriformAlgebra {
 public:
  DendriformAlgebra(int dim, std::vector<Rational> prec, std::vector<Rational> succ);
  static DendriformAlgebra zero(int dim);
  /// Validating factory; throws std::invalid_argument when the three
  /// dendriform identities fail.
  static DendriformAlgebra make(int dim, std::vector<Rational> prec, std::vector<Rational> succ);

  int dim() const { return dim_; }
  Rational prec(int i, int j, int k) const { return prec_[(i * dim_ + j) * dim_ + k]; }
  Rational succ(int i, int j, int k) const { return succ_[(i * dim_ + j) * dim_ + k]; }
  Rational& prec(int i, int j, int k) { return prec_[(i * dim_ + j) * dim_ + k]; }
  Rational& succ(int i, int j, int k) { return succ_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Rational>& prec_tensor() const { return prec_; }
  const std::vector<Rational>& succ_tensor() const { return succ_; }

  RationalVector prec_vec(const RationalVector& a, const RationalVector& b) const;
  RationalVector succ_vec(const RationalVector& a, const RationalVector& b) const;

  /// pi_A in O(2): label [1] is <, label [2] is >.
  MultiMap multiplication() const;

  CheckReport check() const;
  bool valid() const;  // cached after the first call

 private:
  int dim_;
  std::vector<Rational> prec_, succ_;
  mutable int valid_cache_ = -1;  // -1 unknown, 0 invalid, 1 valid
};

class AssociativeAlgebra {
 public:
  AssociativeAlgebra(int dim, std::vector<Rational> mult);
  int dim() const { return dim_; }
  Rational mult(int i, int j, int k) const { return mult_[(i * dim_ + j) * dim_ + k]; }
  Rational& mult(int i, int j, int k) { return mult_[(i * dim_ + j) * dim_ + k]; }
  const std::vector<Rational>& mult_tensor() const { return mult_; }
  RationalVector mult_vec(const RationalVector& a, const RationalVector& b) const;
  CheckReport check() const;

 private:
  int dim_;
  std::vector<Rational> mult_;
};

/// The four action tensors of a representation: theta1 with < and > parts
/// (A (x) M -> M, shape dim_a x dim_m x dim_m, coefficient index last) and
/// theta2 likewise (M (x) A -> M, shape dim_m x dim_a x dim_m).
class Representation {
 public:
  Representation(int dim_a, int dim_m, std::vector<Rational> t1_prec,
                 std::vector<Rational> t1_succ, std::vector<Rational> t2_prec,
                 std::vector<Rational> t2_succ);
  static Representation adjoint(const DendriformAlgebra& algebra);
  static Representation trivial(int dim_a, int dim_m);

  int dim_a() const { return dim_a_; }
  int dim_m() const { return dim_m_; }
  // label r in {1 = <, 2 = >}
  Rational theta1(int r, int a, int m, int out) const;
  Rational theta2(int r, int m, int a, int out) const;
  Rational& theta1(int r, int a, int m, int out);
  Rational& theta2(int r, int m, int a, int out);
  const std::vector<Rational>& tensor(int which) const;  // 0..3: t1<, t1>, t2<, t2>

  RationalVector theta1_vec(int r, const RationalVector& a, const RationalVector& m) const;
  RationalVector theta2_vec(int r, const RationalVector& m, const RationalVector& a) const;

 private:
  int dim_a_, dim_m_;
  std::vector<Rational> t1_prec_, t1_succ_, t2_prec_, t2_succ_;
};

CheckReport check_dendriform(int dim, const std::vector<Rational>& prec,
                             const std::vector<Rational>& succ);

/// The 9 raw identities, cross-checked term-by-term against the compact
/// three-identity form routed through the R maps.
CheckReport check_representation(const DendriformAlgebra& algebra, const Representation& rep);

AssociativeAlgebra associated_associative(const DendriformAlgebra& algebra);

/// Bimodule over the associated associative algebra: left action
/// theta1< + theta1>, right action theta2< + theta2>.
struct AssocBimodule {
  int dim_a, dim_m;
  std::vector<Rational> left;   // dim_a x dim_m -> dim_m
  std::vector<Rational> right;  // dim_m x dim_a -> dim_m
  RationalVector left_vec(const RationalVector& a, const RationalVector& m) const;
  RationalVector right_vec(const RationalVector& m, const RationalVector& a) const;
};
AssocBimodule rep_to_assoc_rep(const DendriformAlgebra& algebra, const Representation& rep);
CheckReport check_bimodule(const AssociativeAlgebra& algebra, const AssocBimodule& bimod);

/// Semi-direct product on A + M; basis order: A basis first, then M basis.
DendriformAlgebra semidirect(const DendriformAlgebra& algebra, const Representation& rep);

CheckReport check_rota_baxter(const AssociativeAlgebra& algebra, const RationalMatrix& op);

/// Aguiar's dendriform structure a < b = m(a, Rb), a > b = m(Ra, b).
/// Throws when R fails the Rota-Baxter identity.
DendriformAlgebra aguiar(const AssociativeAlgebra& algebra, const RationalMatrix& op);

}  // namespace dendro
