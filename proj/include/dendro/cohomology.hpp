#pragma once

#include "dendro/dendriform.hpp"
#include "dendro/multimap.hpp"

#include <optional>
#include <vector>

namespace dendro {

/// An n-cochain is a MultiMap of arity n with dim_in = dim A, dim_out = dim M.
/// The flat coordinate order is MultiMap::to_vector().

/// Hochschild cochain over the associated associative algebra: single tensor
/// dim_m x dim_a^n, row-major (out, inputs).
struct HochschildCochain {
  int degree;
  int dim_a;
  int dim_m;
  std::vector<Rational> data;

  Rational& at(int out, int tuple);
  const Rational& at(int out, int tuple) const;
  static HochschildCochain zero(int degree, int dim_a, int dim_m);
  bool is_zero() const;
  HochschildCochain& operator-=(const HochschildCochain& other);
};

/// delta_dend: theta1 head term, signed middle sum over pi_A insertions
/// routed through R_0 / R_i, and the (-1)^{n+1} theta2 tail.
MultiMap dend_coboundary(const MultiMap& f, const DendriformAlgebra& algebra,
                         const Representation& rep);

HochschildCochain hochschild_coboundary(const HochschildCochain& g,
                                        const AssociativeAlgebra& algebra,
                                        const AssocBimodule& bimod);

/// S(f) = f_[1] + ... + f_[n].
HochschildCochain sum_map_S(const MultiMap& f);

/// End_A partial composition on Hochschild cochains (Gerstenhaber's o_i),
/// ungraded; used for the operad-morphism test of S.
HochschildCochain hochschild_partial_compose(const HochschildCochain& f,
                                             const HochschildCochain& g, int i);

/// Matrix of delta_dend : C^n -> C^{n+1} in flat coordinates.
RationalMatrix dend_coboundary_matrix(const DendriformAlgebra& algebra, const Representation& rep,
                                      int degree);

struct CohomologyResult {
  int degree;
  int dim_z;
  int dim_b;
  int dim_h;
  std::vector<MultiMap> representatives;  // cocycles spanning H, deterministic order
  std::vector<MultiMap> cocycle_basis;
};

/// Kernel/image/quotient of delta_dend at degree n (n >= 1; B = 0 at n = 1).
/// Refuses degrees whose coordinate count exceeds the desk-scale cap.
CohomologyResult cohomology_dim(const DendriformAlgebra& algebra, const Representation& rep,
                                int degree);

/// E = A + M built from a verified 2-cocycle; f = 0 gives the semidirect
/// product. Basis order: A first, then M.
DendriformAlgebra extension_from_cocycle(const DendriformAlgebra& algebra, const Representation& rep,
                                         const MultiMap& cocycle);

/// Extracts the 2-cocycle of an abelian extension presented on A + M with the
/// canonical section a -> (a, 0). Verifies that M multiplies trivially and
/// that the projection is an algebra map.
MultiMap cocycle_from_extension(const DendriformAlgebra& extension,
                                const DendriformAlgebra& algebra, const Representation& rep);

/// Some g in C^1 with f - f' = delta g, or nullopt when the classes differ.
std::optional<MultiMap> extensions_equivalent(const DendriformAlgebra& algebra,
                                              const Representation& rep, const MultiMap& f,
                                              const MultiMap& f_prime);

}  // namespace dendro
