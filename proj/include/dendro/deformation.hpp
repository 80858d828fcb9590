#pragma once

#include "dendro/cohomology.hpp"
#include "dendro/dendriform.hpp"
#include "dendro/multimap.hpp"

#include <optional>
#include <vector>

namespace dendro {

/// Truncated 1-parameter deformation: pi_0 = pi_A is implicit, terms holds
/// pi_1 ... pi_N (arity-2 MultiMaps A^2 -> A).
struct TruncatedDeformation {
  DendriformAlgebra algebra;
  int order;
  std::vector<MultiMap> terms;

  /// pi_k including the implicit pi_0.
  MultiMap term(int k) const;
};

/// phi_0 = id implicit; phis holds phi_1 ... phi_N.
struct FormalIsomorphism {
  int order;
  std::vector<RationalMatrix> phis;
};

struct DeformationOrderReport {
  int order;
  bool ok;
  MultiMap residual;
};

/// Residual of sum_{i+j=n} pi_i o pi_j for each 0 <= n <= N.
std::vector<DeformationOrderReport> check_deformation(const TruncatedDeformation& def);

struct InfinitesimalResult {
  bool trivial;       // all pi_i = 0
  int order;          // k of the first nonzero pi_k (0 when trivial)
  MultiMap cochain;   // that pi_k (zero map when trivial)
  bool is_cocycle;
};

InfinitesimalResult infinitesimal(const TruncatedDeformation& def);

/// Recursive solve for pi'_n from the equivalence relation; phi_0 = id makes
/// pi'_n the only unknown at order n.
TruncatedDeformation transport(const TruncatedDeformation& def, const FormalIsomorphism& phi);

/// Formal compositional inverse of phi, truncated at the same order.
FormalIsomorphism inverse_series(const FormalIsomorphism& phi);

/// -sum_{i+j=n+1, i,j>=1} pi_i o pi_j, the 3-cochain blocking extension to
/// order n+1. Throws when the deformation fails at some order <= n.
MultiMap obstruction(const TruncatedDeformation& def);

struct ExtendResult {
  std::optional<MultiMap> pi_next;
  int cocycle_dim;  // dim Z^2, the ambiguity of the solution
};

/// Solves delta(pi_{n+1}) = obstruction; empty iff the obstruction class is
/// nonzero in H^3. The returned solution is the elimination-canonical one.
ExtendResult extend_deformation(const TruncatedDeformation& def);

/// Product rules for both operations on all basis pairs, cross-checked
/// against delta_dend(D) = 0 in C^1(A, A).
CheckReport check_derivation(const DendriformAlgebra& algebra, const RationalMatrix& d);

/// pi_i = (1/i!) pi_A(D1^i ., D2^i .). Throws when a derivation fails or
/// D1 D2 != D2 D1.
TruncatedDeformation udf_generate(const DendriformAlgebra& algebra, const RationalMatrix& d1,
                                  const RationalMatrix& d2, int order);

}  // namespace dendro
