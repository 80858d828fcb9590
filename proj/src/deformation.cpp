#include "dendro/deformation.hpp"

#include "dendro/linalg.hpp"

#include <stdexcept>

namespace dendro {

namespace {

/// phi applied after f: (phi o f)(r; a...) = phi(f(r; a...)).
MultiMap postcompose(const RationalMatrix& phi, const MultiMap& f) {
  MultiMap out(f.arity(), f.dim_in(), f.dim_out());
  for (int lab = 1; lab <= f.arity(); ++lab) {
    for (int t = 0; t < f.tuples(); ++t) {
      for (int o = 0; o < f.dim_out(); ++o) {
        Rational acc(0);
        for (int s = 0; s < f.dim_out(); ++s) {
          if (phi(o, s) != 0) acc += phi(o, s) * f.coeff(lab, s, t);
        }
        if (acc != 0) out.coeff(lab, o, t) = acc;
      }
    }
  }
  return out;
}

/// f(r; phi1 a, phi2 b) for arity-2 f.
MultiMap precompose2(const MultiMap& f, const RationalMatrix& phi1, const RationalMatrix& phi2) {
  if (f.arity() != 2) throw std::invalid_argument("precompose2: arity");
  const int d = f.dim_in();
  MultiMap out(2, d, f.dim_out());
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      const int in[2] = {a, b};
      const int out_idx = out.tuple_index(in);
      for (int ap = 0; ap < d; ++ap) {
        if (phi1(ap, a) == 0) continue;
        for (int bp = 0; bp < d; ++bp) {
          const Rational w = phi1(ap, a) * phi2(bp, b);
          if (w == 0) continue;
          const int sub[2] = {ap, bp};
          const int idx = f.tuple_index(sub);
          for (int lab = 1; lab <= 2; ++lab) {
            for (int o = 0; o < f.dim_out(); ++o) {
              const Rational& fv = f.coeff(lab, o, idx);
              if (fv != 0) out.coeff(lab, o, out_idx) += w * fv;
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

MultiMap TruncatedDeformation::term(int k) const {
  if (k == 0) return algebra.multiplication();
  if (k < 1 || k > order) throw std::out_of_range("TruncatedDeformation::term");
  return terms[k - 1];
}

std::vector<DeformationOrderReport> check_deformation(const TruncatedDeformation& def) {
  const int d = def.algebra.dim();
  if (static_cast<int>(def.terms.size()) != def.order) {
    throw std::invalid_argument("check_deformation: order / terms mismatch");
  }
  for (const auto& t : def.terms) {
    if (t.arity() != 2 || t.dim_in() != d || t.dim_out() != d) {
      throw std::invalid_argument("check_deformation: term shape");
    }
  }
  std::vector<DeformationOrderReport> reports;
  for (int n = 0; n <= def.order; ++n) {
    MultiMap residual(3, d, d);
    for (int i = 0; i <= n; ++i) {
      residual += circle(def.term(i), def.term(n - i));
    }
    const bool ok = residual.is_zero();
    reports.push_back({n, ok, std::move(residual)});
  }
  return reports;
}

InfinitesimalResult infinitesimal(const TruncatedDeformation& def) {
  const int d = def.algebra.dim();
  for (int k = 1; k <= def.order; ++k) {
    if (!def.terms[k - 1].is_zero()) {
      const MultiMap& pi_k = def.terms[k - 1];
      const bool cocycle =
          dend_coboundary(pi_k, def.algebra, Representation::adjoint(def.algebra)).is_zero();
      return {false, k, pi_k, cocycle};
    }
  }
  return {true, 0, MultiMap(2, d, d), true};
}

TruncatedDeformation transport(const TruncatedDeformation& def, const FormalIsomorphism& phi) {
  const int d = def.algebra.dim();
  const int order = def.order;
  if (phi.order < order) throw std::invalid_argument("transport: phi truncated too early");
  for (const auto& m : phi.phis) {
    if (m.rows() != d || m.cols() != d) throw std::invalid_argument("transport: phi shape");
  }
  const RationalMatrix id = RationalMatrix::Identity(d, d);
  auto phi_at = [&](int i) -> const RationalMatrix& { return i == 0 ? id : phi.phis[i - 1]; };

  std::vector<MultiMap> primed;  // pi'_0 ... pi'_order
  primed.push_back(def.algebra.multiplication());
  for (int n = 1; n <= order; ++n) {
    MultiMap rhs(2, d, d);
    for (int i = 0; i <= n; ++i) {
      if (i <= phi.order) rhs += postcompose(phi_at(i), def.term(n - i));
    }
    // Subtract the known pi'_k(phi_i ., phi_j .) with k < n.
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i + k <= n; ++i) {
        const int j = n - k - i;
        rhs -= precompose2(primed[k], phi_at(i), phi_at(j));
      }
    }
    primed.push_back(std::move(rhs));
  }
  primed.erase(primed.begin());
  return {def.algebra, order, std::move(primed)};
}

FormalIsomorphism inverse_series(const FormalIsomorphism& phi) {
  if (phi.phis.empty()) return phi;
  const int d = static_cast<int>(phi.phis[0].rows());
  const RationalMatrix id = RationalMatrix::Identity(d, d);
  auto phi_at = [&](int i) -> const RationalMatrix& { return i == 0 ? id : phi.phis[i - 1]; };
  std::vector<RationalMatrix> psi;  // psi_1 ... psi_order
  for (int n = 1; n <= phi.order; ++n) {
    RationalMatrix acc = RationalMatrix::Zero(d, d);
    for (int i = 1; i <= n; ++i) {
      const RationalMatrix& tail = (n - i == 0) ? id : psi[n - i - 1];
      acc -= phi_at(i) * tail;
    }
    psi.push_back(std::move(acc));
  }
  return {phi.order, std::move(psi)};
}

MultiMap obstruction(const TruncatedDeformation& def) {
  for (const auto& rep : check_deformation(def)) {
    if (!rep.ok) throw std::invalid_argument("obstruction: deformation fails at some order");
  }
  const int d = def.algebra.dim();
  const int n = def.order;
  MultiMap acc(3, d, d);
  for (int i = 1; i <= n; ++i) {
    const int j = n + 1 - i;
    if (j >= 1 && j <= n) acc += circle(def.terms[i - 1], def.terms[j - 1]);
  }
  acc *= Rational(-1);
  return acc;
}

ExtendResult extend_deformation(const TruncatedDeformation& def) {
  MultiMap obs = obstruction(def);
  const Representation adj = Representation::adjoint(def.algebra);
  RationalMatrix delta2 = dend_coboundary_matrix(def.algebra, adj, 2);
  const int cocycle_dim = static_cast<int>(kernel_basis(delta2).size());
  auto x = solve(delta2, obs.to_vector());
  if (!x) return {std::nullopt, cocycle_dim};
  return {MultiMap::from_vector(*x, 2, def.algebra.dim(), def.algebra.dim()), cocycle_dim};
}

CheckReport check_derivation(const DendriformAlgebra& algebra, const RationalMatrix& d) {
  const int n = algebra.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("check_derivation: shape");
  CheckReport report;
  for (int i = 0; i < n; ++i) {
    RationalVector ei = RationalVector::Zero(n);
    ei(i) = 1;
    for (int j = 0; j < n; ++j) {
      RationalVector ej = RationalVector::Zero(n);
      ej(j) = 1;
      const RationalVector di = d * ei;
      const RationalVector dj = d * ej;
      report.add("leibniz-prec", {i, j},
                 d * algebra.prec_vec(ei, ej) - algebra.prec_vec(ei, dj) - algebra.prec_vec(di, ej));
      report.add("leibniz-succ", {i, j},
                 d * algebra.succ_vec(ei, ej) - algebra.succ_vec(ei, dj) - algebra.succ_vec(di, ej));
    }
  }
  // Cross-check: the product rules amount to delta_dend(D) = 0 in C^1(A, A).
  MultiMap as_cochain(1, n, n);
  for (int i = 0; i < n; ++i) {
    for (int o = 0; o < n; ++o) as_cochain.coeff(1, o, i) = d(o, i);
  }
  const bool cob_zero =
      dend_coboundary(as_cochain, algebra, Representation::adjoint(algebra)).is_zero();
  if (cob_zero != report.ok) {
    throw std::logic_error("check_derivation: coboundary cross-check disagrees");
  }
  return report;
}

TruncatedDeformation udf_generate(const DendriformAlgebra& algebra, const RationalMatrix& d1,
                                  const RationalMatrix& d2, int order) {
  if (!check_derivation(algebra, d1).ok || !check_derivation(algebra, d2).ok) {
    throw std::invalid_argument("udf_generate: not a derivation");
  }
  if (d1 * d2 != d2 * d1) throw std::invalid_argument("udf_generate: derivations do not commute");
  const int n = algebra.dim();
  std::vector<MultiMap> terms;
  RationalMatrix p1 = RationalMatrix::Identity(n, n);
  RationalMatrix p2 = RationalMatrix::Identity(n, n);
  Rational factorial(1);
  for (int i = 1; i <= order; ++i) {
    p1 = d1 * p1;
    p2 = d2 * p2;
    factorial *= i;
    MultiMap pi_i(2, n, n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const RationalVector va = p1.col(a);
        const RationalVector vb = p2.col(b);
        const RationalVector prec = algebra.prec_vec(va, vb) / factorial;
        const RationalVector succ = algebra.succ_vec(va, vb) / factorial;
        const int in[2] = {a, b};
        for (int o = 0; o < n; ++o) {
          pi_i.at(1, o, in) = prec(o);
          pi_i.at(2, o, in) = succ(o);
        }
      }
    }
    terms.push_back(std::move(pi_i));
  }
  return {algebra, order, std::move(terms)};
}

}  // namespace dendro
