#include "dendro/cohomology.hpp"

#include "dendro/linalg.hpp"

#include <stdexcept>

namespace dendro {

namespace {
int pow_int(int base, int exp) {
  int v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}
}  // namespace

Rational& HochschildCochain::at(int out, int tuple) {
  return data[static_cast<size_t>(out) * pow_int(dim_a, degree) + tuple];
}

const Rational& HochschildCochain::at(int out, int tuple) const {
  return data[static_cast<size_t>(out) * pow_int(dim_a, degree) + tuple];
}

HochschildCochain HochschildCochain::zero(int degree, int dim_a, int dim_m) {
  return {degree, dim_a, dim_m,
          std::vector<Rational>(static_cast<size_t>(dim_m) * pow_int(dim_a, degree), Rational(0))};
}

bool HochschildCochain::is_zero() const {
  for (const auto& x : data) {
    if (x != 0) return false;
  }
  return true;
}

HochschildCochain& HochschildCochain::operator-=(const HochschildCochain& other) {
  if (degree != other.degree || dim_a != other.dim_a || dim_m != other.dim_m) {
    throw std::invalid_argument("HochschildCochain: shape mismatch");
  }
  for (size_t i = 0; i < data.size(); ++i) data[i] -= other.data[i];
  return *this;
}

MultiMap dend_coboundary(const MultiMap& f, const DendriformAlgebra& algebra,
                         const Representation& rep) {
  const int n = f.arity();
  const int d = algebra.dim();
  const int dm = rep.dim_m();
  if (f.dim_in() != d || f.dim_out() != dm) {
    throw std::invalid_argument("dend_coboundary: cochain shape mismatch");
  }
  MultiMap out(n + 1, d, dm);
  if (d == 0) return out;

  std::vector<int> tuple(n + 1, 0);
  std::vector<int> sub(n, 0);
  for (int r = 1; r <= n + 1; ++r) {
    const int head_label = r_zero(2, 2, n, r);
    const LabelSum head_inner = r_inner(2, 2, n, r);
    const int tail_label = r_zero(2, 1, n, r);
    const LabelSum tail_inner = r_inner(2, 1, n, r);
    std::fill(tuple.begin(), tuple.end(), 0);
    do {
      const int out_idx = out.tuple_index(tuple);

      // theta1 head: a_1 acting on f(a_2, ..., a_{n+1}).
      for (int s = 0; s < n; ++s) sub[s] = tuple[s + 1];
      int sub_idx = f.tuple_index(sub);
      for (const auto& [lab, c] : head_inner.terms) {
        for (int t = 0; t < dm; ++t) {
          const Rational& fv = f.coeff(lab, t, sub_idx);
          if (fv == 0) continue;
          for (int o = 0; o < dm; ++o) {
            const Rational th = rep.theta1(head_label, tuple[0], t, o);
            if (th != 0) out.coeff(r, o, out_idx) += c * fv * th;
          }
        }
      }

      // middle sum: insert pi_A at slot i.
      for (int i = 1; i <= n; ++i) {
        const int f_label = r_zero(n, i, 2, r);
        const LabelSum pi_inner = r_inner(n, i, 2, r);
        const int sign = (i % 2 == 0) ? 1 : -1;
        for (int s = 0; s < i - 1; ++s) sub[s] = tuple[s];
        for (int s = i; s < n; ++s) sub[s] = tuple[s + 1];
        for (int t = 0; t < d; ++t) {
          Rational w(0);
          for (const auto& [lab, c] : pi_inner.terms) {
            w += c * ((lab == 1) ? algebra.prec(tuple[i - 1], tuple[i], t)
                                 : algebra.succ(tuple[i - 1], tuple[i], t));
          }
          if (w == 0) continue;
          sub[i - 1] = t;
          sub_idx = f.tuple_index(sub);
          for (int o = 0; o < dm; ++o) {
            const Rational& fv = f.coeff(f_label, o, sub_idx);
            if (fv != 0) out.coeff(r, o, out_idx) += Rational(sign) * w * fv;
          }
        }
      }

      // theta2 tail: f(a_1, ..., a_n) acting on a_{n+1}.
      for (int s = 0; s < n; ++s) sub[s] = tuple[s];
      sub_idx = f.tuple_index(sub);
      const int tail_sign = (n % 2 == 0) ? -1 : 1;  // (-1)^{n+1}
      for (const auto& [lab, c] : tail_inner.terms) {
        for (int t = 0; t < dm; ++t) {
          const Rational& fv = f.coeff(lab, t, sub_idx);
          if (fv == 0) continue;
          for (int o = 0; o < dm; ++o) {
            const Rational th = rep.theta2(tail_label, t, tuple[n], o);
            if (th != 0) out.coeff(r, o, out_idx) += Rational(tail_sign) * c * fv * th;
          }
        }
      }
    } while (next_tuple(tuple, d));
  }
  return out;
}

HochschildCochain hochschild_coboundary(const HochschildCochain& g,
                                        const AssociativeAlgebra& algebra,
                                        const AssocBimodule& bimod) {
  const int n = g.degree;
  const int d = algebra.dim();
  const int dm = g.dim_m;
  if (g.dim_a != d || bimod.dim_a != d || bimod.dim_m != dm) {
    throw std::invalid_argument("hochschild_coboundary: shape mismatch");
  }
  HochschildCochain out = HochschildCochain::zero(n + 1, d, dm);
  if (d == 0) return out;

  auto tuple_index = [&](const std::vector<int>& tup) {
    int idx = 0;
    for (int v : tup) idx = idx * d + v;
    return idx;
  };

  std::vector<int> tuple(n + 1, 0);
  std::vector<int> sub(n, 0);
  do {
    const int out_idx = tuple_index(tuple);

    for (int s = 0; s < n; ++s) sub[s] = tuple[s + 1];
    int sub_idx = tuple_index(sub);
    for (int t = 0; t < dm; ++t) {
      const Rational& gv = g.at(t, sub_idx);
      if (gv == 0) continue;
      for (int o = 0; o < dm; ++o) {
        const Rational& lv = bimod.left[(static_cast<size_t>(tuple[0]) * dm + t) * dm + o];
        if (lv != 0) out.at(o, out_idx) += gv * lv;
      }
    }

    for (int i = 1; i <= n; ++i) {
      const int sign = (i % 2 == 0) ? 1 : -1;
      for (int s = 0; s < i - 1; ++s) sub[s] = tuple[s];
      for (int s = i; s < n; ++s) sub[s] = tuple[s + 1];
      for (int t = 0; t < d; ++t) {
        const Rational& mv = algebra.mult(tuple[i - 1], tuple[i], t);
        if (mv == 0) continue;
        sub[i - 1] = t;
        sub_idx = tuple_index(sub);
        for (int o = 0; o < dm; ++o) {
          const Rational& gv = g.at(o, sub_idx);
          if (gv != 0) out.at(o, out_idx) += Rational(sign) * mv * gv;
        }
      }
    }

    for (int s = 0; s < n; ++s) sub[s] = tuple[s];
    sub_idx = tuple_index(sub);
    const int tail_sign = (n % 2 == 0) ? -1 : 1;
    for (int t = 0; t < dm; ++t) {
      const Rational& gv = g.at(t, sub_idx);
      if (gv == 0) continue;
      for (int o = 0; o < dm; ++o) {
        const Rational& rv = bimod.right[(static_cast<size_t>(t) * d + tuple[n]) * dm + o];
        if (rv != 0) out.at(o, out_idx) += Rational(tail_sign) * gv * rv;
      }
    }
  } while (next_tuple(tuple, d));
  return out;
}

HochschildCochain sum_map_S(const MultiMap& f) {
  HochschildCochain out = HochschildCochain::zero(f.arity(), f.dim_in(), f.dim_out());
  for (int lab = 1; lab <= f.arity(); ++lab) {
    for (int o = 0; o < f.dim_out(); ++o) {
      for (int t = 0; t < f.tuples(); ++t) {
        out.at(o, t) += f.coeff(lab, o, t);
      }
    }
  }
  return out;
}

HochschildCochain hochschild_partial_compose(const HochschildCochain& f,
                                             const HochschildCochain& g, int i) {
  const int m = f.degree;
  const int n = g.degree;
  if (i < 1 || i > m) throw std::out_of_range("hochschild_partial_compose: slot");
  if (f.dim_a != g.dim_a || g.dim_m != f.dim_a) {
    throw std::invalid_argument("hochschild_partial_compose: dimension mismatch");
  }
  const int d = f.dim_a;
  HochschildCochain out = HochschildCochain::zero(m + n - 1, d, f.dim_m);
  if (d == 0) return out;
  auto tuple_index = [&](const std::vector<int>& tup) {
    int idx = 0;
    for (int v : tup) idx = idx * d + v;
    return idx;
  };
  std::vector<int> tuple(m + n - 1, 0);
  std::vector<int> f_tuple(m, 0);
  std::vector<int> g_tuple(n, 0);
  do {
    for (int s = 0; s < n; ++s) g_tuple[s] = tuple[i - 1 + s];
    const int g_idx = tuple_index(g_tuple);
    for (int s = 0; s < i - 1; ++s) f_tuple[s] = tuple[s];
    for (int s = i; s < m; ++s) f_tuple[s] = tuple[s + n - 1];
    const int out_idx = tuple_index(tuple);
    for (int q = 0; q < d; ++q) {
      const Rational& gv = g.at(q, g_idx);
      if (gv == 0) continue;
      f_tuple[i - 1] = q;
      const int f_idx = tuple_index(f_tuple);
      for (int o = 0; o < f.dim_m; ++o) {
        const Rational& fv = f.at(o, f_idx);
        if (fv != 0) out.at(o, out_idx) += gv * fv;
      }
    }
  } while (next_tuple(tuple, d));
  return out;
}

RationalMatrix dend_coboundary_matrix(const DendriformAlgebra& algebra, const Representation& rep,
                                      int degree) {
  const int d = algebra.dim();
  const int dm = rep.dim_m();
  const int cols = degree * pow_int(d, degree) * dm;
  const int rows = (degree + 1) * pow_int(d, degree + 1) * dm;
  RationalMatrix m(rows, cols);
  RationalVector unit = RationalVector::Zero(cols);
  for (int c = 0; c < cols; ++c) {
    unit.setZero();
    unit(c) = 1;
    MultiMap basis = MultiMap::from_vector(unit, degree, d, dm);
    m.col(c) = dend_coboundary(basis, algebra, rep).to_vector();
  }
  return m;
}

CohomologyResult cohomology_dim(const DendriformAlgebra& algebra, const Representation& rep,
                                int degree) {
  if (degree < 1) throw std::invalid_argument("cohomology_dim: degree must be >= 1");
  const int d = algebra.dim();
  const int dm = rep.dim_m();
  // Desk-scale cap on the target cochain space.
  const long coords = static_cast<long>(degree) * pow_int(d, degree + 1) * dm;
  if (coords > 10'000'000L) throw std::runtime_error("cohomology_dim: resource bound exceeded");

  RationalMatrix delta_n = dend_coboundary_matrix(algebra, rep, degree);
  std::vector<RationalVector> z = kernel_basis(delta_n);

  std::vector<RationalVector> b;
  if (degree > 1) {
    RationalMatrix delta_prev = dend_coboundary_matrix(algebra, rep, degree - 1);
    std::vector<int> pivots;
    rref(delta_prev.transpose(), &pivots);  // row space = column space, but keep columns:
    b.clear();
    // Independent columns of delta_prev, in column order.
    std::vector<int> col_pivots;
    rref(delta_prev, &col_pivots);
    for (int c : col_pivots) b.push_back(delta_prev.col(c));
  }

  const int dim_h = quotient_dim(z, b);

  // Representatives: cocycles extending span(B) inside span(Z), picked by the
  // deterministic elimination order on the matrix [B | Z].
  CohomologyResult result;
  result.degree = degree;
  result.dim_z = static_cast<int>(z.size());
  result.dim_b = static_cast<int>(b.size());
  result.dim_h = dim_h;
  const int len = degree * pow_int(d, degree) * dm;
  RationalMatrix bz(len, static_cast<int>(b.size() + z.size()));
  for (size_t c = 0; c < b.size(); ++c) bz.col(static_cast<int>(c)) = b[c];
  for (size_t c = 0; c < z.size(); ++c) bz.col(static_cast<int>(b.size() + c)) = z[c];
  std::vector<int> pivots;
  rref(bz, &pivots);
  for (int p : pivots) {
    if (p >= static_cast<int>(b.size())) {
      result.representatives.push_back(
          MultiMap::from_vector(z[p - b.size()], degree, d, dm));
    }
  }
  for (const auto& v : z) result.cocycle_basis.push_back(MultiMap::from_vector(v, degree, d, dm));
  return result;
}

DendriformAlgebra extension_from_cocycle(const DendriformAlgebra& algebra, const Representation& rep,
                                         const MultiMap& cocycle) {
  if (cocycle.arity() != 2 || cocycle.dim_in() != algebra.dim() ||
      cocycle.dim_out() != rep.dim_m()) {
    throw std::invalid_argument("extension_from_cocycle: cochain shape mismatch");
  }
  if (!dend_coboundary(cocycle, algebra, rep).is_zero()) {
    throw std::invalid_argument("extension_from_cocycle: not a cocycle");
  }
  DendriformAlgebra result = semidirect(algebra, rep);
  const int d = algebra.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int in[2] = {i, j};
      for (int k = 0; k < rep.dim_m(); ++k) {
        result.prec(i, j, d + k) += cocycle.at(1, k, in);
        result.succ(i, j, d + k) += cocycle.at(2, k, in);
      }
    }
  }
  return result;
}

MultiMap cocycle_from_extension(const DendriformAlgebra& extension,
                                const DendriformAlgebra& algebra, const Representation& rep) {
  const int d = algebra.dim();
  const int dm = rep.dim_m();
  if (extension.dim() != d + dm) {
    throw std::invalid_argument("cocycle_from_extension: dimension mismatch");
  }
  // M must multiply trivially.
  for (int i = 0; i < dm; ++i) {
    for (int j = 0; j < dm; ++j) {
      for (int k = 0; k < d + dm; ++k) {
        if (extension.prec(d + i, d + j, k) != 0 || extension.succ(d + i, d + j, k) != 0) {
          throw std::invalid_argument("cocycle_from_extension: M does not multiply trivially");
        }
      }
    }
  }
  // Projection must be an algebra map: the A-part of products of section
  // elements is pi_A, mixed products stay inside M and match the actions.
  MultiMap cocycle(2, d, dm);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        if (extension.prec(i, j, k) != algebra.prec(i, j, k) ||
            extension.succ(i, j, k) != algebra.succ(i, j, k)) {
          throw std::invalid_argument("cocycle_from_extension: projection is not an algebra map");
        }
      }
      const int in[2] = {i, j};
      for (int k = 0; k < dm; ++k) {
        cocycle.at(1, k, in) = extension.prec(i, j, d + k);
        cocycle.at(2, k, in) = extension.succ(i, j, d + k);
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < dm; ++j) {
      for (int k = 0; k < dm; ++k) {
        bool ok = extension.prec(i, d + j, d + k) == rep.theta1(1, i, j, k) &&
                  extension.succ(i, d + j, d + k) == rep.theta1(2, i, j, k) &&
                  extension.prec(d + j, i, d + k) == rep.theta2(1, j, i, k) &&
                  extension.succ(d + j, i, d + k) == rep.theta2(2, j, i, k);
        for (int k2 = 0; k2 < d; ++k2) {
          ok = ok && extension.prec(i, d + j, k2) == 0 && extension.succ(i, d + j, k2) == 0 &&
               extension.prec(d + j, i, k2) == 0 && extension.succ(d + j, i, k2) == 0;
        }
        if (!ok) {
          throw std::invalid_argument(
              "cocycle_from_extension: induced representation differs from the declared one");
        }
      }
    }
  }
  if (!dend_coboundary(cocycle, algebra, rep).is_zero()) {
    throw std::invalid_argument("cocycle_from_extension: extracted cochain is not a cocycle");
  }
  return cocycle;
}

std::optional<MultiMap> extensions_equivalent(const DendriformAlgebra& algebra,
                                              const Representation& rep, const MultiMap& f,
                                              const MultiMap& f_prime) {
  if (!dend_coboundary(f, algebra, rep).is_zero() ||
      !dend_coboundary(f_prime, algebra, rep).is_zero()) {
    throw std::invalid_argument("extensions_equivalent: inputs must be cocycles");
  }
  RationalMatrix delta1 = dend_coboundary_matrix(algebra, rep, 1);
  RationalVector rhs = (f - f_prime).to_vector();
  auto x = solve(delta1, rhs);
  if (!x) return std::nullopt;
  return MultiMap::from_vector(*x, 1, algebra.dim(), rep.dim_m());
}

}  // namespace dendro
