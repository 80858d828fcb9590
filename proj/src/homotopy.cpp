#include "dendro/homotopy.hpp"

#include "dendro/combimaps.hpp"

#include <stdexcept>

namespace dendro {

namespace {

long pow_long(int base, int exp) {
  long v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

void merge_report(CheckReport& into, const CheckReport& from, const std::string& prefix) {
  for (const auto& f : from.failures) {
    into.add(prefix + f.identity, f.basis, f.residual);
  }
}

enum class SignMode { DendInf, DendInf1 };

/// Shared worker for the Dend-infinity / Dend-infinity[1] / A-infinity
/// identities; labelled = false collapses the label routing (A-infinity).
CheckReport check_identities(const GradedSpace& space, int arity_bound,
                             const std::vector<std::vector<GradedOp>>& ops, bool labelled,
                             SignMode mode, int n_cap, const std::string& tag) {
  CheckReport report;
  const int t_dim = space.total();
  const int n_max = std::min(2 * arity_bound - 1, n_cap);
  for (int n = 1; n <= n_max; ++n) {
    if (t_dim > 0 && pow_long(t_dim, n) * n > 10'000'000L) {
      throw std::runtime_error("check_identities: resource bound exceeded");
    }
    const int r_hi = labelled ? n : 1;
    std::vector<int> tuple(n, 0);
    std::vector<int> inner_tuple;
    std::vector<int> outer_tuple;
    for (int r = 1; r <= r_hi; ++r) {
      if (t_dim == 0) break;
      std::fill(tuple.begin(), tuple.end(), 0);
      do {
        RationalVector residual = RationalVector::Zero(t_dim);
        for (int i = 1; i <= std::min(arity_bound, n); ++i) {
          const int j = n + 1 - i;
          if (j < 1 || j > arity_bound) continue;
          for (int lam = 1; lam <= j; ++lam) {
            int prefix_deg = 0;
            for (int s = 0; s < lam - 1; ++s) prefix_deg += space.degree_of(tuple[s]);
            int exponent;
            if (mode == SignMode::DendInf) {
              exponent = lam * (i + 1) + i * prefix_deg;
            } else {
              exponent = prefix_deg;
            }
            const int sign = (exponent % 2 == 0) ? 1 : -1;

            inner_tuple.assign(tuple.begin() + (lam - 1), tuple.begin() + (lam - 1 + i));
            RationalVector w;
            if (labelled) {
              const LabelSum ls = r_inner(j, lam, i, r);
              w = RationalVector::Zero(t_dim);
              for (const auto& [lab, c] : ls.terms) {
                const GradedOp& inner = ops[i - 1][lab - 1];
                const int idx = inner.tuple_index(inner_tuple);
                for (int t = 0; t < t_dim; ++t) w(t) += c * inner.at(t, idx);
              }
            } else {
              const GradedOp& inner = ops[i - 1][0];
              w = op_column(inner, inner.tuple_index(inner_tuple));
            }
            const GradedOp& outer =
                labelled ? ops[j - 1][r_zero(j, lam, i, r) - 1] : ops[j - 1][0];
            outer_tuple.resize(j);
            for (int s = 0; s < lam - 1; ++s) outer_tuple[s] = tuple[s];
            for (int s = lam; s < j; ++s) outer_tuple[s] = tuple[s + i - 1];
            for (int t = 0; t < t_dim; ++t) {
              if (w(t) == 0) continue;
              outer_tuple[lam - 1] = t;
              const int idx = outer.tuple_index(outer_tuple);
              for (int o = 0; o < t_dim; ++o) {
                const Rational& v = outer.at(o, idx);
                if (v != 0) residual(o) += Rational(sign) * w(t) * v;
              }
            }
          }
        }
        if (!residual.isZero()) {
          std::vector<int> where;
          where.push_back(n);
          where.push_back(labelled ? r : 0);
          where.insert(where.end(), tuple.begin(), tuple.end());
          report.add(tag, where, residual);
        }
      } while (next_tuple(tuple, t_dim));
    }
  }
  return report;
}

}  // namespace

int GradedSpace::total() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

int GradedSpace::offset(int deg) const {
  int t = 0;
  for (int h = 0; h < deg; ++h) t += dims[h];
  return t;
}

int GradedSpace::degree_of(int idx) const {
  int t = 0;
  for (size_t h = 0; h < dims.size(); ++h) {
    t += dims[h];
    if (idx < t) return static_cast<int>(h);
  }
  throw std::out_of_range("GradedSpace::degree_of");
}

GradedOp::GradedOp(int arity, int degree, int dim)
    : arity(arity), degree(degree), dim(dim),
      data(static_cast<size_t>(dim) * pow_long(dim, arity), Rational(0)) {
  if (arity < 1 || dim < 0) throw std::invalid_argument("GradedOp: bad shape");
}

int GradedOp::tuples() const { return static_cast<int>(pow_long(dim, arity)); }

int GradedOp::tuple_index(const std::vector<int>& in) const {
  if (static_cast<int>(in.size()) != arity) throw std::invalid_argument("GradedOp: tuple size");
  int idx = 0;
  for (int v : in) {
    if (v < 0 || v >= dim) throw std::out_of_range("GradedOp: basis index");
    idx = idx * dim + v;
  }
  return idx;
}

Rational& GradedOp::at(int out, int tuple) {
  return data[static_cast<size_t>(out) * tuples() + tuple];
}

const Rational& GradedOp::at(int out, int tuple) const {
  return data[static_cast<size_t>(out) * tuples() + tuple];
}

bool GradedOp::is_zero() const {
  for (const auto& x : data) {
    if (x != 0) return false;
  }
  return true;
}

RationalVector op_column(const GradedOp& op, int tuple) {
  RationalVector v(op.dim);
  for (int o = 0; o < op.dim; ++o) v(o) = op.at(o, tuple);
  return v;
}

RationalVector op_eval(const GradedOp& op, const std::vector<RationalVector>& args) {
  if (static_cast<int>(args.size()) != op.arity) throw std::invalid_argument("op_eval: arity");
  RationalVector acc = RationalVector::Zero(op.dim);
  if (op.dim == 0) return acc;
  std::vector<int> tuple(op.arity, 0);
  do {
    Rational weight(1);
    for (int s = 0; s < op.arity && weight != 0; ++s) weight *= args[s](tuple[s]);
    if (weight == 0) continue;
    const int idx = op.tuple_index(tuple);
    for (int o = 0; o < op.dim; ++o) acc(o) += weight * op.at(o, idx);
  } while (next_tuple(tuple, op.dim));
  return acc;
}

bool op_homogeneous(const GradedOp& op, const GradedSpace& space) {
  if (op.dim != space.total()) return false;
  if (op.dim == 0) return true;
  std::vector<int> tuple(op.arity, 0);
  do {
    int in_deg = 0;
    for (int v : tuple) in_deg += space.degree_of(v);
    const int idx = op.tuple_index(tuple);
    for (int o = 0; o < op.dim; ++o) {
      if (op.at(o, idx) != 0 && space.degree_of(o) != in_deg + op.degree) return false;
    }
  } while (next_tuple(tuple, op.dim));
  return true;
}

GradedDendSystem GradedDendSystem::zero(GradedSpace space, int arity_bound, int op_degree_shift) {
  GradedDendSystem s{std::move(space), arity_bound, {}};
  const int dim = s.space.total();
  for (int k = 1; k <= arity_bound; ++k) {
    std::vector<GradedOp> row;
    for (int r = 1; r <= k; ++r) row.emplace_back(k, k + op_degree_shift, dim);
    s.ops.push_back(std::move(row));
  }
  return s;
}

GradedAInfSystem GradedAInfSystem::zero(GradedSpace space, int arity_bound, int op_degree_shift) {
  GradedAInfSystem s{std::move(space), arity_bound, {}};
  const int dim = s.space.total();
  for (int k = 1; k <= arity_bound; ++k) s.mu.emplace_back(k, k + op_degree_shift, dim);
  return s;
}

CheckReport check_dend_infinity(const GradedDendSystem& s, int n_cap) {
  for (int k = 1; k <= s.arity_bound; ++k) {
    for (int r = 1; r <= k; ++r) {
      if (!op_homogeneous(s.op(k, r), s.space)) {
        throw std::invalid_argument("check_dend_infinity: op not homogeneous");
      }
    }
  }
  return check_identities(s.space, s.arity_bound, s.ops, true, SignMode::DendInf, n_cap,
                          "dend-inf");
}

CheckReport check_dend_inf1(const GradedDendSystem& s, int n_cap) {
  return check_identities(s.space, s.arity_bound, s.ops, true, SignMode::DendInf1, n_cap,
                          "dend-inf1");
}

CheckReport check_a_infinity(const GradedAInfSystem& s, int n_cap) {
  std::vector<std::vector<GradedOp>> wrapped;
  for (const auto& op : s.mu) {
    if (!op_homogeneous(op, s.space)) {
      throw std::invalid_argument("check_a_infinity: op not homogeneous");
    }
    wrapped.push_back({op});
  }
  return check_identities(s.space, s.arity_bound, wrapped, false, SignMode::DendInf, n_cap,
                          "a-inf");
}

GradedDendSystem shift(const GradedDendSystem& s) {
  GradedSpace v;
  v.dims.push_back(0);
  v.dims.insert(v.dims.end(), s.space.dims.begin(), s.space.dims.end());
  // Global indices coincide: (sA)_i = A_{i-1} block by block.
  GradedDendSystem out = GradedDendSystem::zero(v, s.arity_bound, /*unused*/ -2);
  const int t_dim = s.space.total();
  for (int k = 1; k <= s.arity_bound; ++k) {
    const int base = (k * (k - 1) / 2) % 2;
    for (int r = 1; r <= k; ++r) {
      GradedOp op(k, -1, t_dim);
      const GradedOp& mu = s.op(k, r);
      std::vector<int> tuple(k, 0);
      if (t_dim > 0) {
        do {
          int koszul = 0;
          for (int i = 0; i < k; ++i) {
            koszul += (k - 1 - i) * (s.space.degree_of(tuple[i]) + 1);
          }
          const int sign = ((base + koszul) % 2 == 0) ? 1 : -1;
          const int idx = mu.tuple_index(tuple);
          for (int o = 0; o < t_dim; ++o) {
            const Rational& val = mu.at(o, idx);
            if (val != 0) op.at(o, idx) = Rational(sign) * val;
          }
        } while (next_tuple(tuple, t_dim));
      }
      out.op(k, r) = std::move(op);
    }
  }
  return out;
}

GradedDendSystem unshift(const GradedDendSystem& s) {
  if (s.space.dims.empty() || s.space.dims[0] != 0) {
    throw std::invalid_argument("unshift: space is not a suspension");
  }
  GradedSpace a;
  a.dims.assign(s.space.dims.begin() + 1, s.space.dims.end());
  GradedDendSystem out = GradedDendSystem::zero(a, s.arity_bound);
  const int t_dim = a.total();
  for (int k = 1; k <= s.arity_bound; ++k) {
    for (int r = 1; r <= k; ++r) {
      GradedOp op(k, k - 2, t_dim);
      const GradedOp& rho = s.op(k, r);
      std::vector<int> tuple(k, 0);
      if (t_dim > 0) {
        do {
          int koszul = 0;
          for (int i = 0; i < k; ++i) koszul += (k - 1 - i) * a.degree_of(tuple[i]);
          const int sign = (koszul % 2 == 0) ? 1 : -1;
          const int idx = rho.tuple_index(tuple);
          for (int o = 0; o < t_dim; ++o) {
            const Rational& val = rho.at(o, idx);
            if (val != 0) op.at(o, idx) = Rational(sign) * val;
          }
        } while (next_tuple(tuple, t_dim));
      }
      out.op(k, r) = std::move(op);
    }
  }
  return out;
}

CheckReport check_rb_a_infinity(const GradedAInfSystem& s, const RationalMatrix& r) {
  const int t_dim = s.space.total();
  if (r.rows() != t_dim || r.cols() != t_dim) {
    throw std::invalid_argument("check_rb_a_infinity: operator shape");
  }
  for (int i = 0; i < t_dim; ++i) {
    for (int j = 0; j < t_dim; ++j) {
      if (r(i, j) != 0 && s.space.degree_of(i) != s.space.degree_of(j)) {
        throw std::invalid_argument("check_rb_a_infinity: operator not degree 0");
      }
    }
  }
  CheckReport report;
  for (int k = 1; k <= s.arity_bound; ++k) {
    const GradedOp& mu = s.mu[k - 1];
    std::vector<int> tuple(k, 0);
    if (t_dim == 0) continue;
    std::vector<RationalVector> args(k);
    do {
      for (int i = 0; i < k; ++i) args[i] = r.col(tuple[i]);
      RationalVector lhs = op_eval(mu, args);
      RationalVector rhs = RationalVector::Zero(t_dim);
      for (int slot = 0; slot < k; ++slot) {
        RationalVector unit = RationalVector::Zero(t_dim);
        unit(tuple[slot]) = 1;
        std::swap(args[slot], unit);
        rhs += op_eval(mu, args);
        std::swap(args[slot], unit);
      }
      rhs = r * rhs;
      std::vector<int> where;
      where.push_back(k);
      where.insert(where.end(), tuple.begin(), tuple.end());
      report.add("rota-baxter-k" + std::to_string(k), where, lhs - rhs);
    } while (next_tuple(tuple, t_dim));
  }
  return report;
}

GradedDendSystem induced_dend_infinity(const GradedAInfSystem& s, const RationalMatrix& r) {
  if (!check_rb_a_infinity(s, r).ok) {
    throw std::invalid_argument("induced_dend_infinity: not a Rota-Baxter operator");
  }
  const int t_dim = s.space.total();
  GradedDendSystem out = GradedDendSystem::zero(s.space, s.arity_bound);
  for (int k = 1; k <= s.arity_bound; ++k) {
    const GradedOp& mu = s.mu[k - 1];
    for (int lab = 1; lab <= k; ++lab) {
      GradedOp op(k, k - 2, t_dim);
      std::vector<int> tuple(k, 0);
      if (t_dim == 0) {
        out.op(k, lab) = std::move(op);
        continue;
      }
      std::vector<RationalVector> args(k);
      do {
        for (int i = 0; i < k; ++i) {
          if (i == lab - 1) {
            args[i] = RationalVector::Zero(t_dim);
            args[i](tuple[i]) = 1;
          } else {
            args[i] = r.col(tuple[i]);
          }
        }
        const RationalVector v = op_eval(mu, args);
        const int idx = op.tuple_index(tuple);
        for (int o = 0; o < t_dim; ++o) {
          if (v(o) != 0) op.at(o, idx) = v(o);
        }
      } while (next_tuple(tuple, t_dim));
      out.op(k, lab) = std::move(op);
    }
  }
  return out;
}

GradedAInfSystem dend_to_a_infinity(const GradedDendSystem& s) {
  GradedAInfSystem out = GradedAInfSystem::zero(s.space, s.arity_bound);
  for (int k = 1; k <= s.arity_bound; ++k) {
    GradedOp acc(k, s.op(k, 1).degree, s.space.total());
    for (int r = 1; r <= k; ++r) {
      const GradedOp& op = s.op(k, r);
      for (size_t i = 0; i < acc.data.size(); ++i) acc.data[i] += op.data[i];
    }
    out.mu[k - 1] = std::move(acc);
  }
  return out;
}

GradedDendSystem dend_from_algebra(const DendriformAlgebra& algebra, int arity_bound) {
  GradedSpace space{{algebra.dim()}};
  GradedDendSystem out = GradedDendSystem::zero(space, arity_bound);
  const int d = algebra.dim();
  if (arity_bound >= 2) {
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        for (int o = 0; o < d; ++o) {
          out.op(2, 1).at(o, a * d + b) = algebra.prec(a, b, o);
          out.op(2, 2).at(o, a * d + b) = algebra.succ(a, b, o);
        }
      }
    }
  }
  return out;
}

GradedDendSystem embed_a_infinity(const GradedAInfSystem& s) {
  GradedDendSystem out = GradedDendSystem::zero(s.space, s.arity_bound);
  for (int k = 1; k <= s.arity_bound; ++k) out.op(k, 1) = s.mu[k - 1];
  return out;
}

GradedDendSystem direct_sum(const GradedDendSystem& s1, const GradedDendSystem& s2) {
  if (s1.arity_bound != s2.arity_bound) {
    throw std::invalid_argument("direct_sum: arity bounds differ");
  }
  GradedSpace space;
  const int top = std::max(s1.space.top_degree(), s2.space.top_degree());
  for (int h = 0; h <= top; ++h) {
    const int d1 = h <= s1.space.top_degree() ? s1.space.dims[h] : 0;
    const int d2 = h <= s2.space.top_degree() ? s2.space.dims[h] : 0;
    space.dims.push_back(d1 + d2);
  }
  GradedDendSystem out = GradedDendSystem::zero(space, s1.arity_bound);
  // Map (which, local global index) -> combined global index.
  auto embed = [&](const GradedSpace& sub, int which, int idx) {
    const int deg = sub.degree_of(idx);
    const int local = idx - sub.offset(deg);
    int off = space.offset(deg);
    if (which == 2 && deg <= s1.space.top_degree()) off += s1.space.dims[deg];
    return off + local;
  };
  for (int which = 0; which < 2; ++which) {
    const GradedDendSystem& s = which == 0 ? s1 : s2;
    const int t_sub = s.space.total();
    if (t_sub == 0) continue;
    for (int k = 1; k <= s.arity_bound; ++k) {
      for (int r = 1; r <= k; ++r) {
        const GradedOp& op = s.op(k, r);
        std::vector<int> tuple(k, 0);
        std::vector<int> mapped(k, 0);
        do {
          const int idx = op.tuple_index(tuple);
          for (int i = 0; i < k; ++i) mapped[i] = embed(s.space, which + 1, tuple[i]);
          const int midx = out.op(k, r).tuple_index(mapped);
          for (int o = 0; o < t_sub; ++o) {
            const Rational& v = op.at(o, idx);
            if (v != 0) out.op(k, r).at(embed(s.space, which + 1, o), midx) = v;
          }
        } while (next_tuple(tuple, t_sub));
      }
    }
  }
  return out;
}

TwoTermDend TwoTermDend::zero(int dim0, int dim1) {
  TwoTermDend t;
  t.dim0 = dim0;
  t.dim1 = dim1;
  t.d = RationalMatrix::Zero(dim0, dim1);
  t.mu2_00.assign(static_cast<size_t>(2) * dim0 * dim0 * dim0, Rational(0));
  t.mu2_01.assign(static_cast<size_t>(2) * dim0 * dim1 * dim1, Rational(0));
  t.mu2_10.assign(static_cast<size_t>(2) * dim1 * dim0 * dim1, Rational(0));
  t.mu3.assign(static_cast<size_t>(3) * dim0 * dim0 * dim0 * dim1, Rational(0));
  return t;
}

Rational& TwoTermDend::m00(int r, int a, int b, int o) {
  return mu2_00[(((static_cast<size_t>(r - 1) * dim0 + a) * dim0 + b) * dim0) + o];
}
Rational& TwoTermDend::m01(int r, int a, int m, int o) {
  return mu2_01[(((static_cast<size_t>(r - 1) * dim0 + a) * dim1 + m) * dim1) + o];
}
Rational& TwoTermDend::m10(int r, int m, int a, int o) {
  return mu2_10[(((static_cast<size_t>(r - 1) * dim1 + m) * dim0 + a) * dim1) + o];
}
Rational& TwoTermDend::m3(int s, int a, int b, int c, int o) {
  return mu3[((((static_cast<size_t>(s - 1) * dim0 + a) * dim0 + b) * dim0 + c) * dim1) + o];
}
const Rational& TwoTermDend::m00(int r, int a, int b, int o) const {
  return mu2_00[(((static_cast<size_t>(r - 1) * dim0 + a) * dim0 + b) * dim0) + o];
}
const Rational& TwoTermDend::m01(int r, int a, int m, int o) const {
  return mu2_01[(((static_cast<size_t>(r - 1) * dim0 + a) * dim1 + m) * dim1) + o];
}
const Rational& TwoTermDend::m10(int r, int m, int a, int o) const {
  return mu2_10[(((static_cast<size_t>(r - 1) * dim1 + m) * dim0 + a) * dim1) + o];
}
const Rational& TwoTermDend::m3(int s, int a, int b, int c, int o) const {
  return mu3[((((static_cast<size_t>(s - 1) * dim0 + a) * dim0 + b) * dim0 + c) * dim1) + o];
}

CheckReport check_two_term(const TwoTermDend& t) {
  CheckReport report;
  const int d0 = t.dim0, d1 = t.dim1;

  // (i) mu_2 on A_1 (x) A_1 lands in degree 2 = 0: holds structurally.

  // (ii) d mu_2([r]; a, m) = mu_2([r]; a, dm)  and  (iii) the mirror.
  for (int r = 1; r <= 2; ++r) {
    for (int a = 0; a < d0; ++a) {
      for (int m = 0; m < d1; ++m) {
        RationalVector res2 = RationalVector::Zero(d0);
        RationalVector res3 = RationalVector::Zero(d0);
        for (int o = 0; o < d0; ++o) {
          for (int p = 0; p < d1; ++p) {
            res2(o) += t.d(o, p) * t.m01(r, a, m, p);
            res3(o) += t.d(o, p) * t.m10(r, m, a, p);
          }
          for (int b = 0; b < d0; ++b) {
            res2(o) -= t.d(b, m) * t.m00(r, a, b, o);
            res3(o) -= t.d(b, m) * t.m00(r, b, a, o);
          }
        }
        report.add("ii", {r, a, m}, res2);
        report.add("iii", {r, m, a}, res3);
      }
    }
  }

  // (iv) mu_2([r]; dm, n) = mu_2([r]; m, dn).
  for (int r = 1; r <= 2; ++r) {
    for (int m = 0; m < d1; ++m) {
      for (int n = 0; n < d1; ++n) {
        RationalVector res = RationalVector::Zero(d1);
        for (int o = 0; o < d1; ++o) {
          for (int a = 0; a < d0; ++a) {
            res(o) += t.d(a, m) * t.m01(r, a, n, o) - t.d(a, n) * t.m10(r, m, a, o);
          }
        }
        report.add("iv", {r, m, n}, res);
      }
    }
  }

  // Inner sums for the circ_i routing.
  auto inner00 = [&](const LabelSum& ls, int a, int b, int o) {
    Rational acc(0);
    for (const auto& [lab, c] : ls.terms) acc += c * t.m00(lab, a, b, o);
    return acc;
  };
  auto inner01 = [&](const LabelSum& ls, int a, int m, int o) {
    Rational acc(0);
    for (const auto& [lab, c] : ls.terms) acc += c * t.m01(lab, a, m, o);
    return acc;
  };
  auto inner10 = [&](const LabelSum& ls, int m, int a, int o) {
    Rational acc(0);
    for (const auto& [lab, c] : ls.terms) acc += c * t.m10(lab, m, a, o);
    return acc;
  };

  for (int s = 1; s <= 3; ++s) {
    const int r1 = r_zero(2, 1, 2, s);
    const LabelSum l1 = r_inner(2, 1, 2, s);
    const int r2 = r_zero(2, 2, 2, s);
    const LabelSum l2 = r_inner(2, 2, 2, s);

    // (v) on A_0^3.
    for (int a = 0; a < d0; ++a) {
      for (int b = 0; b < d0; ++b) {
        for (int c = 0; c < d0; ++c) {
          RationalVector res = RationalVector::Zero(d0);
          for (int o = 0; o < d0; ++o) {
            for (int u = 0; u < d0; ++u) {
              res(o) += inner00(l1, a, b, u) * t.m00(r1, u, c, o);
              res(o) -= inner00(l2, b, c, u) * t.m00(r2, a, u, o);
            }
            for (int p = 0; p < d1; ++p) res(o) -= t.d(o, p) * t.m3(s, a, b, c, p);
          }
          report.add("v", {s, a, b, c}, res);
        }
      }
    }

    // (vi1) (a, b, m), (vi2) (a, m, c), (vi3) (m, b, c): values in A_1.
    for (int a = 0; a < d0; ++a) {
      for (int b = 0; b < d0; ++b) {
        for (int m = 0; m < d1; ++m) {
          RationalVector res = RationalVector::Zero(d1);
          for (int o = 0; o < d1; ++o) {
            for (int u = 0; u < d0; ++u) res(o) += inner00(l1, a, b, u) * t.m01(r1, u, m, o);
            for (int p = 0; p < d1; ++p) res(o) -= inner01(l2, b, m, p) * t.m01(r2, a, p, o);
            for (int c = 0; c < d0; ++c) res(o) -= t.d(c, m) * t.m3(s, a, b, c, o);
          }
          report.add("vi1", {s, a, b, m}, res);
        }
      }
    }
    for (int a = 0; a < d0; ++a) {
      for (int m = 0; m < d1; ++m) {
        for (int c = 0; c < d0; ++c) {
          RationalVector res = RationalVector::Zero(d1);
          for (int o = 0; o < d1; ++o) {
            for (int p = 0; p < d1; ++p) {
              res(o) += inner01(l1, a, m, p) * t.m10(r1, p, c, o);
              res(o) -= inner10(l2, m, c, p) * t.m01(r2, a, p, o);
            }
            for (int b = 0; b < d0; ++b) res(o) -= t.d(b, m) * t.m3(s, a, b, c, o);
          }
          report.add("vi2", {s, a, m, c}, res);
        }
      }
    }
    for (int m = 0; m < d1; ++m) {
      for (int b = 0; b < d0; ++b) {
        for (int c = 0; c < d0; ++c) {
          RationalVector res = RationalVector::Zero(d1);
          for (int o = 0; o < d1; ++o) {
            for (int p = 0; p < d1; ++p) res(o) += inner10(l1, m, b, p) * t.m10(r1, p, c, o);
            for (int u = 0; u < d0; ++u) res(o) -= inner00(l2, b, c, u) * t.m10(r2, m, u, o);
            for (int a = 0; a < d0; ++a) res(o) -= t.d(a, m) * t.m3(s, a, b, c, o);
          }
          report.add("vi3", {s, m, b, c}, res);
        }
      }
    }
  }

  // (vii) on A_0^4.
  for (int lab = 1; lab <= 4; ++lab) {
    for (int a = 0; a < d0; ++a) {
      for (int b = 0; b < d0; ++b) {
        for (int c = 0; c < d0; ++c) {
          for (int e = 0; e < d0; ++e) {
            const int abce[4] = {a, b, c, e};
            RationalVector res = RationalVector::Zero(d1);
            for (int i = 1; i <= 3; ++i) {
              const int r0 = r_zero(3, i, 2, lab);
              const LabelSum ls = r_inner(3, i, 2, lab);
              const int sign = (i % 2 == 1) ? 1 : -1;
              const int x = abce[i - 1], y = abce[i];
              int rest[2];
              int w = 0;
              for (int q = 0; q < 4; ++q) {
                if (q != i - 1 && q != i) rest[w++] = abce[q];
              }
              for (int u = 0; u < d0; ++u) {
                Rational iv = inner00(ls, x, y, u);
                if (iv == 0) continue;
                int args[3];
                if (i == 1) {
                  args[0] = u; args[1] = rest[0]; args[2] = rest[1];
                } else if (i == 2) {
                  args[0] = rest[0]; args[1] = u; args[2] = rest[1];
                } else {
                  args[0] = rest[0]; args[1] = rest[1]; args[2] = u;
                }
                for (int o = 0; o < d1; ++o) {
                  res(o) += Rational(sign) * iv * t.m3(r0, args[0], args[1], args[2], o);
                }
              }
            }
            {
              const int r0 = r_zero(2, 1, 3, lab);
              const LabelSum ls = r_inner(2, 1, 3, lab);
              for (const auto& [il, coef] : ls.terms) {
                for (int p = 0; p < d1; ++p) {
                  const Rational iv = coef * t.m3(il, a, b, c, p);
                  if (iv == 0) continue;
                  for (int o = 0; o < d1; ++o) res(o) -= iv * t.m10(r0, p, e, o);
                }
              }
            }
            {
              const int r0 = r_zero(2, 2, 3, lab);
              const LabelSum ls = r_inner(2, 2, 3, lab);
              for (const auto& [il, coef] : ls.terms) {
                for (int p = 0; p < d1; ++p) {
                  const Rational iv = coef * t.m3(il, b, c, e, p);
                  if (iv == 0) continue;
                  for (int o = 0; o < d1; ++o) res(o) -= iv * t.m01(r0, a, p, o);
                }
              }
            }
            report.add("vii", {lab, a, b, c, e}, res);
          }
        }
      }
    }
  }
  return report;
}

GradedDendSystem two_term_to_graded(const TwoTermDend& t) {
  GradedSpace space{{t.dim0, t.dim1}};
  GradedDendSystem s = GradedDendSystem::zero(space, 3);
  const int d0 = t.dim0, d1 = t.dim1, tt = d0 + d1;
  for (int m = 0; m < d1; ++m) {
    for (int o = 0; o < d0; ++o) s.op(1, 1).at(o, d0 + m) = t.d(o, m);
  }
  for (int r = 1; r <= 2; ++r) {
    GradedOp& op = s.op(2, r);
    for (int a = 0; a < d0; ++a) {
      for (int b = 0; b < d0; ++b) {
        for (int o = 0; o < d0; ++o) op.at(o, a * tt + b) = t.m00(r, a, b, o);
      }
      for (int m = 0; m < d1; ++m) {
        for (int o = 0; o < d1; ++o) {
          op.at(d0 + o, a * tt + (d0 + m)) = t.m01(r, a, m, o);
          op.at(d0 + o, (d0 + m) * tt + a) = t.m10(r, m, a, o);
        }
      }
    }
  }
  for (int lab = 1; lab <= 3; ++lab) {
    GradedOp& op = s.op(3, lab);
    for (int a = 0; a < d0; ++a) {
      for (int b = 0; b < d0; ++b) {
        for (int c = 0; c < d0; ++c) {
          const int idx = (a * tt + b) * tt + c;
          for (int o = 0; o < d1; ++o) op.at(d0 + o, idx) = t.m3(lab, a, b, c, o);
        }
      }
    }
  }
  return s;
}

SkeletalTriple skeletal_to_triple(const TwoTermDend& t) {
  if (!t.d.isZero()) throw std::invalid_argument("skeletal_to_triple: d != 0");
  if (!check_two_term(t).ok) throw std::invalid_argument("skeletal_to_triple: structure invalid");
  const int d0 = t.dim0, d1 = t.dim1;
  std::vector<Rational> prec(static_cast<size_t>(d0) * d0 * d0), succ(prec.size());
  for (int a = 0; a < d0; ++a) {
    for (int b = 0; b < d0; ++b) {
      for (int o = 0; o < d0; ++o) {
        prec[(a * d0 + b) * d0 + o] = t.m00(1, a, b, o);
        succ[(a * d0 + b) * d0 + o] = t.m00(2, a, b, o);
      }
    }
  }
  DendriformAlgebra algebra = DendriformAlgebra::make(d0, std::move(prec), std::move(succ));
  std::vector<Rational> t1p(static_cast<size_t>(d0) * d1 * d1), t1s(t1p.size()),
      t2p(static_cast<size_t>(d1) * d0 * d1), t2s(t2p.size());
  for (int a = 0; a < d0; ++a) {
    for (int m = 0; m < d1; ++m) {
      for (int o = 0; o < d1; ++o) {
        t1p[(a * d1 + m) * d1 + o] = t.m01(1, a, m, o);
        t1s[(a * d1 + m) * d1 + o] = t.m01(2, a, m, o);
        t2p[(m * d0 + a) * d1 + o] = t.m10(1, m, a, o);
        t2s[(m * d0 + a) * d1 + o] = t.m10(2, m, a, o);
      }
    }
  }
  Representation rep(d0, d1, std::move(t1p), std::move(t1s), std::move(t2p), std::move(t2s));
  MultiMap sigma(3, d0, d1);
  for (int s = 1; s <= 3; ++s) {
    for (int a = 0; a < d0; ++a) {
      for (int b = 0; b < d0; ++b) {
        for (int c = 0; c < d0; ++c) {
          const int in[3] = {a, b, c};
          for (int o = 0; o < d1; ++o) sigma.at(s, o, in) = t.m3(s, a, b, c, o);
        }
      }
    }
  }
  if (!dend_coboundary(sigma, algebra, rep).is_zero()) {
    throw std::logic_error("skeletal_to_triple: extracted sigma is not a cocycle");
  }
  return {std::move(algebra), std::move(rep), std::move(sigma)};
}

TwoTermDend triple_to_skeletal(const DendriformAlgebra& algebra, const Representation& rep,
                               const MultiMap& sigma) {
  const int d0 = algebra.dim(), d1 = rep.dim_m();
  if (sigma.arity() != 3 || sigma.dim_in() != d0 || sigma.dim_out() != d1) {
    throw std::invalid_argument("triple_to_skeletal: sigma shape");
  }
  if (!dend_coboundary(sigma, algebra, rep).is_zero()) {
    throw std::invalid_argument("triple_to_skeletal: sigma is not a cocycle");
  }
  TwoTermDend t = TwoTermDend::zero(d0, d1);
  for (int a = 0; a < d0; ++a) {
    for (int b = 0; b < d0; ++b) {
      for (int o = 0; o < d0; ++o) {
        t.m00(1, a, b, o) = algebra.prec(a, b, o);
        t.m00(2, a, b, o) = algebra.succ(a, b, o);
      }
    }
    for (int m = 0; m < d1; ++m) {
      for (int o = 0; o < d1; ++o) {
        t.m01(1, a, m, o) = rep.theta1(1, a, m, o);
        t.m01(2, a, m, o) = rep.theta1(2, a, m, o);
        t.m10(1, m, a, o) = rep.theta2(1, m, a, o);
        t.m10(2, m, a, o) = rep.theta2(2, m, a, o);
      }
    }
  }
  for (int s = 1; s <= 3; ++s) {
    for (int a = 0; a < d0; ++a) {
      for (int b = 0; b < d0; ++b) {
        for (int c = 0; c < d0; ++c) {
          const int in[3] = {a, b, c};
          for (int o = 0; o < d1; ++o) t.m3(s, a, b, c, o) = sigma.at(s, o, in);
        }
      }
    }
  }
  return t;
}

GradedDendSystem n_term_skeletal(const DendriformAlgebra& algebra, const Representation& rep,
                                 const MultiMap& sigma, int n) {
  if (n < 2 || n > 3) throw std::invalid_argument("n_term_skeletal: n out of range");
  if (n == 2) return two_term_to_graded(triple_to_skeletal(algebra, rep, sigma));
  const int d0 = algebra.dim(), dm = rep.dim_m();
  if (sigma.arity() != n + 1 || sigma.dim_in() != d0 || sigma.dim_out() != dm) {
    throw std::invalid_argument("n_term_skeletal: sigma shape");
  }
  if (!dend_coboundary(sigma, algebra, rep).is_zero()) {
    throw std::invalid_argument("n_term_skeletal: sigma is not a cocycle");
  }
  GradedSpace space{{d0, 0, dm}};
  GradedDendSystem s = GradedDendSystem::zero(space, n + 1);
  const int tt = d0 + dm;
  for (int r = 1; r <= 2; ++r) {
    GradedOp& op = s.op(2, r);
    for (int a = 0; a < d0; ++a) {
      for (int b = 0; b < d0; ++b) {
        for (int o = 0; o < d0; ++o) {
          op.at(o, a * tt + b) = r == 1 ? algebra.prec(a, b, o) : algebra.succ(a, b, o);
        }
      }
      for (int m = 0; m < dm; ++m) {
        for (int o = 0; o < dm; ++o) {
          op.at(d0 + o, a * tt + (d0 + m)) = rep.theta1(r, a, m, o);
          op.at(d0 + o, (d0 + m) * tt + a) = rep.theta2(r, m, a, o);
        }
      }
    }
  }
  for (int lab = 1; lab <= n + 1; ++lab) {
    GradedOp& op = s.op(n + 1, lab);
    std::vector<int> tuple(n + 1, 0);
    do {
      bool in_a0 = true;
      for (int v : tuple) in_a0 = in_a0 && v < d0;
      if (in_a0) {
        const int idx = op.tuple_index(tuple);
        const int sidx = MultiMap(n + 1, d0, dm).tuple_index(tuple);
        for (int o = 0; o < dm; ++o) {
          const Rational& v = sigma.coeff(lab, o, sidx);
          if (v != 0) op.at(d0 + o, idx) = v;
        }
      }
    } while (next_tuple(tuple, tt));
  }
  return s;
}

CheckReport check_crossed_module(const CrossedModule& x) {
  CheckReport report;
  merge_report(report, x.a.check(), "A-");
  merge_report(report, x.b.check(), "B-");
  if (x.rep.dim_a() != x.b.dim() || x.rep.dim_m() != x.a.dim()) {
    throw std::invalid_argument("check_crossed_module: representation shape");
  }
  merge_report(report, check_representation(x.b, x.rep), "rep-");
  const int da = x.a.dim(), db = x.b.dim();
  if (x.dt.rows() != db || x.dt.cols() != da) {
    throw std::invalid_argument("check_crossed_module: dt shape");
  }

  auto basis = [](int dim, int i) {
    RationalVector v = RationalVector::Zero(dim);
    v(i) = 1;
    return v;
  };

  // dt is a morphism of dendriform algebras.
  for (int m = 0; m < da; ++m) {
    for (int n = 0; n < da; ++n) {
      const RationalVector em = basis(da, m), en = basis(da, n);
      report.add("dt-morphism-prec", {m, n},
                 x.dt * x.a.prec_vec(em, en) - x.b.prec_vec(x.dt.col(m), x.dt.col(n)));
      report.add("dt-morphism-succ", {m, n},
                 x.dt * x.a.succ_vec(em, en) - x.b.succ_vec(x.dt.col(m), x.dt.col(n)));
    }
  }

  auto pi_a = [&](int r, const RationalVector& u, const RationalVector& v) {
    return r == 1 ? x.a.prec_vec(u, v) : x.a.succ_vec(u, v);
  };
  auto pi_b = [&](int r, const RationalVector& u, const RationalVector& v) {
    return r == 1 ? x.b.prec_vec(u, v) : x.b.succ_vec(u, v);
  };

  for (int r = 1; r <= 2; ++r) {
    // dt(theta1([r]; b, m)) = pi_B([r]; b, dt m) and the theta2 mirror.
    for (int b = 0; b < db; ++b) {
      for (int m = 0; m < da; ++m) {
        report.add("cm-1", {r, b, m},
                   x.dt * x.rep.theta1_vec(r, basis(db, b), basis(da, m)) -
                       pi_b(r, basis(db, b), x.dt.col(m)));
        report.add("cm-2", {r, m, b},
                   x.dt * x.rep.theta2_vec(r, basis(da, m), basis(db, b)) -
                       pi_b(r, x.dt.col(m), basis(db, b)));
      }
    }
    // theta1([r]; dt m, n) = pi_A([r]; m, n) = theta2([r]; m, dt n).
    for (int m = 0; m < da; ++m) {
      for (int n = 0; n < da; ++n) {
        report.add("cm-3", {r, m, n},
                   x.rep.theta1_vec(r, x.dt.col(m), basis(da, n)) -
                       pi_a(r, basis(da, m), basis(da, n)));
        report.add("cm-4", {r, m, n},
                   x.rep.theta2_vec(r, basis(da, m), x.dt.col(n)) -
                       pi_a(r, basis(da, m), basis(da, n)));
      }
    }
  }

  // (theta1 o_2 pi_A)([s]; b, m, n) = (pi_A o_1 theta1)([s]; b, m, n)
  // (theta2 o_1 pi_A)([s]; m, n, b) = (pi_A o_2 theta2)([s]; m, n, b).
  auto pi_a_sum = [&](const LabelSum& ls, const RationalVector& u, const RationalVector& v) {
    RationalVector acc = RationalVector::Zero(da);
    for (const auto& [lab, c] : ls.terms) acc += c * pi_a(lab, u, v);
    return acc;
  };
  auto theta1_sum = [&](const LabelSum& ls, const RationalVector& u, const RationalVector& v) {
    RationalVector acc = RationalVector::Zero(da);
    for (const auto& [lab, c] : ls.terms) acc += c * x.rep.theta1_vec(lab, u, v);
    return acc;
  };
  auto theta2_sum = [&](const LabelSum& ls, const RationalVector& u, const RationalVector& v) {
    RationalVector acc = RationalVector::Zero(da);
    for (const auto& [lab, c] : ls.terms) acc += c * x.rep.theta2_vec(lab, u, v);
    return acc;
  };
  for (int s = 1; s <= 3; ++s) {
    const int o1 = r_zero(2, 1, 2, s);
    const LabelSum i1 = r_inner(2, 1, 2, s);
    const int o2 = r_zero(2, 2, 2, s);
    const LabelSum i2 = r_inner(2, 2, 2, s);
    for (int b = 0; b < db; ++b) {
      for (int m = 0; m < da; ++m) {
        for (int n = 0; n < da; ++n) {
          const RationalVector eb = basis(db, b), em = basis(da, m), en = basis(da, n);
          report.add("cm-5", {s, b, m, n},
                     x.rep.theta1_vec(o2, eb, pi_a_sum(i2, em, en)) -
                         pi_a(o1, theta1_sum(i1, eb, em), en));
          report.add("cm-6", {s, m, n, b},
                     x.rep.theta2_vec(o1, pi_a_sum(i1, em, en), eb) -
                         pi_a(o2, em, theta2_sum(i2, en, eb)));
        }
      }
    }
  }
  return report;
}

CrossedModule strict_to_crossed(const TwoTermDend& t) {
  for (const auto& v : t.mu3) {
    if (v != 0) throw std::invalid_argument("strict_to_crossed: mu3 != 0");
  }
  if (!check_two_term(t).ok) throw std::invalid_argument("strict_to_crossed: structure invalid");
  const int d0 = t.dim0, d1 = t.dim1;
  std::vector<Rational> bprec(static_cast<size_t>(d0) * d0 * d0), bsucc(bprec.size());
  for (int a = 0; a < d0; ++a) {
    for (int b = 0; b < d0; ++b) {
      for (int o = 0; o < d0; ++o) {
        bprec[(a * d0 + b) * d0 + o] = t.m00(1, a, b, o);
        bsucc[(a * d0 + b) * d0 + o] = t.m00(2, a, b, o);
      }
    }
  }
  DendriformAlgebra b_alg = DendriformAlgebra::make(d0, std::move(bprec), std::move(bsucc));
  // pi_A([r]; m, n) = mu_2([r]; dm, n).
  std::vector<Rational> aprec(static_cast<size_t>(d1) * d1 * d1), asucc(aprec.size());
  for (int m = 0; m < d1; ++m) {
    for (int n = 0; n < d1; ++n) {
      for (int o = 0; o < d1; ++o) {
        Rational p(0), q(0);
        for (int a = 0; a < d0; ++a) {
          p += t.d(a, m) * t.m01(1, a, n, o);
          q += t.d(a, m) * t.m01(2, a, n, o);
        }
        aprec[(m * d1 + n) * d1 + o] = p;
        asucc[(m * d1 + n) * d1 + o] = q;
      }
    }
  }
  DendriformAlgebra a_alg = DendriformAlgebra::make(d1, std::move(aprec), std::move(asucc));
  std::vector<Rational> t1p(static_cast<size_t>(d0) * d1 * d1), t1s(t1p.size()),
      t2p(static_cast<size_t>(d1) * d0 * d1), t2s(t2p.size());
  for (int a = 0; a < d0; ++a) {
    for (int m = 0; m < d1; ++m) {
      for (int o = 0; o < d1; ++o) {
        t1p[(a * d1 + m) * d1 + o] = t.m01(1, a, m, o);
        t1s[(a * d1 + m) * d1 + o] = t.m01(2, a, m, o);
        t2p[(m * d0 + a) * d1 + o] = t.m10(1, m, a, o);
        t2s[(m * d0 + a) * d1 + o] = t.m10(2, m, a, o);
      }
    }
  }
  Representation rep(d0, d1, std::move(t1p), std::move(t1s), std::move(t2p), std::move(t2s));
  return {std::move(a_alg), std::move(b_alg), t.d, std::move(rep)};
}

TwoTermDend crossed_to_strict(const CrossedModule& x) {
  if (!check_crossed_module(x).ok) {
    throw std::invalid_argument("crossed_to_strict: invalid crossed module");
  }
  const int d0 = x.b.dim(), d1 = x.a.dim();
  TwoTermDend t = TwoTermDend::zero(d0, d1);
  t.d = x.dt;
  for (int a = 0; a < d0; ++a) {
    for (int b = 0; b < d0; ++b) {
      for (int o = 0; o < d0; ++o) {
        t.m00(1, a, b, o) = x.b.prec(a, b, o);
        t.m00(2, a, b, o) = x.b.succ(a, b, o);
      }
    }
    for (int m = 0; m < d1; ++m) {
      for (int o = 0; o < d1; ++o) {
        t.m01(1, a, m, o) = x.rep.theta1(1, a, m, o);
        t.m01(2, a, m, o) = x.rep.theta1(2, a, m, o);
        t.m10(1, m, a, o) = x.rep.theta2(1, m, a, o);
        t.m10(2, m, a, o) = x.rep.theta2(2, m, a, o);
      }
    }
  }
  return t;
}

TwoTermDend semidirect_two_term(const DendriformAlgebra& algebra, const Representation& rep_m,
                                const Representation& rep_n, const RationalMatrix& f) {
  const int da = algebra.dim();
  if (rep_m.dim_a() != da || rep_n.dim_a() != da) {
    throw std::invalid_argument("semidirect_two_term: representation base mismatch");
  }
  const int dm = rep_m.dim_m(), dn = rep_n.dim_m();
  if (f.rows() != dm || f.cols() != dn) {
    throw std::invalid_argument("semidirect_two_term: f shape");
  }
  // f must intertwine the actions.
  for (int r = 1; r <= 2; ++r) {
    for (int a = 0; a < da; ++a) {
      RationalVector ea = RationalVector::Zero(da);
      ea(a) = 1;
      for (int n = 0; n < dn; ++n) {
        RationalVector en = RationalVector::Zero(dn);
        en(n) = 1;
        if (f * rep_n.theta1_vec(r, ea, en) != rep_m.theta1_vec(r, ea, f.col(n)) ||
            f * rep_n.theta2_vec(r, en, ea) != rep_m.theta2_vec(r, f.col(n), ea)) {
          throw std::invalid_argument("semidirect_two_term: f is not a morphism");
        }
      }
    }
  }
  const int d0 = da + dm;
  TwoTermDend t = TwoTermDend::zero(d0, dn);
  for (int n = 0; n < dn; ++n) {
    for (int m = 0; m < dm; ++m) t.d(da + m, n) = f(m, n);
  }
  for (int r = 1; r <= 2; ++r) {
    for (int a = 0; a < da; ++a) {
      for (int b = 0; b < da; ++b) {
        for (int o = 0; o < da; ++o) {
          t.m00(r, a, b, o) = r == 1 ? algebra.prec(a, b, o) : algebra.succ(a, b, o);
        }
      }
      for (int m = 0; m < dm; ++m) {
        for (int o = 0; o < dm; ++o) {
          t.m00(r, a, da + m, da + o) = rep_m.theta1(r, a, m, o);
          t.m00(r, da + m, a, da + o) = rep_m.theta2(r, m, a, o);
        }
      }
      for (int n = 0; n < dn; ++n) {
        for (int o = 0; o < dn; ++o) {
          t.m01(r, a, n, o) = rep_n.theta1(r, a, n, o);
          t.m10(r, n, a, o) = rep_n.theta2(r, n, a, o);
        }
      }
    }
  }
  return t;
}

}  // namespace dendro
