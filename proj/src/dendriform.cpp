#include "dendro/dendriform.hpp"

#include <stdexcept>

namespace dendro {

namespace {
RationalVector basis_vec(int dim, int i) {
  RationalVector v = RationalVector::Zero(dim);
  v(i) = 1;
  return v;
}

RationalVector contract2(const std::vector<Rational>& tensor, int d1, int d2, int dout,
                         const RationalVector& a, const RationalVector& b) {
  RationalVector out = RationalVector::Zero(dout);
  for (int i = 0; i < d1; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < d2; ++j) {
      if (b(j) == 0) continue;
      const Rational w = a(i) * b(j);
      for (int k = 0; k < dout; ++k) {
        const Rational& c = tensor[(static_cast<size_t>(i) * d2 + j) * dout + k];
        if (c != 0) out(k) += w * c;
      }
    }
  }
  return out;
}
}  // namespace

void CheckReport::add(std::string identity, std::vector<int> basis, RationalVector residual) {
  if (residual.isZero()) return;
  ok = false;
  failures.push_back({std::move(identity), std::move(basis), std::move(residual)});
}

DendriformAlgebra::DendriformAlgebra(int dim, std::vector<Rational> prec, std::vector<Rational> succ)
    : dim_(dim), prec_(std::move(prec)), succ_(std::move(succ)) {
  const size_t want = static_cast<size_t>(dim) * dim * dim;
  if (prec_.size() != want || succ_.size() != want) {
    throw std::invalid_argument("DendriformAlgebra: tensor size mismatch");
  }
}

DendriformAlgebra DendriformAlgebra::zero(int dim) {
  const size_t n = static_cast<size_t>(dim) * dim * dim;
  return DendriformAlgebra(dim, std::vector<Rational>(n, Rational(0)),
                           std::vector<Rational>(n, Rational(0)));
}

DendriformAlgebra DendriformAlgebra::make(int dim, std::vector<Rational> prec,
                                          std::vector<Rational> succ) {
  DendriformAlgebra a(dim, std::move(prec), std::move(succ));
  if (!a.valid()) throw std::invalid_argument("DendriformAlgebra: dendriform identities fail");
  return a;
}

RationalVector DendriformAlgebra::prec_vec(const RationalVector& a, const RationalVector& b) const {
  return contract2(prec_, dim_, dim_, dim_, a, b);
}

RationalVector DendriformAlgebra::succ_vec(const RationalVector& a, const RationalVector& b) const {
  return contract2(succ_, dim_, dim_, dim_, a, b);
}

MultiMap DendriformAlgebra::multiplication() const {
  MultiMap pi(2, dim_, dim_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        const int in[2] = {i, j};
        pi.at(1, k, in) = prec(i, j, k);
        pi.at(2, k, in) = succ(i, j, k);
      }
    }
  }
  return pi;
}

CheckReport DendriformAlgebra::check() const {
  return check_dendriform(dim_, prec_, succ_);
}

bool DendriformAlgebra::valid() const {
  if (valid_cache_ < 0) valid_cache_ = check().ok ? 1 : 0;
  return valid_cache_ == 1;
}

CheckReport check_dendriform(int dim, const std::vector<Rational>& prec,
                             const std::vector<Rational>& succ) {
  DendriformAlgebra a(dim, prec, succ);
  CheckReport report;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) {
        RationalVector ei = basis_vec(dim, i), ej = basis_vec(dim, j), ek = basis_vec(dim, k);
        RationalVector pp = a.prec_vec(ei, ej), ps = a.succ_vec(ei, ej);
        RationalVector qp = a.prec_vec(ej, ek), qs = a.succ_vec(ej, ek);
        report.add("dendriform-1", {i, j, k},
                   a.prec_vec(pp, ek) - a.prec_vec(ei, qp + qs));
        report.add("dendriform-2", {i, j, k},
                   a.prec_vec(ps, ek) - a.succ_vec(ei, qp));
        report.add("dendriform-3", {i, j, k},
                   a.succ_vec(pp + ps, ek) - a.succ_vec(ei, qs));
      }
    }
  }
  return report;
}

AssociativeAlgebra::AssociativeAlgebra(int dim, std::vector<Rational> mult)
    : dim_(dim), mult_(std::move(mult)) {
  if (mult_.size() != static_cast<size_t>(dim) * dim * dim) {
    throw std::invalid_argument("AssociativeAlgebra: tensor size mismatch");
  }
}

RationalVector AssociativeAlgebra::mult_vec(const RationalVector& a, const RationalVector& b) const {
  return contract2(mult_, dim_, dim_, dim_, a, b);
}

CheckReport AssociativeAlgebra::check() const {
  CheckReport report;
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        RationalVector ei = basis_vec(dim_, i), ej = basis_vec(dim_, j), ek = basis_vec(dim_, k);
        report.add("associativity", {i, j, k},
                   mult_vec(mult_vec(ei, ej), ek) - mult_vec(ei, mult_vec(ej, ek)));
      }
    }
  }
  return report;
}

Representation::Representation(int dim_a, int dim_m, std::vector<Rational> t1_prec,
                               std::vector<Rational> t1_succ, std::vector<Rational> t2_prec,
                               std::vector<Rational> t2_succ)
    : dim_a_(dim_a),
      dim_m_(dim_m),
      t1_prec_(std::move(t1_prec)),
      t1_succ_(std::move(t1_succ)),
      t2_prec_(std::move(t2_prec)),
      t2_succ_(std::move(t2_succ)) {
  const size_t want = static_cast<size_t>(dim_a) * dim_m * dim_m;
  if (t1_prec_.size() != want || t1_succ_.size() != want || t2_prec_.size() != want ||
      t2_succ_.size() != want) {
    throw std::invalid_argument("Representation: tensor size mismatch");
  }
}

Representation Representation::adjoint(const DendriformAlgebra& algebra) {
  const int d = algebra.dim();
  const size_t n = static_cast<size_t>(d) * d * d;
  std::vector<Rational> t1p(n), t1s(n), t2p(n), t2s(n);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        const size_t idx = (static_cast<size_t>(i) * d + j) * d + k;
        t1p[idx] = algebra.prec(i, j, k);
        t1s[idx] = algebra.succ(i, j, k);
        t2p[idx] = algebra.prec(i, j, k);
        t2s[idx] = algebra.succ(i, j, k);
      }
    }
  }
  return Representation(d, d, std::move(t1p), std::move(t1s), std::move(t2p), std::move(t2s));
}

Representation Representation::trivial(int dim_a, int dim_m) {
  const size_t n = static_cast<size_t>(dim_a) * dim_m * dim_m;
  std::vector<Rational> zero(n, Rational(0));
  return Representation(dim_a, dim_m, zero, zero, zero, zero);
}

Rational Representation::theta1(int r, int a, int m, int out) const {
  const auto& t = (r == 1) ? t1_prec_ : t1_succ_;
  return t[(static_cast<size_t>(a) * dim_m_ + m) * dim_m_ + out];
}

Rational Representation::theta2(int r, int m, int a, int out) const {
  const auto& t = (r == 1) ? t2_prec_ : t2_succ_;
  return t[(static_cast<size_t>(m) * dim_a_ + a) * dim_m_ + out];
}

Rational& Representation::theta1(int r, int a, int m, int out) {
  auto& t = (r == 1) ? t1_prec_ : t1_succ_;
  return t[(static_cast<size_t>(a) * dim_m_ + m) * dim_m_ + out];
}

Rational& Representation::theta2(int r, int m, int a, int out) {
  auto& t = (r == 1) ? t2_prec_ : t2_succ_;
  return t[(static_cast<size_t>(m) * dim_a_ + a) * dim_m_ + out];
}

const std::vector<Rational>& Representation::tensor(int which) const {
  switch (which) {
    case 0: return t1_prec_;
    case 1: return t1_succ_;
    case 2: return t2_prec_;
    default: return t2_succ_;
  }
}

RationalVector Representation::theta1_vec(int r, const RationalVector& a,
                                          const RationalVector& m) const {
  return contract2((r == 1) ? t1_prec_ : t1_succ_, dim_a_, dim_m_, dim_m_, a, m);
}

RationalVector Representation::theta2_vec(int r, const RationalVector& m,
                                          const RationalVector& a) const {
  return contract2((r == 1) ? t2_prec_ : t2_succ_, dim_m_, dim_a_, dim_m_, m, a);
}

namespace {
// Linear extensions over a LabelSum for the compact-form evaluation.
RationalVector theta1_sum(const Representation& rep, const LabelSum& xi, const RationalVector& a,
                          const RationalVector& m) {
  RationalVector out = RationalVector::Zero(rep.dim_m());
  for (const auto& [r, c] : xi.terms) out += c * rep.theta1_vec(r, a, m);
  return out;
}
RationalVector theta2_sum(const Representation& rep, const LabelSum& xi, const RationalVector& m,
                          const RationalVector& a) {
  RationalVector out = RationalVector::Zero(rep.dim_m());
  for (const auto& [r, c] : xi.terms) out += c * rep.theta2_vec(r, m, a);
  return out;
}
RationalVector pi_sum(const DendriformAlgebra& alg, const LabelSum& xi, const RationalVector& a,
                      const RationalVector& b) {
  RationalVector out = RationalVector::Zero(alg.dim());
  for (const auto& [r, c] : xi.terms) {
    out += c * ((r == 1) ? alg.prec_vec(a, b) : alg.succ_vec(a, b));
  }
  return out;
}
}  // namespace

CheckReport check_representation(const DendriformAlgebra& algebra, const Representation& rep) {
  if (rep.dim_a() != algebra.dim()) throw std::invalid_argument("check_representation: dim mismatch");
  const int d = algebra.dim();
  const int dm = rep.dim_m();
  CheckReport report;

  // The 9 raw identities, residuals as LHS - RHS.
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      for (int z = 0; z < dm; ++z) {
        RationalVector a = basis_vec(d, x), b = basis_vec(d, y), m = basis_vec(dm, z);
        RationalVector ab_p = algebra.prec_vec(a, b), ab_s = algebra.succ_vec(a, b);
        RationalVector bm_p = rep.theta1_vec(1, b, m), bm_s = rep.theta1_vec(2, b, m);
        report.add("rep-1", {x, y, z},
                   rep.theta1_vec(1, ab_p, m) - rep.theta1_vec(1, a, bm_p) - rep.theta1_vec(1, a, bm_s));
        report.add("rep-2", {x, y, z},
                   rep.theta1_vec(1, ab_s, m) - rep.theta1_vec(2, a, bm_p));
        report.add("rep-3", {x, y, z},
                   rep.theta1_vec(2, ab_p + ab_s, m) - rep.theta1_vec(2, a, bm_s));
      }
    }
  }
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < dm; ++y) {
      for (int z = 0; z < d; ++z) {
        RationalVector a = basis_vec(d, x), m = basis_vec(dm, y), c = basis_vec(d, z);
        RationalVector am_p = rep.theta1_vec(1, a, m), am_s = rep.theta1_vec(2, a, m);
        RationalVector mc_p = rep.theta2_vec(1, m, c), mc_s = rep.theta2_vec(2, m, c);
        report.add("rep-4", {x, y, z},
                   rep.theta2_vec(1, am_p, c) - rep.theta1_vec(1, a, mc_p) - rep.theta1_vec(1, a, mc_s));
        report.add("rep-5", {x, y, z},
                   rep.theta2_vec(1, am_s, c) - rep.theta1_vec(2, a, mc_p));
        report.add("rep-6", {x, y, z},
                   rep.theta2_vec(2, am_p + am_s, c) - rep.theta1_vec(2, a, mc_s));
      }
    }
  }
  for (int x = 0; x < dm; ++x) {
    for (int y = 0; y < d; ++y) {
      for (int z = 0; z < d; ++z) {
        RationalVector m = basis_vec(dm, x), b = basis_vec(d, y), c = basis_vec(d, z);
        RationalVector mb_p = rep.theta2_vec(1, m, b), mb_s = rep.theta2_vec(2, m, b);
        RationalVector bc_p = algebra.prec_vec(b, c), bc_s = algebra.succ_vec(b, c);
        report.add("rep-7", {x, y, z},
                   rep.theta2_vec(1, mb_p, c) - rep.theta2_vec(1, m, bc_p) - rep.theta2_vec(1, m, bc_s));
        report.add("rep-8", {x, y, z},
                   rep.theta2_vec(1, mb_s, c) - rep.theta2_vec(2, m, bc_p));
        report.add("rep-9", {x, y, z},
                   rep.theta2_vec(2, mb_p + mb_s, c) - rep.theta2_vec(2, m, bc_s));
      }
    }
  }

  // Compact form: the three displayed identities over [s] in C_3 must agree
  // with the raw families above. We evaluate them independently and require
  // both routes to produce the same verdicts.
  for (int s = 1; s <= 3; ++s) {
    const int left_outer = r_zero(2, 2, 2, s);
    const LabelSum left_inner = r_inner(2, 2, 2, s);
    const int right_outer = r_zero(2, 1, 2, s);
    const LabelSum right_inner = r_inner(2, 1, 2, s);
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < d; ++y) {
        for (int z = 0; z < dm; ++z) {
          RationalVector a = basis_vec(d, x), b = basis_vec(d, y), m = basis_vec(dm, z);
          report.add("compact-1", {s, x, y, z},
                     rep.theta1_vec(left_outer, a, theta1_sum(rep, left_inner, b, m)) -
                         rep.theta1_vec(right_outer, pi_sum(algebra, right_inner, a, b), m));
        }
      }
    }
    for (int x = 0; x < d; ++x) {
      for (int y = 0; y < dm; ++y) {
        for (int z = 0; z < d; ++z) {
          RationalVector a = basis_vec(d, x), m = basis_vec(dm, y), c = basis_vec(d, z);
          report.add("compact-2", {s, x, y, z},
                     rep.theta1_vec(left_outer, a, theta2_sum(rep, left_inner, m, c)) -
                         rep.theta2_vec(right_outer, theta1_sum(rep, right_inner, a, m), c));
        }
      }
    }
    for (int x = 0; x < dm; ++x) {
      for (int y = 0; y < d; ++y) {
        for (int z = 0; z < d; ++z) {
          RationalVector m = basis_vec(dm, x), b = basis_vec(d, y), c = basis_vec(d, z);
          report.add("compact-3", {s, x, y, z},
                     rep.theta2_vec(left_outer, m, pi_sum(algebra, left_inner, b, c)) -
                         rep.theta2_vec(right_outer, theta2_sum(rep, right_inner, m, b), c));
        }
      }
    }
  }
  return report;
}

AssociativeAlgebra associated_associative(const DendriformAlgebra& algebra) {
  const int d = algebra.dim();
  std::vector<Rational> mult(static_cast<size_t>(d) * d * d);
  for (size_t i = 0; i < mult.size(); ++i) {
    mult[i] = algebra.prec_tensor()[i] + algebra.succ_tensor()[i];
  }
  return AssociativeAlgebra(d, std::move(mult));
}

RationalVector AssocBimodule::left_vec(const RationalVector& a, const RationalVector& m) const {
  return contract2(left, dim_a, dim_m, dim_m, a, m);
}

RationalVector AssocBimodule::right_vec(const RationalVector& m, const RationalVector& a) const {
  return contract2(right, dim_m, dim_a, dim_m, m, a);
}

AssocBimodule rep_to_assoc_rep(const DendriformAlgebra& algebra, const Representation& rep) {
  AssocBimodule bimod;
  bimod.dim_a = rep.dim_a();
  bimod.dim_m = rep.dim_m();
  const size_t n = static_cast<size_t>(bimod.dim_a) * bimod.dim_m * bimod.dim_m;
  bimod.left.resize(n);
  bimod.right.resize(n);
  for (size_t i = 0; i < n; ++i) {
    bimod.left[i] = rep.tensor(0)[i] + rep.tensor(1)[i];
    bimod.right[i] = rep.tensor(2)[i] + rep.tensor(3)[i];
  }
  return bimod;
}

CheckReport check_bimodule(const AssociativeAlgebra& algebra, const AssocBimodule& bimod) {
  const int d = algebra.dim();
  const int dm = bimod.dim_m;
  CheckReport report;
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      RationalVector a = basis_vec(d, x), b = basis_vec(d, y);
      for (int z = 0; z < dm; ++z) {
        RationalVector m = basis_vec(dm, z);
        report.add("bimodule-left", {x, y, z},
                   bimod.left_vec(algebra.mult_vec(a, b), m) -
                       bimod.left_vec(a, bimod.left_vec(b, m)));
        report.add("bimodule-middle", {x, z, y},
                   bimod.right_vec(bimod.left_vec(a, m), b) -
                       bimod.left_vec(a, bimod.right_vec(m, b)));
        report.add("bimodule-right", {z, x, y},
                   bimod.right_vec(bimod.right_vec(m, a), b) -
                       bimod.right_vec(m, algebra.mult_vec(a, b)));
      }
    }
  }
  return report;
}

DendriformAlgebra semidirect(const DendriformAlgebra& algebra, const Representation& rep) {
  if (rep.dim_a() != algebra.dim()) throw std::invalid_argument("semidirect: dim mismatch");
  if (!algebra.valid() || !check_representation(algebra, rep).ok) {
    throw std::invalid_argument("semidirect: invalid representation");
  }
  const int d = algebra.dim();
  const int dm = rep.dim_m();
  const int total = d + dm;
  DendriformAlgebra result = DendriformAlgebra::zero(total);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        result.prec(i, j, k) = algebra.prec(i, j, k);
        result.succ(i, j, k) = algebra.succ(i, j, k);
      }
    }
  }
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < dm; ++j) {
      for (int k = 0; k < dm; ++k) {
        result.prec(i, d + j, d + k) = rep.theta1(1, i, j, k);
        result.succ(i, d + j, d + k) = rep.theta1(2, i, j, k);
        result.prec(d + j, i, d + k) = rep.theta2(1, j, i, k);
        result.succ(d + j, i, d + k) = rep.theta2(2, j, i, k);
      }
    }
  }
  return result;
}

CheckReport check_rota_baxter(const AssociativeAlgebra& algebra, const RationalMatrix& op) {
  const int d = algebra.dim();
  if (op.rows() != d || op.cols() != d) {
    throw std::invalid_argument("check_rota_baxter: operator shape mismatch");
  }
  CheckReport report;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      RationalVector a = basis_vec(d, i), b = basis_vec(d, j);
      RationalVector ra = op * a, rb = op * b;
      report.add("rota-baxter", {i, j},
                 algebra.mult_vec(ra, rb) -
                     op * (algebra.mult_vec(a, rb) + algebra.mult_vec(ra, b)));
    }
  }
  return report;
}

DendriformAlgebra aguiar(const AssociativeAlgebra& algebra, const RationalMatrix& op) {
  if (!check_rota_baxter(algebra, op).ok) {
    throw std::invalid_argument("aguiar: operator fails the Rota-Baxter identity");
  }
  const int d = algebra.dim();
  DendriformAlgebra result = DendriformAlgebra::zero(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      RationalVector a = basis_vec(d, i), b = basis_vec(d, j);
      RationalVector pv = algebra.mult_vec(a, op * b);
      RationalVector sv = algebra.mult_vec(op * a, b);
      for (int k = 0; k < d; ++k) {
        result.prec(i, j, k) = pv(k);
        result.succ(i, j, k) = sv(k);
      }
    }
  }
  return result;
}

}  // namespace dendro
