#include "dendro/multimap.hpp"

#include <stdexcept>

namespace dendro {

namespace {
int pow_int(int base, int exp) {
  int v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}
}  // namespace

bool next_tuple(std::vector<int>& tuple, int base) {
  for (int pos = static_cast<int>(tuple.size()) - 1; pos >= 0; --pos) {
    if (++tuple[pos] < base) return true;
    tuple[pos] = 0;
  }
  return false;
}

MultiMap::MultiMap(int arity, int dim_in, int dim_out)
    : arity_(arity), dim_in_(dim_in), dim_out_(dim_out), tuples_(pow_int(dim_in, arity)) {
  if (arity < 1 || dim_in < 0 || dim_out < 0) throw std::invalid_argument("MultiMap: bad shape");
  data_.assign(static_cast<size_t>(arity_) * dim_out_ * tuples_, Rational(0));
}

MultiMap MultiMap::identity(int dim) {
  MultiMap id(1, dim, dim);
  for (int i = 0; i < dim; ++i) id.coeff(1, i, i) = 1;
  return id;
}

int MultiMap::tuple_index(std::span<const int> in) const {
  if (static_cast<int>(in.size()) != arity_) throw std::invalid_argument("MultiMap: tuple size");
  int idx = 0;
  for (int v : in) {
    if (v < 0 || v >= dim_in_) throw std::out_of_range("MultiMap: basis index");
    idx = idx * dim_in_ + v;
  }
  return idx;
}

Rational& MultiMap::coeff(int label, int out, int tuple) {
  if (label < 1 || label > arity_) throw std::out_of_range("MultiMap: label");
  return data_[(static_cast<size_t>(label - 1) * dim_out_ + out) * tuples_ + tuple];
}

const Rational& MultiMap::coeff(int label, int out, int tuple) const {
  if (label < 1 || label > arity_) throw std::out_of_range("MultiMap: label");
  return data_[(static_cast<size_t>(label - 1) * dim_out_ + out) * tuples_ + tuple];
}

Rational& MultiMap::at(int label, int out, std::span<const int> in) {
  return coeff(label, out, tuple_index(in));
}

const Rational& MultiMap::at(int label, int out, std::span<const int> in) const {
  return coeff(label, out, tuple_index(in));
}

RationalVector MultiMap::eval_basis(int label, int tuple) const {
  RationalVector v(dim_out_);
  for (int out = 0; out < dim_out_; ++out) v(out) = coeff(label, out, tuple);
  return v;
}

RationalVector MultiMap::eval(const LabelSum& xi, const std::vector<RationalVector>& args) const {
  if (xi.n != arity_) throw std::invalid_argument("MultiMap::eval: label arity mismatch");
  if (static_cast<int>(args.size()) != arity_) throw std::invalid_argument("MultiMap::eval: argument count");
  for (const auto& a : args) {
    if (a.size() != dim_in_) throw std::invalid_argument("MultiMap::eval: argument dimension");
  }
  RationalVector acc = RationalVector::Zero(dim_out_);
  std::vector<int> tuple(arity_, 0);
  if (tuples_ == 0) return acc;
  do {
    Rational weight(1);
    for (int s = 0; s < arity_ && weight != 0; ++s) weight *= args[s](tuple[s]);
    if (weight == 0) continue;
    int idx = tuple_index(tuple);
    for (const auto& [r, c] : xi.terms) {
      for (int out = 0; out < dim_out_; ++out) acc(out) += c * weight * coeff(r, out, idx);
    }
  } while (next_tuple(tuple, dim_in_));
  return acc;
}

bool MultiMap::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

RationalVector MultiMap::to_vector() const {
  RationalVector v(static_cast<int>(data_.size()));
  for (size_t i = 0; i < data_.size(); ++i) v(static_cast<int>(i)) = data_[i];
  return v;
}

MultiMap MultiMap::from_vector(const RationalVector& v, int arity, int dim_in, int dim_out) {
  MultiMap f(arity, dim_in, dim_out);
  if (v.size() != static_cast<int>(f.data_.size())) {
    throw std::invalid_argument("MultiMap::from_vector: size mismatch");
  }
  for (int i = 0; i < v.size(); ++i) f.data_[i] = v(i);
  return f;
}

MultiMap& MultiMap::operator+=(const MultiMap& other) {
  if (arity_ != other.arity_ || dim_in_ != other.dim_in_ || dim_out_ != other.dim_out_) {
    throw std::invalid_argument("MultiMap: shape mismatch");
  }
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& other) {
  if (arity_ != other.arity_ || dim_in_ != other.dim_in_ || dim_out_ != other.dim_out_) {
    throw std::invalid_argument("MultiMap: shape mismatch");
  }
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

MultiMap& MultiMap::operator*=(const Rational& scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

bool MultiMap::operator==(const MultiMap& other) const {
  return arity_ == other.arity_ && dim_in_ == other.dim_in_ && dim_out_ == other.dim_out_ &&
         data_ == other.data_;
}

MultiMap partial_compose(const MultiMap& f, const MultiMap& g, int i) {
  const int m = f.arity();
  const int n = g.arity();
  if (i < 1 || i > m) throw std::out_of_range("partial_compose: slot out of range");
  if (g.dim_out() != f.dim_in() || g.dim_in() != f.dim_in()) {
    throw std::invalid_argument("partial_compose: dimension mismatch");
  }
  const int big = m + n - 1;
  const int d = f.dim_in();
  MultiMap result(big, d, f.dim_out());

  std::vector<int> tuple(big, 0);
  std::vector<int> f_tuple(m, 0);
  std::vector<int> g_tuple(n, 0);
  if (result.tuples() == 0) return result;
  for (int r = 1; r <= big; ++r) {
    const int r0 = r_zero(m, i, n, r);
    const LabelSum inner = r_inner(m, i, n, r);
    std::fill(tuple.begin(), tuple.end(), 0);
    do {
      for (int s = 0; s < n; ++s) g_tuple[s] = tuple[i - 1 + s];
      const int g_idx = g.tuple_index(g_tuple);
      for (int s = 0; s < i - 1; ++s) f_tuple[s] = tuple[s];
      for (int s = i; s < m; ++s) f_tuple[s] = tuple[s + n - 1];
      const int out_idx = result.tuple_index(tuple);
      for (int q = 0; q < d; ++q) {
        Rational g_val(0);
        for (const auto& [lab, c] : inner.terms) g_val += c * g.coeff(lab, q, g_idx);
        if (g_val == 0) continue;
        f_tuple[i - 1] = q;
        const int f_idx = f.tuple_index(f_tuple);
        for (int out = 0; out < f.dim_out(); ++out) {
          const Rational& fc = f.coeff(r0, out, f_idx);
          if (fc != 0) result.coeff(r, out, out_idx) += g_val * fc;
        }
      }
    } while (next_tuple(tuple, d));
  }
  return result;
}

MultiMap circle(const MultiMap& f, const MultiMap& g) {
  const int m = f.arity();
  const int n = g.arity();
  MultiMap acc(m + n - 1, f.dim_in(), f.dim_out());
  for (int i = 1; i <= m; ++i) {
    MultiMap term = partial_compose(f, g, i);
    if ((i - 1) * (n - 1) % 2 != 0) term *= Rational(-1);
    acc += term;
  }
  return acc;
}

MultiMap bracket(const MultiMap& f, const MultiMap& g) {
  MultiMap result = circle(f, g);
  MultiMap flip = circle(g, f);
  if ((f.arity() - 1) * (g.arity() - 1) % 2 == 0) {
    result -= flip;
  } else {
    result += flip;
  }
  return result;
}

MultiMap cup(const MultiMap& f, const MultiMap& g, const MultiMap& pi) {
  if (pi.arity() != 2) throw std::invalid_argument("cup: pi must have arity 2");
  return partial_compose(partial_compose(pi, g, 2), f, 1);
}

MultiMap d_pi(const MultiMap& f, const MultiMap& pi) {
  if (pi.arity() != 2) throw std::invalid_argument("d_pi: pi must have arity 2");
  MultiMap result = circle(pi, f);
  MultiMap tail = circle(f, pi);
  if ((f.arity() - 1) % 2 == 0) {
    result -= tail;
  } else {
    result += tail;
  }
  return result;
}

MultiplicationCheck is_multiplication(const MultiMap& pi) {
  if (pi.arity() != 2 || pi.dim_in() != pi.dim_out()) {
    throw std::invalid_argument("is_multiplication: expects arity 2 with dim_in = dim_out");
  }
  MultiMap residual = partial_compose(pi, pi, 1) - partial_compose(pi, pi, 2);
  return {residual.is_zero(), residual};
}

}  // namespace dendro
