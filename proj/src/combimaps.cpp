#include "dendro/combimaps.hpp"

#include <stdexcept>

namespace dendro {

namespace {
void check_args(int m, int i, int n, int r) {
  if (m < 1 || n < 1 || i < 1 || i > m) throw std::out_of_range("R map: bad (m, i, n)");
  if (r < 1 || r > m + n - 1) throw std::out_of_range("R map: label index out of range");
}
}  // namespace

LabelSum label_singleton(int n, int r) {
  if (r < 1 || r > n) throw std::out_of_range("label index out of range");
  return LabelSum{n, {{r, Rational(1)}}};
}

LabelSum label_full_sum(int n) {
  LabelSum s{n, {}};
  s.terms.reserve(n);
  for (int r = 1; r <= n; ++r) s.terms.emplace_back(r, Rational(1));
  return s;
}

int r_zero(int m, int i, int n, int r) {
  check_args(m, i, n, r);
  if (r <= i - 1) return r;
  if (r <= i + n - 1) return i;
  return r - n + 1;
}

LabelSum r_inner(int m, int i, int n, int r) {
  check_args(m, i, n, r);
  if (r >= i && r <= i + n - 1) return label_singleton(n, r - (i - 1));
  return label_full_sum(n);
}

}  // namespace dendro
