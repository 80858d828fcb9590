#pragma once

#include "dendro/rational.hpp"

#include <vector>

namespace dendro {

/// A single element [r] of the label set C_n = { [1], ..., [n] }.
/// Labels are 1-based everywhere; 0-based conversion happens only at
/// tensor-index boundaries.
struct Label {
  int n = 1;
  int r = 1;
};

/// A K-linear combination of labels in C_n, the value space of the R_i maps.
struct LabelSum {
  int n = 1;
  std::vector<std::pair<int, Rational>> terms;  // (label index, coefficient)
};

LabelSum label_singleton(int n, int r);
LabelSum label_full_sum(int n);  // [1] + [2] + ... + [n]

/// R_0(m; 1,...,1,n,1,...,1) : C_{m+n-1} -> C_m with the n-block in slot i.
/// Piecewise: [r] below the block, [i] inside, [r-n+1] above.
int r_zero(int m, int i, int n, int r);

/// R_i(m; 1,...,1,n,1,...,1) : C_{m+n-1} -> K[C_n]. The full sum outside the
/// block, the singleton [r-(i-1)] inside.
LabelSum r_inner(int m, int i, int n, int r);

}  // namespace dendro
