#include "dendro/diasscoalg.hpp"

#include "dendro/combimaps.hpp"

#include <stdexcept>

namespace dendro {

namespace {

void enumerate_letters(const GradedSpace& space, int count, std::vector<int>& current,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == count) {
    out.push_back(current);
    return;
  }
  for (int v = 0; v < space.total(); ++v) {
    current.push_back(v);
    enumerate_letters(space, count, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<int>> all_letter_strings(const GradedSpace& space, int count) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  enumerate_letters(space, count, current, out);
  return out;
}

}  // namespace

std::vector<TensorWord> enumerate_words(const GradedSpace& space, int weight_bound) {
  if (weight_bound < 1) throw std::invalid_argument("enumerate_words: weight bound");
  std::vector<TensorWord> words;
  const int t_dim = space.total();
  for (int w = 1; w <= weight_bound; ++w) {
    for (int p = 0; p <= w - 1; ++p) {
      const int q = w - 1 - p;
      for (const auto& left : all_letter_strings(space, p)) {
        for (int mid = 0; mid < t_dim; ++mid) {
          for (const auto& right : all_letter_strings(space, q)) {
            words.push_back({left, mid, right});
            if (words.size() > 20000) {
              throw std::runtime_error("enumerate_words: basis cap exceeded");
            }
          }
        }
      }
    }
  }
  return words;
}

std::vector<TensorWord> words_of_weight(const GradedSpace& space, int weight) {
  std::vector<TensorWord> out;
  for (auto& w : enumerate_words(space, weight)) {
    if (w.weight() == weight) out.push_back(std::move(w));
  }
  return out;
}

std::vector<WordPair> delta1(const TensorWord& w) {
  std::vector<WordPair> out;
  const int m = static_cast<int>(w.right.size());
  for (int i = 0; i + 1 <= m; ++i) {
    for (int j = 0; i + j + 1 <= m; ++j) {
      TensorWord first{w.left, w.mid, {w.right.begin(), w.right.begin() + i}};
      TensorWord second{{w.right.begin() + i, w.right.begin() + i + j},
                        w.right[i + j],
                        {w.right.begin() + i + j + 1, w.right.end()}};
      out.push_back({std::move(first), std::move(second)});
    }
  }
  return out;
}

std::vector<WordPair> delta2(const TensorWord& w) {
  std::vector<WordPair> out;
  const int n = static_cast<int>(w.left.size());
  for (int i = 0; i + 1 <= n; ++i) {
    for (int j = 0; i + j + 1 <= n; ++j) {
      TensorWord first{{w.left.begin(), w.left.begin() + i},
                       w.left[i],
                       {w.left.begin() + i + 1, w.left.begin() + i + j + 1}};
      TensorWord second{{w.left.begin() + i + j + 1, w.left.end()}, w.mid, w.right};
      out.push_back({std::move(first), std::move(second)});
    }
  }
  return out;
}

CheckReport check_coalgebra_axioms(const GradedSpace& space, int weight_bound) {
  CheckReport report;
  using Triple = std::tuple<TensorWord, TensorWord, TensorWord>;
  auto left_expand = [](const std::vector<WordPair>& pairs, auto delta) {
    std::map<Triple, Rational> acc;
    for (const auto& [x, y] : pairs) {
      for (const auto& [a, b] : delta(x)) acc[{a, b, y}] += 1;
    }
    return acc;
  };
  auto right_expand = [](const std::vector<WordPair>& pairs, auto delta) {
    std::map<Triple, Rational> acc;
    for (const auto& [x, y] : pairs) {
      for (const auto& [a, b] : delta(y)) acc[{x, a, b}] += 1;
    }
    return acc;
  };
  auto diff_size = [](std::map<Triple, Rational> lhs, const std::map<Triple, Rational>& rhs) {
    for (const auto& [k, v] : rhs) lhs[k] -= v;
    int n = 0;
    for (const auto& [k, v] : lhs) {
      if (v != 0) ++n;
    }
    return n;
  };
  const auto words = enumerate_words(space, weight_bound);
  for (size_t wi = 0; wi < words.size(); ++wi) {
    const auto d1 = delta1(words[wi]);
    const auto d2 = delta2(words[wi]);
    auto check = [&](const char* name, int mismatches) {
      RationalVector res = RationalVector::Zero(mismatches == 0 ? 0 : 1);
      if (mismatches != 0) res(0) = mismatches;
      report.add(name, {static_cast<int>(wi)}, res);
    };
    check("coassoc-1", diff_size(right_expand(d1, delta1), left_expand(d1, delta1)));
    check("coassoc-2", diff_size(left_expand(d1, delta1), right_expand(d1, delta2)));
    check("coassoc-3", diff_size(left_expand(d1, delta2), right_expand(d2, delta1)));
    check("coassoc-4", diff_size(left_expand(d2, delta1), right_expand(d2, delta2)));
    check("coassoc-5", diff_size(right_expand(d2, delta2), left_expand(d2, delta2)));
  }
  return report;
}

DiassCoalgebra::DiassCoalgebra(GradedSpace space, int weight_bound)
    : space_(std::move(space)), weight_bound_(weight_bound),
      words_(enumerate_words(space_, weight_bound)) {
  for (size_t i = 0; i < words_.size(); ++i) index_[words_[i]] = static_cast<int>(i);
}

int DiassCoalgebra::index_of(const TensorWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw std::out_of_range("DiassCoalgebra::index_of");
  return it->second;
}

int DiassCoalgebra::word_degree(const TensorWord& w) const {
  int deg = space_.degree_of(w.mid);
  for (int v : w.left) deg += space_.degree_of(v);
  for (int v : w.right) deg += space_.degree_of(v);
  return deg;
}

std::vector<std::pair<TensorWord, Rational>> DiassCoalgebra::apply_lift(
    const GradedDendSystem& rho, int k, const TensorWord& w) const {
  std::vector<std::pair<TensorWord, Rational>> out;
  const int t_dim = space_.total();
  const int n = static_cast<int>(w.left.size());
  const int m = static_cast<int>(w.right.size());
  std::vector<int> args(k);

  auto deg_prefix = [&](const std::vector<int>& letters, int count) {
    int d = 0;
    for (int s = 0; s < count; ++s) d += space_.degree_of(letters[s]);
    return d;
  };

  // Family (1): a block of k left letters becomes one left letter.
  for (int l = 0; l + k <= n; ++l) {
    const int sign = (deg_prefix(w.left, l) % 2 == 0) ? 1 : -1;
    for (int s = 0; s < k; ++s) args[s] = w.left[l + s];
    for (int i = 1; i <= k; ++i) {
      // Sub-word with i-1 left letters carries label [i].
      const GradedOp& op = rho.op(k, i);
      const int idx = op.tuple_index(args);
      for (int o = 0; o < t_dim; ++o) {
        const Rational& c = op.at(o, idx);
        if (c == 0) continue;
        TensorWord res;
        res.left.assign(w.left.begin(), w.left.begin() + l);
        res.left.push_back(o);
        res.left.insert(res.left.end(), w.left.begin() + l + k, w.left.end());
        res.mid = w.mid;
        res.right = w.right;
        out.push_back({std::move(res), Rational(sign) * c});
      }
    }
  }

  // Family (2): the last i-1 left letters, the middle, and the first k-i
  // right letters become the new middle.
  for (int i = 1; i <= k; ++i) {
    const int j = k + 1 - i;
    if (i - 1 > n || j - 1 > m) continue;
    const int keep_left = n - (i - 1);
    const int sign = (deg_prefix(w.left, keep_left) % 2 == 0) ? 1 : -1;
    for (int s = 0; s < i - 1; ++s) args[s] = w.left[keep_left + s];
    args[i - 1] = w.mid;
    for (int s = 0; s < j - 1; ++s) args[i + s] = w.right[s];
    const GradedOp& op = rho.op(k, i);
    const int idx = op.tuple_index(args);
    for (int o = 0; o < t_dim; ++o) {
      const Rational& c = op.at(o, idx);
      if (c == 0) continue;
      TensorWord res;
      res.left.assign(w.left.begin(), w.left.begin() + keep_left);
      res.mid = o;
      res.right.assign(w.right.begin() + (j - 1), w.right.end());
      out.push_back({std::move(res), Rational(sign) * c});
    }
  }

  // Family (3): a block of k right letters becomes one right letter.
  const int head_deg = word_degree({w.left, w.mid, {}});
  for (int l = 0; l + k <= m; ++l) {
    const int sign = ((head_deg + deg_prefix(w.right, l)) % 2 == 0) ? 1 : -1;
    for (int s = 0; s < k; ++s) args[s] = w.right[l + s];
    for (int i = 1; i <= k; ++i) {
      const GradedOp& op = rho.op(k, i);
      const int idx = op.tuple_index(args);
      for (int o = 0; o < t_dim; ++o) {
        const Rational& c = op.at(o, idx);
        if (c == 0) continue;
        TensorWord res;
        res.left = w.left;
        res.mid = w.mid;
        res.right.assign(w.right.begin(), w.right.begin() + l);
        res.right.push_back(o);
        res.right.insert(res.right.end(), w.right.begin() + l + k, w.right.end());
        out.push_back({std::move(res), Rational(sign) * c});
      }
    }
  }
  return out;
}

RationalMatrix DiassCoalgebra::lift(const GradedDendSystem& rho, int k) const {
  for (int r = 1; r <= k; ++r) {
    if (rho.op(k, r).degree != -1) throw std::invalid_argument("lift: ops must have degree -1");
  }
  const int n = static_cast<int>(words_.size());
  RationalMatrix d = RationalMatrix::Zero(n, n);
  for (int c = 0; c < n; ++c) {
    for (const auto& [word, coeff] : apply_lift(rho, k, words_[c])) {
      d(index_of(word), c) += coeff;
    }
  }
  return d;
}

RationalMatrix DiassCoalgebra::lift_all(const GradedDendSystem& rho) const {
  const int n = static_cast<int>(words_.size());
  RationalMatrix d = RationalMatrix::Zero(n, n);
  for (int k = 1; k <= rho.arity_bound; ++k) d += lift(rho, k);
  return d;
}

CheckReport DiassCoalgebra::coderivation_property(const RationalMatrix& d) const {
  CheckReport report;
  const int n = static_cast<int>(words_.size());
  if (d.rows() != n || d.cols() != n) {
    throw std::invalid_argument("coderivation_property: matrix shape");
  }
  using Pair = WordPair;
  for (int c = 0; c < n; ++c) {
    for (int which = 0; which < 2; ++which) {
      auto delta = which == 0 ? delta1 : delta2;
      std::map<Pair, Rational> lhs;
      for (int o = 0; o < n; ++o) {
        if (d(o, c) == 0) continue;
        for (const auto& p : delta(words_[o])) lhs[p] += d(o, c);
      }
      std::map<Pair, Rational> rhs;
      for (const auto& [x, y] : delta(words_[c])) {
        const int xi = index_of(x), yi = index_of(y);
        for (int o = 0; o < n; ++o) {
          if (d(o, xi) != 0) rhs[{words_[o], y}] += d(o, xi);
        }
        // Koszul sign: d has degree -1, so id (x) d picks up (-1)^{|x|}.
        const Rational koszul = (word_degree(x) % 2 == 0) ? 1 : -1;
        for (int o = 0; o < n; ++o) {
          if (d(o, yi) != 0) rhs[{x, words_[o]}] += koszul * d(o, yi);
        }
      }
      for (const auto& [k, v] : rhs) lhs[k] -= v;
      int mism = 0;
      for (const auto& [k, v] : lhs) {
        if (v != 0) ++mism;
      }
      RationalVector res = RationalVector::Zero(mism == 0 ? 0 : 1);
      if (mism != 0) res(0) = mism;
      report.add(which == 0 ? "coder-delta1" : "coder-delta2", {c}, res);
    }
  }
  return report;
}

RationalVector DiassCoalgebra::coder_lemma_residual(const GradedDendSystem& rho, int i, int j,
                                                    const TensorWord& w) const {
  const int n = i + j - 1;
  if (w.weight() != n) throw std::invalid_argument("coder_lemma_residual: weight mismatch");
  const int t_dim = space_.total();
  const int r = static_cast<int>(w.left.size()) + 1;

  RationalVector lhs = RationalVector::Zero(t_dim);
  for (const auto& [mid_word, coeff] : apply_lift(rho, i, w)) {
    for (const auto& [final_word, coeff2] : apply_lift(rho, j, mid_word)) {
      if (final_word.weight() != 1) continue;
      lhs(final_word.mid) += coeff * coeff2;
    }
  }

  std::vector<int> letters(w.left);
  letters.push_back(w.mid);
  letters.insert(letters.end(), w.right.begin(), w.right.end());

  RationalVector rhs = RationalVector::Zero(t_dim);
  std::vector<int> outer(j);
  for (int lam = 1; lam <= j; ++lam) {
    int prefix_deg = 0;
    for (int s = 0; s < lam - 1; ++s) prefix_deg += space_.degree_of(letters[s]);
    const int sign = (prefix_deg % 2 == 0) ? 1 : -1;
    const LabelSum ls = r_inner(j, lam, i, r);
    RationalVector inner = RationalVector::Zero(t_dim);
    std::vector<int> inner_args(letters.begin() + (lam - 1), letters.begin() + (lam - 1 + i));
    for (const auto& [lab, c] : ls.terms) {
      const GradedOp& op = rho.op(i, lab);
      const int idx = op.tuple_index(inner_args);
      for (int t = 0; t < t_dim; ++t) inner(t) += c * op.at(t, idx);
    }
    const GradedOp& op = rho.op(j, r_zero(j, lam, i, r));
    for (int s = 0; s < lam - 1; ++s) outer[s] = letters[s];
    for (int s = lam; s < j; ++s) outer[s] = letters[s + i - 1];
    for (int t = 0; t < t_dim; ++t) {
      if (inner(t) == 0) continue;
      outer[lam - 1] = t;
      const int idx = op.tuple_index(outer);
      for (int o = 0; o < t_dim; ++o) rhs(o) += Rational(sign) * inner(t) * op.at(o, idx);
    }
  }
  return lhs - rhs;
}

}  // namespace dendro
