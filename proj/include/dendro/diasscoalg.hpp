#pragma once

#include "dendro/homotopy.hpp"

#include <compare>
#include <map>
#include <utility>
#include <vector>

namespace dendro {

/// Basis word of TV (x) V (x) TV: letters are global basis indices of the
/// underlying graded space. The TV factors may be empty; the middle letter is
/// always present.
struct TensorWord {
  std::vector<int> left;
  int mid = 0;
  std::vector<int> right;

  int weight() const { return static_cast<int>(left.size() + right.size()) + 1; }
  auto operator<=>(const TensorWord&) const = default;
};

/// Words of weight <= bound, ordered by weight, then left length, then
/// lexicographic letters.
std::vector<TensorWord> enumerate_words(const GradedSpace& space, int weight_bound);

/// Words of exactly the given weight, same ordering.
std::vector<TensorWord> words_of_weight(const GradedSpace& space, int weight);

using WordPair = std::pair<TensorWord, TensorWord>;

/// Pure splits of the right / left tail; every term has coefficient 1.
std::vector<WordPair> delta1(const TensorWord& w);
std::vector<WordPair> delta2(const TensorWord& w);

/// The five coassociativity-type identities on every word up to the bound.
CheckReport check_coalgebra_axioms(const GradedSpace& space, int weight_bound);

/// Weight-truncated free diassociative coalgebra with an enumerated basis.
class DiassCoalgebra {
 public:
  DiassCoalgebra(GradedSpace space, int weight_bound);

  const GradedSpace& space() const { return space_; }
  int weight_bound() const { return weight_bound_; }
  const std::vector<TensorWord>& words() const { return words_; }
  int index_of(const TensorWord& w) const;
  int word_degree(const TensorWord& w) const;

  /// Coderivation lift of the arity-k labels of a degree-(-1) system.
  RationalMatrix lift(const GradedDendSystem& rho, int k) const;
  /// D = sum of the lifts over k <= arity bound.
  RationalMatrix lift_all(const GradedDendSystem& rho) const;

  /// Both coderivation identities for a candidate degree-(-1) matrix.
  CheckReport coderivation_property(const RationalMatrix& d) const;

  /// Lemma 4.6: residual of rho_j-tilde o rho_i-tilde against the R-routed
  /// right hand side, on one weight-(i+j-1) word. Returned over the space
  /// basis (both sides land in V).
  RationalVector coder_lemma_residual(const GradedDendSystem& rho, int i, int j,
                                      const TensorWord& w) const;

 private:
  std::vector<std::pair<TensorWord, Rational>> apply_lift(const GradedDendSystem& rho, int k,
                                                          const TensorWord& w) const;

  GradedSpace space_;
  int weight_bound_;
  std::vector<TensorWord> words_;
  std::map<TensorWord, int> index_;
};

}  // namespace dendro
