#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "satake_fold/root_datum.hpp"

namespace satake_fold {

/// Default cap on the number of reduced words enumerated for one element.
/// Overridden by the SATAKE_FOLD_MAX_WORDS environment variable.
std::size_t default_word_cap();

struct WeylElement {
  Word canonical_word;  // shortlex-minimal reduced word
  IntMatrix matrix;     // action on coweights
};

struct BraidNeighbor {
  std::size_t position;  // 0-based start of the window
  int order;             // m(a, b)
  Word word;
};

/// Every word obtained from `word` by one braid substitution.
std::vector<BraidNeighbor> braid_neighbors(const IntMatrix& cartan, const Word& word);

/// The finite Weyl group of a root system, enumerated as a table. Elements are
/// addressed by index in (length, shortlex) order; index 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(RootSystem system, std::size_t max_elements = 1000000);

  const RootSystem& system() const { return system_; }
  std::size_t size() const { return elements_.size(); }
  int rank() const { return static_cast<int>(system_.rank()); }

  const WeylElement& element(int w) const { return elements_[static_cast<std::size_t>(w)]; }
  const Word& word(int w) const { return element(w).canonical_word; }
  int length(int w) const { return static_cast<int>(word(w).size()); }
  int identity() const { return 0; }
  int longest() const { return static_cast<int>(elements_.size()) - 1; }
  int simple(int i) const { return right_[0][static_cast<std::size_t>(i)]; }

  /// w * s_i and s_i * w.
  int right_multiply(int w, int i) const { return right_[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)]; }
  int left_multiply(int i, int w) const { return left_[static_cast<std::size_t>(w)][static_cast<std::size_t>(i)]; }
  int multiply(int a, int b) const;
  int inverse(int w) const { return inverse_[static_cast<std::size_t>(w)]; }

  /// Product s_{i_1} ... s_{i_k}.
  int evaluate(const Word& word) const;
  bool is_reduced(const Word& word) const;
  /// Index of the element with this coweight matrix, or -1.
  int find(const IntMatrix& matrix) const;

  Coweight apply(int w, const Coweight& x) const { return element(w).matrix * x; }
  RationalCoweight apply(int w, const RationalCoweight& x) const;
  /// Contragredient action on X, so that <w x, w y> = <x, y>.
  Weight apply_weight(int w, const Weight& x) const;

  /// All reduced words of w, lexicographically sorted. Throws
  /// SizeGuardExceeded if there are more than `cap`.
  std::vector<Word> reduced_words(int w, std::size_t cap) const;
  std::vector<Word> reduced_words(int w) const { return reduced_words(w, default_word_cap()); }
  std::size_t count_reduced_words(int w) const;

  /// lambda <=_w mu: w^{-1} lambda <= w^{-1} mu.
  bool le_w(int w, const Coweight& lambda, const Coweight& mu, ConeMode mode) const;

  /// Apply a permutation of the simple indices to the canonical word.
  int relabel(int w, const std::vector<int>& perm) const;

 private:
  std::vector<Integer> key(const IntMatrix& m) const;

  RootSystem system_;
  Coweight probe_;  // regular coweight; its orbit separates elements
  std::vector<IntMatrix> reflections_;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<int>> right_;
  std::vector<std::vector<int>> left_;
  std::vector<int> inverse_;
  std::map<std::vector<Integer>, int> index_;
};

// Free-function forms.
std::vector<WeylElement> group_elements(const RootDatum& datum);
WeylElement longest_element(const RootDatum& datum);
std::vector<Word> reduced_words(const RootDatum& datum, const Word& w);

}  // namespace satake_fold
