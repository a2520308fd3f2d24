#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "satake_fold/folding.hpp"
#include "satake_fold/weyl.hpp"

namespace satake_fold {

/// Edge lengths of the path attached to a reduced word of w0.
struct LusztigDatum {
  Word word;
  std::vector<Integer> n;

  bool operator==(const LusztigDatum&) const = default;
};

struct PathVertices {
  Word word;
  std::vector<Coweight> steps;   // beta_k = -w_{k-1}(alpha_{i_k}^v)
  std::vector<Coweight> points;  // nu_0 = 0, ..., nu_l
};

/// nu_w for every w, indexed like the Weyl group table.
struct GGMSDatum {
  std::vector<Coweight> vertices;
};

/// Apply the braid move of order m at 0-based position k to the word and
/// transform n accordingly. Throws UnsupportedBraid for m >= 4 and
/// PreconditionError if the window does not admit the move.
LusztigDatum braid_transition(const IntMatrix& cartan, const LusztigDatum& datum, std::size_t k, int m);

/// All nonnegative integer vectors n with sum_k n_k columns[k] = target, in
/// lexicographically descending order. Columns must be nonnegative and nonzero.
std::vector<std::vector<Integer>> nonnegative_solutions(const std::vector<IntVector>& columns, const IntVector& target);

/// Lusztig data, paths, GGMS data and the polytope test over one Weyl group.
/// The group must outlive the calculator. Thread-safe; braid-graph searches
/// are memoized per source word.
class MvCalculator {
 public:
  explicit MvCalculator(const WeylGroup& group);

  const WeylGroup& group() const { return group_; }
  const RootSystem& system() const { return group_.system(); }

  std::vector<Coweight> steps(const Word& word) const;
  /// Coefficients of -beta_k in the simple coroots (nonnegative).
  std::vector<IntVector> step_coefficients(const Word& word) const;
  PathVertices path_vertices(const LusztigDatum& datum) const;
  Coweight coweight(const LusztigDatum& datum) const;

  /// Requires a simply-laced datum; throws UnsupportedBraid otherwise.
  LusztigDatum transport(const LusztigDatum& datum, const Word& target) const;
  GGMSDatum ggms(const LusztigDatum& datum) const;

  /// Whether the polytope of `datum` shifted by mu lies in Conv(W mu). The
  /// weight mu + coweight(datum) must lie in Wt(mu).
  bool is_mv(const LusztigDatum& datum, const Coweight& mu) const;

  /// All data on `word` with coweight nu; empty unless -nu is a nonnegative
  /// integer combination of simple coroots.
  std::vector<LusztigDatum> enumerate_data(const Word& word, const Coweight& nu) const;

  /// Multisets of positive coroots summing to -nu, counted by a recursion
  /// over the positive coroots that never looks at reduced words.
  Integer kostant(const Coweight& nu) const;

  /// Reduced word of w followed by one of w^{-1} w0.
  Word prefix_word(int w) const;

 private:
  struct Tree {
    std::vector<Word> words;  // BFS order from the source
    std::vector<int> parent;
    std::vector<std::size_t> position;
    std::vector<int> order;
    std::vector<std::vector<Coweight>> steps;
    std::map<Word, int> index;
  };

  void require_simply_laced() const;
  std::shared_ptr<const Tree> tree(const Word& source) const;
  std::optional<IntVector> negative_coroot_coordinates(const Coweight& nu) const;

  const WeylGroup& group_;
  mutable std::mutex mutex_;
  mutable std::map<Word, std::shared_ptr<const Tree>> trees_;
};

/// n is constant on every block of the sigma-compatible word.
bool is_sigma_invariant(const SigmaCompatibleWord& scw, const LusztigDatum& datum);
/// One entry per block, on the word of orbit indices.
LusztigDatum bar(const SigmaCompatibleWord& scw, const LusztigDatum& datum);
/// Inverse of bar: repeat each entry across its block.
LusztigDatum unbar(const SigmaCompatibleWord& scw, const std::vector<Integer>& folded);
/// Sigma-invariant data of coweight nu on the sigma-compatible word.
std::vector<LusztigDatum> enumerate_sigma_invariant_data(const MvCalculator& mv, const SigmaCompatibleWord& scw,
                                                         const Coweight& nu);

}  // namespace satake_fold
