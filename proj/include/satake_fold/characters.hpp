#pragma once

#include <map>
#include <vector>

#include "satake_fold/mv_calculus.hpp"

namespace satake_fold {

/// Finitely supported integer function on coweights; zero values are never stored.
struct CharPoly {
  std::map<Coweight, Integer, LexLess> terms;

  Integer operator[](const Coweight& x) const;
  void add(const Coweight& x, Integer m);
  Integer total() const;
  bool operator==(const CharPoly& other) const;
  /// Terms in coweight_order of `system`.
  std::vector<std::pair<Coweight, Integer>> sorted(const RootSystem& system) const;
};

/// Weight multiplicities of the irreducible module of highest weight mu for the
/// group whose roots are the coroots of `system`, by Freudenthal's recursion.
class FreudenthalTable {
 public:
  FreudenthalTable(const RootSystem& system, const Coweight& mu);

  const Coweight& highest_weight() const { return mu_; }
  /// 0 outside Wt(mu).
  Integer multiplicity(const Coweight& lambda) const;
  /// Dominant weights of Wt(mu) with their multiplicities.
  const std::map<Coweight, Integer, LexLess>& dominant() const { return dominant_; }

 private:
  const RootSystem& system_;
  Coweight mu_;
  std::map<Coweight, Integer, LexLess> dominant_;
};

Integer freudenthal_multiplicity(const RootSystem& system, const Coweight& mu, const Coweight& lambda);
Integer weyl_dimension(const RootSystem& system, const Coweight& mu);
CharPoly character(const RootSystem& system, const Coweight& mu);

/// lambda -> number of data of coweight lambda - mu on `word` passing is_mv.
/// Uses the canonical reduced word of w0 when `word` is empty.
CharPoly mv_character(const MvCalculator& mv, const Coweight& mu, const Word& word = {});

}  // namespace satake_fold
