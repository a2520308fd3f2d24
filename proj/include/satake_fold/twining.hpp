#pragma once

#include <memory>
#include <vector>

#include "satake_fold/characters.hpp"
#include "satake_fold/folding.hpp"
#include "satake_fold/mv_calculus.hpp"

namespace satake_fold {

struct TwiningRow {
  Coweight lambda;
  Integer lhs_trace = 0;  // sigma-invariant MV data
  Integer rhs_mult = 0;   // folded multiplicity
  bool pass = false;
};

/// A sigma-orbit of non-invariant weights; sigma permutes their weight
/// spaces, so they contribute nothing to the trace.
struct OrbitRow {
  std::vector<Coweight> orbit;
  Integer mult = 0;  // multiplicity of each member
};

struct TwiningReport {
  Coweight mu;
  Coweight folded_mu;
  std::vector<TwiningRow> rows;
  std::vector<OrbitRow> non_invariant;
  bool overall = true;
  Integer dimension = 0;
};

/// Everything needed to compare the two sides of the twining formula for one
/// (datum, sigma): the ambient Weyl group and MV calculus, the folded datum,
/// W^sigma and the default sigma-compatible word. Not copyable.
class TwiningContext {
 public:
  TwiningContext(const RootDatum& datum, PinnedAut sigma);
  TwiningContext(const TwiningContext&) = delete;
  TwiningContext& operator=(const TwiningContext&) = delete;

  const RootSystem& system() const { return group_->system(); }
  const WeylGroup& group() const { return *group_; }
  const MvCalculator& mv() const { return *mv_; }
  const PinnedAut& sigma() const { return sigma_; }
  const FoldedDatum& folded() const { return folded_; }
  const RootSystem& folded_system() const { return *folded_system_; }
  const FoldedWeyl& folded_weyl() const { return folded_weyl_; }
  const SigmaCompatibleWord& word() const { return word_; }

  /// Number of sigma-invariant data of coweight lambda - mu passing is_mv.
  Integer twining_trace(const Coweight& mu, const Coweight& lambda) const;
  /// Multiplicity of the projected lambda in the folded module of highest
  /// weight projected mu.
  Integer folded_multiplicity(const Coweight& mu, const Coweight& lambda) const;
  CharPoly twining_character(const Coweight& mu) const;
  TwiningReport verify(const Coweight& mu) const;

  /// sigma(nu_w) = nu_{sigma(w)} for every w.
  bool ggms_is_sigma_equivariant(const LusztigDatum& datum) const;
  /// The sigma-invariant data of the rows of verify(mu) that pass is_mv.
  std::vector<LusztigDatum> invariant_mv_data(const Coweight& mu) const;

  /// Sigma-invariant dominant mu with <rho, mu> <= max_rho_pairing, i.e.
  /// <2 rho, mu> <= 2 max_rho_pairing. With a central torus each admissible
  /// label vector contributes one representative.
  std::vector<Coweight> invariant_dominant_weights(Integer max_rho_pairing) const;

 private:
  void require_invariant_dominant(const Coweight& mu) const;
  void require_invariant(const Coweight& lambda) const;

  std::unique_ptr<WeylGroup> group_;
  std::unique_ptr<MvCalculator> mv_;
  PinnedAut sigma_;
  FoldedDatum folded_;
  std::unique_ptr<RootSystem> folded_system_;
  FoldedWeyl folded_weyl_;
  SigmaCompatibleWord word_;
};

struct DoubleFold {
  RootDatum datum;             // dual of the folded datum
  IntMatrix incl;              // folded coordinates -> X^v
  std::vector<Coweight> roots; // positive roots of `datum`, as elements of X^v
};

/// Fold on the dual side: simple roots are the orbit sums of the simple
/// coroots (doubled for connected pairs), closed under W^sigma.
DoubleFold double_fold_roots(const RootDatum& datum, const PinnedAut& sigma);

// Free-function forms.
Integer twining_trace(const RootDatum& datum, const PinnedAut& sigma, const Coweight& mu, const Coweight& lambda);
Integer folded_multiplicity(const RootDatum& datum, const PinnedAut& sigma, const Coweight& mu, const Coweight& lambda);
CharPoly twining_character(const RootDatum& datum, const PinnedAut& sigma, const Coweight& mu);
TwiningReport verify_jantzen(const RootDatum& datum, const PinnedAut& sigma, const Coweight& mu);

}  // namespace satake_fold
