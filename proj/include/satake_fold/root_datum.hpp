#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satake_fold/types.hpp"

namespace satake_fold {

/// A based root datum given in mutually dual bases of X and X^v. Column i of
/// `simple_roots` is alpha_i in X, column i of `simple_coroots` is alpha_i^v in
/// X^v. Nothing is checked on construction; see validate() and RootSystem.
struct RootDatum {
  IntMatrix simple_roots;    // d x r
  IntMatrix simple_coroots;  // d x r

  Eigen::Index dim() const { return simple_roots.rows(); }
  Eigen::Index rank() const { return simple_roots.cols(); }

  /// C(i, j) = <alpha_i, alpha_j^v>.
  IntMatrix cartan() const { return simple_roots.transpose() * simple_coroots; }

  Weight root(Eigen::Index i) const { return simple_roots.col(i); }
  Coweight coroot(Eigen::Index i) const { return simple_coroots.col(i); }

  static RootDatum from_lists(Eigen::Index d, const std::vector<std::vector<Integer>>& roots,
                              const std::vector<std::vector<Integer>>& coroots);
};

bool operator==(const RootDatum& a, const RootDatum& b);

/// Swap the roles of X and X^v.
RootDatum dual(const RootDatum& datum);

/// Human-readable violations of the root datum axioms; empty iff valid.
/// Indices in messages are 1-based.
std::vector<std::string> validate(const RootDatum& datum);

/// Order of s_i s_j read off the Cartan matrix: 1, 2, 3, 4, 6, or 0 when the
/// product has infinite order.
int coxeter_order(const IntMatrix& cartan, Eigen::Index i, Eigen::Index j);

/// Positive integers D with C(j, i) D_j = C(i, j) D_i (smallest such), or
/// nullopt when the Cartan matrix is not symmetrizable.
std::optional<IntVector> symmetrizer(const IntMatrix& cartan);

enum class ConeMode { Integer, Rational };

struct PositiveRoots {
  std::vector<Weight> roots;
  std::vector<Coweight> coroots;               // coroots[k] is dual to roots[k]
  std::vector<IntVector> root_coefficients;    // in the basis of simple roots
  std::vector<IntVector> coroot_coefficients;  // in the basis of simple coroots
};

/// Closure of the simple roots under simple reflections, restricted to the
/// positive cone. Sorted by height, then by coefficient vector with larger
/// leading coefficients first. Throws EnumerationDiverged past `max_roots`.
PositiveRoots positive_roots(const RootDatum& datum, std::size_t max_roots = 100000);

/// Validated root datum together with its derived structure. Immutable.
class RootSystem {
 public:
  /// Throws InvalidDatum listing every violation.
  explicit RootSystem(RootDatum datum);

  const RootDatum& datum() const { return datum_; }
  Eigen::Index dim() const { return datum_.dim(); }
  Eigen::Index rank() const { return datum_.rank(); }
  const IntMatrix& cartan() const { return cartan_; }
  const PositiveRoots& positive() const { return positive_; }
  std::size_t num_positive_roots() const { return positive_.roots.size(); }
  const IntVector& symmetrizer() const { return symmetrizer_; }
  bool is_simply_laced() const;

  /// Half the sum of the positive coroots.
  const RationalCoweight& rho_vee() const { return rho_vee_; }
  /// Sum of the positive roots, i.e. 2 rho.
  const Weight& two_rho() const { return two_rho_; }

  /// (<alpha_i, x>)_i.
  IntVector labels(const Coweight& x) const { return datum_.simple_roots.transpose() * x; }
  bool is_dominant(const Coweight& x) const { return (labels(x).array() >= 0).all(); }
  /// <2 rho, x>.
  Integer height(const Coweight& x) const { return two_rho_.dot(x); }

  /// det(C) times the coefficients of x in the simple coroots, or nullopt if x
  /// is outside their span.
  std::optional<IntVector> scaled_coroot_coordinates(const Coweight& x) const;
  Integer cartan_determinant() const { return cartan_det_; }
  std::optional<RatVector> coroot_coordinates(const Coweight& x) const;
  /// Integer coefficients of x in the simple coroots, if x is in the coroot lattice.
  std::optional<IntVector> coroot_lattice_coordinates(const Coweight& x) const;

  /// lambda <= mu: mu - lambda is a nonnegative integer (or rational)
  /// combination of simple coroots.
  bool dominance_le(const Coweight& lambda, const Coweight& mu, ConeMode mode) const;

  Coweight reflect(Eigen::Index i, const Coweight& x) const;
  Weight reflect_weight(Eigen::Index i, const Weight& x) const;
  Coweight dominant_representative(const Coweight& x) const;
  std::vector<Coweight> orbit(const Coweight& x) const;

  /// Wt(mu): the coset mu + Z Pi^v intersected with Conv(W mu). Sorted by
  /// coweight_order. Throws PreconditionError if mu is not dominant.
  std::vector<Coweight> weight_set(const Coweight& mu) const;

  /// Dominant coweights nu <= mu in the coset of mu (integer mode).
  std::vector<Coweight> dominant_weights_below(const Coweight& mu) const;

  /// Height descending, then lexicographically descending.
  bool coweight_order(const Coweight& a, const Coweight& b) const;

  /// Symmetrized W-invariant form (x, beta^v) for x in X^v and beta^v given by
  /// coefficients in the simple coroots. Scaled so that (rho^v, alpha_j^v) = D_j.
  Integer form(const Coweight& x, const IntVector& coroot_coefficients) const;
  Integer form_coroot(const IntVector& a_coeffs, const IntVector& b_coeffs) const;

 private:
  RootDatum datum_;
  IntMatrix cartan_;
  IntMatrix cartan_adj_;  // det(C) * C^{-1}
  Integer cartan_det_ = 1;
  IntVector symmetrizer_;
  PositiveRoots positive_;
  RationalCoweight rho_vee_;
  Weight two_rho_;
};

// Free-function forms of the root datum operations.
RationalCoweight rho_vee(const RootDatum& datum);
bool dominance_le(const RootDatum& datum, const Coweight& lambda, const Coweight& mu, ConeMode mode);
std::vector<Coweight> weight_set(const RootDatum& datum, const Coweight& mu);

}  // namespace satake_fold
