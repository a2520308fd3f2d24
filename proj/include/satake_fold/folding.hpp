#pragma once

#include <string>
#include <vector>

#include "satake_fold/root_datum.hpp"
#include "satake_fold/weyl.hpp"

namespace satake_fold {

/// A pinned automorphism: a permutation of the simple indices together with
/// the lattice automorphism of X implementing it.
struct PinnedAut {
  std::vector<int> perm;    // i -> pi(i), 0-based
  IntMatrix matrix_on_X;    // M
  IntMatrix matrix_on_Xv;   // M^{-T}
  int order = 1;
};

/// Violations of the pinned-automorphism conditions against `datum`.
std::vector<std::string> validate(const RootDatum& datum, const std::vector<int>& perm, const IntMatrix& m);

/// Throws InvalidAutomorphism listing every violation.
PinnedAut make_pinned_aut(const RootDatum& datum, std::vector<int> perm, IntMatrix m);
PinnedAut identity_aut(const RootDatum& datum);
/// The same automorphism seen on the dual datum.
PinnedAut dual_aut(const PinnedAut& sigma);

Coweight apply_sigma(const PinnedAut& sigma, const Coweight& x);
bool is_sigma_invariant(const PinnedAut& sigma, const Coweight& x);

enum class OrbitType { Disconnected, ConnectedPair };

struct OrbitData {
  std::vector<std::vector<int>> orbits;  // each sorted; ordered by least member
  std::vector<OrbitType> types;
  std::vector<int> orbit_of;             // simple index -> orbit index
};

/// Throws UnsupportedOrbit when an orbit is neither pairwise disconnected nor
/// a single pair joined by a simple edge.
OrbitData orbit_analysis(const RootDatum& datum, const PinnedAut& sigma);

struct FoldedDatum {
  RootDatum datum;             // root datum of the identity component of G^sigma
  IntMatrix q;                 // d' x d, X -> X_sigma / torsion
  IntMatrix incl;              // d x d', basis of (X^v)^sigma as columns
  IntMatrix incl_left_inverse; // d' x d, integer left inverse of incl
  OrbitData orbits;
  std::vector<Integer> torsion;  // invariant factors > 1 of I - M
};

FoldedDatum fold(const RootDatum& datum, const PinnedAut& sigma);

/// Folded coordinates of a sigma-invariant coweight.
Coweight project_coweight(const FoldedDatum& fd, const PinnedAut& sigma, const Coweight& mu);
Coweight section(const FoldedDatum& fd, const Coweight& folded);

/// rho^v of the datum equals the image of rho^v of the folded datum.
bool rho_check(const RootDatum& datum, const PinnedAut& sigma);

/// W^sigma as a subgroup of W, generated by s_eta for each orbit eta.
struct FoldedWeyl {
  std::vector<int> generators;    // element indices in W
  IntMatrix coxeter;              // m(s_eta, s_zeta)
  std::vector<int> elements;      // ascending element index in W
  std::vector<int> lengths;       // W^sigma length, parallel to `elements`
  int longest = 0;                // index in W
  Word longest_word;              // lexicographically least reduced word, orbit indices
};

FoldedWeyl folded_weyl(const WeylGroup& group, const OrbitData& orbits);

/// A reduced word for w0 obtained by expanding each letter of a reduced word
/// for w_{0,sigma}; block k is the expansion of letter k.
struct SigmaCompatibleWord {
  Word word;
  Word sigma_word;
  std::vector<std::size_t> block_start;  // size = sigma_word.size() + 1
  std::vector<int> block_of;             // letter position -> block index
};

/// Reduced words of s_eta in W, lexicographically sorted. The first is the
/// default expansion.
std::vector<Word> orbit_expansions(const WeylGroup& group, const FoldedWeyl& fw, int eta);

/// `choices[k]` picks the expansion of letter k (default 0 for every letter).
/// Throws InternalConsistencyError if the result is not a reduced word of w0.
SigmaCompatibleWord sigma_compatible_word(const WeylGroup& group, const FoldedWeyl& fw,
                                          const Word& sigma_word, const std::vector<std::size_t>& choices = {});

/// Every expansion of `sigma_word`, in lexicographic order of the choices.
std::vector<SigmaCompatibleWord> all_sigma_compatible_words(const WeylGroup& group, const FoldedWeyl& fw,
                                                            const Word& sigma_word);

}  // namespace satake_fold
