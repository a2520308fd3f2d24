#pragma once

#include <string>
#include <vector>

#include "satake_fold/folding.hpp"

namespace satake_fold {

/// Cartan matrices of the simply-laced types used by the built-ins.
IntMatrix cartan_type_a(Eigen::Index n);
IntMatrix cartan_type_d4();

/// Simply connected datum: coroots are the standard basis of X^v.
RootDatum simply_connected(const IntMatrix& cartan);
/// Adjoint datum: roots are the standard basis of X.
RootDatum adjoint(const IntMatrix& cartan);

/// "A1".."A4", "D4" (simply connected), "sl5" (= A4), "pgl3" (adjoint A2).
std::vector<std::string> builtin_group_names();
RootDatum builtin_datum(const std::string& name);

/// "A2-swap", "A3-flip", "A4-flip", "D4-rot3", plus "identity" for any datum.
std::vector<std::string> builtin_sigma_names();
PinnedAut builtin_sigma(const std::string& name, const RootDatum& datum);

/// The built-in (group, sigma) pairs, each sigma on the groups it fits.
std::vector<std::pair<std::string, std::string>> builtin_pairs();

}  // namespace satake_fold
