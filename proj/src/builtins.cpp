#include "satake_fold/builtins.hpp"

#include <map>

namespace satake_fold {

IntMatrix cartan_type_a(Eigen::Index n) {
  IntMatrix c = 2 * IntMatrix::Identity(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) c(i, i + 1) = c(i + 1, i) = -1;
  return c;
}

IntMatrix cartan_type_d4() {
  IntMatrix c = 2 * IntMatrix::Identity(4, 4);
  for (Eigen::Index leaf : {0, 2, 3}) c(1, leaf) = c(leaf, 1) = -1;
  return c;
}

// With C(i, j) = <alpha_i, alpha_j^v> = alpha_i . alpha_j^v:
// coroots = I forces roots = rows of C; roots = I forces coroots = columns of C.
RootDatum simply_connected(const IntMatrix& cartan) {
  return RootDatum{cartan.transpose(), IntMatrix::Identity(cartan.rows(), cartan.cols())};
}

RootDatum adjoint(const IntMatrix& cartan) {
  return RootDatum{IntMatrix::Identity(cartan.rows(), cartan.cols()), cartan};
}

std::vector<std::string> builtin_group_names() { return {"A1", "A2", "A3", "A4", "D4", "sl5", "pgl3"}; }

RootDatum builtin_datum(const std::string& name) {
  if (name == "A1") return simply_connected(cartan_type_a(1));
  if (name == "A2") return simply_connected(cartan_type_a(2));
  if (name == "A3") return simply_connected(cartan_type_a(3));
  if (name == "A4" || name == "sl5") return simply_connected(cartan_type_a(4));
  if (name == "D4") return simply_connected(cartan_type_d4());
  if (name == "pgl3") return adjoint(cartan_type_a(2));
  throw InvalidDatum("unknown built-in group '" + name + "'");
}

std::vector<std::string> builtin_sigma_names() { return {"A2-swap", "A3-flip", "A4-flip", "D4-rot3", "identity"}; }

namespace {

// Permutation matrix with M e_i = e_{perm(i)}. All built-in data have d = r and
// a Cartan matrix invariant under perm, so this maps alpha_i to alpha_{perm(i)}.
PinnedAut permutation_aut(const RootDatum& datum, const std::vector<int>& perm, const std::string& name) {
  if (datum.rank() != static_cast<Eigen::Index>(perm.size()) || datum.dim() != datum.rank()) {
    throw InvalidAutomorphism("built-in automorphism '" + name + "' does not fit a datum of rank " +
                              std::to_string(datum.rank()) + " and dimension " + std::to_string(datum.dim()));
  }
  const auto n = static_cast<Eigen::Index>(perm.size());
  IntMatrix m = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(perm[static_cast<std::size_t>(i)], i) = 1;
  return make_pinned_aut(datum, perm, m);
}

}  // namespace

PinnedAut builtin_sigma(const std::string& name, const RootDatum& datum) {
  if (name == "identity") return identity_aut(datum);
  static const std::map<std::string, std::vector<int>> perms{
      {"A2-swap", {1, 0}},
      {"A3-flip", {2, 1, 0}},
      {"A4-flip", {3, 2, 1, 0}},
      {"D4-rot3", {2, 1, 3, 0}},
  };
  const auto it = perms.find(name);
  if (it == perms.end()) throw InvalidAutomorphism("unknown built-in automorphism '" + name + "'");
  return permutation_aut(datum, it->second, name);
}

std::vector<std::pair<std::string, std::string>> builtin_pairs() {
  return {{"A2", "A2-swap"}, {"pgl3", "A2-swap"}, {"A3", "A3-flip"},
          {"A4", "A4-flip"}, {"sl5", "A4-flip"},  {"D4", "D4-rot3"}};
}

}  // namespace satake_fold
