#include "satake_fold/characters.hpp"

#include <algorithm>

namespace satake_fold {

Integer CharPoly::operator[](const Coweight& x) const {
  const auto it = terms.find(x);
  return it == terms.end() ? 0 : it->second;
}

void CharPoly::add(const Coweight& x, Integer m) {
  if (m == 0) return;
  const Integer v = (terms[x] += m);
  if (v == 0) terms.erase(x);
}

Integer CharPoly::total() const {
  Integer s = 0;
  for (const auto& [x, m] : terms) s += m;
  return s;
}

bool CharPoly::operator==(const CharPoly& other) const {
  if (terms.size() != other.terms.size()) return false;
  auto a = terms.begin();
  auto b = other.terms.begin();
  for (; a != terms.end(); ++a, ++b) {
    if (a->first != b->first || a->second != b->second) return false;
  }
  return true;
}

std::vector<std::pair<Coweight, Integer>> CharPoly::sorted(const RootSystem& system) const {
  std::vector<std::pair<Coweight, Integer>> out(terms.begin(), terms.end());
  std::sort(out.begin(), out.end(),
            [&system](const auto& a, const auto& b) { return system.coweight_order(a.first, b.first); });
  return out;
}

FreudenthalTable::FreudenthalTable(const RootSystem& system, const Coweight& mu) : system_(system), mu_(mu) {
  if (!system.is_dominant(mu)) throw PreconditionError("highest weight is not dominant");
  const auto& roots = system.positive().coroot_coefficients;
  const auto& coroots = system.positive().coroots;
  IntVector rho_coeff = IntVector::Zero(system.rank());  // 2 rho^v in simple coroots
  for (const auto& b : roots) rho_coeff += b;

  // Height-descending order: every weight on the right-hand side has a
  // dominant representative that is already known.
  for (const Coweight& lambda : system.dominant_weights_below(mu)) {
    if (lambda == mu) {
      dominant_.emplace(mu, 1);
      continue;
    }
    const IntVector nu = *system.coroot_lattice_coordinates(mu - lambda);
    // (mu + rho, mu + rho) - (lambda + rho, lambda + rho) = 2 (nu, mu) + (nu, 2 rho) - (nu, nu).
    const Integer lhs =
        2 * system.form(mu, nu) + system.form_coroot(rho_coeff, nu) - system.form_coroot(nu, nu);
    Integer rhs = 0;
    for (std::size_t b = 0; b < roots.size(); ++b) {
      for (Coweight x = lambda + coroots[b];; x += coroots[b]) {
        const Integer m = multiplicity(x);
        if (m == 0) break;
        rhs += system.form(x, roots[b]) * m;
      }
    }
    rhs *= 2;
    if (lhs <= 0 || rhs % lhs != 0) throw InternalConsistencyError("Freudenthal recursion is not integral");
    dominant_.emplace(lambda, rhs / lhs);
  }
}

Integer FreudenthalTable::multiplicity(const Coweight& lambda) const {
  const auto it = dominant_.find(system_.dominant_representative(lambda));
  return it == dominant_.end() ? 0 : it->second;
}

Integer freudenthal_multiplicity(const RootSystem& system, const Coweight& mu, const Coweight& lambda) {
  return FreudenthalTable(system, mu).multiplicity(lambda);
}

Integer weyl_dimension(const RootSystem& system, const Coweight& mu) {
  if (!system.is_dominant(mu)) throw PreconditionError("highest weight is not dominant");
  Rational product = 1;
  for (const auto& b : system.positive().coroot_coefficients) {
    // (rho^v, beta^v) = sum_j b_j D_j.
    Integer rho_pair = 0;
    for (Eigen::Index j = 0; j < b.size(); ++j) rho_pair += b(j) * system.symmetrizer()(j);
    product *= Rational(system.form(mu, b) + rho_pair, rho_pair);
  }
  if (product.denominator() != 1) throw InternalConsistencyError("Weyl dimension is not an integer");
  return product.numerator();
}

CharPoly character(const RootSystem& system, const Coweight& mu) {
  const FreudenthalTable table(system, mu);
  CharPoly out;
  for (const auto& lambda : system.weight_set(mu)) out.add(lambda, table.multiplicity(lambda));
  return out;
}

CharPoly mv_character(const MvCalculator& mv, const Coweight& mu, const Word& word) {
  const WeylGroup& g = mv.group();
  const Word w = word.empty() ? g.word(g.longest()) : word;
  CharPoly out;
  for (const auto& lambda : mv.system().weight_set(mu)) {
    Integer count = 0;
    for (const auto& datum : mv.enumerate_data(w, lambda - mu)) count += mv.is_mv(datum, mu) ? 1 : 0;
    out.add(lambda, count);
  }
  return out;
}

}  // namespace satake_fold
