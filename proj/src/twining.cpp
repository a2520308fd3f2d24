#include "satake_fold/twining.hpp"

#include <algorithm>
#include <set>

#include "satake_fold/lattice.hpp"

namespace satake_fold {

TwiningContext::TwiningContext(const RootDatum& datum, PinnedAut sigma)
    : group_(std::make_unique<WeylGroup>(RootSystem(datum))),
      mv_(std::make_unique<MvCalculator>(*group_)),
      sigma_(std::move(sigma)),
      folded_(fold(datum, sigma_)),
      folded_system_(std::make_unique<RootSystem>(folded_.datum)),
      folded_weyl_(satake_fold::folded_weyl(*group_, folded_.orbits)),
      word_(sigma_compatible_word(*group_, folded_weyl_, folded_weyl_.longest_word)) {}

void TwiningContext::require_invariant(const Coweight& lambda) const {
  if (lambda.size() != system().dim()) throw PreconditionError("coweight has the wrong dimension");
  if (!is_sigma_invariant(sigma_, lambda)) throw PreconditionError("coweight is not sigma-invariant");
}

void TwiningContext::require_invariant_dominant(const Coweight& mu) const {
  require_invariant(mu);
  if (!system().is_dominant(mu)) throw PreconditionError("highest weight is not dominant");
}

Integer TwiningContext::twining_trace(const Coweight& mu, const Coweight& lambda) const {
  require_invariant_dominant(mu);
  require_invariant(lambda);
  const RootSystem& rs = system();
  if (!rs.coroot_lattice_coordinates(mu - lambda) ||
      !rs.dominance_le(rs.dominant_representative(lambda), mu, ConeMode::Integer)) {
    return 0;
  }
  Integer count = 0;
  for (const auto& datum : enumerate_sigma_invariant_data(*mv_, word_, lambda - mu)) {
    if (mv_->is_mv(datum, mu)) ++count;
  }
  return count;
}

Integer TwiningContext::folded_multiplicity(const Coweight& mu, const Coweight& lambda) const {
  require_invariant_dominant(mu);
  require_invariant(lambda);
  return freudenthal_multiplicity(*folded_system_, project_coweight(folded_, sigma_, mu),
                                  project_coweight(folded_, sigma_, lambda));
}

CharPoly TwiningContext::twining_character(const Coweight& mu) const {
  require_invariant_dominant(mu);
  CharPoly out;
  for (const auto& lambda : system().weight_set(mu)) {
    if (is_sigma_invariant(sigma_, lambda)) out.add(lambda, twining_trace(mu, lambda));
  }
  return out;
}

TwiningReport TwiningContext::verify(const Coweight& mu) const {
  require_invariant_dominant(mu);
  TwiningReport report;
  report.mu = mu;
  report.folded_mu = project_coweight(folded_, sigma_, mu);
  const FreudenthalTable ambient(system(), mu);
  const FreudenthalTable folded(*folded_system_, report.folded_mu);
  std::set<Coweight, LexLess> placed;
  for (const auto& lambda : system().weight_set(mu)) {
    const Integer m = ambient.multiplicity(lambda);
    report.dimension += m;
    if (is_sigma_invariant(sigma_, lambda)) {
      TwiningRow row;
      row.lambda = lambda;
      row.lhs_trace = twining_trace(mu, lambda);
      row.rhs_mult = folded.multiplicity(project_coweight(folded_, sigma_, lambda));
      row.pass = row.lhs_trace == row.rhs_mult;
      report.overall = report.overall && row.pass;
      report.rows.push_back(std::move(row));
    } else if (!placed.count(lambda)) {
      OrbitRow orbit{{}, m};
      for (Coweight x = lambda; placed.insert(x).second; x = apply_sigma(sigma_, x)) orbit.orbit.push_back(x);
      report.non_invariant.push_back(std::move(orbit));
    }
  }
  return report;
}

bool TwiningContext::ggms_is_sigma_equivariant(const LusztigDatum& datum) const {
  const GGMSDatum g = mv_->ggms(datum);
  for (int w = 0; w < static_cast<int>(group_->size()); ++w) {
    const int sw = group_->relabel(w, sigma_.perm);
    if (apply_sigma(sigma_, g.vertices[static_cast<std::size_t>(w)]) != g.vertices[static_cast<std::size_t>(sw)]) {
      return false;
    }
  }
  return true;
}

std::vector<LusztigDatum> TwiningContext::invariant_mv_data(const Coweight& mu) const {
  require_invariant_dominant(mu);
  std::vector<LusztigDatum> out;
  for (const auto& lambda : system().weight_set(mu)) {
    if (!is_sigma_invariant(sigma_, lambda)) continue;
    for (auto& datum : enumerate_sigma_invariant_data(*mv_, word_, lambda - mu)) {
      if (mv_->is_mv(datum, mu)) out.push_back(std::move(datum));
    }
  }
  return out;
}

std::vector<Coweight> TwiningContext::invariant_dominant_weights(Integer max_rho_pairing) const {
  const RootSystem& rs = system();
  const auto& orbits = folded_.orbits.orbits;
  // 2 rho = sum_i k_i alpha_i; an invariant mu has labels constant on orbits.
  IntVector k = IntVector::Zero(rs.rank());
  for (const auto& c : rs.positive().root_coefficients) k += c;
  std::vector<Integer> weight;
  for (const auto& orbit : orbits) {
    Integer s = 0;
    for (int i : orbit) s += k(i);
    weight.push_back(s);
  }
  const Integer budget = 2 * max_rho_pairing;
  std::vector<Coweight> out;
  if (budget < 0) return out;
  const IntMatrix folded_roots_t = folded_.datum.simple_roots.transpose();
  std::vector<Integer> labels(orbits.size(), 0);
  auto emit = [&]() {
    const auto sol = solve_integer(folded_roots_t, from_std(labels));
    if (sol) out.push_back(section(folded_, *sol));
  };
  auto recurse = [&](auto&& self, std::size_t e, Integer left) -> void {
    if (e == orbits.size()) {
      emit();
      return;
    }
    for (Integer a = 0; a * weight[e] <= left; ++a) {
      labels[e] = a;
      self(self, e + 1, left - a * weight[e]);
    }
    labels[e] = 0;
  };
  recurse(recurse, 0, budget);
  std::sort(out.begin(), out.end(), [&rs](const Coweight& a, const Coweight& b) {
    const Integer ha = rs.height(a);
    const Integer hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return LexLess{}(a, b);
  });
  return out;
}

DoubleFold double_fold_roots(const RootDatum& datum, const PinnedAut& sigma) {
  const FoldedDatum fd = fold(datum, sigma);
  DoubleFold out{dual(fd.datum), fd.incl, {}};
  const RootSystem rs(out.datum);
  for (const auto& r : rs.positive().roots) out.roots.push_back(fd.incl * r);
  return out;
}

Integer twining_trace(const RootDatum& datum, const PinnedAut& sigma, const Coweight& mu, const Coweight& lambda) {
  return TwiningContext(datum, sigma).twining_trace(mu, lambda);
}

Integer folded_multiplicity(const RootDatum& datum, const PinnedAut& sigma, const Coweight& mu, const Coweight& lambda) {
  return TwiningContext(datum, sigma).folded_multiplicity(mu, lambda);
}

CharPoly twining_character(const RootDatum& datum, const PinnedAut& sigma, const Coweight& mu) {
  return TwiningContext(datum, sigma).twining_character(mu);
}

TwiningReport verify_jantzen(const RootDatum& datum, const PinnedAut& sigma, const Coweight& mu) {
  return TwiningContext(datum, sigma).verify(mu);
}

}  // namespace satake_fold
