#include "satake_fold/folding.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "satake_fold/lattice.hpp"

namespace satake_fold {

namespace {

constexpr int kMaxOrder = 1000;

std::optional<int> matrix_order(const IntMatrix& m) {
  const IntMatrix id = IntMatrix::Identity(m.rows(), m.cols());
  IntMatrix p = m;
  for (int k = 1; k <= kMaxOrder; ++k) {
    if (p == id) return k;
    p = p * m;
    if ((p.array().abs() > (Integer{1} << 40)).any()) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::string> validate(const RootDatum& datum, const std::vector<int>& perm, const IntMatrix& m) {
  std::vector<std::string> out;
  const auto r = static_cast<std::size_t>(datum.rank());
  const auto idx = [](std::size_t i) { return std::to_string(i + 1); };
  if (perm.size() != r) {
    out.push_back("permutation has length " + std::to_string(perm.size()) + ", expected rank " + std::to_string(r));
    return out;
  }
  std::vector<int> seen(r, 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= r || seen[static_cast<std::size_t>(p)]++) {
      out.push_back("perm is not a permutation of the simple indices");
      return out;
    }
  }
  if (m.rows() != datum.dim() || m.cols() != datum.dim()) {
    out.push_back("matrix_on_X must be " + std::to_string(datum.dim()) + "x" + std::to_string(datum.dim()));
    return out;
  }
  const Integer det = determinant(m);
  if (det != 1 && det != -1) {
    out.push_back("matrix_on_X is not invertible over Z (det " + std::to_string(det) + ")");
    return out;
  }
  const auto order = matrix_order(m);
  if (!order) {
    out.push_back("matrix_on_X does not have finite order");
    return out;
  }
  for (std::size_t i = 0; i < r; ++i) {
    const auto pi = static_cast<Eigen::Index>(perm[i]);
    const auto ii = static_cast<Eigen::Index>(i);
    if (m * datum.root(ii) != datum.root(pi)) {
      out.push_back("M does not map alpha_" + idx(i) + " to alpha_" + idx(static_cast<std::size_t>(pi)));
    }
    // M^{-T} alpha_i^v = alpha_pi(i)^v  <=>  M^T alpha_pi(i)^v = alpha_i^v.
    if (m.transpose() * datum.coroot(pi) != datum.coroot(ii)) {
      out.push_back("contragredient of M does not map alpha_" + idx(i) + "^v to alpha_" +
                    idx(static_cast<std::size_t>(pi)) + "^v");
    }
  }
  return out;
}

PinnedAut make_pinned_aut(const RootDatum& datum, std::vector<int> perm, IntMatrix m) {
  const auto violations = validate(datum, perm, m);
  if (!violations.empty()) {
    std::string msg = "invalid pinned automorphism:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw InvalidAutomorphism(msg);
  }
  PinnedAut out;
  out.order = *matrix_order(m);
  IntMatrix inv = IntMatrix::Identity(m.rows(), m.cols());
  for (int k = 1; k < out.order; ++k) inv = inv * m;
  out.matrix_on_Xv = inv.transpose();
  out.perm = std::move(perm);
  out.matrix_on_X = std::move(m);
  return out;
}

PinnedAut identity_aut(const RootDatum& datum) {
  std::vector<int> perm(static_cast<std::size_t>(datum.rank()));
  std::iota(perm.begin(), perm.end(), 0);
  return make_pinned_aut(datum, std::move(perm), IntMatrix::Identity(datum.dim(), datum.dim()));
}

PinnedAut dual_aut(const PinnedAut& sigma) {
  return PinnedAut{sigma.perm, sigma.matrix_on_Xv, sigma.matrix_on_X, sigma.order};
}

Coweight apply_sigma(const PinnedAut& sigma, const Coweight& x) { return sigma.matrix_on_Xv * x; }

bool is_sigma_invariant(const PinnedAut& sigma, const Coweight& x) { return apply_sigma(sigma, x) == x; }

OrbitData orbit_analysis(const RootDatum& datum, const PinnedAut& sigma) {
  const IntMatrix c = datum.cartan();
  const auto r = sigma.perm.size();
  OrbitData out;
  out.orbit_of.assign(r, -1);
  for (std::size_t start = 0; start < r; ++start) {
    if (out.orbit_of[start] >= 0) continue;
    std::vector<int> orbit;
    for (int i = static_cast<int>(start); out.orbit_of[static_cast<std::size_t>(i)] < 0; i = sigma.perm[static_cast<std::size_t>(i)]) {
      out.orbit_of[static_cast<std::size_t>(i)] = static_cast<int>(out.orbits.size());
      orbit.push_back(i);
    }
    std::sort(orbit.begin(), orbit.end());
    std::vector<std::pair<int, int>> edges;
    for (std::size_t a = 0; a < orbit.size(); ++a) {
      for (std::size_t b = a + 1; b < orbit.size(); ++b) {
        if (c(orbit[a], orbit[b]) != 0) edges.emplace_back(orbit[a], orbit[b]);
      }
    }
    OrbitType type = OrbitType::Disconnected;
    if (!edges.empty()) {
      const auto [i, j] = edges.front();
      if (orbit.size() != 2 || c(i, j) != -1 || c(j, i) != -1) {
        std::string names;
        for (int k : orbit) names += (names.empty() ? "" : ",") + std::to_string(k + 1);
        throw UnsupportedOrbit("orbit {" + names +
                               "} is neither pairwise disconnected nor a pair joined by a simple edge");
      }
      type = OrbitType::ConnectedPair;
    }
    out.orbits.push_back(std::move(orbit));
    out.types.push_back(type);
  }
  return out;
}

FoldedDatum fold(const RootDatum& datum, const PinnedAut& sigma) {
  FoldedDatum fd;
  fd.orbits = orbit_analysis(datum, sigma);
  const Eigen::Index d = datum.dim();
  const IntMatrix id = IntMatrix::Identity(d, d);
  fd.incl = integer_kernel(IntMatrix(sigma.matrix_on_Xv - id));
  fd.incl_left_inverse = primitive_left_inverse(fd.incl);
  fd.q = fd.incl.transpose();
  for (Integer f : smith_normal_form(IntMatrix(id - sigma.matrix_on_X)).invariant_factors()) {
    if (f > 1) fd.torsion.push_back(f);
  }

  const auto n = static_cast<Eigen::Index>(fd.orbits.orbits.size());
  const Eigen::Index dp = fd.incl.cols();
  fd.datum.simple_roots = IntMatrix(dp, n);
  fd.datum.simple_coroots = IntMatrix(dp, n);
  for (Eigen::Index e = 0; e < n; ++e) {
    const auto& orbit = fd.orbits.orbits[static_cast<std::size_t>(e)];
    const Weight root = fd.q * datum.root(orbit.front());
    for (int i : orbit) {
      if (fd.q * datum.root(i) != root) {
        throw InternalConsistencyError("folded root depends on the orbit representative");
      }
    }
    Coweight coroot = Coweight::Zero(d);
    for (int i : orbit) coroot += datum.coroot(i);
    if (fd.orbits.types[static_cast<std::size_t>(e)] == OrbitType::ConnectedPair) coroot *= 2;
    const Coweight folded = fd.incl_left_inverse * coroot;
    if (fd.incl * folded != coroot) throw InternalConsistencyError("orbit coroot is not sigma-invariant");
    fd.datum.simple_roots.col(e) = root;
    fd.datum.simple_coroots.col(e) = folded;
  }
  const auto violations = validate(fd.datum);
  if (!violations.empty()) {
    throw InternalConsistencyError("folded datum is invalid: " + violations.front());
  }
  return fd;
}

Coweight project_coweight(const FoldedDatum& fd, const PinnedAut& sigma, const Coweight& mu) {
  if (!is_sigma_invariant(sigma, mu)) throw PreconditionError("coweight is not sigma-invariant");
  Coweight out = fd.incl_left_inverse * mu;
  if (fd.incl * out != mu) throw InternalConsistencyError("projection does not round-trip");
  return out;
}

Coweight section(const FoldedDatum& fd, const Coweight& folded) { return fd.incl * folded; }

bool rho_check(const RootDatum& datum, const PinnedAut& sigma) {
  const FoldedDatum fd = fold(datum, sigma);
  const RationalCoweight folded = RootSystem(fd.datum).rho_vee();
  return RootSystem(datum).rho_vee() == RationalCoweight(fd.incl.cast<Rational>() * folded);
}

FoldedWeyl folded_weyl(const WeylGroup& group, const OrbitData& orbits) {
  FoldedWeyl fw;
  for (std::size_t e = 0; e < orbits.orbits.size(); ++e) {
    const auto& orbit = orbits.orbits[e];
    Word word = orbit;
    if (orbits.types[e] == OrbitType::ConnectedPair) word = {orbit[0], orbit[1], orbit[0]};
    fw.generators.push_back(group.evaluate(word));
  }
  const auto n = static_cast<Eigen::Index>(fw.generators.size());
  fw.coxeter = IntMatrix::Ones(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      const int x = group.multiply(fw.generators[static_cast<std::size_t>(a)], fw.generators[static_cast<std::size_t>(b)]);
      int y = x;
      Integer k = 1;
      while (y != group.identity()) {
        y = group.multiply(y, x);
        ++k;
      }
      fw.coxeter(a, b) = k;
    }
  }

  std::map<int, int> length{{group.identity(), 0}};
  std::deque<int> queue{group.identity()};
  while (!queue.empty()) {
    const int w = queue.front();
    queue.pop_front();
    for (int g : fw.generators) {
      const int u = group.multiply(w, g);
      if (length.emplace(u, length[w] + 1).second) queue.push_back(u);
    }
  }
  int top = 0;
  for (const auto& [w, l] : length) {
    fw.elements.push_back(w);
    fw.lengths.push_back(l);
    if (l > length[top]) top = w;
  }
  fw.longest = top;
  if (fw.longest != group.longest()) {
    throw InternalConsistencyError("longest element of W^sigma differs from w0");
  }
  for (int w = top; w != group.identity();) {
    bool stepped = false;
    for (std::size_t e = 0; e < fw.generators.size() && !stepped; ++e) {
      const int u = group.multiply(fw.generators[e], w);
      if (length.at(u) < length.at(w)) {
        fw.longest_word.push_back(static_cast<int>(e));
        w = u;
        stepped = true;
      }
    }
    if (!stepped) throw InternalConsistencyError("no descent in W^sigma");
  }
  return fw;
}

std::vector<Word> orbit_expansions(const WeylGroup& group, const FoldedWeyl& fw, int eta) {
  return group.reduced_words(fw.generators.at(static_cast<std::size_t>(eta)));
}

SigmaCompatibleWord sigma_compatible_word(const WeylGroup& group, const FoldedWeyl& fw, const Word& sigma_word,
                                          const std::vector<std::size_t>& choices) {
  SigmaCompatibleWord out;
  out.sigma_word = sigma_word;
  for (std::size_t k = 0; k < sigma_word.size(); ++k) {
    const int eta = sigma_word[k];
    if (eta < 0 || static_cast<std::size_t>(eta) >= fw.generators.size()) {
      throw PreconditionError("orbit index " + std::to_string(eta + 1) + " out of range");
    }
    const auto expansions = orbit_expansions(group, fw, eta);
    const std::size_t choice = k < choices.size() ? choices[k] : 0;
    if (choice >= expansions.size()) throw PreconditionError("expansion choice out of range");
    out.block_start.push_back(out.word.size());
    for (int i : expansions[choice]) {
      out.word.push_back(i);
      out.block_of.push_back(static_cast<int>(k));
    }
  }
  out.block_start.push_back(out.word.size());
  if (!group.is_reduced(out.word) || group.evaluate(out.word) != group.longest()) {
    throw InternalConsistencyError("expansion is not a reduced word for w0");
  }
  return out;
}

std::vector<SigmaCompatibleWord> all_sigma_compatible_words(const WeylGroup& group, const FoldedWeyl& fw,
                                                            const Word& sigma_word) {
  std::vector<std::size_t> sizes;
  for (int eta : sigma_word) sizes.push_back(orbit_expansions(group, fw, eta).size());
  std::vector<SigmaCompatibleWord> out;
  std::vector<std::size_t> choice(sigma_word.size(), 0);
  while (true) {
    out.push_back(sigma_compatible_word(group, fw, sigma_word, choice));
    std::size_t k = choice.size();
    while (k > 0 && ++choice[k - 1] == sizes[k - 1]) choice[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

}  // namespace satake_fold
