#include "satake_fold/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "satake_fold/lattice.hpp"

namespace satake_fold {

RootDatum RootDatum::from_lists(Eigen::Index d, const std::vector<std::vector<Integer>>& roots,
                                const std::vector<std::vector<Integer>>& coroots) {
  if (roots.size() != coroots.size()) {
    throw InvalidDatum("root datum: " + std::to_string(roots.size()) + " simple roots but " +
                       std::to_string(coroots.size()) + " simple coroots");
  }
  const auto r = static_cast<Eigen::Index>(roots.size());
  RootDatum out{IntMatrix(d, r), IntMatrix(d, r)};
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto& a = roots[static_cast<std::size_t>(i)];
    const auto& b = coroots[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(a.size()) != d || static_cast<Eigen::Index>(b.size()) != d) {
      throw InvalidDatum("root datum: vector " + std::to_string(i + 1) + " has length != d = " +
                         std::to_string(d));
    }
    out.simple_roots.col(i) = from_std(a);
    out.simple_coroots.col(i) = from_std(b);
  }
  return out;
}

bool operator==(const RootDatum& a, const RootDatum& b) {
  return a.simple_roots.rows() == b.simple_roots.rows() &&
         a.simple_roots.cols() == b.simple_roots.cols() && a.simple_roots == b.simple_roots &&
         a.simple_coroots == b.simple_coroots;
}

RootDatum dual(const RootDatum& datum) { return RootDatum{datum.simple_coroots, datum.simple_roots}; }

int coxeter_order(const IntMatrix& cartan, Eigen::Index i, Eigen::Index j) {
  if (i == j) return 1;
  switch (cartan(i, j) * cartan(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

std::optional<IntVector> symmetrizer(const IntMatrix& cartan) {
  const Eigen::Index r = cartan.rows();
  std::vector<std::optional<Rational>> d(static_cast<std::size_t>(r));
  for (Eigen::Index start = 0; start < r; ++start) {
    if (d[start]) continue;
    d[start] = Rational(1);
    std::deque<Eigen::Index> queue{start};
    while (!queue.empty()) {
      const Eigen::Index i = queue.front();
      queue.pop_front();
      for (Eigen::Index j = 0; j < r; ++j) {
        if (j == i || cartan(i, j) == 0) continue;
        if (cartan(j, i) == 0) return std::nullopt;
        const Rational dj = *d[i] * Rational(cartan(i, j), cartan(j, i));
        if (!d[j]) {
          d[j] = dj;
          queue.push_back(j);
        } else if (*d[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  Integer lcm = 1;
  for (const auto& x : d) lcm = std::lcm(lcm, x->denominator());
  IntVector out(r);
  Integer g = 0;
  for (Eigen::Index i = 0; i < r; ++i) {
    const Rational v = *d[i] * lcm;
    out(i) = v.numerator();
    g = std::gcd(g, out(i));
  }
  if (g > 1) out /= g;
  return out;
}

namespace {

// B(i, j) = (alpha_i^v, alpha_j^v) = C(j, i) D_j.
IntMatrix symmetrized_form(const IntMatrix& cartan, const IntVector& d) {
  IntMatrix b(cartan.rows(), cartan.cols());
  for (Eigen::Index i = 0; i < cartan.rows(); ++i) {
    for (Eigen::Index j = 0; j < cartan.cols(); ++j) b(i, j) = cartan(j, i) * d(j);
  }
  return b;
}

bool positive_definite(const IntMatrix& b) {
  for (Eigen::Index k = 1; k <= b.rows(); ++k) {
    if (determinant(IntMatrix(b.topLeftCorner(k, k))) <= 0) return false;
  }
  return true;
}

bool is_positive_vector(const IntVector& c) { return (c.array() >= 0).all() && (c.array() > 0).any(); }

bool divisible(const IntVector& v, Integer d) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) % d != 0) return false;
  }
  return true;
}

bool root_before(const IntVector& a, const IntVector& b) {
  const Integer ha = a.sum();
  const Integer hb = b.sum();
  if (ha != hb) return ha < hb;
  return LexLess{}(b, a);
}

}  // namespace

std::vector<std::string> validate(const RootDatum& datum) {
  std::vector<std::string> out;
  const auto idx = [](Eigen::Index i) { return std::to_string(i + 1); };
  if (datum.simple_roots.rows() != datum.simple_coroots.rows() ||
      datum.simple_roots.cols() != datum.simple_coroots.cols()) {
    out.push_back("shape mismatch between simple roots and simple coroots");
    return out;
  }
  if (datum.rank() > datum.dim()) {
    out.push_back("rank " + std::to_string(datum.rank()) + " exceeds lattice dimension " +
                  std::to_string(datum.dim()));
  }
  const IntMatrix c = datum.cartan();
  const Eigen::Index r = c.rows();
  bool gcm = true;
  for (Eigen::Index i = 0; i < r; ++i) {
    if (c(i, i) != 2) {
      out.push_back("diagonal entry C[" + idx(i) + "][" + idx(i) + "] = " + std::to_string(c(i, i)) +
                    " != 2");
      gcm = false;
    }
  }
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) {
      if (i != j && c(i, j) > 0) {
        out.push_back("positive off-diagonal entry at (" + idx(i) + "," + idx(j) + ")");
        gcm = false;
      }
    }
  }
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i + 1; j < r; ++j) {
      if ((c(i, j) == 0) != (c(j, i) == 0)) {
        out.push_back("asymmetric zero at (" + idx(i) + "," + idx(j) + ")");
        gcm = false;
      }
    }
  }
  if (gcm) {
    const auto d = symmetrizer(c);
    if (!d) {
      out.push_back("Cartan matrix is not symmetrizable");
    } else if (!positive_definite(symmetrized_form(c, *d))) {
      out.push_back("Cartan matrix is not of finite type (symmetrization not positive definite)");
    }
  }
  if (r > 0 && integer_rank(datum.simple_roots) != r) out.push_back("simple roots linearly dependent");
  if (r > 0 && integer_rank(datum.simple_coroots) != r) out.push_back("simple coroots linearly dependent");
  return out;
}

PositiveRoots positive_roots(const RootDatum& datum, std::size_t max_roots) {
  const IntMatrix c = datum.cartan();
  const Eigen::Index r = c.rows();
  std::map<IntVector, IntVector, LexLess> found;  // root coefficients -> coroot coefficients
  std::deque<IntVector> queue;
  for (Eigen::Index i = 0; i < r; ++i) {
    IntVector e = IntVector::Unit(r, i);
    found.emplace(e, e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVector beta = queue.front();
    queue.pop_front();
    const IntVector beta_v = found.at(beta);
    for (Eigen::Index j = 0; j < r; ++j) {
      // s_j(beta) = beta - <beta, alpha_j^v> alpha_j, likewise on the coroot.
      const Integer pair = beta.dot(c.col(j));
      const Integer pair_v = c.row(j).dot(beta_v);
      IntVector next = beta;
      next(j) -= pair;
      IntVector next_v = beta_v;
      next_v(j) -= pair_v;
      if (!is_positive_vector(next) || found.count(next)) continue;
      found.emplace(next, next_v);
      queue.push_back(next);
      if (found.size() > max_roots) {
        throw EnumerationDiverged("positive root enumeration exceeded " + std::to_string(max_roots) +
                                  " roots; the Cartan matrix is not of finite type");
      }
    }
  }
  std::vector<IntVector> keys;
  for (const auto& kv : found) keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end(), root_before);
  PositiveRoots out;
  for (const auto& k : keys) {
    const IntVector& kv = found.at(k);
    out.root_coefficients.push_back(k);
    out.coroot_coefficients.push_back(kv);
    out.roots.push_back(datum.simple_roots * k);
    out.coroots.push_back(datum.simple_coroots * kv);
  }
  return out;
}

RootSystem::RootSystem(RootDatum datum) : datum_(std::move(datum)) {
  const auto violations = validate(datum_);
  if (!violations.empty()) {
    std::string msg = "invalid root datum:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw InvalidDatum(msg);
  }
  cartan_ = datum_.cartan();
  symmetrizer_ = *satake_fold::symmetrizer(cartan_);
  cartan_det_ = determinant(cartan_);
  const auto inv = field_inverse(to_rational(cartan_));
  if (!inv) throw InternalConsistencyError("finite-type Cartan matrix is singular");
  cartan_adj_ = IntMatrix(rank(), rank());
  for (Eigen::Index i = 0; i < rank(); ++i) {
    for (Eigen::Index j = 0; j < rank(); ++j) {
      const Rational v = (*inv)(i, j) * cartan_det_;
      if (v.denominator() != 1) throw InternalConsistencyError("adjugate is not integral");
      cartan_adj_(i, j) = v.numerator();
    }
  }
  positive_ = positive_roots(datum_);
  rho_vee_ = RationalCoweight::Zero(dim());
  two_rho_ = Weight::Zero(dim());
  for (std::size_t k = 0; k < positive_.roots.size(); ++k) {
    rho_vee_ += positive_.coroots[k].cast<Rational>();
    two_rho_ += positive_.roots[k];
  }
  rho_vee_ /= Rational(2);
}

bool RootSystem::is_simply_laced() const {
  for (Eigen::Index i = 0; i < rank(); ++i) {
    for (Eigen::Index j = 0; j < rank(); ++j) {
      if (i != j && cartan_(i, j) * cartan_(j, i) > 1) return false;
    }
  }
  return true;
}

std::optional<IntVector> RootSystem::scaled_coroot_coordinates(const Coweight& x) const {
  const IntVector num = cartan_adj_ * labels(x);
  if (datum_.simple_coroots * num != cartan_det_ * x) return std::nullopt;
  return num;
}

std::optional<RatVector> RootSystem::coroot_coordinates(const Coweight& x) const {
  const auto num = scaled_coroot_coordinates(x);
  if (!num) return std::nullopt;
  RatVector out(num->size());
  for (Eigen::Index i = 0; i < num->size(); ++i) out(i) = Rational((*num)(i), cartan_det_);
  return out;
}

std::optional<IntVector> RootSystem::coroot_lattice_coordinates(const Coweight& x) const {
  const auto num = scaled_coroot_coordinates(x);
  if (!num) return std::nullopt;
  if (!divisible(*num, cartan_det_)) return std::nullopt;
  return IntVector(*num / cartan_det_);
}

bool RootSystem::dominance_le(const Coweight& lambda, const Coweight& mu, ConeMode mode) const {
  const auto num = scaled_coroot_coordinates(mu - lambda);
  if (!num || (num->array() < 0).any()) return false;
  if (mode == ConeMode::Integer) return divisible(*num, cartan_det_);
  return true;
}

Coweight RootSystem::reflect(Eigen::Index i, const Coweight& x) const {
  return x - datum_.simple_roots.col(i).dot(x) * datum_.simple_coroots.col(i);
}

Weight RootSystem::reflect_weight(Eigen::Index i, const Weight& x) const {
  return x - datum_.simple_coroots.col(i).dot(x) * datum_.simple_roots.col(i);
}

Coweight RootSystem::dominant_representative(const Coweight& x) const {
  Coweight y = x;
  bool moved = true;
  while (moved) {
    moved = false;
    const IntVector a = labels(y);
    for (Eigen::Index i = 0; i < rank(); ++i) {
      if (a(i) < 0) {
        y = reflect(i, y);
        moved = true;
        break;
      }
    }
  }
  return y;
}

std::vector<Coweight> RootSystem::orbit(const Coweight& x) const {
  std::set<Coweight, LexLess> seen{x};
  std::deque<Coweight> queue{x};
  while (!queue.empty()) {
    const Coweight y = queue.front();
    queue.pop_front();
    for (Eigen::Index i = 0; i < rank(); ++i) {
      Coweight z = reflect(i, y);
      if (seen.insert(z).second) queue.push_back(std::move(z));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Coweight> RootSystem::dominant_weights_below(const Coweight& mu) const {
  if (!is_dominant(mu)) throw PreconditionError("coweight is not dominant");
  // A dominant nu has nonnegative coroot coordinates, so mu - nu = sum c_j alpha_j^v
  // forces 0 <= c_j <= q_j(mu).
  const IntVector q_num = cartan_adj_ * labels(mu);
  IntVector bound(rank());
  for (Eigen::Index j = 0; j < rank(); ++j) bound(j) = q_num(j) / cartan_det_;
  std::vector<Coweight> out;
  IntVector c = IntVector::Zero(rank());
  while (true) {
    const Coweight nu = mu - datum_.simple_coroots * c;
    if (is_dominant(nu)) out.push_back(nu);
    Eigen::Index j = 0;
    while (j < rank() && c(j) == bound(j)) c(j++) = 0;
    if (j == rank()) break;
    ++c(j);
  }
  std::sort(out.begin(), out.end(), [this](const Coweight& a, const Coweight& b) { return coweight_order(a, b); });
  return out;
}

std::vector<Coweight> RootSystem::weight_set(const Coweight& mu) const {
  if (!is_dominant(mu)) throw PreconditionError("weight_set: mu is not dominant");
  std::vector<Coweight> out;
  for (const auto& nu : dominant_weights_below(mu)) {
    const auto orb = orbit(nu);
    out.insert(out.end(), orb.begin(), orb.end());
  }
  std::sort(out.begin(), out.end(), [this](const Coweight& a, const Coweight& b) { return coweight_order(a, b); });
  return out;
}

bool RootSystem::coweight_order(const Coweight& a, const Coweight& b) const {
  const Integer ha = height(a);
  const Integer hb = height(b);
  if (ha != hb) return ha > hb;
  return LexLess{}(b, a);
}

Integer RootSystem::form(const Coweight& x, const IntVector& coroot_coefficients) const {
  const IntVector a = labels(x);
  Integer s = 0;
  for (Eigen::Index j = 0; j < rank(); ++j) s += coroot_coefficients(j) * symmetrizer_(j) * a(j);
  return s;
}

Integer RootSystem::form_coroot(const IntVector& a_coeffs, const IntVector& b_coeffs) const {
  // (sum a_i alpha_i^v, alpha_j^v) = sum_i a_i C(j, i) D_j.
  Integer s = 0;
  for (Eigen::Index j = 0; j < rank(); ++j) {
    if (b_coeffs(j) == 0) continue;
    s += b_coeffs(j) * symmetrizer_(j) * cartan_.row(j).dot(a_coeffs);
  }
  return s;
}

RationalCoweight rho_vee(const RootDatum& datum) { return RootSystem(datum).rho_vee(); }

bool dominance_le(const RootDatum& datum, const Coweight& lambda, const Coweight& mu, ConeMode mode) {
  return RootSystem(datum).dominance_le(lambda, mu, mode);
}

std::vector<Coweight> weight_set(const RootDatum& datum, const Coweight& mu) {
  return RootSystem(datum).weight_set(mu);
}

}  // namespace satake_fold
