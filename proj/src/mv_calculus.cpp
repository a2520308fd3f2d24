#include "satake_fold/mv_calculus.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace satake_fold {

LusztigDatum braid_transition(const IntMatrix& cartan, const LusztigDatum& datum, std::size_t k, int m) {
  if (m >= 4) throw UnsupportedBraid("braid move of order " + std::to_string(m) + " is not supported");
  if (m < 2 || k + static_cast<std::size_t>(m) > datum.word.size() || datum.n.size() != datum.word.size()) {
    throw PreconditionError("braid window out of range");
  }
  const int a = datum.word[k];
  const int b = datum.word[k + 1];
  if (a == b || coxeter_order(cartan, a, b) != m) throw PreconditionError("braid window has the wrong order");
  for (int t = 0; t < m; ++t) {
    if (datum.word[k + static_cast<std::size_t>(t)] != (t % 2 == 0 ? a : b)) {
      throw PreconditionError("braid window is not alternating");
    }
  }
  LusztigDatum out = datum;
  for (int t = 0; t < m; ++t) out.word[k + static_cast<std::size_t>(t)] = (t % 2 == 0 ? b : a);
  if (m == 2) {
    std::swap(out.n[k], out.n[k + 1]);
  } else {
    const Integer x = datum.n[k], y = datum.n[k + 1], z = datum.n[k + 2];
    const Integer p = std::min(x, z);
    out.n[k] = y + z - p;
    out.n[k + 1] = p;
    out.n[k + 2] = x + y - p;
  }
  return out;
}

std::vector<std::vector<Integer>> nonnegative_solutions(const std::vector<IntVector>& columns, const IntVector& target) {
  std::vector<std::vector<Integer>> out;
  const std::size_t len = columns.size();
  if ((target.array() < 0).any()) return out;
  // suffix[k](j): some column at or after k has a positive entry j.
  std::vector<std::vector<bool>> suffix(len + 1, std::vector<bool>(static_cast<std::size_t>(target.size()), false));
  for (std::size_t k = len; k-- > 0;) {
    suffix[k] = suffix[k + 1];
    for (Eigen::Index j = 0; j < target.size(); ++j) {
      if (columns[k](j) < 0) throw PreconditionError("nonnegative_solutions: negative column entry");
      if (columns[k](j) > 0) suffix[k][static_cast<std::size_t>(j)] = true;
    }
  }
  std::vector<Integer> n(len, 0);
  auto reachable = [&](const IntVector& r, std::size_t k) {
    for (Eigen::Index j = 0; j < r.size(); ++j) {
      if (r(j) > 0 && !suffix[k][static_cast<std::size_t>(j)]) return false;
    }
    return true;
  };
  std::function<void(std::size_t, const IntVector&)> recurse = [&](std::size_t k, const IntVector& r) {
    if (k == len) {
      if (r.isZero()) out.push_back(n);
      return;
    }
    Integer hi = -1;
    for (Eigen::Index j = 0; j < r.size(); ++j) {
      if (columns[k](j) > 0) {
        const Integer q = r(j) / columns[k](j);
        hi = hi < 0 ? q : std::min(hi, q);
      }
    }
    if (hi < 0) throw PreconditionError("nonnegative_solutions: zero column");
    for (Integer t = hi; t >= 0; --t) {
      const IntVector rest = r - t * columns[k];
      if (!reachable(rest, k + 1)) continue;
      n[k] = t;
      recurse(k + 1, rest);
    }
    n[k] = 0;
  };
  if (reachable(target, 0)) recurse(0, target);
  return out;
}

MvCalculator::MvCalculator(const WeylGroup& group) : group_(group) {}

std::vector<Coweight> MvCalculator::steps(const Word& word) const {
  std::vector<Coweight> out;
  int x = group_.identity();
  for (int i : word) {
    if (i < 0 || i >= group_.rank()) throw PreconditionError("simple index out of range");
    out.push_back(-group_.apply(x, system().datum().coroot(i)));
    x = group_.right_multiply(x, i);
  }
  return out;
}

std::vector<IntVector> MvCalculator::step_coefficients(const Word& word) const {
  std::vector<IntVector> out;
  for (const auto& beta : steps(word)) {
    const auto c = system().coroot_lattice_coordinates(-beta);
    if (!c) throw InternalConsistencyError("path step is not a coroot");
    out.push_back(*c);
  }
  return out;
}

PathVertices MvCalculator::path_vertices(const LusztigDatum& datum) const {
  if (datum.n.size() != datum.word.size()) throw PreconditionError("Lusztig datum length differs from its word");
  PathVertices out{datum.word, steps(datum.word), {}};
  Coweight nu = Coweight::Zero(system().dim());
  out.points.push_back(nu);
  for (std::size_t k = 0; k < out.steps.size(); ++k) {
    nu += datum.n[k] * out.steps[k];
    out.points.push_back(nu);
  }
  return out;
}

Coweight MvCalculator::coweight(const LusztigDatum& datum) const { return path_vertices(datum).points.back(); }

void MvCalculator::require_simply_laced() const {
  if (!system().is_simply_laced()) {
    throw UnsupportedBraid("Lusztig data transport requires a simply-laced root datum");
  }
}

std::shared_ptr<const MvCalculator::Tree> MvCalculator::tree(const Word& source) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = trees_.find(source);
    if (it != trees_.end()) return it->second;
  }
  auto t = std::make_shared<Tree>();
  t->words.push_back(source);
  t->parent.push_back(-1);
  t->position.push_back(0);
  t->order.push_back(0);
  t->index.emplace(source, 0);
  for (std::size_t head = 0; head < t->words.size(); ++head) {
    const Word current = t->words[head];
    for (auto& nb : braid_neighbors(system().cartan(), current)) {
      if (t->index.count(nb.word)) continue;
      t->index.emplace(nb.word, static_cast<int>(t->words.size()));
      t->words.push_back(std::move(nb.word));
      t->parent.push_back(static_cast<int>(head));
      t->position.push_back(nb.position);
      t->order.push_back(nb.order);
    }
  }
  for (const auto& w : t->words) t->steps.push_back(steps(w));
  std::lock_guard<std::mutex> lock(mutex_);
  return trees_.emplace(source, std::move(t)).first->second;
}

LusztigDatum MvCalculator::transport(const LusztigDatum& datum, const Word& target) const {
  require_simply_laced();
  if (datum.word == target) return datum;
  const auto t = tree(datum.word);
  const auto it = t->index.find(target);
  if (it == t->index.end()) throw PreconditionError("target is not a reduced word for w0");
  std::vector<int> path;
  for (int v = it->second; v > 0; v = t->parent[static_cast<std::size_t>(v)]) path.push_back(v);
  LusztigDatum out = datum;
  for (auto p = path.rbegin(); p != path.rend(); ++p) {
    const auto v = static_cast<std::size_t>(*p);
    out = braid_transition(system().cartan(), out, t->position[v], t->order[v]);
  }
  return out;
}

Word MvCalculator::prefix_word(int w) const {
  Word out = group_.word(w);
  const Word& rest = group_.word(group_.multiply(group_.inverse(w), group_.longest()));
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

GGMSDatum MvCalculator::ggms(const LusztigDatum& datum) const {
  require_simply_laced();
  const auto t = tree(datum.word);
  std::vector<std::vector<Integer>> ns(t->words.size());
  ns[0] = datum.n;
  for (std::size_t v = 1; v < t->words.size(); ++v) {
    const auto p = static_cast<std::size_t>(t->parent[v]);
    ns[v] = braid_transition(system().cartan(), LusztigDatum{t->words[p], ns[p]}, t->position[v], t->order[v]).n;
  }
  GGMSDatum out;
  for (int w = 0; w < static_cast<int>(group_.size()); ++w) {
    const auto v = static_cast<std::size_t>(t->index.at(prefix_word(w)));
    Coweight nu = Coweight::Zero(system().dim());
    for (int k = 0; k < group_.length(w); ++k) {
      nu += ns[v][static_cast<std::size_t>(k)] * t->steps[v][static_cast<std::size_t>(k)];
    }
    out.vertices.push_back(nu);
  }
  return out;
}

bool MvCalculator::is_mv(const LusztigDatum& datum, const Coweight& mu) const {
  const RootSystem& rs = system();
  if (!rs.is_dominant(mu)) throw PreconditionError("is_mv: mu is not dominant");
  const Coweight lambda = mu + coweight(datum);
  if (!rs.dominance_le(rs.dominant_representative(lambda), mu, ConeMode::Integer)) {
    throw PreconditionError("is_mv: mu + coweight lies outside Wt(mu) (convex hull or coset check failed)");
  }
  const GGMSDatum g = ggms(datum);
  for (int w = 0; w < static_cast<int>(group_.size()); ++w) {
    const Coweight vertex = g.vertices[static_cast<std::size_t>(w)] + mu;
    if (!group_.le_w(w, vertex, group_.apply(w, mu), ConeMode::Rational)) return false;
  }
  return true;
}

std::optional<IntVector> MvCalculator::negative_coroot_coordinates(const Coweight& nu) const {
  const auto c = system().coroot_lattice_coordinates(-nu);
  if (!c || (c->array() < 0).any()) return std::nullopt;
  return c;
}

std::vector<LusztigDatum> MvCalculator::enumerate_data(const Word& word, const Coweight& nu) const {
  std::vector<LusztigDatum> out;
  const auto target = negative_coroot_coordinates(nu);
  if (!target) return out;
  for (auto& n : nonnegative_solutions(step_coefficients(word), *target)) out.push_back({word, std::move(n)});
  return out;
}

Integer MvCalculator::kostant(const Coweight& nu) const {
  const auto target = negative_coroot_coordinates(nu);
  if (!target) return 0;
  const auto& roots = system().positive().coroot_coefficients;
  std::map<std::pair<std::size_t, std::vector<Integer>>, Integer> memo;
  std::function<Integer(std::size_t, const IntVector&)> count = [&](std::size_t i, const IntVector& r) -> Integer {
    if (r.isZero()) return 1;
    if (i == roots.size()) return 0;
    const auto key = std::make_pair(i, to_std(r));
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (IntVector rest = r; (rest.array() >= 0).all(); rest -= roots[i]) total += count(i + 1, rest);
    memo.emplace(key, total);
    return total;
  };
  return count(0, *target);
}

bool is_sigma_invariant(const SigmaCompatibleWord& scw, const LusztigDatum& datum) {
  if (datum.word != scw.word || datum.n.size() != scw.word.size()) {
    throw PreconditionError("Lusztig datum is not on the sigma-compatible word");
  }
  for (std::size_t b = 0; b + 1 < scw.block_start.size(); ++b) {
    for (std::size_t k = scw.block_start[b] + 1; k < scw.block_start[b + 1]; ++k) {
      if (datum.n[k] != datum.n[scw.block_start[b]]) return false;
    }
  }
  return true;
}

LusztigDatum bar(const SigmaCompatibleWord& scw, const LusztigDatum& datum) {
  if (!is_sigma_invariant(scw, datum)) throw PreconditionError("bar: Lusztig datum is not sigma-invariant");
  LusztigDatum out{scw.sigma_word, {}};
  for (std::size_t b = 0; b + 1 < scw.block_start.size(); ++b) out.n.push_back(datum.n[scw.block_start[b]]);
  return out;
}

LusztigDatum unbar(const SigmaCompatibleWord& scw, const std::vector<Integer>& folded) {
  if (folded.size() + 1 != scw.block_start.size()) throw PreconditionError("unbar: wrong number of entries");
  LusztigDatum out{scw.word, std::vector<Integer>(scw.word.size(), 0)};
  for (std::size_t k = 0; k < scw.word.size(); ++k) out.n[k] = folded[static_cast<std::size_t>(scw.block_of[k])];
  return out;
}

std::vector<LusztigDatum> enumerate_sigma_invariant_data(const MvCalculator& mv, const SigmaCompatibleWord& scw,
                                                         const Coweight& nu) {
  std::vector<LusztigDatum> out;
  const auto target = mv.system().coroot_lattice_coordinates(-nu);
  if (!target || (target->array() < 0).any()) return out;
  const auto coeffs = mv.step_coefficients(scw.word);
  std::vector<IntVector> blocks(scw.block_start.size() - 1, IntVector::Zero(target->size()));
  for (std::size_t k = 0; k < coeffs.size(); ++k) blocks[static_cast<std::size_t>(scw.block_of[k])] += coeffs[k];
  for (const auto& nbar : nonnegative_solutions(blocks, *target)) out.push_back(unbar(scw, nbar));
  return out;
}

}  // namespace satake_fold
