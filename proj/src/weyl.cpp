#include "satake_fold/weyl.hpp"

#include <cstdlib>
#include <string>

namespace satake_fold {

std::size_t default_word_cap() {
  if (const char* env = std::getenv("SATAKE_FOLD_MAX_WORDS")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1000000;
}

std::vector<BraidNeighbor> braid_neighbors(const IntMatrix& cartan, const Word& word) {
  std::vector<BraidNeighbor> out;
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    const int a = word[k];
    const int b = word[k + 1];
    if (a == b) continue;
    const int m = coxeter_order(cartan, a, b);
    if (m == 0 || k + static_cast<std::size_t>(m) > word.size()) continue;
    bool alternating = true;
    for (int t = 0; t < m && alternating; ++t) alternating = word[k + t] == (t % 2 == 0 ? a : b);
    if (!alternating) continue;
    Word next = word;
    for (int t = 0; t < m; ++t) next[k + t] = (t % 2 == 0 ? b : a);
    out.push_back({k, m, std::move(next)});
  }
  return out;
}

WeylGroup::WeylGroup(RootSystem system, std::size_t max_elements) : system_(std::move(system)) {
  const Eigen::Index d = system_.dim();
  const int r = rank();
  const auto& datum = system_.datum();
  probe_ = Coweight::Zero(d);
  for (const auto& c : system_.positive().coroots) probe_ += c;
  for (int i = 0; i < r; ++i) {
    reflections_.push_back(IntMatrix::Identity(d, d) - datum.coroot(i) * datum.root(i).transpose());
  }

  elements_.push_back({Word{}, IntMatrix::Identity(d, d)});
  index_.emplace(key(elements_[0].matrix), 0);
  std::size_t level_begin = 0;
  while (level_begin < elements_.size()) {
    const std::size_t level_end = elements_.size();
    for (std::size_t w = level_begin; w < level_end; ++w) {
      for (int i = 0; i < r; ++i) {
        IntMatrix m = elements_[w].matrix * reflections_[static_cast<std::size_t>(i)];
        auto k = key(m);
        if (index_.count(k)) continue;
        if (elements_.size() >= max_elements) {
          throw SizeGuardExceeded("Weyl group has more than " + std::to_string(max_elements) + " elements");
        }
        Word word = elements_[w].canonical_word;
        word.push_back(i);
        index_.emplace(std::move(k), static_cast<int>(elements_.size()));
        elements_.push_back({std::move(word), std::move(m)});
      }
    }
    level_begin = level_end;
  }

  const std::size_t n = elements_.size();
  right_.assign(n, std::vector<int>(static_cast<std::size_t>(r)));
  left_.assign(n, std::vector<int>(static_cast<std::size_t>(r)));
  for (std::size_t w = 0; w < n; ++w) {
    for (int i = 0; i < r; ++i) {
      const auto si = static_cast<std::size_t>(i);
      right_[w][si] = index_.at(key(elements_[w].matrix * reflections_[si]));
      left_[w][si] = index_.at(key(reflections_[si] * elements_[w].matrix));
    }
  }
  inverse_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    int x = 0;
    const Word& word = elements_[w].canonical_word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = right_multiply(x, *it);
    inverse_[w] = x;
  }
}

std::vector<Integer> WeylGroup::key(const IntMatrix& m) const { return to_std(IntVector(m * probe_)); }

int WeylGroup::multiply(int a, int b) const {
  int x = a;
  for (int i : word(b)) x = right_multiply(x, i);
  return x;
}

int WeylGroup::evaluate(const Word& word) const {
  int x = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw PreconditionError("simple index " + std::to_string(i) + " out of range");
    x = right_multiply(x, i);
  }
  return x;
}

bool WeylGroup::is_reduced(const Word& word) const {
  return static_cast<int>(word.size()) == length(evaluate(word));
}

int WeylGroup::find(const IntMatrix& matrix) const {
  const auto it = index_.find(key(matrix));
  if (it == index_.end() || element(it->second).matrix != matrix) return -1;
  return it->second;
}

RationalCoweight WeylGroup::apply(int w, const RationalCoweight& x) const {
  return element(w).matrix.cast<Rational>() * x;
}

Weight WeylGroup::apply_weight(int w, const Weight& x) const {
  return element(inverse(w)).matrix.transpose() * x;
}

std::size_t WeylGroup::count_reduced_words(int w) const {
  // Saturates at SIZE_MAX / 2 to stay overflow-free on large groups.
  constexpr std::size_t kSat = static_cast<std::size_t>(-1) / 2;
  std::vector<std::size_t> count(size(), 0);
  count[0] = 1;
  for (std::size_t v = 1; v < size(); ++v) {
    std::size_t c = 0;
    for (int i = 0; i < rank(); ++i) {
      const int u = left_multiply(i, static_cast<int>(v));
      if (length(u) < length(static_cast<int>(v))) c = std::min(kSat, c + count[static_cast<std::size_t>(u)]);
    }
    count[v] = c;
    if (static_cast<int>(v) == w) break;
  }
  return count[static_cast<std::size_t>(w)];
}

std::vector<Word> WeylGroup::reduced_words(int w, std::size_t cap) const {
  const std::size_t total = count_reduced_words(w);
  if (total > cap) {
    throw SizeGuardExceeded("element has " + std::to_string(total) + " reduced words, cap is " +
                            std::to_string(cap) + " (set SATAKE_FOLD_MAX_WORDS to raise it)");
  }
  std::vector<Word> out;
  out.reserve(total);
  Word prefix;
  // Left descents in increasing order give lexicographic output.
  auto recurse = [&](auto&& self, int v) -> void {
    if (v == identity()) {
      out.push_back(prefix);
      return;
    }
    for (int i = 0; i < rank(); ++i) {
      const int u = left_multiply(i, v);
      if (length(u) >= length(v)) continue;
      prefix.push_back(i);
      self(self, u);
      prefix.pop_back();
    }
  };
  recurse(recurse, w);
  return out;
}

bool WeylGroup::le_w(int w, const Coweight& lambda, const Coweight& mu, ConeMode mode) const {
  const int winv = inverse(w);
  return system_.dominance_le(apply(winv, lambda), apply(winv, mu), mode);
}

int WeylGroup::relabel(int w, const std::vector<int>& perm) const {
  Word word = this->word(w);
  for (int& i : word) i = perm[static_cast<std::size_t>(i)];
  return evaluate(word);
}

std::vector<WeylElement> group_elements(const RootDatum& datum) {
  const WeylGroup group{RootSystem(datum)};
  std::vector<WeylElement> out;
  for (std::size_t w = 0; w < group.size(); ++w) out.push_back(group.element(static_cast<int>(w)));
  return out;
}

WeylElement longest_element(const RootDatum& datum) {
  const WeylGroup group{RootSystem(datum)};
  return group.element(group.longest());
}

std::vector<Word> reduced_words(const RootDatum& datum, const Word& w) {
  const WeylGroup group{RootSystem(datum)};
  return group.reduced_words(group.evaluate(w));
}

}  // namespace satake_fold
