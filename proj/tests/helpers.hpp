#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "satake_fold/builtins.hpp"

namespace test_support {

using namespace satake_fold;

inline IntVector vec(std::initializer_list<Integer> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Integer x : xs) v(i++) = x;
  return v;
}

inline IntMatrix mat(std::initializer_list<std::initializer_list<Integer>> rows) {
  const auto m = static_cast<Eigen::Index>(rows.size());
  const auto n = static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix a(m, n);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (Integer x : row) a(i, j++) = x;
    ++i;
  }
  return a;
}

inline Word word1(std::initializer_list<int> one_based) {
  Word w;
  for (int i : one_based) w.push_back(i - 1);
  return w;
}

inline IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  c.topLeftCorner(a.rows(), a.cols()) = a;
  c.bottomRightCorner(b.rows(), b.cols()) = b;
  return c;
}

inline IntMatrix random_matrix(std::mt19937& rng, Eigen::Index m, Eigen::Index n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix a(m, n);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = dist(rng);
  return a;
}

inline std::string show(const IntVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v(i));
  return s + ")";
}

}  // namespace test_support
