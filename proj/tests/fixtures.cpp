#include "fixtures.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "satake_fold/lattice.hpp"

namespace test_support {

using namespace satake_fold;

namespace {

using Mat3 = Eigen::Matrix<Integer, 3, 3>;

}  // namespace

std::map<std::pair<int, int>, Integer> sl3_adjoint_traces() {
  std::vector<Mat3> basis;
  std::vector<std::pair<int, int>> weight;
  // Coefficients of e_i - e_j in the simple roots.
  auto coeff = [](int i, int j) {
    int a = 0, b = 0;
    for (int k = std::min(i, j); k < std::max(i, j); ++k) (k == 0 ? a : b) += (i < j ? 1 : -1);
    return std::make_pair(a, b);
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Mat3 e = Mat3::Zero();
      e(i, j) = 1;
      basis.push_back(e);
      weight.push_back(coeff(i, j));
    }
  }
  for (int i = 0; i < 2; ++i) {
    Mat3 h = Mat3::Zero();
    h(i, i) = 1;
    h(i + 1, i + 1) = -1;
    basis.push_back(h);
    weight.push_back({0, 0});
  }
  Mat3 j = Mat3::Zero();
  j(0, 2) = 1;
  j(1, 1) = -1;
  j(2, 0) = 1;
  const Mat3 j_inv = j;  // J^2 = 1
  // Coordinates in the basis: solve a 9x8 integer system.
  IntMatrix b(9, 8);
  for (int k = 0; k < 8; ++k) {
    for (int t = 0; t < 9; ++t) b(t, k) = basis[static_cast<std::size_t>(k)](t / 3, t % 3);
  }
  IntMatrix action(8, 8);
  for (int k = 0; k < 8; ++k) {
    const Mat3 image = -j * basis[static_cast<std::size_t>(k)].transpose() * j_inv;
    IntVector flat(9);
    for (int t = 0; t < 9; ++t) flat(t) = image(t / 3, t % 3);
    const auto coords = solve_integer(b, flat);
    if (!coords) throw std::runtime_error("adjoint action is not integral in the chosen basis");
    action.col(k) = *coords;
  }
  std::map<std::pair<int, int>, Integer> traces;
  for (int k = 0; k < 8; ++k) traces[weight[static_cast<std::size_t>(k)]] += action(k, k);
  const Integer sign = traces.at({1, 1});
  for (auto& kv : traces) kv.second *= sign;
  return traces;
}


}  // namespace test_support
