#pragma once

// Exact linear algebra over Z and Q: Smith normal form, saturated kernels,
// integer solves, Bareiss determinants and rational inverses. Everything is
// templated on the scalar so the same code serves int64 lattices and
// boost::rational fields.

#include <optional>
#include <utility>

#include "satake_fold/types.hpp"

namespace satake_fold {

template <typename Scalar>
struct SmithForm {
  MatrixX<Scalar> U;  // m x m, unimodular
  MatrixX<Scalar> D;  // m x n, diagonal with d_0 | d_1 | ...
  MatrixX<Scalar> V;  // n x n, unimodular
  Eigen::Index rank = 0;

  std::vector<Scalar> invariant_factors() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < rank; ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename M>
void swap_rows(M& a, Eigen::Index i, Eigen::Index j) {
  if (i != j) a.row(i).swap(a.row(j));
}
template <typename M>
void swap_cols(M& a, Eigen::Index i, Eigen::Index j) {
  if (i != j) a.col(i).swap(a.col(j));
}

template <typename Scalar>
Scalar abs_value(Scalar x) {
  return x < Scalar(0) ? -x : x;
}

}  // namespace detail

/// U * A * V = D with U, V unimodular and D in Smith normal form.
template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using detail::abs_value;
  const Eigen::Index m = input.rows();
  const Eigen::Index n = input.cols();
  MatrixX<Scalar> a = input;
  MatrixX<Scalar> u = MatrixX<Scalar>::Identity(m, m);
  MatrixX<Scalar> v = MatrixX<Scalar>::Identity(n, n);

  Eigen::Index t = 0;
  for (; t < std::min(m, n); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < m; ++i) {
      for (Eigen::Index j = t; j < n; ++j) {
        if (a(i, j) != 0 && (pi < 0 || abs_value(a(i, j)) < abs_value(a(pi, pj)))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi < 0) break;
    detail::swap_rows(a, t, pi);
    detail::swap_rows(u, t, pi);
    detail::swap_cols(a, t, pj);
    detail::swap_cols(v, t, pj);

    while (true) {
      bool changed = false;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        while (a(i, t) != 0) {
          const Scalar q = a(i, t) / a(t, t);
          a.row(i) -= q * a.row(t);
          u.row(i) -= q * u.row(t);
          if (a(i, t) != 0) {
            detail::swap_rows(a, i, t);
            detail::swap_rows(u, i, t);
          }
          changed = true;
        }
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        while (a(t, j) != 0) {
          const Scalar q = a(t, j) / a(t, t);
          a.col(j) -= q * a.col(t);
          v.col(j) -= q * v.col(t);
          if (a(t, j) != 0) {
            detail::swap_cols(a, j, t);
            detail::swap_cols(v, j, t);
          }
          changed = true;
        }
      }
      if (changed) continue;
      bool divisible = true;
      for (Eigen::Index i = t + 1; i < m && divisible; ++i) {
        for (Eigen::Index j = t + 1; j < n; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.row(t) += a.row(i);
            u.row(t) += u.row(i);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      u.row(t) = -u.row(t);
    }
  }
  return SmithForm<Scalar>{std::move(u), std::move(a), std::move(v), t};
}

/// Row-style Hermite normal form: echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are dropped. The row lattice is
/// unchanged.
template <typename Derived>
MatrixX<typename Derived::Scalar> hermite_rows(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> a = input;
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  Eigen::Index row = 0;
  std::vector<Eigen::Index> pivot_cols;
  for (Eigen::Index col = 0; col < n && row < m; ++col) {
    // Euclid down the column until a single nonzero remains at `row`.
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = row; i < m; ++i) {
        if (a(i, col) != 0 &&
            (best < 0 || detail::abs_value(a(i, col)) < detail::abs_value(a(best, col)))) {
          best = i;
        }
      }
      if (best < 0) break;
      detail::swap_rows(a, row, best);
      bool cleared = true;
      for (Eigen::Index i = row + 1; i < m; ++i) {
        if (a(i, col) != 0) {
          const Scalar q = a(i, col) / a(row, col);
          a.row(i) -= q * a.row(row);
          if (a(i, col) != 0) cleared = false;
        }
      }
      if (cleared) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) a.row(row) = -a.row(row);
    for (Eigen::Index i = 0; i < row; ++i) {
      Scalar q = a(i, col) / a(row, col);
      if (a(i, col) - q * a(row, col) < 0) q -= 1;
      a.row(i) -= q * a.row(row);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return a.topRows(row);
}

/// Basis (as columns) of the saturated lattice {x in Z^n : A x = 0}, in
/// canonical Hermite form.
template <typename Derived>
MatrixX<typename Derived::Scalar> integer_kernel(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto snf = smith_normal_form(a);
  const Eigen::Index k = a.cols() - snf.rank;
  if (k == 0) return MatrixX<Scalar>(a.cols(), 0);
  const MatrixX<Scalar> basis = snf.V.rightCols(k);
  return hermite_rows(basis.transpose()).transpose();
}

/// Some integer solution of A x = b, or nullopt. Free coordinates (in the
/// Smith basis) are set to zero, so the answer is deterministic.
template <typename DA, typename DB>
std::optional<VectorX<typename DA::Scalar>> solve_integer(const Eigen::MatrixBase<DA>& a,
                                                          const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  const auto snf = smith_normal_form(a);
  const VectorX<Scalar> ub = snf.U * b;
  VectorX<Scalar> y = VectorX<Scalar>::Zero(a.cols());
  for (Eigen::Index i = 0; i < ub.size(); ++i) {
    if (i < snf.rank) {
      if (ub(i) % snf.D(i, i) != 0) return std::nullopt;
      y(i) = ub(i) / snf.D(i, i);
    } else if (ub(i) != 0) {
      return std::nullopt;
    }
  }
  return VectorX<Scalar>(snf.V * y);
}

/// Integer L with L * P = I for a primitive (saturated, full column rank) P.
template <typename Derived>
MatrixX<typename Derived::Scalar> primitive_left_inverse(const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  const auto snf = smith_normal_form(p);
  const Eigen::Index k = p.cols();
  if (snf.rank != k) throw InternalConsistencyError("primitive_left_inverse: rank deficient");
  for (Eigen::Index i = 0; i < k; ++i) {
    if (snf.D(i, i) != 1) throw InternalConsistencyError("primitive_left_inverse: not saturated");
  }
  return MatrixX<Scalar>(snf.V * snf.U.topRows(k));
}

template <typename Derived>
Eigen::Index integer_rank(const Eigen::MatrixBase<Derived>& a) {
  return smith_normal_form(a).rank;
}

/// Fraction-free Gaussian elimination (Bareiss).
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);
  MatrixX<Scalar> a = input;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i) {
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return Scalar(0);
      detail::swap_rows(a, k, swap);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Gauss-Jordan inverse over a field scalar; nullopt if singular.
template <typename Derived>
std::optional<MatrixX<typename Derived::Scalar>> field_inverse(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = input.rows();
  MatrixX<Scalar> a = input;
  MatrixX<Scalar> inv = MatrixX<Scalar>::Identity(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && a(p, c) == Scalar(0)) ++p;
    if (p == n) return std::nullopt;
    detail::swap_rows(a, c, p);
    detail::swap_rows(inv, c, p);
    const Scalar pivot = a(c, c);
    a.row(c) /= pivot;
    inv.row(c) /= pivot;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == c || a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c);
      a.row(i) -= f * a.row(c);
      inv.row(i) -= f * inv.row(c);
    }
  }
  return inv;
}

template <typename Derived>
RatMatrix to_rational(const Eigen::MatrixBase<Derived>& a) {
  return a.template cast<Rational>();
}

}  // namespace satake_fold
