#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <boost/rational.hpp>

namespace satake_fold {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = MatrixX<Integer>;
using IntVector = VectorX<Integer>;
using RatMatrix = MatrixX<Rational>;
using RatVector = VectorX<Rational>;

// Coordinates in the fixed basis of X (weights) or its dual basis of X^v
// (coweights). The pairing between the two is the dot product.
using Weight = IntVector;
using Coweight = IntVector;
using RationalCoweight = RatVector;

// Sequence of 0-based simple indices.
using Word = std::vector<int>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDatum : public Error {
 public:
  using Error::Error;
};
class EnumerationDiverged : public Error {
 public:
  using Error::Error;
};
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};
class PreconditionError : public Error {
 public:
  using Error::Error;
};
class UnsupportedOrbit : public Error {
 public:
  using Error::Error;
};
class UnsupportedBraid : public Error {
 public:
  using Error::Error;
};
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};
class InvalidAutomorphism : public Error {
 public:
  using Error::Error;
};
class ParseError : public Error {
 public:
  using Error::Error;
};

template <typename Derived>
std::vector<typename Derived::Scalar> to_std(const Eigen::MatrixBase<Derived>& v) {
  return std::vector<typename Derived::Scalar>(v.derived().data(),
                                               v.derived().data() + v.size());
}

template <typename Scalar>
VectorX<Scalar> from_std(const std::vector<Scalar>& v) {
  VectorX<Scalar> out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

/// Lexicographic strict order on dense integer vectors (shorter first on
/// dimension mismatch). Used as the comparator of every coweight-keyed map.
struct LexLess {
  template <typename A, typename B>
  bool operator()(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  }
};

struct VectorHash {
  template <typename Derived>
  std::size_t operator()(const Eigen::MatrixBase<Derived>& v) const {
    std::size_t h = static_cast<std::size_t>(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      h ^= std::hash<Integer>{}(static_cast<Integer>(v(i))) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct VectorEqual {
  template <typename A, typename B>
  bool operator()(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const {
    return a.size() == b.size() && a == b;
  }
};

}  // namespace satake_fold

namespace Eigen {

template <>
struct NumTraits<satake_fold::Rational> : GenericNumTraits<satake_fold::Rational> {
  using Real = satake_fold::Rational;
  using NonInteger = satake_fold::Rational;
  using Nested = satake_fold::Rational;
  using Literal = satake_fold::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
