#pragma once

#include <map>
#include <utility>

#include "satake_fold/types.hpp"

namespace test_support {

using satake_fold::Integer;

// The adjoint representation of sl3 with the pinned outer automorphism
// X -> -J X^T J^{-1}, J = antidiag(1, -1, 1), which exchanges E12 and E23.
// Returns the trace of the automorphism on each weight space, weights written
// in the basis (alpha_1^v, alpha_2^v), normalized so that the highest weight
// line is fixed.
std::map<std::pair<int, int>, Integer> sl3_adjoint_traces();

}  // namespace test_support
