#pragma once

#include <vector>

#include "mpcjoin/bigmath.hpp"

namespace mpcjoin {

/// Optimal solution of max c'x s.t. Ax <= b, x >= 0.
struct LpOptimum {
    BigRat objective;
    std::vector<BigRat> x;     // primal values, one per column
    std::vector<BigRat> dual;  // dual values, one per row
};

/// Exact primal simplex with Bland's rule over arbitrary-precision rationals.
/// Requires b >= 0 (the slack basis is then feasible) and a bounded optimum;
/// throws std::domain_error otherwise. Deterministic: identical inputs give
/// the identical optimal basis on every platform.
LpOptimum simplex_max(const std::vector<std::vector<BigRat>>& A, const std::vector<BigRat>& b,
                      const std::vector<BigRat>& c);

}  // namespace mpcjoin
