#pragma once

#include "qzeta/real.hpp"

#include <vector>

namespace qzeta {

struct LimitEstimate {
    Complex value{};
    int levels_used = 0;
    Real residual{};  // magnitude of the last extrapolation correction
};

/// Richardson extrapolation of samples f(x_j) with x_j = x_0 * 2^{-j},
/// assuming an error expansion in integer powers of x. Columns are capped
/// at max_order; the entry with the smallest correction wins, so a noisy
/// deep column cannot spoil an already-settled estimate.
LimitEstimate richardson(const std::vector<Complex>& samples, int max_order = 6);

}  // namespace qzeta
