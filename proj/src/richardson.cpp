#include "qzeta/richardson.hpp"

#include "qzeta/errors.hpp"

namespace qzeta {

LimitEstimate richardson(const std::vector<Complex>& samples, int max_order) {
    const int n = static_cast<int>(samples.size());
    if (n == 0) throw DomainError("richardson: no samples");
    if (n == 1) return {samples[0], 1, Real(0)};

    // T[i][m]: m-th column at level i, error term x^{m+1} eliminated by
    // column m+1. Factor-2 ladder: T[i][m] = (2^m T[i][m-1] - T[i-1][m-1]) / (2^m - 1).
    std::vector<std::vector<Complex>> t(n);
    for (int i = 0; i < n; ++i) {
        t[i].resize(std::min(i, max_order) + 1);
        t[i][0] = samples[i];
        for (int m = 1; m <= std::min(i, max_order); ++m) {
            Real w = pow(Real(2), m);
            t[i][m] = (w * t[i][m - 1] - t[i - 1][m - 1]) / (w - 1);
        }
    }

    // Best estimate: deepest row, column with the smallest last correction.
    const auto& last = t[n - 1];
    const auto& prev = t[n - 2];
    Complex best = last[0];
    Real best_res = cabs(last[0] - prev[0]);
    for (int m = 1; m < static_cast<int>(last.size()); ++m) {
        Real corr = cabs(last[m] - last[m - 1]);
        if (m - 1 < static_cast<int>(prev.size()))
            corr += cabs(last[m] - prev[m - 1]);
        if (corr < best_res) {
            best_res = corr;
            best = last[m];
        }
    }
    return {best, n, best_res};
}

}  // namespace qzeta
