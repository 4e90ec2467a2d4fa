// Benchmark: OpenMP kernels against the serial reference paths.

#include "qzeta/continuation.hpp"
#include "qzeta/integral_shuffle.hpp"
#include "qzeta/parallel.hpp"
#include "qzeta/shuffle.hpp"

#include <chrono>
#include <iostream>

using namespace qzeta;

namespace {

template <typename Fn>
std::pair<double, Complex> timed(Fn&& fn, int reps) {
    Complex last;
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) last = fn();
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count() /
                reps;
    return {ms, last};
}

template <typename Fn>
void compare(const std::string& name, Fn&& fn, int reps = 3) {
    parallel::set_enabled(false);
    auto [serial_ms, serial_val] = timed(fn, reps);
    parallel::set_enabled(true);
    auto [parallel_ms, parallel_val] = timed(fn, reps);
    std::cout << name << ":\n"
              << "  serial   " << serial_ms << " ms\n"
              << "  parallel " << parallel_ms << " ms  (" << parallel::worker_count()
              << " workers, speedup " << serial_ms / parallel_ms << "x)\n"
              << "  |diff|   " << real_str(cabs(serial_val - parallel_val), 4) << "\n";
}

}  // namespace

int main() {
    SeriesConfig cfg{pow10(-34), 400000};

    {
        QParam q8(Real(4) / 5);
        SVec point{Complex(Real(1) / 2, Real(1) / 3), Complex(Real(-5) / 2)};
        compare("continuation grid, depth 2, q = 0.8",
                [&] { return qzeta_continued(point, q8, cfg).value; });
    }
    {
        QParam q7(Real(7) / 10);
        compare("numeric residue ladder at (4,-4), q = 0.7",
                [&] { return numeric_residue({Complex(4), Complex(-4)}, q7, cfg).value; },
                1);
    }
    {
        compare("q->1 ladder of zeta_q(2,3)",
                [&] {
                    SeriesConfig c{pow10(-20), 600000};
                    return q_to_1_limit(
                               [&](const QParam& qp) {
                                   return qzeta_direct({Complex(2), Complex(3)}, qp, c)
                                       .value;
                               },
                               3, 10)
                        .value;
                },
                1);
    }
    {
        QParam q8(Real(4) / 5);
        auto combo = qshuffle({Complex(2), Complex(3)}, {Complex(2), Complex(4)});
        compare("combo evaluation, 2x2 shuffle product, q = 0.8",
                [&] { return eval_combo(combo, q8, cfg).value; });
    }
    return 0;
}
