#include "doctest.h"
#include "oracles.hpp"

#include "qzeta/continuation.hpp"
#include "qzeta/parallel.hpp"
#include "qzeta/shuffle.hpp"

using namespace qzeta;

namespace {
const SeriesConfig kCfg{pow10(-36), 400000};

struct SerialGuard {
    bool saved;
    SerialGuard() : saved(parallel::enabled()) {}
    ~SerialGuard() { parallel::set_enabled(saved); }
};
}  // namespace

TEST_CASE("worker count reporting") {
    SerialGuard guard;
    parallel::set_enabled(false);
    CHECK(parallel::worker_count() == 1);
}

TEST_CASE("OpenMP kernels match the serial reference bit-for-bit or better") {
    SerialGuard guard;
    QParam q7(Real(7) / 10);

    // d = 2 continuation grid
    SVec point{Complex(Real(5) / 2, Real(1) / 3), Complex(Real(-3) / 2)};
    parallel::set_enabled(false);
    auto serial = qzeta_continued(point, q7, kCfg);
    parallel::set_enabled(true);
    auto par = qzeta_continued(point, q7, kCfg);
    // identical block order => identical rounding
    CHECK(serial.value == par.value);
    CHECK(serial.terms_used == par.terms_used);

    // residue ladder
    SVec pole{Complex(4), Complex(-4)};
    parallel::set_enabled(false);
    auto rs = numeric_residue(pole, q7, kCfg, 6);
    parallel::set_enabled(true);
    auto rp = numeric_residue(pole, q7, kCfg, 6);
    CHECK(rs.value == rp.value);

    // combo evaluation
    auto combo = qshuffle({Complex(2)}, {Complex(3), Complex(2)});
    QParam q8(Real(4) / 5);
    parallel::set_enabled(false);
    auto es = eval_combo(combo, q8, kCfg);
    parallel::set_enabled(true);
    auto ep = eval_combo(combo, q8, kCfg);
    CHECK(es.value == ep.value);
}

TEST_CASE("q -> 1 ladder is deterministic across modes") {
    SerialGuard guard;
    auto eval = [](const QParam& qp) {
        SeriesConfig cfg{pow10(-20), 400000};
        return qzeta_direct({Complex(2)}, qp, cfg).value;
    };
    parallel::set_enabled(false);
    auto a = q_to_1_limit(eval, 3, 8);
    parallel::set_enabled(true);
    auto b = q_to_1_limit(eval, 3, 8);
    CHECK(a.value == b.value);
    CHECK(a.residual == b.residual);
}
