// Benchmark comparing the OpenMP path runner against the serial reference
// on a stable and an unstable workload. The two must agree bitwise; the
// table reports wall times and speedup.

#include <omp.h>

#include <cstdio>
#include <cstdlib>

#include "srbm/sim.hpp"

namespace {

using namespace srbm;

ProblemData bek_problem() {
    const Mode m = Mode::floating;
    Vector theta{Scalar::floating(-1), Scalar::floating(-1), Scalar::floating(-1)};
    SquareMatrix r(3, m);
    const double entries[3][3] = {{1, 3, 0}, {0, 1, 3}, {3, 0, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = Scalar::floating(entries[i][j]);
    return ProblemData(std::move(theta), std::move(r));
}

ProblemData stable_problem() {
    const Mode m = Mode::floating;
    Vector theta{Scalar::floating(-1), Scalar::floating(-1), Scalar::floating(-1)};
    return ProblemData(std::move(theta), SquareMatrix::identity(3, m));
}

struct Workload {
    const char* name;
    ProblemData data;
    sim::Vec z0;
    sim::SimConfig config;
};

int run_workload(const Workload& w) {
    const double t0 = omp_get_wtime();
    const auto serial = sim::estimate_hitting_time_serial(w.data, w.z0, w.config);
    const double t1 = omp_get_wtime();
    const auto parallel = sim::estimate_hitting_time(w.data, w.z0, w.config);
    const double t2 = omp_get_wtime();

    const bool identical = serial.n_hit == parallel.n_hit &&
                           serial.n_censored == parallel.n_censored &&
                           serial.mean_hit_time == parallel.mean_hit_time &&
                           serial.growth_rate == parallel.growth_rate;
    const double ts = t1 - t0, tp = t2 - t1;
    std::printf("%-10s serial %8.3fs  parallel %8.3fs  speedup %5.2fx  "
                "hit %d/%d  %s\n",
                w.name, ts, tp, tp > 0 ? ts / tp : 0.0, serial.n_hit,
                w.config.n_paths, identical ? "identical" : "MISMATCH");
    return identical ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    int paths = 64;
    if (argc > 1) paths = std::atoi(argv[1]);
    std::printf("threads: %d, paths per workload: %d\n", omp_get_max_threads(),
                paths);

    sim::SimConfig stable_cfg;
    stable_cfg.n_paths = paths;
    stable_cfg.horizon = 50.0;
    sim::SimConfig bek_cfg;
    bek_cfg.n_paths = paths;
    bek_cfg.horizon = 20.0;

    int rc = 0;
    rc |= run_workload({"stable", stable_problem(), {1.0, 1.0, 1.0}, stable_cfg});
    rc |= run_workload({"spiral", bek_problem(), {0.0, 0.0, 50.0}, bek_cfg});
    return rc;
}
