#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "srbm/problem.hpp"

namespace srbm::sim {

/// Fixed-size state for the double-precision simulator; dimension-2
/// problems use the leading entries.
using Vec = std::array<double, 3>;

struct SimConfig {
    double dt = 1e-3;
    double horizon = 100.0;
    std::uint64_t seed = 1;
    int n_paths = 200;
    /// Hitting target is the closed 1-norm ball of this radius at the origin.
    double hitting_radius = 0.1;
    /// n_paths >= 1, dt > 0, horizon >= 0 (a horizon shorter than dt takes
    /// no steps and censors immediately), hitting_radius > 0.
    void validate() const;
};

/// One reflection step: given state z >= 0 and free increment dx, find
/// dy >= 0 with z' = z + dx + R dy >= 0 and z'_i dy_i = 0. Solved by
/// support enumeration, smallest support first. R must be completely-S
/// (not re-checked here).
struct StepResult {
    Vec z_next;
    Vec dy;
};
StepResult skorokhod_step(const Vec& z, const Vec& dx, int dim,
                          const std::vector<std::vector<double>>& r);

struct Sample {
    double t;
    Vec z;
    Vec y;
};

struct PathTrace {
    std::vector<Sample> samples;  // step resolution; first sample is t = 0
    std::optional<double> hit_time;
    bool censored = false;
    /// max_i |z'_i dy_i| over every executed step.
    double max_complementarity_residual = 0.0;
    /// max over samples of |z - z0 - sum(dx) - R y|_inf / (1 + |z|_1).
    double max_consistency_residual = 0.0;
};

/// Simulates one path: per step dx = theta dt + L xi sqrt(dt), where L is
/// the lower-triangular Cholesky factor of Gamma and xi are independent
/// standard normals from the path generator; the step is then projected by
/// skorokhod_step. Stops at the horizon or on |z|_1 <= hitting_radius.
/// Uses the path generator of path index 0, so a single trace matches the
/// first path of the aggregate runners.
///
/// Every `record_stride`-th step is recorded after the initial state;
/// record_stride == 0 records the initial state only.
PathTrace simulate_path(const ProblemData& data, const Vec& z0,
                        const SimConfig& config, int record_stride = 1);

struct HittingStats {
    int n_hit = 0;
    int n_censored = 0;
    double mean_hit_time = 0.0;  // over hit paths; 0 when none hit
    double censor_rate = 0.0;
    /// Mean least-squares slope of |z|_1 versus t over censored paths;
    /// 0 when no path was censored.
    double growth_rate = 0.0;
    double max_complementarity_residual = 0.0;
    double max_consistency_residual = 0.0;
};

/// Runs n_paths independent paths and aggregates hitting statistics.
/// Path p uses the generator seed splitmix64(config.seed + p), so paths
/// are reproducible individually and independent of execution order.
/// Parallelized over paths with OpenMP; bitwise identical to the serial
/// reference below.
HittingStats estimate_hitting_time(const ProblemData& data, const Vec& z0,
                                   const SimConfig& config);

/// Serial reference implementation, kept for testing and benchmarking.
HittingStats estimate_hitting_time_serial(const ProblemData& data, const Vec& z0,
                                          const SimConfig& config);

/// Deterministic standard-normal generator: mt19937_64 driven Box-Muller
/// with an explicit cached spare, so streams do not depend on the standard
/// library's distribution internals.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}
    double next();

private:
    double uniform01();
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace srbm::sim
