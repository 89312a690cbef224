#include "srbm/sim.hpp"

#include <omp.h>

#include <cmath>
#include <numbers>

namespace srbm::sim {

namespace {

constexpr double kStepTol = 1e-12;

// Completely-S guarantees a feasible support; enumeration order (size,
// then lexicographic) is the deterministic tie-break.
const std::vector<std::vector<int>>& subsets_for(int d) {
    static const auto two = index_subsets(2, /*include_empty=*/true);
    static const auto three = index_subsets(3, /*include_empty=*/true);
    return d == 2 ? two : three;
}

// Solve the k x k system a x = b in place, partial pivoting. Returns false
// on a pivot below kStepTol.
bool solve_small(int k, double a[3][3], double b[3], double x[3]) {
    int perm[3] = {0, 1, 2};
    for (int col = 0; col < k; ++col) {
        int piv = col;
        for (int r = col + 1; r < k; ++r) {
            if (std::fabs(a[perm[r]][col]) > std::fabs(a[perm[piv]][col])) piv = r;
        }
        std::swap(perm[col], perm[piv]);
        const double p = a[perm[col]][col];
        if (std::fabs(p) <= kStepTol) return false;
        for (int r = col + 1; r < k; ++r) {
            const double f = a[perm[r]][col] / p;
            if (f == 0.0) continue;
            for (int c = col; c < k; ++c) a[perm[r]][c] -= f * a[perm[col]][c];
            b[perm[r]] -= f * b[perm[col]];
        }
    }
    for (int row = k - 1; row >= 0; --row) {
        double s = b[perm[row]];
        for (int c = row + 1; c < k; ++c) s -= a[perm[row]][c] * x[c];
        x[row] = s / a[perm[row]][row];
    }
    return true;
}

struct Matrices {
    int dim;
    std::vector<double> theta;
    std::vector<std::vector<double>> r;      // reflection
    std::vector<std::vector<double>> chol;   // lower-triangular factor of Gamma
};

Matrices prepare(const ProblemData& data) {
    const int d = data.dim();
    Matrices m;
    m.dim = d;
    for (int i = 0; i < d; ++i) m.theta.push_back(data.theta()[i].to_double());
    m.r.assign(static_cast<size_t>(d), std::vector<double>(static_cast<size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            m.r[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                data.reflection().at(i, j).to_double();

    // Cholesky of Gamma; positive definiteness was validated at construction.
    m.chol.assign(static_cast<size_t>(d), std::vector<double>(static_cast<size_t>(d), 0.0));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = data.gamma().at(i, j).to_double();
            for (int k = 0; k < j; ++k)
                s -= m.chol[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     m.chol[static_cast<size_t>(j)][static_cast<size_t>(k)];
            if (i == j) {
                if (s <= 0.0) throw InputError("gamma factorization failed");
                m.chol[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::sqrt(s);
            } else {
                m.chol[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    s / m.chol[static_cast<size_t>(j)][static_cast<size_t>(j)];
            }
        }
    }
    return m;
}

double one_norm(const Vec& z, int d) {
    double s = 0.0;
    for (int i = 0; i < d; ++i) s += std::fabs(z[static_cast<size_t>(i)]);
    return s;
}

// Per-path accumulators shared by the stats runner and the tracer.
struct PathOutcome {
    bool hit = false;
    double hit_time = 0.0;
    double slope = 0.0;  // least-squares |z| vs t, censored paths only
    double max_comp_residual = 0.0;
    double max_cons_residual = 0.0;
};

class SlopeAccumulator {
public:
    void add(double t, double x) {
        n_ += 1.0;
        st_ += t;
        sx_ += x;
        stx_ += t * x;
        stt_ += t * t;
    }
    double slope() const {
        const double denom = n_ * stt_ - st_ * st_;
        if (denom <= 0.0) return 0.0;
        return (n_ * stx_ - st_ * sx_) / denom;
    }

private:
    double n_ = 0, st_ = 0, sx_ = 0, stx_ = 0, stt_ = 0;
};

}  // namespace

void SimConfig::validate() const {
    if (!(dt > 0.0)) throw InputError("sim config: dt must be positive");
    if (!(horizon >= 0.0)) throw InputError("sim config: horizon must be nonnegative");
    if (n_paths < 1) throw InputError("sim config: n_paths must be at least 1");
    if (!(hitting_radius > 0.0)) throw InputError("sim config: hitting_radius must be positive");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double GaussianStream::uniform01() {
    // 53-bit mantissa in (0, 1]; the offset avoids log(0).
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double GaussianStream::next() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

StepResult skorokhod_step(const Vec& z, const Vec& dx, int dim,
                          const std::vector<std::vector<double>>& r) {
    Vec free_state{};
    for (int i = 0; i < dim; ++i)
        free_state[static_cast<size_t>(i)] =
            z[static_cast<size_t>(i)] + dx[static_cast<size_t>(i)];

    for (const auto& supp : subsets_for(dim)) {
        double a[3][3], b[3], sol[3] = {0, 0, 0};
        const int k = static_cast<int>(supp.size());
        bool solved = true;
        if (k > 0) {
            for (int i = 0; i < k; ++i) {
                b[i] = -free_state[static_cast<size_t>(supp[static_cast<size_t>(i)])];
                for (int j = 0; j < k; ++j)
                    a[i][j] = r[static_cast<size_t>(supp[static_cast<size_t>(i)])]
                               [static_cast<size_t>(supp[static_cast<size_t>(j)])];
            }
            solved = solve_small(k, a, b, sol);
        }
        if (!solved) continue;

        StepResult res{};
        bool feasible = true;
        for (int i = 0; i < k; ++i) {
            if (sol[i] < -kStepTol) {
                feasible = false;
                break;
            }
            res.dy[static_cast<size_t>(supp[static_cast<size_t>(i)])] =
                sol[i] > 0.0 ? sol[i] : 0.0;
        }
        if (!feasible) continue;
        for (int i = 0; i < dim && feasible; ++i) {
            double zi = free_state[static_cast<size_t>(i)];
            for (int j = 0; j < dim; ++j)
                zi += r[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                      res.dy[static_cast<size_t>(j)];
            if (zi < -kStepTol) feasible = false;
            res.z_next[static_cast<size_t>(i)] = zi > 0.0 ? zi : 0.0;
        }
        if (!feasible) continue;
        // Pushed coordinates sit exactly on the boundary.
        for (int i = 0; i < k; ++i)
            res.z_next[static_cast<size_t>(supp[static_cast<size_t>(i)])] = 0.0;
        return res;
    }
    throw StepInfeasibleError("skorokhod_step: no feasible support");
}

namespace {

// Core path loop. `record` receives (step_index, t, z, y) for every step
// when recording; PathOutcome carries the summary either way.
template <typename Recorder>
PathOutcome run_path(const Matrices& m, const Vec& z0, const SimConfig& config,
                     std::uint64_t path_seed, Recorder&& record) {
    const int d = m.dim;
    GaussianStream gauss(path_seed);

    Vec z = z0;
    Vec y{};
    Vec x_cum{};
    SlopeAccumulator slope;
    PathOutcome out;

    const auto consistency = [&](const Vec& state) {
        double worst = 0.0;
        for (int i = 0; i < d; ++i) {
            double expect = z0[static_cast<size_t>(i)] + x_cum[static_cast<size_t>(i)];
            for (int j = 0; j < d; ++j)
                expect += m.r[static_cast<size_t>(i)][static_cast<size_t>(j)] *
                          y[static_cast<size_t>(j)];
            worst = std::max(worst,
                             std::fabs(state[static_cast<size_t>(i)] - expect));
        }
        return worst / (1.0 + one_norm(state, d));
    };

    record(0L, 0.0, z, y);
    slope.add(0.0, one_norm(z, d));
    if (one_norm(z, d) <= config.hitting_radius) {
        out.hit = true;
        out.hit_time = 0.0;
        return out;
    }

    const long n_steps = static_cast<long>(std::floor(config.horizon / config.dt + 1e-12));
    const double sqrt_dt = std::sqrt(config.dt);
    for (long step = 1; step <= n_steps; ++step) {
        Vec dx{};
        double xi[3];
        for (int i = 0; i < d; ++i) xi[i] = gauss.next();
        for (int i = 0; i < d; ++i) {
            double diffusion = 0.0;
            for (int j = 0; j <= i; ++j)
                diffusion += m.chol[static_cast<size_t>(i)][static_cast<size_t>(j)] * xi[j];
            dx[static_cast<size_t>(i)] =
                m.theta[static_cast<size_t>(i)] * config.dt + diffusion * sqrt_dt;
        }

        const auto res = skorokhod_step(z, dx, d, m.r);
        for (int i = 0; i < d; ++i) {
            out.max_comp_residual = std::max(
                out.max_comp_residual,
                std::fabs(res.z_next[static_cast<size_t>(i)] *
                          res.dy[static_cast<size_t>(i)]));
            y[static_cast<size_t>(i)] += res.dy[static_cast<size_t>(i)];
            x_cum[static_cast<size_t>(i)] += dx[static_cast<size_t>(i)];
        }
        z = res.z_next;
        const double t = static_cast<double>(step) * config.dt;

        out.max_cons_residual = std::max(out.max_cons_residual, consistency(z));
        record(step, t, z, y);
        slope.add(t, one_norm(z, d));

        if (one_norm(z, d) <= config.hitting_radius) {
            out.hit = true;
            out.hit_time = t;
            return out;
        }
    }
    out.slope = slope.slope();
    return out;
}

}  // namespace

PathTrace simulate_path(const ProblemData& data, const Vec& z0,
                        const SimConfig& config, int record_stride) {
    config.validate();
    for (int i = 0; i < data.dim(); ++i) {
        if (z0[static_cast<size_t>(i)] < 0.0) {
            throw PreconditionError("simulate_path requires z0 >= 0");
        }
    }
    auto m = prepare(data);
    PathTrace trace;
    const auto outcome = run_path(
        m, z0, config, splitmix64(config.seed),
        [&](long step, double t, const Vec& z, const Vec& y) {
            if (step == 0 || (record_stride > 0 && step % record_stride == 0)) {
                trace.samples.push_back(Sample{t, z, y});
            }
        });
    trace.hit_time =
        outcome.hit ? std::optional<double>(outcome.hit_time) : std::nullopt;
    trace.censored = !outcome.hit;
    trace.max_complementarity_residual = outcome.max_comp_residual;
    trace.max_consistency_residual = outcome.max_cons_residual;
    return trace;
}

namespace {

HittingStats aggregate(const std::vector<PathOutcome>& outcomes) {
    HittingStats stats;
    double hit_sum = 0.0, slope_sum = 0.0;
    for (const auto& o : outcomes) {
        if (o.hit) {
            ++stats.n_hit;
            hit_sum += o.hit_time;
        } else {
            ++stats.n_censored;
            slope_sum += o.slope;
        }
        stats.max_complementarity_residual =
            std::max(stats.max_complementarity_residual, o.max_comp_residual);
        stats.max_consistency_residual =
            std::max(stats.max_consistency_residual, o.max_cons_residual);
    }
    const int n = stats.n_hit + stats.n_censored;
    stats.mean_hit_time = stats.n_hit ? hit_sum / stats.n_hit : 0.0;
    stats.censor_rate = n ? static_cast<double>(stats.n_censored) / n : 0.0;
    stats.growth_rate = stats.n_censored ? slope_sum / stats.n_censored : 0.0;
    return stats;
}

void check_start(const ProblemData& data, const Vec& z0) {
    for (int i = 0; i < data.dim(); ++i) {
        if (z0[static_cast<size_t>(i)] < 0.0) {
            throw PreconditionError("hitting-time estimation requires z0 >= 0");
        }
    }
}

constexpr auto kNullRecorder = [](long, double, const Vec&, const Vec&) {};

}  // namespace

HittingStats estimate_hitting_time(const ProblemData& data, const Vec& z0,
                                   const SimConfig& config) {
    config.validate();
    check_start(data, z0);
    const auto m = prepare(data);
    std::vector<PathOutcome> outcomes(static_cast<size_t>(config.n_paths));
#pragma omp parallel for schedule(dynamic)
    for (int p = 0; p < config.n_paths; ++p) {
        outcomes[static_cast<size_t>(p)] =
            run_path(m, z0, config,
                     splitmix64(config.seed + static_cast<std::uint64_t>(p)),
                     kNullRecorder);
    }
    return aggregate(outcomes);
}

HittingStats estimate_hitting_time_serial(const ProblemData& data, const Vec& z0,
                                          const SimConfig& config) {
    config.validate();
    check_start(data, z0);
    const auto m = prepare(data);
    std::vector<PathOutcome> outcomes(static_cast<size_t>(config.n_paths));
    for (int p = 0; p < config.n_paths; ++p) {
        outcomes[static_cast<size_t>(p)] =
            run_path(m, z0, config,
                     splitmix64(config.seed + static_cast<std::uint64_t>(p)),
                     kNullRecorder);
    }
    return aggregate(outcomes);
}

}  // namespace srbm::sim
