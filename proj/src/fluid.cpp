#include "srbm/fluid.hpp"

#include <algorithm>
#include <map>

#include "srbm/spiral.hpp"

namespace srbm {

std::string to_string(FluidVerdict v) {
    switch (v) {
        case FluidVerdict::attracted_to_origin: return "AttractedToOrigin";
        case FluidVerdict::diverged: return "Diverged";
        case FluidVerdict::spiral_growth: return "SpiralGrowth";
        case FluidVerdict::budget_exhausted: return "BudgetExhausted";
    }
    return "?";
}

FaceRates face_velocity(const Vector& theta, const SquareMatrix& r,
                        std::span<const int> active_set) {
    const int d = r.dim();
    const Mode mode = r.mode();
    for (int i : active_set) {
        if (i < 0 || i >= d) throw PreconditionError("active set index out of range");
    }

    for (const auto& pick : index_subsets(static_cast<int>(active_set.size()),
                                          /*include_empty=*/true)) {
        std::vector<int> supp;
        for (int p : pick) supp.push_back(active_set[static_cast<size_t>(p)]);

        Vector u(d, mode);
        if (!supp.empty()) {
            const auto solved =
                try_solve(principal_submatrix(r, supp), -subvector(theta, supp));
            if (solved.status != SolveStatus::unique) continue;
            if (!solved.x.all_nonnegative()) continue;
            u = embed(solved.x, supp, d, mode);
        }
        Vector v = theta + r * u;
        for (int i : supp) v[i] = Scalar::zero(mode);
        bool feasible = true;
        for (int i : active_set) {
            if (v[i].sign() == Sign::negative) {
                feasible = false;
                break;
            }
        }
        if (feasible) {
            return FaceRates{std::vector<int>(active_set.begin(), active_set.end()),
                             std::move(u), std::move(v)};
        }
    }
    // Unreachable for completely-S reflection matrices.
    throw Error("face_velocity: no feasible support on the active set");
}

namespace {

// Exact dyadic conversion; doubles are binary rationals.
Scalar budget_scalar(double x, Mode m) {
    if (m == Mode::floating) return Scalar::floating(x);
    return Scalar::rational(mpq_class(x));
}

std::vector<int> zero_set(const Vector& z) {
    std::vector<int> s;
    for (int i = 0; i < z.dim(); ++i) {
        if (z[i].is_zero()) s.push_back(i);
    }
    return s;
}

// Index of the single positive coordinate, or -1 if not an axis point.
int axis_of(const Vector& z) {
    int axis = -1;
    for (int i = 0; i < z.dim(); ++i) {
        if (!z[i].is_zero()) {
            if (axis >= 0) return -1;
            axis = i;
        }
    }
    return axis;
}

}  // namespace

FluidPath fluid_trace(const Vector& theta, const SquareMatrix& r,
                      const Vector& z0, const TraceBudget& budget) {
    const int d = r.dim();
    const Mode mode = r.mode();
    if (!z0.all_nonnegative()) {
        throw PreconditionError("fluid_trace requires a nonnegative start state");
    }

    const Scalar atol = budget_scalar(budget.atol, mode);
    const Scalar horizon = budget_scalar(budget.horizon, mode);
    const Scalar one = Scalar::one(mode);
    Scalar thresh = z0.one_norm();
    if (thresh < one) thresh = one;
    thresh *= budget_scalar(budget.divergence_factor, mode);

    FluidPath path;
    Vector z = z0;
    // Clear tolerance-level residue so the active set is read off exactly.
    for (int i = 0; i < d; ++i) {
        if (z[i].is_zero()) z[i] = Scalar::zero(mode);
    }
    Vector y(d, mode);
    Scalar t = Scalar::zero(mode);
    std::map<int, Scalar> last_axis_magnitude;

    while (true) {
        const auto active = zero_set(z);
        auto rates = face_velocity(theta, r, active);
        path.breakpoints.push_back(
            Breakpoint{t, z, y, active, rates.push, rates.velocity});

        // Absorbed: at origin scale with nothing moving. Near-zero states
        // that still move are left to the segment logic; divergent data can
        // carry a path away from the origin itself.
        if (!(atol < z.one_norm()) && rates.velocity.all_zero()) {
            path.verdict = FluidVerdict::attracted_to_origin;
            return path;
        }
        if (!(z.one_norm() < thresh)) {
            path.verdict = FluidVerdict::diverged;
            return path;
        }
        if (const int axis = axis_of(z); axis >= 0) {
            const Scalar mag = z[axis];
            if (auto it = last_axis_magnitude.find(axis);
                it != last_axis_magnitude.end()) {
                const Scalar ratio = mag / it->second;
                path.cycle_ratio = ratio;
                switch ((ratio - one).sign()) {
                    case Sign::positive:
                        path.verdict = FluidVerdict::spiral_growth;
                        return path;
                    case Sign::negative:
                        // Scaled replay of a shrinking cycle.
                        path.verdict = FluidVerdict::attracted_to_origin;
                        return path;
                    case Sign::zero:
                        break;
                }
            }
            last_axis_magnitude.insert_or_assign(axis, mag);
        }

        // Earliest positive coordinate to reach zero under this velocity.
        std::optional<Scalar> dt;
        for (int i = 0; i < d; ++i) {
            if (z[i].is_zero()) continue;
            if (rates.velocity[i].sign_strict("fluid segment velocity") !=
                Sign::negative) {
                continue;
            }
            const Scalar hit = z[i] / (-rates.velocity[i]);
            if (!dt || hit < *dt) dt = hit;
        }
        if (!dt) {
            // No further events. Constant motion forever: nonzero velocity
            // diverges, zero velocity is pinned off the origin.
            path.verdict = rates.velocity.all_zero()
                               ? FluidVerdict::budget_exhausted
                               : FluidVerdict::diverged;
            return path;
        }

        if (static_cast<int>(path.breakpoints.size()) >= budget.max_breakpoints ||
            horizon < t + *dt) {
            path.verdict = FluidVerdict::budget_exhausted;
            return path;
        }

        for (int i = 0; i < d; ++i) {
            const Scalar arrive = z[i] + rates.velocity[i] * *dt;
            z[i] = arrive.is_zero() ? Scalar::zero(mode) : arrive;
            y[i] += rates.push[i] * *dt;
        }
        t += *dt;
    }
}

std::vector<Vector> spiral_breakpoints(const Vector& theta, const SquareMatrix& r,
                                       const Scalar& kappa, int n_cycles) {
    const auto rep = spiral_membership(theta, r);
    if (rep.membership != SpiralClass::counter_clockwise) {
        throw PreconditionError(
            "spiral_breakpoints requires counter-clockwise canonical data");
    }
    if (kappa.sign() != Sign::positive) {
        throw PreconditionError("spiral_breakpoints requires kappa > 0");
    }
    const Mode mode = r.mode();
    const Vector& a = *rep.a;
    const Vector& b = *rep.b;
    // Per-segment magnitude ratios of the cycle starting on the third axis.
    const Scalar r1 = a[1] / b[1];
    const Scalar r2 = a[2] / b[2];
    const Scalar r3 = a[0] / b[0];

    std::vector<Vector> points;
    Scalar scale = kappa;
    for (int c = 0; c < n_cycles; ++c) {
        Vector p1(3, mode), p2(3, mode), p3(3, mode);
        p1[0] = r1 * scale;
        p2[1] = r1 * r2 * scale;
        p3[2] = r1 * r2 * r3 * scale;
        scale = p3[2];
        points.push_back(std::move(p1));
        points.push_back(std::move(p2));
        points.push_back(std::move(p3));
    }
    return points;
}

}  // namespace srbm
