#pragma once

#include <optional>
#include <span>

#include "srbm/linalg.hpp"

namespace srbm {

/// Pushing rates and resulting velocity on one boundary face set.
struct FaceRates {
    std::vector<int> active_set;  // coordinates held at zero, 0-based
    Vector push;                  // u >= 0, supported inside active_set
    Vector velocity;              // theta + R u
};

/// Solves the restricted complementarity problem on `active_set`: u >= 0
/// supported in the set, v = theta + R u with v_i >= 0 and u_i v_i = 0 for
/// i in the set; coordinates outside are interior and unconstrained.
/// Among feasible supports, picks the smallest by cardinality, then
/// lexicographically.
FaceRates face_velocity(const Vector& theta, const SquareMatrix& r,
                        std::span<const int> active_set);

enum class FluidVerdict {
    attracted_to_origin,
    diverged,
    spiral_growth,
    budget_exhausted,
};

std::string to_string(FluidVerdict v);

struct Breakpoint {
    Scalar t;
    Vector z;
    Vector y;                     // cumulative pushing
    std::vector<int> active_set;  // {i : z_i = 0} at this breakpoint
    Vector push;                  // rates on the outgoing segment
    Vector velocity;              // velocity on the outgoing segment
};

struct TraceBudget {
    int max_breakpoints = 10000;
    double horizon = 1e6;
    double atol = 1e-9;
    /// Divergence is declared at |z| >= divergence_factor * max(1, |z0|).
    double divergence_factor = 1e6;
};

/// A piecewise-linear fluid trajectory: breakpoints plus terminal verdict.
///
/// When the path revisits an axis ray, the magnitude ratio decides the
/// trace by self-similarity: ratio > 1 ends it as spiral_growth, ratio < 1
/// as attracted_to_origin (the continuation is a scaled replay). The ratio
/// is recorded either way.
struct FluidPath {
    std::vector<Breakpoint> breakpoints;
    FluidVerdict verdict = FluidVerdict::budget_exhausted;
    std::optional<Scalar> cycle_ratio;
};

/// Integrates the fluid dynamics exactly, segment by segment. Event times
/// are computed in closed form (exact in rational mode); after each event
/// the active set is re-solved. z0 must be nonnegative.
FluidPath fluid_trace(const Vector& theta, const SquareMatrix& r,
                      const Vector& z0, const TraceBudget& budget = {});

/// Closed-form axis intersections of the boundary spiral started at
/// (0, 0, kappa), three per cycle; the n-th cycle ends at gain^n * kappa
/// on the third axis. Preconditions: counter-clockwise canonical data,
/// kappa > 0.
std::vector<Vector> spiral_breakpoints(const Vector& theta, const SquareMatrix& r,
                                       const Scalar& kappa, int n_cycles);

}  // namespace srbm
