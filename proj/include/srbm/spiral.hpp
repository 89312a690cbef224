#pragma once

#include <array>
#include <optional>

#include "srbm/linalg.hpp"

namespace srbm {

/// Boundary-spiral orientation classes for canonical 3-d data.
enum class SpiralClass { counter_clockwise, clockwise, none };

std::string to_string(SpiralClass c);

/// Outcome of one strict inequality, recorded in its counter-clockwise
/// sense. `boundary` marks an exact equality (rational mode);
/// `indeterminate` a float value inside the tolerance band.
enum class IneqOutcome { holds, fails, boundary, indeterminate };

struct SpiralInequality {
    const char* name;
    IneqOutcome outcome;
};

/// Full membership report: the drift-sign condition plus the six strict
/// face-velocity inequalities, overall class, single-cycle gain, and the
/// per-face rise/fall rates a, b (read off R - 1) when in a spiral class.
struct SpiralReport {
    SpiralClass membership = SpiralClass::none;
    std::array<SpiralInequality, 7> inequalities;
    std::optional<Scalar> gain;  // beta, present iff membership != none
    std::optional<Vector> a;     // rise rate of the entering coordinate, per face
    std::optional<Vector> b;     // fall rate of the exiting coordinate, per face
};

/// Decides spiral membership of canonical data (unit-diagonal R, drift
/// components in {-1,0,1}); non-canonical input raises PreconditionError,
/// as does dimension != 3. A float comparison inside the tolerance band
/// raises IndeterminateError.
SpiralReport spiral_membership(const Vector& theta, const SquareMatrix& r);

/// Single-cycle gain for data in a spiral class. Computed from the
/// breakpoint-ratio product and cross-checked against the product formula
/// a1 a2 a3 / (b1 b2 b3); both routes must agree.
Scalar single_cycle_gain(const Vector& theta, const SquareMatrix& r,
                         SpiralClass membership);

/// Certificate vector for instability of an expanding counter-clockwise
/// spiral: u > 0 with u'V >= 0 and u'e = 1, where V = R - 1 columnwise.
/// Preconditions: counter-clockwise membership and gain >= 1. For
/// clockwise data apply this to the index-reversed problem.
Vector spiral_instability_certificate(const Vector& theta, const SquareMatrix& r);

/// V with V_ij = R_ij - 1. For canonical data in the counter-clockwise
/// class, column j is the fluid velocity on the face {z_j = 0}.
SquareMatrix face_velocity_matrix(const SquareMatrix& r);

/// Coordinate reversal i -> d-1-i applied to both indices; maps clockwise
/// spirals onto counter-clockwise ones.
Vector reverse_coordinates(const Vector& v);
SquareMatrix reverse_coordinates(const SquareMatrix& m);

}  // namespace srbm
