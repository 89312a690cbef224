#pragma once

#include <optional>

#include "srbm/problem.hpp"

namespace srbm {

/// Outcome of the two canonicalizing scalings: a drift scaling D making
/// every drift component -1, 0 or 1, followed by a column scaling Dtilde
/// giving the reflection matrix a unit diagonal. Both leave the recurrence
/// classification unchanged.
struct NormalizationRecord {
    SquareMatrix drift_scaling;   // D, positive diagonal
    SquareMatrix column_scaling;  // Dtilde, positive diagonal
    ProblemData original;
    ProblemData normalized;
};

NormalizationRecord normalize(const ProblemData& data);

/// True iff `data` already is in canonical form: unit-diagonal reflection
/// matrix and drift components in {-1, 0, 1}.
bool is_canonical(const ProblemData& data);

/// The necessary condition for positive recurrence: R nonsingular and
/// every component of R^{-1} theta strictly negative. When it holds,
/// u_star = -R^{-1} theta > 0 is the proper pushing-rate vector.
struct NecessaryCondition {
    enum class FailureKind { none, singular, nonnegative_component };

    bool holds = false;
    std::optional<Vector> u_star;

    FailureKind failure = FailureKind::none;
    /// Singular case: u != 0 with u'R = 0.
    std::optional<Vector> null_left;
    /// Nonnegative-component case: smallest offending index (0-based) and
    /// the value of (R^{-1} theta) there.
    int component = -1;
    std::optional<Scalar> component_value;
};

/// Evaluates the necessary condition on raw (theta, R). Strict float-mode
/// comparisons within tolerance of zero raise IndeterminateError.
NecessaryCondition necessary_condition(const Vector& theta, const SquareMatrix& r);

inline NecessaryCondition necessary_condition(const ProblemData& data) {
    return necessary_condition(data.theta(), data.reflection());
}

}  // namespace srbm
