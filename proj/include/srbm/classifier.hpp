#pragma once

#include <optional>
#include <string>
#include <variant>

#include "srbm/lcp.hpp"
#include "srbm/normalization.hpp"
#include "srbm/spiral.hpp"

namespace srbm {

enum class Decision { positive_recurrent, not_positive_recurrent };

/// The reason behind a verdict. Positive verdicts arise from a contracting
/// boundary spiral, from a unique proper complementarity solution, or from
/// the two-dimensional criterion; negative ones from failure of the
/// necessary condition, an expanding (or neutral) spiral, a divergent
/// complementarity solution, or the two-dimensional criterion failing.
enum class Basis {
    necessary_condition_fails,
    spiral_gain_at_least_one,
    divergent_lcp_solution,
    contracting_spiral,
    unique_proper_lcp_solution,
    two_d_criterion,
    two_d_criterion_fails,
};

std::string to_string(Decision d);
std::string to_string(Basis b);

/// Certificate payloads. All vectors refer to the normalized problem
/// carried in the Verdict.
struct ProperUniqueCert {
    Vector u_star;
};

struct SpiralStableCert {
    SpiralClass membership;
    Scalar gain;
};

struct SpiralUnstableCert {
    SpiralClass membership;
    Scalar gain;
    /// u > 0 with u'e = 1 and u'V >= 0, V built from the normalized
    /// reflection matrix (coordinate-reversed first for clockwise data).
    Vector certificate;
};

struct DivergentSolutionCert {
    LcpSolution solution;
};

struct NecessityFailureCert {
    NecessaryCondition::FailureKind kind;
    /// Offending 0-based coordinate (nonnegative-component case).
    int component = -1;
    /// Row of R^{-1} for that coordinate, or a left null vector of R
    /// (sign-flipped so witness . theta >= 0) in the singular case.
    Vector witness;
    std::optional<Scalar> value;
};

using Certificate = std::variant<ProperUniqueCert, SpiralStableCert,
                                 SpiralUnstableCert, DivergentSolutionCert,
                                 NecessityFailureCert>;

struct Verdict {
    Decision decision;
    Basis basis;
    Certificate certificate;
    /// Canonical form of the classified data; certificates validate
    /// against it.
    ProblemData normalized;
    /// Informational only: set to "transient" when the cited divergent
    /// solution is in category I or II, where the stronger property holds.
    std::optional<std::string> note;
};

/// Classifies (theta, Gamma, R) as positive recurrent or not. Dimension 3
/// runs the full decision tree; dimension 2 dispatches to classify_2d.
/// Float-mode boundary comparisons raise IndeterminateError; degenerate
/// complementarity subsystems raise DegenerateRayError.
Verdict classify(const ProblemData& data);

/// Two-dimensional criterion: positive recurrent iff the necessary
/// condition holds and R is a P-matrix.
Verdict classify_2d(const ProblemData& data);

/// Machine-checkable witness that the necessary condition fails for
/// (theta, R). Precondition: it does fail.
NecessityFailureCert necessity_certificate(const Vector& theta,
                                           const SquareMatrix& r);

/// Re-runs the defining checks of the certificate against the normalized
/// data carried in the verdict.
bool revalidate(const Verdict& verdict);

}  // namespace srbm
