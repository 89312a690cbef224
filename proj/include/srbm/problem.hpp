#pragma once

#include "srbm/linalg.hpp"
#include "srbm/matrix_class.hpp"

namespace srbm {

/// Validated problem data (theta, Gamma, R) for a reflected diffusion on
/// the nonnegative orthant, dimension 2 or 3.
///
/// Construction enforces the standing assumptions: Gamma symmetric and
/// strictly positive definite, R completely-S. All three pieces share one
/// arithmetic mode.
class ProblemData {
public:
    ProblemData(Vector theta, SquareMatrix gamma, SquareMatrix r);

    /// Convenience constructor with Gamma = I.
    ProblemData(Vector theta, SquareMatrix r);

    int dim() const { return theta_.dim(); }
    Mode mode() const { return theta_.mode(); }

    const Vector& theta() const { return theta_; }
    const SquareMatrix& gamma() const { return gamma_; }
    const SquareMatrix& reflection() const { return r_; }

private:
    void validate() const;

    Vector theta_;
    SquareMatrix gamma_;
    SquareMatrix r_;
};

/// True iff g is symmetric with all leading principal minors positive.
bool is_symmetric_positive_definite(const SquareMatrix& g);

}  // namespace srbm
