#include "srbm/normalization.hpp"

namespace srbm {

NormalizationRecord normalize(const ProblemData& data) {
    const int d = data.dim();
    const Mode m = data.mode();
    const Scalar one = Scalar::one(m);

    // Drift scaling first: D_ii = 1 for zero drift components, 1/|theta_i|
    // otherwise. Scales states/drift/reflection rows and conjugates Gamma.
    Vector dscale(d, m);
    for (int i = 0; i < d; ++i) {
        const Scalar& t = data.theta()[i];
        dscale[i] = t.is_zero() ? one : one / t.abs();
    }
    const SquareMatrix D = SquareMatrix::diagonal(dscale);

    Vector theta_hat(d, m);
    for (int i = 0; i < d; ++i) theta_hat[i] = dscale[i] * data.theta()[i];
    // Snap scaled drift to exact -1/0/1; float rounding must not leave
    // residue like -0.9999999999.
    for (int i = 0; i < d; ++i) {
        switch (theta_hat[i].sign()) {
            case Sign::negative: theta_hat[i] = -one; break;
            case Sign::zero: theta_hat[i] = Scalar::zero(m); break;
            case Sign::positive: theta_hat[i] = one; break;
        }
    }

    const SquareMatrix r_hat = D * data.reflection();
    const SquareMatrix gamma_hat = D * data.gamma() * D;

    // Column scaling second: divide each column of r_hat by its diagonal
    // entry. This rescales the pushing process only, so drift and Gamma are
    // untouched.
    const Vector dtilde = r_hat.diagonal_vector();
    SquareMatrix r_tilde(d, m);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r_tilde.at(i, j) = r_hat.at(i, j) / dtilde[j];

    ProblemData normalized(theta_hat, gamma_hat, r_tilde);
    return NormalizationRecord{D, SquareMatrix::diagonal(dtilde), data,
                               std::move(normalized)};
}

bool is_canonical(const ProblemData& data) {
    const Mode m = data.mode();
    const Scalar one = Scalar::one(m);
    for (int i = 0; i < data.dim(); ++i) {
        if (!(data.reflection().at(i, i) - one).is_zero()) return false;
        const Scalar& t = data.theta()[i];
        if (!t.is_zero() && !(t - one).is_zero() && !(t + one).is_zero()) return false;
    }
    return true;
}

NecessaryCondition necessary_condition(const Vector& theta, const SquareMatrix& r) {
    NecessaryCondition out;
    SquareMatrix rinv(r.dim(), r.mode());
    try {
        rinv = invert(r);
    } catch (const SingularMatrixError& e) {
        out.holds = false;
        out.failure = NecessaryCondition::FailureKind::singular;
        out.null_left = e.null_left;
        return out;
    }
    const Vector gamma = rinv * theta;
    for (int i = 0; i < r.dim(); ++i) {
        if (gamma[i].sign_strict("component of R^-1 theta") != Sign::negative) {
            out.holds = false;
            out.failure = NecessaryCondition::FailureKind::nonnegative_component;
            out.component = i;
            out.component_value = gamma[i];
            return out;
        }
    }
    out.holds = true;
    out.u_star = -gamma;
    return out;
}

}  // namespace srbm
