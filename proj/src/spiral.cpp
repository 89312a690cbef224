#include "srbm/spiral.hpp"

#include <cmath>

namespace srbm {

std::string to_string(SpiralClass c) {
    switch (c) {
        case SpiralClass::counter_clockwise: return "C1";
        case SpiralClass::clockwise: return "C2";
        case SpiralClass::none: return "NotInC";
    }
    return "?";
}

namespace {

void require_canonical_3d(const Vector& theta, const SquareMatrix& r) {
    if (r.dim() != 3 || theta.dim() != 3) {
        throw PreconditionError("spiral analysis requires dimension 3");
    }
    const Scalar one = Scalar::one(r.mode());
    for (int i = 0; i < 3; ++i) {
        if (!(r.at(i, i) - one).is_zero()) {
            throw PreconditionError(
                "spiral analysis requires canonical data (unit-diagonal R); "
                "normalize first");
        }
        const Scalar& t = theta[i];
        if (!t.is_zero() && !(t - one).is_zero() && !(t + one).is_zero()) {
            throw PreconditionError(
                "spiral analysis requires canonical data (drift in {-1,0,1}); "
                "normalize first");
        }
    }
}

IneqOutcome outcome_of(const Scalar& q) {
    // The inequality asserts q > 0 in its counter-clockwise sense.
    if (q.mode() == Mode::rational) {
        switch (q.sign()) {
            case Sign::positive: return IneqOutcome::holds;
            case Sign::negative: return IneqOutcome::fails;
            case Sign::zero: return IneqOutcome::boundary;
        }
    }
    switch (q.sign()) {
        case Sign::positive: return IneqOutcome::holds;
        case Sign::negative: return IneqOutcome::fails;
        default: return IneqOutcome::indeterminate;
    }
    return IneqOutcome::indeterminate;
}

// The six strict quantities in counter-clockwise sense: on each face the
// next coordinate (cyclically) must rise and the previous one must fall.
std::array<Scalar, 6> face_quantities(const Vector& t, const SquareMatrix& r) {
    return {
        t[0] - t[1] * r.at(0, 1),  // z1 rises on face 2
        t[1] * r.at(2, 1) - t[2],  // z3 falls on face 2
        t[1] - t[2] * r.at(1, 2),  // z2 rises on face 3
        t[2] * r.at(0, 2) - t[0],  // z1 falls on face 3
        t[2] - t[0] * r.at(2, 0),  // z3 rises on face 1
        t[0] * r.at(1, 0) - t[1],  // z2 falls on face 1
    };
}

constexpr std::array<const char*, 7> kIneqNames = {
    "drift negative",
    "z1 rises on face 2", "z3 falls on face 2",
    "z2 rises on face 3", "z1 falls on face 3",
    "z3 rises on face 1", "z2 falls on face 1",
};

// Rise/fall rates read off V = R - 1: on face j the entering coordinate
// rises at a_j and the exiting one falls at b_j.
struct Rates {
    Vector a;
    Vector b;
};

Rates read_rates(const SquareMatrix& r) {
    const Scalar one = Scalar::one(r.mode());
    Vector a(3, r.mode()), b(3, r.mode());
    a[0] = r.at(2, 0) - one;
    a[1] = r.at(0, 1) - one;
    a[2] = r.at(1, 2) - one;
    b[0] = one - r.at(1, 0);
    b[1] = one - r.at(2, 1);
    b[2] = one - r.at(0, 2);
    return {std::move(a), std::move(b)};
}

}  // namespace

SpiralReport spiral_membership(const Vector& theta, const SquareMatrix& r) {
    require_canonical_3d(theta, r);
    SpiralReport rep;

    bool drift_negative = true;
    for (int i = 0; i < 3; ++i) {
        if (theta[i].sign() != Sign::negative) drift_negative = false;
    }
    rep.inequalities[0] = {kIneqNames[0],
                           drift_negative ? IneqOutcome::holds : IneqOutcome::fails};

    const auto qs = face_quantities(theta, r);
    bool any_indeterminate = false;
    int held = 0, failed = 0;
    for (int k = 0; k < 6; ++k) {
        const IneqOutcome o = outcome_of(qs[static_cast<size_t>(k)]);
        rep.inequalities[static_cast<size_t>(k + 1)] = {kIneqNames[k + 1], o};
        if (o == IneqOutcome::indeterminate) any_indeterminate = true;
        if (o == IneqOutcome::holds) ++held;
        if (o == IneqOutcome::fails) ++failed;
    }
    if (any_indeterminate) {
        throw IndeterminateError(
            "spiral membership: a strict comparison lies within tolerance of "
            "equality");
    }

    if (drift_negative && held == 6) {
        rep.membership = SpiralClass::counter_clockwise;
    } else if (drift_negative && failed == 6) {
        rep.membership = SpiralClass::clockwise;
    } else {
        rep.membership = SpiralClass::none;
        return rep;
    }

    rep.gain = single_cycle_gain(theta, r, rep.membership);
    const SquareMatrix base = rep.membership == SpiralClass::counter_clockwise
                                  ? r
                                  : reverse_coordinates(r);
    auto rates = read_rates(base);
    rep.a = std::move(rates.a);
    rep.b = std::move(rates.b);
    return rep;
}

Scalar single_cycle_gain(const Vector& theta, const SquareMatrix& r,
                         SpiralClass membership) {
    require_canonical_3d(theta, r);
    if (membership == SpiralClass::none) {
        throw PreconditionError("single_cycle_gain requires spiral membership");
    }

    const Vector t = membership == SpiralClass::counter_clockwise
                         ? theta
                         : reverse_coordinates(theta);
    const SquareMatrix m = membership == SpiralClass::counter_clockwise
                               ? r
                               : reverse_coordinates(r);

    // Route one: product of the three breakpoint ratios.
    const auto q = face_quantities(t, m);
    const Scalar by_ratios = (q[0] / q[1]) * (q[2] / q[3]) * (q[4] / q[5]);

    // Route two: a1 a2 a3 / (b1 b2 b3).
    const auto rates = read_rates(m);
    const Scalar by_rates = (rates.a[0] * rates.a[1] * rates.a[2]) /
                            (rates.b[0] * rates.b[1] * rates.b[2]);

    const Scalar diff = by_ratios - by_rates;
    if (r.mode() == Mode::rational ? !diff.is_zero()
                                   : std::fabs(diff.to_double()) >
                                         kStrictEps * (1.0 + std::fabs(by_rates.to_double()))) {
        throw Error("internal: single-cycle gain routes disagree");
    }
    return by_rates;
}

Vector spiral_instability_certificate(const Vector& theta, const SquareMatrix& r) {
    const SpiralReport rep = spiral_membership(theta, r);
    if (rep.membership != SpiralClass::counter_clockwise) {
        throw PreconditionError(
            "instability certificate requires counter-clockwise membership; "
            "reverse coordinates for clockwise data");
    }
    const Scalar one = Scalar::one(r.mode());
    if ((*rep.gain - one).sign() == Sign::negative) {
        throw PreconditionError("instability certificate requires gain >= 1");
    }
    const Vector& a = *rep.a;
    const Vector& b = *rep.b;
    Vector u(3, r.mode());
    u[0] = one;
    u[1] = (a[0] * a[1]) / (b[0] * b[1]);
    u[2] = a[1] / b[1];
    const Scalar sum = u[0] + u[1] + u[2];
    return u.scaled(one / sum);
}

SquareMatrix face_velocity_matrix(const SquareMatrix& r) {
    const Scalar one = Scalar::one(r.mode());
    SquareMatrix v(r.dim(), r.mode());
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j) v.at(i, j) = r.at(i, j) - one;
    return v;
}

Vector reverse_coordinates(const Vector& v) {
    const int d = v.dim();
    Vector out(d, v.mode());
    for (int i = 0; i < d; ++i) out[i] = v[d - 1 - i];
    return out;
}

SquareMatrix reverse_coordinates(const SquareMatrix& m) {
    const int d = m.dim();
    SquareMatrix out(d, m.mode());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.at(i, j) = m.at(d - 1 - i, d - 1 - j);
    return out;
}

}  // namespace srbm
