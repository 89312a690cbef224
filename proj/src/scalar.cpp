#include "srbm/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

namespace srbm {

namespace {

double checked_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw InputError(std::string(what) + ": non-finite float value");
    }
    return x;
}

}  // namespace

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw InputError("rational scalar: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::rational(const mpq_class& q) {
    if (q.get_den() == 0) throw InputError("rational scalar: zero denominator");
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
}

Scalar Scalar::floating(double x) {
    return Scalar(checked_finite(x, "scalar"));
}

Scalar Scalar::parse_rational(const std::string& text) {
    // mpq_class accepts "p/q" and plain integers, base 10.
    mpq_class q;
    if (q.set_str(text, 10) != 0) {
        throw InputError("cannot parse rational scalar: \"" + text + "\"");
    }
    if (q.get_den() == 0) {
        throw InputError("rational scalar with zero denominator: \"" + text + "\"");
    }
    q.canonicalize();
    return Scalar(std::move(q));
}

Scalar Scalar::from_int(long v, Mode m) {
    return m == Mode::rational ? rational(v) : floating(static_cast<double>(v));
}

void Scalar::require_same_mode(const Scalar& o) const {
    if (mode() != o.mode()) {
        throw Error("internal: mixed-mode scalar arithmetic");
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_mode(o);
    if (mode() == Mode::rational) return Scalar(mpq_class(rat() + o.rat()));
    return Scalar(checked_finite(flt() + o.flt(), "sum"));
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_mode(o);
    if (mode() == Mode::rational) return Scalar(mpq_class(rat() - o.rat()));
    return Scalar(checked_finite(flt() - o.flt(), "difference"));
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_mode(o);
    if (mode() == Mode::rational) return Scalar(mpq_class(rat() * o.rat()));
    return Scalar(checked_finite(flt() * o.flt(), "product"));
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_mode(o);
    if (mode() == Mode::rational) {
        if (o.rat() == 0) throw Error("scalar division by zero");
        return Scalar(mpq_class(rat() / o.rat()));
    }
    if (o.flt() == 0.0) throw Error("scalar division by zero");
    return Scalar(checked_finite(flt() / o.flt(), "quotient"));
}

Scalar Scalar::operator-() const {
    if (mode() == Mode::rational) return Scalar(mpq_class(-rat()));
    return Scalar(-flt());
}

Scalar Scalar::abs() const {
    if (mode() == Mode::rational) return Scalar(mpq_class(::abs(rat())));
    return Scalar(std::fabs(flt()));
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_mode(o);
    if (mode() == Mode::rational) return rat() == o.rat();
    return flt() == o.flt();
}

bool Scalar::operator<(const Scalar& o) const {
    require_same_mode(o);
    if (mode() == Mode::rational) return rat() < o.rat();
    return flt() < o.flt();
}

Sign Scalar::sign(double eps) const {
    if (mode() == Mode::rational) {
        const int s = sgn(rat());
        return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
    }
    const double x = flt();
    if (x > eps) return Sign::positive;
    if (x < -eps) return Sign::negative;
    return Sign::zero;
}

Sign Scalar::sign_strict(const char* context, double eps) const {
    if (mode() == Mode::rational) return sign();
    const double x = flt();
    if (x > eps) return Sign::positive;
    if (x < -eps) return Sign::negative;
    throw IndeterminateError(std::string(context) + ": value " + str() +
                             " within tolerance of zero");
}

double Scalar::to_double() const {
    if (mode() == Mode::rational) return rat().get_d();
    return flt();
}

const mpq_class& Scalar::rational_value() const {
    if (mode() != Mode::rational) {
        throw Error("internal: rational_value() on a float scalar");
    }
    return rat();
}

std::string Scalar::str() const {
    if (mode() == Mode::rational) return rat().get_str();
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), flt());
    return std::string(buf, ptr);
}

std::string to_string(Sign s) {
    switch (s) {
        case Sign::negative: return "negative";
        case Sign::zero: return "zero";
        case Sign::positive: return "positive";
    }
    return "?";
}

std::string to_string(Mode m) {
    return m == Mode::rational ? "rational" : "float";
}

}  // namespace srbm
