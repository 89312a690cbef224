#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "srbm/errors.hpp"

namespace srbm {

/// Arithmetic mode of a scalar. A whole problem instance runs in one mode:
/// exact rational (entries given as integer ratios) or double precision.
enum class Mode { rational, floating };

/// Strictness tolerance for float-mode comparisons. Rational mode never
/// uses it.
inline constexpr double kStrictEps = 1e-9;

enum class Sign { negative, zero, positive };

/// A real number in either exact rational or double representation.
///
/// Rational values are kept in lowest terms (GMP canonical form). Float
/// values are finite by construction. Arithmetic between scalars of
/// different modes is a logic error.
class Scalar {
public:
    /// Rational zero.
    Scalar() : value_(mpq_class(0)) {}

    static Scalar rational(long num, long den = 1);
    static Scalar rational(const mpq_class& q);
    static Scalar floating(double x);

    /// Parse "p", "-p" or "p/q" as an exact rational.
    static Scalar parse_rational(const std::string& text);

    static Scalar zero(Mode m) { return from_int(0, m); }
    static Scalar one(Mode m) { return from_int(1, m); }
    static Scalar from_int(long v, Mode m);

    Mode mode() const {
        return std::holds_alternative<mpq_class>(value_) ? Mode::rational
                                                         : Mode::floating;
    }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Division by exact zero (or a float quotient overflowing to non-finite)
    /// throws.
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar abs() const;

    /// Exact comparison (same mode required). Used for ordering and
    /// deterministic tie-breaks, not for tolerance decisions.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;

    /// Three-way sign with the lenient zero convention: in float mode any
    /// value within eps of zero counts as zero. Exact in rational mode.
    Sign sign(double eps = kStrictEps) const;

    /// Three-way sign for strict inequalities: float values inside the eps
    /// band raise IndeterminateError instead of being classified.
    /// `context` names the comparison for the error message.
    Sign sign_strict(const char* context, double eps = kStrictEps) const;

    bool is_zero(double eps = kStrictEps) const { return sign(eps) == Sign::zero; }
    bool is_positive(double eps = kStrictEps) const { return sign(eps) == Sign::positive; }
    bool is_negative(double eps = kStrictEps) const { return sign(eps) == Sign::negative; }
    /// Lenient nonnegativity: sign() is zero or positive.
    bool is_nonnegative(double eps = kStrictEps) const { return sign(eps) != Sign::negative; }

    double to_double() const;
    const mpq_class& rational_value() const;

    /// "p/q" (or "p") in rational mode; shortest round-trip decimal in
    /// float mode.
    std::string str() const;

private:
    explicit Scalar(mpq_class q) : value_(std::move(q)) {}
    explicit Scalar(double x) : value_(x) {}

    const mpq_class& rat() const { return std::get<mpq_class>(value_); }
    double flt() const { return std::get<double>(value_); }

    void require_same_mode(const Scalar& o) const;

    std::variant<mpq_class, double> value_;
};

std::string to_string(Sign s);
std::string to_string(Mode m);

}  // namespace srbm
