#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "srbm/scalar.hpp"

namespace srbm {

/// Dense vector of dimension 1..3, all entries in one arithmetic mode.
class Vector {
public:
    Vector(int dim, Mode m);
    Vector(std::initializer_list<Scalar> entries);

    static Vector zero(int dim, Mode m) { return Vector(dim, m); }
    static Vector ones(int dim, Mode m);

    int dim() const { return static_cast<int>(entries_.size()); }
    Mode mode() const { return mode_; }

    Scalar& operator[](int i) { return entries_[static_cast<size_t>(i)]; }
    const Scalar& operator[](int i) const { return entries_[static_cast<size_t>(i)]; }

    Vector operator+(const Vector& o) const;
    Vector operator-(const Vector& o) const;
    Vector operator-() const;
    Vector scaled(const Scalar& c) const;

    Scalar dot(const Vector& o) const;
    /// Sum of absolute entries (the |.| convention used throughout).
    Scalar one_norm() const;

    bool operator==(const Vector& o) const;

    /// Componentwise lenient sign tests.
    bool all_nonnegative(double eps = kStrictEps) const;
    bool all_positive(double eps = kStrictEps) const;
    bool all_zero(double eps = kStrictEps) const;

    /// Indices with positive entries (lenient zero convention), ascending.
    std::vector<int> support(double eps = kStrictEps) const;

    std::string str() const;

private:
    Mode mode_;
    std::vector<Scalar> entries_;
};

/// Dense square matrix of dimension 1..3, single arithmetic mode.
class SquareMatrix {
public:
    SquareMatrix(int dim, Mode m);
    /// Row-major entries.
    SquareMatrix(int dim, std::initializer_list<Scalar> entries);

    static SquareMatrix identity(int dim, Mode m);
    static SquareMatrix diagonal(const Vector& d);

    int dim() const { return dim_; }
    Mode mode() const { return mode_; }

    Scalar& at(int i, int j) { return entries_[static_cast<size_t>(i * dim_ + j)]; }
    const Scalar& at(int i, int j) const {
        return entries_[static_cast<size_t>(i * dim_ + j)];
    }

    Vector row(int i) const;
    Vector col(int j) const;
    Vector diagonal_vector() const;

    SquareMatrix transpose() const;
    SquareMatrix operator*(const SquareMatrix& o) const;
    Vector operator*(const Vector& v) const;
    SquareMatrix operator-(const SquareMatrix& o) const;

    bool operator==(const SquareMatrix& o) const;

    std::string str() const;

private:
    int dim_;
    Mode mode_;
    std::vector<Scalar> entries_;
};

/// Raised when an inversion or a solve meets a singular matrix. Carries a
/// left null vector u != 0 with u'M = 0, normalized so its first nonzero
/// entry is +1.
class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, Vector null_left)
        : Error(what), null_left(std::move(null_left)) {}
    Vector null_left;
};

Scalar determinant(const SquareMatrix& m);

/// Inverse via adjugate over determinant; exact in rational mode. Throws
/// SingularMatrixError when det is zero (rational) or within kStrictEps
/// (float).
SquareMatrix invert(const SquareMatrix& m);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct LinearSolveResult {
    SolveStatus status;
    Vector x;  // valid only when status == unique
};

/// Gaussian elimination solve of M x = rhs that distinguishes a unique
/// solution from inconsistent and underdetermined singular systems.
LinearSolveResult try_solve(const SquareMatrix& m, const Vector& rhs);

/// Left null vector of a singular matrix: u != 0 with u'M = 0, first
/// nonzero entry normalized to +1. Precondition: M singular.
Vector left_null_vector(const SquareMatrix& m);

/// Rows/columns of `m` restricted to the 0-based index set `idx` (sorted).
SquareMatrix principal_submatrix(const SquareMatrix& m, std::span<const int> idx);

Vector subvector(const Vector& v, std::span<const int> idx);

/// Scatter `small` into a zero dim-vector at positions `idx`.
Vector embed(const Vector& small, std::span<const int> idx, int dim, Mode m);

/// All subsets of {0..d-1} ordered by cardinality then lexicographically;
/// includes the empty set when `include_empty`.
std::vector<std::vector<int>> index_subsets(int d, bool include_empty);

}  // namespace srbm
