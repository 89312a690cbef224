#include "srbm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace srbm {

namespace {

void check_dim(int dim) {
    if (dim < 1 || dim > 3) throw InputError("dimension must be 1, 2 or 3");
}

}  // namespace

Vector::Vector(int dim, Mode m) : mode_(m) {
    check_dim(dim);
    entries_.assign(static_cast<size_t>(dim), Scalar::zero(m));
}

Vector::Vector(std::initializer_list<Scalar> entries) {
    check_dim(static_cast<int>(entries.size()));
    entries_.assign(entries);
    mode_ = entries_.front().mode();
    for (const auto& e : entries_) {
        if (e.mode() != mode_) throw Error("internal: mixed-mode vector");
    }
}

Vector Vector::ones(int dim, Mode m) {
    Vector v(dim, m);
    for (int i = 0; i < dim; ++i) v[i] = Scalar::one(m);
    return v;
}

Vector Vector::operator+(const Vector& o) const {
    Vector r(dim(), mode_);
    for (int i = 0; i < dim(); ++i) r[i] = (*this)[i] + o[i];
    return r;
}

Vector Vector::operator-(const Vector& o) const {
    Vector r(dim(), mode_);
    for (int i = 0; i < dim(); ++i) r[i] = (*this)[i] - o[i];
    return r;
}

Vector Vector::operator-() const {
    Vector r(dim(), mode_);
    for (int i = 0; i < dim(); ++i) r[i] = -(*this)[i];
    return r;
}

Vector Vector::scaled(const Scalar& c) const {
    Vector r(dim(), mode_);
    for (int i = 0; i < dim(); ++i) r[i] = (*this)[i] * c;
    return r;
}

Scalar Vector::dot(const Vector& o) const {
    Scalar s = Scalar::zero(mode_);
    for (int i = 0; i < dim(); ++i) s += (*this)[i] * o[i];
    return s;
}

Scalar Vector::one_norm() const {
    Scalar s = Scalar::zero(mode_);
    for (int i = 0; i < dim(); ++i) s += (*this)[i].abs();
    return s;
}

bool Vector::operator==(const Vector& o) const {
    if (dim() != o.dim()) return false;
    for (int i = 0; i < dim(); ++i) {
        if ((*this)[i] != o[i]) return false;
    }
    return true;
}

bool Vector::all_nonnegative(double eps) const {
    for (int i = 0; i < dim(); ++i) {
        if ((*this)[i].sign(eps) == Sign::negative) return false;
    }
    return true;
}

bool Vector::all_positive(double eps) const {
    for (int i = 0; i < dim(); ++i) {
        if ((*this)[i].sign(eps) != Sign::positive) return false;
    }
    return true;
}

bool Vector::all_zero(double eps) const {
    for (int i = 0; i < dim(); ++i) {
        if ((*this)[i].sign(eps) != Sign::zero) return false;
    }
    return true;
}

std::vector<int> Vector::support(double eps) const {
    std::vector<int> s;
    for (int i = 0; i < dim(); ++i) {
        if ((*this)[i].sign(eps) == Sign::positive) s.push_back(i);
    }
    return s;
}

std::string Vector::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < dim(); ++i) os << (i ? ", " : "") << (*this)[i].str();
    os << ")";
    return os.str();
}

SquareMatrix::SquareMatrix(int dim, Mode m) : dim_(dim), mode_(m) {
    check_dim(dim);
    entries_.assign(static_cast<size_t>(dim * dim), Scalar::zero(m));
}

SquareMatrix::SquareMatrix(int dim, std::initializer_list<Scalar> entries)
    : dim_(dim) {
    check_dim(dim);
    if (static_cast<int>(entries.size()) != dim * dim) {
        throw InputError("matrix entry count does not match dimension");
    }
    entries_.assign(entries);
    mode_ = entries_.front().mode();
    for (const auto& e : entries_) {
        if (e.mode() != mode_) throw Error("internal: mixed-mode matrix");
    }
}

SquareMatrix SquareMatrix::identity(int dim, Mode m) {
    SquareMatrix r(dim, m);
    for (int i = 0; i < dim; ++i) r.at(i, i) = Scalar::one(m);
    return r;
}

SquareMatrix SquareMatrix::diagonal(const Vector& d) {
    SquareMatrix r(d.dim(), d.mode());
    for (int i = 0; i < d.dim(); ++i) r.at(i, i) = d[i];
    return r;
}

Vector SquareMatrix::row(int i) const {
    Vector v(dim_, mode_);
    for (int j = 0; j < dim_; ++j) v[j] = at(i, j);
    return v;
}

Vector SquareMatrix::col(int j) const {
    Vector v(dim_, mode_);
    for (int i = 0; i < dim_; ++i) v[i] = at(i, j);
    return v;
}

Vector SquareMatrix::diagonal_vector() const {
    Vector v(dim_, mode_);
    for (int i = 0; i < dim_; ++i) v[i] = at(i, i);
    return v;
}

SquareMatrix SquareMatrix::transpose() const {
    SquareMatrix r(dim_, mode_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
    return r;
}

SquareMatrix SquareMatrix::operator*(const SquareMatrix& o) const {
    SquareMatrix r(dim_, mode_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            Scalar s = Scalar::zero(mode_);
            for (int k = 0; k < dim_; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

Vector SquareMatrix::operator*(const Vector& v) const {
    Vector r(dim_, mode_);
    for (int i = 0; i < dim_; ++i) {
        Scalar s = Scalar::zero(mode_);
        for (int j = 0; j < dim_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

SquareMatrix SquareMatrix::operator-(const SquareMatrix& o) const {
    SquareMatrix r(dim_, mode_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(i, j) = at(i, j) - o.at(i, j);
    return r;
}

bool SquareMatrix::operator==(const SquareMatrix& o) const {
    if (dim_ != o.dim_) return false;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (at(i, j) != o.at(i, j)) return false;
    return true;
}

std::string SquareMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < dim_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < dim_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

Scalar determinant(const SquareMatrix& m) {
    switch (m.dim()) {
        case 1:
            return m.at(0, 0);
        case 2:
            return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
        default: {
            const Scalar c0 = m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
            const Scalar c1 = m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0);
            const Scalar c2 = m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0);
            return m.at(0, 0) * c0 - m.at(0, 1) * c1 + m.at(0, 2) * c2;
        }
    }
}

SquareMatrix invert(const SquareMatrix& m) {
    const Scalar det = determinant(m);
    if (det.is_zero()) {
        throw SingularMatrixError("singular matrix", left_null_vector(m));
    }
    const int d = m.dim();
    SquareMatrix adj(d, m.mode());
    if (d == 1) {
        adj.at(0, 0) = Scalar::one(m.mode());
    } else if (d == 2) {
        adj.at(0, 0) = m.at(1, 1);
        adj.at(0, 1) = -m.at(0, 1);
        adj.at(1, 0) = -m.at(1, 0);
        adj.at(1, 1) = m.at(0, 0);
    } else {
        // adj(i,j) = cofactor(j,i)
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
                const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                // Cyclic index choice absorbs the cofactor sign.
                adj.at(i, j) = m.at(r0, c0) * m.at(r1, c1) - m.at(r0, c1) * m.at(r1, c0);
            }
        }
    }
    SquareMatrix inv(d, m.mode());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) inv.at(i, j) = adj.at(i, j) / det;
    return inv;
}

namespace {

// Row echelon elimination over a d x (d+1) augmented system. Works in both
// modes; float pivots within kStrictEps of zero count as zero.
struct Elimination {
    int d;
    Mode mode;
    std::vector<std::vector<Scalar>> rows;  // augmented: d+1 columns
    std::vector<int> pivot_col_of_row;

    Elimination(const SquareMatrix& m, const Vector* rhs) : d(m.dim()), mode(m.mode()) {
        rows.assign(static_cast<size_t>(d), {});
        for (int i = 0; i < d; ++i) {
            auto& r = rows[static_cast<size_t>(i)];
            for (int j = 0; j < d; ++j) r.push_back(m.at(i, j));
            r.push_back(rhs ? (*rhs)[i] : Scalar::zero(mode));
        }
        run();
    }

    void run() {
        int row = 0;
        for (int col = 0; col < d && row < d; ++col) {
            int piv = -1;
            Scalar best = Scalar::zero(mode);
            for (int r = row; r < d; ++r) {
                const Scalar a = rows[static_cast<size_t>(r)][static_cast<size_t>(col)].abs();
                if (!a.is_zero() && (piv < 0 || best < a)) {
                    piv = r;
                    best = a;
                }
            }
            if (piv < 0) continue;
            std::swap(rows[static_cast<size_t>(row)], rows[static_cast<size_t>(piv)]);
            const Scalar p = rows[static_cast<size_t>(row)][static_cast<size_t>(col)];
            for (int r = 0; r < d; ++r) {
                if (r == row) continue;
                const Scalar f = rows[static_cast<size_t>(r)][static_cast<size_t>(col)] / p;
                if (f.is_zero(0.0)) continue;
                for (int c = col; c <= d; ++c) {
                    rows[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                        f * rows[static_cast<size_t>(row)][static_cast<size_t>(c)];
                }
            }
            pivot_col_of_row.push_back(col);
            ++row;
        }
    }

    int rank() const { return static_cast<int>(pivot_col_of_row.size()); }

    bool consistent() const {
        for (int r = rank(); r < d; ++r) {
            if (!rows[static_cast<size_t>(r)][static_cast<size_t>(d)].is_zero()) return false;
        }
        return true;
    }

    Vector solution() const {
        Vector x(d, mode);
        for (int r = 0; r < rank(); ++r) {
            const int c = pivot_col_of_row[static_cast<size_t>(r)];
            x[c] = rows[static_cast<size_t>(r)][static_cast<size_t>(d)] /
                   rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
        }
        return x;
    }
};

}  // namespace

LinearSolveResult try_solve(const SquareMatrix& m, const Vector& rhs) {
    Elimination e(m, &rhs);
    if (e.rank() == m.dim()) {
        return {SolveStatus::unique, e.solution()};
    }
    if (!e.consistent()) {
        return {SolveStatus::inconsistent, Vector(m.dim(), m.mode())};
    }
    return {SolveStatus::underdetermined, Vector(m.dim(), m.mode())};
}

Vector left_null_vector(const SquareMatrix& m) {
    // Kernel of the transpose: u with M'u = 0.
    Elimination e(m.transpose(), nullptr);
    const int d = m.dim();
    if (e.rank() == d) {
        throw Error("internal: left_null_vector on a nonsingular matrix");
    }
    // Free column = first column without a pivot; set it to 1, back-fill.
    std::vector<bool> is_pivot(static_cast<size_t>(d), false);
    for (int c : e.pivot_col_of_row) is_pivot[static_cast<size_t>(c)] = true;
    int free_col = 0;
    while (is_pivot[static_cast<size_t>(free_col)]) ++free_col;

    Vector u(d, m.mode());
    u[free_col] = Scalar::one(m.mode());
    for (int r = 0; r < e.rank(); ++r) {
        const int c = e.pivot_col_of_row[static_cast<size_t>(r)];
        u[c] = -e.rows[static_cast<size_t>(r)][static_cast<size_t>(free_col)] /
               e.rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    }
    // Normalize: first nonzero entry +1.
    for (int i = 0; i < d; ++i) {
        if (!u[i].is_zero()) {
            return u.scaled(Scalar::one(m.mode()) / u[i]);
        }
    }
    throw Error("internal: zero null vector");
}

SquareMatrix principal_submatrix(const SquareMatrix& m, std::span<const int> idx) {
    SquareMatrix r(static_cast<int>(idx.size()), m.mode());
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j)
            r.at(static_cast<int>(i), static_cast<int>(j)) = m.at(idx[i], idx[j]);
    return r;
}

Vector subvector(const Vector& v, std::span<const int> idx) {
    Vector r(static_cast<int>(idx.size()), v.mode());
    for (size_t i = 0; i < idx.size(); ++i) r[static_cast<int>(i)] = v[idx[i]];
    return r;
}

Vector embed(const Vector& small, std::span<const int> idx, int dim, Mode m) {
    Vector r(dim, m);
    for (size_t i = 0; i < idx.size(); ++i) r[idx[i]] = small[static_cast<int>(i)];
    return r;
}

std::vector<std::vector<int>> index_subsets(int d, bool include_empty) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << d); ++mask) {
        if (mask == 0 && !include_empty) continue;
        std::vector<int> s;
        for (int i = 0; i < d; ++i) {
            if (mask & (1 << i)) s.push_back(i);
        }
        out.push_back(std::move(s));
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() < b.size();
                         return a < b;
                     });
    return out;
}

}  // namespace srbm
