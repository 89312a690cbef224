#include "srbm/matrix_class.hpp"

#include <algorithm>

namespace srbm {

namespace {

// Constraint rows a_j . w >= 1 describing {w >= e, Mw >= e}.
std::vector<Vector> feasibility_rows(const SquareMatrix& m) {
    const int d = m.dim();
    std::vector<Vector> rows;
    for (int i = 0; i < d; ++i) {
        Vector r(d, m.mode());
        r[i] = Scalar::one(m.mode());
        rows.push_back(std::move(r));
    }
    for (int i = 0; i < d; ++i) rows.push_back(m.row(i));
    return rows;
}

// Choose k of the 2k constraints as equalities and solve for the vertex.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[static_cast<size_t>(i)] < n - (k - i)) {
            ++c[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

SCertificate is_s_matrix(const SquareMatrix& m) {
    const int d = m.dim();
    const Mode mode = m.mode();
    const auto rows = feasibility_rows(m);
    const int n = static_cast<int>(rows.size());

    bool ambiguous = false;
    std::vector<int> combo(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) combo[static_cast<size_t>(i)] = i;
    do {
        SquareMatrix active(d, mode);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                active.at(i, j) = rows[static_cast<size_t>(combo[static_cast<size_t>(i)])][j];
        const auto solved = try_solve(active, Vector::ones(d, mode));
        if (solved.status != SolveStatus::unique) continue;
        const Vector& w = solved.x;

        // Active rows sit at margin zero by construction; the inactive
        // margins decide feasibility of this vertex.
        bool vertex_ok = true;
        bool vertex_ambiguous = false;
        for (int j = 0; j < n; ++j) {
            if (std::find(combo.begin(), combo.end(), j) != combo.end()) continue;
            const Scalar margin = rows[static_cast<size_t>(j)].dot(w) - Scalar::one(mode);
            const Sign s = margin.sign();
            if (s == Sign::negative) {
                vertex_ok = false;
                break;
            }
            if (mode == Mode::floating && s == Sign::zero &&
                margin.to_double() < 0.0) {
                vertex_ambiguous = true;
            }
        }
        if (vertex_ok && !vertex_ambiguous) return SCertificate{w};
        if (vertex_ok && vertex_ambiguous) ambiguous = true;
    } while (next_combination(combo, n));

    if (ambiguous) {
        throw IndeterminateError("S-matrix test: feasibility decided only within tolerance");
    }
    return SCertificate{std::nullopt};
}

CompletelySResult is_completely_s(const SquareMatrix& r) {
    for (const auto& idx : index_subsets(r.dim(), /*include_empty=*/false)) {
        if (!is_s_matrix(principal_submatrix(r, idx)).exists()) {
            return {false, idx};
        }
    }
    return {true, std::nullopt};
}

PMatrixResult is_p_matrix(const SquareMatrix& r) {
    PMatrixResult out;
    out.p_matrix = true;
    for (const auto& idx : index_subsets(r.dim(), /*include_empty=*/false)) {
        const Scalar minor = determinant(principal_submatrix(r, idx));
        if (minor.sign_strict("principal minor") != Sign::positive) out.p_matrix = false;
        out.minors.push_back(minor);
        out.index_sets.push_back(idx);
    }
    return out;
}

bool is_m_matrix(const SquareMatrix& r) {
    for (int i = 0; i < r.dim(); ++i) {
        for (int j = 0; j < r.dim(); ++j) {
            if (i != j && r.at(i, j).sign() == Sign::positive) return false;
        }
    }
    return is_p_matrix(r).p_matrix;
}

}  // namespace srbm
