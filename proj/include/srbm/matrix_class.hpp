#pragma once

#include <optional>

#include "srbm/linalg.hpp"

namespace srbm {

/// Witness for the S-matrix property: a strictly positive w with Mw > 0,
/// or the refutation that none exists.
struct SCertificate {
    std::optional<Vector> w;
    bool exists() const { return w.has_value(); }
};

/// Decides whether M is an S-matrix (some w >= 0 with Mw > 0; equivalently
/// some w > 0). Reduces to feasibility of {w >= e, Mw >= e} and enumerates
/// the vertices of that polyhedron, which is exact in rational mode. In
/// float mode a vertex whose deciding margin falls inside the tolerance
/// band raises IndeterminateError.
SCertificate is_s_matrix(const SquareMatrix& m);

/// Result of the completely-S test; on failure carries the smallest
/// (by cardinality, then lexicographically) failing principal index set,
/// 0-based.
struct CompletelySResult {
    bool completely_s;
    std::optional<std::vector<int>> failing_set;
};

/// True iff every nonempty principal submatrix is an S-matrix.
CompletelySResult is_completely_s(const SquareMatrix& r);

/// Principal minors in canonical order (singletons, pairs lexicographic,
/// full) and whether all are strictly positive.
struct PMatrixResult {
    bool p_matrix;
    std::vector<Scalar> minors;
    std::vector<std::vector<int>> index_sets;  // parallel to minors, 0-based
};

PMatrixResult is_p_matrix(const SquareMatrix& r);

/// Nonsingular M-matrix test: nonpositive off-diagonal entries and P-matrix.
bool is_m_matrix(const SquareMatrix& r);

}  // namespace srbm
