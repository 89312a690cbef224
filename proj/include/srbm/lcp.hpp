#pragma once

#include <optional>

#include "srbm/linalg.hpp"

namespace srbm {

/// Divergent-solution taxonomy. Stable solutions carry `none`. The five
/// labels split divergent solutions by the count of positive v-components,
/// the sign of det of the 2x2 principal submatrix on the zero-v
/// coordinates, and how many of the complementary u-components are
/// positive.
enum class Category { none, I, II, III, IV, V };

std::string to_string(Category c);

/// One solution (u, v) of: u, v >= 0, v = theta + R u, u . v = 0.
struct LcpSolution {
    Vector u;
    Vector v;
    std::vector<int> support_u;  // {i : u_i > 0}, 0-based ascending
    std::vector<int> support_v;  // {i : v_i > 0}
    bool stable = false;      // v == 0
    bool degenerate = false;  // |support_u| + |support_v| != d
    bool proper = false;      // stable and nondegenerate

    Category category = Category::none;
    /// For categories II..V: the zero-v coordinate pair and det of the
    /// corresponding principal submatrix.
    std::optional<std::vector<int>> rhat_indices;
    std::optional<Scalar> rhat_det;
};

/// All solutions of the linear complementarity problem for (theta, R),
/// found by exhausting the 2^d complementary supports. Solutions are
/// deduplicated (identical up to mode tolerance) and ordered by
/// |support_u|, then lexicographically. Categories are filled in.
///
/// A singular principal subsystem with a solution ray raises
/// DegenerateRayError; an inconsistent one simply contributes no solution.
std::vector<LcpSolution> solve_lcp(const Vector& theta, const SquareMatrix& r);

/// Assigns the category label (and rhat data) of one solution. Stable
/// solutions get Category::none. A divergent solution matching no pattern
/// raises UnclassifiedSolutionError; that cannot happen when the necessary
/// stability condition holds.
LcpSolution classify_solution(LcpSolution sol, const Vector& theta,
                              const SquareMatrix& r);

/// u* = -R^{-1} theta, the pushing rates of the unique stable solution.
/// Precondition: the necessary stability condition holds.
Vector proper_solution(const Vector& theta, const SquareMatrix& r);

}  // namespace srbm
