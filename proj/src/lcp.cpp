#include "srbm/lcp.hpp"

#include <algorithm>
#include <sstream>

#include "srbm/normalization.hpp"

namespace srbm {

std::string to_string(Category c) {
    switch (c) {
        case Category::none: return "None";
        case Category::I: return "I";
        case Category::II: return "II";
        case Category::III: return "III";
        case Category::IV: return "IV";
        case Category::V: return "V";
    }
    return "?";
}

namespace {

bool same_solution(const LcpSolution& a, const LcpSolution& b) {
    for (int i = 0; i < a.u.dim(); ++i) {
        if (!(a.u[i] - b.u[i]).is_zero()) return false;
        if (!(a.v[i] - b.v[i]).is_zero()) return false;
    }
    return true;
}

// Lexicographic ordering on (|support_u|, support_u, entries of u).
bool solution_order(const LcpSolution& a, const LcpSolution& b) {
    if (a.support_u.size() != b.support_u.size()) {
        return a.support_u.size() < b.support_u.size();
    }
    if (a.support_u != b.support_u) return a.support_u < b.support_u;
    for (int i = 0; i < a.u.dim(); ++i) {
        if (a.u[i] != b.u[i]) return a.u[i] < b.u[i];
    }
    return false;
}

LcpSolution make_solution(Vector u, Vector v, int d) {
    LcpSolution s{std::move(u), std::move(v)};
    s.support_u = s.u.support();
    s.support_v = s.v.support();
    s.stable = s.support_v.empty();
    s.degenerate =
        static_cast<int>(s.support_u.size() + s.support_v.size()) != d;
    s.proper = s.stable && !s.degenerate;
    return s;
}

}  // namespace

std::vector<LcpSolution> solve_lcp(const Vector& theta, const SquareMatrix& r) {
    const int d = r.dim();
    const Mode mode = r.mode();
    std::vector<LcpSolution> out;

    for (const auto& supp : index_subsets(d, /*include_empty=*/true)) {
        Vector u(d, mode);
        if (!supp.empty()) {
            const auto sub = principal_submatrix(r, supp);
            const auto rhs = -subvector(theta, supp);
            const auto solved = try_solve(sub, rhs);
            if (solved.status == SolveStatus::inconsistent) continue;
            if (solved.status == SolveStatus::underdetermined) {
                std::ostringstream os;
                os << "complementarity subsystem on support {";
                for (size_t k = 0; k < supp.size(); ++k) os << (k ? "," : "") << supp[k] + 1;
                os << "} is singular with a solution ray";
                throw DegenerateRayError(os.str(), supp);
            }
            if (!solved.x.all_nonnegative()) continue;
            u = embed(solved.x, supp, d, mode);
        }
        Vector v = theta + r * u;
        // v vanishes on the support by construction; clear float residue.
        for (int i : supp) v[i] = Scalar::zero(mode);
        bool feasible = true;
        for (int i = 0; i < d && feasible; ++i) {
            if (v[i].sign() == Sign::negative) feasible = false;
        }
        if (!feasible) continue;

        auto sol = make_solution(std::move(u), std::move(v), d);
        const bool duplicate =
            std::any_of(out.begin(), out.end(),
                        [&](const LcpSolution& s) { return same_solution(s, sol); });
        if (!duplicate) out.push_back(std::move(sol));
    }

    std::sort(out.begin(), out.end(), solution_order);
    return out;
}

LcpSolution classify_solution(LcpSolution sol, const Vector& theta,
                              const SquareMatrix& r) {
    (void)theta;
    const int d = r.dim();
    sol.category = Category::none;
    sol.rhat_indices.reset();
    sol.rhat_det.reset();
    if (sol.stable) return sol;

    const int n_pos_v = static_cast<int>(sol.support_v.size());
    const int n_pos_u = static_cast<int>(sol.support_u.size());

    if (d == 3 && n_pos_v == 2) {
        // The coordinate with v = 0 must carry positive pushing.
        int k = 0;
        while (std::find(sol.support_v.begin(), sol.support_v.end(), k) !=
               sol.support_v.end()) {
            ++k;
        }
        if (sol.u[k].sign() == Sign::positive) {
            sol.category = Category::I;
            return sol;
        }
    } else if (d == 3 && n_pos_v == 1) {
        std::vector<int> zero_v;
        for (int i = 0; i < d; ++i) {
            if (i != sol.support_v.front()) zero_v.push_back(i);
        }
        const Scalar det = determinant(principal_submatrix(r, zero_v));
        sol.rhat_indices = zero_v;
        sol.rhat_det = det;
        switch (det.sign()) {
            case Sign::positive:
                if (n_pos_u >= 1) sol.category = Category::II;
                break;
            case Sign::zero:
                if (n_pos_u >= 1) sol.category = Category::III;
                break;
            case Sign::negative:
                if (n_pos_u == 2) sol.category = Category::IV;
                if (n_pos_u == 1) sol.category = Category::V;
                break;
        }
        if (sol.category != Category::none) return sol;
    }

    if (d != 3) return sol;  // the category taxonomy is three-dimensional
    throw UnclassifiedSolutionError(
        "divergent solution (u=" + sol.u.str() + ", v=" + sol.v.str() +
        ") matches no category pattern");
}

Vector proper_solution(const Vector& theta, const SquareMatrix& r) {
    const auto cond = necessary_condition(theta, r);
    if (!cond.holds) {
        throw PreconditionError(
            "proper_solution requires the necessary stability condition");
    }
    return *cond.u_star;
}

}  // namespace srbm
