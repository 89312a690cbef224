#include "srbm/classifier.hpp"

#include <algorithm>

namespace srbm {

std::string to_string(Decision d) {
    return d == Decision::positive_recurrent ? "PositiveRecurrent"
                                             : "NotPositiveRecurrent";
}

std::string to_string(Basis b) {
    switch (b) {
        case Basis::necessary_condition_fails: return "NecessaryConditionFails";
        case Basis::spiral_gain_at_least_one: return "SpiralGainAtLeastOne";
        case Basis::divergent_lcp_solution: return "DivergentLcpSolution";
        case Basis::contracting_spiral: return "ContractingSpiral";
        case Basis::unique_proper_lcp_solution: return "UniqueProperLcpSolution";
        case Basis::two_d_criterion: return "TwoDimensionalCriterion";
        case Basis::two_d_criterion_fails: return "TwoDimensionalCriterionFails";
    }
    return "?";
}

namespace {

int category_rank(Category c) { return static_cast<int>(c); }

bool lex_less(const Vector& a, const Vector& b) {
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Verdict divergent_verdict(Basis basis, std::vector<LcpSolution> divergent,
                          ProblemData normalized) {
    // Deterministic certificate choice: lowest category, then lexicographic u.
    auto best = std::min_element(
        divergent.begin(), divergent.end(),
        [](const LcpSolution& x, const LcpSolution& y) {
            if (x.category != y.category)
                return category_rank(x.category) < category_rank(y.category);
            return lex_less(x.u, y.u);
        });
    std::optional<std::string> note;
    if (best->category == Category::I || best->category == Category::II) {
        note = "transient";
    }
    return Verdict{Decision::not_positive_recurrent, basis,
                   DivergentSolutionCert{std::move(*best)}, std::move(normalized),
                   std::move(note)};
}

}  // namespace

NecessityFailureCert necessity_certificate(const Vector& theta,
                                           const SquareMatrix& r) {
    const auto cond = necessary_condition(theta, r);
    if (cond.holds) {
        throw PreconditionError(
            "necessity_certificate: the necessary condition holds");
    }
    if (cond.failure == NecessaryCondition::FailureKind::singular) {
        Vector u = *cond.null_left;
        if (u.dot(theta).sign() == Sign::negative) u = -u;
        return NecessityFailureCert{cond.failure, -1, std::move(u), std::nullopt};
    }
    const Vector witness = invert(r).row(cond.component);
    return NecessityFailureCert{cond.failure, cond.component, witness,
                                cond.component_value};
}

Verdict classify_2d(const ProblemData& data) {
    if (data.dim() != 2) throw PreconditionError("classify_2d requires dimension 2");
    auto norm = normalize(data);
    const ProblemData& nd = norm.normalized;

    const auto cond = necessary_condition(nd);
    if (!cond.holds) {
        return Verdict{Decision::not_positive_recurrent,
                       Basis::two_d_criterion_fails,
                       necessity_certificate(nd.theta(), nd.reflection()), nd,
                       std::nullopt};
    }
    if (is_p_matrix(nd.reflection()).p_matrix) {
        return Verdict{Decision::positive_recurrent, Basis::two_d_criterion,
                       ProperUniqueCert{*cond.u_star}, nd, std::nullopt};
    }
    // Not a P-matrix: a divergent solution always exists here and is the
    // machine-checkable witness.
    auto sols = solve_lcp(nd.theta(), nd.reflection());
    std::vector<LcpSolution> divergent;
    for (auto& s : sols) {
        if (!s.stable) divergent.push_back(classify_solution(s, nd.theta(), nd.reflection()));
    }
    if (divergent.empty()) {
        throw Error("internal: two-dimensional non-P instance without a divergent solution");
    }
    return divergent_verdict(Basis::two_d_criterion_fails, std::move(divergent), nd);
}

Verdict classify(const ProblemData& data) {
    if (data.dim() == 2) return classify_2d(data);

    auto norm = normalize(data);
    const ProblemData& nd = norm.normalized;
    const Vector& theta = nd.theta();
    const SquareMatrix& r = nd.reflection();

    const auto cond = necessary_condition(theta, r);
    if (!cond.holds) {
        return Verdict{Decision::not_positive_recurrent,
                       Basis::necessary_condition_fails,
                       necessity_certificate(theta, r), nd, std::nullopt};
    }

    const auto spiral = spiral_membership(theta, r);
    if (spiral.membership != SpiralClass::none) {
        const Scalar& gain = *spiral.gain;
        const Scalar margin = gain - Scalar::one(nd.mode());
        if (margin.sign_strict("spiral gain vs 1") == Sign::negative) {
            return Verdict{Decision::positive_recurrent, Basis::contracting_spiral,
                           SpiralStableCert{spiral.membership, gain}, nd,
                           std::nullopt};
        }
        const bool ccw = spiral.membership == SpiralClass::counter_clockwise;
        const Vector cert_u =
            ccw ? spiral_instability_certificate(theta, r)
                : spiral_instability_certificate(reverse_coordinates(theta),
                                                 reverse_coordinates(r));
        return Verdict{Decision::not_positive_recurrent,
                       Basis::spiral_gain_at_least_one,
                       SpiralUnstableCert{spiral.membership, gain, cert_u}, nd,
                       std::nullopt};
    }

    auto sols = solve_lcp(theta, r);
    std::vector<LcpSolution> divergent;
    for (auto& s : sols) {
        if (!s.stable) divergent.push_back(classify_solution(s, theta, r));
    }
    if (divergent.empty()) {
        return Verdict{Decision::positive_recurrent,
                       Basis::unique_proper_lcp_solution,
                       ProperUniqueCert{*cond.u_star}, nd, std::nullopt};
    }
    return divergent_verdict(Basis::divergent_lcp_solution, std::move(divergent), nd);
}

namespace {

bool check_nonnegative_combination(const Vector& u, const SquareMatrix& v) {
    for (int j = 0; j < v.dim(); ++j) {
        if (u.dot(v.col(j)).sign() == Sign::negative) return false;
    }
    return true;
}

}  // namespace

bool revalidate(const Verdict& verdict) {
    const ProblemData& nd = verdict.normalized;
    const Vector& theta = nd.theta();
    const SquareMatrix& r = nd.reflection();
    const Mode mode = nd.mode();

    if (const auto* c = std::get_if<ProperUniqueCert>(&verdict.certificate)) {
        const auto cond = necessary_condition(theta, r);
        if (!cond.holds || !c->u_star.all_positive()) return false;
        return (c->u_star - *cond.u_star).one_norm().is_zero();
    }
    if (const auto* c = std::get_if<SpiralStableCert>(&verdict.certificate)) {
        const auto rep = spiral_membership(theta, r);
        if (rep.membership != c->membership) return false;
        return (*rep.gain - c->gain).is_zero() &&
               (c->gain - Scalar::one(mode)).sign() == Sign::negative;
    }
    if (const auto* c = std::get_if<SpiralUnstableCert>(&verdict.certificate)) {
        const auto rep = spiral_membership(theta, r);
        if (rep.membership != c->membership) return false;
        if (!(*rep.gain - c->gain).is_zero()) return false;
        if ((c->gain - Scalar::one(mode)).sign() == Sign::negative) return false;
        if (!c->certificate.all_positive()) return false;
        if (!(c->certificate.one_norm() - Scalar::one(mode)).is_zero()) return false;
        const SquareMatrix base = c->membership == SpiralClass::counter_clockwise
                                      ? r
                                      : reverse_coordinates(r);
        return check_nonnegative_combination(c->certificate,
                                             face_velocity_matrix(base));
    }
    if (const auto* c = std::get_if<DivergentSolutionCert>(&verdict.certificate)) {
        const LcpSolution& s = c->solution;
        if (!s.u.all_nonnegative() || !s.v.all_nonnegative()) return false;
        if (!(s.v - (theta + r * s.u)).one_norm().is_zero()) return false;
        if (!s.u.dot(s.v).is_zero()) return false;
        if (s.stable) return false;
        try {
            LcpSolution again = classify_solution(s, theta, r);
            return again.category == s.category;
        } catch (const UnclassifiedSolutionError&) {
            return false;
        }
    }
    if (const auto* c = std::get_if<NecessityFailureCert>(&verdict.certificate)) {
        if (c->kind == NecessaryCondition::FailureKind::singular) {
            if (c->witness.all_zero()) return false;
            Vector residual(r.dim(), mode);
            for (int j = 0; j < r.dim(); ++j) residual[j] = c->witness.dot(r.col(j));
            if (!residual.all_zero()) return false;
            return c->witness.dot(theta).sign() != Sign::negative;
        }
        // Row certificate: witness . theta = (R^-1 theta)_i >= 0, and the
        // witness pairs positively with an S-certificate image of R.
        if (c->witness.dot(theta).sign() == Sign::negative) return false;
        const auto scert = is_s_matrix(r);
        if (!scert.exists()) return false;
        return c->witness.dot(r * *scert.w).sign() == Sign::positive;
    }
    return false;
}

}  // namespace srbm
