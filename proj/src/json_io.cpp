#include "srbm/json_io.hpp"

#include <fstream>

namespace srbm::io {

namespace {

Mode detect_mode(const json& doc) {
    bool saw_number = false, saw_string = false;
    const std::function<void(const json&)> walk = [&](const json& node) {
        if (node.is_number()) saw_number = true;
        else if (node.is_string()) saw_string = true;
        else if (node.is_array()) {
            for (const auto& el : node) walk(el);
        }
    };
    for (const char* key : {"theta", "R", "gamma"}) {
        if (doc.contains(key)) walk(doc.at(key));
    }
    if (saw_number && saw_string) {
        throw InputError("problem file mixes float and rational scalars");
    }
    return saw_string ? Mode::rational : Mode::floating;
}

Vector parse_vector(const json& arr, int dim, Mode mode, const char* what) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != dim) {
        throw InputError(std::string(what) + ": expected an array of length " +
                         std::to_string(dim));
    }
    Vector v(dim, mode);
    for (int i = 0; i < dim; ++i) v[i] = scalar_from_json(arr.at(static_cast<size_t>(i)), mode);
    return v;
}

SquareMatrix parse_matrix(const json& arr, int dim, Mode mode, const char* what) {
    if (!arr.is_array() || static_cast<int>(arr.size()) != dim) {
        throw InputError(std::string(what) + ": expected " + std::to_string(dim) +
                         " rows");
    }
    SquareMatrix m(dim, mode);
    for (int i = 0; i < dim; ++i) {
        const Vector row = parse_vector(arr.at(static_cast<size_t>(i)), dim, mode, what);
        for (int j = 0; j < dim; ++j) m.at(i, j) = row[j];
    }
    return m;
}

json outcome_to_json(IneqOutcome o) {
    switch (o) {
        case IneqOutcome::holds: return "holds";
        case IneqOutcome::fails: return "fails";
        case IneqOutcome::boundary: return "boundary";
        case IneqOutcome::indeterminate: return "indeterminate";
    }
    return "?";
}

Basis basis_from_string(const std::string& s) {
    for (Basis b : {Basis::necessary_condition_fails, Basis::spiral_gain_at_least_one,
                    Basis::divergent_lcp_solution, Basis::contracting_spiral,
                    Basis::unique_proper_lcp_solution, Basis::two_d_criterion,
                    Basis::two_d_criterion_fails}) {
        if (to_string(b) == s) return b;
    }
    throw InputError("unknown basis: " + s);
}

Category category_from_string(const std::string& s) {
    for (Category c : {Category::none, Category::I, Category::II, Category::III,
                       Category::IV, Category::V}) {
        if (to_string(c) == s) return c;
    }
    throw InputError("unknown category: " + s);
}

SpiralClass spiral_class_from_string(const std::string& s) {
    for (SpiralClass c : {SpiralClass::counter_clockwise, SpiralClass::clockwise,
                          SpiralClass::none}) {
        if (to_string(c) == s) return c;
    }
    throw InputError("unknown spiral class: " + s);
}

std::vector<int> index_set_from_json(const json& arr) {
    std::vector<int> idx;
    for (const auto& el : arr) idx.push_back(el.get<int>() - 1);
    return idx;
}

}  // namespace

Scalar scalar_from_json(const json& j, Mode expected) {
    if (j.is_string()) {
        if (expected != Mode::rational) {
            throw InputError("rational scalar in a float-mode document");
        }
        return Scalar::parse_rational(j.get<std::string>());
    }
    if (j.is_number()) {
        if (expected != Mode::floating) {
            throw InputError("float scalar in a rational-mode document");
        }
        return Scalar::floating(j.get<double>());
    }
    throw InputError("scalar must be a number or a \"p/q\" string");
}

ProblemData parse_problem(const json& doc) {
    if (!doc.is_object()) throw InputError("problem file must be a JSON object");
    if (!doc.contains("dim") || !doc.at("dim").is_number_integer()) {
        throw InputError("problem file needs an integer \"dim\"");
    }
    const int dim = doc.at("dim").get<int>();
    if (dim != 2 && dim != 3) throw InputError("dim must be 2 or 3");
    if (!doc.contains("theta") || !doc.contains("R")) {
        throw InputError("problem file needs \"theta\" and \"R\"");
    }
    const Mode mode = detect_mode(doc);
    Vector theta = parse_vector(doc.at("theta"), dim, mode, "theta");
    SquareMatrix r = parse_matrix(doc.at("R"), dim, mode, "R");
    if (doc.contains("gamma") && !doc.at("gamma").is_null()) {
        SquareMatrix gamma = parse_matrix(doc.at("gamma"), dim, mode, "gamma");
        return ProblemData(std::move(theta), std::move(gamma), std::move(r));
    }
    return ProblemData(std::move(theta), std::move(r));
}

ProblemData load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw InputError(std::string("problem file is not valid JSON: ") + e.what());
    }
    return parse_problem(doc);
}

json scalar_to_json(const Scalar& s) {
    if (s.mode() == Mode::rational) return s.str();
    return s.to_double();
}

json vector_to_json(const Vector& v) {
    json arr = json::array();
    for (int i = 0; i < v.dim(); ++i) arr.push_back(scalar_to_json(v[i]));
    return arr;
}

json matrix_to_json(const SquareMatrix& m) {
    json arr = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        arr.push_back(std::move(row));
    }
    return arr;
}

json index_set_to_json(const std::vector<int>& idx) {
    json arr = json::array();
    for (int i : idx) arr.push_back(i + 1);
    return arr;
}

json lcp_solution_to_json(const LcpSolution& s) {
    json j;
    j["u"] = vector_to_json(s.u);
    j["v"] = vector_to_json(s.v);
    j["support_u"] = index_set_to_json(s.support_u);
    j["support_v"] = index_set_to_json(s.support_v);
    j["stable"] = s.stable;
    j["degenerate"] = s.degenerate;
    j["proper"] = s.proper;
    j["category"] = to_string(s.category);
    j["rhat_indices"] =
        s.rhat_indices ? index_set_to_json(*s.rhat_indices) : json(nullptr);
    j["rhat_det"] = s.rhat_det ? scalar_to_json(*s.rhat_det) : json(nullptr);
    return j;
}

json spiral_report_to_json(const SpiralReport& r) {
    json j;
    j["membership"] = to_string(r.membership);
    j["gain"] = r.gain ? scalar_to_json(*r.gain) : json(nullptr);
    json ineqs = json::array();
    for (const auto& iq : r.inequalities) {
        ineqs.push_back(json{{"name", iq.name}, {"outcome", outcome_to_json(iq.outcome)}});
    }
    j["inequalities"] = std::move(ineqs);
    j["a"] = r.a ? vector_to_json(*r.a) : json(nullptr);
    j["b"] = r.b ? vector_to_json(*r.b) : json(nullptr);
    return j;
}

json necessary_condition_to_json(const NecessaryCondition& c) {
    json j;
    j["holds"] = c.holds;
    j["u_star"] = c.u_star ? vector_to_json(*c.u_star) : json(nullptr);
    switch (c.failure) {
        case NecessaryCondition::FailureKind::none: j["failure"] = nullptr; break;
        case NecessaryCondition::FailureKind::singular: j["failure"] = "Singular"; break;
        case NecessaryCondition::FailureKind::nonnegative_component:
            j["failure"] = "NonnegativeComponent";
            break;
    }
    j["component"] = c.component >= 0 ? json(c.component + 1) : json(nullptr);
    j["value"] = c.component_value ? scalar_to_json(*c.component_value) : json(nullptr);
    j["null_vector"] = c.null_left ? vector_to_json(*c.null_left) : json(nullptr);
    return j;
}

json certificate_to_json(const Certificate& c) {
    json j;
    if (const auto* p = std::get_if<ProperUniqueCert>(&c)) {
        j["type"] = "ProperUnique";
        j["u_star"] = vector_to_json(p->u_star);
    } else if (const auto* p = std::get_if<SpiralStableCert>(&c)) {
        j["type"] = "SpiralStable";
        j["membership"] = to_string(p->membership);
        j["gain"] = scalar_to_json(p->gain);
    } else if (const auto* p = std::get_if<SpiralUnstableCert>(&c)) {
        j["type"] = "SpiralUnstable";
        j["membership"] = to_string(p->membership);
        j["gain"] = scalar_to_json(p->gain);
        j["certificate_u"] = vector_to_json(p->certificate);
    } else if (const auto* p = std::get_if<DivergentSolutionCert>(&c)) {
        j["type"] = "DivergentSolution";
        j["solution"] = lcp_solution_to_json(p->solution);
    } else if (const auto* p = std::get_if<NecessityFailureCert>(&c)) {
        j["type"] = "NecessityFailure";
        j["kind"] = p->kind == NecessaryCondition::FailureKind::singular
                        ? "SingularNull"
                        : "NonnegativeComponent";
        j["component"] = p->component >= 0 ? json(p->component + 1) : json(nullptr);
        j["witness"] = vector_to_json(p->witness);
        j["value"] = p->value ? scalar_to_json(*p->value) : json(nullptr);
    }
    return j;
}

json verdict_to_json(const Verdict& v) {
    const ProblemData& nd = v.normalized;
    json j;
    j["decision"] = to_string(v.decision);
    j["basis"] = to_string(v.basis);
    j["certificate"] = certificate_to_json(v.certificate);
    j["normalized"] = json{{"theta", vector_to_json(nd.theta())},
                           {"R", matrix_to_json(nd.reflection())}};
    j["note"] = v.note ? json(*v.note) : json(nullptr);

    json diag;
    try {
        diag["necessary_condition"] =
            necessary_condition_to_json(necessary_condition(nd));
    } catch (const IndeterminateError&) {
        diag["necessary_condition"] = nullptr;
    }
    if (nd.dim() == 3) {
        try {
            diag["spiral"] = spiral_report_to_json(
                spiral_membership(nd.theta(), nd.reflection()));
        } catch (const Error&) {
            diag["spiral"] = nullptr;
        }
    } else {
        diag["spiral"] = nullptr;
    }
    try {
        json sols = json::array();
        for (auto& s : solve_lcp(nd.theta(), nd.reflection())) {
            LcpSolution labeled = s;
            try {
                labeled = classify_solution(s, nd.theta(), nd.reflection());
            } catch (const UnclassifiedSolutionError&) {
            }
            sols.push_back(lcp_solution_to_json(labeled));
        }
        diag["lcp_solutions"] = std::move(sols);
    } catch (const Error&) {
        diag["lcp_solutions"] = nullptr;
    }
    j["diagnostics"] = std::move(diag);
    return j;
}

Verdict verdict_from_json(const json& doc) {
    const json& norm = doc.at("normalized");
    const Mode mode = detect_mode(norm);
    const int dim = static_cast<int>(norm.at("theta").size());
    Vector theta = parse_vector(norm.at("theta"), dim, mode, "normalized.theta");
    SquareMatrix r = parse_matrix(norm.at("R"), dim, mode, "normalized.R");
    ProblemData nd(std::move(theta), std::move(r));

    const json& cj = doc.at("certificate");
    const std::string type = cj.at("type").get<std::string>();
    Certificate cert = ProperUniqueCert{Vector(dim, mode)};
    if (type == "ProperUnique") {
        cert = ProperUniqueCert{parse_vector(cj.at("u_star"), dim, mode, "u_star")};
    } else if (type == "SpiralStable") {
        cert = SpiralStableCert{
            spiral_class_from_string(cj.at("membership").get<std::string>()),
            scalar_from_json(cj.at("gain"), mode)};
    } else if (type == "SpiralUnstable") {
        cert = SpiralUnstableCert{
            spiral_class_from_string(cj.at("membership").get<std::string>()),
            scalar_from_json(cj.at("gain"), mode),
            parse_vector(cj.at("certificate_u"), dim, mode, "certificate_u")};
    } else if (type == "DivergentSolution") {
        const json& sj = cj.at("solution");
        LcpSolution sol{parse_vector(sj.at("u"), dim, mode, "u"),
                        parse_vector(sj.at("v"), dim, mode, "v")};
        sol.support_u = index_set_from_json(sj.at("support_u"));
        sol.support_v = index_set_from_json(sj.at("support_v"));
        sol.stable = sj.at("stable").get<bool>();
        sol.degenerate = sj.at("degenerate").get<bool>();
        sol.proper = sj.at("proper").get<bool>();
        sol.category = category_from_string(sj.at("category").get<std::string>());
        if (!sj.at("rhat_indices").is_null()) {
            sol.rhat_indices = index_set_from_json(sj.at("rhat_indices"));
        }
        if (!sj.at("rhat_det").is_null()) {
            sol.rhat_det = scalar_from_json(sj.at("rhat_det"), mode);
        }
        cert = DivergentSolutionCert{std::move(sol)};
    } else if (type == "NecessityFailure") {
        NecessityFailureCert nf{
            cj.at("kind").get<std::string>() == "SingularNull"
                ? NecessaryCondition::FailureKind::singular
                : NecessaryCondition::FailureKind::nonnegative_component,
            cj.at("component").is_null() ? -1 : cj.at("component").get<int>() - 1,
            parse_vector(cj.at("witness"), dim, mode, "witness"), std::nullopt};
        if (!cj.at("value").is_null()) {
            nf.value = scalar_from_json(cj.at("value"), mode);
        }
        cert = std::move(nf);
    } else {
        throw InputError("unknown certificate type: " + type);
    }

    Verdict v{doc.at("decision").get<std::string>() == "PositiveRecurrent"
                  ? Decision::positive_recurrent
                  : Decision::not_positive_recurrent,
              basis_from_string(doc.at("basis").get<std::string>()),
              std::move(cert), std::move(nd), std::nullopt};
    if (doc.contains("note") && !doc.at("note").is_null()) {
        v.note = doc.at("note").get<std::string>();
    }
    return v;
}

json fluid_path_to_json(const FluidPath& p) {
    json j;
    j["verdict"] = to_string(p.verdict);
    j["cycle_ratio"] = p.cycle_ratio ? scalar_to_json(*p.cycle_ratio) : json(nullptr);
    json bps = json::array();
    for (const auto& bp : p.breakpoints) {
        bps.push_back(json{{"t", scalar_to_json(bp.t)},
                           {"z", vector_to_json(bp.z)},
                           {"y", vector_to_json(bp.y)},
                           {"active_set", index_set_to_json(bp.active_set)},
                           {"velocity", vector_to_json(bp.velocity)},
                           {"push", vector_to_json(bp.push)}});
    }
    j["breakpoints"] = std::move(bps);
    return j;
}

json hitting_stats_to_json(const sim::HittingStats& s) {
    return json{{"n_hit", s.n_hit},
                {"n_censored", s.n_censored},
                {"mean_hit_time", s.mean_hit_time},
                {"censor_rate", s.censor_rate},
                {"growth_rate", s.growth_rate},
                {"max_complementarity_residual", s.max_complementarity_residual},
                {"max_consistency_residual", s.max_consistency_residual}};
}

json normalization_to_json(const NormalizationRecord& r) {
    json j;
    j["original"] = json{{"theta", vector_to_json(r.original.theta())},
                         {"R", matrix_to_json(r.original.reflection())},
                         {"gamma", matrix_to_json(r.original.gamma())}};
    j["normalized"] = json{{"theta", vector_to_json(r.normalized.theta())},
                           {"R", matrix_to_json(r.normalized.reflection())},
                           {"gamma", matrix_to_json(r.normalized.gamma())}};
    j["drift_scaling"] = vector_to_json(r.drift_scaling.diagonal_vector());
    j["column_scaling"] = vector_to_json(r.column_scaling.diagonal_vector());
    return j;
}

}  // namespace srbm::io
