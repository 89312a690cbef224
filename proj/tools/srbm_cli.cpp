// Command-line front end: classify problem files, enumerate LCP solutions,
// report spiral membership, trace fluid paths, run the Monte Carlo
// simulator, and emit normalized data. JSON on stdout, CSV traces to a
// file; exit codes 0 (positive recurrent), 10 (not positive recurrent),
// 2 (input error), 3 (indeterminate), 1 (other failure).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "srbm/json_io.hpp"

namespace {

using namespace srbm;
using srbm::io::json;

constexpr int kExitPositiveRecurrent = 0;
constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitInput = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitNotPositiveRecurrent = 10;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json error_object(const std::string& kind, const std::string& message) {
    return json{{"error", kind}, {"message", message}};
}

std::string format_double(double x) { return Scalar::floating(x).str(); }

sim::Vec parse_z0(const std::string& text, int dim) {
    sim::Vec z{};
    std::stringstream ss(text);
    std::string part;
    int i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= dim) throw InputError("--z0 has too many components");
        z[static_cast<size_t>(i++)] = std::stod(part);
    }
    if (i != dim) throw InputError("--z0 must have exactly dim components");
    return z;
}

Vector z0_vector(const std::string& text, const ProblemData& data) {
    const sim::Vec z = parse_z0(text, data.dim());
    Vector v(data.dim(), data.mode());
    for (int i = 0; i < data.dim(); ++i) {
        v[i] = data.mode() == Mode::rational
                   ? Scalar::rational(mpq_class(z[static_cast<size_t>(i)]))
                   : Scalar::floating(z[static_cast<size_t>(i)]);
    }
    return v;
}

void write_fluid_csv(const std::string& path, const FluidPath& fp, int dim) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open trace file: " + path);
    out << "t,z1,z2,z3,y1,y2,y3,active_set\n";
    for (const auto& bp : fp.breakpoints) {
        out << format_double(bp.t.to_double());
        for (int i = 0; i < 3; ++i)
            out << "," << format_double(i < dim ? bp.z[i].to_double() : 0.0);
        for (int i = 0; i < 3; ++i)
            out << "," << format_double(i < dim ? bp.y[i].to_double() : 0.0);
        out << ",";
        for (size_t k = 0; k < bp.active_set.size(); ++k) {
            out << (k ? ";" : "") << bp.active_set[k] + 1;
        }
        out << "\n";
    }
}

void write_sim_csv(const std::string& path, const sim::PathTrace& trace, int dim) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open trace file: " + path);
    out << "t,z1,z2,z3,y1,y2,y3\n";
    for (size_t k = 1; k < trace.samples.size(); ++k) {
        const auto& s = trace.samples[k];
        out << format_double(s.t);
        for (int i = 0; i < 3; ++i)
            out << "," << format_double(i < dim ? s.z[static_cast<size_t>(i)] : 0.0);
        for (int i = 0; i < 3; ++i)
            out << "," << format_double(i < dim ? s.y[static_cast<size_t>(i)] : 0.0);
        out << "\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Recurrence classification of reflected Brownian motion in 2 and 3 dimensions"};
    app.require_subcommand(1);

    std::string problem_path;
    std::string z0_text;
    std::string trace_csv;
    int max_breakpoints = TraceBudget{}.max_breakpoints;
    double horizon_fluid = TraceBudget{}.horizon;
    sim::SimConfig sim_config;
    int stride = 1;
    double kappa = 1.0;

    auto* classify_cmd = app.add_subcommand("classify", "Classify a problem file");
    classify_cmd->add_option("problem", problem_path)->required();

    auto* normalize_cmd = app.add_subcommand("normalize", "Emit canonical problem data");
    normalize_cmd->add_option("problem", problem_path)->required();

    auto* lcp_cmd = app.add_subcommand("lcp", "Enumerate complementarity solutions");
    lcp_cmd->add_option("problem", problem_path)->required();

    auto* spiral_cmd = app.add_subcommand("spiral", "Spiral membership and gain");
    spiral_cmd->add_option("problem", problem_path)->required();

    auto* fluid_cmd = app.add_subcommand("fluid", "Trace the fluid path from a start state");
    fluid_cmd->add_option("problem", problem_path)->required();
    fluid_cmd->add_option("--z0", z0_text, "start state a,b,c")->required();
    fluid_cmd->add_option("--max-breakpoints", max_breakpoints);
    fluid_cmd->add_option("--horizon", horizon_fluid);
    fluid_cmd->add_option("--trace-csv", trace_csv, "write breakpoints as CSV");

    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo hitting-time estimation");
    sim_cmd->add_option("problem", problem_path)->required();
    sim_cmd->add_option("--z0", z0_text, "start state a,b,c")->required();
    sim_cmd->add_option("--dt", sim_config.dt);
    sim_cmd->add_option("--horizon", sim_config.horizon);
    sim_cmd->add_option("--paths", sim_config.n_paths);
    sim_cmd->add_option("--seed", sim_config.seed);
    sim_cmd->add_option("--radius", sim_config.hitting_radius);
    sim_cmd->add_option("--stride", stride, "CSV subsampling stride");
    sim_cmd->add_option("--trace-csv", trace_csv, "write the first path as CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << error_object("usage", e.what()).dump() << "\n";
        return kExitInput;
    }

    try {
        const ProblemData data = io::load_problem(problem_path);

        if (classify_cmd->parsed()) {
            const Verdict v = classify(data);
            emit(io::verdict_to_json(v));
            return v.decision == Decision::positive_recurrent
                       ? kExitPositiveRecurrent
                       : kExitNotPositiveRecurrent;
        }
        if (normalize_cmd->parsed()) {
            emit(io::normalization_to_json(normalize(data)));
            return kExitOk;
        }
        if (lcp_cmd->parsed()) {
            const auto norm = normalize(data);
            const ProblemData& nd = norm.normalized;
            json sols = json::array();
            for (const auto& s : solve_lcp(nd.theta(), nd.reflection())) {
                LcpSolution labeled = s;
                try {
                    labeled = classify_solution(s, nd.theta(), nd.reflection());
                } catch (const UnclassifiedSolutionError&) {
                }
                sols.push_back(io::lcp_solution_to_json(labeled));
            }
            emit(json{{"count", sols.size()},
                      {"solutions", std::move(sols)},
                      {"normalized",
                       json{{"theta", io::vector_to_json(nd.theta())},
                            {"R", io::matrix_to_json(nd.reflection())}}}});
            return kExitOk;
        }
        if (spiral_cmd->parsed()) {
            if (data.dim() != 3) throw InputError("spiral analysis requires dim 3");
            const auto norm = normalize(data);
            const ProblemData& nd = norm.normalized;
            emit(json{{"report", io::spiral_report_to_json(
                                     spiral_membership(nd.theta(), nd.reflection()))},
                      {"normalized",
                       json{{"theta", io::vector_to_json(nd.theta())},
                            {"R", io::matrix_to_json(nd.reflection())}}}});
            return kExitOk;
        }
        if (fluid_cmd->parsed()) {
            TraceBudget budget;
            budget.max_breakpoints = max_breakpoints;
            budget.horizon = horizon_fluid;
            const Vector z0 = z0_vector(z0_text, data);
            const FluidPath fp = fluid_trace(data.theta(), data.reflection(), z0, budget);
            if (!trace_csv.empty()) write_fluid_csv(trace_csv, fp, data.dim());
            emit(io::fluid_path_to_json(fp));
            return kExitOk;
        }
        if (sim_cmd->parsed()) {
            const sim::Vec z0 = parse_z0(z0_text, data.dim());
            if (!trace_csv.empty()) {
                write_sim_csv(trace_csv, sim::simulate_path(data, z0, sim_config, stride),
                              data.dim());
            }
            emit(io::hitting_stats_to_json(
                sim::estimate_hitting_time(data, z0, sim_config)));
            return kExitOk;
        }
        return kExitOther;
    } catch (const IndeterminateError& e) {
        std::cerr << error_object("indeterminate", e.what()).dump() << "\n";
        return kExitIndeterminate;
    } catch (const InputError& e) {
        std::cerr << error_object("input", e.what()).dump() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << error_object("failure", e.what()).dump() << "\n";
        return kExitOther;
    } catch (const std::exception& e) {
        std::cerr << error_object("failure", e.what()).dump() << "\n";
        return kExitOther;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
