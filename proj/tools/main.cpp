// Command-line front end for the associated q-orthogonal-polynomial kernel.
//
//   qaw eval   {phi|W|solution|polynomial|cf|weight}   single evaluations
//   qaw verify {contiguous|solutions|pincherle|wronskian|dougall|
//               orthogonality|all}                     seeded identity suites
//   qaw table  {weight|coefficients|convergents}       bulk tabulation
//
// Exit codes: 0 success, 1 a verification check failed, 2 domain/config
// errors (vanishing displayed factor, guard rejection, bad flags/config),
// 3 non-convergence (including evaluation on the continuous spectrum).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qaw/config.hpp"
#include "qaw/continued_fraction.hpp"
#include "qaw/errors.hpp"
#include "qaw/io.hpp"
#include "qaw/parameters.hpp"
#include "qaw/qpochhammer.hpp"
#include "qaw/recurrence.hpp"
#include "qaw/series.hpp"
#include "qaw/solutions.hpp"
#include "qaw/spectral.hpp"
#include "qaw/verify.hpp"

namespace {

using qaw::cplx;
using qaw::json;
using qaw::RunConfig;
using qaw::SpectralPoint;

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += '"';
    return out;
}

json point_json(const SpectralPoint& pt) {
    json j;
    j["z"] = qaw::to_json(pt.z);
    j["u"] = qaw::to_json(pt.u);
    if (pt.theta) j["theta"] = *pt.theta;
    return j;
}

// Flatten a JSON document into (path, scalar) rows for the CSV rendering of
// `eval` results. Complex values were serialized as [re, im] pairs.
void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                    rows);
    } else if (j.is_array()) {
        if (j.size() == 2 && j[0].is_number() && j[1].is_number()) {
            rows.emplace_back(prefix + ".re",
                              qaw::format_double(j[0].get<double>()));
            rows.emplace_back(prefix + ".im",
                              qaw::format_double(j[1].get<double>()));
            return;
        }
        for (std::size_t k = 0; k < j.size(); ++k)
            flatten(j[k], prefix + "[" + std::to_string(k) + "]", rows);
    } else if (j.is_number_float()) {
        rows.emplace_back(prefix, qaw::format_double(j.get<double>()));
    } else if (j.is_boolean()) {
        rows.emplace_back(prefix, j.get<bool>() ? "true" : "false");
    } else if (j.is_string()) {
        rows.emplace_back(prefix, j.get<std::string>());
    } else {
        rows.emplace_back(prefix, j.dump());
    }
}

void emit_doc(const RunConfig& cfg, const json& doc) {
    if (cfg.output_format == "csv") {
        std::vector<std::pair<std::string, std::string>> rows;
        flatten(doc, "", rows);
        std::cout << "field,value\n";
        for (const auto& [k, v] : rows)
            std::cout << csv_quote(k) << "," << csv_quote(v) << "\n";
    } else {
        std::cout << doc.dump(2) << "\n";
    }
}

void emit_table(const RunConfig& cfg, const json& doc,
                const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    if (cfg.output_format == "csv") {
        for (std::size_t i = 0; i < header.size(); ++i)
            std::cout << (i ? "," : "") << header[i];
        std::cout << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << (i ? "," : "") << row[i];
            std::cout << "\n";
        }
    } else {
        std::cout << doc.dump(2) << "\n";
    }
}

void emit_error(const std::string& type, const std::string& message) {
    json doc;
    doc["error"] = json{{"type", type}, {"message", message}};
    std::cout << doc.dump(2) << "\n";
}

qaw::SolutionKind parse_solution(const std::string& s) {
    if (s == "S1" || s == "s1") return qaw::SolutionKind::S1;
    if (s == "S2" || s == "s2") return qaw::SolutionKind::S2;
    if (s == "S3" || s == "s3") return qaw::SolutionKind::S3;
    if (s == "S4" || s == "s4") return qaw::SolutionKind::S4;
    if (s == "S5" || s == "s5") return qaw::SolutionKind::S5;
    if (s == "S6" || s == "s6") return qaw::SolutionKind::S6;
    throw qaw::DomainError("unknown solution name: " + s +
                           " (expected S1..S6)");
}

struct Flags {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string format;
    bool serial = false;
    int n = 3;
    bool n_given = false;
    double z_re = 2.0;
    double z_im = 0.0;
    double x = 0.25;
    int depth = 20;
    int grid_n = 21;
    int quad_n = 2048;
    std::string solution = "S4";
    bool reciprocal = false;
    std::string method = "direct";
    std::string suite = "all";
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config_path,
                    "JSON configuration file (params, tolerance, cf, format, "
                    "seed, serial)");
    cmd->add_option("--seed", f.seed, "seed for randomized draws")
        ->each([&f](const std::string&) { f.seed_given = true; });
    cmd->add_option("--format", f.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--serial", f.serial,
                  "force deterministic single-threaded evaluation");
}

RunConfig load_config(const Flags& f) {
    RunConfig cfg;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in)
            throw qaw::DomainError("config: cannot open file " + f.config_path);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw qaw::DomainError(std::string("config: invalid JSON: ") +
                                   e.what());
        }
        cfg = qaw::config_from_json(j);
    }
    if (f.seed_given) cfg.seed = f.seed;
    if (!f.format.empty()) cfg.output_format = f.format;
    if (f.serial) cfg.serial = true;
    cfg.params.validate();
    return cfg;
}

json base_doc(const std::string& command, const RunConfig& cfg) {
    json doc;
    doc["command"] = command;
    doc["params"] = qaw::to_json(cfg.params);
    doc["seed"] = cfg.seed;
    doc["serial"] = cfg.serial;
    return doc;
}

int cmd_eval_phi(const Flags& f) {
    const RunConfig cfg = load_config(f);
    const qaw::QParameters& p = cfg.params;
    const SpectralPoint pt = SpectralPoint::from_z(cplx(f.z_re, f.z_im));
    const int n = f.n;
    qaw::PhiSeriesSpec spec;
    spec.q = p.q;
    spec.z = p.q;
    spec.numerator = {qaw::qpow(p.q, -n), p.s() * qaw::qpow(p.q, n - 1),
                      p.alpha * pt.u, p.alpha / pt.u};
    spec.denominator = {p.alpha * p.beta, p.alpha * p.gamma,
                        p.alpha * p.delta};
    const qaw::SeriesValue v = qaw::eval_phi(spec, cfg.tolerance);
    json doc = base_doc("eval phi", cfg);
    doc["point"] = point_json(pt);
    doc["n"] = n;
    doc["result"] = qaw::to_json(v);
    emit_doc(cfg, doc);
    return 0;
}

int cmd_eval_w(const Flags& f) {
    const RunConfig cfg = load_config(f);
    const qaw::QParameters& p = cfg.params;
    const SpectralPoint pt = SpectralPoint::from_z(cplx(f.z_re, f.z_im));
    const cplx u = pt.u;
    const qaw::VwpW w{p.epsilon / (u * u), p.q / (p.alpha * u),
                      p.q / (p.beta * u), p.q / (p.gamma * u),
                      p.q / (p.delta * u), p.epsilon, p.q};
    const qaw::SeriesValue v = qaw::eval_W(w, cfg.tolerance);
    json doc = base_doc("eval W", cfg);
    doc["point"] = point_json(pt);
    doc["argument"] = qaw::to_json(w.argument());
    doc["result"] = qaw::to_json(v);
    emit_doc(cfg, doc);
    return 0;
}

int cmd_eval_solution(const Flags& f) {
    const RunConfig cfg = load_config(f);
    const SpectralPoint pt = SpectralPoint::from_z(cplx(f.z_re, f.z_im));
    const qaw::SolutionId id{parse_solution(f.solution), f.reciprocal};
    const int n = f.n_given ? f.n : 0;
    const qaw::SolutionValue v =
        qaw::eval_solution_detail(id, cfg.params, n, pt, cfg.tolerance);
    json doc = base_doc("eval solution", cfg);
    doc["solution"] = qaw::to_string(id.kind);
    doc["reciprocal"] = id.reciprocal;
    doc["n"] = n;
    doc["point"] = point_json(pt);
    doc["convergence_modulus"] =
        qaw::convergence_modulus(id.kind, cfg.params, n,
                                 id.reciprocal ? 1.0 / pt.u : pt.u);
    doc["value"] = qaw::to_json(v.value);
    doc["w_series"] = qaw::to_json(v.w);
    emit_doc(cfg, doc);
    return 0;
}

int cmd_eval_polynomial(const Flags& f) {
    const RunConfig cfg = load_config(f);
    const SpectralPoint pt = SpectralPoint::from_z(cplx(f.z_re, f.z_im));
    const int n = f.n_given ? f.n : 5;
    const cplx v = qaw::assoc_polynomial(cfg.params, n, pt);
    json doc = base_doc("eval polynomial", cfg);
    doc["n"] = n;
    doc["point"] = point_json(pt);
    doc["value"] = qaw::to_json(v);
    emit_doc(cfg, doc);
    return 0;
}

int cmd_eval_cf(const Flags& f) {
    const RunConfig cfg = load_config(f);
    const SpectralPoint pt = SpectralPoint::from_z(cplx(f.z_re, f.z_im));
    if (pt.on_cut())
        throw qaw::SpectrumError(
            "continuous spectrum: the continued fraction does not converge "
            "pointwise for z inside [-1, 1]");
    cplx value;
    if (f.method == "direct") {
        value = qaw::cf_direct(cfg.params, pt, cfg.cf);
    } else if (f.method == "pincherle") {
        value = qaw::cf_pincherle(cfg.params, pt, cfg.tolerance);
    } else if (f.method == "closed-s4") {
        value = 1.0 / qaw::stieltjes_closed_s4(cfg.params, pt, cfg.tolerance);
    } else if (f.method == "closed-s6") {
        value = 1.0 / qaw::stieltjes_closed_s6(cfg.params, pt, cfg.tolerance);
    } else {
        throw qaw::DomainError("unknown cf method: " + f.method);
    }
    json doc = base_doc("eval cf", cfg);
    doc["method"] = f.method;
    doc["point"] = point_json(pt);
    doc["value"] = qaw::to_json(value);
    doc["stieltjes"] = qaw::to_json(1.0 / value);
    emit_doc(cfg, doc);
    return 0;
}

int cmd_eval_weight(const Flags& f) {
    const RunConfig cfg = load_config(f);
    const double rho = qaw::weight_density(cfg.params, f.x, cfg.tolerance);
    json doc = base_doc("eval weight", cfg);
    doc["x"] = f.x;
    doc["density"] = rho;
    emit_doc(cfg, doc);
    return 0;
}

int cmd_verify(const Flags& f) {
    const RunConfig cfg = load_config(f);
    std::vector<std::string> names;
    if (f.suite == "all")
        names = qaw::suite_names();
    else
        names.push_back(f.suite);
    std::vector<qaw::SuiteReport> reports;
    bool all_passed = true;
    for (const std::string& name : names) {
        reports.push_back(qaw::run_suite(name, cfg));
        all_passed = all_passed && reports.back().passed;
    }
    if (cfg.output_format == "csv") {
        std::cout << "suite,check,residual,threshold,pass,detail\n";
        for (const qaw::SuiteReport& r : reports)
            for (const qaw::CheckResult& c : r.checks)
                std::cout << csv_quote(r.suite) << "," << csv_quote(c.name)
                          << "," << qaw::format_double(c.residual) << ","
                          << qaw::format_double(c.threshold) << ","
                          << (c.pass ? "true" : "false") << ","
                          << csv_quote(c.detail) << "\n";
    } else {
        json doc = base_doc("verify", cfg);
        json suites = json::array();
        for (const qaw::SuiteReport& r : reports)
            suites.push_back(qaw::to_json(r));
        doc["suites"] = std::move(suites);
        doc["passed"] = all_passed;
        std::cout << doc.dump(2) << "\n";
    }
    return all_passed ? 0 : 1;
}

int cmd_table_weight(const Flags& f) {
    const RunConfig cfg = load_config(f);
    const qaw::WeightTable t =
        qaw::weight_table(cfg.params, f.grid_n, cfg.tolerance);
    json doc = base_doc("table weight", cfg);
    json rows = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        rows.push_back(json{{"x", t.nodes[i]}, {"density", t.density[i]}});
        csv_rows.push_back(
            {qaw::format_double(t.nodes[i]), qaw::format_double(t.density[i])});
    }
    doc["rows"] = std::move(rows);
    emit_table(cfg, doc, {"x", "density"}, csv_rows);
    return 0;
}

int cmd_table_coefficients(const Flags& f) {
    const RunConfig cfg = load_config(f);
    const int n_max = f.n_given ? f.n : 10;
    if (n_max < 0) throw qaw::DomainError("--n must be nonnegative");
    json doc = base_doc("table coefficients", cfg);
    json rows = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (int n = 0; n <= n_max; ++n) {
        const qaw::RecurrenceCoefficients c = qaw::coefficients(cfg.params, n);
        rows.push_back(json{{"n", n},
                            {"a", qaw::to_json(c.a_n)},
                            {"b2", qaw::to_json(c.b2_n)},
                            {"A", qaw::to_json(c.A_n)},
                            {"B", qaw::to_json(c.B_n)}});
        csv_rows.push_back({std::to_string(n),
                            qaw::format_double(c.a_n.real()),
                            qaw::format_double(c.a_n.imag()),
                            qaw::format_double(c.b2_n.real()),
                            qaw::format_double(c.b2_n.imag()),
                            qaw::format_double(c.A_n.real()),
                            qaw::format_double(c.A_n.imag()),
                            qaw::format_double(c.B_n.real()),
                            qaw::format_double(c.B_n.imag())});
    }
    doc["rows"] = std::move(rows);
    emit_table(cfg, doc,
               {"n", "a_re", "a_im", "b2_re", "b2_im", "A_re", "A_im", "B_re",
                "B_im"},
               csv_rows);
    return 0;
}

int cmd_table_convergents(const Flags& f) {
    const RunConfig cfg = load_config(f);
    const SpectralPoint pt = SpectralPoint::from_z(cplx(f.z_re, f.z_im));
    if (pt.on_cut())
        throw qaw::SpectrumError(
            "continuous spectrum: the continued fraction does not converge "
            "pointwise for z inside [-1, 1]");
    if (f.depth < 0) throw qaw::DomainError("--depth must be nonnegative");
    const std::vector<cplx> conv =
        qaw::cf_convergents(cfg.params, pt, f.depth, cfg.cf);
    json doc = base_doc("table convergents", cfg);
    doc["point"] = point_json(pt);
    json rows = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (std::size_t k = 0; k < conv.size(); ++k) {
        const double delta = k ? std::abs(conv[k] - conv[k - 1]) : 0.0;
        rows.push_back(json{{"depth", k},
                            {"value", qaw::to_json(conv[k])},
                            {"abs_delta", delta}});
        csv_rows.push_back({std::to_string(k),
                            qaw::format_double(conv[k].real()),
                            qaw::format_double(conv[k].imag()),
                            qaw::format_double(delta)});
    }
    doc["rows"] = std::move(rows);
    emit_table(cfg, doc, {"depth", "value_re", "value_im", "abs_delta"},
               csv_rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "associated q-orthogonal-polynomial kernel: series, recurrence "
        "solutions, continued fractions, and the orthogonality measure"};
    app.require_subcommand(1);
    Flags f;

    CLI::App* eval = app.add_subcommand("eval", "evaluate a single quantity");
    eval->require_subcommand(1);
    CLI::App* everify =
        app.add_subcommand("verify", "run seeded identity suites");
    CLI::App* table = app.add_subcommand("table", "tabulate bulk data");
    table->require_subcommand(1);

    CLI::App* e_phi = eval->add_subcommand(
        "phi", "terminating basic hypergeometric polynomial representation");
    CLI::App* e_w =
        eval->add_subcommand("W", "very-well-poised series at the weight "
                                  "denominator parameters");
    CLI::App* e_sol =
        eval->add_subcommand("solution", "one of the six explicit recurrence "
                                         "solutions");
    CLI::App* e_poly = eval->add_subcommand(
        "polynomial", "recurrence-generated polynomial value");
    CLI::App* e_cf = eval->add_subcommand(
        "cf", "continued fraction / Stieltjes transform off the spectrum");
    CLI::App* e_weight =
        eval->add_subcommand("weight", "orthogonality weight density");

    CLI::App* t_weight = table->add_subcommand("weight", "weight on a grid");
    CLI::App* t_coeff =
        table->add_subcommand("coefficients", "recurrence coefficients");
    CLI::App* t_conv =
        table->add_subcommand("convergents", "continued-fraction convergents");

    for (CLI::App* cmd : {e_phi, e_w, e_sol, e_poly, e_cf, e_weight, everify,
                          t_weight, t_coeff, t_conv})
        add_common(cmd, f);

    for (CLI::App* cmd : {e_phi, e_sol, e_poly, t_coeff})
        cmd->add_option("--n", f.n, "index n")
            ->each([&f](const std::string&) { f.n_given = true; });
    for (CLI::App* cmd : {e_phi, e_w, e_sol, e_poly, e_cf, t_conv}) {
        cmd->add_option("--z-re", f.z_re, "Re(z) of the spectral point");
        cmd->add_option("--z-im", f.z_im, "Im(z) of the spectral point");
    }
    e_weight->add_option("--x", f.x, "point in (-1, 1)");
    e_sol->add_option("--solution", f.solution, "S1..S6");
    e_sol->add_flag("--reciprocal", f.reciprocal,
                    "evaluate at 1/u instead of u");
    e_cf->add_option("--method", f.method,
                     "direct | pincherle | closed-s4 | closed-s6")
        ->check(CLI::IsMember({"direct", "pincherle", "closed-s4",
                               "closed-s6"}));
    everify->add_option("suite", f.suite,
                        "contiguous | solutions | pincherle | wronskian | "
                        "dougall | orthogonality | all")
        ->check(CLI::IsMember({"contiguous", "solutions", "pincherle",
                               "wronskian", "dougall", "orthogonality",
                               "all"}));
    t_weight->add_option("--grid-n", f.grid_n, "number of grid nodes");
    t_conv->add_option("--depth", f.depth, "maximum convergent depth");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (e_phi->parsed()) return cmd_eval_phi(f);
        if (e_w->parsed()) return cmd_eval_w(f);
        if (e_sol->parsed()) return cmd_eval_solution(f);
        if (e_poly->parsed()) return cmd_eval_polynomial(f);
        if (e_cf->parsed()) return cmd_eval_cf(f);
        if (e_weight->parsed()) return cmd_eval_weight(f);
        if (everify->parsed()) return cmd_verify(f);
        if (t_weight->parsed()) return cmd_table_weight(f);
        if (t_coeff->parsed()) return cmd_table_coefficients(f);
        if (t_conv->parsed()) return cmd_table_convergents(f);
    } catch (const qaw::NonConvergenceError& e) {
        emit_error("NonConvergenceError", e.what());
        return 3;
    } catch (const qaw::SpectrumError& e) {
        emit_error("SpectrumError", e.what());
        return 3;
    } catch (const qaw::PoleError& e) {
        emit_error("PoleError", e.what());
        return 2;
    } catch (const qaw::GuardError& e) {
        emit_error("GuardError", e.what());
        return 2;
    } catch (const qaw::DegenerateError& e) {
        emit_error("DegenerateError", e.what());
        return 2;
    } catch (const qaw::DivisionByZeroError& e) {
        emit_error("DivisionByZeroError", e.what());
        return 2;
    } catch (const qaw::DomainError& e) {
        emit_error("DomainError", e.what());
        return 2;
    } catch (const qaw::Error& e) {
        emit_error("Error", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("InternalError", e.what());
        return 2;
    }
    return 2;  // unreachable: a subcommand was required
}
