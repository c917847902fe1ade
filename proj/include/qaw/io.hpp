#ifndef QAW_IO_HPP
#define QAW_IO_HPP

// JSON (de)serialization for configuration and result types, plus the fixed
// numeric text format shared by the CSV emitters.  Header-only; uses the
// vendored nlohmann/json.

#include <cstdio>
#include <string>

#include "json.hpp"
#include "qaw/config.hpp"
#include "qaw/errors.hpp"
#include "qaw/parameters.hpp"
#include "qaw/types.hpp"
#include "qaw/verify.hpp"

namespace qaw {

using json = nlohmann::ordered_json;

// All floating-point text output goes through this: 17 significant digits
// round-trip doubles exactly.
inline std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline json to_json(cplx v) { return json::array({v.real(), v.imag()}); }

inline cplx cplx_from_json(const json& j, const std::string& key) {
    if (j.is_number()) return cplx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return cplx(j[0].get<double>(), j[1].get<double>());
    throw DomainError("config: field '" + key +
                      "' must be a number or a [re, im] pair");
}

inline json to_json(const QParameters& p) {
    return json{{"q", to_json(p.q)},         {"alpha", to_json(p.alpha)},
                {"beta", to_json(p.beta)},   {"gamma", to_json(p.gamma)},
                {"delta", to_json(p.delta)}, {"epsilon", to_json(p.epsilon)}};
}

inline json to_json(const SeriesValue& v) {
    return json{{"value", to_json(v.value)},
                {"terms_used", v.terms_used},
                {"converged", v.converged},
                {"tail_estimate", v.tail_estimate}};
}

inline json to_json(const CheckResult& c) {
    return json{{"name", c.name},
                {"detail", c.detail},
                {"residual", c.residual},
                {"threshold", c.threshold},
                {"pass", c.pass}};
}

inline json to_json(const SuiteReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) checks.push_back(to_json(c));
    return json{{"suite", r.suite},
                {"seed", r.seed},
                {"passed", r.passed},
                {"checks", std::move(checks)}};
}

namespace detail {

inline void require_keys(const json& j, std::initializer_list<const char*> ok,
                         const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : ok) known = known || it.key() == k;
        if (!known)
            throw DomainError("config: unknown key '" + it.key() + "' in " +
                              where);
    }
}

}  // namespace detail

inline QParameters params_from_json(const json& j, QParameters base) {
    if (!j.is_object()) throw DomainError("config: 'params' must be an object");
    detail::require_keys(j, {"q", "alpha", "beta", "gamma", "delta", "epsilon"},
                         "params");
    if (j.contains("q")) base.q = cplx_from_json(j["q"], "q");
    if (j.contains("alpha")) base.alpha = cplx_from_json(j["alpha"], "alpha");
    if (j.contains("beta")) base.beta = cplx_from_json(j["beta"], "beta");
    if (j.contains("gamma")) base.gamma = cplx_from_json(j["gamma"], "gamma");
    if (j.contains("delta")) base.delta = cplx_from_json(j["delta"], "delta");
    if (j.contains("epsilon"))
        base.epsilon = cplx_from_json(j["epsilon"], "epsilon");
    return base;
}

inline RunConfig config_from_json(const json& j) {
    RunConfig cfg;
    if (!j.is_object()) throw DomainError("config: top level must be an object");
    detail::require_keys(
        j, {"params", "tolerance", "cf", "format", "seed", "serial"},
        "the top-level object");
    if (j.contains("params")) cfg.params = params_from_json(j["params"], cfg.params);
    if (j.contains("tolerance")) {
        const json& t = j["tolerance"];
        if (!t.is_object())
            throw DomainError("config: 'tolerance' must be an object");
        detail::require_keys(t, {"rel_tol", "max_terms", "tail_window"},
                             "tolerance");
        if (t.contains("rel_tol"))
            cfg.tolerance.rel_tol = t["rel_tol"].get<double>();
        if (t.contains("max_terms"))
            cfg.tolerance.max_terms = t["max_terms"].get<int>();
        if (t.contains("tail_window"))
            cfg.tolerance.tail_window = t["tail_window"].get<int>();
    }
    if (j.contains("cf")) {
        const json& t = j["cf"];
        if (!t.is_object()) throw DomainError("config: 'cf' must be an object");
        detail::require_keys(t, {"tiny_guard", "rel_tol", "max_depth"}, "cf");
        if (t.contains("tiny_guard"))
            cfg.cf.tiny_guard = t["tiny_guard"].get<double>();
        if (t.contains("rel_tol")) cfg.cf.rel_tol = t["rel_tol"].get<double>();
        if (t.contains("max_depth"))
            cfg.cf.max_depth = t["max_depth"].get<int>();
    }
    if (j.contains("format")) {
        cfg.output_format = j["format"].get<std::string>();
        if (cfg.output_format != "json" && cfg.output_format != "csv")
            throw DomainError("config: 'format' must be json or csv");
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("serial")) cfg.serial = j["serial"].get<bool>();
    return cfg;
}

}  // namespace qaw

#endif
