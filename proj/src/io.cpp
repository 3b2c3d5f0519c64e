#include "dunkl/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace dunkl {
namespace {

json number(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

json numbers(const std::vector<double>& xs) {
    json out = json::array();
    for (double x : xs) out.push_back(number(x));
    return out;
}

json params_json(const CoeffMatrix& m) {
    if (const auto* t = std::get_if<TParams>(&m.params))
        return {{"sigma", t->sigma()}, {"u", t->u()}, {"s", t->s()}, {"odd_sector", t->odd_sector()}};
    const auto& p = std::get<MixedParams>(m.params);
    return {{"sigma", p.sigma()}, {"tau", p.tau()}, {"theta", p.theta()}, {"s", p.s()},
            {"v", p.v()},         {"case", to_string(p.case_tag())}};
}

}  // namespace

std::string format_double(double x) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

json to_json(const CoeffMatrix& m) {
    json rows = json::array();
    for (int k = 0; k < m.order; ++k) {
        json row = json::array();
        for (int l = 0; l < m.order; ++l) row.push_back(number(m.at(k, l)));
        rows.push_back(std::move(row));
    }
    return {{"family", to_string(m.family)},
            {"method", to_string(m.method)},
            {"order", m.order},
            {"params", params_json(m)},
            {"entries", std::move(rows)}};
}

json to_json(const FitReport& r) {
    return {{"constant", r.constant_name}, {"value", number(r.fitted_value)}, {"window", {r.window_lo, r.window_hi}},
            {"residual", number(r.residual)}, {"samples", r.samples}};
}

json to_json(const RegionReport& r) {
    json clauses = json::array();
    for (const auto& c : r.clauses)
        clauses.push_back({{"antecedent", c.antecedent},
                           {"consequent", c.consequent},
                           {"applies", c.applies},
                           {"satisfied", c.satisfied},
                           {"margin", number(c.margin)}});
    return {{"region", to_string(r.region)}, {"member", r.member}, {"clauses", std::move(clauses)}};
}

json to_json(const VHypotheses& h) { return {{"ok", h.ok}, {"case", h.case_tag}, {"violated", h.violated}}; }

json to_json(const OperatorSpec& spec) {
    json j = {{"kind", to_string(spec.kind)}, {"N", spec.order}, {"s", spec.s}};
    switch (spec.kind) {
        case OperatorKind::U: j.update({{"sigma", spec.sigma}, {"u", spec.u}, {"xi", spec.xi}}); break;
        case OperatorKind::V:
            j.update({{"sigma", spec.sigma}, {"tau", spec.tau}, {"theta", spec.theta}, {"u", spec.u},
                      {"xi", spec.xi}, {"eta", spec.eta}});
            break;
        case OperatorKind::P:
            j.update({{"c1", spec.c1}, {"c2", spec.c2}, {"a", spec.a}, {"sigma", spec.even_exponent()},
                      {"u", spec.u}, {"xi", spec.xi}, {"shift", spec.shift_even}});
            break;
        case OperatorKind::Q:
            j.update({{"d1", spec.d1}, {"d2", spec.d2}, {"b", spec.b}, {"tau", spec.odd_exponent()},
                      {"u", spec.u}, {"xi", spec.xi}, {"shift", spec.shift_odd}});
            break;
        case OperatorKind::W:
            j.update({{"c1", spec.c1}, {"c2", spec.c2}, {"d1", spec.d1}, {"d2", spec.d2}, {"a", spec.a},
                      {"b", spec.b}, {"sigma", spec.even_exponent()}, {"tau", spec.odd_exponent()},
                      {"theta", spec.theta}, {"u", spec.u}, {"xi", spec.xi}, {"eta", spec.eta},
                      {"shift_even", spec.shift_even}, {"shift_odd", spec.shift_odd}});
            break;
        case OperatorKind::WittenLen1:
        case OperatorKind::WittenLen2:
            j.update({{"kappa", spec.kappa}, {"u", spec.u}, {"mu", spec.mu}, {"sign", spec.sign}});
            break;
    }
    return j;
}

json to_json(const RitzResult& r) {
    json converged = json::array();
    for (bool c : r.converged) converged.push_back(c);
    return {{"kind", to_string(r.kind)},
            {"N", r.N},
            {"eigenvalues", numbers(r.eigenvalues)},
            {"parity_labels", r.parity_labels},
            {"even_share", numbers(r.even_share)},
            {"convergence", numbers(r.convergence)},
            {"converged", std::move(converged)},
            {"converged_count", r.converged_count()},
            {"sweeps", r.sweeps},
            {"max_residual", number(r.max_residual)}};
}

json to_json(const BoundCheck& c) {
    return {{"name", c.name},       {"passed", c.passed},         {"vacuous", c.vacuous},
            {"checked", c.checked}, {"violations", c.violations}, {"worst_k", c.worst_k},
            {"worst_margin", number(c.worst_margin)}};
}

json to_json(const SandwichReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    return {{"N", r.N},
            {"epsilon", r.epsilon},
            {"unperturbed", r.unperturbed},
            {"scope", r.scope == SandwichScope::reported ? "k<=N/4" : "converged"},
            {"evaluated_count", r.evaluated_count},
            {"converged_count", r.converged_count},
            {"D_hat", number(r.lower_constant)},
            {"C_hat", number(r.form_constant)},
            {"E_hat", number(r.coupling_constant)},
            {"working_D", number(r.working_lower_constant)},
            {"gap_slope", number(r.gap_slope)},
            {"slope_window", {r.slope_lo, r.slope_hi}},
            {"passed", r.passed()},
            {"checks", std::move(checks)}};
}

json to_json(const IndicialRoot& r) {
    return {{"root", number(r.root)}, {"exponent", number(r.exponent)}, {"admissible", r.admissible}};
}

json to_json(const WittenModel& m) {
    json comps = json::array();
    for (const auto& c : m.components)
        comps.push_back({{"name", c.name},
                         {"row", c.row},
                         {"condition", c.condition},
                         {"admissible", c.admissible},
                         {"spec", to_json(c.spec)}});
    return {{"length", m.length}, {"kappa", m.kappa}, {"u", m.u},          {"s", m.s},
            {"mu", m.mu},         {"sign", m.sign},   {"components", comps}};
}

json to_json(const WittenComponentSpectrum& s) {
    json j = {{"name", s.name}, {"row", s.row}, {"status", s.status}};
    if (s.ritz) j["ritz"] = to_json(*s.ritz);
    return j;
}

json to_json(const PairingReport& p) {
    return {{"lower_row", p.lower_row},
            {"middle_row", p.middle_row},
            {"exponent_match", p.exponent_match},
            {"compared", p.compared},
            {"converged_compared", p.converged_compared},
            {"max_mismatch", number(p.max_mismatch)},
            {"max_converged_mismatch", number(p.max_converged_mismatch)},
            {"worst_k", p.worst_k}};
}

json envelope(const std::string& command, const ParamList& params, json result) {
    json p = json::object();
    for (const auto& [k, v] : params) p[k] = v;
    return {{"schema", json_schema_version}, {"command", command}, {"params", std::move(p)},
            {"result", std::move(result)}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string csv_header(const ParamList& params) {
    std::ostringstream out;
    out << "# schema=" << json_schema_version << "\n";
    for (const auto& [k, v] : params) out << "# " << k << "=" << v << "\n";
    return out.str();
}

std::string coeff_csv(const CoeffMatrix& m, const ParamList& params) {
    std::ostringstream out;
    out << csv_header(params);
    const auto given = [&](const char* key) {
        for (const auto& [k, v] : params)
            if (k == key) return true;
        return false;
    };
    if (!given("family")) out << "# family=" << to_string(m.family) << "\n";
    if (!given("method")) out << "# method=" << to_string(m.method) << "\n";
    out << "k,l,value\n";
    for (int k = 0; k < m.order; ++k)
        for (int l = 0; l < m.order; ++l) out << k << "," << l << "," << format_double(m.at(k, l)) << "\n";
    return out.str();
}

std::string spectrum_csv(const RitzResult& r, const OperatorSpec& spec, const ParamList& params) {
    std::ostringstream out;
    out << csv_header(params) << "k,lambda_k,gap,converged\n";
    for (std::size_t k = 0; k < r.eigenvalues.size(); ++k) {
        const double gap = r.eigenvalues[k] - unperturbed_eigenvalue(spec, static_cast<int>(k));
        const char* conv = k < r.converged.size() ? (r.converged[k] ? "1" : "0") : "";
        out << k << "," << format_double(r.eigenvalues[k]) << "," << format_double(gap) << "," << conv << "\n";
    }
    return out.str();
}

}  // namespace dunkl
