#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "dunkl/coeffs.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/fits.hpp"
#include "dunkl/io.hpp"
#include "dunkl/regions.hpp"
#include "dunkl/spectra.hpp"

namespace {

using namespace dunkl;

enum Exit { ok = 0, verification_failed = 1, domain_error = 2, non_convergence = 3, hypothesis_failure = 4 };

// key=value arguments of one command. Keys outside the command's list are
// rejected before anything is computed.
class Params {
public:
    Params(const std::vector<std::string>& args, const std::set<std::string>& allowed) {
        for (const auto& arg : args) {
            const auto eq = arg.find('=');
            if (eq == std::string::npos || eq == 0) throw DomainError("expected key=value, got '" + arg + "'");
            const std::string key = arg.substr(0, eq);
            if (!allowed.count(key)) throw DomainError("unknown key '" + key + "'");
            if (!values_.emplace(key, arg.substr(eq + 1)).second) throw DomainError("duplicate key '" + key + "'");
        }
    }

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string text(const std::string& key, const std::string& fallback) const {
        const auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    std::string text(const std::string& key) const {
        if (!has(key)) throw DomainError("missing key '" + key + "'");
        return values_.at(key);
    }

    double number(const std::string& key, std::optional<double> fallback = std::nullopt) const {
        if (!has(key)) {
            if (!fallback) throw DomainError("missing key '" + key + "'");
            return *fallback;
        }
        const std::string& v = values_.at(key);
        double x = 0.0;
        const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
        if (res.ec != std::errc() || res.ptr != v.data() + v.size())
            throw DomainError("key '" + key + "' needs a number, got '" + v + "'");
        return x;
    }

    long integer(const std::string& key, std::optional<long> fallback = std::nullopt) const {
        if (!has(key)) {
            if (!fallback) throw DomainError("missing key '" + key + "'");
            return *fallback;
        }
        const std::string& v = values_.at(key);
        long x = 0;
        const auto res = std::from_chars(v.data(), v.data() + v.size(), x);
        if (res.ec != std::errc() || res.ptr != v.data() + v.size())
            throw DomainError("key '" + key + "' needs an integer, got '" + v + "'");
        return x;
    }

    // Sorted key order keeps the echoed parameters byte-stable.
    ParamList list() const { return {values_.begin(), values_.end()}; }

private:
    std::map<std::string, std::string> values_;
};

const std::set<std::string> output_keys{"format", "out", "seed"};

std::set<std::string> keys(std::initializer_list<std::string> own) {
    std::set<std::string> all(own);
    all.insert(output_keys.begin(), output_keys.end());
    return all;
}

struct Output {
    json result;
    std::optional<std::string> csv;  // set when the command has a CSV form
};

int order_of(const Params& p, long fallback) {
    const long n = p.integer("N", fallback);
    if (n < 1 || n > 4096) throw DomainError("N must lie in [1, 4096]");
    return static_cast<int>(n);
}

std::uint64_t seed_of(const Params& p) {
    const long seed = p.integer("seed", static_cast<long>(default_fit_seed));
    if (seed < 0) throw DomainError("seed must be non-negative");
    return static_cast<std::uint64_t>(seed);
}

Method method_from(const std::string& name) {
    if (name == "closed") return Method::closed_form;
    if (name == "recursion") return Method::recursion;
    if (name == "quadrature") return Method::quadrature;
    throw DomainError("method must be closed, recursion or quadrature");
}

Output run_coeffs(const Params& p) {
    const std::string family = p.text("family");
    const Method method = method_from(p.text("method", "closed"));
    const int n = order_of(p, 64);
    const double s = p.number("s", 1.0);
    std::optional<CoeffMatrix> m;
    if (family == "c" || family == "d") {
        const TParams t(p.number("sigma"), p.number("u"), s);
        switch (method) {
            case Method::closed_form: m = t_matrix_closed(t, n); break;
            case Method::recursion: m = t_matrix_recursive(t, n); break;
            case Method::quadrature: m = t_matrix_quadrature(t, n); break;
        }
        if (family == "d") m = normalized(*m);
    } else if (family == "chat" || family == "cprime") {
        const MixedParams mp(p.number("sigma"), p.number("tau"), p.number("theta"), s);
        if (method == Method::recursion) throw DomainError("mixed families have no recursion route");
        const bool closed = method == Method::closed_form;
        if (family == "chat")
            m = closed ? chat_matrix_closed(mp, n) : chat_matrix_quadrature(mp, n);
        else
            m = closed ? cprime_matrix_closed(mp, n) : cprime_matrix_quadrature(mp, n);
    } else {
        throw DomainError("family must be c, d, chat or cprime");
    }
    return {to_json(*m), coeff_csv(*m, p.list())};
}

OperatorSpec operator_spec(const Params& p) {
    OperatorSpec spec;
    spec.kind = operator_kind_from_string(p.text("kind"));
    if (spec.kind == OperatorKind::WittenLen1 || spec.kind == OperatorKind::WittenLen2)
        throw DomainError("Witten models go through the witten command");
    spec.order = order_of(p, 256);
    spec.sigma = p.number("sigma", 0.0);
    spec.tau = p.number("tau", 0.0);
    spec.theta = p.number("theta", 0.0);
    spec.u = p.number("u", 0.5);
    spec.xi = p.number("xi", 0.0);
    spec.eta = p.number("eta", 0.0);
    spec.s = p.number("s", 1.0);
    spec.c1 = p.number("c1", 0.0);
    spec.c2 = p.number("c2", 0.0);
    spec.d1 = p.number("d1", 0.0);
    spec.d2 = p.number("d2", 0.0);
    spec.a = p.number("a", 0.0);
    spec.b = p.number("b", 0.0);
    spec.shift_even = p.number("shift_even", 0.0);
    spec.shift_odd = p.number("shift_odd", 0.0);
    return spec;
}

Output run_spectrum(const Params& p) {
    const OperatorSpec spec = operator_spec(p);
    const double epsilon = p.number("epsilon", 0.1);
    const long trials = p.integer("trials", default_form_trials);
    if (trials < 1) throw DomainError("trials must be positive");
    const std::string scope_name = p.text("scope", "reported");
    if (scope_name != "reported" && scope_name != "converged") throw DomainError("scope must be reported or converged");
    const SandwichScope scope = scope_name == "reported" ? SandwichScope::reported : SandwichScope::converged;
    validate(spec);

    const RitzResult ritz = ritz_spectrum(spec, {spec.order}).front();
    json result = {{"spec", to_json(spec)}, {"ritz", to_json(ritz)}};
    if (spec.kind == OperatorKind::U)
        result["sandwich"] = to_json(sandwich_check_U(spec, ritz, epsilon, scope, static_cast<int>(trials), seed_of(p)));
    else if (spec.kind == OperatorKind::V)
        result["sandwich"] = to_json(sandwich_check_V(spec, ritz, epsilon, scope, static_cast<int>(trials), seed_of(p)));
    return {std::move(result), spectrum_csv(ritz, spec, p.list())};
}

Output run_bounds(const Params& p) {
    const std::string constant = p.text("constant");
    const double s = p.number("s", 1.0);
    FitReport report;
    if (constant == "D") {
        report = fit_lower_constant(TParams(p.number("sigma"), p.number("u"), s), static_cast<int>(p.integer("K", 200)));
    } else if (constant == "C") {
        report = fit_form_bound(TParams(p.number("sigma"), p.number("u"), s), p.number("epsilon", 0.1),
                                static_cast<int>(p.integer("trials", default_form_trials)), order_of(p, 64),
                                seed_of(p));
    } else if (constant == "E") {
        report = fit_tprime_bound(MixedParams(p.number("sigma"), p.number("tau"), p.number("theta"), s),
                                  p.number("u"), p.number("epsilon", 0.1),
                                  static_cast<int>(p.integer("trials", default_form_trials)), order_of(p, 64),
                                  seed_of(p));
    } else if (constant == "omega") {
        const std::string family = p.text("family", "d");
        const int n = order_of(p, 128);
        if (family == "d") {
            report = fit_decay_exponent(normalized(t_matrix_closed(TParams(p.number("sigma"), p.number("u"), s), n)));
        } else if (family == "cprime") {
            const MixedParams mp(p.number("sigma"), p.number("tau"), p.number("theta"), s);
            report = fit_decay_exponent(cprime_matrix_closed(mp, n));
        } else {
            throw DomainError("omega fits take family=d or family=cprime");
        }
    } else if (constant == "C0") {
        report = fit_weierstrass_constant(p.number("t"), static_cast<int>(p.integer("pmax", 100000)));
    } else if (constant == "C1") {
        report = fit_gautschi_constant(p.number("t"), static_cast<int>(p.integer("pmax", 100000)));
    } else {
        throw DomainError("constant must be D, C, E, omega, C0 or C1");
    }
    return {to_json(report), std::nullopt};
}

Output run_regions(const Params& p) {
    const std::string set = p.text("set");
    if (set == "V") {
        const VHypotheses h = theorem_v_hypotheses(p.number("sigma"), p.number("tau"), p.number("theta"), p.number("u"));
        return {to_json(h), std::nullopt};
    }
    const RegionId id = region_from_string(set);
    std::vector<double> point;
    for (const auto& var : region_variables(id)) point.push_back(p.number(var));
    return {to_json(region_report(id, point)), std::nullopt};
}

Output run_witten(const Params& p) {
    OperatorSpec spec;
    const long length = p.integer("length", 2);
    if (length != 1 && length != 2) throw DomainError("length must be 1 or 2");
    spec.kind = length == 1 ? OperatorKind::WittenLen1 : OperatorKind::WittenLen2;
    spec.order = order_of(p, 256);
    spec.kappa = p.number("kappa");
    spec.u = p.number("u", 0.5);
    spec.s = p.number("s", 1.0);
    spec.mu = p.number("mu", length == 1 ? 0.0 : 1.0);
    const long sign = p.integer("sign", 1);
    if (sign != 1 && sign != -1) throw DomainError("sign must be 1 or -1");
    spec.sign = static_cast<int>(sign);

    const WittenModel model = witten_build(spec);
    const auto spectra = witten_spectrum(model, spec.order);
    json comps = json::array();
    for (const auto& c : spectra) comps.push_back(to_json(c));
    json result = {{"model", to_json(model)}, {"spectra", std::move(comps)}};
    if (length == 2) {
        json pairs = json::array();
        for (const auto& r : witten_pairing(spectra)) pairs.push_back(to_json(r));
        result["pairing"] = std::move(pairs);
    }
    return {std::move(result), std::nullopt};
}

std::vector<int> criterion_list(const std::string& text) {
    std::vector<int> ids;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int id = 0;
        const auto res = std::from_chars(item.data(), item.data() + item.size(), id);
        if (res.ec != std::errc() || res.ptr != item.data() + item.size() || id < 1 ||
            id > acceptance::criterion_count)
            throw DomainError("only= takes criterion numbers 1.." + std::to_string(acceptance::criterion_count));
        ids.push_back(id);
    }
    return ids;
}

Output run_verify_all(const Params& p, bool& all_passed) {
    const auto results = acceptance::run(criterion_list(p.text("only", "")), &std::cerr);
    json rows = json::array();
    int passed = 0;
    for (const auto& r : results) {
        passed += r.passed;
        rows.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
    all_passed = passed == static_cast<int>(results.size());
    return {{{"criteria", std::move(rows)}, {"passed", passed}, {"total", results.size()}}, std::nullopt};
}

void emit(const std::string& command, const Params& p, const Output& out) {
    const std::string format = p.text("format", "json");
    std::string body;
    if (format == "json") {
        body = dump_json(envelope(command, p.list(), out.result));
    } else if (format == "csv") {
        if (!out.csv) throw DomainError(command + " has no CSV form");
        body = *out.csv;
    } else {
        throw DomainError("format must be json or csv");
    }

    std::filesystem::path path;
    if (p.has("out")) {
        path = p.text("out");
    } else if (const char* dir = std::getenv("DUNKL_OUTPUT_DIR"); dir && *dir) {
        path = std::filesystem::path(dir) / (command + "." + format);
    }
    if (path.empty()) {
        std::cout << body;
        return;
    }
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    if (!(file << body)) throw std::runtime_error("cannot write " + path.string());
    std::cerr << "wrote " << path.string() << "\n";
}

int dispatch(const std::string& command, const std::vector<std::string>& args) {
    static const std::map<std::string, std::set<std::string>> allowed{
        {"coeffs", keys({"family", "method", "sigma", "tau", "theta", "u", "s", "N"})},
        {"spectrum", keys({"kind", "N", "sigma", "tau", "theta", "u", "xi", "eta", "s", "c1", "c2", "d1", "d2", "a",
                           "b", "shift_even", "shift_odd", "epsilon", "trials", "scope"})},
        {"bounds", keys({"constant", "family", "sigma", "tau", "theta", "u", "s", "N", "K", "epsilon", "trials", "t",
                         "pmax"})},
        {"regions", keys({"set", "sigma", "tau", "theta", "alpha", "beta", "gamma", "delta", "u"})},
        {"witten", keys({"length", "kappa", "u", "s", "mu", "sign", "N"})},
        {"verify-all", keys({"only"})},
    };
    const Params p(args, allowed.at(command));
    bool passed = true;
    Output out;
    if (command == "coeffs") out = run_coeffs(p);
    else if (command == "spectrum") out = run_spectrum(p);
    else if (command == "bounds") out = run_bounds(p);
    else if (command == "regions") out = run_regions(p);
    else if (command == "witten") out = run_witten(p);
    else out = run_verify_all(p, passed);
    emit(command, p, out);
    return passed ? ok : verification_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dunkl oscillator perturbations: coefficient tables, spectra, bounds and Witten models"};
    app.require_subcommand(1);
    std::vector<std::string> args;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"coeffs", "coefficient matrix (family=c|d|chat|cprime method=closed|recursion|quadrature)"},
        {"spectrum", "Ritz spectrum and sandwich report (kind=U|V|P|Q|W)"},
        {"bounds", "fitted constant (constant=D|C|E|omega|C0|C1)"},
        {"regions", "parameter-region membership (set=J1..S2, or set=V for the coupled-operator hypotheses)"},
        {"witten", "Witten model components and spectra (length=1|2)"},
        {"verify-all", "run the acceptance criteria (only=1,2,...)"},
    };
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("params", args, "key=value pairs");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return domain_error;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        return dispatch(command, args);
    } catch (const HypothesisFailure& e) {
        std::cerr << "hypothesis failure: " << e.what() << "\n";
        for (const auto& clause : e.clauses()) std::cerr << "  violated: " << clause << "\n";
        return hypothesis_failure;
    } catch (const NonConvergence& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return non_convergence;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return domain_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return domain_error;
    }
}
