#include "dunkl/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "dunkl/basis.hpp"
#include "dunkl/coeffs.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/regions.hpp"

namespace dunkl {
namespace {

bool is_half_line(OperatorKind kind) { return kind == OperatorKind::P || kind == OperatorKind::Q; }

bool is_coupled(OperatorKind kind) { return kind == OperatorKind::V || kind == OperatorKind::W; }

double indicial_residual_p(double a, double c1, double c2) { return a * a + (2.0 * c1 - 1.0) * a - c2; }
double indicial_residual_q(double b, double d1, double d2) { return b * b + (2.0 * d1 + 1.0) * b - d2; }

void require_root(double residual, double root, double coef2, const char* what) {
    const double scale = std::max({1.0, root * root, std::fabs(coef2)});
    if (std::fabs(residual) > 1e-10 * scale)
        throw DomainError(std::string(what) + ": exponent is not a root of its indicial equation");
}

void require_exponent(double exponent, double bound, const char* what) {
    if (!(exponent > bound))
        throw DomainError(std::string(what) + ": basis exponent " + std::to_string(exponent) + " must exceed " +
                          std::to_string(bound));
}

// Matrix over the full-line indices `index`, each in the basis of its own
// parity, with diagonal (2k+1+2 varsigma_k)s + shift + xi c and, for coupled
// kinds, eta c' across parities.
Matrix build(const OperatorSpec& spec) {
    validate(spec);
    const int n = spec.order;
    std::vector<int> index(n);
    for (int i = 0; i < n; ++i) index[i] = global_index(spec, i);
    const int top = index.back() + 1;

    const double even_exp = spec.even_exponent();
    const double odd_exp = spec.odd_exponent();
    std::optional<CoeffMatrix> c_even, c_odd;
    if (spec.xi != 0.0) {
        if (spec.kind != OperatorKind::Q) c_even = t_matrix_closed(TParams(even_exp, spec.u, spec.s), top);
        if (spec.kind != OperatorKind::P) {
            if (spec.kind == OperatorKind::U)
                c_odd = c_even;
            else
                c_odd = t_matrix_closed(TParams(odd_exp, spec.u, spec.s), top);
        }
    }
    std::optional<CoeffMatrix> coupling;
    if (is_coupled(spec.kind) && spec.eta != 0.0)
        coupling = cprime_matrix_closed(MixedParams(even_exp, odd_exp, spec.theta, spec.s), top);

    Matrix m(n);
    for (int i = 0; i < n; ++i) {
        const int k = index[i];
        const bool even = k % 2 == 0;
        m(i, i) = unperturbed_eigenvalue(spec, i);
        for (int j = 0; j < n; ++j) {
            const int l = index[j];
            if ((k + l) % 2 == 0) {
                const auto& c = even ? c_even : c_odd;
                if (c) m(i, j) += spec.xi * c->at(k, l);
            } else if (coupling) {
                m(i, j) = spec.eta * (even ? coupling->at(k, l) : coupling->at(l, k));
            }
        }
    }
    return m;
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    const double n = static_cast<double>(xs.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    return sxy / sxx;
}

// Accumulates one inequality over many k.
class CheckBuilder {
public:
    explicit CheckBuilder(std::string name) { check_.name = std::move(name); }

    // margin >= -slack passes.
    void add(int k, double margin, double slack = 0.0) {
        ++check_.checked;
        if (check_.worst_k < 0 || margin < check_.worst_margin) {
            check_.worst_margin = margin;
            check_.worst_k = k;
        }
        if (!(margin >= -slack)) ++check_.violations;
    }
    void strict(int k, double margin) {
        ++check_.checked;
        if (check_.worst_k < 0 || margin < check_.worst_margin) {
            check_.worst_margin = margin;
            check_.worst_k = k;
        }
        if (!(margin > 0.0)) ++check_.violations;
    }
    BoundCheck done() {
        check_.passed = check_.violations == 0 && (check_.checked > 0 || check_.vacuous);
        return check_;
    }
    BoundCheck vacuous() {
        check_.vacuous = true;
        check_.passed = true;
        return check_;
    }
    BoundCheck failed() {
        check_.passed = false;
        return check_;
    }

private:
    BoundCheck check_;
};

constexpr double upper_slack = 1e-12;

struct Sample {
    int k;
    double lambda;
    double varsigma;
};

// min over admitted k <= kmax of c_kk (k+1)^u s^-u in the basis of varsigma.
double lower_constant_for(double varsigma, double u, double s, int parity, int kmax) {
    const TParams params(varsigma, u, s);
    const CoeffMatrix c = t_matrix_closed(params, kmax + 1);
    double best = std::numeric_limits<double>::infinity();
    for (int k = parity; k <= kmax; k += 2)
        if (params.admits(k)) best = std::min(best, c.at(k, k) * std::pow(k + 1.0, u) * std::pow(s, -u));
    return best;
}

void fill_checks(SandwichReport& report, const std::vector<Sample>& samples, const OperatorSpec& spec,
                 double upper_eps_rate, double upper_const, const std::string& prefix, bool with_slope) {
    CheckBuilder above(prefix + "(i) strictly above unperturbed");
    CheckBuilder lower(prefix + "(ii) lower bound");
    CheckBuilder upper(prefix + "(iii) upper bound");
    const double su = std::pow(spec.s, spec.u);
    std::vector<double> xs, ys;
    for (const Sample& p : samples) {
        const double base = (2.0 * p.k + 1.0 + 2.0 * p.varsigma) * spec.s;
        const double gap = p.lambda - base;
        if (!report.unperturbed) {
            above.strict(p.k, gap);
            lower.add(p.k, gap - spec.xi * report.lower_constant * su * std::pow(p.k + 1.0, -spec.u));
            if (gap > 0.0)
                report.working_lower_constant =
                    std::min(report.working_lower_constant, gap * std::pow(p.k + 1.0, spec.u) / (spec.xi * su));
            else
                report.working_lower_constant = std::min(report.working_lower_constant, 0.0);
            if (with_slope && p.k >= 16 && gap > 0.0) {
                xs.push_back(std::log(p.k + 1.0));
                ys.push_back(std::log(gap));
            }
        }
        const double bound = (2.0 * p.k + 1.0 + 2.0 * p.varsigma) * (spec.s + upper_eps_rate) + upper_const;
        upper.add(p.k, bound - p.lambda, upper_slack * std::fabs(bound));
    }
    if (report.unperturbed) {
        report.checks.push_back(above.vacuous());
        report.checks.push_back(lower.vacuous());
    } else {
        report.checks.push_back(above.done());
        report.checks.push_back(lower.done());
    }
    report.checks.push_back(upper.done());
    if (!with_slope) return;
    CheckBuilder slope(prefix + "(iv) gap decay slope");
    if (report.unperturbed) {
        report.checks.push_back(slope.vacuous());
        return;
    }
    if (xs.size() < 3) {
        report.checks.push_back(slope.failed());
        return;
    }
    report.gap_slope = least_squares_slope(xs, ys);
    report.slope_lo = static_cast<int>(std::lround(std::exp(xs.front()) - 1.0));
    report.slope_hi = static_cast<int>(std::lround(std::exp(xs.back()) - 1.0));
    slope.add(0, 0.15 - std::fabs(report.gap_slope + spec.u));
    report.checks.push_back(slope.done());
}

bool in_scope(const RitzResult& ritz, int k, SandwichScope scope) {
    if (k >= static_cast<int>(ritz.converged.size())) return false;
    return scope == SandwichScope::reported || ritz.converged[k];
}

}  // namespace

std::string to_string(OperatorKind kind) {
    switch (kind) {
        case OperatorKind::U: return "U";
        case OperatorKind::V: return "V";
        case OperatorKind::P: return "P";
        case OperatorKind::Q: return "Q";
        case OperatorKind::W: return "W";
        case OperatorKind::WittenLen1: return "WittenLen1";
        case OperatorKind::WittenLen2: return "WittenLen2";
    }
    return "?";
}

OperatorKind operator_kind_from_string(const std::string& name) {
    for (OperatorKind k : {OperatorKind::U, OperatorKind::V, OperatorKind::P, OperatorKind::Q, OperatorKind::W,
                           OperatorKind::WittenLen1, OperatorKind::WittenLen2})
        if (to_string(k) == name) return k;
    throw DomainError("unknown operator kind '" + name + "'");
}

double OperatorSpec::even_exponent() const {
    switch (kind) {
        case OperatorKind::P:
        case OperatorKind::W: return a + c1;
        default: return sigma;
    }
}

double OperatorSpec::odd_exponent() const {
    switch (kind) {
        case OperatorKind::U: return sigma;
        case OperatorKind::Q:
        case OperatorKind::W: return b + d1;
        default: return tau;
    }
}

int global_index(const OperatorSpec& spec, int i) {
    if (spec.kind == OperatorKind::P) return 2 * i;
    if (spec.kind == OperatorKind::Q) return 2 * i + 1;
    return i;
}

double unperturbed_eigenvalue(const OperatorSpec& spec, int i) {
    const int k = global_index(spec, i);
    const bool even = k % 2 == 0;
    return (2.0 * k + 1.0 + 2.0 * (even ? spec.even_exponent() : spec.odd_exponent())) * spec.s +
           (even ? spec.shift_even : spec.shift_odd);
}

void validate(const OperatorSpec& spec) {
    if (spec.kind == OperatorKind::WittenLen1 || spec.kind == OperatorKind::WittenLen2)
        throw DomainError("Witten kinds are assembled per component; use witten_build");
    if (spec.order < 1 || 2 * spec.order > max_basis_index) throw DomainError("order out of range");
    if (!(spec.s > 0.0)) throw DomainError("s must be positive");
    if (!(spec.xi >= 0.0)) throw DomainError("xi must be nonnegative");
    if (spec.xi > 0.0 && !(spec.u > 0.0 && spec.u < 1.0)) throw DomainError("u must lie in (0,1)");
    const double even_floor = spec.xi > 0.0 ? spec.u - 0.5 : -0.5;
    const double odd_floor = spec.xi > 0.0 ? spec.u - 1.5 : -1.5;
    switch (spec.kind) {
        case OperatorKind::U: require_exponent(spec.sigma, even_floor, "U"); break;
        case OperatorKind::P:
            require_root(indicial_residual_p(spec.a, spec.c1, spec.c2), spec.a, spec.c2, "P");
            require_exponent(spec.even_exponent(), even_floor, "P");
            break;
        case OperatorKind::Q:
            require_root(indicial_residual_q(spec.b, spec.d1, spec.d2), spec.b, spec.d2, "Q");
            require_exponent(spec.odd_exponent(), odd_floor, "Q");
            break;
        case OperatorKind::W:
            require_root(indicial_residual_p(spec.a, spec.c1, spec.c2), spec.a, spec.c2, "W");
            require_root(indicial_residual_q(spec.b, spec.d1, spec.d2), spec.b, spec.d2, "W");
            [[fallthrough]];
        case OperatorKind::V: {
            if (!(spec.u > 0.0 && spec.u < 1.0)) throw DomainError("u must lie in (0,1)");
            const VHypotheses hyp =
                theorem_v_hypotheses(spec.even_exponent(), spec.odd_exponent(), spec.theta, spec.u);
            if (!hyp.ok) throw HypothesisFailure("coupled-operator hypotheses fail", hyp.violated);
            break;
        }
        default: break;
    }
}

Matrix assemble_U(const OperatorSpec& spec) {
    if (spec.kind != OperatorKind::U) throw DomainError("assemble_U needs kind U");
    return build(spec);
}

Matrix assemble_V(const OperatorSpec& spec) {
    if (spec.kind != OperatorKind::V) throw DomainError("assemble_V needs kind V");
    return build(spec);
}

Matrix assemble(const OperatorSpec& spec) { return build(spec); }

int RitzResult::converged_count() const {
    return static_cast<int>(std::count(converged.begin(), converged.end(), true));
}

RitzResult ritz_solve(const OperatorSpec& spec) {
    const EigenResult eig = eigen_sym(assemble(spec));
    RitzResult r;
    r.kind = spec.kind;
    r.N = spec.order;
    r.eigenvalues = eig.values;
    r.sweeps = eig.sweeps;
    r.max_residual = eig.max_residual;
    const int n = spec.order;
    for (int j = 0; j < n; ++j) {
        double even = 0.0, total = 0.0;
        for (int i = 0; i < n; ++i) {
            const double w = eig.vectors(i, j) * eig.vectors(i, j);
            total += w;
            if (global_index(spec, i) % 2 == 0) even += w;
        }
        const double share = even / total;
        r.even_share.push_back(share);
        r.parity_labels.push_back(std::fabs(share - 0.5) <= parity_tie_tol ? "tie" : share > 0.5 ? "even" : "odd");
    }
    return r;
}

std::vector<RitzResult> ritz_spectrum(const OperatorSpec& spec, const std::vector<int>& orders) {
    std::map<int, RitzResult> cache;
    auto solve = [&](int n) -> const RitzResult& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        OperatorSpec at = spec;
        at.order = n;
        return cache.emplace(n, ritz_solve(at)).first->second;
    };
    std::vector<RitzResult> out;
    int previous = 0;
    for (int n : orders) {
        if (n <= previous) throw DomainError("ritz_spectrum: orders must increase");
        previous = n;
        RitzResult r = solve(n);
        if (n >= 2) {
            const RitzResult& half = solve(n / 2);
            const int kmax = std::min(n / 4, n / 2 - 1);
            for (int k = 0; k <= kmax; ++k) {
                const double delta = std::fabs(r.eigenvalues[k] - half.eigenvalues[k]);
                r.convergence.push_back(delta);
                r.converged.push_back(delta <= ritz_converged_tol * std::fabs(r.eigenvalues[k]));
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

bool SandwichReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.passed; });
}

SandwichReport sandwich_check_U(const OperatorSpec& spec, const RitzResult& ritz, double epsilon,
                                SandwichScope scope, int trials, std::uint64_t seed) {
    if (spec.kind != OperatorKind::U) throw DomainError("sandwich_check_U needs kind U");
    validate(spec);
    SandwichReport report;
    report.N = ritz.N;
    report.epsilon = epsilon;
    report.scope = scope;
    report.unperturbed = spec.xi == 0.0;
    report.converged_count = ritz.converged_count();
    report.working_lower_constant = std::numeric_limits<double>::infinity();
    const int kmax = static_cast<int>(ritz.converged.size()) - 1;

    std::vector<Sample> samples;
    for (int k = 0; k <= kmax; ++k)
        if (in_scope(ritz, k, scope)) samples.push_back({k, ritz.eigenvalues[k], spec.sigma});
    report.evaluated_count = static_cast<int>(samples.size());

    double eps_rate = 0.0;
    if (!report.unperturbed) {
        const TParams params(spec.sigma, spec.u, spec.s);
        report.lower_constant = fit_lower_constant(params, std::max(kmax, 1)).fitted_value;
        report.form_constant = fit_form_bound(params, epsilon, trials, ritz.N, seed).fitted_value;
        eps_rate = spec.xi * epsilon * std::pow(spec.s, spec.u);
    } else {
        report.working_lower_constant = 0.0;
    }
    fill_checks(report, samples, spec, eps_rate, spec.xi * report.form_constant * std::pow(spec.s, spec.u), "",
                true);
    return report;
}

SandwichReport sandwich_check_V(const OperatorSpec& spec, const RitzResult& ritz, double epsilon,
                                SandwichScope scope, int trials, std::uint64_t seed) {
    if (!is_coupled(spec.kind)) throw DomainError("sandwich_check_V needs kind V or W");
    validate(spec);
    SandwichReport report;
    report.N = ritz.N;
    report.epsilon = epsilon;
    report.scope = scope;
    report.unperturbed = spec.xi == 0.0;
    report.converged_count = ritz.converged_count();
    report.working_lower_constant = std::numeric_limits<double>::infinity();
    const double sigma = spec.even_exponent(), tau = spec.odd_exponent();
    const int kmax = static_cast<int>(ritz.converged.size()) - 1;

    std::vector<double> groups[2];
    int ties = 0;
    for (std::size_t j = 0; j < ritz.eigenvalues.size(); ++j) {
        if (ritz.parity_labels[j] == "tie") ++ties;
        groups[ritz.even_share[j] >= 0.5 ? 0 : 1].push_back(ritz.eigenvalues[j]);
    }
    CheckBuilder grouping("parity groups");
    grouping.add(0, ties == 0 ? 0.0 : -1.0);
    const int expected_even = (ritz.N + 1) / 2;
    grouping.add(1, static_cast<int>(groups[0].size()) == expected_even ? 0.0 : -1.0);
    report.checks.push_back(grouping.done());

    if (!report.unperturbed) {
        report.lower_constant = std::min(lower_constant_for(sigma, spec.u, spec.s, 0, std::max(kmax, 1)),
                                         lower_constant_for(tau, spec.u, spec.s, 1, std::max(kmax, 1)));
        report.form_constant =
            std::max(fit_form_bound(TParams(sigma, spec.u, spec.s), epsilon, trials, ritz.N, seed).fitted_value,
                     fit_form_bound(TParams(tau, spec.u, spec.s), epsilon, trials, ritz.N, seed).fitted_value);
    } else {
        report.working_lower_constant = 0.0;
    }
    const MixedParams mixed(sigma, tau, spec.theta, spec.s);
    const double coupling_scale = std::pow(spec.s, 0.5 * (1.0 + mixed.v()));
    if (spec.eta != 0.0)
        report.coupling_constant = fit_tprime_bound(mixed, spec.u, epsilon, trials, ritz.N, seed).fitted_value;
    const double su = std::pow(spec.s, spec.u);
    const double eps_rate = epsilon * (spec.xi * su + 2.0 * std::fabs(spec.eta) * coupling_scale);
    const double upper_const =
        spec.xi * report.form_constant * su + 2.0 * std::fabs(spec.eta) * report.coupling_constant * coupling_scale;

    for (int parity = 0; parity < 2; ++parity) {
        std::vector<Sample> samples;
        for (std::size_t j = 0; j < groups[parity].size(); ++j) {
            const int k = 2 * static_cast<int>(j) + parity;
            if (k > kmax) break;
            if (in_scope(ritz, k, scope)) samples.push_back({k, groups[parity][j], parity == 0 ? sigma : tau});
        }
        report.evaluated_count += static_cast<int>(samples.size());
        fill_checks(report, samples, spec, eps_rate, upper_const, parity == 0 ? "even:" : "odd:", false);
    }
    return report;
}

std::vector<IndicialRoot> halfline_reduce(OperatorKind kind, double coef1, double coef2, double u) {
    if (!is_half_line(kind)) throw DomainError("halfline_reduce needs kind P or Q");
    const double linear = kind == OperatorKind::P ? 2.0 * coef1 - 1.0 : 2.0 * coef1 + 1.0;
    const double disc = linear * linear + 4.0 * coef2;
    if (disc < 0.0) throw DomainError("indicial equation has complex roots");
    const double root_disc = std::sqrt(disc);
    // Avoid cancellation: the smaller-magnitude root from the product c = -coef2.
    const double q = -0.5 * (linear + (linear >= 0.0 ? root_disc : -root_disc));
    std::vector<double> roots;
    if (q == 0.0) {
        roots = {0.0, 0.0};
    } else {
        roots = {q, -coef2 / q};
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    const double floor = kind == OperatorKind::P ? u - 0.5 : u - 1.5;
    std::vector<IndicialRoot> out;
    for (double r : roots) out.push_back({r, r + coef1, r + coef1 > floor});
    return out;
}

WittenModel witten_build(const OperatorSpec& spec) {
    if (spec.kind != OperatorKind::WittenLen1 && spec.kind != OperatorKind::WittenLen2)
        throw DomainError("witten_build needs kind WittenLen1 or WittenLen2");
    if (!(spec.u > 0.0 && spec.u < 1.0)) throw DomainError("u must lie in (0,1)");
    if (!(spec.s > 0.0)) throw DomainError("s must be positive");
    if (spec.sign != 1 && spec.sign != -1) throw DomainError("sign must be +1 or -1");
    const bool two = spec.kind == OperatorKind::WittenLen2;
    if (two && !(spec.mu > 0.0)) throw DomainError("mu must be positive");

    WittenModel model;
    model.length = two ? 2 : 1;
    model.kappa = spec.kappa;
    model.u = spec.u;
    model.s = spec.s;
    model.mu = spec.mu;
    model.sign = spec.sign;
    const double kappa = spec.kappa, u = spec.u, s = spec.s;
    const double shift_sign = -static_cast<double>(spec.sign);
    const int full = spec.order;

    auto half_line = [&](OperatorKind kind, double coef, double root, double xi, double shift) {
        OperatorSpec c;
        c.kind = kind;
        c.order = std::max(1, full / 2);
        c.u = u;
        c.s = s;
        c.xi = xi;
        if (kind == OperatorKind::P) {
            c.c1 = coef;
            c.a = root;
            c.shift_even = shift;
        } else {
            c.d1 = coef;
            c.b = root;
            c.shift_odd = shift;
        }
        return c;
    };
    auto add = [&](const std::string& name, int row, const std::string& condition, bool ok, OperatorSpec c) {
        model.components.push_back({name, row, condition, ok, c});
    };

    if (!two) {
        const double shift_r = shift_sign * s * (1.0 + 2.0 * kappa);
        const double shift_up = shift_sign * s * (-1.0 + 2.0 * kappa);
        add("Delta_r", 1, "kappa > -1/2", kappa > -0.5, half_line(OperatorKind::P, kappa, 0.0, 0.0, shift_r));
        add("Delta_r", 2, "kappa < 3/2", kappa < 1.5,
            half_line(OperatorKind::P, kappa, 1.0 - 2.0 * kappa, 0.0, shift_r));
        add("Delta_r+1", 1, "kappa > -3/2", kappa > -1.5, half_line(OperatorKind::Q, kappa, 0.0, 0.0, shift_up));
        add("Delta_r+1", 2, "kappa < 1/2", kappa < 0.5,
            half_line(OperatorKind::Q, kappa, -1.0 - 2.0 * kappa, 0.0, shift_up));
    } else {
        const double xi = spec.mu * spec.mu;
        const double shift_down = shift_sign * s * (1.0 + 2.0 * (kappa + u));
        const double shift_up = shift_sign * s * (-1.0 + 2.0 * kappa);
        add("Delta_r-1", 1, "kappa > -1/2", kappa > -0.5,
            half_line(OperatorKind::P, kappa + u, 0.0, xi, shift_down));
        add("Delta_r-1", 2, "kappa < 3/2 - 2u", kappa < 1.5 - 2.0 * u,
            half_line(OperatorKind::P, kappa + u, 1.0 - 2.0 * (kappa + u), xi, shift_down));

        auto middle = [&](double a, double b, double theta) {
            OperatorSpec c;
            c.kind = OperatorKind::W;
            c.order = full;
            c.u = u;
            c.s = s;
            c.xi = xi;
            c.eta = -2.0 * spec.mu * u;
            c.c1 = kappa;
            c.d1 = kappa + u;
            c.a = a;
            c.b = b;
            c.theta = theta;
            c.shift_even = shift_sign * s * (1.0 + 2.0 * kappa);
            c.shift_odd = shift_sign * s * (-1.0 + 2.0 * (kappa + u));
            return c;
        };
        const double a_alt = 1.0 - 2.0 * kappa, b_alt = -1.0 - 2.0 * (kappa + u);
        auto near = [](double x, double y) { return std::fabs(x - y) <= 1e-12 * std::max(1.0, std::fabs(y)); };
        add("Delta_r", 1, "kappa > u - 1/2", kappa > u - 0.5, middle(0.0, 0.0, kappa));
        add("Delta_r", 2, "kappa < 1/2 - 2u", kappa < 0.5 - 2.0 * u, middle(a_alt, b_alt, -kappa - u));
        add("Delta_r", 3, "impossible", false, middle(0.0, b_alt, -0.5 - u));
        add("Delta_r", 4, "-(1+u)/2 < kappa < (1-u)/2 or kappa in {-1/2-u, 1/2}",
            (kappa > -0.5 * (1.0 + u) && kappa < 0.5 * (1.0 - u)) || near(kappa, -0.5 - u) || near(kappa, 0.5),
            middle(a_alt, 0.0, 0.5));

        add("Delta_r+1", 1, "kappa > u - 3/2", kappa > u - 1.5, half_line(OperatorKind::Q, kappa, 0.0, xi, shift_up));
        add("Delta_r+1", 2, "kappa < 1/2 - u", kappa < 0.5 - u,
            half_line(OperatorKind::Q, kappa, -1.0 - 2.0 * kappa, xi, shift_up));
    }

    std::map<std::string, bool> any;
    for (const auto& c : model.components) any[c.name] = any[c.name] || c.admissible;
    std::vector<std::string> blocked;
    for (const auto& [name, ok] : any)
        if (!ok) {
            for (const auto& c : model.components)
                if (c.name == name) blocked.push_back(name + " row " + std::to_string(c.row) + ": " + c.condition);
        }
    if (!blocked.empty()) throw HypothesisFailure("no admissible table row", blocked);
    return model;
}

std::vector<WittenComponentSpectrum> witten_spectrum(const WittenModel& model, int order) {
    std::vector<WittenComponentSpectrum> out;
    for (const auto& c : model.components) {
        WittenComponentSpectrum r{c.name, c.row, std::nullopt, "inadmissible"};
        if (c.admissible) {
            const int n = is_half_line(c.spec.kind) ? std::max(1, order / 2) : order;
            try {
                r.ritz = ritz_spectrum(c.spec, {n}).front();
                r.status = "ok";
            } catch (const std::exception& e) {
                r.status = e.what();
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<PairingReport> witten_pairing(const std::vector<WittenComponentSpectrum>& spectra) {
    std::vector<PairingReport> out;
    for (const auto& lower : spectra) {
        if (lower.name != "Delta_r-1" || !lower.ritz) continue;
        for (const auto& middle : spectra) {
            if (middle.name != "Delta_r" || !middle.ritz) continue;
            PairingReport p;
            p.lower_row = lower.row;
            p.middle_row = middle.row;
            // Row 1 of both tables starts from the regular (a = 0) solution.
            p.exponent_match = lower.row == 1 && middle.row == 1;
            const auto& target = middle.ritz->eigenvalues;
            const auto& source = *lower.ritz;
            for (std::size_t k = 0; k < source.converged.size(); ++k) {
                const double lambda = source.eigenvalues[k];
                if (std::fabs(lambda) <= 1e-8) continue;
                auto it = std::lower_bound(target.begin(), target.end(), lambda);
                double nearest = std::numeric_limits<double>::infinity();
                if (it != target.end()) nearest = std::fabs(*it - lambda);
                if (it != target.begin()) nearest = std::min(nearest, std::fabs(*(it - 1) - lambda));
                const double mismatch = nearest / std::fabs(lambda);
                ++p.compared;
                if (mismatch > p.max_mismatch) {
                    p.max_mismatch = mismatch;
                    p.worst_k = static_cast<int>(k);
                }
                if (source.converged[k]) {
                    ++p.converged_compared;
                    p.max_converged_mismatch = std::max(p.max_converged_mismatch, mismatch);
                }
            }
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace dunkl
