#include "dunkl/coeffs.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/basis.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {
namespace {

bool nearly_equal(double a, double b) {
    return std::fabs(a - b) <= case_equality_tol * std::max(1.0, std::max(std::fabs(a), std::fabs(b)));
}

double sign_pow(int e) { return e % 2 == 0 ? 1.0 : -1.0; }

void check_order(int order) {
    if (order < 1 || order > max_basis_index) throw DomainError("order out of range");
}

// ln of (n-1)! Gamma(j+1/2+sigma) / (j! Gamma(n+1/2+sigma)), the even-pair weight.
double log_even_weight(double sigma, int n, int j) {
    return log_gamma(n) - log_gamma(j + 1.0) + log_gamma_diff(j + 0.5 + sigma, n + 0.5 + sigma);
}

// ln of n! Gamma(j+1/2+sigma) / (j! Gamma(n+3/2+sigma)), the odd-pair weight.
double log_odd_weight(double sigma, int n, int j) {
    return log_gamma(n + 1.0) - log_gamma(j + 1.0) + log_gamma_diff(j + 0.5 + sigma, n + 1.5 + sigma);
}

std::size_t idx(int order, int k, int l) { return static_cast<std::size_t>(k) * order + l; }

void mirror_lower(std::vector<double>& a, int order) {
    for (int k = 0; k < order; ++k)
        for (int l = k + 1; l < order; ++l) a[idx(order, k, l)] = a[idx(order, l, k)];
}

// Odd-sector t coefficients through phi_{sigma,2m+1} = x phi_{sigma+1,2m}.
CoeffMatrix odd_sector_matrix(const TParams& params, int order, CoeffMatrix (*full)(const TParams&, int)) {
    const TParams up(params.sigma() + 1.0, params.u(), params.s());
    const CoeffMatrix inner = full(up, order);
    CoeffMatrix out{Family::c, inner.method, order, std::vector<double>(static_cast<std::size_t>(order) * order, 0.0),
                    params};
    for (int k = 1; k < order; k += 2)
        for (int l = 1; l < order; l += 2) out.entries[idx(order, k, l)] = inner.at(k - 1, l - 1);
    return out;
}

// Gram block <f_i, g_j>_kappa over the line for families of a single parity.
std::vector<double> gram(int nf, const std::function<void(double, std::vector<double>&)>& f, int ng,
                         const std::function<void(double, std::vector<double>&)>& g, double kappa, double s,
                         int degree) {
    IntegrandFamily ff{nf, f, [](int) { return Parity::even; }};
    IntegrandFamily gg{ng, g, [](int) { return Parity::even; }};
    return inner_weighted_matrix(ff, gg, QuadratureSpec::gaussian(kappa, s, degree));
}

// Even-index functions phi_{2i} or odd-index functions phi_{2i+1}/x, both even.
std::function<void(double, std::vector<double>&)> sector_family(const BasisParams& basis, int count, bool odd) {
    return [basis, count, odd](double x, std::vector<double>& out) {
        const int kmax = odd ? 2 * count - 1 : 2 * count - 2;
        const std::vector<double> all = phi_all(basis, std::max(kmax, 0), x);
        out.resize(count);
        for (int i = 0; i < count; ++i) out[i] = odd ? all[2 * i + 1] / x : all[2 * i];
    };
}

int even_count(int order) { return (order + 1) / 2; }
int odd_count(int order) { return order / 2; }

// sum_p Gamma(p+theta+h)/p! (alpha)_{m-p}/(m-p)! (beta)_{n-p}/(n-p)!
SignedLog mixed_sum(double theta, double h, double alpha, double beta, int m, int n) {
    SignedLogSum acc;
    for (int p = 0; p <= std::min(m, n); ++p) {
        SignedLog term{log_gamma(p + theta + h) - log_gamma(p + 1.0), 1};
        term = term * pochhammer_over_factorial(alpha, m - p) * pochhammer_over_factorial(beta, n - p);
        acc.add(term);
    }
    return acc.result();
}

// Generic chat for a same-parity pair with half-offset h (1/2 even, 3/2 odd).
double chat_generic(double sigma, double tau, double theta, double s, double h, int m, int n) {
    const double alpha = sigma - theta, beta = tau - theta;
    if (near_nonpositive_integer(alpha) || near_nonpositive_integer(beta))
        throw DegenerateParameters("excluded integer difference: sigma - theta or tau - theta in -N");
    const double v = sigma + tau - 2.0 * theta;
    const SignedLog sum = mixed_sum(theta, h, alpha, beta, m, n);
    const double log_pref = 0.5 * v * std::log(s) +
                            0.5 * (log_gamma(m + 1.0) + log_gamma(n + 1.0) - log_gamma(m + sigma + h) -
                                   log_gamma(n + tau + h));
    return sign_pow(m + n) * sum.sign * std::exp(log_pref + sum.log_abs);
}

// Triangular chat when sigma = theta; zero for m > n.
double chat_sigma_theta(double sigma, double tau, double s, double h, int m, int n) {
    if (m > n) return 0.0;
    const double v = tau - sigma;
    if (near_nonpositive_integer(v)) throw DegenerateParameters("excluded integer difference: tau - sigma in -N");
    const SignedLog poch = pochhammer_over_factorial(v, n - m);
    const double lg = 0.5 * v * std::log(s) + 0.5 * (log_gamma(n + 1.0) - log_gamma(m + 1.0) +
                                                     log_gamma_diff(m + sigma + h, n + tau + h));
    return sign_pow(m + n) * poch.sign * std::exp(lg + poch.log_abs);
}

void check_exponent(double e, int k, const char* name) {
    if (k % 2 == 0 && !(e > -0.5))
        throw DomainError(std::string("even index needs ") + name + " > -1/2");
}

}  // namespace

TParams::TParams(double sigma, double u, double s) : sigma_(sigma), u_(u), s_(s) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("u must lie in (0, 1)");
    if (!(s > 0.0)) throw DomainError("s must be positive");
    if (!(sigma > u - 1.5)) throw DomainError("sigma must exceed u - 3/2 (u - 1/2 for even indices)");
    odd_sector_ = !(sigma > u - 0.5);
}

MixedParams::MixedParams(double sigma, double tau, double theta, double s)
    : sigma_(sigma), tau_(tau), theta_(theta), s_(s) {
    if (!(s > 0.0)) throw DomainError("s must be positive");
    if (!(sigma > -1.5) || !(tau > -1.5) || !(theta > -1.5)) throw DomainError("exponents must exceed -3/2");
}

MixedCase MixedParams::case_tag() const {
    const bool st = nearly_equal(sigma_, theta_), tt = nearly_equal(tau_, theta_);
    if (st && tt) return MixedCase::all_equal;
    if (st) return MixedCase::sigma_eq_theta;
    if (tt) return MixedCase::tau_eq_theta;
    if (nearly_equal(theta_, tau_ + 1.0)) return MixedCase::theta_eq_tau_plus_1;
    return MixedCase::generic;
}

std::string to_string(MixedCase c) {
    switch (c) {
        case MixedCase::all_equal: return "all_equal";
        case MixedCase::sigma_eq_theta: return "sigma_eq_theta";
        case MixedCase::tau_eq_theta: return "tau_eq_theta";
        case MixedCase::theta_eq_tau_plus_1: return "theta_eq_tau_plus_1";
        case MixedCase::generic: return "generic";
    }
    return "unknown";
}

std::string to_string(Family f) {
    switch (f) {
        case Family::d: return "d";
        case Family::c: return "c";
        case Family::chat: return "chat";
        case Family::cprime: return "cprime";
    }
    return "unknown";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::recursion: return "recursion";
        case Method::closed_form: return "closed_form";
        case Method::quadrature: return "quadrature";
    }
    return "unknown";
}

double c00(const TParams& params) {
    if (params.odd_sector()) throw DomainError("c00 needs sigma > u - 1/2");
    return std::exp(log_gamma_diff(params.sigma() - params.u() + 0.5, params.sigma() + 0.5) +
                    params.u() * std::log(params.s()));
}

double pi_factor(double sigma, int k, int l) {
    if (k < l || (k + l) % 2 != 0 || l < 0) throw DomainError("pi_factor needs k >= l of equal parity");
    const int m = k / 2, n = l / 2;
    const double h = k % 2 == 0 ? 0.5 : 1.5;
    if (k == l) return 1.0;
    return std::exp(0.5 * (log_gamma(m + 1.0) - log_gamma(n + 1.0) + log_gamma_diff(n + h + sigma, m + h + sigma)));
}

SigmaTable::SigmaTable(double sigma, double u, int order) : order_(order) {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("u must lie in (0, 1)");
    if (!(sigma > u - 0.5)) throw DomainError("Sigma table needs sigma > u - 1/2");
    check_order(order);
    values_.assign(static_cast<std::size_t>(order) * order, 0.0);
    const int half = order / 2 + 1;
    std::vector<std::vector<double>> w_even(half), w_odd(half);
    for (int n = 0; n < half; ++n) {
        w_odd[n].resize(n + 1);
        for (int j = 0; j <= n; ++j) w_odd[n][j] = std::exp(log_odd_weight(sigma, n, j));
        if (n == 0) continue;
        w_even[n].resize(n);
        for (int j = 0; j < n; ++j) w_even[n][j] = std::exp(log_even_weight(sigma, n, j));
    }
    auto val = [&](int k, int l) -> double& { return values_[idx(order, k, l)]; };
    for (int k = 0; k < order; ++k) {
        const int m = k / 2;
        if (k % 2 == 0) {
            val(k, 0) = partial_product(1.0 - u, m, ProductForm::one_minus);
            for (int l = 2; l <= k; l += 2) {
                const int n = l / 2;
                double acc = 0.0;
                for (int j = 0; j < n; ++j) acc += w_even[n][j] * val(k, 2 * j);
                val(k, l) = val(k - 1, l - 1) + u * acc;
            }
        } else {
            for (int l = 1; l <= k; l += 2) {
                const int n = l / 2;
                double acc = 0.0;
                for (int j = 0; j <= n; ++j) acc += w_odd[n][j] * val(k - 1, 2 * j);
                val(k, l) = val(k - 1, l - 1) - u * acc;
            }
        }
    }
}

double SigmaTable::at(int k, int l) const {
    if (k < l || l < 0 || k >= order_ || (k + l) % 2 != 0) throw DomainError("Sigma_{k,l} needs k >= l of equal parity");
    return values_[idx(order_, k, l)];
}

SigmaTable sigma_table(double sigma, double u, int order) { return SigmaTable(sigma, u, order); }

CoeffMatrix t_matrix_closed(const TParams& params, int order) {
    check_order(order);
    if (params.odd_sector()) return odd_sector_matrix(params, order, &t_matrix_closed);
    const SigmaTable sig(params.sigma(), params.u(), order);
    const double base = c00(params);
    std::vector<double> a(static_cast<std::size_t>(order) * order, 0.0);
    for (int k = 0; k < order; ++k)
        for (int l = k % 2; l <= k; l += 2)
            a[idx(order, k, l)] = base * sign_pow(k / 2 + l / 2) * pi_factor(params.sigma(), k, l) * sig.at(k, l);
    mirror_lower(a, order);
    return {Family::c, Method::closed_form, order, std::move(a), params};
}

double t_coeff_closed(const TParams& params, int k, int l) {
    if (!params.admits(k) || !params.admits(l)) throw DomainError("index not in the basis for this sigma");
    if ((k + l) % 2 != 0) return 0.0;
    if (params.odd_sector()) return t_coeff_closed(TParams(params.sigma() + 1.0, params.u(), params.s()), k - 1, l - 1);
    const int hi = std::max(k, l), lo = std::min(k, l);
    const SigmaTable sig(params.sigma(), params.u(), hi + 1);
    return c00(params) * sign_pow(hi / 2 + lo / 2) * pi_factor(params.sigma(), hi, lo) * sig.at(hi, lo);
}

CoeffMatrix t_matrix_recursive(const TParams& params, int order) {
    check_order(order);
    if (params.odd_sector()) return odd_sector_matrix(params, order, &t_matrix_recursive);
    const double sigma = params.sigma(), u = params.u();
    std::vector<double> d(static_cast<std::size_t>(order) * order, 0.0);
    auto at = [&](int k, int l) -> double& { return d[idx(order, k, l)]; };
    const int half = order / 2 + 1;
    std::vector<std::vector<double>> r_even(half), r_odd(half);
    for (int n = 0; n < half; ++n) {
        r_odd[n].resize(n + 1);
        for (int j = 0; j <= n; ++j) r_odd[n][j] = sign_pow(n - j) * std::exp(0.5 * log_odd_weight(sigma, n, j));
        if (n == 0) continue;
        r_even[n].resize(n);
        for (int j = 0; j < n; ++j) r_even[n][j] = sign_pow(n - j) * std::exp(0.5 * log_even_weight(sigma, n, j));
    }
    at(0, 0) = 1.0;
    for (int k = 1; k < order; ++k) {
        const int m = k / 2;
        if (k % 2 == 0) {
            double acc = 0.0;
            for (int j = 0; j < m; ++j) acc += r_even[m][j] * at(2 * j, 0);
            at(k, 0) = u / std::sqrt(m) * acc;
            for (int l = 2; l <= k; l += 2) {
                const int n = l / 2;
                double s = 0.0;
                for (int j = 0; j < n; ++j) s += r_even[n][j] * at(k, 2 * j);
                at(k, l) = std::sqrt(static_cast<double>(m) / n) * at(k - 1, l - 1) + u / std::sqrt(n) * s;
            }
        } else {
            for (int l = 1; l <= k; l += 2) {
                const int n = l / 2;
                double s = 0.0;
                for (int j = 0; j <= n; ++j) s += r_odd[n][j] * at(k - 1, 2 * j);
                at(k, l) = std::sqrt((n + 0.5 + sigma) / (m + 0.5 + sigma)) * at(k - 1, l - 1) -
                           u / std::sqrt(m + 0.5 + sigma) * s;
            }
        }
    }
    mirror_lower(d, order);
    const double base = c00(params);
    for (double& e : d) e *= base;
    return {Family::c, Method::recursion, order, std::move(d), params};
}

CoeffMatrix t_matrix_quadrature(const TParams& params, int order) {
    check_order(order);
    const BasisParams basis(params.sigma(), params.s());
    const double kappa = params.sigma() - params.u();
    std::vector<double> a(static_cast<std::size_t>(order) * order, 0.0);
    const int ne = even_count(order), no = odd_count(order);
    if (!params.odd_sector() && ne > 0) {
        const auto fam = sector_family(basis, ne, false);
        const std::vector<double> g = gram(ne, fam, ne, fam, kappa, params.s(), 2 * order);
        for (int i = 0; i < ne; ++i)
            for (int j = 0; j < ne; ++j) a[idx(order, 2 * i, 2 * j)] = g[static_cast<std::size_t>(i) * ne + j];
    }
    if (no > 0) {
        const auto fam = sector_family(basis, no, true);
        const std::vector<double> g = gram(no, fam, no, fam, kappa + 1.0, params.s(), 2 * order);
        for (int i = 0; i < no; ++i)
            for (int j = 0; j < no; ++j) a[idx(order, 2 * i + 1, 2 * j + 1)] = g[static_cast<std::size_t>(i) * no + j];
    }
    return {Family::c, Method::quadrature, order, std::move(a), params};
}

CoeffMatrix normalized(const CoeffMatrix& c) {
    if (c.family != Family::c) throw DomainError("normalized: expects a c-family matrix");
    const TParams& p = std::get<TParams>(c.params);
    const double base = p.odd_sector() ? c00(TParams(p.sigma() + 1.0, p.u(), p.s())) : c00(p);
    CoeffMatrix d = c;
    d.family = Family::d;
    for (double& e : d.entries) e /= base;
    return d;
}

double chat_coeff(const MixedParams& params, int k, int l) {
    if (k < 0 || l < 0) throw DomainError("negative index");
    if ((k + l) % 2 != 0) return 0.0;
    const double sigma = params.sigma(), tau = params.tau(), theta = params.theta(), s = params.s();
    check_exponent(sigma, k, "sigma");
    check_exponent(tau, l, "tau");
    check_exponent(theta, k, "theta");
    const double h = k % 2 == 0 ? 0.5 : 1.5;
    const int m = k / 2, n = l / 2;
    switch (params.case_tag()) {
        case MixedCase::all_equal: return k == l ? 1.0 : 0.0;
        case MixedCase::sigma_eq_theta: return chat_sigma_theta(sigma, tau, s, h, m, n);
        case MixedCase::tau_eq_theta: return chat_sigma_theta(tau, sigma, s, h, n, m);
        case MixedCase::theta_eq_tau_plus_1:
        case MixedCase::generic: return chat_generic(sigma, tau, theta, s, h, m, n);
    }
    return 0.0;
}

CoeffMatrix chat_matrix_closed(const MixedParams& params, int order) {
    check_order(order);
    std::vector<double> a(static_cast<std::size_t>(order) * order, 0.0);
    const bool even_ok = params.sigma() > -0.5 && params.tau() > -0.5 && params.theta() > -0.5;
    for (int k = 0; k < order; ++k)
        for (int l = k % 2; l < order; l += 2)
            if (k % 2 == 1 || even_ok) a[idx(order, k, l)] = chat_coeff(params, k, l);
    return {Family::chat, Method::closed_form, order, std::move(a), params};
}

CoeffMatrix chat_matrix_quadrature(const MixedParams& params, int order) {
    check_order(order);
    const BasisParams left(params.sigma(), params.s()), right(params.tau(), params.s());
    std::vector<double> a(static_cast<std::size_t>(order) * order, 0.0);
    const int ne = even_count(order), no = odd_count(order);
    const bool even_ok = params.sigma() > -0.5 && params.tau() > -0.5 && params.theta() > -0.5;
    if (even_ok) {
        const std::vector<double> g = gram(ne, sector_family(left, ne, false), ne, sector_family(right, ne, false),
                                           params.theta(), params.s(), 2 * order);
        for (int i = 0; i < ne; ++i)
            for (int j = 0; j < ne; ++j) a[idx(order, 2 * i, 2 * j)] = g[static_cast<std::size_t>(i) * ne + j];
    }
    if (no > 0) {
        const std::vector<double> g = gram(no, sector_family(left, no, true), no, sector_family(right, no, true),
                                           params.theta() + 1.0, params.s(), 2 * order);
        for (int i = 0; i < no; ++i)
            for (int j = 0; j < no; ++j) a[idx(order, 2 * i + 1, 2 * j + 1)] = g[static_cast<std::size_t>(i) * no + j];
    }
    return {Family::chat, Method::quadrature, order, std::move(a), params};
}

double cprime_coeff(const MixedParams& params, int k, int l) {
    if (k < 0 || l < 0) throw DomainError("negative index");
    if (k % 2 == 1 || l % 2 == 0) return 0.0;
    const double sigma = params.sigma(), tau = params.tau(), theta = params.theta(), s = params.s();
    if (!(sigma > -0.5) || !(theta > -0.5)) throw DomainError("c' needs sigma, theta > -1/2");
    const int m = k / 2, n = l / 2;
    const double v = params.v();
    const double ls = std::log(s);
    switch (params.case_tag()) {
        case MixedCase::all_equal: {
            if (m > n) return 0.0;
            return sign_pow(n - m) * std::exp(0.5 * ls + 0.5 * (log_gamma(n + 1.0) - log_gamma(m + 1.0) +
                                                                 log_gamma_diff(m + 0.5 + sigma, n + 1.5 + sigma)));
        }
        case MixedCase::sigma_eq_theta: {
            if (m > n) return 0.0;
            if (near_nonpositive_integer(1.0 + v))
                throw DegenerateParameters("excluded integer difference: tau - sigma + 1 in -N");
            const SignedLog poch = pochhammer_over_factorial(1.0 + v, n - m);
            const double lg = 0.5 * (1.0 + v) * ls + 0.5 * (log_gamma(n + 1.0) - log_gamma(m + 1.0) +
                                                            log_gamma_diff(m + 0.5 + sigma, n + 1.5 + tau));
            return sign_pow(m + n) * poch.sign * std::exp(lg + poch.log_abs);
        }
        case MixedCase::tau_eq_theta: {
            if (near_nonpositive_integer(v)) throw DegenerateParameters("excluded integer difference: sigma - tau in -N");
            SignedLogSum acc;
            for (int j = 0; j <= std::min(m, n); ++j)
                acc.add(SignedLog{log_gamma(j + 0.5 + tau) - log_gamma(j + 1.0), 1} *
                        pochhammer_over_factorial(v, m - j));
            const SignedLog sum = acc.result();
            const double lg = 0.5 * (1.0 + v) * ls + 0.5 * (log_gamma(m + 1.0) + log_gamma(n + 1.0) -
                                                            log_gamma(m + 0.5 + sigma) - log_gamma(n + 1.5 + tau));
            return sign_pow(m + n) * sum.sign * std::exp(lg + sum.log_abs);
        }
        case MixedCase::theta_eq_tau_plus_1: {
            if (m < n) return 0.0;
            if (near_nonpositive_integer(v + 1.0))
                throw DegenerateParameters("excluded integer difference: sigma - tau - 1 in -N");
            const SignedLog poch = pochhammer_over_factorial(v + 1.0, m - n);
            const double lg = 0.5 * (v + 1.0) * ls + 0.5 * (log_gamma(m + 1.0) - log_gamma(n + 1.0) +
                                                            log_gamma_diff(n + 1.5 + tau, m + 0.5 + sigma));
            return sign_pow(m + n) * poch.sign * std::exp(lg + poch.log_abs);
        }
        case MixedCase::generic: return chat_generic(sigma, tau + 1.0, theta, s, 0.5, m, n);
    }
    return 0.0;
}

CoeffMatrix cprime_matrix_closed(const MixedParams& params, int order) {
    check_order(order);
    std::vector<double> a(static_cast<std::size_t>(order) * order, 0.0);
    for (int k = 0; k < order; k += 2)
        for (int l = 1; l < order; l += 2) a[idx(order, k, l)] = cprime_coeff(params, k, l);
    return {Family::cprime, Method::closed_form, order, std::move(a), params};
}

CoeffMatrix cprime_matrix_quadrature(const MixedParams& params, int order) {
    check_order(order);
    if (!(params.sigma() > -0.5) || !(params.theta() > -0.5)) throw DomainError("c' needs sigma, theta > -1/2");
    const BasisParams left(params.sigma(), params.s()), right(params.tau(), params.s());
    std::vector<double> a(static_cast<std::size_t>(order) * order, 0.0);
    const int ne = even_count(order), no = odd_count(order);
    if (no > 0) {
        const std::vector<double> g = gram(ne, sector_family(left, ne, false), no, sector_family(right, no, true),
                                           params.theta(), params.s(), 2 * order);
        for (int i = 0; i < ne; ++i)
            for (int j = 0; j < no; ++j) a[idx(order, 2 * i, 2 * j + 1)] = g[static_cast<std::size_t>(i) * no + j];
    }
    return {Family::cprime, Method::quadrature, order, std::move(a), params};
}

bool telescope_check(double t, int p) {
    if (p < 0 || near_nonpositive_integer(t, 0.0)) return false;
    const SignedLog lhs = signed_log_gamma(p + 1.0 + t) / SignedLog{log_gamma(p + 1.0), 1};
    SignedLogSum acc;
    for (int i = 0; i <= p; ++i) acc.add(signed_log_gamma(i + t) / SignedLog{log_gamma(i + 1.0), 1});
    const SignedLog rhs = SignedLog::from(t) * acc.result();
    if (lhs.sign != rhs.sign) return false;
    return std::fabs(std::expm1(lhs.log_abs - rhs.log_abs)) <= 1e-11;
}

}  // namespace dunkl
