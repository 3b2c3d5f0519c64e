#include "dunkl/basis.hpp"

#include <cmath>
#include <string>

#include "dunkl/errors.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {
namespace {

void check_index(const BasisParams& params, int k) {
    if (k < 0 || k > max_basis_index) throw DomainError("basis index out of range: " + std::to_string(k));
    if (!params.admits(k))
        throw DomainError("even index " + std::to_string(k) + " needs sigma > -1/2 (odd-sector basis)");
}

double p0_constant(double sigma, double s) {
    return std::exp(0.25 * (2.0 * sigma + 1.0) * std::log(s) - 0.5 * log_gamma(sigma + 0.5));
}

// Coefficients of p_j = lead * x * p_{j-1} - back * p_{j-2}.
struct Step {
    double lead;
    double back;
};

Step step(double sigma, double s, int j) {
    const double r2s = std::sqrt(2.0 * s);
    if (j % 2 == 0) {
        const double a = 1.0 / std::sqrt(static_cast<double>(j));
        return {a * r2s, a * std::sqrt(j - 1 + 2.0 * sigma)};
    }
    const double a = 1.0 / std::sqrt(j + 2.0 * sigma);
    return {a * r2s, a * std::sqrt(static_cast<double>(j - 1))};
}

// Runs the recursion from a given seed for index 0; works both for p and for
// phi since the Gaussian factor is common to all terms.
void run_recursion(double sigma, double s, int kmax, double x, double seed, std::vector<double>& out) {
    out.assign(kmax + 1, 0.0);
    out[0] = seed;
    double prev = 0.0;
    for (int j = 1; j <= kmax; ++j) {
        const Step st = step(sigma, s, j);
        const double cur = st.lead * x * out[j - 1] - st.back * prev;
        prev = out[j - 1];
        out[j] = cur;
    }
}

ValueAndDerivative p_d_full(double sigma, double s, int k, double x) {
    double p_prev = 0.0, d_prev = 0.0;
    double p = p0_constant(sigma, s), d = 0.0;
    for (int j = 1; j <= k; ++j) {
        const Step st = step(sigma, s, j);
        const double pn = st.lead * x * p - st.back * p_prev;
        const double dn = st.lead * (p + x * d) - st.back * d_prev;
        p_prev = p;
        d_prev = d;
        p = pn;
        d = dn;
    }
    return {p, d};
}

}  // namespace

BasisParams::BasisParams(double sigma, double s) : sigma_(sigma), s_(s) {
    if (!(s > 0.0)) throw DomainError("basis: s must be positive");
    if (!(sigma > -1.5)) throw DomainError("basis: sigma must exceed -3/2");
}

double hermite_p(const BasisParams& params, int k, double x) {
    return hermite_p_d(params, k, x).value;
}

double phi(const BasisParams& params, int k, double x) {
    return hermite_p(params, k, x) * std::exp(-0.5 * params.s() * x * x);
}

HermiteValue hermite_value(const BasisParams& params, int k, double x) {
    const double p = hermite_p(params, k, x);
    return {k, x, p, p * std::exp(-0.5 * params.s() * x * x)};
}

std::vector<double> phi_all(const BasisParams& params, int kmax, double x) {
    if (kmax < 0 || kmax > max_basis_index) throw DomainError("phi_all: kmax out of range");
    const double g = std::exp(-0.5 * params.s() * x * x);
    std::vector<double> out;
    if (params.full()) {
        run_recursion(params.sigma(), params.s(), kmax, x, p0_constant(params.sigma(), params.s()) * g, out);
        return out;
    }
    // phi_{tau,k} = x phi_{tau+1,k-1} for odd k.
    std::vector<double> shifted;
    const double up = params.sigma() + 1.0;
    if (kmax >= 1) run_recursion(up, params.s(), kmax - 1, x, p0_constant(up, params.s()) * g, shifted);
    out.assign(kmax + 1, 0.0);
    for (int k = 1; k <= kmax; k += 2) out[k] = x * shifted[k - 1];
    return out;
}

ValueAndDerivative hermite_p_d(const BasisParams& params, int k, double x) {
    check_index(params, k);
    if (params.full()) return p_d_full(params.sigma(), params.s(), k, x);
    const ValueAndDerivative q = p_d_full(params.sigma() + 1.0, params.s(), k - 1, x);
    return {x * q.value, q.value + x * q.derivative};
}

ValueAndDerivative phi_d(const BasisParams& params, int k, double x) {
    const ValueAndDerivative p = hermite_p_d(params, k, x);
    const double g = std::exp(-0.5 * params.s() * x * x);
    return {p.value * g, (p.derivative - params.s() * x * p.value) * g};
}

double dunkl_T_phi(const BasisParams& params, int k, double x) {
    const ValueAndDerivative f = phi_d(params, k, x);
    if (k % 2 == 0) return f.derivative;
    // phi_k / x is regular at the origin, where it equals p_k'(0).
    const double over_x = x == 0.0 ? hermite_p_d(params, k, 0.0).derivative : f.value / x;
    return f.derivative + 2.0 * params.sigma() * over_x;
}

double ladder_coeff(const BasisParams& params, int k, LadderDirection) {
    if (k < 1) throw DomainError("ladder_coeff: B annihilates phi_0; k must be at least 1");
    if (!params.full()) throw DomainError("ladder_coeff: needs both parities (sigma > -1/2)");
    const double s = params.s();
    if (k % 2 == 0) return std::sqrt(2.0 * k * s);
    return std::sqrt(2.0 * (k + 2.0 * params.sigma()) * s);
}

std::vector<double> xinv_coeffs(const BasisParams& params, int k) {
    if (k < 0 || k % 2 == 0) throw DomainError("xinv_coeffs: k must be odd");
    if (!params.full()) throw DomainError("xinv_coeffs: expansion uses even functions (sigma > -1/2)");
    const int m = (k - 1) / 2;
    const double sigma = params.sigma();
    std::vector<double> a(m + 1);
    for (int i = 0; i <= m; ++i) {
        const double lg = log_gamma(m + 1.0) + log_gamma_diff(i + 0.5 + sigma, m + 1.5 + sigma) -
                          log_gamma(i + 1.0) + std::log(params.s());
        a[i] = ((m - i) % 2 == 0 ? 1.0 : -1.0) * std::exp(0.5 * lg);
    }
    return a;
}

}  // namespace dunkl
