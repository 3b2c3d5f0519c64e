#include "dunkl/specfun.hpp"

#include <algorithm>
#include <array>
#include <numbers>

#include "dunkl/errors.hpp"

namespace dunkl {
namespace {

constexpr double lanczos_g = 7.0;
constexpr std::array<double, 9> lanczos_c = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_sum(double x) {
    double a = lanczos_c[0];
    for (std::size_t i = 1; i < lanczos_c.size(); ++i) a += lanczos_c[i] / (x - 1.0 + static_cast<double>(i));
    return a;
}

// Valid for x >= 0.5.
double lanczos_log_gamma(double x) {
    const double t = x + lanczos_g - 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (x - 0.5) * std::log(t) - t + std::log(lanczos_sum(x));
}

double sin_pi(double x) {
    double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
    if (r > 0.5) r = 1.0 - r;
    if (r < -0.5) r = -1.0 - r;
    return std::sin(std::numbers::pi * r);
}

}  // namespace

SignedLog SignedLog::from(double x) {
    if (x == 0.0) return zero();
    return {std::log(std::fabs(x)), x > 0 ? 1 : -1};
}

void SignedLogSum::add(SignedLog term) {
    if (term.sign != 0) terms_.push_back(term);
}

SignedLog SignedLogSum::result() const {
    if (terms_.empty()) return SignedLog::zero();
    std::vector<SignedLog> sorted = terms_;
    std::sort(sorted.begin(), sorted.end(),
              [](const SignedLog& a, const SignedLog& b) { return a.log_abs > b.log_abs; });
    const double top = sorted.front().log_abs;
    double sum = 0.0, comp = 0.0;
    for (const auto& t : sorted) {
        const double x = t.sign * std::exp(t.log_abs - top);
        const double s = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - s) + x;
        else
            comp += (x - s) + sum;
        sum = s;
    }
    sum += comp;
    if (sum == 0.0) return SignedLog::zero();
    return {top + std::log(std::fabs(sum)), sum > 0 ? 1 : -1};
}

bool near_nonpositive_integer(double x, double tol) {
    if (x > tol) return false;
    return std::fabs(x - std::round(x)) <= tol;
}

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive");
    if (x == 1.0 || x == 2.0) return 0.0;
    if (x < 0.5) {
        // Reflection; sin(pi x) > 0 on (0, 1/2).
        return std::log(std::numbers::pi / sin_pi(x)) - lanczos_log_gamma(1.0 - x);
    }
    return lanczos_log_gamma(x);
}

SignedLog signed_log_gamma(double x) {
    if (x > 0.0) return {log_gamma(x), 1};
    if (x == std::round(x)) throw DomainError("signed_log_gamma: pole at non-positive integer");
    const double sp = sin_pi(x);
    // Gamma(x) = pi / (sin(pi x) Gamma(1 - x)), with Gamma(1 - x) > 0.
    return {std::log(std::numbers::pi) - std::log(std::fabs(sp)) - log_gamma(1.0 - x), sp > 0 ? 1 : -1};
}

double log_gamma_diff(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw DomainError("log_gamma_diff: arguments must be positive");
    if (a < 0.5 || b < 0.5) return log_gamma(a) - log_gamma(b);
    const double ta = a + lanczos_g - 0.5;
    const double tb = b + lanczos_g - 0.5;
    const double d = a - b;
    return d * std::log(ta) + (b - 0.5) * std::log1p(d / tb) - d +
           std::log(lanczos_sum(a) / lanczos_sum(b));
}

double gamma_ratio(int p, double t) {
    if (p < 0) throw DomainError("gamma_ratio: p must be non-negative");
    if (!(t > 0.0)) throw DomainError("gamma_ratio: t must be positive");
    return std::exp(log_gamma_diff(p + 1.0, p + t));
}

double log_partial_product(double t, int p, ProductForm form) {
    if (p < 0) throw DomainError("partial_product: p must be non-negative");
    if (form == ProductForm::one_minus && t >= 1.0)
        throw DomainError("partial_product: one_minus form needs t < 1");
    if (form == ProductForm::one_plus && t <= -1.0)
        throw DomainError("partial_product: one_plus form needs t > -1");
    const double sgn = form == ProductForm::one_minus ? -1.0 : 1.0;
    double acc = 0.0;
    for (int i = 1; i <= p; ++i) acc += std::log1p(sgn * t / i);
    return acc;
}

double partial_product(double t, int p, ProductForm form) {
    return std::exp(log_partial_product(t, p, form));
}

SignedLog pochhammer_over_factorial(double v, int i, double tol) {
    if (i < 0) throw DomainError("pochhammer_over_factorial: negative index");
    if (near_nonpositive_integer(v, tol))
        throw DegenerateParameters("Gamma pole: argument is a non-positive integer");
    if (i == 0) return {0.0, 1};
    const SignedLog num = signed_log_gamma(i + v);
    const SignedLog den = signed_log_gamma(v);
    return {num.log_abs - den.log_abs - log_gamma(i + 1.0), num.sign * den.sign};
}

}  // namespace dunkl
