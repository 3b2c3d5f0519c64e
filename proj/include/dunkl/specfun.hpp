#pragma once

#include <cmath>
#include <limits>
#include <vector>

namespace dunkl {

// A real number stored as log|x| and sign(x); zero has sign 0.
struct SignedLog {
    double log_abs = -std::numeric_limits<double>::infinity();
    int sign = 0;

    static SignedLog zero() { return {}; }
    static SignedLog from(double x);
    double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

inline SignedLog operator*(SignedLog a, SignedLog b) {
    if (a.sign == 0 || b.sign == 0) return SignedLog::zero();
    return {a.log_abs + b.log_abs, a.sign * b.sign};
}

inline SignedLog operator/(SignedLog a, SignedLog b) {
    if (a.sign == 0) return SignedLog::zero();
    return {a.log_abs - b.log_abs, a.sign * b.sign};
}

// Sum of signed log-domain terms, added in descending magnitude with
// Neumaier compensation and exponentiated relative to the largest term.
class SignedLogSum {
public:
    void add(SignedLog term);
    SignedLog result() const;
    std::size_t size() const { return terms_.size(); }

private:
    std::vector<SignedLog> terms_;
};

// ln Gamma(x) for x > 0 (Lanczos, g = 7, nine coefficients).
double log_gamma(double x);

// ln|Gamma(x)| and sign for any non-pole real x.
SignedLog signed_log_gamma(double x);

// ln Gamma(a) - ln Gamma(b) for a, b > 0 without forming either log-gamma
// when both arguments are large.
double log_gamma_diff(double a, double b);

// Gamma(p+1) / Gamma(p+t).
double gamma_ratio(int p, double t);

enum class ProductForm { one_minus, one_plus };

// prod_{i=1}^p (1 -/+ t/i), accumulated as a sum of logs.
double log_partial_product(double t, int p, ProductForm form);
double partial_product(double t, int p, ProductForm form);

// (v)_i / i! = Gamma(i+v) / (i! Gamma(v)) with sign. Throws
// DegenerateParameters when v is within tol of a non-positive integer.
SignedLog pochhammer_over_factorial(double v, int i, double tol = 1e-9);

// True when x lies within tol of {0, -1, -2, ...}.
bool near_nonpositive_integer(double x, double tol = 1e-9);

}  // namespace dunkl
