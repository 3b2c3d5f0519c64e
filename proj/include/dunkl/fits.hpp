#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dunkl/coeffs.hpp"

namespace dunkl {

struct FitReport {
    std::string constant_name;  // D, C, E, omega, C0, C1
    double fitted_value = 0.0;
    int window_lo = 0;
    int window_hi = 0;
    double residual = 0.0;
    int samples = 0;
};

constexpr std::uint64_t default_fit_seed = 20140921;

// min over k <= K of t(phi_k) (k+1)^u s^-u; residual is the spread
// (max - min) of the same quantity over [K/2, K].
FitReport fit_lower_constant(const TParams& params, int max_index);

// Largest (t(phi) - eps s^(u-1) j(phi)) s^-u over unit vectors supported on
// the first `order` functions: random trials plus the extremal eigenvector.
// Residual is the excess of the eigenvector value over the best trial.
FitReport fit_form_bound(const TParams& params, double epsilon, int trials, int order,
                         std::uint64_t seed = default_fit_seed);

// Same for |t'(phi)| against eps s^((v-1)/2) j_{sigma,tau}(phi), normalized
// by s^((1+v)/2). Throws HypothesisFailure when the parameters fail the
// hypotheses of the coupled operator (u is needed for that check).
FitReport fit_tprime_bound(const MixedParams& params, double u, double epsilon, int trials, int order,
                           std::uint64_t seed = default_fit_seed);

// Least-squares slope of log|entry| against -log((m+1)(n+1)) over nonzero
// entries with both indices >= 8; residual is the RMS misfit.
FitReport fit_decay_exponent(const CoeffMatrix& matrix);

// max over p <= pmax of max(q_p, 1/q_p), q_p = prod_{i<=p}(1 - t/i) (p+1)^t.
FitReport fit_weierstrass_constant(double t, int pmax);

// Same with q_p = Gamma(p+1)/Gamma(p+t) (p+1)^(t-1).
FitReport fit_gautschi_constant(double t, int pmax);

}  // namespace dunkl
