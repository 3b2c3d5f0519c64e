#include <cmath>

#include "doctest.h"
#include "dunkl/coeffs.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/fits.hpp"

using namespace dunkl;

TEST_CASE("decay fit needs data") {
    CoeffMatrix zeros{Family::d, Method::closed_form, 32, std::vector<double>(32 * 32, 0.0), TParams(1, 0.5, 1)};
    CHECK_THROWS_AS(fit_decay_exponent(zeros), InsufficientData);
}

TEST_CASE("decay fit recovers a synthetic exponent") {
    const int n = 48;
    CoeffMatrix m{Family::d, Method::closed_form, n, std::vector<double>(n * n, 0.0), TParams(1, 0.5, 1)};
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            if ((k + l) % 2 == 0) m.entries[k * n + l] = 3.0 * std::pow((k / 2 + 1.0) * (l / 2 + 1.0), -0.7);
    const FitReport r = fit_decay_exponent(m);
    CHECK(r.fitted_value == doctest::Approx(0.7).epsilon(1e-10));
    CHECK(r.residual < 1e-10);
}

TEST_CASE("lower constant") {
    const TParams one(1.0, 0.5, 1.0), four(1.0, 0.5, 4.0);
    const FitReport a = fit_lower_constant(one, 200);
    CHECK(a.fitted_value > 0.0);
    CHECK(fit_lower_constant(four, 200).fitted_value == doctest::Approx(a.fitted_value).epsilon(1e-12));
    CHECK(fit_lower_constant(one, 400).fitted_value <= a.fitted_value);
}

TEST_CASE("form bound") {
    const TParams p(1.0, 0.5, 1.0);
    CHECK(fit_form_bound(p, 1e6, 50, 32).fitted_value == 0.0);
    const FitReport small = fit_form_bound(p, 0.1, 50, 32);
    CHECK(small.fitted_value > 0.0);
    // The single-mode value is a lower bound for the maximizer.
    CHECK(small.fitted_value >= c00(p) - 0.1 * (1 + 2 * p.sigma()) - 1e-12);
    CHECK(fit_form_bound(p, 0.1, 50, 32, 5).fitted_value == doctest::Approx(small.fitted_value).epsilon(1e-12));
}

TEST_CASE("coupling bound") {
    const FitReport e = fit_tprime_bound(MixedParams(0.5, 0.5, 0.5, 1.0), 0.5, 0.1, 50, 32);
    CHECK(std::isfinite(e.fitted_value));
    CHECK(e.fitted_value > 0.0);
}

TEST_CASE("product constants") {
    CHECK_THROWS(fit_weierstrass_constant(0.0, 100));
    CHECK(fit_gautschi_constant(1.0, 100).fitted_value == doctest::Approx(1.0).epsilon(1e-12));
    const double c = fit_weierstrass_constant(0.5, 1000).fitted_value;
    CHECK(c >= 1.0);
    // q_p tends to 1 / Gamma(1 - t) = 1 / sqrt(pi).
    CHECK(c == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-3));
    CHECK(fit_weierstrass_constant(0.5, 4000).fitted_value >= c);
}
