#include "dunkl/fits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "dunkl/eigen.hpp"
#include "dunkl/errors.hpp"
#include "dunkl/regions.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {
namespace {

// max over unit vectors x of x^T A x - eps x^T D x (|x^T A x| when `absolute`),
// D diagonal, from random trials and from the top eigenvector.
struct FormFit {
    double best_trial;
    double extremal;
};

FormFit fit_quadratic(const Matrix& form, const std::vector<double>& weight, double epsilon, int trials,
                      std::uint64_t seed, bool absolute) {
    const int n = form.size();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> x(n);
    double best = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < trials; ++t) {
        double norm2 = 0.0;
        for (double& xi : x) {
            xi = normal(rng);
            norm2 += xi * xi;
        }
        const double inv = 1.0 / std::sqrt(norm2);
        double q = 0.0, w = 0.0;
        for (int i = 0; i < n; ++i) {
            double row = 0.0;
            for (int j = 0; j < n; ++j) row += form(i, j) * x[j];
            q += x[i] * row;
            w += weight[i] * x[i] * x[i];
        }
        q *= inv * inv;
        w *= inv * inv;
        best = std::max(best, (absolute ? std::fabs(q) : q) - epsilon * w);
    }
    Matrix shifted = form;
    for (int i = 0; i < n; ++i) shifted(i, i) -= epsilon * weight[i];
    double extremal = eigen_sym(shifted).values.back();
    if (absolute) {
        Matrix neg = form;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) neg(i, j) = -form(i, j);
        for (int i = 0; i < n; ++i) neg(i, i) -= epsilon * weight[i];
        extremal = std::max(extremal, eigen_sym(neg).values.back());
    }
    return {best, extremal};
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys, double& rms) {
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
    if (sxx == 0.0) throw InsufficientData("decay fit: all entries share one index product");
    const double slope = sxy / sxx;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (my + slope * (xs[i] - mx));
        ss += r * r;
    }
    rms = std::sqrt(ss / n);
    return slope;
}

}  // namespace

FitReport fit_lower_constant(const TParams& params, int max_index) {
    if (max_index < 1) throw DomainError("fit_lower_constant: need max index >= 1");
    const CoeffMatrix c = t_matrix_closed(params, max_index + 1);
    const double su = std::pow(params.s(), -params.u());
    double best = std::numeric_limits<double>::infinity();
    double lo = best, hi = -best;
    int count = 0;
    for (int k = 0; k <= max_index; ++k) {
        if (!params.admits(k)) continue;
        const double q = c.at(k, k) * std::pow(k + 1.0, params.u()) * su;
        best = std::min(best, q);
        ++count;
        if (2 * k >= max_index) {
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
    }
    if (!(best > 0.0)) throw DomainError("fit_lower_constant: non-positive diagonal value");
    return {"D", best, 0, max_index, hi - lo, count};
}

FitReport fit_form_bound(const TParams& params, double epsilon, int trials, int order, std::uint64_t seed) {
    if (!(epsilon > 0.0)) throw DomainError("fit_form_bound: epsilon must be positive");
    const CoeffMatrix c = t_matrix_closed(params, order);
    std::vector<int> active;
    for (int k = 0; k < order; ++k)
        if (params.admits(k)) active.push_back(k);
    const int n = static_cast<int>(active.size());
    Matrix form(n);
    std::vector<double> weight(n);
    const double su = std::pow(params.s(), -params.u());
    for (int i = 0; i < n; ++i) {
        weight[i] = 2.0 * active[i] + 1.0 + 2.0 * params.sigma();
        for (int j = 0; j < n; ++j) form(i, j) = c.at(active[i], active[j]) * su;
    }
    const FormFit fit = fit_quadratic(form, weight, epsilon, trials, seed, false);
    const double value = std::max({0.0, fit.best_trial, fit.extremal});
    return {"C", value, 0, order - 1, fit.extremal - fit.best_trial, trials + 1};
}

FitReport fit_tprime_bound(const MixedParams& params, double u, double epsilon, int trials, int order,
                           std::uint64_t seed) {
    if (!(epsilon > 0.0)) throw DomainError("fit_tprime_bound: epsilon must be positive");
    const VHypotheses hyp = theorem_v_hypotheses(params.sigma(), params.tau(), params.theta(), u);
    if (!hyp.ok) throw HypothesisFailure("coupled-operator hypotheses fail", hyp.violated);
    const CoeffMatrix cp = cprime_matrix_closed(params, order);
    Matrix form(order);
    std::vector<double> weight(order);
    const double norm = std::pow(params.s(), -0.5 * (1.0 + params.v()));
    for (int k = 0; k < order; ++k) {
        weight[k] = 2.0 * k + 1.0 + 2.0 * (k % 2 == 0 ? params.sigma() : params.tau());
        for (int l = 0; l < order; ++l) form(k, l) = 0.5 * (cp.at(k, l) + cp.at(l, k)) * norm;
    }
    const FormFit fit = fit_quadratic(form, weight, epsilon, trials, seed, true);
    const double value = std::max({0.0, fit.best_trial, fit.extremal});
    return {"E", value, 0, order - 1, fit.extremal - fit.best_trial, trials + 1};
}

FitReport fit_decay_exponent(const CoeffMatrix& matrix) {
    std::vector<double> xs, ys;
    int lo = std::numeric_limits<int>::max(), hi = 0;
    for (int k = 8; k < matrix.order; ++k)
        for (int l = 8; l < matrix.order; ++l) {
            const double e = matrix.at(k, l);
            if (e == 0.0 || !std::isfinite(e)) continue;
            const int m = k / 2, n = l / 2;
            xs.push_back(-std::log((m + 1.0) * (n + 1.0)));
            ys.push_back(std::log(std::fabs(e)));
            lo = std::min(lo, std::min(k, l));
            hi = std::max(hi, std::max(k, l));
        }
    if (xs.size() < 20) throw InsufficientData("decay fit needs at least 20 nonzero entries with indices >= 8");
    double rms = 0.0;
    const double omega = least_squares_slope(xs, ys, rms);
    return {"omega", omega, lo, hi, rms, static_cast<int>(xs.size())};
}

FitReport fit_weierstrass_constant(double t, int pmax) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("Weierstrass fit needs 0 < t < 1");
    double log_prod = 0.0, worst = 0.0;
    for (int p = 0; p <= pmax; ++p) {
        if (p > 0) log_prod += std::log1p(-t / p);
        worst = std::max(worst, std::fabs(log_prod + t * std::log(p + 1.0)));
    }
    return {"C0", std::exp(worst), 0, pmax, 0.0, pmax + 1};
}

FitReport fit_gautschi_constant(double t, int pmax) {
    if (!(t > 0.0)) throw DomainError("Gautschi fit needs t > 0");
    double worst = 0.0;
    for (int p = 0; p <= pmax; ++p) {
        const double lq = log_gamma_diff(p + 1.0, p + t) + (t - 1.0) * std::log(p + 1.0);
        worst = std::max(worst, std::fabs(lq));
    }
    return {"C1", std::exp(worst), 0, pmax, 0.0, pmax + 1};
}

}  // namespace dunkl
