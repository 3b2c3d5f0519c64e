#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"
#include "dunkl/specfun.hpp"

namespace dunkl {
namespace {

constexpr int max_level = 12;
constexpr int min_level = 3;
constexpr double t_max = 6.0;

struct Node {
    double y;  // abscissa on (0, 1)
    double w;  // dy/dt
};

// Tanh-sinh nodes on (0, 1): level 0 has step 1, level l adds the odd
// multiples of 2^-l.
class NodeTable {
public:
    NodeTable() {
        levels_.resize(max_level + 1);
        for (int l = 0; l <= max_level; ++l) {
            const double h = std::ldexp(1.0, -l);
            const long jmax = static_cast<long>(t_max / h);
            for (long j = -jmax; j <= jmax; ++j) {
                if (l > 0 && j % 2 == 0) continue;
                levels_[l].push_back(make(j * h));
            }
        }
    }
    const std::vector<Node>& level(int l) const { return levels_[l]; }

private:
    static Node make(double t) {
        const double u = 0.5 * std::numbers::pi * std::sinh(t);
        const double q = std::exp(-2.0 * std::fabs(u));
        const double y = u >= 0 ? 1.0 / (1.0 + q) : q / (1.0 + q);
        const double w = std::numbers::pi * std::cosh(t) * q / ((1.0 + q) * (1.0 + q));
        return {y, w};
    }
    std::vector<std::vector<Node>> levels_;
};

const NodeTable& nodes() {
    static const NodeTable table;
    return table;
}

void check_spec(const QuadratureSpec& spec) {
    if (!(spec.kappa > -0.5)) throw DomainError("quadrature: kappa must exceed -1/2");
    if (!(spec.x_max > 0.0)) throw DomainError("quadrature: x_max must be positive");
}

bool within(double diff, double value, const QuadratureSpec& spec) {
    return std::fabs(diff) <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(value));
}

}  // namespace

double gaussian_cutoff(double kappa, double s, double abs_tol) {
    const double target = std::log(abs_tol / 10.0);
    auto excess = [&](double x) { return -s * x * x + (2.0 * kappa + 2.0) * std::log(x) - target; };
    double lo = std::sqrt(std::max(kappa + 1.0, 0.5) / s);
    double hi = 2.0 * lo + 1.0;
    while (excess(hi) >= 0.0) hi *= 2.0;
    if (excess(lo) < 0.0) return lo;
    for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) >= 0.0 ? lo : hi) = mid;
    }
    return hi;
}

QuadratureSpec QuadratureSpec::gaussian(double kappa, double s, int degree, double abs_tol, double rel_tol) {
    QuadratureSpec spec;
    spec.kappa = kappa;
    spec.abs_tol = abs_tol;
    spec.rel_tol = rel_tol;
    // Beyond the turning point of the highest polynomial the tail is Gaussian.
    spec.x_max = gaussian_cutoff(kappa, s, abs_tol) + std::sqrt(std::max(degree, 0) / s);
    return spec;
}

std::vector<double> inner_weighted_levels(const Integrand& f, const Integrand& g, const QuadratureSpec& spec) {
    check_spec(spec);
    const double X = spec.x_max;
    auto integrand = [&](const Node& n) {
        const double x = X * n.y;
        if (x <= 0.0) return 0.0;
        return f.eval(x) * g.eval(x) * std::pow(x, 2.0 * spec.kappa) * X * n.w;
    };
    std::vector<double> history;
    double sum = 0.0;
    for (int l = 0; l <= max_level; ++l) {
        for (const Node& n : nodes().level(l)) sum += integrand(n);
        const double est = std::ldexp(sum, -l);
        history.push_back(est);
        if (l >= min_level && within(est - history[l - 1], est, spec)) return history;
    }
    throw NonConvergence("tanh-sinh quadrature did not converge within the level cap");
}

double inner_weighted(const Integrand& f, const Integrand& g, const QuadratureSpec& spec) {
    check_spec(spec);
    if (!spec.half_line && f.parity != g.parity) return 0.0;
    const double half = inner_weighted_levels(f, g, spec).back();
    return spec.half_line ? half : 2.0 * half;
}

std::vector<double> inner_weighted_matrix(const IntegrandFamily& f, const IntegrandFamily& g,
                                          const QuadratureSpec& spec) {
    check_spec(spec);
    const int nf = f.size, ng = g.size;
    std::vector<char> active(static_cast<std::size_t>(nf) * ng, 1);
    if (!spec.half_line)
        for (int i = 0; i < nf; ++i)
            for (int j = 0; j < ng; ++j) active[i * ng + j] = f.parity(i) == g.parity(j);

    const double X = spec.x_max;
    std::vector<double> sum(active.size(), 0.0), prev(active.size(), 0.0), est(active.size(), 0.0);
    std::vector<double> fv, gv;
    for (int l = 0; l <= max_level; ++l) {
        for (const Node& n : nodes().level(l)) {
            const double x = X * n.y;
            if (x <= 0.0) continue;
            const double w = std::pow(x, 2.0 * spec.kappa) * X * n.w;
            if (w == 0.0) continue;
            f.eval(x, fv);
            g.eval(x, gv);
            for (int i = 0; i < nf; ++i) {
                const double fw = fv[i] * w;
                if (fw == 0.0) continue;
                double* row = &sum[static_cast<std::size_t>(i) * ng];
                const char* act = &active[static_cast<std::size_t>(i) * ng];
                for (int j = 0; j < ng; ++j)
                    if (act[j]) row[j] += fw * gv[j];
            }
        }
        bool done = l >= min_level;
        for (std::size_t e = 0; e < sum.size(); ++e) {
            est[e] = std::ldexp(sum[e], -l);
            if (done && active[e] && !within(est[e] - prev[e], est[e], spec)) done = false;
        }
        if (done) {
            const double factor = spec.half_line ? 1.0 : 2.0;
            for (std::size_t e = 0; e < est.size(); ++e) est[e] = active[e] ? factor * est[e] : 0.0;
            return est;
        }
        prev = est;
    }
    throw NonConvergence("tanh-sinh quadrature did not converge within the level cap");
}

double gaussian_moment(double kappa, double s) {
    if (!(kappa > -0.5) || !(s > 0.0)) throw DomainError("gaussian_moment: needs kappa > -1/2 and s > 0");
    return std::exp(-0.5 * (2.0 * kappa + 1.0) * std::log(s) + log_gamma(kappa + 0.5));
}

}  // namespace dunkl
