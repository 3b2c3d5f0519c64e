#pragma once

#include <functional>
#include <vector>

namespace dunkl {

enum class Parity { even, odd };

inline Parity parity_of(int k) { return k % 2 == 0 ? Parity::even : Parity::odd; }

// A function on the line known through its values at x > 0 and its parity.
struct Integrand {
    std::function<double(double)> eval;
    Parity parity = Parity::even;
};

// A family of functions evaluated together at each node.
struct IntegrandFamily {
    int size = 0;
    std::function<void(double, std::vector<double>&)> eval;
    std::function<Parity(int)> parity;
};

struct QuadratureSpec {
    double kappa = 0.0;
    bool half_line = false;
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    double x_max = 0.0;

    // Integrands ~ polynomial of the given degree times exp(-s x^2).
    static QuadratureSpec gaussian(double kappa, double s, int degree = 0, double abs_tol = 1e-12,
                                   double rel_tol = 1e-10);
};

// Smallest x with exp(-s x^2) x^(2 kappa + 2) < abs_tol / 10.
double gaussian_cutoff(double kappa, double s, double abs_tol);

// int f g |x|^(2 kappa) dx over the line (or the half line).
double inner_weighted(const Integrand& f, const Integrand& g, const QuadratureSpec& spec);

// Successive level estimates of the half-line integral, one per halving of
// the step, up to and including the converged level.
std::vector<double> inner_weighted_levels(const Integrand& f, const Integrand& g, const QuadratureSpec& spec);

// All products <f_i, g_j>, row-major f.size x g.size.
std::vector<double> inner_weighted_matrix(const IntegrandFamily& f, const IntegrandFamily& g,
                                          const QuadratureSpec& spec);

double gaussian_moment(double kappa, double s);

}  // namespace dunkl
