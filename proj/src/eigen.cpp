#include "dunkl/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dunkl/errors.hpp"

namespace dunkl {

double Matrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::fabs(x));
    return m;
}

EigenResult eigen_sym(const Matrix& input) {
    const int n = input.size();
    const double scale = input.max_abs();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::fabs(input(i, j) - input(j, i)) > 1e-12 * scale)
                throw DomainError("eigen_sym: matrix is not symmetric");

    Matrix a = input;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (input(i, j) + input(j, i));
    Matrix v(n);
    for (int i = 0; i < n; ++i) v(i, i) = 1.0;

    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double floor = std::numeric_limits<double>::min() / eps;
    EigenResult out;
    bool done = n <= 1;
    while (!done) {
        if (out.sweeps >= jacobi_sweep_cap) throw NonConvergence("eigen_sym: Jacobi sweep cap reached");
        ++out.sweeps;
        done = true;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                // Negligible relative to the diagonal pair: drop it.
                if (std::fabs(apq) <= eps * std::sqrt(std::fabs(a(p, p) * a(q, q))) || std::fabs(apq) < floor) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                done = false;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });
    out.values.resize(n);
    out.vectors = Matrix(n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]);
        for (int k = 0; k < n; ++k) out.vectors(k, j) = v(k, order[j]);
    }

    double lam_max = 0.0;
    for (double x : out.values) lam_max = std::max(lam_max, std::fabs(x));
    for (int j = 0; j < n; ++j) {
        double r2 = 0.0;
        for (int i = 0; i < n; ++i) {
            double acc = -out.values[j] * out.vectors(i, j);
            for (int k = 0; k < n; ++k) acc += input(i, k) * out.vectors(k, j);
            r2 += acc * acc;
        }
        out.max_residual = std::max(out.max_residual, std::sqrt(r2) / std::max(lam_max, floor));
    }
    if (out.max_residual > 1e-10) throw NonConvergence("eigen_sym: residual above 1e-10 relative");
    return out;
}

}  // namespace dunkl
