#pragma once

#include <vector>

namespace dunkl {

// Dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return a_; }
    double max_abs() const;

private:
    int n_ = 0;
    std::vector<double> a_;
};

struct EigenResult {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column j is the eigenvector of values[j]
    int sweeps = 0;
    double max_residual = 0.0;  // max_j |A v_j - lambda_j v_j| / max|lambda|
};

constexpr int jacobi_sweep_cap = 60;

// Cyclic Jacobi. Throws DomainError for asymmetric input (beyond 1e-12
// relative) and NonConvergence past the sweep cap.
EigenResult eigen_sym(const Matrix& a);

}  // namespace dunkl
