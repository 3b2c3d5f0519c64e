#pragma once

#include <vector>

namespace dunkl {

// Weight exponent and oscillator scale of a generalized Hermite basis.
// With sigma in (-3/2, -1/2] only the odd functions exist.
class BasisParams {
public:
    BasisParams(double sigma, double s);

    double sigma() const { return sigma_; }
    double s() const { return s_; }
    bool full() const { return sigma_ > -0.5; }
    bool admits(int k) const { return k >= 0 && (full() || k % 2 == 1); }

private:
    double sigma_;
    double s_;
};

constexpr int max_basis_index = 10000;

struct HermiteValue {
    int k;
    double x;
    double p_value;
    double phi_value;
};

double hermite_p(const BasisParams& params, int k, double x);
double phi(const BasisParams& params, int k, double x);
HermiteValue hermite_value(const BasisParams& params, int k, double x);

// phi_0(x), ..., phi_kmax(x) in one recursion pass; for an odd-sector basis
// the even entries are set to zero.
std::vector<double> phi_all(const BasisParams& params, int kmax, double x);

struct ValueAndDerivative {
    double value;
    double derivative;
};

// p_k and p_k' from the differentiated three-term recursion.
ValueAndDerivative hermite_p_d(const BasisParams& params, int k, double x);
ValueAndDerivative phi_d(const BasisParams& params, int k, double x);

// The Dunkl operator applied to phi_k: d/dx on even k, d/dx + 2 sigma / x on odd k.
double dunkl_T_phi(const BasisParams& params, int k, double x);

enum class LadderDirection { annihilate, create };

// kappa_k with B phi_k = kappa_k phi_{k-1} and B' phi_{k-1} = kappa_k phi_k.
double ladder_coeff(const BasisParams& params, int k, LadderDirection direction);

// a_0..a_m with x^{-1} p_k = sum_i a_i p_{2i}, k = 2m+1.
std::vector<double> xinv_coeffs(const BasisParams& params, int k);

}  // namespace dunkl
