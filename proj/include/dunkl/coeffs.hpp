#pragma once

#include <string>
#include <variant>
#include <vector>

namespace dunkl {

// Parameters of the form t(phi, psi) = <phi, psi>_{sigma-u}. When
// sigma <= u - 1/2 only odd indices are meaningful (needs sigma > u - 3/2).
class TParams {
public:
    TParams(double sigma, double u, double s);

    double sigma() const { return sigma_; }
    double u() const { return u_; }
    double s() const { return s_; }
    bool odd_sector() const { return odd_sector_; }
    bool admits(int k) const { return k >= 0 && (!odd_sector_ || k % 2 == 1); }

private:
    double sigma_, u_, s_;
    bool odd_sector_;
};

enum class MixedCase { all_equal, sigma_eq_theta, tau_eq_theta, theta_eq_tau_plus_1, generic };

std::string to_string(MixedCase c);

// Tolerance used to decide the equalities that select a closed form.
constexpr double case_equality_tol = 1e-12;

// Two basis exponents and a weight exponent; v = sigma + tau - 2 theta.
class MixedParams {
public:
    MixedParams(double sigma, double tau, double theta, double s);

    double sigma() const { return sigma_; }
    double tau() const { return tau_; }
    double theta() const { return theta_; }
    double s() const { return s_; }
    double v() const { return sigma_ + tau_ - 2.0 * theta_; }
    MixedCase case_tag() const;
    MixedParams with_s(double s) const { return MixedParams(sigma_, tau_, theta_, s); }

private:
    double sigma_, tau_, theta_, s_;
};

enum class Family { d, c, chat, cprime };
enum class Method { recursion, closed_form, quadrature };

std::string to_string(Family f);
std::string to_string(Method m);

struct CoeffMatrix {
    Family family;
    Method method;
    int order;
    std::vector<double> entries;  // row-major order x order
    std::variant<TParams, MixedParams> params;

    double at(int k, int l) const { return entries[static_cast<std::size_t>(k) * order + l]; }
};

double c00(const TParams& params);

// Pi_{k,l} for k >= l of equal parity.
double pi_factor(double sigma, int k, int l);

// Sigma_{k,l} for k >= l, k + l even, k < order, filled by its recursions.
class SigmaTable {
public:
    SigmaTable(double sigma, double u, int order);

    int order() const { return order_; }
    double at(int k, int l) const;

private:
    int order_;
    std::vector<double> values_;
};

SigmaTable sigma_table(double sigma, double u, int order);

double t_coeff_closed(const TParams& params, int k, int l);
CoeffMatrix t_matrix_closed(const TParams& params, int order);
CoeffMatrix t_matrix_recursive(const TParams& params, int order);
CoeffMatrix t_matrix_quadrature(const TParams& params, int order);

// d = c / c00 (normalized) from any c-family matrix.
CoeffMatrix normalized(const CoeffMatrix& c);

// chat_{k,l} = <phi_{sigma,k}, phi_{tau,l}>_theta.
double chat_coeff(const MixedParams& params, int k, int l);
CoeffMatrix chat_matrix_closed(const MixedParams& params, int order);
CoeffMatrix chat_matrix_quadrature(const MixedParams& params, int order);

// c'_{k,l} = <phi_{sigma,k}, x^{-1} phi_{tau,l}>_theta; nonzero only for k even, l odd.
double cprime_coeff(const MixedParams& params, int k, int l);
CoeffMatrix cprime_matrix_closed(const MixedParams& params, int order);
CoeffMatrix cprime_matrix_quadrature(const MixedParams& params, int order);

// Gamma(p+1+t)/p! == t sum_{i<=p} Gamma(i+t)/i! to rel 1e-11; false at poles.
bool telescope_check(double t, int p);

}  // namespace dunkl
