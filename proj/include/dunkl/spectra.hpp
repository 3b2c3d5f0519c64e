#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/eigen.hpp"
#include "dunkl/fits.hpp"

namespace dunkl {

enum class OperatorKind { U, V, P, Q, W, WittenLen1, WittenLen2 };

std::string to_string(OperatorKind kind);
OperatorKind operator_kind_from_string(const std::string& name);

// Union of the parameters of every operator kind; each kind reads its own.
//   U: sigma, u, xi, s                      V: sigma, tau, theta, u, xi, eta, s
//   P: c1, c2, a, u, xi, s (sigma = a + c1) Q: d1, d2, b, u, xi, s (tau = b + d1)
//   W: c1, c2, d1, d2, a, b, theta, u, xi, eta, s
//   WittenLen1 / WittenLen2: kappa, u, s, mu, sign
// `order` is the number of basis functions of the operator's own space:
// full-line indices 0..order-1 for U/V/W, half-line functions for P/Q.
// Constant shifts are added to the diagonal by global parity.
struct OperatorSpec {
    OperatorKind kind = OperatorKind::U;
    int order = 256;
    double sigma = 0.0, tau = 0.0, theta = 0.0;
    double u = 0.5, xi = 0.0, eta = 0.0, s = 1.0;
    double c1 = 0.0, c2 = 0.0, d1 = 0.0, d2 = 0.0;
    double a = 0.0, b = 0.0;
    double kappa = 0.0, mu = 0.0;
    int sign = +1;  // +1 selects the upper sign of the shifts
    double shift_even = 0.0, shift_odd = 0.0;

    // Exponent of the even (sigma) and odd (tau) basis this kind works in.
    double even_exponent() const;
    double odd_exponent() const;
};

// Throws DomainError / HypothesisFailure when the kind's invariants fail.
void validate(const OperatorSpec& spec);

Matrix assemble_U(const OperatorSpec& spec);
Matrix assemble_V(const OperatorSpec& spec);
// Dispatches on kind (U, V, P, Q, W); Witten kinds go through witten_build.
Matrix assemble(const OperatorSpec& spec);

// Full-line index of the i-th basis function of the assembled matrix.
int global_index(const OperatorSpec& spec, int i);

// (2k+1+2 varsigma_k)s plus the block shift, k = global_index(spec, i).
double unperturbed_eigenvalue(const OperatorSpec& spec, int i);

constexpr double parity_tie_tol = 1e-6;
constexpr double ritz_converged_tol = 1e-8;

struct RitzResult {
    OperatorKind kind = OperatorKind::U;
    int N = 0;
    std::vector<double> eigenvalues;           // ascending
    std::vector<std::string> parity_labels;    // "even", "odd" or "tie"
    std::vector<double> even_share;            // eigenvector mass on even indices
    std::vector<double> convergence;           // |lambda_k(N) - lambda_k(N/2)|, k <= N/4
    std::vector<bool> converged;               // relative change below ritz_converged_tol
    int sweeps = 0;
    double max_residual = 0.0;

    int converged_count() const;
};

RitzResult ritz_solve(const OperatorSpec& spec);
// One result per N, each compared against order N/2 (computed if not listed).
std::vector<RitzResult> ritz_spectrum(const OperatorSpec& spec, const std::vector<int>& orders);

struct BoundCheck {
    std::string name;
    bool passed = true;
    bool vacuous = false;
    int checked = 0;
    int violations = 0;
    int worst_k = -1;
    double worst_margin = 0.0;  // min over checked k of (rhs - lhs) for <=, (lhs - rhs) for >=
};

// Which indices enter a sandwich check.
enum class SandwichScope { reported, converged };

struct SandwichReport {
    int N = 0;
    double epsilon = 0.0;
    bool unperturbed = false;
    SandwichScope scope = SandwichScope::reported;
    int evaluated_count = 0;
    int converged_count = 0;
    double lower_constant = 0.0;    // D-hat
    double form_constant = 0.0;     // C-hat
    double coupling_constant = 0.0; // E-hat (V only)
    double working_lower_constant = 0.0;  // min_k gap_k (k+1)^u / (xi s^u)
    double gap_slope = 0.0;
    int slope_lo = 0, slope_hi = 0;
    std::vector<BoundCheck> checks;

    bool passed() const;
};

constexpr int default_form_trials = 200;

SandwichReport sandwich_check_U(const OperatorSpec& spec, const RitzResult& ritz, double epsilon,
                                SandwichScope scope = SandwichScope::reported,
                                int trials = default_form_trials, std::uint64_t seed = default_fit_seed);

// Groups eigenvalues by eigenvector parity; the j-th member of the even group
// is lambda_{2j}, of the odd group lambda_{2j+1}. Checks are prefixed "even:"
// and "odd:".
SandwichReport sandwich_check_V(const OperatorSpec& spec, const RitzResult& ritz, double epsilon,
                                SandwichScope scope = SandwichScope::reported,
                                int trials = default_form_trials, std::uint64_t seed = default_fit_seed);

struct IndicialRoot {
    double root;
    double exponent;  // a + c1 or b + d1
    bool admissible;
};

// Both roots of a^2 + (2c1-1)a - c2 = 0 (P) or b^2 + (2d1+1)b - d2 = 0 (Q),
// larger root first. Throws DomainError for a negative discriminant.
std::vector<IndicialRoot> halfline_reduce(OperatorKind kind, double coef1, double coef2, double u);

struct WittenComponent {
    std::string name;  // Delta_r-1, Delta_r, Delta_r+1
    int row = 0;       // table row, 1-based
    std::string condition;
    bool admissible = false;
    OperatorSpec spec;
};

struct WittenModel {
    int length = 1;
    double kappa = 0.0, u = 0.5, s = 1.0, mu = 0.0;
    int sign = +1;
    std::vector<WittenComponent> components;  // every table row, admissible or not
};

// From a WittenLen1 / WittenLen2 spec; spec.order is the full-line order.
// Throws HypothesisFailure when some component has no admissible row.
WittenModel witten_build(const OperatorSpec& spec);

struct WittenComponentSpectrum {
    std::string name;
    int row = 0;
    std::optional<RitzResult> ritz;  // empty when not computed
    std::string status;              // "ok", "inadmissible" or the error text
};

std::vector<WittenComponentSpectrum> witten_spectrum(const WittenModel& model, int order);

struct PairingReport {
    int lower_row = 0, middle_row = 0;
    bool exponent_match = false;  // same leading power on the even block
    int compared = 0;
    int converged_compared = 0;
    double max_mismatch = 0.0;            // relative, over k <= N/4
    double max_converged_mismatch = 0.0;  // relative, over converged modes
    int worst_k = -1;
};

// Nonzero eigenvalues of Delta_r-1 rows against the nearest eigenvalue of
// Delta_r rows (length two only).
std::vector<PairingReport> witten_pairing(const std::vector<WittenComponentSpectrum>& spectra);

}  // namespace dunkl
