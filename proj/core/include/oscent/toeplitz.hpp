#pragma once

#include <string>
#include <vector>

#include "oscent/sym_matrix.hpp"

namespace oscent::toeplitz {

enum class Lattice { full_line, half_line };

/// Infinite-volume limit of the truncated chain power, restricted to a
/// finite window. Full-line entries depend only on |j - k| (Toeplitz);
/// half-line entries are indexed by sites 1..size, stored 0-based.
struct LimitMatrix {
    Lattice lattice = Lattice::full_line;
    double alpha = 0.0;
    int size = 0;
    linalg::SymMatrix entries = linalg::SymMatrix(1);
};

/// Toeplitz coefficient of the full-line limit at the given distance:
/// 4^alpha int_0^1 sin^(2 alpha)(pi x/2) cos(d pi x) dx, adaptive quadrature
/// to absolute tolerance 1e-10. Requires alpha > -1/2; for alpha < 0 the
/// endpoint singularity is removed by an even-power substitution x = t^p
/// with p chosen so the transformed integrand vanishes at least linearly.
double full_line_coefficient(double alpha, int distance);

/// Half-line limit entry at sites j, k >= 1:
/// 2^(1+2 alpha) int_0^1 sin^(2 alpha)(pi x/2) sin(j pi x) sin(k pi x) dx.
/// Requires alpha >= -1/2; the sine factors regularize the endpoint.
double half_line_entry(double alpha, int j, int k);

LimitMatrix limit_matrix(Lattice lattice, double alpha, int size, int threads = 1);

/// Half-line entry at exponent 1/4 in closed form, sites j, k >= 1:
/// (ratio(j+k) - ratio(|j-k|)) / (2 sqrt(2 pi)) with
/// ratio(l) = Gamma(l - 1/4)/Gamma(l + 5/4) from the recursion seed.
double closed_form_R(int j, int k);

/// Half-line entry at exponent -1/2 in closed form, sites j, k >= 1:
/// (1/pi) sum_{l=|j-k|+1}^{j+k} 2/(2l-1), evaluated as the exact finite sum.
double closed_form_S(int j, int k);

/// Closed-form matrices over sites 1..n, stored 0-based.
linalg::SymMatrix r_matrix(int n);
linalg::SymMatrix s_matrix(int n);

/// Fourier coefficient of the log of the symbol |2 sin(x/2)|^(2 alpha):
/// 0 for k = 0 and -alpha/k for k >= 1. Requires alpha > -1/2.
double log_symbol_coefficient(double alpha, int k);

/// Log determinants of Toeplitz truncations against the partial sums
/// sum_{k=1}^{n} k c_k^2 = alpha^2 H_n that drive their growth.
struct SzegoReport {
    double alpha = 0.0;
    std::vector<int> sizes;
    std::vector<double> log_dets;        // NaN where the truncation is not PD
    std::vector<double> partial_sums;
    std::vector<char> positive_definite; // aligned with sizes
    double g_constant = 0.0;             // exp of the k = 0 log-symbol coefficient
};

SzegoReport szego_scan(double alpha, const std::vector<int>& sizes, int threads = 1);

/// One verdict of the closed-form property suite. The margin is the smallest
/// slack observed over all checked index pairs; negative means violated.
struct PropertyCheck {
    std::string name;
    bool passed = false;
    double margin = 0.0;
};

struct RsPropertyReport {
    int n = 0;
    std::vector<PropertyCheck> checks;
    bool all_passed = false;
};

/// Property suite on the n x n closed-form matrices: sign pattern and
/// uniform bound of r, near-diagonal monotonicity, column-sum inequality,
/// logarithmic bounds on s from both sides, last-column monotonicity.
RsPropertyReport rs_property_suite(int n);

/// Same suite on supplied matrices, for fault injection.
RsPropertyReport rs_property_suite_on(const linalg::SymMatrix& r, const linalg::SymMatrix& s);

/// Explicit half-line lower bound at block size n: the diagonal element
/// (r s r)_nn dominates (1/pi) r(2,1)^2 log(4n - 3), and half the log of that
/// floor bounds the entropy from below.
struct HalflineLowerBound {
    int n = 0;
    double bound = 0.0;         // 0.5 log(element_floor); -inf when vacuous
    double element_floor = 0.0; // (1/pi) r(2,1)^2 log(4n-3)
    double exact_element = 0.0; // sum_{j,k=1}^{n} r(n,j) s(j,k) r(k,n)
    bool vacuous = false;       // element_floor <= 0: no outer log available
};

HalflineLowerBound ordered_lower_bound_halfline(int n);

/// Row-sum floor on the smallest eigenvalue of the n x n full-line limit at
/// exponent 1/2: 4/pi - (2/pi) sum_{l=1}^{n} 1/(l^2 - 1/4).
double gershgorin_floor(int n);

} // namespace oscent::toeplitz
