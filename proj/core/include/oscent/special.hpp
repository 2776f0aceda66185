#pragma once

#include <vector>

namespace oscent::special {

/// Euler-Mascheroni constant, 20 digits.
inline constexpr double euler_mascheroni = 0.57721566490153286061;

/// Gamma(l - 1/4) / Gamma(l + 5/4) for integer l >= 0, by upward recursion
/// ratio(l+1) = ratio(l) (l - 1/4)/(l + 5/4) from the reflection-formula seed
/// ratio(0) = Gamma(-1/4)/Gamma(5/4) = -pi sqrt(2)/Gamma(5/4)^2. No large
/// Gamma value is ever formed, so there is no overflow for large l.
double gamma_quarter_ratio(int l);

/// ratio(0), ..., ratio(l_max) in one pass.
std::vector<double> gamma_quarter_ratio_table(int l_max);

/// Partial sums of the odd harmonic series: t(m) = sum_{l=1}^{m} 2/(2l-1),
/// with t(0) = 0. Returns t(0), ..., t(m_max).
std::vector<double> odd_harmonic_table(int m_max);

/// n-th harmonic number, 0 for n = 0.
double harmonic_number(int n);

/// Digamma at half-integers: psi(m + 1/2) for m >= 0, via
/// psi(1/2) = -gamma - 2 log 2 plus the odd harmonic sum.
double digamma_half_integer(int m);

} // namespace oscent::special
