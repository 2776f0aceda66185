#include "oscent/special.hpp"

#include <cmath>

#include "oscent/errors.hpp"

namespace oscent::special {

namespace {

constexpr double pi = 3.14159265358979323846;

double seed_ratio() {
    const double gamma_five_quarters = std::tgamma(1.25);
    return -pi * std::sqrt(2.0) / (gamma_five_quarters * gamma_five_quarters);
}

} // namespace

double gamma_quarter_ratio(int l) {
    if (l < 0) {
        throw DomainError("gamma ratio index must be nonnegative");
    }
    double ratio = seed_ratio();
    for (int m = 0; m < l; ++m) {
        ratio *= (m - 0.25) / (m + 1.25);
    }
    return ratio;
}

std::vector<double> gamma_quarter_ratio_table(int l_max) {
    if (l_max < 0) {
        throw DomainError("gamma ratio index must be nonnegative");
    }
    std::vector<double> table(static_cast<size_t>(l_max) + 1);
    table[0] = seed_ratio();
    for (int m = 0; m < l_max; ++m) {
        // Quotient first, mirroring gamma_quarter_ratio, so both entry points
        // return bit-identical values.
        table[static_cast<size_t>(m) + 1] =
            table[static_cast<size_t>(m)] * ((m - 0.25) / (m + 1.25));
    }
    return table;
}

std::vector<double> odd_harmonic_table(int m_max) {
    if (m_max < 0) {
        throw DomainError("odd harmonic index must be nonnegative");
    }
    std::vector<double> table(static_cast<size_t>(m_max) + 1);
    table[0] = 0.0;
    for (int l = 1; l <= m_max; ++l) {
        table[static_cast<size_t>(l)] = table[static_cast<size_t>(l) - 1] + 2.0 / (2.0 * l - 1.0);
    }
    return table;
}

double harmonic_number(int n) {
    if (n < 0) {
        throw DomainError("harmonic number index must be nonnegative");
    }
    double sum = 0.0;
    for (int k = 1; k <= n; ++k) {
        sum += 1.0 / k;
    }
    return sum;
}

double digamma_half_integer(int m) {
    if (m < 0) {
        throw DomainError("digamma half-integer index must be nonnegative");
    }
    double sum = 0.0;
    for (int l = 1; l <= m; ++l) {
        sum += 2.0 / (2.0 * l - 1.0);
    }
    return -euler_mascheroni - 2.0 * std::log(2.0) + sum;
}

} // namespace oscent::special
