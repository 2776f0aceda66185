#include "oscent/toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "oscent/eigen.hpp"
#include "oscent/errors.hpp"
#include "oscent/parallel.hpp"
#include "oscent/quadrature.hpp"
#include "oscent/special.hpp"

namespace oscent::toeplitz {

namespace {

constexpr double pi = 3.14159265358979323846;
constexpr double quad_tol = 1e-10;

double two_sqrt_two_pi() { return 2.0 * std::sqrt(2.0 * pi); }

void require_site(int j, const char* what) {
    if (j < 1) {
        throw DomainError(std::string(what) + " must be at least 1, got " + std::to_string(j));
    }
}

/// Even power for the endpoint substitution x = t^p on full-line integrals:
/// the integrand picks up a factor t^(p(2 alpha + 1) - 1), so p is raised
/// until that exponent reaches 1 and the panels settle. p = 2 suffices down
/// to alpha = -1/4; the cap keeps the compression of the oscillatory factor
/// near t = 1 bounded as alpha approaches -1/2.
int endpoint_power(double alpha) {
    const double needed = 2.0 / (2.0 * alpha + 1.0);
    int p = 2;
    while (p < needed && p < 128) {
        p += 2;
    }
    return p;
}

} // namespace

double full_line_coefficient(double alpha, int distance) {
    if (!(alpha > -0.5)) {
        throw DomainError("full-line exponent must exceed -1/2, got " + std::to_string(alpha));
    }
    if (distance < 0) {
        throw DomainError("coefficient distance must be nonnegative");
    }
    const double pref = std::pow(4.0, alpha);
    const double two_alpha = 2.0 * alpha;
    if (alpha < 0.0) {
        const int p = endpoint_power(alpha);
        const double beta = p * (two_alpha + 1.0) - 1.0;
        const double scale = p * pref * std::pow(0.5 * pi, two_alpha);
        return quadrature::integrate(
            [&](double t) {
                // sin^(2 alpha)(pi x / 2) is split into (pi x / 2)^(2 alpha)
                // times a bounded sinc power, so deep panels never hit the
                // 0 * inf that the raw product produces once t^p underflows.
                const double x = std::pow(t, p);
                const double u = 0.5 * pi * x;
                const double sinc = u > 0.0 ? std::sin(u) / u : 1.0;
                return scale * std::pow(t, beta) * std::pow(sinc, two_alpha) *
                       std::cos(distance * pi * x);
            },
            0.0, 1.0, quad_tol);
    }
    return quadrature::integrate(
        [&](double x) {
            return pref * std::pow(std::sin(0.5 * pi * x), two_alpha) *
                   std::cos(distance * pi * x);
        },
        0.0, 1.0, quad_tol);
}

double half_line_entry(double alpha, int j, int k) {
    if (!(alpha >= -0.5)) {
        throw DomainError("half-line exponent must be at least -1/2, got " +
                          std::to_string(alpha));
    }
    require_site(j, "half-line row");
    require_site(k, "half-line column");
    const double pref = std::pow(2.0, 1.0 + 2.0 * alpha);
    const double two_alpha = 2.0 * alpha;
    if (alpha < 0.0) {
        return quadrature::integrate(
            [&](double t) {
                const double x = t * t;
                return 2.0 * t * pref * std::pow(std::sin(0.5 * pi * x), two_alpha) *
                       std::sin(j * pi * x) * std::sin(k * pi * x);
            },
            0.0, 1.0, quad_tol);
    }
    return quadrature::integrate(
        [&](double x) {
            return pref * std::pow(std::sin(0.5 * pi * x), two_alpha) * std::sin(j * pi * x) *
                   std::sin(k * pi * x);
        },
        0.0, 1.0, quad_tol);
}

LimitMatrix limit_matrix(Lattice lattice, double alpha, int size, int threads) {
    if (size < 1) {
        throw DimensionError("limit matrix needs at least one site");
    }
    LimitMatrix out;
    out.lattice = lattice;
    out.alpha = alpha;
    out.size = size;

    if (lattice == Lattice::full_line) {
        std::vector<double> coeffs(static_cast<size_t>(size));
        detail::run_chunks(size, threads,
                           [&](int d) { coeffs[static_cast<size_t>(d)] = full_line_coefficient(alpha, d); });
        linalg::SymMatrix m(size);
        for (int i = 0; i < size; ++i) {
            for (int j = i; j < size; ++j) {
                m.set(i, j, coeffs[static_cast<size_t>(j - i)]);
            }
        }
        out.entries = m;
        return out;
    }

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(size) * (size + 1) / 2);
    for (int i = 0; i < size; ++i) {
        for (int j = i; j < size; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<double> values(pairs.size());
    detail::run_chunks(static_cast<int>(pairs.size()), threads, [&](int idx) {
        const auto [i, j] = pairs[static_cast<size_t>(idx)];
        values[static_cast<size_t>(idx)] = half_line_entry(alpha, i + 1, j + 1);
    });
    linalg::SymMatrix m(size);
    for (size_t idx = 0; idx < pairs.size(); ++idx) {
        m.set(pairs[idx].first, pairs[idx].second, values[idx]);
    }
    out.entries = m;
    return out;
}

double closed_form_R(int j, int k) {
    require_site(j, "row index");
    require_site(k, "column index");
    const auto table = special::gamma_quarter_ratio_table(j + k);
    return (table[static_cast<size_t>(j + k)] - table[static_cast<size_t>(std::abs(j - k))]) /
           two_sqrt_two_pi();
}

double closed_form_S(int j, int k) {
    require_site(j, "row index");
    require_site(k, "column index");
    double sum = 0.0;
    for (int l = std::abs(j - k) + 1; l <= j + k; ++l) {
        sum += 2.0 / (2.0 * l - 1.0);
    }
    return sum / pi;
}

linalg::SymMatrix r_matrix(int n) {
    if (n < 1) {
        throw DimensionError("matrix needs at least one site");
    }
    const auto table = special::gamma_quarter_ratio_table(2 * n);
    linalg::SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            m.set(i, j, (table[static_cast<size_t>(i + j + 2)] - table[static_cast<size_t>(j - i)]) /
                            two_sqrt_two_pi());
        }
    }
    return m;
}

linalg::SymMatrix s_matrix(int n) {
    if (n < 1) {
        throw DimensionError("matrix needs at least one site");
    }
    const auto table = special::odd_harmonic_table(2 * n);
    linalg::SymMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            m.set(i, j, (table[static_cast<size_t>(i + j + 2)] - table[static_cast<size_t>(j - i)]) / pi);
        }
    }
    return m;
}

double log_symbol_coefficient(double alpha, int k) {
    if (!(alpha > -0.5)) {
        throw DomainError("symbol exponent must exceed -1/2, got " + std::to_string(alpha));
    }
    if (k < 0) {
        throw DomainError("Fourier index must be nonnegative");
    }
    if (k == 0) {
        return 0.0;
    }
    return -alpha / k;
}

SzegoReport szego_scan(double alpha, const std::vector<int>& sizes, int threads) {
    SzegoReport report;
    report.alpha = alpha;
    report.sizes = sizes;
    report.g_constant = std::exp(log_symbol_coefficient(alpha, 0));
    if (sizes.empty()) {
        return report;
    }
    int max_size = 0;
    for (int n : sizes) {
        if (n < 1) {
            throw DimensionError("scan sizes must be at least 1");
        }
        max_size = std::max(max_size, n);
    }

    std::vector<double> coeffs(static_cast<size_t>(max_size));
    detail::run_chunks(max_size, threads,
                       [&](int d) { coeffs[static_cast<size_t>(d)] = full_line_coefficient(alpha, d); });

    report.log_dets.resize(sizes.size());
    report.partial_sums.resize(sizes.size());
    report.positive_definite.assign(sizes.size(), 1);
    for (size_t idx = 0; idx < sizes.size(); ++idx) {
        const int n = sizes[idx];
        linalg::SymMatrix m(n);
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                m.set(i, j, coeffs[static_cast<size_t>(j - i)]);
            }
        }
        try {
            report.log_dets[idx] = linalg::log_det_pos_def(m);
        } catch (const DomainError&) {
            report.log_dets[idx] = std::numeric_limits<double>::quiet_NaN();
            report.positive_definite[idx] = 0;
        }
        double partial = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double c = log_symbol_coefficient(alpha, k);
            partial += k * c * c;
        }
        report.partial_sums[idx] = partial;
    }
    return report;
}

RsPropertyReport rs_property_suite(int n) {
    if (n < 2) {
        throw DimensionError("property suite needs at least two sites");
    }
    return rs_property_suite_on(r_matrix(n), s_matrix(n));
}

RsPropertyReport rs_property_suite_on(const linalg::SymMatrix& r, const linalg::SymMatrix& s) {
    if (r.dim() != s.dim()) {
        throw DimensionError("property suite needs matrices of equal size");
    }
    const int n = r.dim();
    if (n < 2) {
        throw DimensionError("property suite needs at least two sites");
    }
    const double inf = std::numeric_limits<double>::infinity();
    RsPropertyReport report;
    report.n = n;

    {
        double margin = inf;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                margin = std::min(margin, i == j ? r(i, j) : -r(i, j));
                margin = std::min(margin, 2.0 * std::sqrt(2.0) - std::abs(r(i, j)));
            }
        }
        report.checks.push_back({"r-sign-and-bound", margin > 0.0, margin});
    }
    {
        double margin = inf;
        for (int m = 1; m + 1 < n; ++m) {
            margin = std::min(margin, r(m, m - 1) - r(m + 1, m));
        }
        report.checks.push_back({"r-near-diagonal-decreasing", margin > 0.0, margin});
    }
    {
        double margin = inf;
        for (int m = 2; m <= n; ++m) {
            double sum = 0.0;
            for (int i = 0; i + 1 < m; ++i) {
                sum += r(i, m - 1);
            }
            margin = std::min(margin, 2.0 * sum + r(m - 1, m - 1));
        }
        report.checks.push_back({"r-column-sum", margin >= 0.0, margin});
    }
    {
        double margin = inf;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int sj = i + 1;
                const int sk = j + 1;
                const double floor_log =
                    std::log((sj + sk + 0.5) / (std::abs(sj - sk) + 0.5)) / pi;
                margin = std::min(margin, s(i, j) - floor_log);
            }
        }
        report.checks.push_back({"s-lower-bound", margin > 0.0, margin});
    }
    {
        double margin = inf;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const int sj = i + 1;
                const int sk = j + 1;
                double cap = 0.0;
                if (sj == sk) {
                    cap = 2.0 / pi + std::log(4.0 * sj - 1.0) / pi;
                } else {
                    cap = std::log((sj + sk - 0.5) / (std::abs(sj - sk) - 0.5)) / pi;
                }
                margin = std::min(margin, cap - s(i, j));
            }
        }
        report.checks.push_back({"s-upper-bound", margin > 0.0, margin});
    }
    {
        double margin = inf;
        for (int i = 1; i < n; ++i) {
            margin = std::min(margin, s(i, n - 1) - s(i - 1, n - 1));
        }
        report.checks.push_back({"s-last-column-increasing", margin > 0.0, margin});
    }

    report.all_passed = true;
    for (const auto& check : report.checks) {
        report.all_passed = report.all_passed && check.passed;
    }
    return report;
}

HalflineLowerBound ordered_lower_bound_halfline(int n) {
    if (n < 2) {
        throw DomainError("half-line bound needs a block of at least two sites");
    }
    const auto ratios = special::gamma_quarter_ratio_table(2 * n);
    const auto odd = special::odd_harmonic_table(2 * n);

    HalflineLowerBound out;
    out.n = n;
    const double r21 = (ratios[3] - ratios[1]) / two_sqrt_two_pi();
    out.element_floor = r21 * r21 * std::log(4.0 * n - 3.0) / pi;
    out.vacuous = !(out.element_floor > 0.0);
    out.bound = out.vacuous ? -std::numeric_limits<double>::infinity()
                            : 0.5 * std::log(out.element_floor);

    std::vector<double> v(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        v[static_cast<size_t>(j - 1)] =
            (ratios[static_cast<size_t>(n + j)] - ratios[static_cast<size_t>(std::abs(n - j))]) /
            two_sqrt_two_pi();
    }
    double element = 0.0;
    for (int j = 1; j <= n; ++j) {
        double row = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double s_jk =
                (odd[static_cast<size_t>(j + k)] - odd[static_cast<size_t>(std::abs(j - k))]) / pi;
            row += s_jk * v[static_cast<size_t>(k - 1)];
        }
        element += v[static_cast<size_t>(j - 1)] * row;
    }
    out.exact_element = element;
    return out;
}

double gershgorin_floor(int n) {
    if (n < 1) {
        throw DimensionError("floor needs at least one site");
    }
    double sum = 0.0;
    for (int l = 1; l <= n; ++l) {
        sum += 1.0 / (static_cast<double>(l) * l - 0.25);
    }
    return 4.0 / pi - 2.0 * sum / pi;
}

} // namespace oscent::toeplitz
