#include "oscent/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>

#include "oscent/errors.hpp"

namespace oscent::linalg {

namespace {

double max_off_diagonal(const std::vector<double>& a, int n) {
    double off = 0.0;
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            off = std::max(off, std::abs(a[static_cast<size_t>(p) * n + q]));
        }
    }
    return off;
}

std::vector<double> checked_powers(const std::vector<double>& w, double alpha, double floor) {
    const bool integral = (alpha == std::floor(alpha));
    std::vector<double> p(w.size());
    for (size_t k = 0; k < w.size(); ++k) {
        double x = w[k];
        if (alpha < 0.0 && x <= floor) {
            throw SingularMatrixError(
                "negative matrix power requested but smallest eigenvalue " +
                    std::to_string(x) + " is at or below the floor " + std::to_string(floor),
                x);
        }
        if (!integral && alpha > 0.0 && x < 0.0) {
            if (x < -floor) {
                throw DomainError("fractional matrix power of a matrix with eigenvalue " +
                                  std::to_string(x) + " below zero");
            }
            x = 0.0;
        }
        p[k] = scalar_power(x, alpha);
    }
    return p;
}

} // namespace

double scalar_power(double x, double alpha) {
    if (alpha == 1.0) return x;
    if (alpha == -1.0) return 1.0 / x;
    if (alpha == 0.5) return std::sqrt(x);
    if (alpha == -0.5) return 1.0 / std::sqrt(x);
    if (alpha == 2.0) return x * x;
    if (alpha == 0.25) return std::sqrt(std::sqrt(x));
    if (alpha == -0.25) return 1.0 / std::sqrt(std::sqrt(x));
    return std::pow(x, alpha);
}

EigenDecomposition sym_eigen(const SymMatrix& m) {
    const int n = m.dim();
    std::vector<double> a = m.data();
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        v[static_cast<size_t>(i) * n + i] = 1.0;
    }

    const double stop = jacobi_rel_tol * m.max_abs();
    double off = (n > 1) ? max_off_diagonal(a, n) : 0.0;
    int sweep = 0;
    while (off > stop) {
        if (sweep == jacobi_max_sweeps) {
            throw SolverError("Jacobi eigensolver did not converge in " +
                                  std::to_string(jacobi_max_sweeps) +
                                  " sweeps; off-diagonal residual " + std::to_string(off),
                              off);
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[static_cast<size_t>(p) * n + q];
                if (apq == 0.0) {
                    continue;
                }
                const double app = a[static_cast<size_t>(p) * n + p];
                const double aqq = a[static_cast<size_t>(q) * n + q];
                const double theta = 0.5 * (aqq - app) / apq;
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = ((theta >= 0.0) ? 1.0 : -1.0) /
                        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[static_cast<size_t>(p) * n + p] = app - t * apq;
                a[static_cast<size_t>(q) * n + q] = aqq + t * apq;
                a[static_cast<size_t>(p) * n + q] = 0.0;
                a[static_cast<size_t>(q) * n + p] = 0.0;

                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) {
                        continue;
                    }
                    const double arp = a[static_cast<size_t>(r) * n + p];
                    const double arq = a[static_cast<size_t>(r) * n + q];
                    const double np = arp - s * (arq + tau * arp);
                    const double nq = arq + s * (arp - tau * arq);
                    a[static_cast<size_t>(r) * n + p] = np;
                    a[static_cast<size_t>(p) * n + r] = np;
                    a[static_cast<size_t>(r) * n + q] = nq;
                    a[static_cast<size_t>(q) * n + r] = nq;
                }
                for (int r = 0; r < n; ++r) {
                    const double vrp = v[static_cast<size_t>(r) * n + p];
                    const double vrq = v[static_cast<size_t>(r) * n + q];
                    v[static_cast<size_t>(r) * n + p] = vrp - s * (vrq + tau * vrp);
                    v[static_cast<size_t>(r) * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
        ++sweep;
        off = max_off_diagonal(a, n);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return a[static_cast<size_t>(i) * n + i] < a[static_cast<size_t>(j) * n + j];
    });

    EigenDecomposition eig;
    eig.dim = n;
    eig.eigenvalues.resize(n);
    eig.eigenvectors.resize(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        eig.eigenvalues[k] = a[static_cast<size_t>(order[k]) * n + order[k]];
        for (int i = 0; i < n; ++i) {
            eig.eigenvectors[static_cast<size_t>(i) * n + k] =
                v[static_cast<size_t>(i) * n + order[k]];
        }
    }
    return eig;
}

SymMatrix apply_power(const EigenDecomposition& eig, double alpha, double floor) {
    const int n = eig.dim;
    if (floor < 0.0) {
        double wmax = 0.0;
        for (double w : eig.eigenvalues) {
            wmax = std::max(wmax, std::abs(w));
        }
        floor = power_floor_rel * wmax;
    }
    if (alpha == 0.0) {
        return SymMatrix::identity(n);
    }
    const std::vector<double> p = checked_powers(eig.eigenvalues, alpha, floor);

    std::vector<double> t(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            t[static_cast<size_t>(i) * n + k] =
                eig.eigenvectors[static_cast<size_t>(i) * n + k] * p[k];
        }
    }
    std::vector<double> out(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        const double* trow = t.data() + static_cast<size_t>(i) * n;
        double* orow = out.data() + static_cast<size_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            const double tik = trow[k];
            const double* vrow = eig.eigenvectors.data();
            for (int j = 0; j < n; ++j) {
                orow[j] += tik * vrow[static_cast<size_t>(j) * n + k];
            }
        }
    }
    return SymMatrix::from_row_major(n, out);
}

SymMatrix matrix_power(const SymMatrix& m, double alpha) {
    if (alpha == 0.0) {
        return SymMatrix::identity(m.dim());
    }
    if (m.is_diagonal()) {
        std::vector<double> d = m.diagonal_entries();
        double wmax = 0.0;
        for (double w : d) {
            wmax = std::max(wmax, std::abs(w));
        }
        const std::vector<double> p = checked_powers(d, alpha, power_floor_rel * wmax);
        return SymMatrix::diagonal(p);
    }
    return apply_power(sym_eigen(m), alpha);
}

double schatten_half_trace(const SymMatrix& m) {
    const EigenDecomposition eig = sym_eigen(m);
    double s = 0.0;
    for (double w : eig.eigenvalues) {
        s += std::sqrt(std::abs(w));
    }
    return s;
}

double schatten_half_quasinorm(const SymMatrix& m) {
    const double t = schatten_half_trace(m);
    return t * t;
}

double log_det_pos_def(const SymMatrix& m) {
    const EigenDecomposition eig = sym_eigen(m);
    double s = 0.0;
    for (double w : eig.eigenvalues) {
        if (w <= 0.0) {
            throw DomainError("log det requires a positive definite matrix; found eigenvalue " +
                              std::to_string(w));
        }
        s += std::log(w);
    }
    return s;
}

bool is_positive_definite(const SymMatrix& m) {
    const int n = m.dim();
    std::vector<double> l(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        double d = m(j, j);
        for (int k = 0; k < j; ++k) {
            d -= l[static_cast<size_t>(j) * n + k] * l[static_cast<size_t>(j) * n + k];
        }
        if (!(d > 0.0)) {
            return false;
        }
        const double ljj = std::sqrt(d);
        l[static_cast<size_t>(j) * n + j] = ljj;
        for (int i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (int k = 0; k < j; ++k) {
                s -= l[static_cast<size_t>(i) * n + k] * l[static_cast<size_t>(j) * n + k];
            }
            l[static_cast<size_t>(i) * n + j] = s / ljj;
        }
    }
    return true;
}

} // namespace oscent::linalg
