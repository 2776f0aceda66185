#include "oscent/covariance.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "json.hpp"

#include "oscent/errors.hpp"

namespace oscent::gaussian {

namespace {

std::vector<double> block_spectrum_raw(const linalg::SymMatrix& qq,
                                       const linalg::SymMatrix& pp) {
    if (qq.dim() != pp.dim()) {
        throw DimensionError("covariance blocks must share a dimension");
    }
    const linalg::SymMatrix qq_half = linalg::matrix_power(qq, 0.5);
    const linalg::SymMatrix core = linalg::sandwich(qq_half, pp);
    const auto eig = linalg::sym_eigen(core);
    std::vector<double> gamma(eig.eigenvalues.size());
    for (size_t i = 0; i < gamma.size(); ++i) {
        gamma[i] = std::sqrt(std::max(eig.eigenvalues[i], 0.0));
    }
    return gamma;
}

std::vector<double> williamson_spectrum_raw(const CovarianceMatrix& cov,
                                            const Tolerances& tol) {
    const linalg::SymMatrix gamma_full = cov.full();
    const int two_n = gamma_full.dim();
    const int n = two_n / 2;
    const linalg::SymMatrix half = linalg::matrix_power(gamma_full, 0.5);

    // j_half = J * half, with J = [[0, I], [-I, 0]] in position/momentum order.
    std::vector<double> j_half(static_cast<size_t>(two_n) * two_n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < two_n; ++j) {
            j_half[static_cast<size_t>(i) * two_n + j] = half(i + n, j);
            j_half[static_cast<size_t>(i + n) * two_n + j] = -half(i, j);
        }
    }
    // k = half * j_half is antisymmetric; m = k k^T = -k^2 is symmetric PSD
    // with each squared symplectic eigenvalue appearing twice.
    std::vector<double> k(static_cast<size_t>(two_n) * two_n, 0.0);
    for (int i = 0; i < two_n; ++i) {
        for (int l = 0; l < two_n; ++l) {
            const double hil = half(i, l);
            if (hil == 0.0) {
                continue;
            }
            const double* row = j_half.data() + static_cast<size_t>(l) * two_n;
            double* out = k.data() + static_cast<size_t>(i) * two_n;
            for (int j = 0; j < two_n; ++j) {
                out[j] += hil * row[j];
            }
        }
    }
    std::vector<double> m(static_cast<size_t>(two_n) * two_n, 0.0);
    for (int i = 0; i < two_n; ++i) {
        const double* ki = k.data() + static_cast<size_t>(i) * two_n;
        for (int j = 0; j <= i; ++j) {
            const double* kj = k.data() + static_cast<size_t>(j) * two_n;
            double s = 0.0;
            for (int l = 0; l < two_n; ++l) {
                s += ki[l] * kj[l];
            }
            m[static_cast<size_t>(i) * two_n + j] = s;
            m[static_cast<size_t>(j) * two_n + i] = s;
        }
    }
    const auto eig = linalg::sym_eigen(linalg::SymMatrix::from_row_major(two_n, m));

    std::vector<double> gamma(n);
    for (int i = 0; i < n; ++i) {
        const double a = eig.eigenvalues[2 * i];
        const double b = eig.eigenvalues[2 * i + 1];
        const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
        if (std::abs(a - b) > tol.pair_tol * scale) {
            throw ConsistencyError(
                "squared-form eigenvalues do not pair up: " + std::to_string(a) + " vs " +
                std::to_string(b));
        }
        gamma[i] = std::sqrt(std::max(0.5 * (a + b), 0.0));
    }
    return gamma;
}

std::vector<double> clamp_spectrum(std::vector<double> gamma, const Tolerances& tol) {
    std::sort(gamma.begin(), gamma.end());
    for (double& g : gamma) {
        if (g >= 1.0) {
            continue;
        }
        if (g >= 1.0 - tol.spectrum_tol) {
            g = 1.0;
        } else {
            throw UncertaintyError("symplectic eigenvalue " + std::to_string(g) +
                                       " violates the uncertainty bound",
                                   g);
        }
    }
    return gamma;
}

} // namespace

CovarianceMatrix CovarianceMatrix::from_blocks(linalg::SymMatrix qq, linalg::SymMatrix pp) {
    if (qq.dim() != pp.dim()) {
        throw DimensionError("covariance blocks must share a dimension");
    }
    if (!linalg::is_positive_definite(qq) || !linalg::is_positive_definite(pp)) {
        throw DomainError("covariance blocks must be positive definite");
    }
    CovarianceMatrix cov;
    cov.modes_ = qq.dim();
    cov.block_diagonal_ = true;
    cov.qq_ = std::move(qq);
    cov.pp_ = std::move(pp);
    return cov;
}

CovarianceMatrix CovarianceMatrix::from_full(linalg::SymMatrix full) {
    if (full.dim() % 2 != 0) {
        throw DimensionError("full covariance needs even dimension");
    }
    if (!linalg::is_positive_definite(full)) {
        throw DomainError("covariance must be positive definite");
    }
    CovarianceMatrix cov;
    cov.modes_ = full.dim() / 2;
    cov.block_diagonal_ = false;
    cov.full_ = std::move(full);
    return cov;
}

const linalg::SymMatrix& CovarianceMatrix::qq() const {
    if (!block_diagonal_) {
        throw DomainError("covariance is not stored in block form");
    }
    return qq_;
}

const linalg::SymMatrix& CovarianceMatrix::pp() const {
    if (!block_diagonal_) {
        throw DomainError("covariance is not stored in block form");
    }
    return pp_;
}

linalg::SymMatrix CovarianceMatrix::full() const {
    if (!block_diagonal_) {
        return full_;
    }
    linalg::SymMatrix out(2 * modes_);
    for (int i = 0; i < modes_; ++i) {
        for (int j = i; j < modes_; ++j) {
            out.set(i, j, qq_(i, j));
            out.set(i + modes_, j + modes_, pp_(i, j));
        }
    }
    return out;
}

namespace {

nlohmann::ordered_json matrix_rows(const linalg::SymMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.dim(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.dim(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::string covariance_snapshot_json(const CovarianceMatrix& cov) {
    nlohmann::ordered_json j;
    j["modes"] = cov.modes();
    if (cov.is_block_diagonal()) {
        j["form"] = "blocks";
        j["qq"] = matrix_rows(cov.qq());
        j["pp"] = matrix_rows(cov.pp());
    } else {
        j["form"] = "full";
        j["full"] = matrix_rows(cov.full());
    }
    return j.dump();
}

CovarianceMatrix ground_state_covariance(const model::OscillatorSystem& sys) {
    const linalg::SymMatrix h = model::one_particle_operator(sys);
    const auto h_eig = linalg::sym_eigen(h);
    const linalg::SymMatrix h_inv_half = linalg::apply_power(h_eig, -0.5);
    const linalg::SymMatrix h_half = linalg::apply_power(h_eig, 0.5);

    const auto hp_eig = linalg::sym_eigen(sys.hp);
    const linalg::SymMatrix hp_half = linalg::apply_power(hp_eig, 0.5);
    const linalg::SymMatrix hp_inv_half = linalg::apply_power(hp_eig, -0.5);

    linalg::SymMatrix qq = linalg::sandwich(hp_half, h_inv_half);
    linalg::SymMatrix pp = linalg::sandwich(hp_inv_half, h_half);

    const std::vector<double> product = linalg::multiply_raw(pp, qq);
    const int n = qq.dim();
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double expected = (i == j) ? 1.0 : 0.0;
            residual = std::max(
                residual, std::abs(product[static_cast<size_t>(i) * n + j] - expected));
        }
    }
    if (residual > 1e-9) {
        throw ConsistencyError(
            "ground-state blocks are not inverse to each other; residual " +
            std::to_string(residual));
    }
    return CovarianceMatrix::from_blocks(std::move(qq), std::move(pp));
}

CovarianceMatrix truncate(const CovarianceMatrix& cov, const model::Region& region) {
    if (region.parent_size() != cov.modes()) {
        throw BipartitionError("region parent size does not match the covariance");
    }
    if (region.is_full()) {
        return cov;
    }
    if (cov.is_block_diagonal()) {
        return CovarianceMatrix::from_blocks(linalg::submatrix(cov.qq(), region.indices()),
                                             linalg::submatrix(cov.pp(), region.indices()));
    }
    std::vector<int> doubled = region.indices();
    for (int idx : region.indices()) {
        doubled.push_back(idx + cov.modes());
    }
    return CovarianceMatrix::from_full(linalg::submatrix(cov.full(), doubled));
}

SymplecticSpectrum symplectic_spectrum_williamson(const CovarianceMatrix& cov,
                                                  const Tolerances& tol) {
    return {clamp_spectrum(williamson_spectrum_raw(cov, tol), tol)};
}

SymplecticSpectrum symplectic_spectrum_block(const linalg::SymMatrix& qq,
                                             const linalg::SymMatrix& pp,
                                             const Tolerances& tol) {
    return {clamp_spectrum(block_spectrum_raw(qq, pp), tol)};
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cov, const Tolerances& tol) {
    if (cov.is_block_diagonal()) {
        return symplectic_spectrum_block(cov.qq(), cov.pp(), tol);
    }
    return symplectic_spectrum_williamson(cov, tol);
}

std::vector<double> symplectic_spectrum_raw(const CovarianceMatrix& cov,
                                            const Tolerances& tol) {
    std::vector<double> gamma = cov.is_block_diagonal()
                                    ? block_spectrum_raw(cov.qq(), cov.pp())
                                    : williamson_spectrum_raw(cov, tol);
    std::sort(gamma.begin(), gamma.end());
    return gamma;
}

bool check_uncertainty(const CovarianceMatrix& cov, const Tolerances& tol) {
    const std::vector<double> gamma = symplectic_spectrum_raw(cov, tol);
    return gamma.front() >= 1.0 - tol.spectrum_tol;
}

} // namespace oscent::gaussian
