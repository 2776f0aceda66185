#include "doctest.h"

#include <cmath>
#include <vector>

#include "oscent/eigen.hpp"
#include "oscent/errors.hpp"
#include "oscent/rng.hpp"
#include "oscent/sym_matrix.hpp"

using namespace oscent;
using linalg::SymMatrix;

namespace {

SymMatrix random_symmetric(int dim, std::uint64_t stream) {
    SymMatrix m(dim);
    std::uint64_t index = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) m.set(i, j, rng::uniform(42, stream, index++) - 0.5);
    return m;
}

SymMatrix random_pos_def(int dim, std::uint64_t stream) {
    SymMatrix s = random_symmetric(dim, stream);
    SymMatrix m = linalg::sandwich(s, SymMatrix::identity(dim));
    for (int i = 0; i < dim; ++i) m.add(i, i, 0.5);
    return m;
}

double reconstruction_error(const SymMatrix& m, const linalg::EigenDecomposition& eig) {
    const int n = m.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double sum = 0.0;
            for (int k = 0; k < n; ++k)
                sum += eig.eigenvector(i, k) * eig.eigenvalues[k] * eig.eigenvector(j, k);
            worst = std::max(worst, std::abs(sum - m(i, j)));
        }
    }
    return worst;
}

double orthogonality_error(const linalg::EigenDecomposition& eig) {
    const int n = eig.dim;
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) dot += eig.eigenvector(i, k) * eig.eigenvector(i, l);
            worst = std::max(worst, std::abs(dot - (k == l ? 1.0 : 0.0)));
        }
    }
    return worst;
}

} // namespace

TEST_CASE("sym matrix construction and mirror writes") {
    SymMatrix m(3);
    CHECK(m.dim() == 3);
    CHECK(m.max_abs() == 0.0);

    m.set(0, 2, 1.5);
    CHECK(m(0, 2) == 1.5);
    CHECK(m(2, 0) == 1.5);

    m.add(0, 2, 0.5);
    CHECK(m(0, 2) == 2.0);
    CHECK(m(2, 0) == 2.0);

    m.add(1, 1, 3.0);
    CHECK(m(1, 1) == 3.0);

    SymMatrix id = SymMatrix::identity(2);
    CHECK(id(0, 0) == 1.0);
    CHECK(id(0, 1) == 0.0);
    CHECK(id.is_diagonal());

    SymMatrix d = SymMatrix::diagonal({2.0, 5.0});
    CHECK(d(1, 1) == 5.0);
    CHECK(d.diagonal_entries() == std::vector<double>{2.0, 5.0});

    // from_row_major symmetrizes as (m + m^T)/2
    SymMatrix f = SymMatrix::from_row_major(2, {1.0, 4.0, 2.0, 3.0});
    CHECK(f(0, 1) == 3.0);
    CHECK(f(1, 0) == 3.0);
    CHECK(f(1, 1) == 3.0);

    CHECK_THROWS_AS(SymMatrix::from_row_major(2, {1.0, 2.0, 3.0}), DimensionError);
    CHECK_THROWS_AS(SymMatrix(0), DimensionError);
}

TEST_CASE("sym matrix arithmetic helpers") {
    SymMatrix a = SymMatrix::from_row_major(2, {1.0, 2.0, 2.0, 3.0});
    SymMatrix b = SymMatrix::from_row_major(2, {0.0, 1.0, 1.0, 1.0});

    SymMatrix sum = a + b;
    CHECK(sum(0, 0) == 1.0);
    CHECK(sum(0, 1) == 3.0);

    SymMatrix diff = a - b;
    CHECK(diff(0, 1) == 1.0);

    SymMatrix sc = a.scaled(2.0);
    CHECK(sc(1, 1) == 6.0);

    CHECK(a.max_abs() == 3.0);
    CHECK(linalg::max_abs_diff(a, b) == 2.0);

    // a*b row major: [[2,3],[3,5]]
    std::vector<double> prod = linalg::multiply_raw(a, b);
    CHECK(prod[0] == 2.0);
    CHECK(prod[1] == 3.0);
    CHECK(prod[2] == 3.0);
    CHECK(prod[3] == 5.0);

    // sandwich with outer = diag(1, 2): entries o_ii inner_ij o_jj
    SymMatrix outer = SymMatrix::diagonal({1.0, 2.0});
    SymMatrix sw = linalg::sandwich(outer, a);
    CHECK(sw(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sw(0, 1) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(sw(1, 1) == doctest::Approx(12.0).epsilon(1e-15));

    SymMatrix big = random_symmetric(4, 11);
    SymMatrix sub = linalg::submatrix(big, {0, 2, 3});
    CHECK(sub.dim() == 3);
    CHECK(sub(0, 1) == big(0, 2));
    CHECK(sub(1, 2) == big(2, 3));
    CHECK(sub(2, 2) == big(3, 3));

    CHECK_THROWS_AS(linalg::submatrix(big, {2, 1}), DimensionError);
    CHECK_THROWS_AS(linalg::submatrix(big, {0, 4}), DimensionError);
    CHECK_THROWS_AS(linalg::sandwich(outer, random_symmetric(3, 12)), DimensionError);
}

TEST_CASE("scalar power exact paths") {
    CHECK(linalg::scalar_power(9.0, 0.5) == 3.0);
    CHECK(linalg::scalar_power(16.0, -0.5) == 0.25);
    CHECK(linalg::scalar_power(16.0, 0.25) == 2.0);
    CHECK(linalg::scalar_power(16.0, -0.25) == 0.5);
    CHECK(linalg::scalar_power(5.0, 1.0) == 5.0);
    CHECK(linalg::scalar_power(5.0, 0.0) == 1.0);
    CHECK(linalg::scalar_power(2.0, 3.0) == doctest::Approx(8.0).epsilon(1e-15));
}

TEST_CASE("jacobi eigendecomposition on an analytic 2x2") {
    // [[2,1],[1,2]] has eigenvalues 1, 3 with eigenvectors (1,-1) and (1,1)
    SymMatrix m = SymMatrix::from_row_major(2, {2.0, 1.0, 1.0, 2.0});
    linalg::EigenDecomposition eig = linalg::sym_eigen(m);

    REQUIRE(eig.dim == 2);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-14));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(eig.eigenvector(0, 0)) == doctest::Approx(inv_sqrt2).epsilon(1e-13));
    CHECK(eig.eigenvector(0, 0) * eig.eigenvector(1, 0) < 0.0);
    CHECK(std::abs(eig.eigenvector(0, 1)) == doctest::Approx(inv_sqrt2).epsilon(1e-13));
    CHECK(eig.eigenvector(0, 1) * eig.eigenvector(1, 1) > 0.0);
}

TEST_CASE("jacobi reconstruction and orthogonality on random matrices") {
    for (int dim : {1, 2, 3, 5, 8, 13, 21}) {
        SymMatrix m = random_symmetric(dim, 100 + dim);
        linalg::EigenDecomposition eig = linalg::sym_eigen(m);

        CHECK(reconstruction_error(m, eig) <= linalg::reconstruction_tol * (m.max_abs() + 1.0));
        CHECK(orthogonality_error(eig) <= linalg::orthogonality_tol);
        for (int k = 0; k + 1 < dim; ++k)
            CHECK(eig.eigenvalues[k] <= eig.eigenvalues[k + 1]);

        // eigenvector residual ||m v - w v|| per column
        for (int k = 0; k < dim; ++k) {
            double worst = 0.0;
            for (int i = 0; i < dim; ++i) {
                double mv = 0.0;
                for (int j = 0; j < dim; ++j) mv += m(i, j) * eig.eigenvector(j, k);
                worst = std::max(worst, std::abs(mv - eig.eigenvalues[k] * eig.eigenvector(i, k)));
            }
            CHECK(worst <= 1e-11 * (m.max_abs() + 1.0));
        }
    }
}

TEST_CASE("matrix power composes and hits its endpoints") {
    const std::vector<std::pair<double, double>> exponents = {
        {0.5, 0.5}, {0.25, 2.0}, {-0.5, -1.0}, {0.5, -0.5}};

    for (std::uint64_t stream = 0; stream < 20; ++stream) {
        SymMatrix m = random_pos_def(5, 200 + stream);
        for (auto [p, q] : exponents) {
            SymMatrix lhs = linalg::matrix_power(linalg::matrix_power(m, p), q);
            SymMatrix rhs = linalg::matrix_power(m, p * q);
            CHECK(linalg::max_abs_diff(lhs, rhs) <= 1e-9 * (rhs.max_abs() + 1.0));
        }

        CHECK(linalg::max_abs_diff(linalg::matrix_power(m, 1.0), m) <= 1e-12 * m.max_abs());
        CHECK(linalg::max_abs_diff(linalg::matrix_power(m, 0.0), SymMatrix::identity(5)) <=
              1e-12);

        // m^(1/2) m^(-1/2) = identity
        std::vector<double> prod = linalg::multiply_raw(linalg::matrix_power(m, 0.5),
                                                        linalg::matrix_power(m, -0.5));
        SymMatrix prod_sym = SymMatrix::from_row_major(5, prod);
        CHECK(linalg::max_abs_diff(prod_sym, SymMatrix::identity(5)) <= 1e-10);
    }
}

TEST_CASE("matrix power takes the exact diagonal path") {
    SymMatrix d = SymMatrix::diagonal({4.0, 9.0, 16.0});
    SymMatrix root = linalg::matrix_power(d, 0.5);
    CHECK(root(0, 0) == 2.0);
    CHECK(root(1, 1) == 3.0);
    CHECK(root(2, 2) == 4.0);
    CHECK(root(0, 1) == 0.0);

    SymMatrix inv = linalg::matrix_power(d, -1.0);
    CHECK(inv(0, 0) == 0.25);
}

TEST_CASE("apply power error contract") {
    // spectrum {0, 1}: negative powers are singular, fractional ones are fine
    SymMatrix touching = SymMatrix::diagonal({0.0, 1.0});
    linalg::EigenDecomposition eig = linalg::sym_eigen(touching);
    CHECK_THROWS_AS(linalg::apply_power(eig, -0.5), SingularMatrixError);
    CHECK_THROWS_AS(linalg::matrix_power(touching, -1.0), SingularMatrixError);
    CHECK_NOTHROW(linalg::apply_power(eig, 0.5));

    try {
        linalg::apply_power(eig, -0.5);
        CHECK(false);
    } catch (const SingularMatrixError& e) {
        CHECK(e.smallest_eigenvalue == doctest::Approx(0.0));
    }

    // clearly negative eigenvalue: fractional powers leave the real domain
    SymMatrix indefinite = SymMatrix::diagonal({-1.0, 1.0});
    linalg::EigenDecomposition eig_ind = linalg::sym_eigen(indefinite);
    CHECK_THROWS_AS(linalg::apply_power(eig_ind, 0.5), DomainError);

    // eigenvalue in [-floor, 0) clamps to zero instead of throwing
    linalg::EigenDecomposition tiny;
    tiny.dim = 2;
    tiny.eigenvalues = {-1e-14, 1.0};
    tiny.eigenvectors = {1.0, 0.0, 0.0, 1.0};
    SymMatrix clamped = linalg::apply_power(tiny, 0.5);
    CHECK(clamped(0, 0) == 0.0);
    CHECK(clamped(1, 1) == 1.0);

    // explicit floor overrides the relative default
    linalg::EigenDecomposition strict;
    strict.dim = 1;
    strict.eigenvalues = {0.5};
    strict.eigenvectors = {1.0};
    CHECK_THROWS_AS(linalg::apply_power(strict, -1.0, 0.6), SingularMatrixError);
}

TEST_CASE("schatten half trace and quasinorm") {
    SymMatrix d = SymMatrix::diagonal({4.0, 9.0});
    CHECK(linalg::schatten_half_trace(d) == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(linalg::schatten_half_quasinorm(d) == doctest::Approx(25.0).epsilon(1e-14));

    // absolute values of eigenvalues: diag(-4, 9) has the same trace
    SymMatrix neg = SymMatrix::diagonal({-4.0, 9.0});
    CHECK(linalg::schatten_half_trace(neg) == doctest::Approx(5.0).epsilon(1e-13));

    for (std::uint64_t stream = 0; stream < 5; ++stream) {
        SymMatrix m = random_pos_def(4, 300 + stream);
        double trace = linalg::schatten_half_trace(m);
        CHECK(linalg::schatten_half_quasinorm(m) == doctest::Approx(trace * trace).epsilon(1e-12));
    }
}

TEST_CASE("log det of positive definite matrices") {
    SymMatrix m = SymMatrix::from_row_major(2, {2.0, 1.0, 1.0, 2.0});
    CHECK(linalg::log_det_pos_def(m) == doctest::Approx(std::log(3.0)).epsilon(1e-13));

    SymMatrix singular = SymMatrix::diagonal({1.0, 0.0});
    CHECK_THROWS_AS(linalg::log_det_pos_def(singular), DomainError);
    CHECK_THROWS_AS(linalg::log_det_pos_def(SymMatrix::diagonal({1.0, -2.0})), DomainError);

    for (std::uint64_t stream = 0; stream < 5; ++stream) {
        SymMatrix p = random_pos_def(4, 400 + stream);
        linalg::EigenDecomposition eig = linalg::sym_eigen(p);
        double expected = 0.0;
        for (double w : eig.eigenvalues) expected += std::log(w);
        CHECK(linalg::log_det_pos_def(p) == doctest::Approx(expected).epsilon(1e-11));
    }
}

TEST_CASE("cholesky probe for positive definiteness") {
    CHECK(linalg::is_positive_definite(SymMatrix::identity(3)));
    CHECK(linalg::is_positive_definite(SymMatrix::from_row_major(2, {2.0, 1.0, 1.0, 2.0})));
    CHECK_FALSE(linalg::is_positive_definite(SymMatrix::diagonal({1.0, 0.0})));
    CHECK_FALSE(linalg::is_positive_definite(SymMatrix::diagonal({1.0, -1.0})));
    // [[1,2],[2,1]] has eigenvalues 3 and -1
    CHECK_FALSE(linalg::is_positive_definite(SymMatrix::from_row_major(2, {1.0, 2.0, 2.0, 1.0})));

    for (std::uint64_t stream = 0; stream < 10; ++stream)
        CHECK(linalg::is_positive_definite(random_pos_def(6, 500 + stream)));
}
