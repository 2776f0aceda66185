#include "doctest.h"

#include <cmath>
#include <vector>

#include "oscent/covariance.hpp"
#include "oscent/errors.hpp"
#include "oscent/graph.hpp"
#include "oscent/model.hpp"
#include "oscent/rng.hpp"
#include "oscent/sym_matrix.hpp"

using namespace oscent;
using gaussian::CovarianceMatrix;
using linalg::SymMatrix;
using model::Region;

namespace {

SymMatrix random_pos_def(int dim, std::uint64_t stream) {
    SymMatrix s(dim);
    std::uint64_t index = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) s.set(i, j, rng::uniform(7, stream, index++) - 0.5);
    SymMatrix m = linalg::sandwich(s, SymMatrix::identity(dim));
    for (int i = 0; i < dim; ++i) m.add(i, i, 0.5);
    return m;
}

/// Random block covariance rescaled so the smallest symplectic eigenvalue is 1.3.
CovarianceMatrix random_valid_state(int modes, std::uint64_t stream) {
    SymMatrix qq = random_pos_def(modes, stream);
    SymMatrix pp = random_pos_def(modes, stream + 1000);
    std::vector<double> raw =
        gaussian::symplectic_spectrum_raw(CovarianceMatrix::from_blocks(qq, pp));
    double scale = 1.3 / raw.front();
    return CovarianceMatrix::from_blocks(qq.scaled(scale), pp.scaled(scale));
}

} // namespace

TEST_CASE("covariance construction and block access") {
    SymMatrix qq = SymMatrix::diagonal({1.0, 2.0});
    SymMatrix pp = SymMatrix::diagonal({2.0, 1.0});
    CovarianceMatrix cov = CovarianceMatrix::from_blocks(qq, pp);
    CHECK(cov.modes() == 2);
    CHECK(cov.is_block_diagonal());
    CHECK(cov.qq()(1, 1) == 2.0);
    CHECK(cov.pp()(0, 0) == 2.0);

    SymMatrix full = cov.full();
    REQUIRE(full.dim() == 4);
    CHECK(full(0, 0) == 1.0);
    CHECK(full(1, 1) == 2.0);
    CHECK(full(2, 2) == 2.0);
    CHECK(full(3, 3) == 1.0);
    CHECK(full(0, 2) == 0.0);
    CHECK(full(1, 3) == 0.0);

    CovarianceMatrix general = CovarianceMatrix::from_full(full);
    CHECK(general.modes() == 2);
    CHECK_FALSE(general.is_block_diagonal());
    CHECK_THROWS_AS(general.qq(), DomainError);
    CHECK_THROWS_AS(general.pp(), DomainError);
    CHECK(linalg::max_abs_diff(general.full(), full) == 0.0);

    CHECK_THROWS_AS(CovarianceMatrix::from_blocks(qq, SymMatrix::identity(3)), DimensionError);
    CHECK_THROWS_AS(CovarianceMatrix::from_blocks(SymMatrix::diagonal({1.0, -1.0}), pp),
                    DomainError);
    CHECK_THROWS_AS(CovarianceMatrix::from_full(SymMatrix::identity(3)), DimensionError);
    CHECK_THROWS_AS(CovarianceMatrix::from_full(SymMatrix::diagonal({1.0, -1.0})), DomainError);
}

TEST_CASE("single site ground state in closed form") {
    CovarianceMatrix cov = gaussian::ground_state_covariance(model::ordered_chain(1));
    CHECK(cov.qq()(0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(cov.pp()(0, 0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

    gaussian::SymplecticSpectrum spec = gaussian::symplectic_spectrum(cov);
    REQUIRE(spec.values.size() == 1);
    CHECK(spec.values[0] == 1.0);
}

TEST_CASE("two site ground state in closed form") {
    const double r3 = std::sqrt(3.0);
    CovarianceMatrix cov = gaussian::ground_state_covariance(model::ordered_chain(2));

    CHECK(cov.qq()(0, 0) == doctest::Approx((1.0 + 1.0 / r3) / 2.0).epsilon(1e-13));
    CHECK(cov.qq()(0, 1) == doctest::Approx((1.0 - 1.0 / r3) / 2.0).epsilon(1e-13));
    CHECK(cov.pp()(0, 0) == doctest::Approx((1.0 + r3) / 2.0).epsilon(1e-13));
    CHECK(cov.pp()(0, 1) == doctest::Approx((1.0 - r3) / 2.0).epsilon(1e-13));

    // reduced single-mode eigenvalue sqrt(qq_11 pp_11)
    CovarianceMatrix reduced = gaussian::truncate(cov, Region(2, {1}));
    gaussian::SymplecticSpectrum spec = gaussian::symplectic_spectrum(reduced);
    double expected = std::sqrt((1.0 + 1.0 / r3) * (1.0 + r3) / 4.0);
    REQUIRE(spec.values.size() == 1);
    CHECK(spec.values[0] == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("ground states are pure") {
    for (int n : {1, 2, 5, 12}) {
        CovarianceMatrix cov = gaussian::ground_state_covariance(model::ordered_chain(n));
        for (double g : gaussian::symplectic_spectrum(cov).values)
            CHECK(g == doctest::Approx(1.0).epsilon(1e-9));
    }

    model::DisorderEnsemble ens;
    ens.seed = 17;
    for (int realization = 0; realization < 3; ++realization) {
        model::OscillatorSystem sys =
            model::anderson_system(model::Graph::path(9), ens, realization);
        CovarianceMatrix cov = gaussian::ground_state_covariance(sys);
        for (double g : gaussian::symplectic_spectrum(cov).values)
            CHECK(g == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("squared form route agrees with the block route") {
    for (std::uint64_t stream = 0; stream < 12; ++stream) {
        int modes = 2 + static_cast<int>(stream % 4);
        CovarianceMatrix cov = random_valid_state(modes, 50 + stream);

        std::vector<double> block =
            gaussian::symplectic_spectrum_block(cov.qq(), cov.pp()).values;
        std::vector<double> squared = gaussian::symplectic_spectrum_williamson(cov).values;

        REQUIRE(block.size() == squared.size());
        for (size_t i = 0; i < block.size(); ++i)
            CHECK(block[i] == doctest::Approx(squared[i]).epsilon(1e-8));

        // the dispatcher picks the block route for block-diagonal input
        std::vector<double> dispatched = gaussian::symplectic_spectrum(cov).values;
        for (size_t i = 0; i < block.size(); ++i) CHECK(dispatched[i] == block[i]);
    }
}

TEST_CASE("one mode spectrum is rotation invariant") {
    const double a = 1.3, b = 1.1, c = 0.2;
    SymMatrix m = SymMatrix::from_row_major(2, {a, c, c, b});
    double gamma = std::sqrt(a * b - c * c);

    for (double theta : {0.0, 0.3, 1.1, 2.0}) {
        const double co = std::cos(theta), si = std::sin(theta);
        // R m R^T for the rotation R = [[co, si], [-si, co]], entry by entry
        SymMatrix rotated(2);
        rotated.set(0, 0, co * (co * a + si * c) + si * (co * c + si * b));
        rotated.set(0, 1, -si * (co * a + si * c) + co * (co * c + si * b));
        rotated.set(1, 1, -si * (-si * a + co * c) + co * (-si * c + co * b));

        gaussian::SymplecticSpectrum spec =
            gaussian::symplectic_spectrum_williamson(CovarianceMatrix::from_full(rotated));
        REQUIRE(spec.values.size() == 1);
        CHECK(spec.values[0] == doctest::Approx(gamma).epsilon(1e-12));
    }
}

TEST_CASE("truncation maps indices faithfully") {
    CovarianceMatrix cov = gaussian::ground_state_covariance(model::ordered_chain(6));

    Region region(6, {0, 2, 5});
    CovarianceMatrix cut = gaussian::truncate(cov, region);
    CHECK(cut.modes() == 3);
    CHECK(cut.qq()(0, 1) == cov.qq()(0, 2));
    CHECK(cut.qq()(1, 2) == cov.qq()(2, 5));
    CHECK(cut.pp()(0, 2) == cov.pp()(0, 5));

    CovarianceMatrix whole = gaussian::truncate(cov, Region::range(6, 0, 6));
    CHECK(linalg::max_abs_diff(whole.qq(), cov.qq()) == 0.0);

    CHECK_THROWS_AS(gaussian::truncate(cov, Region(5, {0, 1})), BipartitionError);

    // full-form truncation keeps both blocks of each selected mode
    CovarianceMatrix general = CovarianceMatrix::from_full(cov.full());
    CovarianceMatrix cut_general = gaussian::truncate(general, region);
    CHECK(cut_general.modes() == 3);
    SymMatrix cut_full = cut_general.full();
    CHECK(cut_full(0, 1) == cov.qq()(0, 2));
    CHECK(cut_full(3, 4) == cov.pp()(0, 2));

    std::vector<double> via_full = gaussian::symplectic_spectrum(cut_general).values;
    std::vector<double> via_blocks = gaussian::symplectic_spectrum(cut).values;
    REQUIRE(via_full.size() == via_blocks.size());
    for (size_t i = 0; i < via_full.size(); ++i)
        CHECK(via_full[i] == doctest::Approx(via_blocks[i]).epsilon(1e-9));
}

TEST_CASE("uncertainty check and the clamp band") {
    CovarianceMatrix valid = random_valid_state(3, 99);
    CHECK(gaussian::check_uncertainty(valid));

    // gamma = 0.9 sits well below the bound
    CovarianceMatrix invalid =
        CovarianceMatrix::from_blocks(SymMatrix::diagonal({0.9}), SymMatrix::diagonal({0.9}));
    CHECK_FALSE(gaussian::check_uncertainty(invalid));
    CHECK_THROWS_AS(gaussian::symplectic_spectrum(invalid), UncertaintyError);
    try {
        gaussian::symplectic_spectrum(invalid);
    } catch (const UncertaintyError& e) {
        CHECK(e.min_symplectic_eigenvalue == doctest::Approx(0.9).epsilon(1e-12));
    }

    // raw spectrum reports the violation instead of throwing
    std::vector<double> raw = gaussian::symplectic_spectrum_raw(invalid);
    CHECK(raw[0] == doctest::Approx(0.9).epsilon(1e-12));

    // a value just under 1 snaps to 1 at the default tolerance but is
    // rejected when the clamp band is closed
    double g = 1.0 - 1e-9;
    CovarianceMatrix borderline =
        CovarianceMatrix::from_blocks(SymMatrix::diagonal({g}), SymMatrix::diagonal({g}));
    CHECK(gaussian::symplectic_spectrum(borderline).values[0] == 1.0);

    gaussian::Tolerances closed;
    closed.spectrum_tol = 0.0;
    CHECK_THROWS_AS(gaussian::symplectic_spectrum(borderline, closed), UncertaintyError);
    CHECK_FALSE(gaussian::check_uncertainty(borderline, closed));
}
