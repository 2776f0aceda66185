#include "doctest.h"

#include <cmath>
#include <vector>

#include "oscent/eigen.hpp"
#include "oscent/errors.hpp"
#include "oscent/graph.hpp"
#include "oscent/model.hpp"
#include "oscent/sym_matrix.hpp"

using namespace oscent;
using linalg::SymMatrix;
using model::BlockPlacement;
using model::DisorderEnsemble;
using model::Graph;
using model::Region;

TEST_CASE("graph construction and queries") {
    Graph p = Graph::path(4);
    CHECK(p.size() == 4);
    REQUIRE(p.edges().size() == 3);
    CHECK(p.edges()[0] == std::pair<int, int>{0, 1});
    CHECK(p.degree(0) == 1);
    CHECK(p.degree(1) == 2);
    CHECK(p.degree_bound() == 2);
    CHECK(p.neighbors(2) == std::vector<int>{1, 3});

    std::vector<int> dist = p.distances_from(0);
    CHECK(dist == std::vector<int>{0, 1, 2, 3});

    Graph two_parts(4, {{0, 1}, {2, 3}});
    std::vector<int> dist2 = two_parts.distances_from(0);
    CHECK(dist2[1] == 1);
    CHECK(dist2[2] == -1);
    CHECK(dist2[3] == -1);

    CHECK_THROWS_AS(Graph(0, {}), DimensionError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), DimensionError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(p.distances_from(4), DimensionError);
}

TEST_CASE("region construction, complement, boundary") {
    Region r = Region::range(6, 1, 3);
    CHECK(r.parent_size() == 6);
    CHECK(r.indices() == std::vector<int>{1, 2, 3});
    CHECK(r.size() == 3);
    CHECK(r.is_proper());
    CHECK(r.contains(2));
    CHECK_FALSE(r.contains(0));

    Region c = r.complement();
    CHECK(c.indices() == std::vector<int>{0, 4, 5});

    Region mid = Region::centered(8, 4);
    CHECK(mid.indices() == std::vector<int>{2, 3, 4, 5});
    Region mid_odd = Region::centered(7, 2);
    CHECK(mid_odd.indices() == std::vector<int>{2, 3});

    Region full = Region::range(3, 0, 3);
    CHECK(full.is_full());
    CHECK_THROWS_AS(full.complement(), BipartitionError);

    CHECK_THROWS_AS(Region(4, {}), BipartitionError);
    CHECK_THROWS_AS(Region(4, {2, 1}), BipartitionError);
    CHECK_THROWS_AS(Region(4, {0, 4}), BipartitionError);

    Graph path = Graph::path(6);
    std::vector<int> boundary = model::boundary_sites(r, path);
    CHECK(boundary == std::vector<int>{1, 3});
    std::vector<int> edge_boundary = model::boundary_sites(Region::range(6, 0, 2), path);
    CHECK(edge_boundary == std::vector<int>{1});
}

TEST_CASE("ordered chain builds the pinned tridiagonal") {
    model::OscillatorSystem sys = model::ordered_chain(5);
    CHECK(sys.size() == 5);
    CHECK(sys.graph.edges().size() == 4);

    for (int i = 0; i < 5; ++i) {
        CHECK(sys.hq(i, i) == 2.0);
        CHECK(sys.hp(i, i) == 1.0);
        for (int j = i + 1; j < 5; ++j) {
            CHECK(sys.hq(i, j) == (j == i + 1 ? -1.0 : 0.0));
            CHECK(sys.hp(i, j) == 0.0);
        }
    }

    CHECK_THROWS_AS(model::ordered_chain(0), DimensionError);
}

TEST_CASE("oscillator system rejects bad quadratic forms") {
    Graph p = Graph::path(2);
    SymMatrix good = SymMatrix::from_row_major(2, {2.0, -1.0, -1.0, 2.0});
    SymMatrix id = SymMatrix::identity(2);

    CHECK_NOTHROW(model::OscillatorSystem(p, good, id));
    CHECK_THROWS_AS(model::OscillatorSystem(p, SymMatrix::identity(3), id), DimensionError);
    CHECK_THROWS_AS(model::OscillatorSystem(p, SymMatrix::diagonal({1.0, -1.0}), id),
                    AssumptionError);
    CHECK_THROWS_AS(model::OscillatorSystem(p, good, SymMatrix::diagonal({1.0, 0.0})),
                    AssumptionError);
}

TEST_CASE("disorder ensemble validation and sampling") {
    DisorderEnsemble ens;
    CHECK_NOTHROW(ens.validate());

    DisorderEnsemble bad_mass = ens;
    bad_mass.mass = 0.0;
    CHECK_THROWS_AS(bad_mass.validate(), DomainError);

    DisorderEnsemble bad_support = ens;
    bad_support.lo = 2.0;
    bad_support.hi = 1.0;
    CHECK_THROWS_AS(bad_support.validate(), DomainError);

    DisorderEnsemble bad_coupling = ens;
    bad_coupling.coupling = -1.0;
    CHECK_THROWS_AS(bad_coupling.validate(), DomainError);

    ens.seed = 3;
    std::vector<double> a = ens.sample(0, 16);
    std::vector<double> b = ens.sample(0, 16);
    CHECK(a == b);

    std::vector<double> c = ens.sample(1, 16);
    CHECK(a != c);

    for (double k : a) {
        CHECK(k >= ens.lo);
        CHECK(k < ens.hi);
    }

    // the first sites of a longer sample coincide: draws are per (realization, site)
    std::vector<double> longer = ens.sample(0, 32);
    for (int i = 0; i < 16; ++i) CHECK(longer[i] == a[i]);

    DisorderEnsemble constant = ens;
    constant.dist = DisorderEnsemble::Dist::constant;
    constant.constant_k = 2.5;
    std::vector<double> flat = constant.sample(7, 4);
    for (double k : flat) CHECK(k == 2.5);
}

TEST_CASE("anderson system with constant unit pinning matches the two-site ordered chain") {
    // on longer paths the laplacian raises interior diagonals above the
    // end-pinned chain, so the two models coincide only at n = 2
    DisorderEnsemble ens;
    ens.dist = DisorderEnsemble::Dist::constant;
    ens.constant_k = 1.0;
    ens.mass = 0.5;

    model::OscillatorSystem disordered = model::anderson_system(Graph::path(2), ens);
    model::OscillatorSystem ordered = model::ordered_chain(2);
    CHECK(linalg::max_abs_diff(disordered.hq, ordered.hq) == 0.0);
    CHECK(linalg::max_abs_diff(disordered.hp, ordered.hp) == 0.0);

    model::OscillatorSystem longer = model::anderson_system(Graph::path(4), ens);
    CHECK(longer.hq(0, 0) == 2.0);
    CHECK(longer.hq(1, 1) == 3.0);
    CHECK(longer.hq(2, 2) == 3.0);
    CHECK(longer.hq(3, 3) == 2.0);
}

TEST_CASE("anderson system assembles pinning plus laplacian") {
    DisorderEnsemble ens;
    ens.mass = 2.0;
    ens.coupling = 3.0;
    ens.seed = 9;

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    model::OscillatorSystem sys = model::anderson_system(star, ens, 5);
    std::vector<double> k = ens.sample(5, 4);

    CHECK(sys.hq(0, 0) == doctest::Approx(k[0] + 3.0 * 3.0).epsilon(1e-15));
    CHECK(sys.hq(1, 1) == doctest::Approx(k[1] + 3.0).epsilon(1e-15));
    CHECK(sys.hq(0, 1) == -3.0);
    CHECK(sys.hq(1, 2) == 0.0);
    CHECK(sys.hp(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(sys.hp(0, 1) == 0.0);

    // zero pinning on a path leaves a zero mode in the laplacian
    DisorderEnsemble critical;
    critical.dist = DisorderEnsemble::Dist::constant;
    critical.constant_k = 0.0;
    CHECK_THROWS_AS(model::anderson_system(Graph::path(3), critical), AssumptionError);
}

TEST_CASE("chain spectrum matches the closed form and the jacobi solver") {
    const double pi = std::acos(-1.0);
    for (int n : {1, 2, 3, 8, 21}) {
        linalg::EigenDecomposition eig = model::chain_spectrum(n);
        REQUIRE(eig.dim == n);
        for (int j = 1; j <= n; ++j) {
            double s = std::sin(j * pi / (2.0 * (n + 1)));
            CHECK(eig.eigenvalues[j - 1] == doctest::Approx(4.0 * s * s).epsilon(1e-13));
        }

        linalg::EigenDecomposition numeric = linalg::sym_eigen(model::ordered_chain(n).hq);
        for (int j = 0; j < n; ++j)
            CHECK(eig.eigenvalues[j] == doctest::Approx(numeric.eigenvalues[j]).epsilon(1e-10));

        // rebuild hq from the analytic eigenvectors
        SymMatrix rebuilt(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double sum = 0.0;
                for (int m = 0; m < n; ++m)
                    sum += eig.eigenvector(i, m) * eig.eigenvalues[m] * eig.eigenvector(j, m);
                rebuilt.set(i, j, sum);
            }
        CHECK(linalg::max_abs_diff(rebuilt, model::ordered_chain(n).hq) <= 1e-12);
    }
}

TEST_CASE("one particle operator reduces correctly") {
    model::OscillatorSystem ordered = model::ordered_chain(6);
    CHECK(linalg::max_abs_diff(model::one_particle_operator(ordered), ordered.hq) <= 1e-14);

    // hp = 4 Id scales h by 4
    SymMatrix hp4 = SymMatrix::identity(3).scaled(4.0);
    SymMatrix hq = model::ordered_chain(3).hq;
    model::OscillatorSystem scaled(Graph::path(3), hq, hp4);
    CHECK(linalg::max_abs_diff(model::one_particle_operator(scaled), hq.scaled(4.0)) <= 1e-12);

    // general hp: compare against the sandwich with an explicit square root
    SymMatrix hp = SymMatrix::from_row_major(3, {2.0, 0.5, 0.0, 0.5, 2.0, 0.5, 0.0, 0.5, 2.0});
    model::OscillatorSystem general(Graph::path(3), hq, hp);
    SymMatrix expected = linalg::sandwich(linalg::matrix_power(hp, 0.5), hq);
    CHECK(linalg::max_abs_diff(model::one_particle_operator(general), expected) <= 1e-12);
}

TEST_CASE("assumption check reports the three norms") {
    model::OscillatorSystem sys = model::ordered_chain(10);
    model::AssumptionReport report = model::check_assumption(sys, 4.0);
    CHECK(report.passes);
    CHECK(report.bound == 4.0);
    CHECK(report.norm_hp == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.norm_hp_inv == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.norm_hq == doctest::Approx(model::chain_spectrum(10).eigenvalues.back())
                                .epsilon(1e-10));

    model::AssumptionReport tight = model::check_assumption(sys, 3.0);
    CHECK_FALSE(tight.passes);
}

TEST_CASE("truncated chain power matches the explicit full power") {
    const int n_full = 8;
    SymMatrix hq = model::ordered_chain(n_full).hq;

    for (double alpha : {0.5, -0.5, 0.25, -0.25, 1.0, -1.0}) {
        SymMatrix full_power = linalg::matrix_power(hq, alpha);

        for (int n_sub : {1, 3, 8}) {
            SymMatrix leading =
                model::truncated_chain_power(n_sub, n_full, alpha, BlockPlacement::leading);
            std::vector<int> head(n_sub);
            for (int i = 0; i < n_sub; ++i) head[i] = i;
            CHECK(linalg::max_abs_diff(leading, linalg::submatrix(full_power, head)) <= 1e-11);

            SymMatrix centered =
                model::truncated_chain_power(n_sub, n_full, alpha, BlockPlacement::centered);
            int offset = (n_full - n_sub) / 2;
            std::vector<int> mid(n_sub);
            for (int i = 0; i < n_sub; ++i) mid[i] = offset + i;
            CHECK(linalg::max_abs_diff(centered, linalg::submatrix(full_power, mid)) <= 1e-11);
        }
    }

    CHECK_THROWS_AS(model::truncated_chain_power(0, 8, 0.5), DimensionError);
    CHECK_THROWS_AS(model::truncated_chain_power(9, 8, 0.5), DimensionError);
}

TEST_CASE("multi exponent truncation equals one at a time") {
    const std::vector<double> alphas = {-0.5, -0.25, 0.25, 0.5};
    std::vector<SymMatrix> joint =
        model::truncated_chain_powers(4, 32, alphas, BlockPlacement::centered);
    REQUIRE(joint.size() == alphas.size());
    for (size_t t = 0; t < alphas.size(); ++t) {
        SymMatrix single =
            model::truncated_chain_power(4, 32, alphas[t], BlockPlacement::centered);
        CHECK(linalg::max_abs_diff(joint[t], single) <= 1e-14);
    }

    // threads only change the schedule, not the entries
    SymMatrix threaded =
        model::truncated_chain_power(6, 64, 0.5, BlockPlacement::leading, 3);
    SymMatrix serial = model::truncated_chain_power(6, 64, 0.5, BlockPlacement::leading, 1);
    CHECK(linalg::max_abs_diff(threaded, serial) == 0.0);
}
