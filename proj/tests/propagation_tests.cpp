#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "lindtr/errors.hpp"
#include "lindtr/model_library.hpp"
#include "lindtr/propagation.hpp"

using namespace lindtr;
using std::complex;

namespace {

// TLS with a tabulated linear-ramp drive omega(t) = t; the generators at
// different times do not commute, so integrator order actually shows.
LindbladModel ramp_drive_tls(double t_f) {
    std::vector<HamiltonianTerm> terms;
    terms.push_back({pauli(Pauli::X), CoefficientSchedule::tabulated(
                                          {0.0, t_f}, {0.0, -t_f / 2.0})});
    std::vector<DissipationChannel> channels;
    channels.push_back({pauli(Pauli::Minus), CoefficientSchedule::constant(1.0)});
    return LindbladModel(2, std::move(terms), std::move(channels));
}

double final_gap(const Trajectory& a, const Trajectory& b) {
    return max_abs_diff(a.final_state().matrix(), b.final_state().matrix());
}

} // namespace

TEST_SUITE("propagation") {

TEST_CASE("time grid nodes are uniform and hit both endpoints exactly") {
    const TimeGrid grid(0.0, 2.5, 7);
    CHECK(grid.node(0) == 0.0);
    CHECK(grid.node(7) == 2.5);
    CHECK(grid.node(3) == doctest::Approx(3.0 * 2.5 / 7.0).epsilon(1e-15));
    const auto nodes = grid.nodes();
    REQUIRE(nodes.size() == 8);
    for (std::size_t j = 1; j < nodes.size(); ++j)
        CHECK(nodes[j] > nodes[j - 1]);
    CHECK(nodes.back() == 2.5);

    CHECK_THROWS_AS(TimeGrid(0.0, 0.0, 4), ParameterError);
    CHECK_THROWS_AS(TimeGrid(1.0, 0.5, 4), ParameterError);
    CHECK_THROWS_AS(TimeGrid(0.0, 1.0, 0), ParameterError);
}

TEST_CASE("method names") {
    CHECK(method_from_name("rk4") == Method::Rk4);
    CHECK(method_from_name("expm") == Method::ExpmMidpoint);
    CHECK(method_from_name("expm_midpoint") == Method::ExpmMidpoint);
    CHECK_THROWS_AS(method_from_name("euler"), ParameterError);
    CHECK(method_name(Method::Rk4) == "rk4");
    CHECK(method_name(Method::ExpmMidpoint) == "expm_midpoint");
}

TEST_CASE("matrix exponential of simple closed forms") {
    SUBCASE("zero matrix") {
        const ComplexMatrix z = ComplexMatrix::Zero(3, 3);
        CHECK(max_abs_diff(matrix_exponential(z),
                           ComplexMatrix(ComplexMatrix::Identity(3, 3))) == 0.0);
    }
    SUBCASE("diagonal") {
        ComplexMatrix d = ComplexMatrix::Zero(2, 2);
        d(0, 0) = complex<double>(0.3, -1.1);
        d(1, 1) = complex<double>(-2.0, 0.4);
        const auto e = matrix_exponential(d);
        CHECK(std::abs(e(0, 0) - std::exp(d(0, 0))) < 1e-15);
        CHECK(std::abs(e(1, 1) - std::exp(d(1, 1))) < 1e-15);
        CHECK(std::abs(e(0, 1)) == 0.0);
    }
    SUBCASE("rotation generator: exp(-i theta sx)") {
        for (double theta : {0.3, 2.0, 40.0}) {  // 40 forces scaling-squaring
            const ComplexMatrix m =
                -complex<double>(0, 1) * theta * pauli(Pauli::X);
            ComplexMatrix expect = ComplexMatrix::Identity(2, 2);
            expect *= std::cos(theta);
            expect -= complex<double>(0, 1) * std::sin(theta) * pauli(Pauli::X);
            CHECK(max_abs_diff(matrix_exponential(m), expect) < 1e-13);
        }
    }
    SUBCASE("nilpotent") {
        ComplexMatrix n = ComplexMatrix::Zero(2, 2);
        n(0, 1) = 1.0;
        ComplexMatrix expect = ComplexMatrix::Identity(2, 2);
        expect(0, 1) = 1.0;
        CHECK(max_abs_diff(matrix_exponential(n), expect) < 1e-15);
    }
    SUBCASE("non-normal Jordan block") {
        ComplexMatrix m = ComplexMatrix::Identity(2, 2);
        m(0, 1) = 1.0;
        ComplexMatrix expect = std::exp(1.0) * m;
        CHECK(max_abs_diff(matrix_exponential(m), expect) < 1e-14);
    }
    SUBCASE("large anti-Hermitian input stays unitary") {
        ComplexMatrix h(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                h(i, j) = complex<double>(std::sin(3.0 * i + j),
                                          std::cos(i - 2.0 * j));
        h = ComplexMatrix(0.5 * (h + h.adjoint())) * 30.0;
        const ComplexMatrix u =
            matrix_exponential(ComplexMatrix(complex<double>(0, -1) * h));
        CHECK(max_abs_diff(ComplexMatrix(u * u.adjoint()),
                           ComplexMatrix(ComplexMatrix::Identity(4, 4))) <
              1e-12);
    }
    SUBCASE("square input required") {
        CHECK_THROWS_AS(matrix_exponential(ComplexMatrix::Zero(2, 3)),
                        ShapeError);
    }
}

TEST_CASE("undriven decay matches the exponential law") {
    const auto model = tls_amplitude_damping({0.0, 0.0, 1.0});
    const auto rho0 = DensityMatrix::basis_state(2, 1);
    const TimeGrid grid(0.0, 5.0, 2000);
    for (Method m : {Method::Rk4, Method::ExpmMidpoint}) {
        const auto traj = evolve(model, rho0, grid, m);
        REQUIRE(traj.size() == 2001);
        CHECK(traj.times.front() == 0.0);
        CHECK(traj.times.back() == 5.0);
        double worst = 0.0;
        for (std::size_t j = 0; j < traj.size(); ++j) {
            const double p1 = traj.states[j].matrix()(1, 1).real();
            worst = std::max(worst, std::abs(p1 - std::exp(-traj.times[j])));
            CHECK(traj.states[j].trace_error() < 1e-12);
        }
        CHECK(worst < 1e-10);
    }
}

TEST_CASE("integrators agree on a non-commuting ramp drive") {
    const auto model = ramp_drive_tls(5.0);
    const auto rho0 = DensityMatrix::basis_state(2, 1);
    const auto nodes = TimeGrid(0.0, 5.0, 1).nodes();

    EvolveOptions rk;
    rk.method = Method::Rk4;
    rk.substeps = 2000;
    EvolveOptions em;
    em.method = Method::ExpmMidpoint;
    em.substeps = 8000;
    const auto a = evolve_at_times(model, rho0, nodes, rk);
    const auto b = evolve_at_times(model, rho0, nodes, em);
    CHECK(final_gap(a, b) < 1e-8);
}

TEST_CASE("midpoint-exponential stepping is second order") {
    const auto model = ramp_drive_tls(5.0);
    const auto rho0 = DensityMatrix::basis_state(2, 1);

    auto run = [&](Method m, int steps) {
        return evolve(model, rho0, TimeGrid(0.0, 5.0, steps), m);
    };
    const auto ref = run(Method::Rk4, 4000);  // truncation ~1e-12, negligible
    const double e500 = final_gap(run(Method::ExpmMidpoint, 500), ref);
    const double e1000 = final_gap(run(Method::ExpmMidpoint, 1000), ref);
    CHECK(e1000 < 5e-7);
    CHECK(e500 / e1000 > 3.5);
    CHECK(e500 / e1000 < 4.5);
}

TEST_CASE("propagator is the identity over an empty window") {
    const auto model = tls_amplitude_damping({0.0, 2.0, 1.0});
    const auto p = propagator(model, 1.0, 1.0, 10);
    CHECK(max_abs_diff(p.matrix,
                       ComplexMatrix(ComplexMatrix::Identity(4, 4))) == 0.0);
    CHECK_THROWS_AS(propagator(model, 1.0, 0.5, 10), ParameterError);
}

TEST_CASE("propagator composes and reproduces the evolution") {
    const auto model = ramp_drive_tls(5.0);
    const auto rho0 = DensityMatrix::basis_state(2, 1);

    const auto whole = propagator(model, 0.0, 5.0, 800);
    const auto left = propagator(model, 0.0, 2.5, 400);
    const auto right = propagator(model, 2.5, 5.0, 400);
    CHECK(max_abs_diff(whole.matrix, ComplexMatrix(right.matrix * left.matrix)) <
          1e-12);

    const auto traj =
        evolve(model, rho0, TimeGrid(0.0, 5.0, 4000), Method::Rk4);
    CHECK(max_abs_diff(whole.apply(rho0).matrix(),
                       traj.final_state().matrix()) < 1e-6);

    const auto bad = DensityMatrix::maximally_mixed(4);
    CHECK_THROWS_AS(whole.apply(bad), ShapeError);
}

TEST_CASE("constant generator: one midpoint step is already exact") {
    const auto model = tls_amplitude_damping({0.0, 0.0, 1.0});
    const auto p = propagator(model, 0.0, 5.0, 1);
    const auto rho = p.apply(DensityMatrix::basis_state(2, 1));
    CHECK(rho.matrix()(1, 1).real() ==
          doctest::Approx(std::exp(-5.0)).epsilon(1e-12));
}

TEST_CASE("stage states interpolate the protocol") {
    const auto model = tls_amplitude_damping({0.0, 0.0, 1.0});
    const auto rho0 = DensityMatrix::basis_state(2, 1);
    const auto start = stage_state(model, rho0, 0.0, 5.0, 100);
    CHECK(max_abs_diff(start.matrix(), rho0.matrix()) == 0.0);
    const auto mid = stage_state(model, rho0, 0.5, 5.0, 100);
    CHECK(mid.matrix()(1, 1).real() ==
          doctest::Approx(std::exp(-2.5)).epsilon(1e-10));
    const auto end = stage_state(model, rho0, 1.0, 5.0, 100);
    CHECK(end.matrix()(1, 1).real() ==
          doctest::Approx(std::exp(-5.0)).epsilon(1e-10));
    CHECK_THROWS_AS(stage_state(model, rho0, -0.1, 5.0, 100), DomainError);
    CHECK_THROWS_AS(stage_state(model, rho0, 1.1, 5.0, 100), DomainError);
}

TEST_CASE("population extraction") {
    const auto model = tls_amplitude_damping({0.0, 0.0, 1.0});
    const auto traj = evolve(model, DensityMatrix::basis_state(2, 1),
                             TimeGrid(0.0, 1.0, 10), Method::ExpmMidpoint);
    const auto pops = populations(traj, {0, 1});
    REQUIRE(pops.size() == 2);
    REQUIRE(pops[0].size() == traj.size());
    for (std::size_t j = 0; j < traj.size(); ++j)
        CHECK(pops[0][j] + pops[1][j] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pops[1][0] == 1.0);
    CHECK_THROWS_AS(populations(traj, {2}), DomainError);
    CHECK_THROWS_AS(populations(traj, {-1}), DomainError);
}

TEST_CASE("divergence guards abort instead of returning garbage") {
    // Step size far beyond the stability region of the explicit scheme.
    const auto model = tls_amplitude_damping({0.0, 200.0, 50.0});
    const auto rho0 = DensityMatrix::basis_state(2, 1);
    EvolveOptions opt;
    opt.method = Method::Rk4;
    CHECK_THROWS_AS(
        evolve_at_times(model, rho0, {0.0, 2.5, 5.0}, opt), NumericalError);
}

TEST_CASE("evolve_at_times input validation") {
    const auto model = tls_amplitude_damping({0.0, 0.0, 1.0});
    const auto rho0 = DensityMatrix::basis_state(2, 1);
    CHECK_THROWS_AS(evolve_at_times(model, rho0, {0.0, 1.0, 1.0}, {}),
                    ParameterError);
    CHECK_THROWS_AS(evolve_at_times(model, rho0, {}, {}), ParameterError);
    EvolveOptions opt;
    opt.substeps = 0;
    CHECK_THROWS_AS(evolve_at_times(model, rho0, {0.0, 1.0}, opt),
                    ParameterError);
    const auto wrong = DensityMatrix::maximally_mixed(4);
    CHECK_THROWS_AS(evolve_at_times(model, wrong, {0.0, 1.0}, {}), ShapeError);
}

} // TEST_SUITE
