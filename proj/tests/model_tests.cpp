#include <doctest.h>

#include <random>
#include <vector>

#include "lindtr/errors.hpp"
#include "lindtr/model.hpp"

using namespace lindtr;

namespace {

ComplexMatrix random_matrix(std::mt19937_64& rng, int d) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    ComplexMatrix m(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            m(i, j) = Complex(dist(rng), dist(rng));
        }
    }
    return m;
}

ComplexMatrix random_hermitian(std::mt19937_64& rng, int d) {
    const ComplexMatrix m = random_matrix(rng, d);
    return 0.5 * (m + m.adjoint());
}

} // namespace

TEST_SUITE("lindblad-model") {

TEST_CASE("construction validation") {
    std::vector<HamiltonianTerm> terms;
    terms.push_back({pauli(Pauli::Minus), CoefficientSchedule::constant(1.0)});
    CHECK_THROWS_AS(LindbladModel(2, std::move(terms), {}), ValidationError);

    std::vector<HamiltonianTerm> wrong_shape;
    wrong_shape.push_back(
        {ComplexMatrix::Identity(4, 4), CoefficientSchedule::constant(1.0)});
    CHECK_THROWS_AS(LindbladModel(2, std::move(wrong_shape), {}), ShapeError);

    CHECK_THROWS_AS(LindbladModel(1, {}, {}), ParameterError);
}

TEST_CASE("negative rates are rejected at evaluation, never clamped") {
    std::vector<DissipationChannel> channels;
    channels.push_back(
        {pauli(Pauli::Minus), CoefficientSchedule::constant(-0.5)});
    const LindbladModel model(2, {}, std::move(channels));
    CHECK_THROWS_AS(build_liouvillian(model, 0.0), ValidationError);
    CHECK_THROWS_AS(
        lindblad_rhs(model, ComplexMatrix(ComplexMatrix::Identity(2, 2)), 0.0),
        ValidationError);
}

TEST_CASE("hamiltonian_at weights terms by their schedules") {
    std::vector<HamiltonianTerm> terms;
    terms.push_back({pauli(Pauli::Z), CoefficientSchedule::constant(2.0)});
    terms.push_back({pauli(Pauli::X),
                     CoefficientSchedule::tabulated({0.0, 1.0}, {0.0, 4.0})});
    const LindbladModel model(2, std::move(terms), {});
    CHECK_FALSE(model.all_constant());
    CHECK(model.covers(0.0, 1.0));
    CHECK_FALSE(model.covers(0.0, 2.0));

    const ComplexMatrix h = hamiltonian_at(model, 0.5);
    CHECK(approx_equal(h, ComplexMatrix(2.0 * pauli(Pauli::Z) +
                                        2.0 * pauli(Pauli::X))));
}

TEST_CASE("pure decay generator has the textbook entries") {
    const double gamma = 0.7;
    std::vector<DissipationChannel> channels;
    channels.push_back(
        {pauli(Pauli::Minus), CoefficientSchedule::constant(gamma)});
    const LindbladModel model(2, {}, std::move(channels));
    const Superoperator sup = build_liouvillian(model, 0.0);
    REQUIRE(sup.matrix.rows() == 4);

    // column-stacked ordering (rho00, rho10, rho01, rho11):
    // d rho11 = -gamma rho11, d rho00 = +gamma rho11, coherences halve.
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 3) = gamma;
    expected(1, 1) = -0.5 * gamma;
    expected(2, 2) = -0.5 * gamma;
    expected(3, 3) = -gamma;
    CHECK(max_abs_diff(sup.matrix, expected) < 1e-15);
}

TEST_CASE("dense right-hand side of pure decay on the excited state") {
    std::vector<DissipationChannel> channels;
    channels.push_back(
        {pauli(Pauli::Minus), CoefficientSchedule::constant(1.0)});
    const LindbladModel model(2, {}, std::move(channels));
    const auto rho = DensityMatrix::basis_state(2, 1);
    const ComplexMatrix out = lindblad_rhs(model, rho, 0.0);
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = 1.0;
    expected(1, 1) = -1.0;
    CHECK(max_abs_diff(out, expected) < 1e-15);
}

TEST_CASE("dense RHS and vectorized generator agree on random models") {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> rate(0.0, 2.0);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_real_distribution<double> time(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = (trial % 2 == 0) ? 2 : 4;
        std::vector<HamiltonianTerm> terms;
        terms.push_back({random_hermitian(rng, d),
                         CoefficientSchedule::constant(coef(rng))});
        terms.push_back(
            {random_hermitian(rng, d),
             CoefficientSchedule::tabulated({0.0, 1.0},
                                            {coef(rng), coef(rng)})});
        std::vector<DissipationChannel> channels;
        channels.push_back(
            {random_matrix(rng, d), CoefficientSchedule::constant(rate(rng))});
        channels.push_back({random_matrix(rng, d),
                            CoefficientSchedule::tabulated(
                                {0.0, 1.0}, {rate(rng), rate(rng)})});
        const LindbladModel model(d, std::move(terms), std::move(channels));

        const ComplexMatrix rho = random_matrix(rng, d);
        const double t = time(rng);
        const ComplexVector lhs = stack_columns(lindblad_rhs(model, rho, t));
        const ComplexVector rhs =
            build_liouvillian(model, t).matrix * stack_columns(rho);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("the generator annihilates the trace") {
    // row sums of column sums: Tr(L[rho]) = 0 for any rho, i.e. the sum of
    // rows {j*d+j} of the superoperator vanishes columnwise.
    std::mt19937_64 rng(5);
    const int d = 4;
    std::vector<HamiltonianTerm> terms;
    terms.push_back(
        {random_hermitian(rng, d), CoefficientSchedule::constant(1.3)});
    std::vector<DissipationChannel> channels;
    channels.push_back(
        {random_matrix(rng, d), CoefficientSchedule::constant(0.8)});
    const LindbladModel model(d, std::move(terms), std::move(channels));
    const Superoperator sup = build_liouvillian(model, 0.0);
    for (Eigen::Index col = 0; col < sup.matrix.cols(); ++col) {
        Complex trace_row(0.0, 0.0);
        for (int j = 0; j < d; ++j) trace_row += sup.matrix(j * d + j, col);
        CHECK(std::abs(trace_row) < 1e-12);
    }
}

} // TEST_SUITE
