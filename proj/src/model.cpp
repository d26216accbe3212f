#include "lindtr/model.hpp"

#include <string>

#include "lindtr/errors.hpp"

namespace lindtr {

double DissipationChannel::rate_at(double t) const {
    const double g = rate.value(t);
    if (g < 0.0) {
        throw ValidationError("dissipation rate is negative (" +
                              std::to_string(g) + ") at t = " +
                              std::to_string(t));
    }
    return g;
}

namespace {

void require_square(const ComplexMatrix& m, int dim, const char* what) {
    if (m.rows() != dim || m.cols() != dim) {
        throw ShapeError(std::string(what) + " is " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(dim) + "x" + std::to_string(dim));
    }
}

} // namespace

LindbladModel::LindbladModel(int dim,
                             std::vector<HamiltonianTerm> hamiltonian_terms,
                             std::vector<DissipationChannel> channels)
    : dim_(dim),
      hamiltonian_terms_(std::move(hamiltonian_terms)),
      channels_(std::move(channels)) {
    if (dim_ < 2) {
        throw ParameterError("model dimension must be at least 2, got " +
                             std::to_string(dim_));
    }
    for (const auto& term : hamiltonian_terms_) {
        require_square(term.op, dim_, "Hamiltonian term");
        if (hermiticity_error(term.op) > kDefaultMatrixTol) {
            throw ValidationError("Hamiltonian term is not Hermitian "
                                  "(defect " +
                                  std::to_string(hermiticity_error(term.op)) +
                                  ")");
        }
    }
    for (const auto& ch : channels_) {
        require_square(ch.op, dim_, "channel operator");
    }
}

bool LindbladModel::all_constant() const {
    for (const auto& term : hamiltonian_terms_) {
        if (!term.coefficient.is_constant()) return false;
    }
    for (const auto& ch : channels_) {
        if (!ch.rate.is_constant()) return false;
    }
    return true;
}

bool LindbladModel::covers(double lo, double hi) const {
    for (const auto& term : hamiltonian_terms_) {
        if (!term.coefficient.covers(lo, hi)) return false;
    }
    for (const auto& ch : channels_) {
        if (!ch.rate.covers(lo, hi)) return false;
    }
    return true;
}

ComplexMatrix hamiltonian_at(const LindbladModel& model, double t) {
    ComplexMatrix h = ComplexMatrix::Zero(model.dim(), model.dim());
    for (const auto& term : model.hamiltonian_terms()) {
        h += term.coefficient.value(t) * term.op;
    }
    return h;
}

ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho,
                           double t) {
    require_square(rho, model.dim(), "state");
    const Complex i_unit(0.0, 1.0);
    const ComplexMatrix h = hamiltonian_at(model, t);
    ComplexMatrix out = -i_unit * (h * rho - rho * h);
    for (const auto& ch : model.channels()) {
        const double g = ch.rate_at(t);
        if (g == 0.0) continue;
        const ComplexMatrix ldl = ch.op.adjoint() * ch.op;
        out += g * (ch.op * rho * ch.op.adjoint() -
                    0.5 * (ldl * rho + rho * ldl));
    }
    return out;
}

ComplexMatrix lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho,
                           double t) {
    return lindblad_rhs(model, rho.matrix(), t);
}

Superoperator build_liouvillian(const LindbladModel& model, double t) {
    const int d = model.dim();
    const Complex i_unit(0.0, 1.0);
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);

    const ComplexMatrix h = hamiltonian_at(model, t);
    ComplexMatrix sup =
        -i_unit * (kron(id, h) - kron(h.transpose(), id));
    for (const auto& ch : model.channels()) {
        const double g = ch.rate_at(t);
        if (g == 0.0) continue;
        const ComplexMatrix ldl = ch.op.adjoint() * ch.op;
        sup += g * (kron(ch.op.conjugate(), ch.op) -
                    0.5 * kron(id, ldl) -
                    0.5 * kron(ldl.transpose(), id));
    }
    return Superoperator{d, std::move(sup)};
}

} // namespace lindtr
