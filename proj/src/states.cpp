#include "lindtr/states.hpp"

#include <cmath>
#include <string>

#include "lindtr/errors.hpp"

namespace lindtr {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require_state_dim(int dim) {
    if (!is_power_of_two(dim) || dim > (1 << kMaxQubits)) {
        throw SizeError("density matrix dimension " + std::to_string(dim) +
                        " is not a power of two within the qubit cap");
    }
}

} // namespace

DensityMatrix DensityMatrix::validated(ComplexMatrix m,
                                       const StateTolerances& tol) {
    if (m.rows() != m.cols()) {
        throw ShapeError("density matrix must be square");
    }
    require_state_dim(static_cast<int>(m.rows()));
    DensityMatrix rho(std::move(m));
    if (rho.hermiticity_defect() > tol.hermiticity) {
        throw ValidationError("density matrix is not Hermitian: defect " +
                              std::to_string(rho.hermiticity_defect()));
    }
    if (rho.trace_error() > tol.trace) {
        throw ValidationError("density matrix trace deviates from 1 by " +
                              std::to_string(rho.trace_error()));
    }
    if (rho.min_eigenvalue() < tol.min_eigenvalue) {
        throw ValidationError("density matrix not positive semidefinite: "
                              "min eigenvalue " +
                              std::to_string(rho.min_eigenvalue()));
    }
    return rho;
}

DensityMatrix DensityMatrix::trusted(ComplexMatrix m) {
    if (m.rows() != m.cols()) {
        throw ShapeError("density matrix must be square");
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::basis_state(int dim, int index) {
    require_state_dim(dim);
    if (index < 0 || index >= dim) {
        throw DomainError("basis_state: index " + std::to_string(index) +
                          " out of range for dim " + std::to_string(dim));
    }
    ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
    m(index, index) = 1.0;
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    require_state_dim(dim);
    ComplexMatrix m =
        ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(std::move(m));
}

double DensityMatrix::trace_error() const {
    return std::abs(mat_.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::hermiticity_defect() const {
    return hermiticity_error(mat_);
}

double DensityMatrix::min_eigenvalue() const {
    return min_hermitian_eigenvalue(mat_);
}

ComplexVector stack_columns(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw ShapeError("stack_columns: matrix is not square");
    }
    const Eigen::Index d = m.rows();
    ComplexVector v(d * d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            v(j * d + i) = m(i, j);
        }
    }
    return v;
}

ComplexMatrix unstack_columns(const ComplexVector& v) {
    const auto n = v.size();
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(
        static_cast<double>(n))));
    if (d * d != n) {
        throw ShapeError("unstack_columns: length " + std::to_string(n) +
                         " is not a perfect square");
    }
    ComplexMatrix m(d, d);
    for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            m(i, j) = v(j * d + i);
        }
    }
    return m;
}

VectorizedState vectorize(const DensityMatrix& rho) {
    return VectorizedState{rho.dim(), stack_columns(rho.matrix())};
}

DensityMatrix devectorize(const VectorizedState& v) {
    ComplexMatrix m = unstack_columns(v.amplitudes);
    if (v.dim != 0 && m.rows() != v.dim) {
        throw ShapeError("devectorize: declared dim " + std::to_string(v.dim) +
                         " does not match amplitude count");
    }
    return DensityMatrix::trusted(std::move(m));
}

} // namespace lindtr
