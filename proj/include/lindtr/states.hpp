#ifndef LINDTR_STATES_HPP
#define LINDTR_STATES_HPP

#include "lindtr/matrix.hpp"

namespace lindtr {

/// Tolerances for density-matrix physicality checks.
struct StateTolerances {
    double hermiticity = 1e-10;
    double trace = 1e-10;
    double min_eigenvalue = -1e-9;
};

/// System state rho: square complex matrix, nominally Hermitian,
/// unit-trace and positive semidefinite. The validated() factory enforces
/// those properties; trusted() skips the checks so integrators can carry
/// states whose physicality is monitored separately.
class DensityMatrix {
public:
    static DensityMatrix validated(ComplexMatrix m,
                                   const StateTolerances& tol = {});
    static DensityMatrix trusted(ComplexMatrix m);

    /// |index><index| on a dim-dimensional register.
    static DensityMatrix basis_state(int dim, int index);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const ComplexMatrix& matrix() const { return mat_; }

    double trace_error() const;         // |Tr rho - 1|
    double hermiticity_defect() const;  // max |rho - rho^dagger|
    double min_eigenvalue() const;      // of the Hermitian part

private:
    explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
    ComplexMatrix mat_;
};

/// Column-stacked state |rho>: amplitudes[j*dim + i] = rho(i, j).
struct VectorizedState {
    int dim = 0;
    ComplexVector amplitudes;
};

/// Column-stacking of a square matrix.
ComplexVector stack_columns(const ComplexMatrix& m);

/// Inverse of stack_columns; length must be a perfect square.
ComplexMatrix unstack_columns(const ComplexVector& v);

VectorizedState vectorize(const DensityMatrix& rho);
DensityMatrix devectorize(const VectorizedState& v);

} // namespace lindtr

#endif
