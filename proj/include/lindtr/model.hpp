#ifndef LINDTR_MODEL_HPP
#define LINDTR_MODEL_HPP

#include <vector>

#include "lindtr/matrix.hpp"
#include "lindtr/schedule.hpp"
#include "lindtr/states.hpp"

namespace lindtr {

/// One Hermitian operator with its scalar coefficient schedule; the
/// Hamiltonian is the schedule-weighted sum of these.
struct HamiltonianTerm {
    ComplexMatrix op;
    CoefficientSchedule coefficient;
};

/// One dissipation channel: a time-independent Lindblad operator and its
/// nonnegative rate schedule.
struct DissipationChannel {
    ComplexMatrix op;
    CoefficientSchedule rate;

    /// Rate at time t; throws ValidationError if the schedule evaluates
    /// negative (rejected, never clamped).
    double rate_at(double t) const;
};

/// Declarative open-system model: H(t) = sum_j c_j(t) H_j plus channels
/// (L_k, gamma_k(t)). Operators carry no time dependence; only the scalar
/// schedules do. Immutable after construction.
class LindbladModel {
public:
    LindbladModel(int dim, std::vector<HamiltonianTerm> hamiltonian_terms,
                  std::vector<DissipationChannel> channels);

    int dim() const { return dim_; }
    const std::vector<HamiltonianTerm>& hamiltonian_terms() const {
        return hamiltonian_terms_;
    }
    const std::vector<DissipationChannel>& channels() const {
        return channels_;
    }

    /// True when every coefficient and rate is a plain constant, in which
    /// case the Liouvillian is time-independent and may be built once.
    bool all_constant() const;

    /// True when every schedule is evaluable on [lo, hi].
    bool covers(double lo, double hi) const;

private:
    int dim_;
    std::vector<HamiltonianTerm> hamiltonian_terms_;
    std::vector<DissipationChannel> channels_;
};

/// d^2 x d^2 generator acting on column-stacked states.
struct Superoperator {
    int dim = 0;
    ComplexMatrix matrix;

    ComplexVector apply(const ComplexVector& v) const { return matrix * v; }
};

/// H(t) = sum_j c_j(t) H_j.
ComplexMatrix hamiltonian_at(const LindbladModel& model, double t);

/// Dense master-equation right-hand side
///   -i[H(t), rho] + sum_k gamma_k(t) (L rho L^dag - 1/2 {L^dag L, rho}).
ComplexMatrix lindblad_rhs(const LindbladModel& model, const ComplexMatrix& rho,
                           double t);
ComplexMatrix lindblad_rhs(const LindbladModel& model, const DensityMatrix& rho,
                           double t);

/// Vectorized generator
///   -i(I (x) H - H^T (x) I)
///   + sum_k gamma_k [L* (x) L - 1/2 I (x) L^dag L - 1/2 (L^dag L)^T (x) I]
/// so that stack_columns(lindblad_rhs(rho)) = matrix * stack_columns(rho).
Superoperator build_liouvillian(const LindbladModel& model, double t);

} // namespace lindtr

#endif
