#ifndef LINDTR_VERIFICATION_HPP
#define LINDTR_VERIFICATION_HPP

#include <vector>

#include "lindtr/model.hpp"
#include "lindtr/propagation.hpp"
#include "lindtr/rescale.hpp"
#include "lindtr/time_rescaling.hpp"

namespace lindtr {

struct PhysicalityTolerances {
    double trace = 1e-9;
    double hermiticity = 1e-9;
    double min_eigenvalue = -1e-8;
};

/// Metrics from comparing an accelerated trajectory against its reference,
/// plus physicality of every state seen along the way.
struct EquivalenceReport {
    double max_state_deviation = 0.0;  // Frobenius norm, worst node
    double max_trace_error = 0.0;
    double max_hermiticity_error = 0.0;
    double min_eigenvalue = 1.0;
    std::vector<double> node_times;       // reference node times
    std::vector<double> node_deviations;  // per-node Frobenius deviations
    double tolerance = 0.0;               // deviation tolerance applied
    PhysicalityTolerances physicality;
    bool pass = false;
};

/// Certifies that the rescaled process retraces the reference trajectory
/// under the reparametrized clock. The reference is integrated on the
/// uniform grid {t_j} over [0, t_f]; the rescaled model is integrated on
/// the exact image grid {f^-1(t_j)} (no interpolation enters the metric);
/// the report records the Frobenius deviation between the two at every node.
/// Boundary conditions are validated first; failure throws ValidationError.
EquivalenceReport check_reparametrization(
    const LindbladModel& model, const TimeRescaling& tr,
    const DensityMatrix& rho0, int steps, double tol,
    const EvolveOptions& options = {},
    const PhysicalityTolerances& phys = {});

/// Max-entry deviation between the rescaled propagator over [0, f^-1(t_f)]
/// and the reference propagator over [0, t_f], both built as ordered
/// products with `steps` intervals.
double compare_propagators(const LindbladModel& model, const TimeRescaling& tr,
                           int steps);

/// Closed-form excited population of the undriven amplitude-damping
/// channel: p1_initial * exp(-gamma * t).
double amplitude_damping_oracle(double gamma, double t, double p1_initial);

/// Physicality sweep over a trajectory: worst trace error, worst
/// Hermiticity defect and smallest eigenvalue across all nodes.
EquivalenceReport cptp_monitor(const Trajectory& traj,
                               double tol_trace = 1e-9,
                               double tol_herm = 1e-9,
                               double tol_pos = -1e-8);

} // namespace lindtr

#endif
