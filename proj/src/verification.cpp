#include "lindtr/verification.hpp"

#include <cmath>
#include <string>

#include "lindtr/errors.hpp"

namespace lindtr {

namespace {

void fold_physicality(EquivalenceReport& report, const DensityMatrix& rho) {
    report.max_trace_error = std::max(report.max_trace_error,
                                      rho.trace_error());
    report.max_hermiticity_error = std::max(report.max_hermiticity_error,
                                            rho.hermiticity_defect());
    report.min_eigenvalue = std::min(report.min_eigenvalue,
                                     rho.min_eigenvalue());
}

bool physicality_pass(const EquivalenceReport& report) {
    return report.max_trace_error <= report.physicality.trace &&
           report.max_hermiticity_error <= report.physicality.hermiticity &&
           report.min_eigenvalue >= report.physicality.min_eigenvalue;
}

} // namespace

EquivalenceReport check_reparametrization(const LindbladModel& model,
                                          const TimeRescaling& tr,
                                          const DensityMatrix& rho0, int steps,
                                          double tol,
                                          const EvolveOptions& options,
                                          const PhysicalityTolerances& phys) {
    BoundaryReport boundary = validate_boundary_conditions(model, tr);
    if (!boundary.pass) {
        throw ValidationError("boundary condition (" +
                              boundary.first_violation() +
                              ") fails; the accelerated process is not a "
                              "reparametrization of the reference");
    }

    const double t_f = tr.reference_duration();
    const TimeGrid grid(0.0, t_f, steps);
    const std::vector<double> ref_times = grid.nodes();

    // The accelerated run is sampled exactly where the clock map lands the
    // reference nodes, so the comparison needs no interpolation.
    std::vector<double> image_times(ref_times.size());
    for (std::size_t j = 0; j < ref_times.size(); ++j) {
        image_times[j] = tr.f_inverse(ref_times[j]);
    }

    const LindbladModel rescaled = rescale_model(model, tr);
    const Trajectory reference = evolve_at_times(model, rho0, ref_times,
                                                 options);
    const Trajectory accelerated = evolve_at_times(rescaled, rho0, image_times,
                                                   options);

    EquivalenceReport report;
    report.tolerance = tol;
    report.physicality = phys;
    report.node_times = ref_times;
    report.node_deviations.resize(ref_times.size());
    for (std::size_t j = 0; j < ref_times.size(); ++j) {
        const double dev = (accelerated.states[j].matrix() -
                            reference.states[j].matrix()).norm();
        report.node_deviations[j] = dev;
        report.max_state_deviation = std::max(report.max_state_deviation, dev);
        fold_physicality(report, reference.states[j]);
        fold_physicality(report, accelerated.states[j]);
    }
    report.pass = report.max_state_deviation <= tol && physicality_pass(report);
    return report;
}

double compare_propagators(const LindbladModel& model, const TimeRescaling& tr,
                           int steps) {
    const double t_f = tr.reference_duration();
    const LindbladModel rescaled = rescale_model(model, tr);
    const Propagator p_ref = propagator(model, 0.0, t_f, steps);
    const Propagator p_acc = propagator(rescaled, 0.0, tr.f_inverse(t_f),
                                        steps);
    return max_abs_diff(p_ref.matrix, p_acc.matrix);
}

double amplitude_damping_oracle(double gamma, double t, double p1_initial) {
    if (gamma < 0.0) {
        throw ParameterError("decay rate must be nonnegative, got " +
                             std::to_string(gamma));
    }
    return p1_initial * std::exp(-gamma * t);
}

EquivalenceReport cptp_monitor(const Trajectory& traj, double tol_trace,
                               double tol_herm, double tol_pos) {
    if (traj.states.empty()) {
        throw ParameterError("physicality sweep over an empty trajectory");
    }
    EquivalenceReport report;
    report.physicality.trace = tol_trace;
    report.physicality.hermiticity = tol_herm;
    report.physicality.min_eigenvalue = tol_pos;
    report.node_times = traj.times;
    for (const auto& rho : traj.states) fold_physicality(report, rho);
    report.pass = physicality_pass(report);
    return report;
}

} // namespace lindtr
