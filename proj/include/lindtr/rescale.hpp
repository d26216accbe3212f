#ifndef LINDTR_RESCALE_HPP
#define LINDTR_RESCALE_HPP

#include <string>
#include <vector>

#include "lindtr/model.hpp"
#include "lindtr/time_rescaling.hpp"

namespace lindtr {

/// Accelerated copy of `model`: identical operators, every coefficient c
/// replaced by c(f(t)) * fdot(t). The returned model's natural duration is
/// t_f / a. Requires the reference schedules to cover [0, t_f].
LindbladModel rescale_model(const LindbladModel& model,
                            const TimeRescaling& tr);

struct BoundaryCondition {
    std::string name;  // "i".."iv"
    bool pass = false;
    double metric = 0.0;  // the quantity the condition bounds
    std::string note;
};

/// Outcome of the four endpoint requirements on a candidate accelerated
/// process: (i) f^-1(0) = 0, (ii) f^-1(t_f) < t_f, (iii) the generators
/// agree at t = 0, (iv) they agree again at the endpoints f^-1(t_f) / t_f.
struct BoundaryReport {
    std::vector<BoundaryCondition> conditions;
    double peak_coefficient_amplification = 1.0;
    bool pass = false;

    /// Name of the first failing condition, or "" when all pass.
    std::string first_violation() const;
};

/// Validates conditions (i)-(iv) for the rescaled version of `reference`
/// built by rescale_model with `tr`. Generator comparisons are entrywise
/// on the assembled superoperators with tolerance `tol`.
BoundaryReport validate_boundary_conditions(const LindbladModel& reference,
                                            const TimeRescaling& tr,
                                            double tol = 1e-10);

/// Same checks against an externally supplied candidate (negative controls
/// hand this a deliberately corrupted model).
BoundaryReport validate_boundary_conditions(const LindbladModel& reference,
                                            const LindbladModel& candidate,
                                            const TimeRescaling& tr,
                                            double tol = 1e-10);

} // namespace lindtr

#endif
