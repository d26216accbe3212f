#ifndef LINDTR_MODEL_IO_HPP
#define LINDTR_MODEL_IO_HPP

#include <json.hpp>

#include "lindtr/model.hpp"
#include "lindtr/rescale.hpp"
#include "lindtr/verification.hpp"

namespace lindtr {

using Json = nlohmann::ordered_json;

/// Nested-array encoding: row i is a list of [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& m);

/// Accepts the nested-array encoding or one of the named 2x2 operators
/// "sigma_x", "sigma_z", "sigma_minus", "sigma_plus", "identity".
ComplexMatrix matrix_from_json(const Json& j);

/// Schedule objects: {"type": "constant", "value": v},
/// {"type": "tabulated", "times": [...], "values": [...]} or
/// {"type": "rescaled", "a": ..., "t_f": ..., "inner": {...}}.
/// Parse -> serialize round-trips are lossless for constant and tabulated.
Json schedule_to_json(const CoefficientSchedule& s);
CoefficientSchedule schedule_from_json(const Json& j);

/// Model documents carry either the explicit fields
/// {"dim", "hamiltonian_terms", "channels"} or a named builder
/// {"builder": "tls_amplitude_damping" | "tfim_dissipative", "params": {...}}.
Json model_to_json(const LindbladModel& model);
LindbladModel model_from_json(const Json& j);

Json boundary_report_to_json(const BoundaryReport& report);
Json equivalence_report_to_json(const EquivalenceReport& report);

} // namespace lindtr

#endif
