#include "lindtr/model_io.hpp"

#include <string>
#include <utility>
#include <vector>

#include "lindtr/errors.hpp"
#include "lindtr/model_library.hpp"

namespace lindtr {

namespace {

const Json& require_key(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(std::string(what) + ": missing key '" + key +
                              "'");
    }
    return j.at(key);
}

double as_number(const Json& j, const char* what) {
    if (!j.is_number()) {
        throw ValidationError(std::string(what) + ": expected a number, got " +
                              std::string(j.type_name()));
    }
    return j.get<double>();
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw ValidationError(std::string(what) +
                              ": expected an integer, got " +
                              std::string(j.type_name()));
    }
    return j.get<int>();
}

std::vector<double> as_number_list(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw ValidationError(std::string(what) + ": expected an array");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(as_number(e, what));
    return out;
}

} // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "sigma_x") return pauli(Pauli::X);
        if (name == "sigma_z") return pauli(Pauli::Z);
        if (name == "sigma_minus") return pauli(Pauli::Minus);
        if (name == "sigma_plus") return pauli(Pauli::Plus);
        if (name == "identity") return pauli(Pauli::Identity);
        throw ValidationError("unknown operator name '" + name + "'");
    }
    if (!j.is_array() || j.empty()) {
        throw ValidationError("operator: expected a nested array or a name");
    }
    const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
    const Eigen::Index cols = static_cast<Eigen::Index>(j.at(0).size());
    ComplexMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Json& row = j.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw ValidationError("operator: ragged rows");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            const Json& e = row.at(static_cast<std::size_t>(k));
            if (e.is_number()) {
                m(i, k) = Complex(e.get<double>(), 0.0);
            } else if (e.is_array() && e.size() == 2) {
                m(i, k) = Complex(as_number(e.at(0), "operator entry"),
                                  as_number(e.at(1), "operator entry"));
            } else {
                throw ValidationError(
                    "operator entry: expected a number or an [re, im] pair");
            }
        }
    }
    return m;
}

Json schedule_to_json(const CoefficientSchedule& s) {
    Json j;
    switch (s.kind()) {
    case CoefficientSchedule::Kind::Constant:
        j["type"] = "constant";
        j["value"] = s.constant_value();
        return j;
    case CoefficientSchedule::Kind::Tabulated:
        j["type"] = "tabulated";
        j["times"] = s.table_times();
        j["values"] = s.table_values();
        return j;
    case CoefficientSchedule::Kind::Rescaled:
    default: {
        const TimeRescaling& tr = s.rescaling();
        j["type"] = "rescaled";
        j["a"] = tr.contraction();
        j["t_f"] = tr.reference_duration();
        if (tr.contraction() < 1.0) j["allow_slowdown"] = true;
        j["inner"] = schedule_to_json(s.inner());
        return j;
    }
    }
}

CoefficientSchedule schedule_from_json(const Json& j) {
    if (j.is_number()) {
        return CoefficientSchedule::constant(j.get<double>());
    }
    const std::string type =
        require_key(j, "type", "schedule").get<std::string>();
    if (type == "constant") {
        return CoefficientSchedule::constant(
            as_number(require_key(j, "value", "constant schedule"),
                      "schedule value"));
    }
    if (type == "tabulated") {
        return CoefficientSchedule::tabulated(
            as_number_list(require_key(j, "times", "tabulated schedule"),
                           "schedule times"),
            as_number_list(require_key(j, "values", "tabulated schedule"),
                           "schedule values"));
    }
    if (type == "rescaled") {
        const double a =
            as_number(require_key(j, "a", "rescaled schedule"), "a");
        const double t_f =
            as_number(require_key(j, "t_f", "rescaled schedule"), "t_f");
        const bool allow = j.value("allow_slowdown", false);
        return CoefficientSchedule::rescaled(
            schedule_from_json(require_key(j, "inner", "rescaled schedule")),
            TimeRescaling(a, t_f, allow));
    }
    throw ValidationError("unknown schedule type '" + type + "'");
}

Json model_to_json(const LindbladModel& model) {
    Json j;
    j["dim"] = model.dim();
    Json terms = Json::array();
    for (const auto& term : model.hamiltonian_terms()) {
        Json t;
        t["op"] = matrix_to_json(term.op);
        t["coefficient"] = schedule_to_json(term.coefficient);
        terms.push_back(std::move(t));
    }
    j["hamiltonian_terms"] = std::move(terms);
    Json channels = Json::array();
    for (const auto& ch : model.channels()) {
        Json c;
        c["op"] = matrix_to_json(ch.op);
        c["rate"] = schedule_to_json(ch.rate);
        channels.push_back(std::move(c));
    }
    j["channels"] = std::move(channels);
    return j;
}

namespace {

LindbladModel model_from_builder(const Json& j) {
    const std::string builder =
        require_key(j, "builder", "model").get<std::string>();
    const Json params = j.contains("params") ? j.at("params") : Json::object();
    if (!params.is_object()) {
        throw ValidationError("model params: expected an object");
    }
    if (builder == "tls_amplitude_damping") {
        TlsParams p;
        for (const auto& [key, value] : params.items()) {
            if (key == "delta") p.delta = as_number(value, "delta");
            else if (key == "omega") p.omega = as_number(value, "omega");
            else if (key == "gamma") p.gamma = as_number(value, "gamma");
            else throw ValidationError("unknown parameter '" + key +
                                       "' for builder tls_amplitude_damping");
        }
        return tls_amplitude_damping(p);
    }
    if (builder == "tfim_dissipative") {
        TfimParams p;
        for (const auto& [key, value] : params.items()) {
            if (key == "n_sites") p.n_sites = as_int(value, "n_sites");
            else if (key == "j_coupling") p.j_coupling = as_number(value, "j_coupling");
            else if (key == "h_field") p.h_field = as_number(value, "h_field");
            else if (key == "gamma") p.gamma = as_number(value, "gamma");
            else throw ValidationError("unknown parameter '" + key +
                                       "' for builder tfim_dissipative");
        }
        return tfim_dissipative(p);
    }
    throw ValidationError("unknown model builder '" + builder + "'");
}

} // namespace

LindbladModel model_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ValidationError("model: expected an object");
    }
    if (j.contains("builder")) return model_from_builder(j);

    const int dim = as_int(require_key(j, "dim", "model"), "model dim");
    std::vector<HamiltonianTerm> terms;
    if (j.contains("hamiltonian_terms")) {
        const Json& arr = j.at("hamiltonian_terms");
        if (!arr.is_array()) {
            throw ValidationError("hamiltonian_terms: expected an array");
        }
        for (const auto& t : arr) {
            terms.push_back(HamiltonianTerm{
                matrix_from_json(require_key(t, "op", "Hamiltonian term")),
                schedule_from_json(
                    require_key(t, "coefficient", "Hamiltonian term"))});
        }
    }
    std::vector<DissipationChannel> channels;
    if (j.contains("channels")) {
        const Json& arr = j.at("channels");
        if (!arr.is_array()) {
            throw ValidationError("channels: expected an array");
        }
        for (const auto& c : arr) {
            channels.push_back(DissipationChannel{
                matrix_from_json(require_key(c, "op", "channel")),
                schedule_from_json(require_key(c, "rate", "channel"))});
        }
    }
    return LindbladModel(dim, std::move(terms), std::move(channels));
}

Json boundary_report_to_json(const BoundaryReport& report) {
    Json j;
    j["pass"] = report.pass;
    j["peak_coefficient_amplification"] =
        report.peak_coefficient_amplification;
    j["first_violation"] = report.first_violation();
    Json conditions = Json::array();
    for (const auto& c : report.conditions) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["metric"] = c.metric;
        cj["note"] = c.note;
        conditions.push_back(std::move(cj));
    }
    j["conditions"] = std::move(conditions);
    return j;
}

Json equivalence_report_to_json(const EquivalenceReport& report) {
    Json j;
    j["pass"] = report.pass;
    j["max_state_deviation"] = report.max_state_deviation;
    j["tolerance"] = report.tolerance;
    j["max_trace_error"] = report.max_trace_error;
    j["max_hermiticity_error"] = report.max_hermiticity_error;
    j["min_eigenvalue"] = report.min_eigenvalue;
    Json phys;
    phys["trace"] = report.physicality.trace;
    phys["hermiticity"] = report.physicality.hermiticity;
    phys["min_eigenvalue"] = report.physicality.min_eigenvalue;
    j["physicality_tolerances"] = std::move(phys);
    j["node_times"] = report.node_times;
    j["node_deviations"] = report.node_deviations;
    return j;
}

} // namespace lindtr
