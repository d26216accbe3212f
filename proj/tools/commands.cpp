#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>
#include <utility>
#include <vector>

#include "lindtr/errors.hpp"
#include "lindtr/model_io.hpp"
#include "lindtr/propagation.hpp"
#include "lindtr/rescale.hpp"
#include "lindtr/time_rescaling.hpp"
#include "lindtr/verification.hpp"

namespace lindtr::cli {
namespace {

namespace fs = std::filesystem;

// ---- formatting ------------------------------------------------------------

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_short(double x) {  // path components, log lines
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string basis_label(int index, int dim) {
    int n = 0;
    while ((1 << n) < dim) ++n;
    if ((1 << n) != dim) return std::to_string(index);
    std::string s(static_cast<std::size_t>(n), '0');
    for (int b = 0; b < n; ++b) {
        if ((index >> b) & 1) s[static_cast<std::size_t>(n - 1 - b)] = '1';
    }
    return s;
}

// ---- config loading --------------------------------------------------------

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot read config file '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ValidationError("config '" + path + "': " + e.what());
    }
}

double number_at(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw ValidationError(std::string("config: missing numeric key '") +
                              key + "'");
    }
    return j.at(key).get<double>();
}

int int_at(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) {
        throw ValidationError(std::string("config: missing integer key '") +
                              key + "'");
    }
    return j.at(key).get<int>();
}

DensityMatrix initial_state_from_json(const Json& j, int dim) {
    if (!j.contains("initial_state")) {
        throw ValidationError("config: missing key 'initial_state' "
                              "(basis index or matrix)");
    }
    const Json& s = j.at("initial_state");
    if (s.is_number_integer()) {
        return DensityMatrix::basis_state(dim, s.get<int>());
    }
    return DensityMatrix::validated(matrix_from_json(s));
}

std::vector<int> population_indices_from_json(const Json& j, int dim) {
    std::vector<int> indices;
    if (j.contains("outputs")) {
        const Json& outputs = j.at("outputs");
        if (!outputs.is_array() || outputs.size() != 1) {
            throw ValidationError(
                "config: 'outputs' must be a one-element array");
        }
        const Json& block = outputs.at(0);
        if (block.contains("format") &&
            block.at("format").get<std::string>() != "csv") {
            throw ValidationError("config: only the csv output format exists");
        }
        const Json& pops = block.at("populations");
        if (!pops.is_array()) {
            throw ValidationError("config: 'populations' must be an array");
        }
        for (const auto& e : pops) {
            const int idx = e.get<int>();
            if (idx < 0 || idx >= dim) {
                throw ValidationError("config: population index " +
                                      std::to_string(idx) + " outside [0, " +
                                      std::to_string(dim) + ")");
            }
            indices.push_back(idx);
        }
    } else {
        for (int idx = 0; idx < dim; ++idx) indices.push_back(idx);
    }
    return indices;
}

struct ParsedRun {
    LindbladModel model;  // reference process
    DensityMatrix rho0;
    double t_f;
    double a;
    bool allow_slowdown;
    int steps;
    Method method;
    std::vector<int> population_indices;
    double tol;
    double propagator_tol;
    std::string name;
    fs::path out_dir;
};

ParsedRun parse_run_config(const Json& j, const CliOverrides& o,
                           const std::string& config_path) {
    if (!j.contains("model")) {
        throw ValidationError("config: missing key 'model'");
    }
    LindbladModel model = model_from_json(j.at("model"));
    DensityMatrix rho0 = initial_state_from_json(j, model.dim());

    const double t_f = o.t_f ? *o.t_f : number_at(j, "t_f");
    if (!(t_f > 0.0)) {
        throw ValidationError("config: t_f must be positive, got " +
                              std::to_string(t_f));
    }
    const double a = o.a ? *o.a : (j.contains("a") ? number_at(j, "a") : 1.0);
    const int steps = o.steps ? *o.steps : int_at(j, "steps");
    if (steps < 1) {
        throw ValidationError("config: steps must be at least 1, got " +
                              std::to_string(steps));
    }
    const std::string method_str =
        o.method ? *o.method : j.value("method", std::string("rk4"));
    std::vector<int> indices = population_indices_from_json(j, model.dim());

    return ParsedRun{
        std::move(model),
        std::move(rho0),
        t_f,
        a,
        j.value("allow_slowdown", false),
        steps,
        method_from_name(method_str),
        std::move(indices),
        o.tol ? *o.tol : j.value("tol", 1e-6),
        j.value("propagator_tol", 1e-7),
        j.value("name", fs::path(config_path).stem().string()),
        fs::path(o.out_dir ? *o.out_dir : j.value("out", std::string("."))),
    };
}

// ---- output writing --------------------------------------------------------

std::string trajectory_csv(const Trajectory& traj,
                           const std::vector<int>& indices) {
    const int dim = traj.dim();
    std::string out = "time";
    for (int idx : indices) out += ",pop_" + basis_label(idx, dim);
    out += ",trace_error\n";
    for (std::size_t row = 0; row < traj.size(); ++row) {
        out += fmt17(traj.times[row]);
        const auto& rho = traj.states[row];
        for (int idx : indices) {
            out += ',';
            out += fmt17(rho.matrix()(idx, idx).real());
        }
        out += ',';
        out += fmt17(rho.trace_error());
        out += '\n';
    }
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ValidationError("cannot write '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw ValidationError("short write to '" + path.string() + "'");
    }
}

Json final_populations_json(const Trajectory& traj,
                            const std::vector<int>& indices) {
    Json pops;
    const auto& rho = traj.final_state();
    for (int idx : indices) {
        pops["pop_" + basis_label(idx, traj.dim())] =
            rho.matrix()(idx, idx).real();
    }
    return pops;
}

// ---- error mapping ---------------------------------------------------------

template <typename F>
int guarded(F&& body, std::ostream& err) {
    try {
        return body();
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumericalFailure;
    } catch (const std::exception& e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfigError;
    }
}

// Evolves the requested process: the reference itself for a = 1, the
// rescaled copy over [0, t_f/a] otherwise.
Trajectory run_process(const LindbladModel& reference, const ParsedRun& run,
                       double a) {
    EvolveOptions options;
    options.method = run.method;
    if (a == 1.0) {
        return evolve_at_times(reference, run.rho0,
                               TimeGrid(0.0, run.t_f, run.steps).nodes(),
                               options);
    }
    const TimeRescaling tr(a, run.t_f, run.allow_slowdown);
    const LindbladModel rescaled = rescale_model(reference, tr);
    return evolve_at_times(rescaled, run.rho0,
                           TimeGrid(0.0, tr.rescaled_duration(), run.steps)
                               .nodes(),
                           options);
}

} // namespace

// ---- simulate ---------------------------------------------------------------

int cmd_simulate(const std::string& config_path, const CliOverrides& overrides,
                 std::ostream& out, std::ostream& err) {
    return guarded([&]() -> int {
        const Json config = load_json(config_path);
        const ParsedRun run = parse_run_config(config, overrides, config_path);

        const auto clock_start = std::chrono::steady_clock::now();
        const Trajectory traj = run_process(run.model, run, run.a);
        const std::chrono::duration<double> wall =
            std::chrono::steady_clock::now() - clock_start;

        fs::create_directories(run.out_dir);
        const fs::path csv_path = run.out_dir / (run.name + ".csv");
        write_file(csv_path, trajectory_csv(traj, run.population_indices));

        const EquivalenceReport cptp = cptp_monitor(traj);

        Json summary;
        summary["command"] = "simulate";
        summary["name"] = run.name;
        summary["dim"] = run.model.dim();
        summary["t_f"] = run.t_f;
        summary["a"] = run.a;
        summary["duration"] = run.t_f / run.a;
        summary["steps"] = run.steps;
        summary["method"] = std::string(method_name(run.method));
        summary["final_time"] = traj.times.back();
        summary["final_populations"] =
            final_populations_json(traj, run.population_indices);
        Json cptp_json;
        cptp_json["pass"] = cptp.pass;
        cptp_json["max_trace_error"] = cptp.max_trace_error;
        cptp_json["max_hermiticity_error"] = cptp.max_hermiticity_error;
        cptp_json["min_eigenvalue"] = cptp.min_eigenvalue;
        summary["cptp"] = std::move(cptp_json);
        summary["wall_time_seconds"] = wall.count();
        summary["csv"] = csv_path.filename().string();

        const fs::path summary_path =
            run.out_dir / (run.name + "_summary.json");
        write_file(summary_path, summary.dump(2) + "\n");

        out << "simulate " << run.name << ": " << traj.size()
            << " nodes over [0, " << fmt_short(traj.times.back())
            << "], wrote " << csv_path.string() << " and "
            << summary_path.string() << "\n";
        return kExitOk;
    }, err);
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const std::string& config_path, const CliOverrides& overrides,
               std::ostream& out, std::ostream& err) {
    return guarded([&]() -> int {
        const Json config = load_json(config_path);
        const ParsedRun run = parse_run_config(config, overrides, config_path);
        const TimeRescaling tr(run.a, run.t_f, run.allow_slowdown);

        const BoundaryReport boundary =
            validate_boundary_conditions(run.model, tr);

        Json report;
        report["command"] = "verify";
        report["name"] = run.name;
        report["a"] = run.a;
        report["t_f"] = run.t_f;
        report["steps"] = run.steps;
        report["method"] = std::string(method_name(run.method));
        report["tolerance"] = run.tol;
        report["boundary"] = boundary_report_to_json(boundary);

        std::string failing;
        if (!boundary.pass) {
            failing = "boundary condition (" + boundary.first_violation() +
                      ")";
            report["equivalence"] = nullptr;
            report["propagator_deviation"] = nullptr;
            report["propagator_pass"] = false;
        } else {
            EvolveOptions options;
            options.method = run.method;
            const EquivalenceReport eq = check_reparametrization(
                run.model, tr, run.rho0, run.steps, run.tol, options);
            const double prop_dev =
                compare_propagators(run.model, tr, run.steps);
            const bool prop_pass = prop_dev <= run.propagator_tol;
            const bool dev_pass = eq.max_state_deviation <= run.tol;
            const bool phys_pass =
                eq.max_trace_error <= eq.physicality.trace &&
                eq.max_hermiticity_error <= eq.physicality.hermiticity &&
                eq.min_eigenvalue >= eq.physicality.min_eigenvalue;

            report["equivalence"] = equivalence_report_to_json(eq);
            report["propagator_deviation"] = prop_dev;
            report["propagator_tolerance"] = run.propagator_tol;
            report["propagator_pass"] = prop_pass;

            out << "boundary conditions (i)-(iv): pass\n";
            out << "max state deviation " << fmt_short(eq.max_state_deviation)
                << " vs tolerance " << fmt_short(run.tol) << ": "
                << (dev_pass ? "pass" : "FAIL") << "\n";
            out << "physicality (trace " << fmt_short(eq.max_trace_error)
                << ", hermiticity " << fmt_short(eq.max_hermiticity_error)
                << ", min eigenvalue " << fmt_short(eq.min_eigenvalue)
                << "): " << (phys_pass ? "pass" : "FAIL") << "\n";
            out << "propagator deviation " << fmt_short(prop_dev)
                << " vs tolerance " << fmt_short(run.propagator_tol) << ": "
                << (prop_pass ? "pass" : "FAIL") << "\n";

            if (!dev_pass) {
                failing = "state deviation " +
                          fmt_short(eq.max_state_deviation) + " > " +
                          fmt_short(run.tol);
            } else if (!phys_pass) {
                failing = "physicality (trace " +
                          fmt_short(eq.max_trace_error) + ", hermiticity " +
                          fmt_short(eq.max_hermiticity_error) +
                          ", min eigenvalue " + fmt_short(eq.min_eigenvalue) +
                          ")";
            } else if (!prop_pass) {
                failing = "propagator deviation " + fmt_short(prop_dev) +
                          " > " + fmt_short(run.propagator_tol);
            }
        }
        report["pass"] = failing.empty();

        fs::create_directories(run.out_dir);
        const fs::path report_path =
            run.out_dir / (run.name + "_report.json");
        write_file(report_path, report.dump(2) + "\n");
        out << "wrote " << report_path.string() << "\n";

        if (!failing.empty()) {
            err << "verification failed: " << failing << "\n";
            return kExitCheckFailed;
        }
        out << "verify " << run.name << ": pass\n";
        return kExitOk;
    }, err);
}

// ---- sweep ------------------------------------------------------------------

namespace {

struct SweepTask {
    Json params;        // the point's parameter overrides (may be empty)
    double a = 1.0;
    LindbladModel model;  // reference model for this point
    fs::path rel_path;    // under out_dir
};

struct SweepResult {
    bool ok = false;
    std::string error;
    std::string csv;
    double final_time = 0.0;
    Json final_populations;
};

std::string point_dir_name(const Json& params, std::size_t point_index) {
    if (params.empty()) return "point" + std::to_string(point_index);
    std::string name;
    for (const auto& [key, value] : params.items()) {
        if (!name.empty()) name += '_';
        name += key + "=" +
                (value.is_number() ? fmt_short(value.get<double>())
                                   : value.dump());
    }
    return name;
}

LindbladModel merged_point_model(const Json& model_doc, const Json& params) {
    if (params.empty()) return model_from_json(model_doc);
    if (!model_doc.contains("builder")) {
        throw ValidationError(
            "sweep: points with parameters need a builder-based model");
    }
    Json merged = model_doc;
    if (!merged.contains("params")) merged["params"] = Json::object();
    for (const auto& [key, value] : params.items()) {
        merged["params"][key] = value;
    }
    return model_from_json(merged);
}

} // namespace

int cmd_sweep(const std::string& config_path, const CliOverrides& overrides,
              std::ostream& out, std::ostream& err) {
    return guarded([&]() -> int {
        const Json config = load_json(config_path);
        if (!config.contains("model")) {
            throw ValidationError("config: missing key 'model'");
        }
        const Json& model_doc = config.at("model");
        const ParsedRun base =
            parse_run_config(config, overrides, config_path);

        // Run set per point: the reference (a = 1) plus each requested a.
        std::vector<double> a_values{1.0};
        if (config.contains("a_values")) {
            if (!config.at("a_values").is_array()) {
                throw ValidationError("config: 'a_values' must be an array");
            }
            for (const auto& e : config.at("a_values")) {
                const double a = e.get<double>();
                if (std::find(a_values.begin(), a_values.end(), a) ==
                    a_values.end()) {
                    a_values.push_back(a);
                }
            }
        }
        for (double a : a_values) {
            if (a != 1.0) TimeRescaling(a, base.t_f, base.allow_slowdown);
        }

        const Json points = config.value("points", Json::array());
        if (!points.is_array()) {
            throw ValidationError("config: 'points' must be an array");
        }
        if (points.empty()) {
            out << "sweep " << base.name << ": no points, nothing to do\n";
            return kExitOk;
        }

        // Materialize every task up front so configuration problems in any
        // point abort the whole sweep before work starts.
        std::vector<SweepTask> tasks;
        for (std::size_t p = 0; p < points.size(); ++p) {
            const Json& params = points.at(p);
            if (!params.is_object()) {
                throw ValidationError("sweep: each point must be an object "
                                      "of parameter values");
            }
            LindbladModel model = merged_point_model(model_doc, params);
            if (model.dim() != base.model.dim()) {
                throw ValidationError(
                    "sweep: point " + std::to_string(p) +
                    " changes the model dimension; initial state would not "
                    "apply");
            }
            for (double a : a_values) {
                tasks.push_back(SweepTask{
                    params, a, model,
                    fs::path(base.name) / point_dir_name(params, p) /
                        (fmt_short(a) + ".csv")});
            }
        }

        const int jobs = std::max(
            1, overrides.jobs ? *overrides.jobs : config.value("jobs", 1));

        // Compute concurrently; every write happens afterwards, in declared
        // order, from this thread only.
        std::vector<SweepResult> results(tasks.size());
        std::atomic<std::size_t> cursor{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= tasks.size()) return;
                SweepResult& r = results[i];
                try {
                    const Trajectory traj =
                        run_process(tasks[i].model, base, tasks[i].a);
                    r.csv = trajectory_csv(traj, base.population_indices);
                    r.final_time = traj.times.back();
                    r.final_populations =
                        final_populations_json(traj, base.population_indices);
                    r.ok = true;
                } catch (const std::exception& e) {
                    r.error = e.what();
                }
            }
        };
        const std::size_t n_threads =
            std::min<std::size_t>(static_cast<std::size_t>(jobs),
                                  tasks.size());
        std::vector<std::thread> pool;
        for (std::size_t k = 1; k < n_threads; ++k) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();

        Json manifest;
        manifest["command"] = "sweep";
        manifest["name"] = base.name;
        manifest["t_f"] = base.t_f;
        manifest["steps"] = base.steps;
        manifest["method"] = std::string(method_name(base.method));
        manifest["a_values"] = a_values;
        Json runs = Json::array();
        std::size_t failures = 0;
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            const SweepTask& task = tasks[i];
            const SweepResult& r = results[i];
            Json entry;
            entry["params"] = task.params;
            entry["a"] = task.a;
            entry["path"] = task.rel_path.generic_string();
            if (r.ok) {
                const fs::path csv_path = base.out_dir / task.rel_path;
                fs::create_directories(csv_path.parent_path());
                write_file(csv_path, r.csv);
                entry["status"] = "ok";
                entry["final_time"] = r.final_time;
                entry["final_populations"] = r.final_populations;
                out << "ok " << task.rel_path.generic_string() << "\n";
            } else {
                ++failures;
                entry["status"] = "error";
                entry["error"] = r.error;
                out << "failed " << task.rel_path.generic_string() << ": "
                    << r.error << "\n";
            }
            runs.push_back(std::move(entry));
        }
        manifest["runs"] = std::move(runs);
        manifest["pass"] = failures == 0;

        const fs::path manifest_path =
            base.out_dir / base.name / "manifest.json";
        fs::create_directories(manifest_path.parent_path());
        write_file(manifest_path, manifest.dump(2) + "\n");
        out << "wrote " << manifest_path.string() << "\n";

        if (failures > 0) {
            err << failures << " of " << tasks.size()
                << " sweep runs failed\n";
            return kExitCheckFailed;
        }
        return kExitOk;
    }, err);
}

} // namespace lindtr::cli
