#include "lindtr/propagation.hpp"

#include <Eigen/LU>
#include <cmath>
#include <string>
#include <utility>

#include "lindtr/errors.hpp"

namespace lindtr {

TimeGrid::TimeGrid(double t0_, double t1_, int steps_)
    : t0(t0_), t1(t1_), steps(steps_) {
    if (!(t1 > t0)) {
        throw ParameterError("time grid needs t1 > t0, got [" +
                             std::to_string(t0) + ", " + std::to_string(t1) +
                             "]");
    }
    if (steps < 1) {
        throw ParameterError("time grid needs at least one step, got " +
                             std::to_string(steps));
    }
}

double TimeGrid::node(int j) const {
    if (j < 0 || j > steps) {
        throw DomainError("grid node " + std::to_string(j) +
                          " outside [0, " + std::to_string(steps) + "]");
    }
    if (j == steps) return t1;  // exact endpoint, no rounding drift
    return t0 + (t1 - t0) * (static_cast<double>(j) / steps);
}

std::vector<double> TimeGrid::nodes() const {
    std::vector<double> out(static_cast<std::size_t>(steps) + 1);
    for (int j = 0; j <= steps; ++j) out[static_cast<std::size_t>(j)] = node(j);
    return out;
}

Method method_from_name(std::string_view name) {
    if (name == "rk4") return Method::Rk4;
    if (name == "expm" || name == "expm_midpoint") return Method::ExpmMidpoint;
    throw ParameterError("unknown method '" + std::string(name) +
                         "' (expected rk4 or expm)");
}

std::string_view method_name(Method m) {
    return m == Method::Rk4 ? "rk4" : "expm_midpoint";
}

// ---------------------------------------------------------------------------
// Matrix exponential: scaling and squaring with diagonal Pade approximants,
// order picked from the 1-norm against the backward-error thresholds.

namespace {

ComplexMatrix pade_solve(const ComplexMatrix& u, const ComplexMatrix& v) {
    // r = (v - u)^-1 (v + u)
    return (v - u).partialPivLu().solve(v + u);
}

ComplexMatrix expm_pade(const ComplexMatrix& a, int order) {
    const Eigen::Index n = a.rows();
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    const ComplexMatrix a2 = a * a;
    if (order == 3) {
        static const double b[] = {120, 60, 12, 1};
        ComplexMatrix u = a * (b[3] * a2 + b[1] * id);
        ComplexMatrix v = b[2] * a2 + b[0] * id;
        return pade_solve(u, v);
    }
    const ComplexMatrix a4 = a2 * a2;
    if (order == 5) {
        static const double b[] = {30240, 15120, 3360, 420, 30, 1};
        ComplexMatrix u = a * (b[5] * a4 + b[3] * a2 + b[1] * id);
        ComplexMatrix v = b[4] * a4 + b[2] * a2 + b[0] * id;
        return pade_solve(u, v);
    }
    const ComplexMatrix a6 = a2 * a4;
    if (order == 7) {
        static const double b[] = {17297280, 8648640, 1995840, 277200,
                                   25200,    1512,    56,      1};
        ComplexMatrix u = a * (b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
        ComplexMatrix v = b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
        return pade_solve(u, v);
    }
    if (order == 9) {
        static const double b[] = {17643225600.0, 8821612800.0, 2075673600.0,
                                   302702400.0,   30270240.0,   2162160.0,
                                   110880.0,      3960.0,       90.0,
                                   1.0};
        const ComplexMatrix a8 = a4 * a4;
        ComplexMatrix u = a * (b[9] * a8 + b[7] * a6 + b[5] * a4 + b[3] * a2 +
                               b[1] * id);
        ComplexMatrix v =
            b[8] * a8 + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
        return pade_solve(u, v);
    }
    // order 13
    static const double b[] = {64764752532480000.0, 32382376266240000.0,
                               7771770303897600.0,  1187353796428800.0,
                               129060195264000.0,   10559470521600.0,
                               670442572800.0,      33522128640.0,
                               1323241920.0,        40840800.0,
                               960960.0,            16380.0,
                               182.0,               1.0};
    ComplexMatrix u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
             b[5] * a4 + b[3] * a2 + b[1] * id);
    ComplexMatrix v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                      b[4] * a4 + b[2] * a2 + b[0] * id;
    return pade_solve(u, v);
}

} // namespace

ComplexMatrix matrix_exponential(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) {
        throw ShapeError("matrix exponential needs a square matrix, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
    }
    if (m.rows() == 0) return m;

    const double eta = m.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
    if (!std::isfinite(eta)) {
        throw NumericalError("matrix exponential of a non-finite matrix");
    }

    static const double theta[] = {1.495585217958292e-2, 2.539398330063230e-1,
                                   9.504178996162932e-1, 2.097847961257068,
                                   5.371920351148152};
    static const int orders[] = {3, 5, 7, 9};
    for (int k = 0; k < 4; ++k) {
        if (eta <= theta[k]) return expm_pade(m, orders[k]);
    }

    int s = 0;
    if (eta > theta[4]) {
        s = static_cast<int>(std::ceil(std::log2(eta / theta[4])));
    }
    ComplexMatrix r = expm_pade(m / std::pow(2.0, s), 13);
    for (int k = 0; k < s; ++k) r = r * r;
    return r;
}

// ---------------------------------------------------------------------------
// Time stepping on the column-stacked state.

namespace {

// Builds L(t), reusing a cached copy when the model has no time dependence.
class GeneratorSource {
public:
    explicit GeneratorSource(const LindbladModel& model)
        : model_(model), constant_(model.all_constant()) {
        if (constant_) cached_ = build_liouvillian(model_, 0.0).matrix;
    }

    const ComplexMatrix& at(double t) {
        if (constant_) return cached_;
        cached_ = build_liouvillian(model_, t).matrix;
        return cached_;
    }

    bool constant() const { return constant_; }

private:
    const LindbladModel& model_;
    bool constant_;
    ComplexMatrix cached_;
};

void rk4_step(GeneratorSource& gen, double t, double h, ComplexVector& v) {
    const ComplexVector k1 = gen.at(t) * v;
    const ComplexVector k2 = gen.at(t + 0.5 * h) * (v + (0.5 * h) * k1);
    const ComplexVector k3 = gen.at(t + 0.5 * h) * (v + (0.5 * h) * k2);
    const ComplexVector k4 = gen.at(t + h) * (v + h * k3);
    v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

void expm_midpoint_step(GeneratorSource& gen, double t, double h,
                        ComplexVector& v) {
    v = matrix_exponential(gen.at(t + 0.5 * h) * h) * v;
}

void check_guards(const ComplexMatrix& rho, double t,
                  const EvolveOptions& options) {
    const double trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (!(trace_err <= options.guard_trace)) {
        throw NumericalError("integration diverged: trace error " +
                             std::to_string(trace_err) + " at t = " +
                             std::to_string(t));
    }
    const double herm = hermiticity_error(rho);
    if (!(herm <= options.guard_hermiticity)) {
        throw NumericalError("integration diverged: hermiticity defect " +
                             std::to_string(herm) + " at t = " +
                             std::to_string(t));
    }
}

} // namespace

Trajectory evolve_at_times(const LindbladModel& model, const DensityMatrix& rho0,
                           const std::vector<double>& node_times,
                           const EvolveOptions& options) {
    if (rho0.dim() != model.dim()) {
        throw ShapeError("initial state dimension " +
                         std::to_string(rho0.dim()) + " vs model dimension " +
                         std::to_string(model.dim()));
    }
    if (node_times.empty()) {
        throw ParameterError("evolve_at_times needs at least one node time");
    }
    for (std::size_t j = 1; j < node_times.size(); ++j) {
        if (!(node_times[j] > node_times[j - 1])) {
            throw ParameterError("node times must be strictly increasing");
        }
    }
    if (options.substeps < 1) {
        throw ParameterError("substeps must be positive, got " +
                             std::to_string(options.substeps));
    }
    if (!model.covers(node_times.front(), node_times.back())) {
        throw DomainError("model schedules do not cover [" +
                          std::to_string(node_times.front()) + ", " +
                          std::to_string(node_times.back()) + "]");
    }

    GeneratorSource gen(model);
    ComplexVector v = stack_columns(rho0.matrix());

    Trajectory traj;
    traj.times = node_times;
    traj.states.reserve(node_times.size());
    traj.states.push_back(rho0);

    for (std::size_t j = 1; j < node_times.size(); ++j) {
        const double ta = node_times[j - 1];
        const double tb = node_times[j];
        const double h = (tb - ta) / options.substeps;
        for (int s = 0; s < options.substeps; ++s) {
            const double t = ta + h * s;
            if (options.method == Method::Rk4) {
                rk4_step(gen, t, h, v);
            } else {
                expm_midpoint_step(gen, t, h, v);
            }
        }
        ComplexMatrix rho = unstack_columns(v);
        check_guards(rho, tb, options);
        traj.states.push_back(DensityMatrix::trusted(std::move(rho)));
    }
    return traj;
}

Trajectory evolve(const LindbladModel& model, const DensityMatrix& rho0,
                  const TimeGrid& grid, Method method) {
    EvolveOptions options;
    options.method = method;
    return evolve_at_times(model, rho0, grid.nodes(), options);
}

VectorizedState Propagator::apply(const VectorizedState& v) const {
    if (v.dim != dim) {
        throw ShapeError("propagator dimension " + std::to_string(dim) +
                         " vs state dimension " + std::to_string(v.dim));
    }
    return VectorizedState{dim, matrix * v.amplitudes};
}

DensityMatrix Propagator::apply(const DensityMatrix& rho) const {
    return devectorize(apply(vectorize(rho)));
}

Propagator propagator(const LindbladModel& model, double t0, double t1,
                      int steps) {
    const int d = model.dim();
    const Eigen::Index n = static_cast<Eigen::Index>(d) * d;
    if (t1 == t0) {
        return Propagator{d, ComplexMatrix::Identity(n, n)};
    }
    if (t1 < t0) {
        throw ParameterError("propagator needs t1 >= t0");
    }
    if (steps < 1) {
        throw ParameterError("propagator needs at least one step");
    }
    if (!model.covers(t0, t1)) {
        throw DomainError("model schedules do not cover [" +
                          std::to_string(t0) + ", " + std::to_string(t1) + "]");
    }

    GeneratorSource gen(model);
    const double h = (t1 - t0) / steps;
    ComplexMatrix p = ComplexMatrix::Identity(n, n);
    for (int j = 0; j < steps; ++j) {
        const double t_mid = t0 + h * (j + 0.5);
        p = matrix_exponential(gen.at(t_mid) * h) * p;
    }
    return Propagator{d, std::move(p)};
}

DensityMatrix stage_state(const LindbladModel& model, const DensityMatrix& rho0,
                          double stage, double t_f, int steps) {
    if (stage < 0.0 || stage > 1.0) {
        throw DomainError("stage fraction " + std::to_string(stage) +
                          " outside [0, 1]");
    }
    if (stage == 0.0) return rho0;
    return propagator(model, 0.0, stage * t_f, steps).apply(rho0);
}

std::vector<std::vector<double>> populations(
    const Trajectory& traj, const std::vector<int>& basis_indices) {
    const int d = traj.dim();
    std::vector<std::vector<double>> out;
    out.reserve(basis_indices.size());
    for (int idx : basis_indices) {
        if (idx < 0 || idx >= d) {
            throw DomainError("basis index " + std::to_string(idx) +
                              " outside [0, " + std::to_string(d) + ")");
        }
        std::vector<double> series;
        series.reserve(traj.states.size());
        for (const auto& rho : traj.states) {
            series.push_back(rho.matrix()(idx, idx).real());
        }
        out.push_back(std::move(series));
    }
    return out;
}

} // namespace lindtr
