#ifndef LINDTR_PROPAGATION_HPP
#define LINDTR_PROPAGATION_HPP

#include <string_view>
#include <vector>

#include "lindtr/model.hpp"
#include "lindtr/states.hpp"

namespace lindtr {

/// Uniform grid of `steps` intervals over [t0, t1]; node j sits at
/// t0 + (t1-t0)*j/steps, so the last node is exactly t1.
struct TimeGrid {
    TimeGrid(double t0, double t1, int steps);

    double node(int j) const;
    std::vector<double> nodes() const;
    double step() const { return (t1 - t0) / steps; }

    double t0;
    double t1;
    int steps;
};

enum class Method { Rk4, ExpmMidpoint };

/// Accepts "rk4", "expm" or "expm_midpoint".
Method method_from_name(std::string_view name);
std::string_view method_name(Method m);

/// States sampled along an evolution; times are strictly increasing and
/// there is one state per time.
struct Trajectory {
    std::vector<double> times;
    std::vector<DensityMatrix> states;

    int dim() const { return states.empty() ? 0 : states.front().dim(); }
    std::size_t size() const { return states.size(); }
    const DensityMatrix& final_state() const { return states.back(); }
};

struct EvolveOptions {
    Method method = Method::Rk4;
    /// Integration sub-steps inside each recorded interval.
    int substeps = 1;
    /// Divergence guards: exceeding either aborts with NumericalError.
    double guard_trace = 1e-6;
    double guard_hermiticity = 1e-6;
};

/// exp(m) by scaling-and-squaring with diagonal Pade approximants
/// (orders 3/5/7/9/13 chosen from the 1-norm). Square input required.
ComplexMatrix matrix_exponential(const ComplexMatrix& m);

/// Integrates d|rho>/dt = L(t)|rho> and records the state at every node
/// time. Rk4 takes classical fourth-order steps; ExpmMidpoint applies the
/// per-interval propagator exp(L(t_mid) * h) in order.
Trajectory evolve_at_times(const LindbladModel& model, const DensityMatrix& rho0,
                           const std::vector<double>& node_times,
                           const EvolveOptions& options = {});

Trajectory evolve(const LindbladModel& model, const DensityMatrix& rho0,
                  const TimeGrid& grid, Method method = Method::Rk4);

/// Linear map carrying |rho(t0)> to |rho(t1)>.
struct Propagator {
    int dim = 0;
    ComplexMatrix matrix;

    VectorizedState apply(const VectorizedState& v) const;
    DensityMatrix apply(const DensityMatrix& rho) const;
};

/// Ordered product of per-step midpoint exponentials (rightmost factor
/// earliest), a second-order approximant of the time-ordered exponential;
/// exact up to expm accuracy when the generator is constant. t1 == t0
/// yields the identity.
Propagator propagator(const LindbladModel& model, double t0, double t1,
                      int steps);

/// State at the trajectory stage labelled by fraction `stage` in [0, 1]:
/// devectorize(propagator(0, stage*t_f) |rho0>).
DensityMatrix stage_state(const LindbladModel& model, const DensityMatrix& rho0,
                          double stage, double t_f, int steps);

/// Diagonal occupation series rho(i,i).real at every node, one series per
/// requested basis index.
std::vector<std::vector<double>> populations(const Trajectory& traj,
                                             const std::vector<int>& basis_indices);

} // namespace lindtr

#endif
