#ifndef LINDTR_SCHEDULE_HPP
#define LINDTR_SCHEDULE_HPP

#include <memory>
#include <variant>
#include <vector>

#include "lindtr/time_rescaling.hpp"

namespace lindtr {

/// Time-dependent scalar coefficient of a Hamiltonian term or a decay rate.
///
/// Three variants: a constant, a linearly interpolated table with strict
/// domain bounds (no extrapolation), and the time-rescaled wrapper that
/// evaluates to inner(f(t)) * fdot(t).
class CoefficientSchedule {
public:
    enum class Kind { Constant, Tabulated, Rescaled };

    static CoefficientSchedule constant(double value);
    /// `times` must be strictly increasing and the same length as `values`
    /// (at least two points).
    static CoefficientSchedule tabulated(std::vector<double> times,
                                         std::vector<double> values);
    static CoefficientSchedule rescaled(CoefficientSchedule inner,
                                        TimeRescaling rescaling);

    /// Evaluate at time t. Tabulated schedules throw DomainError outside
    /// their grid; queries within 1e-9 of the span beyond an endpoint snap
    /// to it, so composed clock maps whose image lands on the boundary up
    /// to rounding stay evaluable.
    double value(double t) const;

    /// True when the value is independent of t (plain Constant variant).
    bool is_constant() const { return kind() == Kind::Constant; }

    /// True when every evaluation in [lo, hi] is inside all table domains.
    bool covers(double lo, double hi) const;

    Kind kind() const;

    // Introspection for serialization; each accessor requires its variant.
    double constant_value() const;
    const std::vector<double>& table_times() const;
    const std::vector<double>& table_values() const;
    const CoefficientSchedule& inner() const;
    const TimeRescaling& rescaling() const;

private:
    struct Constant {
        double value;
    };
    struct Tabulated {
        std::vector<double> times;
        std::vector<double> values;
    };
    struct Rescaled {
        std::shared_ptr<const CoefficientSchedule> inner;
        TimeRescaling map;
    };
    using Repr = std::variant<Constant, Tabulated, Rescaled>;

    explicit CoefficientSchedule(Repr repr) : repr_(std::move(repr)) {}
    Repr repr_;
};

} // namespace lindtr

#endif
