#include "lindtr/schedule.hpp"

#include <algorithm>
#include <string>

#include "lindtr/errors.hpp"

namespace lindtr {

CoefficientSchedule CoefficientSchedule::constant(double value) {
    return CoefficientSchedule(Constant{value});
}

CoefficientSchedule CoefficientSchedule::tabulated(std::vector<double> times,
                                                   std::vector<double> values) {
    if (times.size() < 2) {
        throw ParameterError("tabulated schedule needs at least two points");
    }
    if (times.size() != values.size()) {
        throw ParameterError("tabulated schedule: " +
                             std::to_string(times.size()) + " times vs " +
                             std::to_string(values.size()) + " values");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) {
            throw ParameterError(
                "tabulated schedule: times must be strictly increasing");
        }
    }
    return CoefficientSchedule(Tabulated{std::move(times), std::move(values)});
}

CoefficientSchedule CoefficientSchedule::rescaled(CoefficientSchedule inner,
                                                  TimeRescaling rescaling) {
    return CoefficientSchedule(Rescaled{
        std::make_shared<const CoefficientSchedule>(std::move(inner)),
        rescaling});
}

double CoefficientSchedule::value(double t) const {
    if (const auto* c = std::get_if<Constant>(&repr_)) {
        return c->value;
    }
    if (const auto* tab = std::get_if<Tabulated>(&repr_)) {
        const auto& ts = tab->times;
        const double snap = 1e-9 * (ts.back() - ts.front());
        if (t < ts.front() || t > ts.back()) {
            if (t >= ts.front() - snap && t < ts.front()) {
                t = ts.front();
            } else if (t > ts.back() && t <= ts.back() + snap) {
                t = ts.back();
            } else {
                throw DomainError("tabulated schedule queried at t = " +
                                  std::to_string(t) + " outside [" +
                                  std::to_string(ts.front()) + ", " +
                                  std::to_string(ts.back()) + "]");
            }
        }
        auto it = std::upper_bound(ts.begin(), ts.end(), t);
        if (it == ts.end()) return tab->values.back();
        const auto hi = static_cast<std::size_t>(it - ts.begin());
        const auto lo = hi - 1;
        const double w = (t - ts[lo]) / (ts[hi] - ts[lo]);
        return (1.0 - w) * tab->values[lo] + w * tab->values[hi];
    }
    const auto& r = std::get<Rescaled>(repr_);
    return r.inner->value(r.map.f(t)) * r.map.f_dot(t);
}

bool CoefficientSchedule::covers(double lo, double hi) const {
    if (const auto* tab = std::get_if<Tabulated>(&repr_)) {
        const double snap = 1e-9 * (tab->times.back() - tab->times.front());
        return tab->times.front() - snap <= lo &&
               hi <= tab->times.back() + snap;
    }
    if (const auto* r = std::get_if<Rescaled>(&repr_)) {
        // f is monotone increasing, so [lo, hi] maps to [f(lo), f(hi)].
        return r->inner->covers(r->map.f(lo), r->map.f(hi));
    }
    return true;
}

CoefficientSchedule::Kind CoefficientSchedule::kind() const {
    if (std::holds_alternative<Constant>(repr_)) return Kind::Constant;
    if (std::holds_alternative<Tabulated>(repr_)) return Kind::Tabulated;
    return Kind::Rescaled;
}

double CoefficientSchedule::constant_value() const {
    return std::get<Constant>(repr_).value;
}

const std::vector<double>& CoefficientSchedule::table_times() const {
    return std::get<Tabulated>(repr_).times;
}

const std::vector<double>& CoefficientSchedule::table_values() const {
    return std::get<Tabulated>(repr_).values;
}

const CoefficientSchedule& CoefficientSchedule::inner() const {
    return *std::get<Rescaled>(repr_).inner;
}

const TimeRescaling& CoefficientSchedule::rescaling() const {
    return std::get<Rescaled>(repr_).map;
}

} // namespace lindtr
