#include "lindtr/time_rescaling.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lindtr/errors.hpp"

namespace lindtr {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kNewtonCap = 100;
} // namespace

TimeRescaling::TimeRescaling(double a, double t_f, bool allow_slowdown)
    : a_(a), t_f_(t_f) {
    if (!(t_f > 0.0)) {
        throw ParameterError("time rescaling: t_f must be positive, got " +
                             std::to_string(t_f));
    }
    if (!(a > 0.5)) {
        throw ParameterError(
            "time rescaling: a = " + std::to_string(a) +
            " <= 1/2 would let the clock speed fdot touch zero");
    }
    if (a < 1.0 && !allow_slowdown) {
        throw ParameterError(
            "time rescaling: a = " + std::to_string(a) +
            " < 1 slows the process down; pass allow_slowdown to accept");
    }
}

double TimeRescaling::f(double tau) const {
    const double phase = kTwoPi * a_ * tau / t_f_;
    return a_ * tau - (a_ - 1.0) / (kTwoPi * a_) * t_f_ * std::sin(phase);
}

double TimeRescaling::f_dot(double tau) const {
    const double phase = kTwoPi * a_ * tau / t_f_;
    return a_ - (a_ - 1.0) * std::cos(phase);
}

double TimeRescaling::f_inverse(double t) const {
    if (t < 0.0 || t > t_f_) {
        throw DomainError("f_inverse: t = " + std::to_string(t) +
                          " outside [0, " + std::to_string(t_f_) + "]");
    }
    // Drive the residual to rounding level: the image grid built from
    // these values enters trajectory-deviation metrics directly, so a
    // loose tolerance here would show up as a false deviation floor.
    const double tol = 4.0 * std::numeric_limits<double>::epsilon() * t_f_;
    double lo = 0.0;             // f(lo) - t <= 0
    double hi = t_f_ / a_;       // f(hi) - t >= 0
    double tau = t / a_;         // within [lo, hi] since a > 1/2
    for (int it = 0; it < kNewtonCap; ++it) {
        const double g = f(tau) - t;
        if (std::abs(g) <= tol) return tau;
        if (g > 0.0) {
            hi = tau;
        } else {
            lo = tau;
        }
        double next = tau - g / f_dot(tau);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == tau || !(lo < hi)) return tau;  // no further progress
        tau = next;
    }
    throw NumericalError("f_inverse: no convergence after " +
                         std::to_string(kNewtonCap) + " iterations at t = " +
                         std::to_string(t));
}

} // namespace lindtr
