#ifndef LINDTR_TIME_RESCALING_HPP
#define LINDTR_TIME_RESCALING_HPP

namespace lindtr {

/// The time-rescaling map for a reference protocol of duration t_f:
///
///   f(tau)    = a*tau - (a-1)/(2*pi*a) * t_f * sin(2*pi*a*tau / t_f)
///   fdot(tau) = a - (a-1) * cos(2*pi*a*tau / t_f)
///
/// For contraction a >= 1, f carries [0, t_f/a] monotonically onto
/// [0, t_f] with fdot in [1, 2a-1] and fdot = 1 at both endpoints.
/// The slow-down regime a in (1/2, 1) keeps every identity (fdot stays
/// positive) and is accepted only behind an explicit flag; a <= 1/2 is
/// rejected because fdot would touch zero.
class TimeRescaling {
public:
    TimeRescaling(double a, double t_f, bool allow_slowdown = false);

    double contraction() const { return a_; }
    double reference_duration() const { return t_f_; }
    double rescaled_duration() const { return t_f_ / a_; }

    /// Largest factor by which rescaled coefficients exceed the reference
    /// ones: max fdot = 2a - 1 (reached at tau = t_f / 2a).
    double peak_amplification() const { return 2.0 * a_ - 1.0; }

    double f(double tau) const;
    double f_dot(double tau) const;

    /// Numerical inverse on [0, t_f]: safeguarded Newton iteration with
    /// bisection fallback on the bracket [0, t_f/a]. Converges to
    /// |f(tau) - t| <= 1e-12 * t_f; throws DomainError for t outside
    /// [0, t_f] and NumericalError if the iteration cap is hit.
    double f_inverse(double t) const;

private:
    double a_;
    double t_f_;
};

} // namespace lindtr

#endif
