#include "lindtr/rescale.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "lindtr/errors.hpp"

namespace lindtr {

LindbladModel rescale_model(const LindbladModel& model,
                            const TimeRescaling& tr) {
    if (!model.covers(0.0, tr.reference_duration())) {
        throw DomainError("reference schedules do not cover [0, t_f] with "
                          "t_f = " + std::to_string(tr.reference_duration()));
    }
    std::vector<HamiltonianTerm> terms;
    terms.reserve(model.hamiltonian_terms().size());
    for (const auto& term : model.hamiltonian_terms()) {
        terms.push_back(HamiltonianTerm{
            term.op, CoefficientSchedule::rescaled(term.coefficient, tr)});
    }
    std::vector<DissipationChannel> channels;
    channels.reserve(model.channels().size());
    for (const auto& ch : model.channels()) {
        channels.push_back(DissipationChannel{
            ch.op, CoefficientSchedule::rescaled(ch.rate, tr)});
    }
    return LindbladModel(model.dim(), std::move(terms), std::move(channels));
}

std::string BoundaryReport::first_violation() const {
    for (const auto& c : conditions) {
        if (!c.pass) return c.name;
    }
    return "";
}

namespace {

double generator_gap(const LindbladModel& a, double ta, const LindbladModel& b,
                     double tb) {
    return max_abs_diff(build_liouvillian(a, ta).matrix,
                        build_liouvillian(b, tb).matrix);
}

} // namespace

BoundaryReport validate_boundary_conditions(const LindbladModel& reference,
                                            const LindbladModel& candidate,
                                            const TimeRescaling& tr,
                                            double tol) {
    if (reference.dim() != candidate.dim()) {
        throw ShapeError("reference and candidate dimensions differ: " +
                         std::to_string(reference.dim()) + " vs " +
                         std::to_string(candidate.dim()));
    }
    const double t_f = tr.reference_duration();
    const double t_end = tr.f_inverse(t_f);  // = t_f / a

    BoundaryReport report;
    report.peak_coefficient_amplification = tr.peak_amplification();

    {
        BoundaryCondition c;
        c.name = "i";
        c.metric = tr.f_inverse(0.0);
        c.pass = c.metric == 0.0;
        c.note = "f^-1(0) = " + std::to_string(c.metric);
        report.conditions.push_back(std::move(c));
    }
    {
        BoundaryCondition c;
        c.name = "ii";
        c.metric = t_end;
        c.pass = tr.contraction() > 1.0 ? t_end < t_f : t_end <= t_f;
        c.note = "f^-1(t_f) = " + std::to_string(t_end) + " vs t_f = " +
                 std::to_string(t_f) +
                 (tr.contraction() == 1.0 ? " (identity map: no speedup)"
                                          : "");
        report.conditions.push_back(std::move(c));
    }
    {
        BoundaryCondition c;
        c.name = "iii";
        c.metric = generator_gap(candidate, 0.0, reference, 0.0);
        c.pass = c.metric <= tol;
        c.note = "generator gap at the start: " + std::to_string(c.metric);
        report.conditions.push_back(std::move(c));
    }
    {
        BoundaryCondition c;
        c.name = "iv";
        c.metric = generator_gap(candidate, t_end, reference, t_f);
        c.pass = c.metric <= tol;
        c.note = "generator gap at the end: " + std::to_string(c.metric);
        report.conditions.push_back(std::move(c));
    }

    report.pass = true;
    for (const auto& c : report.conditions) report.pass = report.pass && c.pass;
    return report;
}

BoundaryReport validate_boundary_conditions(const LindbladModel& reference,
                                            const TimeRescaling& tr,
                                            double tol) {
    return validate_boundary_conditions(reference, rescale_model(reference, tr),
                                        tr, tol);
}

} // namespace lindtr
