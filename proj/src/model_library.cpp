#include "lindtr/model_library.hpp"

#include <string>
#include <utility>
#include <vector>

#include "lindtr/errors.hpp"

namespace lindtr {

LindbladModel tls_amplitude_damping(const TlsParams& p) {
    if (p.gamma < 0.0) {
        throw ParameterError("decay rate must be nonnegative, got " +
                             std::to_string(p.gamma));
    }
    std::vector<HamiltonianTerm> terms;
    terms.push_back(HamiltonianTerm{
        pauli(Pauli::Z), CoefficientSchedule::constant(-0.5 * p.delta)});
    terms.push_back(HamiltonianTerm{
        pauli(Pauli::X), CoefficientSchedule::constant(-0.5 * p.omega)});
    std::vector<DissipationChannel> channels;
    channels.push_back(DissipationChannel{
        pauli(Pauli::Minus), CoefficientSchedule::constant(p.gamma)});
    return LindbladModel(2, std::move(terms), std::move(channels));
}

LindbladModel tfim_dissipative(const TfimParams& p) {
    if (p.n_sites < 2 || p.n_sites > kMaxQubits) {
        throw ParameterError("chain length must be in [2, " +
                             std::to_string(kMaxQubits) + "], got " +
                             std::to_string(p.n_sites));
    }
    if (p.gamma < 0.0) {
        throw ParameterError("decay rate must be nonnegative, got " +
                             std::to_string(p.gamma));
    }
    const int n = p.n_sites;
    const int dim = 1 << n;

    std::vector<HamiltonianTerm> terms;
    for (int k = 0; k + 1 < n; ++k) {
        ComplexMatrix zz = site_operator(pauli(Pauli::Z), k, n) *
                           site_operator(pauli(Pauli::Z), k + 1, n);
        terms.push_back(HamiltonianTerm{
            std::move(zz), CoefficientSchedule::constant(-p.j_coupling)});
    }
    for (int k = 0; k < n; ++k) {
        terms.push_back(HamiltonianTerm{
            site_operator(pauli(Pauli::X), k, n),
            CoefficientSchedule::constant(-p.h_field)});
    }

    std::vector<DissipationChannel> channels;
    for (int k = 0; k < n; ++k) {
        channels.push_back(DissipationChannel{
            site_operator(pauli(Pauli::Minus), k, n),
            CoefficientSchedule::constant(p.gamma)});
    }
    return LindbladModel(dim, std::move(terms), std::move(channels));
}

} // namespace lindtr
