#ifndef LINDTR_MODEL_LIBRARY_HPP
#define LINDTR_MODEL_LIBRARY_HPP

#include "lindtr/model.hpp"

namespace lindtr {

/// Driven two-level system in an amplitude damping channel.
struct TlsParams {
    double delta = 0.0;  // detuning
    double omega = 0.0;  // Rabi frequency
    double gamma = 0.0;  // spontaneous-emission rate, >= 0
};

/// Open transverse-field Ising chain with per-site decay.
struct TfimParams {
    int n_sites = 2;
    double j_coupling = 0.0;  // nearest-neighbor coupling
    double h_field = 0.0;     // transverse field
    double gamma = 0.0;       // per-site decay rate, >= 0
};

/// H = -delta/2 sigma_z - omega/2 sigma_x with channel (sigma_minus, gamma).
LindbladModel tls_amplitude_damping(const TlsParams& p);

/// H = -J sum_k sigma_z^(k) sigma_z^(k+1) - h sum_k sigma_x^(k) on an open
/// chain, with an independent (sigma_minus^(k), gamma) channel per site.
LindbladModel tfim_dissipative(const TfimParams& p);

} // namespace lindtr

#endif
