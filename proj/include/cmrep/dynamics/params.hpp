#pragma once

#include <cstddef>
#include <numbers>

namespace cmrep::dynamics {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHbar = 1.054571817e-34;               // J s
inline constexpr double kVacuumPermeability = 1.25663706212e-6;  // T m / A
inline constexpr double kElectronGyromagneticRatio = 1.76085963023e11;  // rad / (s T)

/// Angular frequency for an ordinary frequency given in Hz.
constexpr double angular(double hz) { return kTwoPi * hz; }

/// One cavity-magnon node. Every rate is an angular rate in rad/s with
/// hbar = 1, so Hamiltonian entries and collapse rates share units.
struct LindbladParams {
    double omega_c = angular(10e9);
    double omega_m = angular(10e9);
    double g_mc = angular(130e6);
    double kappa_d = angular(1e6);
    double gamma_d = angular(0.5e6);
    double kappa_phi = angular(0.3e6);
    double gamma_phi = angular(0.3e6);
    std::size_t dim_c = 2;
    std::size_t dim_m = 2;

    /// Same node with every dissipation channel switched off.
    LindbladParams ideal() const;

    /// g_mc > (kappa + gamma) / 2 with kappa, gamma the total cavity and
    /// magnon loss.
    bool strongly_coupled() const;

    /// Throws RangeError on negative rates or truncation below 2.
    void validate() const;

    friend bool operator==(const LindbladParams&, const LindbladParams&) = default;
};

struct MaterialParams {
    double gyromagnetic_ratio = kElectronGyromagneticRatio;
    double vacuum_permeability = kVacuumPermeability;
    double total_spin = 0.0;
    double cavity_mode_volume = 0.0;  // m^3
    double omega_c = angular(10e9);
};

/// g_mc = gamma * sqrt(hbar * omega_c * mu0 * S / (2 V_c))
double coupling_strength(const MaterialParams& mp);

}  // namespace cmrep::dynamics
