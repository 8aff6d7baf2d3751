#include "cmrep/dynamics/params.hpp"

#include <cmath>
#include <string>

#include "cmrep/error.hpp"

namespace cmrep::dynamics {

LindbladParams LindbladParams::ideal() const {
    LindbladParams p = *this;
    p.kappa_d = p.gamma_d = p.kappa_phi = p.gamma_phi = 0.0;
    return p;
}

bool LindbladParams::strongly_coupled() const {
    return g_mc > (kappa_d + kappa_phi + gamma_d + gamma_phi) / 2.0;
}

void LindbladParams::validate() const {
    const std::pair<const char*, double> rates[] = {
        {"omega_c", omega_c}, {"omega_m", omega_m},     {"g_mc", g_mc},          {"kappa_d", kappa_d},
        {"gamma_d", gamma_d}, {"kappa_phi", kappa_phi}, {"gamma_phi", gamma_phi}};
    for (const auto& [name, value] : rates)
        if (!(value >= 0.0) || !std::isfinite(value))
            throw RangeError(std::string("LindbladParams: ") + name + " must be a finite non-negative rate");
    if (dim_c < 2 || dim_m < 2) throw RangeError("LindbladParams: truncation dimensions must be >= 2");
}

double coupling_strength(const MaterialParams& mp) {
    const std::pair<const char*, double> fields[] = {{"gyromagnetic_ratio", mp.gyromagnetic_ratio},
                                                     {"vacuum_permeability", mp.vacuum_permeability},
                                                     {"total_spin", mp.total_spin},
                                                     {"cavity_mode_volume", mp.cavity_mode_volume},
                                                     {"omega_c", mp.omega_c}};
    for (const auto& [name, value] : fields)
        if (!(value > 0.0)) throw RangeError(std::string("coupling_strength: ") + name + " must be positive");
    return mp.gyromagnetic_ratio *
           std::sqrt(kHbar * mp.omega_c * mp.vacuum_permeability * mp.total_spin / (2.0 * mp.cavity_mode_volume));
}

}  // namespace cmrep::dynamics
