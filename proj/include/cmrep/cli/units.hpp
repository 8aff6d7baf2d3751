#pragma once

#include <string>
#include <string_view>

namespace cmrep::cli {

enum class Dimension { frequency, time, length, attenuation, dimensionless };

std::string_view dimension_name(Dimension d);

/**
 * Converts `value` given in `unit` to the canonical unit of `d`:
 * frequencies f (GHz, MHz, kHz, Hz) become angular rates 2 pi f in rad/s,
 * times (ns, us, s) seconds, lengths (cm, m, km) kilometres and
 * attenuations (dB_per_cm, dB_per_km) dB/km.
 *
 * An empty unit is accepted only for dimensionless quantities. Throws
 * ConfigError for unknown or mismatched units.
 */
double to_canonical(double value, std::string_view unit, Dimension d);

}  // namespace cmrep::cli
