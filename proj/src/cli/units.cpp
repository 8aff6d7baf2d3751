#include "cmrep/cli/units.hpp"

#include <array>

#include "cmrep/dynamics/params.hpp"
#include "cmrep/error.hpp"

namespace cmrep::cli {

namespace {

struct UnitEntry {
    std::string_view name;
    Dimension dimension;
    double scale;
};

constexpr std::array<UnitEntry, 12> kUnits{{
    {"GHz", Dimension::frequency, dynamics::kTwoPi * 1e9},
    {"MHz", Dimension::frequency, dynamics::kTwoPi * 1e6},
    {"kHz", Dimension::frequency, dynamics::kTwoPi * 1e3},
    {"Hz", Dimension::frequency, dynamics::kTwoPi},
    {"ns", Dimension::time, 1e-9},
    {"us", Dimension::time, 1e-6},
    {"s", Dimension::time, 1.0},
    {"cm", Dimension::length, 1e-5},
    {"m", Dimension::length, 1e-3},
    {"km", Dimension::length, 1.0},
    {"dB_per_cm", Dimension::attenuation, 1e5},
    {"dB_per_km", Dimension::attenuation, 1.0},
}};

}  // namespace

std::string_view dimension_name(Dimension d) {
    switch (d) {
        case Dimension::frequency: return "frequency";
        case Dimension::time: return "time";
        case Dimension::length: return "length";
        case Dimension::attenuation: return "attenuation";
        case Dimension::dimensionless: return "dimensionless";
    }
    return "?";
}

double to_canonical(double value, std::string_view unit, Dimension d) {
    if (d == Dimension::dimensionless) {
        if (!unit.empty()) throw ConfigError("unexpected unit '" + std::string(unit) + "' on a dimensionless value");
        return value;
    }
    if (unit.empty()) throw ConfigError("missing unit suffix for " + std::string(dimension_name(d)) + " value");
    for (const auto& u : kUnits) {
        if (u.name != unit) continue;
        if (u.dimension != d)
            throw ConfigError("unit '" + std::string(unit) + "' is a " + std::string(dimension_name(u.dimension)) +
                              ", expected " + std::string(dimension_name(d)));
        return value * u.scale;
    }
    throw ConfigError("unknown unit '" + std::string(unit) + "'");
}

}  // namespace cmrep::cli
