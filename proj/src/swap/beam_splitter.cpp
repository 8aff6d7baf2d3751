#include "cmrep/swap/beam_splitter.hpp"

#include <cmath>
#include <numbers>

#include "cmrep/error.hpp"

namespace cmrep::swap {

ComplexMatrix beam_splitter_unitary(double beta, double t) {
    const double phase = beta * t;
    const Complex c = std::cos(phase);
    const Complex s = Complex(0.0, -std::sin(phase));
    return {{c, s}, {s, c}};
}

ComplexMatrix balanced_beam_splitter() { return beam_splitter_unitary(1.0, std::numbers::pi / 4.0); }

double swap_time(double g_bs) {
    if (!(g_bs > 0.0)) throw RangeError("swap_time: beam-splitter rate must be positive");
    return std::numbers::pi / (2.0 * g_bs);
}

}  // namespace cmrep::swap
