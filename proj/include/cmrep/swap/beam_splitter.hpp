#pragma once

#include <utility>

#include "cmrep/qcore/matrix.hpp"

namespace cmrep::swap {

using qcore::Complex;
using qcore::ComplexMatrix;

/// exp(-i H_bs t) for H_bs = beta (a^dag b + a b^dag), restricted to the
/// two input modes: [[cos bt, -i sin bt], [-i sin bt, cos bt]].
ComplexMatrix beam_splitter_unitary(double beta, double t);

/// Balanced splitter, beta t = pi/4.
ComplexMatrix balanced_beam_splitter();

/// pi / (2 g_bs)
double swap_time(double g_bs);

/// (v2, h2)^T = U (v1, h1)^T. Works for mode amplitudes (Complex) and for
/// mode operators (ComplexMatrix) alike.
template <class Mode>
std::pair<Mode, Mode> apply_io_relations(const ComplexMatrix& u_bs, const Mode& v1, const Mode& h1) {
    return {u_bs(0, 0) * v1 + u_bs(0, 1) * h1, u_bs(1, 0) * v1 + u_bs(1, 1) * h1};
}

}  // namespace cmrep::swap
