#pragma once

#include "spirallike/disk_point.hpp"

namespace spirallike::polylog {

/// Li_2(u) for |u| <= 1. `log_u` must be log u with imaginary part in
/// [-pi, pi]; it is only read when |u| >= 1/2, where it drives the
/// expansion in powers of log u and keeps full accuracy as u -> 1.
Complex li2(Complex u, Complex log_u);
/// Li_3(u), same contract as li2.
Complex li3(Complex u, Complex log_u);

/// Convenience overloads computing log u internally.
Complex li2(Complex u);
Complex li3(Complex u);

}  // namespace spirallike::polylog
