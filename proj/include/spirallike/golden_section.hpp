#pragma once

#include <cmath>
#include <utility>

namespace spirallike {

/// Golden-section search for a maximum of a unimodal function on [a, b].
/// Returns (argmax, value), stopping once the bracket is narrower than `tol`.
template <typename Fn>
std::pair<double, double> golden_section_maximize(Fn&& fn, double a, double b,
                                                  double tol, int max_iter = 200) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c);
  double fd = fn(d);
  for (int i = 0; i < max_iter && std::abs(b - a) > tol; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    }
  }
  return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace spirallike
