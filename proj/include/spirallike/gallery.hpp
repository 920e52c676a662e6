#pragma once

#include <cstddef>
#include <string>

#include "spirallike/polar_grid.hpp"
#include "spirallike/representation.hpp"

namespace spirallike::gallery {

/// 1/(2 log 2) = G(-1), the infimum of Re G on the disk.
inline const double kWilkenFengBound = 1.0 / (2.0 * std::log(2.0));
/// Limit value of Re(z g0'/g0) at z = -1.
inline const double kG0MarginBound = kWilkenFengBound - 0.5;

/// G(z) = -z / ((1 - z) log(1 - z)), with G(0) = 1.
Complex wilken_feng_g(Complex z);
/// z g0'(z)/g0(z) = z/(1-z) + G(z).
Complex g0_log_derivative(Complex z);

/// g0(z) = (1/(1-z)) log(1/(1-z)) = sum H_n z^n.
SpiralFunction g0();
/// z / (1 - z)^exponent, starlike for exponent in [0, 2].
SpiralFunction koebe_power(double exponent);
/// Koebe function z / (1 - z)^2.
SpiralFunction koebe();
/// f(z) = z.
SpiralFunction identity();

/// Q(theta) = ((log cos t)^2 + t^2) / (t tan t + log cos t) on (0, pi/2).
double q_function(double theta);
inline constexpr double kQLimitAtZero = 2.0;
inline constexpr double kQLimitAtHalfPi = 0.0;

struct C0Report {
  double sup_q;      ///< grid maximum of Q after local refinement
  double argmax;     ///< where it was found
  double c0;         ///< 2 exp(sup_q)
  bool monotone;     ///< Q non-increasing along the grid
  std::size_t grid;  ///< number of grid points
};

/// Maximizes Q over `grid` equally spaced interior points plus a
/// golden-section refinement, reporting whether Q decreased along the grid.
C0Report c0_constant(std::size_t grid = 100000);

/// C0 used to validate Hansen parameters: 2 e^2 when sup Q <= 2 was
/// confirmed numerically, otherwise the measured 2 exp(sup Q).
double configured_c0();

struct CMargins {
  double first;   ///< min of Re[1/((1-z) log(C/(1-z)))] - 1/(2 log(C/2))
  double second;  ///< min of Re[z/((1-z) log(C/(1-z)))] + 1/(2 log(C/2))
};

/// The two margins at a single point.
CMargins lemma_c_values(double big_c, Complex z);
/// Grid minima of both margins. Throws DomainError when C < 2.
CMargins lemma_c_margins(double big_c, const PolarGrid& grid);

/// Parameters of g(z) = z (1-z)^{-alpha} (1 + c log(1/(1-z)))^{beta_exp}.
struct HansenParams {
  double alpha;
  double beta_exp;
  double c;

  /// C = e^{1/c}.
  double big_c() const { return std::exp(1.0 / c); }
};

/// Throws ParameterError naming the first violated constraint:
/// 0 < alpha < 2, beta_exp > 0, 0 < c <= 1/log C0 and
/// alpha + c beta_exp / (1 - c log 2) < 2.
void check_hansen_params(const HansenParams& p, double c0 = configured_c0());

/// Proven lower bound 1 - alpha/2 - beta_exp/(2/c - 2 log 2) of Re(z g'/g).
double hansen_margin_bound(const HansenParams& p);

/// Demo defaults: alpha = A/pi, beta_exp = 1, c = min(0.3, 0.99/log C0).
HansenParams default_hansen_params(double big_a);

/// The starlike Hansen function (lambda = 0) after checking the parameters.
SpiralFunction hansen_build(const HansenParams& p);

/// The lambda-spirallike partner of the Hansen function with alpha = A/pi.
SpiralFunction counterexample_for(const SpiralAngle& angle, double big_a,
                                  double beta_exp, double c);

}  // namespace spirallike::gallery
