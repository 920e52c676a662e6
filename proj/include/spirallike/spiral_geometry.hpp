#pragma once

#include <span>
#include <vector>

#include "spirallike/disk_point.hpp"

namespace spirallike {

/// The spiral parameter lambda in (-pi/2, pi/2) with the quantities every
/// lambda-dependent formula needs.
class SpiralAngle {
 public:
  /// Throws DomainError unless |lambda| < pi/2.
  explicit SpiralAngle(double lambda = 0.0);

  double lambda() const noexcept { return lambda_; }
  /// e^{i lambda} cos lambda, the exponent relating f(z)/z to g(z)/z.
  Complex mu() const noexcept { return mu_; }
  double tan_lambda() const noexcept { return tan_; }
  double cos_lambda() const noexcept { return mu_.real() == 0.0 ? 0.0 : cos_; }
  double cos_squared() const noexcept { return mu_.real(); }
  bool is_zero() const noexcept { return lambda_ == 0.0; }

 private:
  double lambda_;
  double cos_;
  double tan_;
  Complex mu_;
};

/// S_lambda(center, opening): union of the lambda-spirals whose
/// lambda-argument lies within opening/2 of center.
class SpiralSector {
 public:
  /// Throws DomainError unless 0 < opening <= 2 pi.
  SpiralSector(double center_angle, double opening, SpiralAngle angle);

  double center_angle() const noexcept { return center_; }
  double opening() const noexcept { return opening_; }
  const SpiralAngle& angle() const noexcept { return angle_; }

 private:
  double center_;
  double opening_;
  SpiralAngle angle_;
};

/// Principal lambda-argument arg w - tan(lambda) log|w| reduced to (-pi, pi].
double arg_lambda(Complex w, const SpiralAngle& angle);

/// exp(i theta0 + t e^{i lambda}).
Complex spiral_point(double theta0, const SpiralAngle& angle, double t);

/// n points w exp(t_k e^{i lambda}), t_k equally spaced over [t_min, 0].
std::vector<Complex> spiral_segment_sample(Complex w, const SpiralAngle& angle,
                                           int n, double t_min);

/// Open-sector membership by circular distance of lambda-arguments.
bool sector_contains(const SpiralSector& sector, Complex w);

/// Continuous lift of arg_lambda along a sampled path starting at 1.
///
/// Consecutive samples must differ in ordinary phase by less than
/// `max_increment` (at most pi); otherwise a RefinementError names the
/// offending index. Zeros on the path raise DomainError.
std::vector<double> continuous_arg_lambda(std::span<const Complex> path,
                                          const SpiralAngle& angle,
                                          double max_increment = M_PI);

}  // namespace spirallike
