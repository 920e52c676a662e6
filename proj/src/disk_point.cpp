#include "spirallike/disk_point.hpp"

#include <cmath>
#include <limits>

#include "spirallike/errors.hpp"

namespace spirallike {

DiskPoint DiskPoint::from_complex(Complex z) {
  const double r = std::abs(z);
  if (!(r < 1.0)) {
    throw DomainError("point must lie in the open unit disk (|z| < 1)");
  }
  return DiskPoint(z, r, 1.0 - r, r == 0.0 ? 0.0 : std::arg(z));
}

DiskPoint DiskPoint::polar(double complement, double angle) {
  if (!(complement > 0.0 && complement <= 1.0) || !std::isfinite(angle)) {
    throw DomainError("polar disk point needs 0 < 1 - |z| <= 1");
  }
  return DiskPoint(std::polar(1.0 - complement, angle), 1.0 - complement,
                   complement, angle);
}

DiskPoint DiskPoint::from_log(Complex zeta) {
  if (!(zeta.real() < 0.0)) {
    throw DomainError("log-coordinate point needs Re zeta < 0");
  }
  return polar(-std::expm1(zeta.real()), zeta.imag());
}

Complex DiskPoint::one_minus_rotated(double a) const {
  // 1 - (1 - c) e^{i phi} = c + (1 - c)(1 - cos phi) - i (1 - c) sin phi
  if (radius_ < 0.5) return 1.0 - z_ * std::polar(1.0, -a);
  const double phi = angle_ - a;
  const double s = std::sin(0.5 * phi);
  const double r = radius_;
  return {complement_ + r * 2.0 * s * s, -r * std::sin(phi)};
}

Complex DiskPoint::log_rotated(double a) const {
  if (complement_ == 1.0) {
    return {-std::numeric_limits<double>::infinity(), 0.0};
  }
  return {std::log1p(-complement_), std::remainder(angle_ - a, 2.0 * M_PI)};
}

}  // namespace spirallike
