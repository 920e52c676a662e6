#pragma once

#include <complex>

namespace spirallike {

using Complex = std::complex<double>;

/// A point of the open unit disk, stored both as z and in polar form
/// (1 - |z|, arg z). Keeping the radius complement separately lets
/// evaluators form 1 - e^{-ia} z without cancellation when |z| is within
/// a few ulps of 1.
class DiskPoint {
 public:
  /// Throws DomainError unless |z| < 1.
  static DiskPoint from_complex(Complex z);
  /// Point (1 - complement) e^{i angle}; complement must lie in (0, 1].
  static DiskPoint polar(double complement, double angle);
  /// Point e^{zeta}; requires Re zeta < 0.
  static DiskPoint from_log(Complex zeta);

  Complex z() const noexcept { return z_; }
  double radius() const noexcept { return radius_; }
  double complement() const noexcept { return complement_; }
  double angle() const noexcept { return angle_; }

  /// 1 - e^{-ia} z.
  Complex one_minus_rotated(double a) const;
  /// 1 - z.
  Complex one_minus() const { return one_minus_rotated(0.0); }
  /// log(e^{-ia} z) with imaginary part in (-pi, pi]; -inf real part at z = 0.
  Complex log_rotated(double a) const;

 private:
  DiskPoint(Complex z, double radius, double complement, double angle)
      : z_(z), radius_(radius), complement_(complement), angle_(angle) {}

  Complex z_;
  double radius_;
  double complement_;
  double angle_;
};

}  // namespace spirallike
