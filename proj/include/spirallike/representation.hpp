#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spirallike/boundary_measure.hpp"
#include "spirallike/disk_point.hpp"
#include "spirallike/spiral_geometry.hpp"

namespace spirallike {

/// A starlike function g in normalized form, seen through log(g(z)/z) and
/// z g'(z)/g(z). Implementations must return the branch of log(g/z) that
/// vanishes at 0 and is continuous on the disk. Kernels are immutable and
/// shared between function handles.
class StarlikeKernel {
 public:
  virtual ~StarlikeKernel() = default;

  virtual Complex log_ratio(const DiskPoint& p) const = 0;
  virtual Complex log_derivative(const DiskPoint& p) const = 0;
  virtual std::string describe() const = 0;
  /// The boundary measure the kernel was built from, if any.
  virtual const BoundaryMeasure* measure() const noexcept { return nullptr; }
};

/// Kernel -(1/pi) int log(1 - e^{-it} z) d beta(t) of a boundary measure.
/// Atoms are evaluated in closed form; each linear piece of the density is
/// integrated exactly through dilogarithm/trilogarithm antiderivatives.
class MeasureKernel final : public StarlikeKernel {
 public:
  /// Throws ValidationError for an invalid measure.
  explicit MeasureKernel(BoundaryMeasure measure);

  Complex log_ratio(const DiskPoint& p) const override;
  Complex log_derivative(const DiskPoint& p) const override;
  std::string describe() const override;
  const BoundaryMeasure* measure() const noexcept override { return &measure_; }

 private:
  struct Segment {
    double start;
    double length;
    double value;  // density at start
    double slope;
  };

  BoundaryMeasure measure_;
  std::vector<Segment> segments_;
};

/// Evaluatable lambda-spirallike function
///   f(z) = z exp(mu log(g(z)/z)),  mu = e^{i lambda} cos lambda,
/// for a starlike kernel g. With a measure kernel this is the
/// representation formula f(z) = z exp(-(mu/pi) int log(1 - e^{-it} z) d beta).
class SpiralFunction {
 public:
  SpiralFunction(std::shared_ptr<const StarlikeKernel> kernel, SpiralAngle angle);

  /// f built from a boundary measure; throws ValidationError if invalid.
  static SpiralFunction from_measure(const BoundaryMeasure& m, SpiralAngle angle);

  const SpiralAngle& angle() const noexcept { return angle_; }
  const std::shared_ptr<const StarlikeKernel>& kernel() const noexcept { return kernel_; }
  /// Measure behind the function, or nullptr for closed forms.
  const BoundaryMeasure* measure() const noexcept { return kernel_->measure(); }
  /// True when lambda = 0, i.e. the function is its own starlike kernel.
  bool is_starlike() const noexcept { return angle_.is_zero(); }
  std::string describe() const;

  Complex log_f_over_z(const DiskPoint& p) const;
  Complex log_f_over_z(Complex z) const;
  Complex evaluate(const DiskPoint& p) const;
  Complex evaluate(Complex z) const;
  /// z f'(z) / f(z).
  Complex log_derivative(const DiskPoint& p) const;
  Complex log_derivative(Complex z) const;

 private:
  std::shared_ptr<const StarlikeKernel> kernel_;
  SpiralAngle angle_;
};

/// Taylor coefficients of f by Cauchy sampling on |z| = radius; index n
/// holds a_n for n = 0..n_max (a_0 = 0). The sample count is the smallest power of two keeping the
/// aliasing error (with |a_n| <= n) below 1e-10. Roundoff grows like
/// eps M(radius) / radius^n, so high orders need radii close to 1.
std::vector<Complex> taylor_coefficients(const SpiralFunction& fn, int n_max,
                                         double radius = 0.5);

}  // namespace spirallike
