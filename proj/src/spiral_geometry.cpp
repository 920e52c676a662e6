#include "spirallike/spiral_geometry.hpp"

#include <cmath>
#include <string>

#include "spirallike/errors.hpp"

namespace spirallike {

namespace {

// Representative of x modulo 2 pi in (-pi, pi].
double principal(double x) {
  double r = std::remainder(x, 2.0 * M_PI);
  if (r <= -M_PI) r += 2.0 * M_PI;
  return r;
}

void require_nonzero(Complex w) {
  if (w == Complex(0.0, 0.0)) {
    throw DomainError("lambda-argument undefined at 0");
  }
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError("lambda-argument undefined for non-finite input");
  }
}

}  // namespace

SpiralAngle::SpiralAngle(double lambda) : lambda_(lambda) {
  if (!(std::abs(lambda) < 0.5 * M_PI)) {
    throw DomainError("spiral angle lambda must satisfy |lambda| < pi/2");
  }
  cos_ = std::cos(lambda);
  tan_ = std::tan(lambda);
  mu_ = lambda == 0.0 ? Complex(1.0, 0.0)
                      : Complex(cos_ * cos_, std::sin(lambda) * cos_);
}

SpiralSector::SpiralSector(double center_angle, double opening,
                           SpiralAngle angle)
    : center_(center_angle), opening_(opening), angle_(angle) {
  if (!(opening > 0.0 && opening <= 2.0 * M_PI)) {
    throw DomainError("sector opening must lie in (0, 2 pi]");
  }
}

double arg_lambda(Complex w, const SpiralAngle& angle) {
  require_nonzero(w);
  if (angle.is_zero()) return std::arg(w);
  return principal(std::arg(w) - angle.tan_lambda() * std::log(std::abs(w)));
}

Complex spiral_point(double theta0, const SpiralAngle& angle, double t) {
  return std::exp(Complex(0.0, theta0) + t * std::polar(1.0, angle.lambda()));
}

std::vector<Complex> spiral_segment_sample(Complex w, const SpiralAngle& angle,
                                           int n, double t_min) {
  require_nonzero(w);
  if (n < 2 || !(t_min < 0.0)) {
    throw DomainError("spiral segment sampling needs n >= 2 and t_min < 0");
  }
  const Complex dir = std::polar(1.0, angle.lambda());
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = t_min * static_cast<double>(n - 1 - k) / (n - 1);
    out.push_back(k == n - 1 ? w : w * std::exp(t * dir));
  }
  return out;
}

bool sector_contains(const SpiralSector& sector, Complex w) {
  const double d =
      std::abs(principal(arg_lambda(w, sector.angle()) - sector.center_angle()));
  return d < 0.5 * sector.opening();
}

std::vector<double> continuous_arg_lambda(std::span<const Complex> path,
                                          const SpiralAngle& angle,
                                          double max_increment) {
  std::vector<double> out;
  if (path.empty()) return out;
  if (std::abs(path.front() - Complex(1.0, 0.0)) > 1e-12) {
    throw DomainError("continuation path must start at 1");
  }
  out.reserve(path.size());
  const double limit = std::min(max_increment, M_PI);
  double phase = 0.0;
  out.push_back(0.0);
  for (std::size_t k = 1; k < path.size(); ++k) {
    require_nonzero(path[k]);
    const double step = std::arg(path[k] / path[k - 1]);
    if (std::abs(step) >= limit) {
      throw RefinementError("phase increment " + std::to_string(step) +
                                " too large at sample " + std::to_string(k) +
                                "; refine the path",
                            static_cast<double>(k));
    }
    phase += step;
    out.push_back(phase - angle.tan_lambda() * std::log(std::abs(path[k])));
  }
  return out;
}

}  // namespace spirallike
