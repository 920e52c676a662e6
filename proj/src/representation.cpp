#include "spirallike/representation.hpp"

#include <cmath>
#include <sstream>

#include "spirallike/errors.hpp"
#include "spirallike/polylog.hpp"

namespace spirallike {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr Complex kI(0.0, 1.0);

// Li_2, Li_3 and log(1 - u) at u = e^{-ia} z.
struct KnotValues {
  Complex li2;
  Complex li3;
  Complex log1mu;
};

KnotValues knot_values(const DiskPoint& p, double a, bool need_li3) {
  const Complex u = p.z() * std::polar(1.0, -a);
  const Complex log_u = p.log_rotated(a);
  return {polylog::li2(u, log_u), need_li3 ? polylog::li3(u, log_u) : Complex(),
          std::log(p.one_minus_rotated(a))};
}

}  // namespace

MeasureKernel::MeasureKernel(BoundaryMeasure measure) : measure_(std::move(measure)) {
  measure_.require_valid();
  const auto& knots = measure_.knots();
  const std::size_t n = knots.size();
  for (std::size_t j = 0; j < n; ++j) {
    const auto& a = knots[j];
    const auto& b = knots[(j + 1) % n];
    const double length = j + 1 < n ? b.position - a.position
                                    : b.position + kTwoPi - a.position;
    segments_.push_back({a.position, length, a.value, (b.value - a.value) / length});
  }
}

Complex MeasureKernel::log_ratio(const DiskPoint& p) const {
  Complex sum = 0.0;
  for (const auto& atom : measure_.atoms()) {
    sum += atom.jump * std::log(p.one_minus_rotated(atom.position));
  }
  // On [a, a+L] with u(t) = z e^{-it}:
  //   int log(1-u) dt        = -i [Li2(u)]
  //   int (t-a) log(1-u) dt  = -i L Li2(u_b) - [Li3(u)]
  // Knot values are shared between neighbouring segments.
  if (!segments_.empty()) {
    std::vector<KnotValues> values;
    values.reserve(segments_.size());
    for (const auto& s : segments_) values.push_back(knot_values(p, s.start, true));
    for (std::size_t j = 0; j < segments_.size(); ++j) {
      const auto& s = segments_[j];
      const auto& va = values[j];
      const auto& vb = values[(j + 1) % values.size()];
      const Complex i0 = -kI * (vb.li2 - va.li2);
      Complex total = s.value * i0;
      if (s.slope != 0.0) {
        const Complex i1 = -kI * s.length * vb.li2 - (vb.li3 - va.li3);
        total += s.slope * i1;
      }
      sum += total;
    }
  }
  return -sum / M_PI;
}

Complex MeasureKernel::log_derivative(const DiskPoint& p) const {
  Complex sum = 0.0;
  for (const auto& atom : measure_.atoms()) {
    // u / (1 - u) = 1 / (1 - u) - 1
    sum += atom.jump * (1.0 / p.one_minus_rotated(atom.position) - 1.0);
  }
  // int u/(1-u) dt = -i [log(1-u)],
  // int (t-a) u/(1-u) dt = -i L log(1-u_b) + i int log(1-u) dt
  if (!segments_.empty()) {
    std::vector<KnotValues> values;
    values.reserve(segments_.size());
    for (const auto& s : segments_) {
      values.push_back(knot_values(p, s.start, false));
    }
    for (std::size_t j = 0; j < segments_.size(); ++j) {
      const auto& s = segments_[j];
      const auto& va = values[j];
      const auto& vb = values[(j + 1) % values.size()];
      // For a full-period segment the log(1-u) difference is exactly zero.
      const Complex j0 = -kI * (vb.log1mu - va.log1mu);
      Complex total = s.value * j0;
      if (s.slope != 0.0) {
        const Complex i0 = -kI * (vb.li2 - va.li2);
        total += s.slope * (-kI * s.length * vb.log1mu + kI * i0);
      }
      sum += total;
    }
  }
  return 1.0 + sum / M_PI;
}

std::string MeasureKernel::describe() const {
  std::ostringstream os;
  os << "measure(" << measure_.atoms().size() << " atoms, "
     << measure_.knots().size() << " density knots)";
  return os.str();
}

SpiralFunction::SpiralFunction(std::shared_ptr<const StarlikeKernel> kernel,
                               SpiralAngle angle)
    : kernel_(std::move(kernel)), angle_(angle) {
  if (!kernel_) throw DomainError("spiral function needs a kernel");
}

SpiralFunction SpiralFunction::from_measure(const BoundaryMeasure& m,
                                            SpiralAngle angle) {
  return SpiralFunction(std::make_shared<const MeasureKernel>(m), angle);
}

std::string SpiralFunction::describe() const {
  std::ostringstream os;
  os << kernel_->describe() << " at lambda=" << angle_.lambda();
  return os.str();
}

Complex SpiralFunction::log_f_over_z(const DiskPoint& p) const {
  return angle_.mu() * kernel_->log_ratio(p);
}

Complex SpiralFunction::log_f_over_z(Complex z) const {
  return log_f_over_z(DiskPoint::from_complex(z));
}

Complex SpiralFunction::evaluate(const DiskPoint& p) const {
  if (p.z() == Complex(0.0, 0.0)) return 0.0;
  return p.z() * std::exp(log_f_over_z(p));
}

Complex SpiralFunction::evaluate(Complex z) const {
  return evaluate(DiskPoint::from_complex(z));
}

Complex SpiralFunction::log_derivative(const DiskPoint& p) const {
  if (p.z() == Complex(0.0, 0.0)) return 1.0;
  return 1.0 + angle_.mu() * (kernel_->log_derivative(p) - 1.0);
}

Complex SpiralFunction::log_derivative(Complex z) const {
  return log_derivative(DiskPoint::from_complex(z));
}

std::vector<Complex> taylor_coefficients(const SpiralFunction& fn, int n_max,
                                         double radius) {
  if (!(radius > 0.0 && radius < 1.0)) {
    throw DomainError("coefficient radius must lie in (0, 1)");
  }
  if (n_max < 1) throw DomainError("n_max must be at least 1");

  // aliasing on a_n: sum_{j>=1} a_{n+jN} radius^{jN} with |a_m| <= m
  auto aliasing = [&](std::size_t samples) {
    double bound = 0.0;
    const double q = std::pow(radius, static_cast<double>(samples));
    double qj = q;
    for (int j = 1; j < 10000 && qj > 1e-300; ++j) {
      bound += (n_max + static_cast<double>(j) * samples) * qj;
      qj *= q;
    }
    return bound;
  };
  std::size_t samples = 64;
  while (samples < 2 * static_cast<std::size_t>(n_max) + 2 || aliasing(samples) > 1e-10) {
    samples *= 2;
    if (samples > (std::size_t{1} << 26)) {
      throw AccuracyError("coefficient extraction needs too many samples",
                          aliasing(samples / 2));
    }
  }

  std::vector<Complex> values(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double angle = kTwoPi * static_cast<double>(k) / static_cast<double>(samples);
    values[k] = fn.evaluate(DiskPoint::polar(1.0 - radius, angle));
  }
  // a_0 = f(0) = 0 by normalization
  std::vector<Complex> coeffs{Complex(0.0, 0.0)};
  coeffs.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    Complex sum = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
      // reduce k n mod N before forming the angle
      const std::size_t idx = (k * static_cast<std::size_t>(n)) % samples;
      sum += values[k] *
             std::polar(1.0, -kTwoPi * static_cast<double>(idx) / static_cast<double>(samples));
    }
    coeffs.push_back(sum / (static_cast<double>(samples) * std::pow(radius, n)));
  }
  return coeffs;
}

}  // namespace spirallike
