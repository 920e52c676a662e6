#include "spirallike/gallery.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "spirallike/correspondence.hpp"
#include "spirallike/errors.hpp"
#include "spirallike/golden_section.hpp"

namespace spirallike::gallery {

namespace {

constexpr double kLog2 = 0.69314718055994530942;

// -log(1 - z) / z, equal to 1 at z = 0 and with positive real part on the
// disk (it is the average of 1/(1 - s z) over s in [0, 1]).
Complex log_quotient(const DiskPoint& p) {
  const Complex z = p.z();
  if (std::abs(z) < 1e-2) {
    Complex sum = 0.0;
    for (int k = 9; k >= 0; --k) sum = sum * z + 1.0 / (k + 1.0);
    return sum;
  }
  return -std::log(p.one_minus()) / z;
}

class G0Kernel final : public StarlikeKernel {
 public:
  Complex log_ratio(const DiskPoint& p) const override {
    return -std::log(p.one_minus()) + std::log(log_quotient(p));
  }
  Complex log_derivative(const DiskPoint& p) const override {
    const Complex inv = 1.0 / p.one_minus();
    return (inv - 1.0) + inv / log_quotient(p);
  }
  std::string describe() const override { return "g0"; }
};

class KoebePowerKernel final : public StarlikeKernel {
 public:
  explicit KoebePowerKernel(double exponent) : exponent_(exponent) {}
  Complex log_ratio(const DiskPoint& p) const override {
    return -exponent_ * std::log(p.one_minus());
  }
  Complex log_derivative(const DiskPoint& p) const override {
    return 1.0 + exponent_ * (1.0 / p.one_minus() - 1.0);
  }
  std::string describe() const override {
    std::ostringstream os;
    os << "koebe_power(" << exponent_ << ")";
    return os.str();
  }

 private:
  double exponent_;
};

class HansenKernel final : public StarlikeKernel {
 public:
  explicit HansenKernel(HansenParams p) : p_(p) {}
  Complex log_ratio(const DiskPoint& p) const override {
    const Complex ell = -std::log(p.one_minus());
    const Complex base = 1.0 + p_.c * ell;
    if (!(base.real() > 0.0)) {
      throw InconsistencyError("Hansen base 1 + c log(1/(1-z)) left Re > 0");
    }
    return p_.alpha * ell + p_.beta_exp * std::log(base);
  }
  Complex log_derivative(const DiskPoint& p) const override {
    const Complex om = p.one_minus();
    const Complex inv = 1.0 / om;
    const Complex ell = -std::log(om);
    // z/(1-z) = 1/(1-z) - 1 ; log(C/(1-z)) = 1/c + log(1/(1-z))
    return 1.0 + p_.alpha * (inv - 1.0) +
           p_.beta_exp * p.z() * inv / (1.0 / p_.c + ell);
  }
  std::string describe() const override {
    std::ostringstream os;
    os << "hansen(alpha=" << p_.alpha << ", beta_exp=" << p_.beta_exp
       << ", c=" << p_.c << ")";
    return os.str();
  }

 private:
  HansenParams p_;
};

double log_cos(double theta) {
  if (theta < 1.0) {
    const double s = std::sin(0.5 * theta);
    return std::log1p(-2.0 * s * s);
  }
  return std::log(std::cos(theta));
}

}  // namespace

Complex wilken_feng_g(Complex z) {
  const DiskPoint p = DiskPoint::from_complex(z);
  return 1.0 / (p.one_minus() * log_quotient(p));
}

Complex g0_log_derivative(Complex z) {
  return g0().log_derivative(DiskPoint::from_complex(z));
}

SpiralFunction g0() {
  static const auto kernel = std::make_shared<const G0Kernel>();
  return SpiralFunction(kernel, SpiralAngle(0.0));
}

SpiralFunction koebe_power(double exponent) {
  if (!(exponent >= 0.0 && exponent <= 2.0)) {
    throw ParameterError("koebe_power exponent must lie in [0, 2]");
  }
  return SpiralFunction(std::make_shared<const KoebePowerKernel>(exponent),
                        SpiralAngle(0.0));
}

SpiralFunction koebe() { return koebe_power(2.0); }
SpiralFunction identity() { return koebe_power(0.0); }

double q_function(double theta) {
  if (!(theta > 0.0 && theta < 0.5 * M_PI)) {
    throw DomainError("Q(theta) is defined for 0 < theta < pi/2");
  }
  if (theta < 1e-3) {
    const double t2 = theta * theta;
    return 2.0 - t2 / 2.0 - t2 * t2 / 36.0;
  }
  const double lc = log_cos(theta);
  return (lc * lc + theta * theta) / (theta * std::tan(theta) + lc);
}

C0Report c0_constant(std::size_t grid) {
  if (grid < 1000) throw DomainError("c0_constant needs a grid of at least 1000");
  const double step = 0.5 * M_PI / static_cast<double>(grid + 1);
  std::size_t best = 1;
  double best_q = -INFINITY;
  double prev = INFINITY;
  bool monotone = true;
  for (std::size_t i = 1; i <= grid; ++i) {
    const double q = q_function(step * static_cast<double>(i));
    if (q > prev) monotone = false;
    prev = q;
    if (q > best_q) {
      best_q = q;
      best = i;
    }
  }
  const double lo = best == 1 ? 1e-12 : step * static_cast<double>(best - 1);
  const double hi = step * static_cast<double>(std::min(best + 1, grid));
  auto [arg, refined] = golden_section_maximize(q_function, lo, hi, 1e-14);
  double argmax = step * static_cast<double>(best);
  if (refined > best_q) {
    best_q = refined;
    argmax = arg;
  }
  return {best_q, argmax, 2.0 * std::exp(best_q), monotone, grid};
}

double configured_c0() {
  static const double c0 = [] {
    const C0Report report = c0_constant(100000);
    return report.sup_q <= kQLimitAtZero ? 2.0 * std::exp(2.0) : report.c0;
  }();
  return c0;
}

CMargins lemma_c_values(double big_c, Complex z) {
  if (!(big_c >= 2.0)) throw DomainError("lemma_c margins need C >= 2");
  const DiskPoint pt = DiskPoint::from_complex(z);
  const Complex om = pt.one_minus();
  const Complex p = 1.0 / (om * (std::log(big_c) - std::log(om)));
  const double bound = 1.0 / (2.0 * std::log(big_c / 2.0));
  return {p.real() - bound, (z * p).real() + bound};
}

CMargins lemma_c_margins(double big_c, const PolarGrid& grid) {
  CMargins out{INFINITY, INFINITY};
  for (const DiskPoint& pt : grid.points()) {
    const CMargins m = lemma_c_values(big_c, pt.z());
    out.first = std::min(out.first, m.first);
    out.second = std::min(out.second, m.second);
  }
  return out;
}

void check_hansen_params(const HansenParams& p, double c0) {
  if (!(p.alpha > 0.0 && p.alpha < 2.0)) {
    throw ParameterError("Hansen parameters: alpha must lie in (0, 2)");
  }
  if (!(p.beta_exp > 0.0) || !std::isfinite(p.beta_exp)) {
    throw ParameterError("Hansen parameters: beta_exp must be positive");
  }
  if (!(p.c > 0.0)) {
    throw ParameterError("Hansen parameters: c must be positive");
  }
  if (!(p.c <= 1.0 / std::log(c0))) {
    std::ostringstream os;
    os << "Hansen parameters violate c <= 1/log C0 (c=" << p.c
       << ", 1/log C0=" << 1.0 / std::log(c0) << ")";
    throw ParameterError(os.str());
  }
  const double lhs = p.alpha + p.c * p.beta_exp / (1.0 - p.c * kLog2);
  if (!(lhs < 2.0)) {
    std::ostringstream os;
    os << "Hansen parameters violate alpha + c beta/(1 - c log 2) < 2 (lhs="
       << lhs << ")";
    throw ParameterError(os.str());
  }
}

double hansen_margin_bound(const HansenParams& p) {
  return 1.0 - 0.5 * p.alpha - p.beta_exp / (2.0 / p.c - 2.0 * kLog2);
}

HansenParams default_hansen_params(double big_a) {
  return {big_a / M_PI, 1.0, std::min(0.3, 0.99 / std::log(configured_c0()))};
}

SpiralFunction hansen_build(const HansenParams& p) {
  check_hansen_params(p);
  return SpiralFunction(std::make_shared<const HansenKernel>(p), SpiralAngle(0.0));
}

SpiralFunction counterexample_for(const SpiralAngle& angle, double big_a,
                                  double beta_exp, double c) {
  if (!(big_a > 0.0 && big_a < 2.0 * M_PI)) {
    throw ParameterError("counterexample needs 0 < A < 2 pi");
  }
  return spirallike_of(hansen_build({big_a / M_PI, beta_exp, c}), angle);
}

}  // namespace spirallike::gallery
