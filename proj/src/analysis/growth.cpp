#include <algorithm>
#include <cmath>
#include <limits>

#include "spirallike/analysis.hpp"
#include "spirallike/errors.hpp"
#include "spirallike/golden_section.hpp"

namespace spirallike {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double log_modulus_at(const SpiralFunction& fn, double complement, double t) {
  const DiskPoint p = DiskPoint::polar(complement, t);
  return std::log1p(-complement) + fn.log_f_over_z(p).real();
}

}  // namespace

double log_max_modulus(const SpiralFunction& fn, double r, int coarse) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("max modulus needs 0 < r < 1");
  if (coarse < 16) throw DomainError("max modulus needs at least 16 coarse angles");
  const double complement = 1.0 - r;
  const double h = kTwoPi / coarse;
  std::vector<double> values(static_cast<std::size_t>(coarse));
  for (int k = 0; k < coarse; ++k) {
    values[static_cast<std::size_t>(k)] = log_modulus_at(fn, complement, h * k);
  }

  // candidate brackets: cyclic local maxima of the coarse scan plus atoms
  std::vector<std::pair<double, double>> peaks;  // (value, angle)
  for (int k = 0; k < coarse; ++k) {
    const double v = values[static_cast<std::size_t>(k)];
    const double left = values[static_cast<std::size_t>((k + coarse - 1) % coarse)];
    const double right = values[static_cast<std::size_t>((k + 1) % coarse)];
    if (v >= left && v >= right) peaks.emplace_back(v, h * k);
  }
  std::sort(peaks.begin(), peaks.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  if (peaks.size() > 3) peaks.resize(3);
  if (const BoundaryMeasure* m = fn.measure()) {
    for (const Atom& a : m->atoms()) {
      peaks.emplace_back(log_modulus_at(fn, complement, a.position), a.position);
    }
  }

  double best = -std::numeric_limits<double>::infinity();
  for (const auto& [value, t] : peaks) {
    best = std::max(best, value);
    const auto [arg, refined] = golden_section_maximize(
        [&](double s) { return log_modulus_at(fn, complement, s); }, t - h, t + h,
        1e-2 * complement);
    (void)arg;
    best = std::max(best, refined);
  }
  if (!std::isfinite(best)) throw RangeError("max modulus is not finite");
  return best;
}

double max_modulus(const SpiralFunction& fn, double r, int coarse) {
  const double lm = log_max_modulus(fn, r, coarse);
  if (lm > std::log(std::numeric_limits<double>::max())) {
    throw RangeError("M(r, f) overflows a double");
  }
  return std::exp(lm);
}

double GrowthReport::last_delta() const {
  if (rows.size() < 2) return 0.0;
  return rows.back().exponent - rows[rows.size() - 2].exponent;
}

std::vector<double> decade_schedule(int k_min, int k_max) {
  if (k_min < 1 || k_max < k_min) throw DomainError("decade schedule needs 1 <= k_min <= k_max");
  std::vector<double> radii;
  for (int k = k_min; k <= k_max; ++k) radii.push_back(1.0 - std::pow(10.0, -k));
  return radii;
}

GrowthReport growth_exponent(const SpiralFunction& fn, const SpiralAngle& angle,
                             const std::vector<double>& r_schedule, int coarse,
                             std::optional<double> known_a) {
  if (r_schedule.empty() || r_schedule.back() < 1.0 - 1e-3) {
    throw DomainError("growth schedule must reach r = 1 - 10^-3 or beyond");
  }
  for (std::size_t i = 0; i < r_schedule.size(); ++i) {
    if (!(r_schedule[i] > 0.0 && r_schedule[i] < 1.0) ||
        (i > 0 && !(r_schedule[i] > r_schedule[i - 1]))) {
      throw DomainError("growth schedule must increase strictly inside (0, 1)");
    }
  }
  GrowthReport report{};
  if (known_a) {
    report.a_estimate = *known_a;
  } else if (const BoundaryMeasure* m = fn.measure()) {
    report.a_estimate = max_jump(*m);
  } else {
    report.a_estimate = boundary_jump(fn, angle).value();
  }
  report.predicted_q0 = report.a_estimate * angle.cos_squared() / M_PI;
  for (double r : r_schedule) {
    const double lm = log_max_modulus(fn, r, coarse);
    const double m = lm > std::log(std::numeric_limits<double>::max())
                         ? std::numeric_limits<double>::infinity()
                         : std::exp(lm);
    report.rows.push_back({r, m, lm, lm / -std::log(1.0 - r)});
  }
  return report;
}

std::vector<RatioRow> hansen_ratio(const SpiralFunction& fn, double q0,
                                   const std::vector<double>& r_schedule, int coarse) {
  if (!(q0 >= 0.0)) throw DomainError("hansen_ratio needs q0 >= 0");
  std::vector<RatioRow> rows;
  for (double r : r_schedule) {
    const double lm = log_max_modulus(fn, r, coarse);
    rows.push_back({r, std::exp(lm + q0 * std::log(1.0 - r))});
  }
  return rows;
}

double ratio_loglog_slope(const std::vector<RatioRow>& rows) {
  if (rows.size() < 2) throw DomainError("slope needs at least two rows");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(rows.size());
  for (const RatioRow& row : rows) {
    const double x = std::log(-std::log(1.0 - row.r));
    const double y = std::log(row.ratio);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw DomainError("slope needs distinct radii");
  return (n * sxy - sx * sy) / denom;
}

bool ratio_unbounded_trend(const std::vector<RatioRow>& rows) {
  if (rows.size() < 2) return false;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].ratio > rows[i - 1].ratio)) return false;
  }
  return rows.back().ratio > 1.5 * rows.front().ratio;
}

}  // namespace spirallike
