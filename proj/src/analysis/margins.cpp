#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "parallel.hpp"
#include "spirallike/analysis.hpp"
#include "spirallike/errors.hpp"

namespace spirallike {

namespace {
std::atomic<unsigned> g_workers{1};
}

void set_worker_threads(unsigned n) { g_workers.store(std::max(1u, n)); }

unsigned worker_threads() { return g_workers.load(); }

double spirallikeness_margin(const SpiralFunction& fn, const SpiralAngle& angle,
                             const PolarGrid& grid) {
  const std::vector<DiskPoint> points = grid.points();
  const Complex rot = std::conj(std::polar(1.0, angle.lambda()));
  const auto mins = detail::run_chunks<double>(points.size(), [&](std::size_t b, std::size_t e) {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = b; i < e; ++i) {
      const Complex p = fn.log_derivative(points[i]);
      const double v = (rot * p).real();
      if (std::isnan(v)) throw InconsistencyError("margin evaluation produced NaN");
      m = std::min(m, v);
    }
    return m;
  });
  return *std::min_element(mins.begin(), mins.end());
}

double goodman_check(const SpiralFunction& g, const PolarGrid& grid) {
  if (!g.is_starlike()) throw DomainError("Goodman bound applies to starlike functions only");
  const std::vector<DiskPoint> points = grid.points();
  const auto maxes = detail::run_chunks<double>(points.size(), [&](std::size_t b, std::size_t e) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = b; i < e; ++i) {
      const DiskPoint& p = points[i];
      if (p.radius() == 0.0) continue;
      const double arg = g.log_f_over_z(p).imag();
      m = std::max(m, std::abs(arg) - 2.0 * std::asin(p.radius()));
    }
    return m;
  });
  return *std::max_element(maxes.begin(), maxes.end());
}

}  // namespace spirallike
