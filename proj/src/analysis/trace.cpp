#include <algorithm>
#include <cmath>
#include <sstream>

#include "spirallike/analysis.hpp"
#include "spirallike/errors.hpp"

namespace spirallike {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
// Largest change of log(f/z) accepted between neighbouring path samples;
// keeps the principal phase increment unambiguous.
constexpr double kMaxLogStep = M_PI / 4.0;
constexpr int kMaxDepth = 60;

struct PathSample {
  Complex w;       // f(z)/z
  Complex log_w;   // continuous branch, used only to steer refinement
};

class PathBuilder {
 public:
  explicit PathBuilder(const SpiralFunction& fn) : fn_(fn) {}

  PathSample sample(const DiskPoint& p) {
    ++evaluations_;
    const Complex log_w = fn_.log_f_over_z(p);
    if (!(std::abs(log_w.real()) < 700.0) || !std::isfinite(log_w.imag())) {
      throw RangeError("|f(z)/z| out of double range while tracing");
    }
    return {std::exp(log_w), log_w};
  }

  // Appends samples on (a, b] of the parametrized path, refining by bisection.
  template <typename Param>
  void extend(Param&& point_at, double a, const PathSample& sa, double b,
              const PathSample& sb, int depth) {
    if (std::abs(sb.log_w - sa.log_w) > kMaxLogStep) {
      if (depth >= kMaxDepth) {
        throw RefinementError("beta trace continuation could not be resolved near " +
                                  std::to_string(0.5 * (a + b)),
                              0.5 * (a + b));
      }
      const double mid = 0.5 * (a + b);
      const PathSample sm = sample(point_at(mid));
      extend(point_at, a, sa, mid, sm, depth + 1);
      extend(point_at, mid, sm, b, sb, depth + 1);
      return;
    }
    path_.push_back(sb.w);
    logs_.push_back(sb.log_w);
  }

  void start() {
    path_.assign(1, Complex(1.0, 0.0));
    logs_.assign(1, Complex(0.0, 0.0));
  }

  std::vector<Complex>& path() { return path_; }
  std::vector<Complex>& logs() { return logs_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  const SpiralFunction& fn_;
  std::vector<Complex> path_;
  std::vector<Complex> logs_;
  std::size_t evaluations_ = 0;
};

struct RadiusTrace {
  std::vector<double> beta;
  double beta_after_period;
  std::size_t evaluations;
};

RadiusTrace trace_at_radius(const SpiralFunction& fn, const SpiralAngle& angle,
                            int t_grid, double radius) {
  const double complement = 1.0 - radius;
  PathBuilder builder(fn);
  builder.start();

  // Radial leg along t = 0: 1 - |z| = complement^s for s in [0, 1].
  auto radial = [&](double s) {
    return DiskPoint::polar(std::pow(complement, s), 0.0);
  };
  constexpr int kRadialNodes = 32;
  PathSample prev{Complex(1.0, 0.0), Complex(0.0, 0.0)};
  for (int j = 1; j <= kRadialNodes; ++j) {
    const double a = static_cast<double>(j - 1) / kRadialNodes;
    const double b = static_cast<double>(j) / kRadialNodes;
    const PathSample next = builder.sample(radial(b));
    builder.extend(radial, a, prev, b, next, 0);
    prev = next;
  }

  // Circumferential leg t in [0, 2 pi].
  auto circle = [&](double t) { return DiskPoint::polar(complement, t); };
  std::vector<std::size_t> grid_index{builder.path().size() - 1};
  const double h = kTwoPi / t_grid;
  for (int k = 1; k <= t_grid; ++k) {
    const double a = h * (k - 1);
    const double b = h * k;
    const PathSample next = builder.sample(circle(b));
    builder.extend(circle, a, prev, b, next, 0);
    grid_index.push_back(builder.path().size() - 1);
    prev = next;
  }

  const std::vector<double> u =
      continuous_arg_lambda(builder.path(), angle, M_PI / 2.0);

  RadiusTrace out;
  out.beta.reserve(static_cast<std::size_t>(t_grid));
  for (int k = 0; k <= t_grid; ++k) {
    const std::size_t idx = grid_index[static_cast<std::size_t>(k)];
    // Harmonic-branch cross-check: arg_lambda(f/z) = Im L - tan(lambda) Re L.
    const Complex log_w = builder.logs()[idx];
    const double direct = log_w.imag() - angle.tan_lambda() * log_w.real();
    if (std::abs(u[idx] - direct) > 1e-6 * (1.0 + std::abs(direct))) {
      throw RefinementError("beta trace branch mismatch at t=" + std::to_string(h * k),
                            h * k);
    }
    const double beta = u[idx] + h * k;
    if (k < t_grid) {
      out.beta.push_back(beta);
    } else {
      out.beta_after_period = beta;
    }
  }
  out.evaluations = builder.evaluations();
  return out;
}

double beta_direct(const SpiralFunction& fn, const SpiralAngle& angle,
                   double complement, double t) {
  const Complex log_w = fn.log_f_over_z(DiskPoint::polar(complement, t));
  return log_w.imag() - angle.tan_lambda() * log_w.real() + t;
}

// Least-squares polynomial fit value at x = 0 (modified Gram-Schmidt on a
// centred, scaled Vandermonde matrix).
double extrapolate_to_zero(const std::vector<double>& x, const std::vector<double>& y,
                           int degree) {
  const std::size_t n = x.size();
  const std::size_t m = static_cast<std::size_t>(degree) + 1;
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v - mean));
  if (scale == 0.0) scale = 1.0;

  std::vector<std::vector<double>> q(m, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    double p = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
      q[j][i] = p;
      p *= (x[i] - mean) / scale;
    }
  }
  std::vector<std::vector<double>> r(m, std::vector<double>(m, 0.0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += q[k][i] * q[j][i];
      r[k][j] = dot;
      for (std::size_t i = 0; i < n; ++i) q[j][i] -= dot * q[k][i];
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += q[j][i] * q[j][i];
    norm = std::sqrt(norm);
    r[j][j] = norm;
    for (std::size_t i = 0; i < n; ++i) q[j][i] /= norm;
  }
  std::vector<double> c(m);
  for (std::size_t j = 0; j < m; ++j) {
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += q[j][i] * y[i];
    c[j] = dot;
  }
  for (std::size_t j = m; j-- > 0;) {
    for (std::size_t k = j + 1; k < m; ++k) c[j] -= r[j][k] * c[k];
    c[j] /= r[j][j];
  }
  const double x0 = (0.0 - mean) / scale;
  double value = 0.0;
  for (std::size_t j = m; j-- > 0;) value = value * x0 + c[j];
  return value;
}

}  // namespace

double BetaTrace::periodicity_defect() const {
  if (beta_values.empty()) return 0.0;
  return beta_after_period - beta_values.front() - kTwoPi;
}

double BetaTrace::worst_decrease() const {
  double worst = 0.0;
  for (std::size_t k = 0; k < beta_values.size(); ++k) {
    const double next =
        k + 1 < beta_values.size() ? beta_values[k + 1] : beta_after_period;
    worst = std::min(worst, next - beta_values[k]);
  }
  return worst;
}

BetaTrace beta_trace(const SpiralFunction& fn, const SpiralAngle& angle,
                     int t_grid, const std::vector<double>& r_schedule) {
  if (t_grid < 16) throw DomainError("beta trace needs at least 16 angles");
  if (r_schedule.empty()) throw DomainError("beta trace needs at least one radius");
  for (std::size_t i = 0; i < r_schedule.size(); ++i) {
    const double r = r_schedule[i];
    if (!(r > 0.0 && r < 1.0) || (i > 0 && !(r > r_schedule[i - 1]))) {
      throw DomainError("beta trace radii must increase strictly inside (0, 1)");
    }
  }

  BetaTrace trace;
  trace.t_samples.resize(static_cast<std::size_t>(t_grid));
  for (int k = 0; k < t_grid; ++k) {
    trace.t_samples[static_cast<std::size_t>(k)] = kTwoPi * k / t_grid;
  }
  std::vector<double> previous;
  for (double r : r_schedule) {
    RadiusTrace rt = trace_at_radius(fn, angle, t_grid, r);
    double delta = 0.0;
    for (std::size_t k = 0; k < previous.size(); ++k) {
      delta = std::max(delta, std::abs(rt.beta[k] - previous[k]));
    }
    trace.refinement_record.push_back({r, delta, rt.evaluations});
    previous = rt.beta;
    trace.beta_values = std::move(rt.beta);
    trace.beta_after_period = rt.beta_after_period;
    trace.radius_used = r;
  }
  return trace;
}

double default_gap_threshold(const BetaTrace& trace) {
  const std::size_t n = trace.beta_values.size();
  if (n == 0) return 0.0;
  const double h = kTwoPi / static_cast<double>(n);
  std::vector<double> inc(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double next = k + 1 < n ? trace.beta_values[k + 1] : trace.beta_after_period;
    inc[k] = next - trace.beta_values[k];
  }
  std::nth_element(inc.begin(), inc.begin() + n / 2, inc.end());
  const double slope = inc[n / 2] / h;
  return 10.0 * h * std::max(1.0, slope);
}

JumpEstimate estimate_max_jump(const BetaTrace& trace, std::optional<double> gap_threshold) {
  const std::size_t n = trace.beta_values.size();
  if (n < 2) throw DomainError("jump estimation needs a sampled trace");
  if (trace.worst_decrease() < -1e-9) {
    std::ostringstream os;
    os << "beta trace decreases by " << -trace.worst_decrease()
       << "; not a boundary function of a spirallike map";
    throw InconsistencyError(os.str());
  }
  const double threshold = gap_threshold.value_or(default_gap_threshold(trace));
  const double h = kTwoPi / static_cast<double>(n);

  // beta at any integer sample index, continued periodically
  auto value = [&](long k) {
    const long nn = static_cast<long>(n);
    const long periods = k >= 0 ? k / nn : -((-k + nn - 1) / nn);
    const long idx = k - periods * nn;
    return trace.beta_values[static_cast<std::size_t>(idx)] + kTwoPi * static_cast<double>(periods);
  };
  auto increment = [&](long k) { return value(k + 1) - value(k); };

  long start = -1;
  for (long k = 0; k < static_cast<long>(n); ++k) {
    if (increment(k) <= threshold) {
      start = k;
      break;
    }
  }
  JumpEstimate best;
  if (start < 0) return best;

  long k = start + 1;
  const long stop = start + static_cast<long>(n);
  while (k < stop) {
    if (increment(k) <= threshold) {
      ++k;
      continue;
    }
    const long first = k;
    while (k < stop && increment(k) > threshold) ++k;
    const double jump = value(k) - value(first);
    if (jump > best.jump) {
      double t_start = h * static_cast<double>(first);
      double t_end = h * static_cast<double>(k);
      double center = 0.5 * (value(first) + value(k));
      // report the location in [0, 2 pi), shifting beta consistently
      const double mid = 0.5 * (t_start + t_end);
      const double shift = kTwoPi * std::floor(mid / kTwoPi);
      best = {jump, mid - shift, center - shift, t_start - shift, t_end - shift};
    }
  }
  return best;
}

JumpRefinement refine_jump(const SpiralFunction& fn, const SpiralAngle& angle,
                           double t_start, double t_end, double complement) {
  if (!(t_end > t_start)) throw DomainError("refine_jump needs t_start < t_end");
  if (!(complement > 0.0 && complement < 1e-6)) {
    throw DomainError("refine_jump needs 0 < 1 - r < 1e-6");
  }
  // bisection on the midpoint crossing (beta is increasing at every radius)
  const double target = 0.5 * (beta_direct(fn, angle, complement, t_start) +
                               beta_direct(fn, angle, complement, t_end));
  double lo = t_start;
  double hi = t_end;
  for (int i = 0; i < 200 && hi - lo > 0.1 * complement; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (beta_direct(fn, angle, complement, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double t0 = 0.5 * (lo + hi);

  JumpRefinement out{};
  out.location = t0 - kTwoPi * std::floor(t0 / kTwoPi);
  std::vector<double> x;
  for (int j = 0;; ++j) {
    const double h = std::pow(10.0, -2.0 - 0.5 * j);
    if (h < 1e4 * complement) break;
    const double jump = beta_direct(fn, angle, complement, t0 + h) -
                        beta_direct(fn, angle, complement, t0 - h);
    out.h_values.push_back(h);
    out.jumps.push_back(jump);
    x.push_back(1.0 / std::log(1.0 / h));
  }
  if (out.jumps.size() < 6) {
    throw AccuracyError("refine_jump: too few scales for extrapolation",
                        static_cast<double>(out.jumps.size()));
  }
  out.raw_jump = out.jumps.back();
  const double cubic = extrapolate_to_zero(x, out.jumps, 3);
  const double quadratic = extrapolate_to_zero(x, out.jumps, 2);
  out.jump = cubic;
  out.error_estimate = std::abs(cubic - quadratic);
  return out;
}

BoundaryJump boundary_jump(const SpiralFunction& fn, const SpiralAngle& angle, int t_grid) {
  BoundaryJump out;
  const BetaTrace trace = beta_trace(fn, angle, t_grid, {1.0 - 1e-6});
  out.detected = estimate_max_jump(trace);
  if (out.detected.jump > 0.0) {
    out.refined = refine_jump(fn, angle, out.detected.t_start, out.detected.t_end);
  }
  return out;
}

}  // namespace spirallike
