#pragma once

#include <optional>
#include <vector>

#include "spirallike/polar_grid.hpp"
#include "spirallike/representation.hpp"
#include "spirallike/spiral_geometry.hpp"

namespace spirallike {

/// Worker threads used by grid scans (default 1). Results do not depend on
/// the thread count.
void set_worker_threads(unsigned n);
unsigned worker_threads();

// ---------------------------------------------------------------------------
// Spirallikeness margin

/// Minimum of Re(e^{-i lambda} z f'(z)/f(z)) over `grid`; a positive value
/// certifies the spirallike condition on the sampled points.
double spirallikeness_margin(const SpiralFunction& fn, const SpiralAngle& angle,
                             const PolarGrid& grid);

// ---------------------------------------------------------------------------
// Boundary function traces

/// Convergence record of one radius of a trace.
struct TraceRefinement {
  double radius;
  /// max |beta_r - beta_{previous r}| over the grid (0 for the first radius).
  double max_delta;
  /// samples evaluated, including adaptive refinement points
  std::size_t evaluations;
};

/// Sampled beta_lambda(t, f) = U_lambda(t) + t on [0, 2 pi).
struct BetaTrace {
  std::vector<double> t_samples;
  std::vector<double> beta_values;
  double radius_used = 0.0;
  /// beta at t = 2 pi reached by continuing once around the circle.
  double beta_after_period = 0.0;
  std::vector<TraceRefinement> refinement_record;

  /// beta_after_period - beta_values[0] - 2 pi.
  double periodicity_defect() const;
  /// Most negative increment between consecutive samples (0 if monotone).
  double worst_decrease() const;
};

/// beta-trace of fn measured with the lambda-argument of `angle`.
///
/// At every radius of `r_schedule` the continuous branch of
/// arg_lambda(f(z)/z) is continued radially from 0 along t = 0 and then
/// around |z| = r, with adaptive bisection keeping phase increments below
/// pi/4. The returned values are those of the last radius; earlier radii
/// only feed the refinement record. RefinementError reports the offending
/// angle when continuation cannot be resolved.
BetaTrace beta_trace(const SpiralFunction& fn, const SpiralAngle& angle,
                     int t_grid, const std::vector<double>& r_schedule);

/// Largest jump found in a trace.
struct JumpEstimate {
  double jump = 0.0;      ///< size of the largest jump, 0 if none
  double location = 0.0;  ///< t0 in [0, 2 pi)
  double center = 0.0;    ///< (beta(t0-) + beta(t0+)) / 2
  double t_start = 0.0;   ///< last sample before the jump (may be < 0)
  double t_end = 0.0;     ///< first sample after it (t_end > t_start)
};

/// Default jump threshold: 10 grid spacings times the median slope of the
/// trace, and never below 10 grid spacings.
double default_gap_threshold(const BetaTrace& trace);

/// Groups runs of consecutive increments above `gap_threshold` into jumps
/// (an atom sitting on a sample splits across two increments) and returns
/// the largest. Throws InconsistencyError if the trace decreases by more
/// than 1e-9.
JumpEstimate estimate_max_jump(const BetaTrace& trace,
                               std::optional<double> gap_threshold = std::nullopt);

/// Extrapolated jump of beta at t0.
struct JumpRefinement {
  double location;        ///< t0 found by bisection
  double jump;            ///< extrapolated to h -> 0
  double raw_jump;        ///< beta(t0 + h) - beta(t0 - h) at the smallest h
  double error_estimate;  ///< |cubic - quadratic extrapolation|
  std::vector<double> h_values;
  std::vector<double> jumps;
};

/// Locates the jump inside [t_start, t_end] by bisecting on the midpoint
/// value of beta at 1 - |z| = `complement`, then measures
/// beta(t0 + h) - beta(t0 - h) for h from 1e-2 down to 1e4 * complement and
/// extrapolates in 1/log(1/h) with a least-squares cubic. Continuous parts
/// with logarithmic singularities at t0 (as for g0 and the Hansen family)
/// bias raw differences by O(1/log(1/h)); the extrapolation removes that
/// bias.
JumpRefinement refine_jump(const SpiralFunction& fn, const SpiralAngle& angle,
                           double t_start, double t_end,
                           double complement = 1e-14);

/// Trace at r = 1 - 1e-6 followed by jump detection and refinement.
struct BoundaryJump {
  JumpEstimate detected;
  std::optional<JumpRefinement> refined;
  /// refined jump when available, the detected one otherwise
  double value() const { return refined ? refined->jump : detected.jump; }
};
BoundaryJump boundary_jump(const SpiralFunction& fn, const SpiralAngle& angle,
                           int t_grid = 2048);

// ---------------------------------------------------------------------------
// Maximal spiral sectors

struct SectorCertificate {
  SpiralSector sector;
  double atom_position;
  std::size_t sampled;
  std::size_t certified;
  bool all_certified() const { return sampled == certified; }
};

/// S_lambda(beta(t0), jump) for the largest atom at t0 of the measure the
/// function was built from, with beta normalized like the traces
/// (beta_at - harmonic_offset). Sample points of the sector are certified
/// to lie in f(D) by solving f(z) = w with Newton's method started from a
/// fine image grid. Returns nullopt for an atomless measure; throws
/// DomainError when fn has no measure.
std::optional<SectorCertificate> detect_maximal_sector(const SpiralFunction& fn,
                                                       const SpiralAngle& angle);

/// Solves f(z) = w inside the disk with Newton's method on
/// log f(e^zeta) = log w, started from the closest point of a cached image
/// grid (radii clustered towards the circle down to 1 - |z| = 1e-10).
class PreimageSolver {
 public:
  explicit PreimageSolver(SpiralFunction fn);
  /// The preimage when Newton converges inside the disk.
  std::optional<Complex> solve(Complex w) const;
  /// Preimage of a point of `sector`, continued only from grid nodes whose
  /// images lie in the sector. The sector is a convex strip in
  /// (log|w|, arg_lambda w) coordinates, so when it is contained in f(D) the
  /// continuation path never leaves the image.
  std::optional<Complex> solve_within(Complex w, const SpiralSector& sector) const;

 private:
  struct Node {
    Complex zeta;
    Complex psi;  // log(f(z)/z) + zeta
  };
  std::optional<Complex> continue_from(const Node& node, Complex goal, Complex w) const;
  SpiralFunction fn_;
  std::vector<Node> nodes_;
};

std::optional<Complex> find_preimage(const SpiralFunction& fn, Complex w);

// ---------------------------------------------------------------------------
// Growth

/// log M(r, f): coarse sampling on `coarse` angles followed by
/// golden-section refinement around the three largest local maxima.
double log_max_modulus(const SpiralFunction& fn, double r, int coarse = 1024);
/// M(r, f); throws RangeError when it overflows a double.
double max_modulus(const SpiralFunction& fn, double r, int coarse = 1024);

struct GrowthRow {
  double r;
  double max_modulus;
  double log_max_modulus;
  double exponent;  ///< E(r) = log M / log(1/(1-r))
};

struct GrowthReport {
  std::vector<GrowthRow> rows;
  double predicted_q0;
  double a_estimate;
  /// E at the last radius minus E at the one before it.
  double last_delta() const;
};

/// Radii r_k = 1 - 10^{-k}, k = k_min..k_max.
std::vector<double> decade_schedule(int k_min, int k_max);

/// E(r) along the schedule with q0 = A cos^2(lambda)/pi. A is `known_a`
/// when given, else the measure's largest atom or, for closed forms, the
/// result of boundary_jump. The schedule must increase strictly and reach
/// r = 1 - 10^-3 (k >= 3 on the decade scale); DomainError otherwise.
GrowthReport growth_exponent(const SpiralFunction& fn, const SpiralAngle& angle,
                             const std::vector<double>& r_schedule, int coarse = 1024,
                             std::optional<double> known_a = std::nullopt);

struct RatioRow {
  double r;
  double ratio;  ///< M(r) (1 - r)^{q0}
};

std::vector<RatioRow> hansen_ratio(const SpiralFunction& fn, double q0,
                                   const std::vector<double>& r_schedule,
                                   int coarse = 1024);

/// Least-squares slope of log(ratio) against log log(1/(1-r)).
double ratio_loglog_slope(const std::vector<RatioRow>& rows);

/// True when the ratio increases strictly and ends above 1.5x its start.
bool ratio_unbounded_trend(const std::vector<RatioRow>& rows);

// ---------------------------------------------------------------------------
// Goodman bound

/// Max over the grid of |arg(g(z)/z)| - 2 arcsin|z| using the continuous
/// branch. Throws DomainError unless g is starlike.
double goodman_check(const SpiralFunction& g, const PolarGrid& grid);

}  // namespace spirallike
