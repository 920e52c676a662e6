#include "spirallike/boundary_measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spirallike/errors.hpp"

namespace spirallike {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

std::vector<Violation> check(const std::vector<Atom>& atoms,
                             const std::vector<DensityKnot>& knots,
                             double total) {
  std::vector<Violation> out;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const Atom& a = atoms[k];
    const std::string where = "atom " + std::to_string(k) + " (t=" +
                              fmt(a.position) + ", jump=" + fmt(a.jump) + ")";
    if (!std::isfinite(a.position) || a.position < 0.0 || a.position >= kTwoPi) {
      out.push_back({where + ": position outside [0, 2pi)"});
    }
    if (!(a.jump > 0.0) || !std::isfinite(a.jump)) {
      out.push_back({where + ": jump must be strictly positive"});
    }
    if (k > 0 && !(atoms[k - 1].position < a.position)) {
      out.push_back({where + ": positions must be strictly increasing"});
    }
  }
  for (std::size_t j = 0; j < knots.size(); ++j) {
    const DensityKnot& d = knots[j];
    const std::string where = "density knot " + std::to_string(j) + " (t=" +
                              fmt(d.position) + ", value=" + fmt(d.value) + ")";
    if (!std::isfinite(d.position) || d.position < 0.0 || d.position >= kTwoPi) {
      out.push_back({where + ": position outside [0, 2pi)"});
    }
    if (!(d.value >= 0.0) || !std::isfinite(d.value)) {
      out.push_back({where + ": density must be nonnegative"});
    }
    if (j > 0 && !(knots[j - 1].position < d.position)) {
      out.push_back({where + ": positions must be strictly increasing"});
    }
  }
  if (!(std::abs(total - kTwoPi) <= BoundaryMeasure::kMassTolerance)) {
    out.push_back({"total mass " + fmt(total) + " != 2pi (" + fmt(kTwoPi) +
                   ") beyond tolerance 1e-9"});
  }
  return out;
}

// Breakpoints of the density inside (lo, hi), with both ends.
std::vector<double> breakpoints(const std::vector<DensityKnot>& knots,
                                double lo, double hi) {
  std::vector<double> pts{lo};
  for (const auto& k : knots) {
    if (k.position > lo && k.position < hi) pts.push_back(k.position);
  }
  pts.push_back(hi);
  return pts;
}

}  // namespace

BoundaryMeasure::BoundaryMeasure(std::vector<Atom> atoms,
                                 std::vector<DensityKnot> knots)
    : atoms_(std::move(atoms)), knots_(std::move(knots)) {
  violations_ = check(atoms_, knots_, total_mass());
}

BoundaryMeasure BoundaryMeasure::uniform() {
  return BoundaryMeasure({}, {{0.0, 1.0}});
}

BoundaryMeasure BoundaryMeasure::single_atom(double position) {
  return BoundaryMeasure({{position, kTwoPi}}, {});
}

double BoundaryMeasure::atom_mass() const noexcept {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.jump;
  return s;
}

double BoundaryMeasure::density_mass() const noexcept {
  const std::size_t n = knots_.size();
  if (n == 0) return 0.0;
  if (n == 1) return kTwoPi * knots_[0].value;
  double s = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& a = knots_[j];
    const auto& b = knots_[(j + 1) % n];
    const double len = j + 1 < n ? b.position - a.position
                                 : b.position + kTwoPi - a.position;
    s += 0.5 * len * (a.value + b.value);
  }
  return s;
}

double BoundaryMeasure::density_at(double t) const {
  const std::size_t n = knots_.size();
  if (n == 0) return 0.0;
  if (n == 1) return knots_[0].value;
  double tau = std::fmod(t, kTwoPi);
  if (tau < 0.0) tau += kTwoPi;
  // first knot strictly greater than tau
  auto it = std::upper_bound(
      knots_.begin(), knots_.end(), tau,
      [](double x, const DensityKnot& k) { return x < k.position; });
  const DensityKnot* left;
  const DensityKnot* right;
  double left_pos;
  double right_pos;
  if (it == knots_.begin() || it == knots_.end()) {
    left = &knots_.back();
    right = &knots_.front();
    left_pos = left->position;
    right_pos = right->position + kTwoPi;
    if (tau < left_pos) tau += kTwoPi;
  } else {
    right = &*it;
    left = &*(it - 1);
    left_pos = left->position;
    right_pos = right->position;
  }
  const double w = (tau - left_pos) / (right_pos - left_pos);
  return left->value + w * (right->value - left->value);
}

double BoundaryMeasure::density_cumulative(double t) const {
  if (knots_.empty() || t <= 0.0) return 0.0;
  const auto pts = breakpoints(knots_, 0.0, t);
  double s = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    s += 0.5 * (pts[i] - pts[i - 1]) *
         (density_at(pts[i - 1]) + density_at(pts[i]));
  }
  return s;
}

void BoundaryMeasure::require_valid() const {
  if (violations_.empty()) return;
  std::string msg = "invalid boundary measure:";
  for (const auto& v : violations_) msg += "\n  - " + v.message;
  throw ValidationError(msg);
}

std::vector<Violation> validate(const BoundaryMeasure& m) {
  return m.violations_;
}

double beta_at(const BoundaryMeasure& m, double t) {
  m.require_valid();
  const double periods = std::floor(t / kTwoPi);
  double tau = t - periods * kTwoPi;
  if (tau >= kTwoPi) tau = 0.0;
  double value = m.density_cumulative(tau);
  for (const auto& a : m.atoms()) {
    if (a.position < tau) {
      value += a.jump;
    } else if (a.position == tau) {
      value += 0.5 * a.jump;
    }
  }
  return value + periods * kTwoPi;
}

double max_jump(const BoundaryMeasure& m) {
  m.require_valid();
  double best = 0.0;
  for (const auto& a : m.atoms()) best = std::max(best, a.jump);
  return best;
}

double harmonic_offset(const BoundaryMeasure& m) {
  m.require_valid();
  // integral over [0, 2pi) of beta_at: atoms contribute jump * (2pi - t);
  // the cumulative density contributes int d(s) (2pi - s) ds (Simpson is
  // exact on each linear piece).
  double integral = 0.0;
  for (const auto& a : m.atoms()) integral += a.jump * (kTwoPi - a.position);
  const auto pts = breakpoints(m.knots(), 0.0, kTwoPi);
  auto weighted = [&](double s) { return m.density_at(s) * (kTwoPi - s); };
  for (std::size_t i = 1; i < pts.size() && !m.knots().empty(); ++i) {
    const double a = pts[i - 1];
    const double b = pts[i];
    integral += (b - a) / 6.0 *
                (weighted(a) + 4.0 * weighted(0.5 * (a + b)) + weighted(b));
  }
  return integral / kTwoPi - M_PI;
}

}  // namespace spirallike
