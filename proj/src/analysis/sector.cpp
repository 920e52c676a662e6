#include <algorithm>
#include <cmath>

#include "spirallike/analysis.hpp"
#include "spirallike/errors.hpp"

namespace spirallike {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr int kGridAngles = 256;
constexpr int kGridDecades = 40;
constexpr int kStarts = 8;

// distance between two logarithms modulo 2 pi i; also returns the
// multiple of 2 pi i that aligns `target` with the branch of `psi`
double log_distance(Complex psi, Complex target, double& shift) {
  const double d_im = psi.imag() - target.imag();
  shift = kTwoPi * std::round(d_im / kTwoPi);
  return std::abs(psi.real() - target.real()) + std::abs(d_im - shift);
}

}  // namespace

PreimageSolver::PreimageSolver(SpiralFunction fn) : fn_(std::move(fn)) {
  std::vector<double> complements{0.99, 0.9, 0.7};
  for (int i = 1; i <= kGridDecades; ++i) complements.push_back(std::pow(10.0, -0.25 * i));
  for (double c : complements) {
    for (int k = 0; k < kGridAngles; ++k) {
      const DiskPoint p = DiskPoint::polar(c, kTwoPi * k / kGridAngles);
      const Complex zeta(std::log1p(-c), p.angle());
      const Complex psi = fn_.log_f_over_z(p) + zeta;
      if (std::isfinite(psi.real()) && std::isfinite(psi.imag())) nodes_.push_back({zeta, psi});
    }
  }
}

std::optional<Complex> PreimageSolver::continue_from(const Node& node, Complex goal,
                                                     Complex w) const {
  // psi(zeta) - target
  auto residual_at = [&](Complex zeta, Complex target) {
    return fn_.log_f_over_z(DiskPoint::from_log(zeta)) + zeta - target;
  };
  // damped Newton; returns the converged zeta or nullopt
  auto newton = [&](Complex zeta, Complex target) -> std::optional<Complex> {
    Complex r = residual_at(zeta, target);
    const double tol = 1e-13 * (1.0 + std::abs(target));
    for (int it = 0; it < 40; ++it) {
      if (std::abs(r) <= tol) return zeta;
      const Complex slope = fn_.log_derivative(DiskPoint::from_log(zeta));
      if (slope == Complex(0.0, 0.0)) return std::nullopt;
      Complex step = -r / slope;
      bool improved = false;
      for (int damp = 0; damp < 30; ++damp, step *= 0.5) {
        const Complex trial = zeta + step;
        if (!(trial.real() < 0.0)) continue;
        const Complex rt = residual_at(trial, target);
        if (std::abs(rt) < std::abs(r)) {
          zeta = trial;
          r = rt;
          improved = true;
          break;
        }
      }
      if (!improved) break;
    }
    return std::abs(r) <= 1e3 * tol ? std::optional<Complex>(zeta) : std::nullopt;
  };

  // continuation from the node's image to the goal along a straight line
  Complex zeta = node.zeta;
  double done = 0.0;
  double step = 1.0;
  while (done < 1.0 && step > 1e-6) {
    const double next = std::min(1.0, done + step);
    if (const auto z = newton(zeta, node.psi + next * (goal - node.psi))) {
      zeta = *z;
      done = next;
      step *= 2.0;
    } else {
      step *= 0.5;
    }
  }
  if (done < 1.0) return std::nullopt;
  const DiskPoint p = DiskPoint::from_log(zeta);
  // points numerically on the circle are not certified preimages
  if (!(p.complement() > 1e-12)) return std::nullopt;
  const Complex image = fn_.evaluate(p);
  if (std::abs(image - w) <= 1e-10 * std::abs(w)) return p.z();
  return std::nullopt;
}

std::optional<Complex> PreimageSolver::solve(Complex w) const {
  if (w == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
  const Complex target = std::log(w);

  std::vector<std::pair<double, std::size_t>> ranked;
  ranked.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    double shift = 0.0;
    ranked.emplace_back(log_distance(nodes_[i].psi, target, shift), i);
  }
  const std::size_t starts = std::min<std::size_t>(kStarts, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<long>(starts), ranked.end());

  for (std::size_t s = 0; s < starts; ++s) {
    const Node& node = nodes_[ranked[s].second];
    double shift = 0.0;
    log_distance(node.psi, target, shift);
    if (const auto z = continue_from(node, target + Complex(0.0, shift), w)) return z;
  }
  return std::nullopt;
}

std::optional<Complex> PreimageSolver::solve_within(Complex w, const SpiralSector& sector) const {
  if (w == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
  if (!sector_contains(sector, w)) return std::nullopt;
  const double tan_l = sector.angle().tan_lambda();
  const double half = 0.5 * sector.opening();
  // lambda-argument of a lifted logarithm relative to the center, in the
  // copy of the strip that contains it
  auto offset_of = [&](Complex log_w) {
    return std::remainder(log_w.imag() - tan_l * log_w.real() - sector.center_angle(), kTwoPi);
  };
  const Complex raw = std::log(w);
  const double goal_offset = offset_of(raw);
  const double goal_arg = sector.center_angle() + goal_offset;
  const Complex goal(raw.real(), goal_arg + tan_l * raw.real());

  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const double off = offset_of(nodes_[i].psi);
    if (!(std::abs(off) < half)) continue;
    ranked.emplace_back(std::abs(nodes_[i].psi.real() - goal.real()) + std::abs(off - goal_offset), i);
  }
  const std::size_t starts = std::min<std::size_t>(kStarts, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<long>(starts), ranked.end());
  for (std::size_t s = 0; s < starts; ++s) {
    const Node& node = nodes_[ranked[s].second];
    // lift the node into the same strip copy as the goal
    const double node_arg = node.psi.imag() - tan_l * node.psi.real();
    const double lifted = sector.center_angle() + offset_of(node.psi);
    const Complex goal_for_node = goal - Complex(0.0, lifted - node_arg);
    if (const auto z = continue_from(node, goal_for_node, w)) return z;
  }
  return std::nullopt;
}

std::optional<Complex> find_preimage(const SpiralFunction& fn, Complex w) {
  return PreimageSolver(fn).solve(w);
}

std::optional<SectorCertificate> detect_maximal_sector(const SpiralFunction& fn,
                                                       const SpiralAngle& angle) {
  const BoundaryMeasure* m = fn.measure();
  if (m == nullptr) throw DomainError("sector detection needs a measure-built function");
  if (m->atoms().empty()) return std::nullopt;
  const Atom* largest = &m->atoms().front();
  for (const Atom& a : m->atoms()) {
    if (a.jump > largest->jump) largest = &a;
  }
  const double center = beta_at(*m, largest->position) - harmonic_offset(*m);
  SectorCertificate cert{SpiralSector(center, std::min(largest->jump, kTwoPi), angle),
                         largest->position, 0, 0};

  const PreimageSolver solver(fn);
  const double half = 0.5 * cert.sector.opening();
  for (double offset : {-0.9, -0.45, 0.0, 0.45, 0.9}) {
    for (double rho : {0.05, 0.5, 5.0, 50.0}) {
      const double theta = center + offset * half;
      const Complex w = std::polar(rho, theta + angle.tan_lambda() * std::log(rho));
      ++cert.sampled;
      if (solver.solve_within(w, cert.sector)) ++cert.certified;
    }
  }
  return cert;
}

}  // namespace spirallike
