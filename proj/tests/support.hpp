#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "spirallike/disk_point.hpp"

namespace test_support {

using spirallike::Complex;

/// Deterministic points with |z| <= r_max, area-uniform in the disk.
inline std::vector<Complex> random_disk_points(std::size_t n, double r_max,
                                               unsigned seed = 12345) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Complex> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = r_max * std::sqrt(unit(rng));
    pts.push_back(std::polar(r, 2.0 * M_PI * unit(rng)));
  }
  return pts;
}

inline double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace test_support

#include "spirallike/boundary_measure.hpp"

namespace test_support {

/// Random valid measure: a few atoms plus a random piecewise-linear density,
/// scaled to total mass 2 pi. `atom_share` is the fraction carried by atoms.
inline spirallike::BoundaryMeasure random_measure(unsigned seed, double atom_share = 0.5) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double two_pi = 2.0 * M_PI;
  const int n_atoms = atom_share > 0.0 ? 1 + static_cast<int>(unit(rng) * 3) : 0;
  const int n_knots = 2 + static_cast<int>(unit(rng) * 5);
  std::vector<spirallike::Atom> atoms;
  double atom_weight = 0.0;
  for (int i = 0; i < n_atoms; ++i) {
    atoms.push_back({two_pi * (i + 0.1 + 0.8 * unit(rng)) / n_atoms, 0.2 + unit(rng)});
    atom_weight += atoms.back().jump;
  }
  for (auto& a : atoms) a.jump *= atom_share * two_pi / atom_weight;
  std::vector<spirallike::DensityKnot> knots;
  for (int i = 0; i < n_knots; ++i) {
    knots.push_back({two_pi * (i + 0.1 + 0.8 * unit(rng)) / n_knots, 0.05 + unit(rng)});
  }
  const spirallike::BoundaryMeasure raw({}, knots);
  const double scale = (1.0 - atom_share) * two_pi / raw.density_mass();
  for (auto& k : knots) k.value *= scale;
  return spirallike::BoundaryMeasure(atoms, knots);
}

}  // namespace test_support
