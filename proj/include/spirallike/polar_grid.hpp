#pragma once

#include <vector>

#include "spirallike/disk_point.hpp"

namespace spirallike {

/// Polar sampling of the closed disk |z| <= r_max: the origin plus radii
/// r_max * i / n_radii (i = 1..n_radii) times n_angles equally spaced angles.
struct PolarGrid {
  int n_radii = 64;
  int n_angles = 1024;
  double r_max = 0.999;

  /// Throws DomainError unless counts are positive and 0 < r_max < 1.
  std::vector<DiskPoint> points() const;
};

}  // namespace spirallike
