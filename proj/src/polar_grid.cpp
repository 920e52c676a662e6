#include "spirallike/polar_grid.hpp"

#include <cmath>

#include "spirallike/errors.hpp"

namespace spirallike {

std::vector<DiskPoint> PolarGrid::points() const {
  if (n_radii < 1 || n_angles < 1 || !(r_max > 0.0 && r_max < 1.0)) {
    throw DomainError("polar grid needs positive counts and 0 < r_max < 1");
  }
  std::vector<DiskPoint> pts;
  pts.reserve(static_cast<std::size_t>(n_radii) * n_angles + 1);
  pts.push_back(DiskPoint::from_complex(0.0));
  for (int i = 1; i <= n_radii; ++i) {
    const double r = r_max * i / n_radii;
    for (int j = 0; j < n_angles; ++j) {
      pts.push_back(DiskPoint::polar(1.0 - r, 2.0 * M_PI * j / n_angles));
    }
  }
  return pts;
}

}  // namespace spirallike
