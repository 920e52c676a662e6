#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace spirallike {

/// Point mass of the boundary function: beta jumps by `jump` at `position`.
struct Atom {
  double position;
  double jump;
};

/// Knot of the 2 pi-periodic piecewise-linear density.
struct DensityKnot {
  double position;
  double value;
};

/// One violated invariant, with the offending entry when there is one.
struct Violation {
  std::string message;
};

/// The measure d beta of a non-decreasing boundary function with
/// beta(t + 2 pi) = beta(t) + 2 pi, stored as atoms plus a piecewise-linear
/// density. Construction never throws; validity is checked once and can be
/// queried through validate().
///
/// Zero knots means no density; a single knot means a constant density.
class BoundaryMeasure {
 public:
  static constexpr double kMassTolerance = 1e-9;

  BoundaryMeasure(std::vector<Atom> atoms, std::vector<DensityKnot> knots);

  /// Uniform density 1 (beta(t) = t, the identity map).
  static BoundaryMeasure uniform();
  /// One atom of mass 2 pi (the Koebe function when placed at 0).
  static BoundaryMeasure single_atom(double position = 0.0);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<DensityKnot>& knots() const noexcept { return knots_; }
  bool valid() const noexcept { return violations_.empty(); }

  double atom_mass() const noexcept;
  double density_mass() const noexcept;
  double total_mass() const noexcept { return atom_mass() + density_mass(); }

  /// Density value at t (periodic linear interpolation).
  double density_at(double t) const;
  /// Integral of the density over [0, t] for t in [0, 2 pi].
  double density_cumulative(double t) const;

  /// Throws ValidationError listing every violation.
  void require_valid() const;

 private:
  friend std::vector<Violation> validate(const BoundaryMeasure& m);

  std::vector<Atom> atoms_;
  std::vector<DensityKnot> knots_;
  std::vector<Violation> violations_;
};

/// Every violated invariant; empty when the measure is valid.
std::vector<Violation> validate(const BoundaryMeasure& m);

/// beta(t) with beta(0-) = 0, the midpoint value at atoms and
/// beta(t + 2 pi) = beta(t) + 2 pi.
double beta_at(const BoundaryMeasure& m, double t);

/// Largest atom, or 0 for an atomless measure.
double max_jump(const BoundaryMeasure& m);

/// Constant c with beta_at(t) - c equal to the boundary function normalized
/// by the harmonic branch (mean pi over a period). Traces recovered from a
/// built function are compared against beta_at(t) - harmonic_offset(m).
double harmonic_offset(const BoundaryMeasure& m);

/// Parses the measure-spec JSON ({"atoms": [{"t", "jump"}],
/// "density_knots": [{"t", "value"}]}) and validates it. Malformed input or
/// violated invariants raise ValidationError with one line per problem.
BoundaryMeasure parse_measure_json(const std::string& text);
BoundaryMeasure load_measure_json(const std::filesystem::path& path);
std::string to_json(const BoundaryMeasure& m);

}  // namespace spirallike
