#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spirallike/disk_point.hpp"

namespace spirallike::cli {

enum class Command { Eval, Verify, Beta, Growth, Qtheta, Coeffs };
enum class Format { Csv, Json };

/// Exit codes of `run`.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotCertified = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitDomain = 3;
inline constexpr int kExitAccuracy = 4;

struct RunConfig {
  Command command = Command::Eval;
  std::optional<std::string> measure_path;
  std::optional<std::string> gallery;  ///< koebe | identity | g0 | hansen
  double lambda = 0.0;
  std::optional<double> alpha;
  std::optional<double> beta_exp;
  std::optional<double> c;
  std::optional<double> big_a;
  Complex z{0.0, 0.0};
  int k_min = 1;
  int k_max = 8;
  int n_radii = 64;
  int n_angles = 1024;
  double r_max = 0.999;
  int t_grid = 1024;
  int q_grid = 100000;
  int q_samples = 64;
  int n_coeffs = 20;
  double coeff_radius = 0.5;
  std::optional<std::string> output_path;
  Format format = Format::Csv;
  unsigned threads = 1;
};

/// Parses `a+bi`, `a-bi`, `a`, `bi`, `i` and `-i` (also with `j`) without
/// locale dependence. Throws ValidationError on malformed input.
Complex parse_complex(std::string_view text);

/// Parses `kmin:kmax`. Throws ValidationError on malformed input.
std::pair<int, int> parse_k_range(std::string_view text);

/// Checks the RunConfig invariants; throws ValidationError.
void validate(const RunConfig& config);

/// Formats a double with 15 significant digits in the classic locale.
std::string format_number(double v);

/// Runs the command line (without the program name) and returns the exit
/// code. Results go to `out` (or --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spirallike::cli
