#include "spirallike/polylog.hpp"

#include <array>
#include <cmath>

#include "spirallike/errors.hpp"

namespace spirallike::polylog {

namespace {

constexpr double kZeta2 = 1.6449340668482264365;
constexpr double kZeta3 = 1.2020569031595942854;
constexpr int kTerms = 48;

// Coefficients of mu^{s-1+2m} in the log-series of Li_s(e^mu):
//   zeta(1-2m) / (s-1+2m)!  =  (-1)^m 2 zeta(2m) (2m)! / ((2 pi)^{2m} 2m (s-1+2m)!)
struct LogSeries {
  std::array<double, kTerms + 1> li2{};
  std::array<double, kTerms + 1> li3{};

  LogSeries() {
    double two_pi_pow = 1.0;
    for (int m = 1; m <= kTerms; ++m) {
      two_pi_pow *= 4.0 * M_PI * M_PI;
      const double pi2 = M_PI * M_PI;
      double zeta = 0.0;
      switch (m) {
        case 1: zeta = kZeta2; break;
        case 2: zeta = pi2 * pi2 / 90.0; break;
        case 3: zeta = pi2 * pi2 * pi2 / 945.0; break;
        case 4: zeta = pi2 * pi2 * pi2 * pi2 / 9450.0; break;
        default:
          // tail beyond k = 60 is below 1e-17 for 2m >= 10
          for (int k = 60; k >= 1; --k) zeta += std::pow(k, -2.0 * m);
      }
      const double base = (m % 2 == 0 ? 2.0 : -2.0) * zeta / (two_pi_pow * 2 * m);
      li2[m] = base / (2 * m + 1);
      li3[m] = base / ((2.0 * m + 1) * (2 * m + 2));
    }
  }
};

const LogSeries& log_series() {
  static const LogSeries series;
  return series;
}

template <int S>
Complex direct(Complex u) {
  Complex sum = 0.0;
  Complex power = u;
  for (int k = 1; k < 200; ++k) {
    const Complex term = power / std::pow(static_cast<double>(k), S);
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    power *= u;
  }
  return sum;
}

template <int S>
Complex via_log(Complex mu) {
  const auto& coeff = S == 2 ? log_series().li2 : log_series().li3;
  if (mu == Complex(0.0, 0.0)) return S == 2 ? kZeta2 : kZeta3;
  const Complex log_neg = std::log(-mu);
  const Complex mu2 = mu * mu;
  Complex sum;
  Complex power;
  if constexpr (S == 2) {
    sum = kZeta2 + mu * (1.0 - log_neg) - 0.25 * mu2;
    power = mu2 * mu;  // mu^{1+2m}, m = 1
  } else {
    sum = kZeta3 + kZeta2 * mu + 0.5 * mu2 * (1.5 - log_neg) - mu2 * mu / 12.0;
    power = mu2 * mu2;  // mu^{2+2m}, m = 1
  }
  for (int m = 1; m <= kTerms; ++m) {
    const Complex term = coeff[m] * power;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    power *= mu2;
  }
  return sum;
}

void check_domain(Complex u) {
  if (!(std::abs(u) <= 1.0 + 1e-15)) {
    throw DomainError("polylogarithm evaluated outside the closed unit disk");
  }
}

}  // namespace

Complex li2(Complex u, Complex log_u) {
  check_domain(u);
  return std::abs(u) < 0.5 ? direct<2>(u) : via_log<2>(log_u);
}

Complex li3(Complex u, Complex log_u) {
  check_domain(u);
  return std::abs(u) < 0.5 ? direct<3>(u) : via_log<3>(log_u);
}

Complex li2(Complex u) { return li2(u, u == 0.0 ? Complex() : std::log(u)); }
Complex li3(Complex u) { return li3(u, u == 0.0 ? Complex() : std::log(u)); }

}  // namespace spirallike::polylog
