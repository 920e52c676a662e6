// Acceptance suite: one PASS/FAIL line per criterion.
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "spirallike/analysis.hpp"
#include "spirallike/cli.hpp"
#include "spirallike/correspondence.hpp"
#include "spirallike/gallery.hpp"
#include "support.hpp"

using namespace spirallike;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BoundaryMeasure mixed_measure() {
  return BoundaryMeasure({{0.0, M_PI}, {M_PI / 2, M_PI / 2}}, {{0.0, 0.25}});
}

BoundaryMeasure random_atomic_measure(unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = 3 + static_cast<int>(unit(rng) * 4);
  std::vector<double> pos;
  std::vector<double> w;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    pos.push_back(kTwoPi * (i + 0.2 + 0.6 * unit(rng)) / n);
    w.push_back(0.1 + unit(rng));
    total += w.back();
  }
  std::vector<Atom> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back({pos[static_cast<std::size_t>(i)], kTwoPi * w[static_cast<std::size_t>(i)] / total});
  return BoundaryMeasure(atoms, {});
}

bool near_atom(double t, const BoundaryMeasure& m, double width) {
  for (const Atom& a : m.atoms()) {
    if (std::abs(std::remainder(t - a.position, kTwoPi)) < width) return true;
  }
  return false;
}

void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto pts = test_support::random_disk_points(200, 0.999, 2024);
  double worst = 0.0;
  for (double l : {0.0, 0.5, -0.5, 1.2, -1.2}) {
    const SpiralFunction f = SpiralFunction::from_measure(BoundaryMeasure::uniform(), SpiralAngle(l));
    for (Complex z : pts) worst = std::max(worst, std::abs(f.evaluate(z) - z));
  }
  const double t = seconds_since(t0);
  o.detail << "max|f(z)-z|=" << worst << " time=" << t << "s ";
  o.require(worst <= 1e-10, "identity error");
  o.require(t < 1.0, "runtime");
}

void criterion2(Outcome& o) {
  const SpiralFunction k = SpiralFunction::from_measure(BoundaryMeasure::single_atom(0.0), SpiralAngle(0.0));
  const double ef = std::abs(k.evaluate(Complex(0.5, 0)) - 2.0);
  const double ep = std::abs(k.log_derivative(Complex(0.5, 0)) - 3.0);
  const auto a = taylor_coefficients(k, 20);
  double ec = 0.0;
  for (int n = 1; n <= 20; ++n) ec = std::max(ec, std::abs(a[static_cast<std::size_t>(n)] - double(n)));
  o.detail << "|f-2|=" << ef << " |zf'/f-3|=" << ep << " max|a_n-n|=" << ec << ' ';
  o.require(ef <= 1e-12 && ep <= 1e-12, "Koebe values");
  o.require(ec <= 1e-8, "coefficients");
}

void criterion3(Outcome& o) {
  for (double l : {0.0, M_PI / 4, -M_PI / 6}) {
    const auto t0 = std::chrono::steady_clock::now();
    const SpiralAngle angle(l);
    const SpiralFunction f = SpiralFunction::from_measure(BoundaryMeasure::single_atom(0.0), angle);
    const GrowthReport rep = growth_exponent(f, angle, {1.0 - 1e-8});
    const double e = rep.rows.back().exponent;
    const double target = 2.0 * std::cos(l) * std::cos(l);
    const double t = seconds_since(t0);
    o.detail << "lambda=" << l << " E=" << e << " target=" << target << " time=" << t << "s; ";
    o.require(std::abs(e - target) <= 0.05, "growth exponent");
    o.require(t < 5.0, "runtime");
  }
}

void criterion4(Outcome& o) {
  const BoundaryMeasure m = mixed_measure();
  const double offset = harmonic_offset(m);
  for (double l : {0.0, 0.7}) {
    const SpiralAngle angle(l);
    const SpiralFunction f = SpiralFunction::from_measure(m, angle);
    const BetaTrace tr = beta_trace(f, angle, 2048, {1.0 - 1e-6});
    double worst = 0.0;
    for (std::size_t k = 0; k < tr.t_samples.size(); ++k) {
      // continuity points: away from the atoms by at least one grid step
      if (near_atom(tr.t_samples[k], m, 1.5 * kTwoPi / 2048)) continue;
      worst = std::max(worst, std::abs(tr.beta_values[k] - (beta_at(m, tr.t_samples[k]) - offset)));
    }
    const double jump = estimate_max_jump(tr).jump;
    o.detail << "lambda=" << l << " max|trace-beta|=" << worst << " jump=" << jump << "; ";
    o.require(worst <= 0.02, "trace vs beta_at");
    o.require(std::abs(jump - M_PI) <= 0.02, "max jump");
  }
}

void criterion5(Outcome& o) {
  const SpiralFunction g = SpiralFunction::from_measure(mixed_measure(), SpiralAngle(0.0));
  double round = 0.0;
  double args = 0.0;
  double excess = -1e300;
  for (double l : {-1.2, -0.6, 0.4, 1.0}) {
    const SpiralAngle angle(l);
    const SpiralFunction f = spirallike_of(g, angle);
    const SpiralFunction back = starlike_of(f, angle);
    for (Complex z : test_support::random_disk_points(100, 0.999, 55)) {
      round = std::max(round, std::abs(back.log_f_over_z(z) - g.log_f_over_z(z)));
    }
    const double bound = M_PI * std::abs(std::sin(l) * std::cos(l));
    for (int ray = 0; ray < 8; ++ray) {
      std::vector<Complex> path{Complex(1.0, 0.0)};
      std::vector<double> arg_g{0.0};
      for (int i = 1; i <= 400; ++i) {
        const DiskPoint p = DiskPoint::polar(std::pow(10.0, -6.0 * i / 400.0), kTwoPi * ray / 8 + 0.05);
        const Complex lf = f.log_f_over_z(p);
        const Complex lg = g.log_f_over_z(p);
        path.push_back(std::exp(lf));
        arg_g.push_back(lg.imag());
        excess = std::max(excess, std::abs(lf.real() - angle.cos_squared() * lg.real()) - bound);
      }
      const std::vector<double> u = continuous_arg_lambda(path, angle);
      for (std::size_t k = 0; k < u.size(); ++k) args = std::max(args, std::abs(u[k] - arg_g[k]));
    }
  }
  o.detail << "roundtrip=" << round << " arg=" << args << " modulus excess=" << excess << ' ';
  o.require(round <= 1e-12, "roundtrip");
  o.require(args <= 1e-10, "arguments");
  o.require(excess <= 0.0, "modulus bound");
}

void criterion6(Outcome& o) {
  const SpiralFunction g = gallery::g0();
  const double margin = spirallikeness_margin(g, SpiralAngle(0.0), PolarGrid{64, 4096, 0.999});
  const BoundaryJump jump = boundary_jump(g, SpiralAngle(0.0));
  const auto a = taylor_coefficients(g, 50, 0.9);
  double h = 0.0;
  double ec = 0.0;
  for (int n = 1; n <= 50; ++n) {
    h += 1.0 / n;
    ec = std::max(ec, std::abs(a[static_cast<std::size_t>(n)] - h));
  }
  o.detail << "margin=" << margin << " bound=" << gallery::kG0MarginBound << " jump=" << jump.value()
           << " (trace " << jump.detected.jump << ") max|a_n-H_n|=" << ec << ' ';
  o.require(margin >= gallery::kG0MarginBound, "margin");
  o.require(std::abs(jump.value() - M_PI) <= 0.03, "jump");
  o.require(ec <= 1e-8, "harmonic numbers");
}

void criterion7(Outcome& o) {
  const double q0 = gallery::q_function(1e-6);
  const double q1 = gallery::q_function(M_PI / 2 - 1e-6);
  const gallery::C0Report rep = gallery::c0_constant(100000);
  const double c0 = gallery::configured_c0();
  const gallery::CMargins m = gallery::lemma_c_margins(2.0 * std::exp(2.0), PolarGrid{256, 256, 0.999});
  o.detail << "Q(1e-6)=" << q0 << " Q(pi/2-1e-6)=" << q1 << " supQ=" << rep.sup_q << " C0=" << c0
           << " monotone=" << rep.monotone << " margins=" << m.first << ',' << m.second << ' ';
  o.require(q0 >= 2.0 - 1e-3 && q0 <= 2.0, "Q near 0");
  o.require(q1 <= 1e-2, "Q near pi/2");
  o.require(rep.sup_q <= 2.0 + 1e-9, "sup Q");
  o.require(std::abs(c0 - 14.778) <= 1e-3, "C0");
  o.require(m.first > 0.0 && m.second > 0.0, "lemma margins");
}

void criterion8(Outcome& o) {
  double worst = 1e300;
  for (const DiskPoint& p : PolarGrid{400, 2048, 0.9999}.points()) {
    worst = std::min(worst, gallery::wilken_feng_g(p.z()).real());
  }
  o.detail << "min Re G=" << worst << " bound=" << gallery::kWilkenFengBound << ' ';
  o.require(worst >= gallery::kWilkenFengBound - 1e-9, "Wilken-Feng bound");
}

void criterion9(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"verify", "--gallery", "hansen", "--A", "3.141592653589793", "--beta-exp", "1",
                             "--c", "0.3", "--lambda", "0.7853981633974483"},
                            out, err);
  const SpiralAngle angle(M_PI / 4);
  const SpiralFunction f = gallery::counterexample_for(angle, M_PI, 1.0, 0.3);
  const auto rows = hansen_ratio(f, 0.5, decade_schedule(2, 8));
  const double slope = ratio_loglog_slope(rows);
  const double t = seconds_since(t0);
  o.detail << "verify exit=" << code << " ratios=";
  for (const RatioRow& r : rows) o.detail << r.ratio << ' ';
  o.detail << "k8/k2=" << rows.back().ratio / rows.front().ratio << " slope=" << slope << " time=" << t << "s ";
  o.require(code == 0, "verify");
  o.require(ratio_unbounded_trend(rows), "increasing ratio beyond 1.5x");
  o.require(std::abs(slope - 0.5) <= 0.15, "slope");
  o.require(t < 10.0, "runtime");
}

void criterion10(Outcome& o) {
  const std::vector<gallery::HansenParams> params{
      gallery::default_hansen_params(M_PI), {1.0, 1.0, 0.3}, {1.5, 0.5, 0.2}, {0.5, 2.0, 0.15}, {0.1, 0.1, 0.37}};
  for (const auto& p : params) {
    const SpiralFunction g = gallery::hansen_build(p);
    for (const PolarGrid& grid : {PolarGrid{64, 1024, 0.999}, PolarGrid{32, 4096, 0.99999}}) {
      const double margin = spirallikeness_margin(g, SpiralAngle(0.0), grid);
      const double bound = gallery::hansen_margin_bound(p);
      o.require(margin >= bound - 1e-6, "margin below bound");
      o.detail << margin - bound << ' ';
    }
  }
  o.detail << "(headroom per grid) ";
}

void criterion11(Outcome& o) {
  const PolarGrid grid{128, 2048, 0.999};
  const std::vector<std::pair<std::string, SpiralFunction>> fns{
      {"identity", gallery::identity()},
      {"koebe", gallery::koebe()},
      {"g0", gallery::g0()},
      {"random1", SpiralFunction::from_measure(random_atomic_measure(1), SpiralAngle(0.0))},
      {"random2", SpiralFunction::from_measure(random_atomic_measure(2), SpiralAngle(0.0))}};
  for (const auto& [name, g] : fns) {
    const double excess = goodman_check(g, grid);
    o.detail << name << '=' << excess << ' ';
    o.require(excess <= 1e-9, name);
  }
}

void criterion12(Outcome& o) {
  struct Case {
    std::string name;
    BoundaryMeasure measure;
    double lambda;
    double opening;
  };
  const std::vector<Case> cases{{"koebe", BoundaryMeasure::single_atom(0.0), 0.0, kTwoPi},
                                {"two-atom", BoundaryMeasure({{0.0, M_PI}, {M_PI, M_PI}}, {}), 0.0, M_PI},
                                {"spiral-koebe", BoundaryMeasure::single_atom(0.0), M_PI / 4, kTwoPi}};
  for (const Case& c : cases) {
    const SpiralAngle angle(c.lambda);
    const SpiralFunction f = SpiralFunction::from_measure(c.measure, angle);
    const auto s = detect_maximal_sector(f, angle);
    if (!s) {
      o.require(false, c.name + " no sector");
      continue;
    }
    // independent estimate of the opening from the boundary trace
    const JumpEstimate traced = estimate_max_jump(beta_trace(f, angle, 2048, {1.0 - 1e-6}));
    o.detail << c.name << ": center=" << s->sector.center_angle() << " opening=" << s->sector.opening()
             << " traced=" << traced.jump << " certified=" << s->certified << '/' << s->sampled << "; ";
    o.require(std::abs(s->sector.opening() - c.opening) <= 0.02, c.name + " opening");
    o.require(std::abs(traced.jump - c.opening) <= 0.02, c.name + " traced opening");
    o.require(s->all_certified(), c.name + " certification");
    if (c.name == "koebe") o.require(std::abs(s->sector.center_angle()) <= 1e-6, "koebe center");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"identity law", criterion1},
      {"Koebe exactness", criterion2},
      {"growth law", criterion3},
      {"beta recovery", criterion4},
      {"correspondence", criterion5},
      {"g0 certification", criterion6},
      {"Q and C0", criterion7},
      {"Wilken-Feng oracle", criterion8},
      {"Hansen counterexample", criterion9},
      {"Hansen validity margin", criterion10},
      {"Goodman bound", criterion11},
      {"sector detection", criterion12}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "[exception: " << e.what() << "]";
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << o.detail.str() << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
