#include "spirallike/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spirallike/analysis.hpp"
#include "spirallike/boundary_measure.hpp"
#include "spirallike/correspondence.hpp"
#include "spirallike/errors.hpp"
#include "spirallike/gallery.hpp"
#include "spirallike/representation.hpp"

namespace spirallike::cli {

namespace {

using nlohmann::json;

double parse_double(std::string_view text, std::string_view what) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ValidationError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

json number(double v) {
  // round-trip through the 15-digit text so JSON and CSV agree
  return std::isfinite(v) ? json(std::stod(format_number(v))) : json(format_number(v));
}

struct Built {
  SpiralFunction fn;
  std::optional<double> known_a;
  std::optional<gallery::HansenParams> hansen;
};

gallery::HansenParams hansen_params(const RunConfig& cfg) {
  gallery::HansenParams p = gallery::default_hansen_params(cfg.big_a.value_or(M_PI));
  if (cfg.alpha) p.alpha = *cfg.alpha;
  if (cfg.beta_exp) p.beta_exp = *cfg.beta_exp;
  if (cfg.c) p.c = *cfg.c;
  return p;
}

Built build_function(const RunConfig& cfg) {
  const SpiralAngle angle(cfg.lambda);
  if (cfg.measure_path) {
    const BoundaryMeasure m = load_measure_json(*cfg.measure_path);
    return {SpiralFunction::from_measure(m, angle), max_jump(m), std::nullopt};
  }
  if (!cfg.gallery) throw ValidationError("either --measure or --gallery is required");
  const std::string& name = *cfg.gallery;
  std::optional<gallery::HansenParams> hp;
  std::optional<SpiralFunction> g;
  double a = 0.0;
  if (name == "koebe") {
    g = gallery::koebe();
    a = 2.0 * M_PI;
  } else if (name == "identity") {
    g = gallery::identity();
  } else if (name == "g0") {
    g = gallery::g0();
    a = M_PI;
  } else if (name == "hansen") {
    hp = hansen_params(cfg);
    g = gallery::hansen_build(*hp);
    a = M_PI * hp->alpha;
  } else {
    throw ValidationError("unknown gallery '" + name + "'");
  }
  return {angle.is_zero() ? *g : spirallike_of(*g, angle), a, hp};
}

class Writer {
 public:
  Writer(const RunConfig& cfg, std::ostream& out) : out_(&out) {
    if (cfg.output_path) {
      file_.open(*cfg.output_path);
      if (!file_) throw ValidationError("cannot open output file " + *cfg.output_path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void write_csv_row(std::ostream& os, const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << ',';
    os << format_number(values[i]);
  }
  os << '\n';
}

int cmd_eval(const RunConfig& cfg, std::ostream& os) {
  const Built b = build_function(cfg);
  const DiskPoint p = DiskPoint::from_complex(cfg.z);
  const Complex log_ratio = b.fn.log_f_over_z(p);
  const Complex f = b.fn.evaluate(p);
  const Complex lp = b.fn.log_derivative(p);
  const double argl = std::remainder(
      log_ratio.imag() - SpiralAngle(cfg.lambda).tan_lambda() * log_ratio.real(), 2.0 * M_PI);
  if (cfg.format == Format::Json) {
    json j{{"z", {number(cfg.z.real()), number(cfg.z.imag())}},
           {"f", {number(f.real()), number(f.imag())}},
           {"log_f_over_z", {number(log_ratio.real()), number(log_ratio.imag())}},
           {"zfp_over_f", {number(lp.real()), number(lp.imag())}},
           {"arg_lambda_f_over_z", number(argl)}};
    os << j.dump(2) << '\n';
  } else {
    os << "z_re,z_im,f_re,f_im,log_f_over_z_re,log_f_over_z_im,zfp_over_f_re,zfp_over_f_im,"
          "arg_lambda_f_over_z\n";
    write_csv_row(os, {cfg.z.real(), cfg.z.imag(), f.real(), f.imag(), log_ratio.real(),
                       log_ratio.imag(), lp.real(), lp.imag(), argl});
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
  const Built b = build_function(cfg);
  const PolarGrid grid{cfg.n_radii, cfg.n_angles, cfg.r_max};
  const double margin = spirallikeness_margin(b.fn, SpiralAngle(cfg.lambda), grid);
  std::vector<std::pair<std::string, double>> rows{{"margin", margin}};
  if (b.hansen) {
    const double bound = gallery::hansen_margin_bound(*b.hansen);
    rows.emplace_back("hansen_margin_bound", bound);
    rows.emplace_back("headroom", margin - bound);
  }
  if (cfg.format == Format::Json) {
    json j = json::object();
    for (const auto& [k, v] : rows) j[k] = number(v);
    j["certified"] = margin > 0.0;
    os << j.dump(2) << '\n';
  } else {
    os << "quantity,value\n";
    for (const auto& [k, v] : rows) os << k << ',' << format_number(v) << '\n';
  }
  return margin > 0.0 ? kExitOk : kExitNotCertified;
}

std::vector<double> radii(const RunConfig& cfg) { return decade_schedule(cfg.k_min, cfg.k_max); }

int cmd_beta(const RunConfig& cfg, std::ostream& os, bool schedule_given) {
  const Built b = build_function(cfg);
  const SpiralAngle angle(cfg.lambda);
  const std::vector<double> schedule =
      schedule_given ? radii(cfg) : std::vector<double>{1.0 - 1e-6};
  const BetaTrace trace = beta_trace(b.fn, angle, cfg.t_grid, schedule);
  if (cfg.format == Format::Json) {
    json t = json::array();
    json v = json::array();
    for (std::size_t k = 0; k < trace.t_samples.size(); ++k) {
      t.push_back(number(trace.t_samples[k]));
      v.push_back(number(trace.beta_values[k]));
    }
    const JumpEstimate jump = estimate_max_jump(trace);
    os << json{{"radius", number(trace.radius_used)},
               {"t", t},
               {"beta", v},
               {"max_jump", number(jump.jump)},
               {"jump_location", number(jump.location)},
               {"periodicity_defect", number(trace.periodicity_defect())}}
              .dump(2)
       << '\n';
  } else {
    os << "t,beta\n";
    for (std::size_t k = 0; k < trace.t_samples.size(); ++k) {
      write_csv_row(os, {trace.t_samples[k], trace.beta_values[k]});
    }
  }
  return kExitOk;
}

int cmd_growth(const RunConfig& cfg, std::ostream& os) {
  const Built b = build_function(cfg);
  const SpiralAngle angle(cfg.lambda);
  const std::vector<double> schedule = radii(cfg);
  const GrowthReport report = growth_exponent(b.fn, angle, schedule, cfg.n_angles, b.known_a);
  const double q0 = report.predicted_q0;
  std::vector<RatioRow> ratios;
  for (const GrowthRow& row : report.rows) {
    ratios.push_back({row.r, std::exp(row.log_max_modulus + q0 * std::log(1.0 - row.r))});
  }
  const bool unbounded = ratio_unbounded_trend(ratios);
  const double slope = ratios.size() >= 2 ? ratio_loglog_slope(ratios) : 0.0;
  const std::string verdict = unbounded ? "O-bound fails" : "O-bound not contradicted";
  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const GrowthRow& r = report.rows[i];
      rows.push_back({{"r", number(r.r)},
                      {"M", number(r.max_modulus)},
                      {"E", number(r.exponent)},
                      {"ratio", number(ratios[i].ratio)}});
    }
    os << json{{"rows", rows},
               {"predicted_q0", number(q0)},
               {"A", number(report.a_estimate)},
               {"ratio_loglog_slope", number(slope)},
               {"verdict", verdict}}
              .dump(2)
       << '\n';
  } else {
    os << "r,M,E,ratio\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      const GrowthRow& r = report.rows[i];
      write_csv_row(os, {r.r, r.max_modulus, r.exponent, ratios[i].ratio});
    }
    os << "# predicted_q0=" << format_number(q0) << " A=" << format_number(report.a_estimate)
       << " ratio_loglog_slope=" << format_number(slope) << " verdict=" << verdict << '\n';
  }
  return kExitOk;
}

int cmd_qtheta(const RunConfig& cfg, std::ostream& os) {
  const gallery::C0Report rep = gallery::c0_constant(static_cast<std::size_t>(cfg.q_grid));
  const double c0 = gallery::configured_c0();
  std::vector<std::pair<double, double>> samples;
  for (int i = 1; i <= cfg.q_samples; ++i) {
    const double theta = 0.5 * M_PI * i / (cfg.q_samples + 1);
    samples.emplace_back(theta, gallery::q_function(theta));
  }
  if (cfg.format == Format::Json) {
    json s = json::array();
    for (const auto& [t, q] : samples) s.push_back({number(t), number(q)});
    os << json{{"sup_q", number(rep.sup_q)},
               {"argmax", number(rep.argmax)},
               {"measured_c0", number(rep.c0)},
               {"c0", number(c0)},
               {"monotone", rep.monotone},
               {"grid", rep.grid},
               {"samples", s}}
              .dump(2)
       << '\n';
  } else {
    os << "theta,Q\n";
    for (const auto& [t, q] : samples) write_csv_row(os, {t, q});
    os << "# sup_q=" << format_number(rep.sup_q) << " argmax=" << format_number(rep.argmax)
       << " c0=" << format_number(c0) << " monotone=" << (rep.monotone ? "true" : "false")
       << '\n';
  }
  return kExitOk;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& os) {
  const Built b = build_function(cfg);
  const std::vector<Complex> a = taylor_coefficients(b.fn, cfg.n_coeffs, cfg.coeff_radius);
  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (std::size_t n = 0; n < a.size(); ++n) {
      rows.push_back({{"n", n}, {"re", number(a[n].real())}, {"im", number(a[n].imag())}});
    }
    os << rows.dump(2) << '\n';
  } else {
    os << "n,re,im\n";
    for (std::size_t n = 0; n < a.size(); ++n) {
      os << n << ',' << format_number(a[n].real()) << ',' << format_number(a[n].imag()) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

std::string format_number(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(15) << v;
  return os.str();
}

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ValidationError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {parse_double(s, "complex literal"), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  const double re = re_text.empty() ? 0.0 : parse_double(re_text, "real part");
  return {re, parse_double(im_text, "imaginary part")};
}

std::pair<int, int> parse_k_range(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ValidationError("--r-k expects kmin:kmax");
  auto parse_int = [](std::string_view t) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw ValidationError("--r-k expects integers, got '" + std::string(t) + "'");
    }
    return v;
  };
  return {parse_int(text.substr(0, colon)), parse_int(text.substr(colon + 1))};
}

void validate(const RunConfig& cfg) {
  std::vector<std::string> problems;
  if (!(std::abs(cfg.lambda) < M_PI / 2.0)) problems.push_back("lambda must lie in (-pi/2, pi/2)");
  if (!(cfg.k_min >= 1 && cfg.k_min < cfg.k_max && cfg.k_max <= 12)) {
    problems.push_back("r-schedule needs 1 <= k_min < k_max <= 12");
  }
  for (auto [name, v] : {std::pair{"n-radii", cfg.n_radii}, std::pair{"n-angles", cfg.n_angles},
                         std::pair{"t-grid", cfg.t_grid}, std::pair{"q-grid", cfg.q_grid},
                         std::pair{"q-samples", cfg.q_samples}}) {
    if (v < 16) problems.push_back(std::string(name) + " must be at least 16");
  }
  if (!(cfg.r_max > 0.0 && cfg.r_max < 1.0)) problems.push_back("r-max must lie in (0, 1)");
  if (cfg.n_coeffs < 0) problems.push_back("n must be nonnegative");
  if (!(cfg.coeff_radius > 0.0 && cfg.coeff_radius < 1.0)) {
    problems.push_back("coefficient radius must lie in (0, 1)");
  }
  if (cfg.measure_path && cfg.gallery) problems.push_back("--measure and --gallery are exclusive");
  if (!problems.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ValidationError(msg);
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string z_text = "0";
  std::string k_text;
  std::string format_text = "csv";

  CLI::App app{"Spirallike function toolkit"};
  app.require_subcommand(1);
  struct Sub {
    Command cmd;
    const char* name;
    const char* help;
  };
  const Sub subs[] = {{Command::Eval, "eval", "Evaluate f, log(f/z), zf'/f and arg_lambda(f/z)"},
                      {Command::Verify, "verify", "Spirallikeness margin on a polar grid"},
                      {Command::Beta, "beta", "Boundary function trace"},
                      {Command::Growth, "growth", "Maximum modulus growth exponent"},
                      {Command::Qtheta, "qtheta", "Q(theta) supremum and C0"},
                      {Command::Coeffs, "coeffs", "Taylor coefficients"}};
  std::vector<std::pair<CLI::App*, Command>> commands;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    commands.emplace_back(sub, s.cmd);
    sub->add_option("--measure", cfg.measure_path, "Measure JSON file");
    sub->add_option("--gallery", cfg.gallery, "koebe|identity|g0|hansen")
        ->check(CLI::IsMember({"koebe", "identity", "g0", "hansen"}));
    sub->add_option("--lambda", cfg.lambda, "Spiral angle in radians");
    sub->add_option("--alpha", cfg.alpha, "Hansen alpha");
    sub->add_option("--beta-exp", cfg.beta_exp, "Hansen exponent beta");
    sub->add_option("--c", cfg.c, "Hansen c");
    sub->add_option("--A", cfg.big_a, "Hansen shortcut alpha = A/pi");
    sub->add_option("--z", z_text, "Complex point a+bi");
    sub->add_option("--r-k", k_text, "Radii r = 1-10^-k for k in kmin:kmax");
    sub->add_option("--n-radii", cfg.n_radii, "Polar grid radii");
    sub->add_option("--n-angles", cfg.n_angles, "Polar grid angles");
    sub->add_option("--r-max", cfg.r_max, "Largest grid radius");
    sub->add_option("--t-grid", cfg.t_grid, "Trace angles");
    sub->add_option("--q-grid", cfg.q_grid, "Q supremum grid");
    sub->add_option("--q-samples", cfg.q_samples, "Q rows printed");
    sub->add_option("--n", cfg.n_coeffs, "Highest Taylor coefficient");
    sub->add_option("--radius", cfg.coeff_radius, "Cauchy circle radius");
    sub->add_option("--format", format_text, "csv|json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.output_path, "Output file");
    sub->add_option("--threads", cfg.threads, "Worker threads");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    for (const auto& [sub, cmd] : commands) {
      if (sub->parsed()) cfg.command = cmd;
    }
    cfg.z = parse_complex(z_text);
    if (!k_text.empty()) std::tie(cfg.k_min, cfg.k_max) = parse_k_range(k_text);
    cfg.format = format_text == "json" ? Format::Json : Format::Csv;
    validate(cfg);
    set_worker_threads(std::max(1u, cfg.threads));

    Writer writer(cfg, out);
    std::ostream& os = writer.stream();
    os.imbue(std::locale::classic());
    switch (cfg.command) {
      case Command::Eval: return cmd_eval(cfg, os);
      case Command::Verify: return cmd_verify(cfg, os);
      case Command::Beta: return cmd_beta(cfg, os, !k_text.empty());
      case Command::Growth: return cmd_growth(cfg, os);
      case Command::Qtheta: return cmd_qtheta(cfg, os);
      case Command::Coeffs: return cmd_coeffs(cfg, os);
    }
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "accuracy error: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitAccuracy;
  }
}

}  // namespace spirallike::cli
