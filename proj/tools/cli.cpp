#include "cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "flamefront/asymptotics.hpp"
#include "flamefront/front.hpp"
#include "flamefront/phase.hpp"
#include "flamefront/sweep.hpp"

namespace flamefront::cli {
namespace {

namespace as = flamefront::asymptotics;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNumeric = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// json numbers carry the same 12 digits as the csv
nlohmann::json jnum(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(num(v).c_str(), nullptr);
}

void csv_row(std::ostream& out, const std::vector<double>& vals) {
  for (std::size_t i = 0; i < vals.size(); ++i) out << (i ? "," : "") << num(vals[i]);
  out << '\n';
}

void csv_header(std::ostream& out, const std::vector<std::string>& cols) {
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
}

std::string flag_name(std::string param) {
  for (auto& ch : param)
    if (ch == '_') ch = '-';
  return "--" + param;
}

double env_max_x() {
  const char* s = std::getenv("FLAMEFRONT_MAX_X");
  if (s == nullptr || *s == '\0') return 1e6;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s, &end);
  if (errno != 0 || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw UsageError("FLAMEFRONT_MAX_X must be a positive number, got '" + std::string(s) + "'");
  }
  return v;
}

struct ModelFlags {
  double theta = 0.5;
  double lambda = 1.0;
  double alpha = 0.5;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::string seed_offset = "auto";
  double sigma_tol = 1e-10;
  double max_residual = 1e-6;

  ModelParams params() const {
    ModelParams p;
    p.lambda = lambda;
    p.alpha = alpha;
    p.rel_tol = rel_tol;
    p.abs_tol = abs_tol;
    if (seed_offset != "auto") {
      char* end = nullptr;
      const double eps = std::strtod(seed_offset.c_str(), &end);
      if (end == seed_offset.c_str() || *end != '\0') {
        throw ParameterError("seed_offset", "seed offset must be 'auto' or a positive number");
      }
      p.seed_offset = eps;
    }
    p.validate();
    return p;
  }

  SolverOptions solver() const {
    if (!(sigma_tol > 0.0)) throw ParameterError("tol", "tol must be positive");
    SolverOptions o;
    o.sigma_tol = sigma_tol;
    o.max_x = env_max_x();
    return o;
  }
};

void add_integration_flags(CLI::App* sub, ModelFlags& f) {
  sub->add_option("--rel-tol", f.rel_tol, "per-step relative error target")->capture_default_str();
  sub->add_option("--abs-tol", f.abs_tol, "per-step absolute error target")->capture_default_str();
  sub->add_option("--seed-offset", f.seed_offset, "series start offset, or auto")->capture_default_str();
  // read before parsing, see expand_config
  sub->add_option("--config", "file of 'key = value' lines; flags override it");
}

void add_front_flags(CLI::App* sub, ModelFlags& f) {
  sub->add_option("--theta", f.theta, "ignition temperature in (0,1)")->required();
  sub->add_option("--lambda", f.lambda, "inverse Lewis number, > 0")->required();
  sub->add_option("--alpha", f.alpha, "reaction order in [0.005, 0.995]")->required();
  sub->add_option("--tol", f.sigma_tol, "relative bracket width for sigma*")->capture_default_str();
  sub->add_option("--max-residual", f.max_residual, "validation threshold")->capture_default_str();
  add_integration_flags(sub, f);
}

struct Solved {
  FrontSolution front;
  ProfileTable profile;
  ResidualReport residuals;
};

Solved solve_and_validate(const ModelFlags& f, double xi_min, bool xi_given, std::size_t points) {
  const ModelParams p = f.params();
  validate_theta(f.theta);
  const SolverOptions opts = f.solver();
  Solved s;
  s.front = solve_front(p, f.theta, opts);
  const double lo = xi_given ? xi_min : default_xi_min(s.front);
  if (xi_given && !(lo < -s.front.r_star)) {
    throw UsageError("--xi-min must lie below -R* = " + num(-s.front.r_star));
  }
  s.profile = reconstruct_profiles(s.front, lo, points);
  s.residuals = validate_front(s.front, s.profile);
  return s;
}

std::vector<double> record_values(const SweepRecord& r, bool timing) {
  std::vector<double> v = {r.theta,   r.lambda,  r.alpha,    r.sigma_star,     r.c_star,
                           r.r_star,  r.a_coef,  r.res_ign,  r.res_flux,       r.res_ode,
                           r.res_c_identity,     r.res_theta_identity};
  if (timing) v.push_back(r.wall_time_ms);
  return v;
}

int cmd_solve(const ModelFlags& f, const std::string& format, std::ostream& out) {
  const Solved s = solve_and_validate(f, 0.0, false, 200);
  const SweepRecord rec = make_record(s.front, s.residuals);
  const double worst = s.residuals.max();
  const bool ok = worst < f.max_residual;
  auto cols = sweep_record_columns();
  cols.pop_back();  // wall_time_ms
  const auto vals = record_values(rec, false);
  if (format == "json") {
    nlohmann::json j;
    for (std::size_t i = 0; i < cols.size(); ++i) j[cols[i]] = jnum(vals[i]);
    j["max_residual"] = jnum(worst);
    j["residual_threshold"] = jnum(f.max_residual);
    j["ok"] = ok;
    out << j.dump(2) << '\n';
  } else {
    csv_header(out, cols);
    csv_row(out, vals);
    out << "# max_residual = " << num(worst) << (ok ? " (ok)" : " (exceeds threshold)") << '\n';
  }
  return ok ? kOk : kNumeric;
}

struct SweepFlags {
  std::string theta_grid = "0.25,0.5,0.75";
  std::string lambda_grid = "0.2,1,5";
  std::string alpha_grid = "0.25,0.5,0.75";
  std::string out_path = "-";
  int jobs = 0;
  bool no_timing = false;
};

std::vector<double> grid_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_grid(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

int cmd_sweep(const ModelFlags& f, const SweepFlags& sf, std::ostream& stdout_) {
  GridAxes axes{grid_flag("--theta-grid", sf.theta_grid), grid_flag("--lambda-grid", sf.lambda_grid),
                grid_flag("--alpha-grid", sf.alpha_grid)};
  if (sf.jobs < 0) throw UsageError("--jobs must be >= 0");
  // lambda and alpha are per tuple; this only checks the shared settings
  ModelFlags shared = f;
  shared.lambda = 1.0;
  shared.alpha = 0.5;
  const ModelParams base = shared.params();
  SweepConfig cfg;
  cfg.rel_tol = base.rel_tol;
  cfg.abs_tol = base.abs_tol;
  cfg.seed_offset = base.seed_offset;
  cfg.solver = f.solver();

  std::ofstream file;
  if (sf.out_path != "-") {
    file.open(sf.out_path);
    if (!file) throw UsageError("--out: cannot open '" + sf.out_path + "' for writing");
  }
  std::ostream& out = sf.out_path == "-" ? stdout_ : file;

  const auto points = axes.points();
  const auto records = sf.jobs == 1 ? run_sweep_serial(points, cfg) : run_sweep_parallel(points, cfg, sf.jobs);

  csv_header(out, sweep_record_columns());
  std::size_t failed = 0, breaches = 0;
  for (const auto& r : records) {
    auto vals = record_values(r, true);
    if (sf.no_timing) vals.back() = 0.0;
    csv_row(out, vals);
    if (!r.ok())
      ++failed;
    else if (!(r.max_residual() < f.max_residual))
      ++breaches;
  }

  out << "# tuples = " << records.size() << '\n';
  out << "# failed = " << failed << '\n';
  out << "# residual_breaches = " << breaches << " (threshold " << num(f.max_residual) << ")\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].ok()) out << "# error row " << i << ": " << records[i].error << '\n';
  }
  std::size_t total = 0;
  for (Axis axis : {Axis::theta, Axis::lambda, Axis::alpha}) {
    const auto v = trend_violations(axes, records, &SweepRecord::c_star, axis, Trend::non_increasing, 1e-8);
    total += v.size();
    out << "# c_star non-increasing in " << to_string(axis) << ": " << v.size() << " violations\n";
    for (const auto& tv : v) {
      const auto& a = records[tv.from];
      const auto& b = records[tv.to];
      out << "#   (" << num(a.theta) << "," << num(a.lambda) << "," << num(a.alpha) << ") -> ("
          << num(b.theta) << "," << num(b.lambda) << "," << num(b.alpha) << "): " << num(tv.before)
          << " -> " << num(tv.after) << '\n';
    }
  }
  out << "# c_star monotonicity violations = " << total << '\n';
  out.flush();
  return failed + breaches > 0 ? kNumeric : kOk;
}

int cmd_profile(const ModelFlags& f, double xi_min, bool xi_given, int points, std::ostream& out) {
  if (points < 16) throw UsageError("--points must be at least 16");
  const Solved s = solve_and_validate(f, xi_min, xi_given, static_cast<std::size_t>(points));
  const double worst = s.residuals.max();
  const bool ok = worst < f.max_residual;
  out << "# theta = " << num(f.theta) << ", lambda = " << num(f.lambda) << ", alpha = " << num(f.alpha)
      << '\n';
  out << "# c_star = " << num(s.front.c_star) << ", r_star = " << num(s.front.r_star)
      << ", a_coef = " << num(s.front.a_coef) << '\n';
  out << "# xi_ign = " << num(s.profile.xi_ign) << '\n';
  out << "# xi_tr = " << num(s.profile.xi_tr) << '\n';
  out << "# max_residual = " << num(worst) << (ok ? " (ok)" : " (exceeds threshold)") << '\n';
  csv_header(out, {"xi", "u", "v", "uprime", "vprime"});
  for (const auto& r : s.profile.rows) csv_row(out, {r.xi, r.u, r.v, r.uprime, r.vprime});
  return ok ? kOk : kNumeric;
}

// Parameter windows in which a front regime is meaningful, and its band.
struct RegimeCheck {
  as::Regime regime;
  const char* requirement;
  bool (*applies)(const ModelFlags&);
  double band;
};

const RegimeCheck kFrontRegimes[] = {
    {as::Regime::theta_near_one, "--theta >= 0.9", [](const ModelFlags& f) { return f.theta >= 0.9; }, 0.05},
    {as::Regime::theta_small, "--theta <= 0.01", [](const ModelFlags& f) { return f.theta <= 0.01; }, 0.10},
    {as::Regime::alpha_zero, "--alpha <= 0.05", [](const ModelFlags& f) { return f.alpha <= 0.05; }, 0.03},
    {as::Regime::alpha_one, "--alpha >= 0.95", [](const ModelFlags& f) { return f.alpha >= 0.95; }, 0.05},
};

int cmd_compare(const ModelFlags& f, const std::vector<std::string>& names, std::ostream& out) {
  if (names.empty()) throw UsageError("--regimes: at least one regime is required");
  std::vector<const RegimeCheck*> checks;
  for (const auto& name : names) {
    as::Regime r;
    try {
      r = as::regime_from_string(name);
    } catch (const std::invalid_argument& e) {
      throw UsageError("--regimes: " + std::string(e.what()));
    }
    const RegimeCheck* found = nullptr;
    for (const auto& c : kFrontRegimes)
      if (c.regime == r) found = &c;
    if (found == nullptr) {
      throw UsageError("--regimes: '" + name +
                       "' is not a front regime; evaluate it with the asymptotics subcommand");
    }
    if (!found->applies(f)) {
      throw UsageError("--regimes: " + std::string(as::to_string(r)) + " needs " + found->requirement);
    }
    checks.push_back(found);
  }

  const Solved s = solve_and_validate(f, 0.0, false, 200);
  const double c = s.front.c_star;
  const double rr = s.front.r_star;
  csv_header(out, {"regime", "quantity", "numeric", "asymptotic", "rel_err", "band"});
  bool all_ok = true;
  auto row = [&](as::Regime r, const char* q, double numeric, double asym, double band) {
    const double err = std::abs(numeric - asym) / std::abs(asym);
    all_ok = all_ok && err <= band;
    out << as::to_string(r) << ',' << q << ',' << num(numeric) << ',' << num(asym) << ',' << num(err)
        << ',' << num(band) << '\n';
  };
  for (const RegimeCheck* ch : checks) {
    switch (ch->regime) {
      case as::Regime::theta_near_one: {
        const auto a = as::front_theta_near_one(f.theta, f.lambda, f.alpha);
        row(ch->regime, "c", c, a.c, ch->band);
        row(ch->regime, "R", rr, a.r, ch->band);
        break;
      }
      case as::Regime::theta_small:
        row(ch->regime, "c", c, as::front_theta_small(f.theta, f.alpha).c, ch->band);
        break;
      case as::Regime::alpha_zero:
        row(ch->regime, "c", c, as::front_alpha_zero(f.theta).c, ch->band);
        break;
      case as::Regime::alpha_one:
        row(ch->regime, "c", c, as::front_alpha_one(f.theta, f.lambda).c, ch->band);
        break;
      default:
        break;
    }
  }
  out << "# max_residual = " << num(s.residuals.max()) << '\n';
  out << "# within_bands = " << (all_ok ? "yes" : "no") << '\n';
  return all_ok ? kOk : kNumeric;
}

struct AsymFlags {
  std::string regime;
  double theta = 0.5;
  double lambda = 1.0;
  double alpha = 0.5;
  double x = 0.0;
};

int cmd_asymptotics(const AsymFlags& a, bool x_given, std::ostream& out) {
  as::Regime r;
  try {
    r = as::regime_from_string(a.regime);
  } catch (const std::invalid_argument& e) {
    throw UsageError("regime: " + std::string(e.what()));
  }
  auto need_x = [&] {
    if (!x_given) throw UsageError("--x is required for regime " + std::string(as::to_string(r)));
  };
  const std::string name(as::to_string(r));
  switch (r) {
    case as::Regime::theta_near_one:
    case as::Regime::theta_small:
    case as::Regime::alpha_zero:
    case as::Regime::alpha_one: {
      as::SpeedWidth sw{};
      if (r == as::Regime::theta_near_one) sw = as::front_theta_near_one(a.theta, a.lambda, a.alpha);
      if (r == as::Regime::theta_small) sw = as::front_theta_small(a.theta, a.alpha);
      if (r == as::Regime::alpha_zero) sw = as::front_alpha_zero(a.theta);
      if (r == as::Regime::alpha_one) sw = as::front_alpha_one(a.theta, a.lambda);
      csv_header(out, {"regime", "theta", "lambda", "alpha", "c", "R"});
      out << name << ',' << num(a.theta) << ',' << num(a.lambda) << ',' << num(a.alpha) << ','
          << num(sw.c) << ',' << num(sw.r) << '\n';
      return kOk;
    }
    case as::Regime::w_small_x:
    case as::Regime::w_large_x:
    case as::Regime::w0_profile:
    case as::Regime::w_upper_bound: {
      need_x();
      double w = 0.0;
      if (r == as::Regime::w_small_x) w = as::w_asymptotic(a.lambda, a.alpha, a.x, as::Branch::small_x);
      if (r == as::Regime::w_large_x) w = as::w_asymptotic(a.lambda, a.alpha, a.x, as::Branch::large_x);
      if (r == as::Regime::w0_profile) w = as::w0_profile(a.lambda, a.x);
      if (r == as::Regime::w_upper_bound) w = as::w_upper_bound(a.alpha, a.x);
      csv_header(out, {"regime", "lambda", "alpha", "x", "w"});
      out << name << ',' << num(a.lambda) << ',' << num(a.alpha) << ',' << num(a.x) << ',' << num(w)
          << '\n';
      return kOk;
    }
    case as::Regime::phi_zeta_small_x:
    case as::Regime::phi_zeta_large_x: {
      need_x();
      const auto pz = as::phi_zeta_asymptotic(
          a.lambda, a.alpha, a.x,
          r == as::Regime::phi_zeta_small_x ? as::Branch::small_x : as::Branch::large_x);
      csv_header(out, {"regime", "lambda", "alpha", "x", "phi", "zeta"});
      out << name << ',' << num(a.lambda) << ',' << num(a.alpha) << ',' << num(a.x) << ','
          << num(pz.phi) << ',' << num(pz.zeta) << '\n';
      return kOk;
    }
  }
  return kUsage;
}

int cmd_phase(const ModelFlags& f, double reach, double tol, std::ostream& out) {
  if (!(reach < 0.0)) throw UsageError("--reach must be negative");
  if (!(tol >= 0.0)) throw UsageError("--tol must be non-negative");
  WTrajectory traj(f.params());
  traj.extend(reach);
  const PolarTrace trace = to_polar(traj);
  const AngleReport rep = angle_monotonicity_report(trace, tol);
  const bool ok = rep.compliant(tol);
  out << "# lambda = " << num(f.lambda) << ", alpha = " << num(f.alpha) << ", reach = " << num(reach)
      << ", seed_offset = " << num(traj.seed_offset()) << '\n';
  out << "# first_angle = " << num(trace.rows.front().angle)
      << ", last_angle = " << num(trace.rows.back().angle) << '\n';
  out << "# max_increment = " << num(rep.max_increment);
  if (rep.max_increment > 0.0) out << " at t = " << num(rep.t);
  out << '\n';
  out << "# violations = " << rep.violations.size() << " (tol " << num(tol) << ")\n";
  csv_header(out, {"t", "q", "p", "r", "theta_angle"});
  for (const auto& r : trace.rows) csv_row(out, {r.t, r.q, r.p, r.r, r.angle});
  return ok ? kOk : kNumeric;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Replaces "--config FILE" by the flags it lists, placed right after the
// subcommand name so that explicit flags, parsed later, win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 2; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw UsageError("--config needs a file name");
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("--config: cannot read '" + path + "'");
  std::vector<std::string> injected;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--config: line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    while (!key.empty() && key[0] == '-') key.erase(0, 1);
    for (auto& ch : key)
      if (ch == '_') ch = '-';
    if (key.empty() || value.empty()) {
      throw UsageError("--config: line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    if (key == "no-timing") {
      if (value == "true" || value == "1") injected.push_back("--no-timing");
      continue;
    }
    injected.push_back("--" + key);
    injected.push_back(value);
  }
  args.insert(args.begin() + 2, injected.begin(), injected.end());
  return args;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Traveling combustion fronts with fractional-order reaction: solver and diagnostics"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  ModelFlags solve_f;
  std::string format = "csv";
  auto* solve = app.add_subcommand("solve", "solve one front and report its residuals");
  add_front_flags(solve, solve_f);
  solve->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  ModelFlags sweep_f;
  SweepFlags sf;
  auto* sweep = app.add_subcommand("sweep", "solve every (theta, lambda, alpha) tuple of a grid");
  sweep->add_option("--theta-grid", sf.theta_grid, "comma list or start:stop:count")->capture_default_str();
  sweep->add_option("--lambda-grid", sf.lambda_grid, "comma list or start:stop:count")->capture_default_str();
  sweep->add_option("--alpha-grid", sf.alpha_grid, "comma list or start:stop:count")->capture_default_str();
  sweep->add_option("--out", sf.out_path, "output csv path, - for stdout")->capture_default_str();
  sweep->add_option("--jobs", sf.jobs, "worker threads, 0 for all cores")->capture_default_str();
  sweep->add_flag("--no-timing", sf.no_timing, "write wall_time_ms as 0 for reproducible output");
  sweep->add_option("--tol", sweep_f.sigma_tol, "relative bracket width for sigma*")->capture_default_str();
  sweep->add_option("--max-residual", sweep_f.max_residual, "validation threshold")->capture_default_str();
  add_integration_flags(sweep, sweep_f);

  ModelFlags prof_f;
  double xi_min = 0.0;
  int points = 200;
  auto* profile = app.add_subcommand("profile", "temperature and reactant profiles of one front");
  add_front_flags(profile, prof_f);
  auto* xi_opt = profile->add_option("--xi-min", xi_min, "left end of the table, default -R* - 5/c*");
  profile->add_option("--points", points, "rows in the reaction zone (upstream gets half)")->capture_default_str();

  ModelFlags cmp_f;
  std::vector<std::string> regimes;
  auto* compare = app.add_subcommand("compare-asymptotics", "numeric front against closed-form regimes");
  add_front_flags(compare, cmp_f);
  compare->add_option("--regimes", regimes, "theta-near-one, theta-small, alpha-zero, alpha-one")
      ->delimiter(',')
      ->required()
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  ModelFlags phase_f;
  double reach = -200.0;
  double angle_tol = 1e-8;
  auto* phase = app.add_subcommand("phase", "polar-angle trace of the profile trajectory");
  phase->add_option("--lambda", phase_f.lambda, "inverse Lewis number, > 0")->required();
  phase->add_option("--alpha", phase_f.alpha, "reaction order in [0.005, 0.995]")->required();
  phase->add_option("--reach", reach, "most negative t to integrate to")->capture_default_str();
  phase->add_option("--tol", angle_tol, "allowed positive angle step")->capture_default_str();
  add_integration_flags(phase, phase_f);

  AsymFlags af;
  auto* asym = app.add_subcommand("asymptotics", "evaluate a closed-form limit or asymptotic form");
  asym->add_option("regime", af.regime, "theta-near-one, theta-small, alpha-zero, alpha-one, w-small-x, "
                                        "w-large-x, w0-profile, w-upper-bound, phi-zeta-small-x, phi-zeta-large-x")
      ->required();
  asym->add_option("--theta", af.theta)->capture_default_str();
  asym->add_option("--lambda", af.lambda)->capture_default_str();
  asym->add_option("--alpha", af.alpha)->capture_default_str();
  auto* x_opt = asym->add_option("--x", af.x, "abscissa: x <= 0 for w forms, x > 0 for phi-zeta forms");

  std::vector<std::string> args(argv, argv + argc);
  try {
    if (args.size() > 2) args = expand_config(std::move(args));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  // CLI11 consumes the argument vector from the back, without argv[0]
  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);

  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(solve_f, format, out);
    if (*sweep) return cmd_sweep(sweep_f, sf, out);
    if (*profile) return cmd_profile(prof_f, xi_min, xi_opt->count() > 0, points, out);
    if (*compare) return cmd_compare(cmp_f, regimes, out);
    if (*phase) return cmd_phase(phase_f, reach, angle_tol, out);
    if (*asym) return cmd_asymptotics(af, x_opt->count() > 0, out);
  } catch (const ParameterError& e) {
    err << "error: " << flag_name(e.name()) << ": " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumeric;
  }
  return kUsage;
}

}  // namespace flamefront::cli
