#include "flamefront/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace flamefront {
namespace {

double parse_number(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("malformed number '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

double SweepRecord::max_residual() const {
  return std::max({res_ign, res_flux, res_ode, res_c_identity, res_theta_identity});
}

const std::vector<std::string>& sweep_record_columns() {
  static const std::vector<std::string> cols = {
      "theta",   "lambda",   "alpha",   "sigma_star",     "c_star",
      "r_star",  "a_coef",   "res_ign", "res_flux",       "res_ode",
      "res_c_identity",      "res_theta_identity",        "wall_time_ms"};
  return cols;
}

std::vector<SweepPoint> GridAxes::points() const {
  std::vector<SweepPoint> pts;
  pts.reserve(size());
  for (double t : theta)
    for (double l : lambda)
      for (double a : alpha) pts.push_back({t, l, a});
  return pts;
}

std::vector<double> parse_grid(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty grid");
  std::vector<double> out;
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
      throw std::invalid_argument("range grid must be start:stop:count");
    }
    const double start = parse_number(text.substr(0, c1));
    const double stop = parse_number(text.substr(c1 + 1, c2 - c1 - 1));
    const double count_d = parse_number(text.substr(c2 + 1));
    if (count_d < 1 || count_d != std::floor(count_d)) {
      throw std::invalid_argument("range count must be a positive integer");
    }
    const auto count = static_cast<std::size_t>(count_d);
    if (count == 1) return {start};
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(i + 1 == count
                        ? stop
                        : start + (stop - start) * static_cast<double>(i) /
                                      static_cast<double>(count - 1));
    }
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_number(text.substr(pos, end - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

SweepRecord make_record(const FrontSolution& front, const ResidualReport& res) {
  SweepRecord rec;
  rec.theta = front.theta;
  rec.lambda = front.params.lambda;
  rec.alpha = front.params.alpha;
  rec.sigma_star = front.sigma_star;
  rec.c_star = front.c_star;
  rec.r_star = front.r_star;
  rec.a_coef = front.a_coef;
  rec.res_ign = res.ignition;
  rec.res_flux = res.flux;
  rec.res_ode = res.ode;
  rec.res_c_identity = res.c_identity;
  rec.res_theta_identity = res.theta_identity;
  return rec;
}

SweepRecord solve_point(const SweepPoint& pt, const SweepConfig& cfg) {
  SweepRecord rec;
  rec.theta = pt.theta;
  rec.lambda = pt.lambda;
  rec.alpha = pt.alpha;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    ModelParams p;
    p.lambda = pt.lambda;
    p.alpha = pt.alpha;
    p.rel_tol = cfg.rel_tol;
    p.abs_tol = cfg.abs_tol;
    p.seed_offset = cfg.seed_offset;
    const FrontSolution f = solve_front(p, pt.theta, cfg.solver);
    const ProfileTable prof = reconstruct_profiles(f, default_xi_min(f), cfg.profile_points);
    rec = make_record(f, validate_front(f, prof));
  } catch (const std::exception& e) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    constexpr double inf = std::numeric_limits<double>::infinity();
    rec.sigma_star = rec.c_star = rec.r_star = rec.a_coef = nan;
    rec.res_ign = rec.res_flux = rec.res_ode = rec.res_c_identity = rec.res_theta_identity = inf;
    rec.error = e.what();
    if (rec.error.empty()) rec.error = "unknown failure";
  }
  rec.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::vector<SweepRecord> run_sweep_serial(const std::vector<SweepPoint>& points,
                                          const SweepConfig& cfg) {
  std::vector<SweepRecord> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(solve_point(pt, cfg));
  return out;
}

std::vector<SweepRecord> run_sweep_parallel(const std::vector<SweepPoint>& points,
                                            const SweepConfig& cfg, int jobs) {
  std::vector<SweepRecord> out(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = solve_point(points[static_cast<std::size_t>(i)], cfg);
  }
#else
  (void)jobs;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = solve_point(points[static_cast<std::size_t>(i)], cfg);
  }
#endif
  return out;
}

std::vector<TrendViolation> trend_violations(const GridAxes& axes,
                                             const std::vector<SweepRecord>& records,
                                             double SweepRecord::*field, Axis axis, Trend trend,
                                             double rel_slack) {
  if (records.size() != axes.size()) throw std::invalid_argument("record count does not match grid");
  std::vector<TrendViolation> out;
  const std::size_t nt = axes.theta.size(), nl = axes.lambda.size(), na = axes.alpha.size();
  auto check = [&](std::size_t i0, std::size_t i1) {
    const SweepRecord& r0 = records[i0];
    const SweepRecord& r1 = records[i1];
    if (!r0.ok() || !r1.ok()) return;
    const double a = r0.*field;
    const double b = r1.*field;
    const double slack = rel_slack * std::max(std::abs(a), std::abs(b));
    const bool bad = trend == Trend::non_increasing ? b > a + slack : b < a - slack;
    if (bad) out.push_back({axis, i0, i1, a, b});
  };
  for (std::size_t it = 0; it < nt; ++it)
    for (std::size_t il = 0; il < nl; ++il)
      for (std::size_t ia = 0; ia < na; ++ia) {
        switch (axis) {
          case Axis::theta:
            if (it + 1 < nt) check(axes.index(it, il, ia), axes.index(it + 1, il, ia));
            break;
          case Axis::lambda:
            if (il + 1 < nl) check(axes.index(it, il, ia), axes.index(it, il + 1, ia));
            break;
          case Axis::alpha:
            if (ia + 1 < na) check(axes.index(it, il, ia), axes.index(it, il, ia + 1));
            break;
        }
      }
  return out;
}

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::theta: return "theta";
    case Axis::lambda: return "lambda";
    case Axis::alpha: return "alpha";
  }
  return "?";
}

}  // namespace flamefront
