#pragma once

// Parameter sweeps over (theta, lambda, alpha) grids. Every tuple owns its
// trajectory, so tuples are independent; run_sweep_parallel distributes them
// over OpenMP threads and run_sweep_serial is the reference it is tested
// against.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flamefront/front.hpp"

namespace flamefront {

struct SweepPoint {
  double theta;
  double lambda;
  double alpha;
};

struct SweepConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::optional<double> seed_offset;  // auto when empty
  std::size_t profile_points = 200;
  SolverOptions solver;
};

struct SweepRecord {
  double theta = 0.0;
  double lambda = 0.0;
  double alpha = 0.0;
  double sigma_star = 0.0;
  double c_star = 0.0;
  double r_star = 0.0;
  double a_coef = 0.0;
  double res_ign = 0.0;
  double res_flux = 0.0;
  double res_ode = 0.0;
  double res_c_identity = 0.0;
  double res_theta_identity = 0.0;
  double wall_time_ms = 0.0;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
  double max_residual() const;
};

// Column names in output order.
const std::vector<std::string>& sweep_record_columns();

struct GridAxes {
  std::vector<double> theta;
  std::vector<double> lambda;
  std::vector<double> alpha;

  std::size_t size() const { return theta.size() * lambda.size() * alpha.size(); }
  // theta outermost, alpha innermost
  std::size_t index(std::size_t it, std::size_t il, std::size_t ia) const {
    return (it * lambda.size() + il) * alpha.size() + ia;
  }
  std::vector<SweepPoint> points() const;
};

// "a,b,c" or "start:stop:count" (inclusive, linear). Throws
// std::invalid_argument on malformed input.
std::vector<double> parse_grid(std::string_view text);

// Copies outputs and residuals into a record (wall_time_ms left at 0).
SweepRecord make_record(const FrontSolution& front, const ResidualReport& res);

// Solves one tuple and validates it; failures are captured in the record
// with NaN outputs and infinite residuals.
SweepRecord solve_point(const SweepPoint& pt, const SweepConfig& cfg);

std::vector<SweepRecord> run_sweep_serial(const std::vector<SweepPoint>& points, const SweepConfig& cfg);
std::vector<SweepRecord> run_sweep_parallel(const std::vector<SweepPoint>& points,
                                            const SweepConfig& cfg, int jobs);

enum class Axis { theta, lambda, alpha };
enum class Trend { non_increasing, non_decreasing };

struct TrendViolation {
  Axis axis;
  std::size_t from;  // record indices of the offending neighbours
  std::size_t to;
  double before;
  double after;
};

// Checks every grid line along `axis`. A step violates the trend when it
// moves the wrong way by more than rel_slack relative to the larger value.
// Lines touching a failed record are skipped.
std::vector<TrendViolation> trend_violations(const GridAxes& axes,
                                             const std::vector<SweepRecord>& records,
                                             double SweepRecord::*field, Axis axis, Trend trend,
                                             double rel_slack = 0.0);

std::string_view to_string(Axis a);

}  // namespace flamefront
