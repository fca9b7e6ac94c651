#pragma once

// Phase-plane view of the profile trajectory: q = w, p = w' as functions of
// t = x, in polar form q = r cos(angle), p = r sin(angle). Concavity
// w'' w <= (w')^2 is equivalent to the polar angle never increasing in t.

#include <cstddef>
#include <limits>
#include <vector>

#include "flamefront/trajectory.hpp"

namespace flamefront {

struct PolarRow {
  double t;
  double q;
  double p;
  double r;
  double angle;  // in [-pi/2, 0]
};

struct PolarTrace {
  std::vector<PolarRow> rows;  // ascending t, ending at the origin t = 0
};

PolarTrace to_polar(const WTrajectory& traj);

struct AngleReport {
  double max_increment = 0.0;  // largest positive angle step as t increases
  std::size_t index = 0;       // row where that step starts
  double t = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::size_t> violations;  // rows whose step exceeds tol

  bool compliant(double tol) const { return max_increment <= tol; }
};

AngleReport angle_monotonicity_report(const PolarTrace& trace, double tol = 1e-8);

}  // namespace flamefront
