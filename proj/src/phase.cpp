#include "flamefront/phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace flamefront {

PolarTrace to_polar(const WTrajectory& traj) {
  const auto& raw = traj.nodes();
  const auto& logs = traj.log_nodes();
  if (raw.size() < 2) throw std::invalid_argument("to_polar needs at least two nodes");

  PolarTrace trace;
  trace.rows.reserve(raw.size());
  // raw[0] is the origin; raw[i] pairs with logs[i-1]
  for (std::size_t i = raw.size(); i-- > 1;) {
    const ProfileNode& n = raw[i];
    const double g = logs[i - 1][1];
    if (!std::isfinite(g)) throw std::runtime_error("polar angle undefined at a non-terminal node");
    // atan2(w', w) written through g = -w'/w, valid even where w underflows
    const double angle = std::atan2(-g, 1.0);
    trace.rows.push_back({n.x, n.w, n.wprime, std::hypot(n.w, n.wprime), angle});
  }
  // terminal node: one-sided limit at the origin
  trace.rows.push_back({0.0, 0.0, 0.0, 0.0, -std::numbers::pi / 2});
  return trace;
}

AngleReport angle_monotonicity_report(const PolarTrace& trace, double tol) {
  if (trace.rows.empty()) throw std::invalid_argument("empty polar trace");
  AngleReport rep;
  for (std::size_t i = 0; i + 1 < trace.rows.size(); ++i) {
    const double inc = trace.rows[i + 1].angle - trace.rows[i].angle;
    if (inc > rep.max_increment) {
      rep.max_increment = inc;
      rep.index = i;
      rep.t = trace.rows[i].t;
    }
    if (inc > tol) rep.violations.push_back(i);
  }
  return rep;
}

}  // namespace flamefront
