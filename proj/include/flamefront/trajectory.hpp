#pragma once

// Numerical solution of the degenerate profile problem
//
//   lambda w'' - w' - w^alpha = 0   (x < 0),   w(0) = w'(0) = 0,
//
// marched in s = -x away from the origin. The state is carried in
// logarithmic form so that w neither underflows near the origin nor
// overflows far from it when alpha approaches 1:
//
//   y[0] = ln w
//   y[1] = g = -w'/w                       (> 0)
//   y[2] = ln I,  I(s) = int_0^s w^alpha
//   y[3] = phi = K/I,  K(s) = e^{-s} int_0^s w^alpha(t) e^{t} dt
//
// which obey
//
//   (ln w)' = g
//   g'      = (w^{alpha-1} - g)/lambda - g^2
//   (ln I)' = w^alpha / I
//   phi'    = (w^alpha / I)(1 - phi) - phi
//
// On (0, eps] the leading-order power law w = C s^{2/(1-alpha)} is used.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "flamefront/dopri5.hpp"
#include "flamefront/params.hpp"

namespace flamefront {

using LogState = State<4>;

// Raw values at one point of the trajectory, in the original x = -s.
struct ProfileNode {
  double x = 0.0;
  double w = 0.0;
  double wprime = 0.0;
  double I = 0.0;
  double K = 0.0;
};

struct SeedValue {
  double w;
  double wprime;
};

// Leading-order series at x = -eps.
SeedValue series_seed(const ModelParams& params, double eps);

// Log-form state of the leading-order power law at s > 0.
LogState series_log_state(const ModelParams& params, double s);

class InvariantBreach : public std::runtime_error {
 public:
  InvariantBreach(double x, const std::string& what) : std::runtime_error(what), x_(x) {}
  double where() const noexcept { return x_; }

 private:
  double x_;
};

class WTrajectory {
 public:
  // Seeds the trajectory. With params.seed_offset unset the offset is chosen
  // by halving until two successive seeds agree at s = kSeedCheckpoint.
  explicit WTrajectory(const ModelParams& params);

  static constexpr double kSeedCheckpoint = 1.0;

  const ModelParams& params() const { return params_; }
  double seed_offset() const { return eps_; }

  // Leftmost x reached so far (<= -eps).
  double reach() const { return -s_.back(); }

  // Appends accepted steps until reach() <= x_target. Existing nodes are
  // never touched, and the node sequence does not depend on how the
  // extension was split into calls.
  WTrajectory& extend(double x_target);

  // Raw node list: the origin first, then the seed, then accepted steps.
  const std::vector<ProfileNode>& nodes() const { return raw_; }

  // Dense output on [reach(), 0]. At a node returns the node values exactly.
  ProfileNode eval(double x) const;

  // Log-form state at s = -x in (0, -reach()].
  LogState eval_log(double s) const;

  // Accepted-step endpoints in s, ascending, starting at eps.
  const std::vector<double>& breakpoints() const { return s_; }
  const std::vector<LogState>& log_nodes() const { return y_; }

  std::size_t steps() const { return seg_.size(); }
  std::size_t rejected_steps() const { return rejected_; }

 private:
  WTrajectory(const ModelParams& params, double eps);
  void push_node(double s, const LogState& y);

  ModelParams params_;
  double eps_ = 0.0;
  std::vector<double> s_;
  std::vector<LogState> y_;
  std::vector<DenseSegment<4>> seg_;
  std::vector<ProfileNode> raw_;
  LogState dy_last_{};
  double h_next_ = 0.0;
  std::size_t rejected_ = 0;
};

ProfileNode to_raw(double s, const LogState& y);

}  // namespace flamefront
