#include "flamefront/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace flamefront {
namespace {

struct SeriesCoefficients {
  double n;      // 2/(1-alpha)
  double p;      // alpha * n, exponent of w^alpha
  double ln_c;   // log of the leading coefficient
};

SeriesCoefficients series_coefficients(const ModelParams& params) {
  const double a = params.alpha;
  if (!(a > 0.0 && a < 1.0)) {
    throw ParameterError("alpha", "alpha must lie in (0,1)");
  }
  const double n = 2.0 / (1.0 - a);
  if (!std::isfinite(n) || n > 1e6) {
    throw ParameterError("alpha", "alpha too close to 1: series exponent 2/(1-alpha) overflows");
  }
  const double ln_c =
      std::log((1.0 - a) * (1.0 - a) / (2.0 * params.lambda * (1.0 + a))) / (1.0 - a);
  return {n, a * n, ln_c};
}

// phi of a pure power law w^alpha ~ s^p:
//   (p+1) s^{-(p+1)} int_0^s t^p e^{-(s-t)} dt = sum_k (-s)^k / prod_{j=1..k} (p+1+j)
double power_law_phi(double p, double s) {
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k < 400; ++k) {
    term *= -s / (p + 1.0 + k);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

double state_distance(const LogState& a, const LogState& b) {
  double d = std::abs(a[0] - b[0]);
  d = std::max(d, std::abs(a[1] - b[1]) / std::max(std::abs(a[1]), std::abs(b[1])));
  d = std::max(d, std::abs(a[2] - b[2]));
  d = std::max(d, std::abs(a[3] - b[3]));
  return d;
}

}  // namespace

SeedValue series_seed(const ModelParams& params, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("series_seed: eps must be positive");
  const auto sc = series_coefficients(params);
  const double ln_w = sc.ln_c + sc.n * std::log(eps);
  const double w = std::exp(ln_w);
  return {w, -sc.n / eps * w};
}

LogState series_log_state(const ModelParams& params, double s) {
  const auto sc = series_coefficients(params);
  const double ln_s = std::log(s);
  LogState y;
  y[0] = sc.ln_c + sc.n * ln_s;
  y[1] = sc.n / s;
  y[2] = params.alpha * sc.ln_c + (sc.p + 1.0) * ln_s - std::log(sc.p + 1.0);
  y[3] = power_law_phi(sc.p, s);
  return y;
}

ProfileNode to_raw(double s, const LogState& y) {
  ProfileNode n;
  n.x = -s;
  n.w = std::exp(y[0]);
  n.wprime = -y[1] * n.w;
  n.I = std::exp(y[2]);
  n.K = y[3] * n.I;
  return n;
}

WTrajectory::WTrajectory(const ModelParams& params, double eps) : params_(params), eps_(eps) {
  raw_.push_back(ProfileNode{});  // origin
  const LogState y0 = series_log_state(params_, eps_);
  push_node(eps_, y0);
  const double a = params_.alpha;
  const double lam = params_.lambda;
  const double wam1 = std::exp((a - 1.0) * y0[0]);
  const double h = std::exp(a * y0[0] - y0[2]);
  dy_last_ = {y0[1], (wam1 - y0[1]) / lam - y0[1] * y0[1], h, h * (1.0 - y0[3]) - y0[3]};
  h_next_ = 0.05 * eps_;
}

WTrajectory::WTrajectory(const ModelParams& params) {
  params.validate();
  if (params.seed_offset) {
    *this = WTrajectory(params, *params.seed_offset);
    return;
  }
  constexpr int kMaxHalvings = 40;
  double eps = 1e-2 * std::min(1.0, params.lambda);
  WTrajectory prev(params, eps);
  prev.extend(-kSeedCheckpoint);
  double last_gap = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kMaxHalvings; ++k) {
    eps *= 0.5;
    WTrajectory cur(params, eps);
    cur.extend(-kSeedCheckpoint);
    last_gap = state_distance(prev.eval_log(kSeedCheckpoint), cur.eval_log(kSeedCheckpoint));
    if (last_gap <= 10.0 * params.rel_tol) {
      cur.params_.seed_offset = eps;
      *this = std::move(cur);
      return;
    }
    prev = std::move(cur);
  }
  std::ostringstream msg;
  msg << "automatic seed offset did not settle: successive seeds still differ by " << last_gap
      << " at eps = " << eps;
  throw std::runtime_error(msg.str());
}

void WTrajectory::push_node(double s, const LogState& y) {
  s_.push_back(s);
  y_.push_back(y);
  raw_.push_back(to_raw(s, y));
}

WTrajectory& WTrajectory::extend(double x_target) {
  const double s_target = -x_target;
  if (s_.back() >= s_target) return *this;

  const double a = params_.alpha;
  const double lam = params_.lambda;
  const double rtol = params_.rel_tol;
  const double atol = params_.abs_tol;
  Dopri5<4> stepper(
      [a, lam](double, const LogState& y, LogState& dy) {
        const double g = y[1];
        const double wam1 = std::exp((a - 1.0) * y[0]);
        const double h = std::exp(a * y[0] - y[2]);
        dy[0] = g;
        dy[1] = (wam1 - g) / lam - g * g;
        dy[2] = h;
        dy[3] = h * (1.0 - y[3]) - y[3];
      },
      [rtol, atol](const LogState& y0, const LogState& y1, LogState& sc) {
        // ln w and ln I errors are relative errors of w and I
        sc[0] = rtol;
        sc[1] = atol + rtol * std::max(std::abs(y0[1]), std::abs(y1[1]));
        sc[2] = rtol;
        sc[3] = atol + rtol * std::max(std::abs(y0[3]), std::abs(y1[3]));
      });

  constexpr std::size_t kMaxSteps = 50'000'000;
  while (s_.back() < s_target) {
    if (seg_.size() >= kMaxSteps) {
      throw std::runtime_error("profile integration exceeded the step budget");
    }
    double s = s_.back();
    AcceptedStep<4> st;
    try {
      st = stepper.step(s, y_.back(), dy_last_, h_next_);
    } catch (const StepSizeUnderflow& e) {
      std::ostringstream msg;
      msg << "profile integration: step size underflow at x = " << -e.where();
      throw StepSizeUnderflow(-e.where(), msg.str());
    }
    if (st.y[1] < -atol) {
      std::ostringstream msg;
      msg << "internal consistency failure: w' became positive at x = " << -st.t;
      throw InvariantBreach(-st.t, msg.str());
    }
    // w' <= 0 within tolerance
    if (st.y[1] < 0.0) st.y[1] = 0.0;
    rejected_ += static_cast<std::size_t>(st.rejected);
    seg_.push_back(st.segment);
    dy_last_ = st.dy;
    push_node(st.t, st.y);
  }
  return *this;
}

LogState WTrajectory::eval_log(double s) const {
  if (!(s > 0.0)) throw std::out_of_range("eval_log: s must be positive");
  if (s <= eps_) return s == eps_ ? y_.front() : series_log_state(params_, s);
  if (s > s_.back()) {
    std::ostringstream msg;
    msg << "x = " << -s << " lies beyond the trajectory reach " << reach();
    throw std::out_of_range(msg.str());
  }
  auto it = std::upper_bound(s_.begin(), s_.end(), s);
  const auto idx = static_cast<std::size_t>(it - s_.begin()) - 1;
  if (s_[idx] == s) return y_[idx];
  return seg_[idx](s);
}

ProfileNode WTrajectory::eval(double x) const {
  if (x > 0.0 || x < reach()) {
    std::ostringstream msg;
    msg << "x = " << x << " outside [" << reach() << ", 0]";
    throw std::out_of_range(msg.str());
  }
  if (x == 0.0) return raw_.front();
  const double s = -x;
  auto it = std::lower_bound(s_.begin(), s_.end(), s);
  if (it != s_.end() && *it == s) return raw_[static_cast<std::size_t>(it - s_.begin()) + 1];
  return to_raw(s, eval_log(s));
}

}  // namespace flamefront
