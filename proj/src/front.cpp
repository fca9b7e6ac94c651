#include "flamefront/front.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "flamefront/dopri5.hpp"

namespace flamefront {
namespace {

LogState log_state_at(WTrajectory& traj, double x) {
  if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
  if (-traj.reach() < x) traj.extend(-x);
  return traj.eval_log(x);
}

// int_0^sigma f(s) ds, split at the trajectory breakpoints so every piece
// is smooth. The seed piece [0, eps] carries the endpoint power law.
template <class F>
double integrate_over_trajectory(const WTrajectory& traj, double sigma, F f) {
  const auto& bp = traj.breakpoints();
  const double eps = traj.seed_offset();
  double total = 0.0;
  if (sigma <= eps) {
    boost::math::quadrature::tanh_sinh<double> ts;
    return ts.integrate(f, 0.0, sigma);
  }
  boost::math::quadrature::tanh_sinh<double> ts;
  total += ts.integrate(f, 0.0, eps);
  for (std::size_t i = 0; i + 1 < bp.size() && bp[i] < sigma; ++i) {
    const double b = std::min(bp[i + 1], sigma);
    total += boost::math::quadrature::gauss<double, 15>::integrate(f, bp[i], b);
  }
  return total;
}

// Temperature on the reaction zone, integrated in tau = -xi from the
// trailing interface: du/dtau = -u', du'/dtau = v^alpha - c u'.
struct TemperatureSolution {
  std::vector<double> tau;  // breakpoints
  std::vector<DenseSegment<2>> seg;
  State<2> end{};

  State<2> at(double t) const {
    if (t <= 0.0) return {1.0, 0.0};
    if (t >= tau.back()) return end;
    auto it = std::upper_bound(tau.begin(), tau.end(), t);
    return seg[static_cast<std::size_t>(it - tau.begin()) - 1](t);
  }
};

TemperatureSolution integrate_temperature(const FrontSolution& f) {
  const double c = f.c_star;
  const double alpha = f.params.alpha;
  const double ln_a = f.ln_amplitude();
  const double r = f.r_star;
  const double sigma = f.sigma_star;
  const WTrajectory& traj = *f.traj;
  const double rtol = f.params.rel_tol;
  const double atol = f.params.abs_tol;

  Dopri5<2> stepper(
      [&](double t, const State<2>& y, State<2>& dy) {
        const double s = std::min(c * t, sigma);
        const double va = s > 0.0 ? std::exp(alpha * (ln_a + traj.eval_log(s)[0])) : 0.0;
        dy[0] = -y[1];
        dy[1] = va - c * y[1];
      },
      [rtol, atol](const State<2>& y0, const State<2>& y1, State<2>& sc) {
        for (std::size_t i = 0; i < 2; ++i)
          sc[i] = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
      });

  TemperatureSolution out;
  State<2> y{1.0, 0.0};
  State<2> dy;
  stepper.eval_rhs(0.0, y, dy);
  double t = 0.0;
  double h = 1e-6 * r;
  out.tau.push_back(0.0);
  while (t < r) {
    const bool last = t + h >= r;
    if (last) h = r - t;
    double h_try = h;
    auto st = stepper.step(t, y, dy, h_try);
    // a rejected final step comes back shorter and is no longer final
    const bool hit_end = last && st.segment.h == h;
    t = hit_end ? r : st.t;
    y = st.y;
    dy = st.dy;
    st.segment.h = t - st.segment.t0;
    out.seg.push_back(st.segment);
    out.tau.push_back(t);
    h = h_try;
  }
  out.end = y;
  return out;
}

}  // namespace

double phi(WTrajectory& traj, double x) { return log_state_at(traj, x)[3]; }

double zeta(WTrajectory& traj, double x) {
  const double a = traj.params().alpha;
  return std::exp(0.5 * (1.0 - a) * log_state_at(traj, x)[2]);
}

double solve_sigma(WTrajectory& traj, double theta, const SolverOptions& opts) {
  validate_theta(theta);
  if (!(opts.sigma_tol > 0.0)) throw std::invalid_argument("sigma tolerance must be positive");
  double lo = 1.0;
  double hi = 1.0;
  double f_hi = phi(traj, hi);
  if (f_hi >= theta) {
    while (f_hi >= theta) {
      if (2.0 * hi > opts.max_x) {
        std::ostringstream msg;
        msg << "bracket expansion reached x = " << hi << " (ceiling " << opts.max_x
            << ") with phi = " << f_hi << " still >= theta = " << theta;
        throw BracketError(hi, f_hi, msg.str());
      }
      lo = hi;
      hi *= 2.0;
      f_hi = phi(traj, hi);
    }
  } else {
    while (phi(traj, lo) <= theta) {
      hi = lo;
      lo *= 0.5;
      if (lo < 1e-300) throw std::runtime_error("lower bracket for sigma* collapsed");
    }
  }
  while (hi - lo > opts.sigma_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    const double f = phi(traj, mid);
    if (f == theta) return mid;
    (f > theta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double solve_sigma(const ModelParams& params, double theta, double tol) {
  WTrajectory traj(params);
  SolverOptions opts;
  opts.sigma_tol = tol;
  return solve_sigma(traj, theta, opts);
}

double FrontSolution::ln_amplitude() const {
  return -2.0 / (1.0 - params.alpha) * std::log(c_star);
}

FrontSolution assemble_front(std::shared_ptr<const WTrajectory> traj, double theta, double sigma) {
  FrontSolution f;
  f.theta = theta;
  f.params = traj->params();
  f.sigma_star = sigma;
  const LogState y = traj->eval_log(sigma);
  f.c_star = std::exp(0.5 * (1.0 - f.params.alpha) * y[2]);
  f.r_star = sigma / f.c_star;
  f.a_coef = 1.0 - std::exp(f.ln_amplitude() + y[0]);
  f.traj = std::move(traj);
  return f;
}

FrontSolution solve_front(const ModelParams& params, double theta, const SolverOptions& opts) {
  validate_theta(theta);
  auto traj = std::make_shared<WTrajectory>(params);
  const double sigma = solve_sigma(*traj, theta, opts);
  return assemble_front(std::move(traj), theta, sigma);
}

double default_xi_min(const FrontSolution& front) {
  return -front.r_star - 5.0 / front.c_star;
}

ProfileTable reconstruct_profiles(const FrontSolution& front, double xi_min, std::size_t n_points) {
  if (n_points < 16) throw std::invalid_argument("n_points must be at least 16");
  if (!(xi_min < -front.r_star)) throw std::invalid_argument("xi_min must lie below -R*");

  const double c = front.c_star;
  const double r = front.r_star;
  const double lam = front.params.lambda;
  const double theta = front.theta;
  const double a = front.a_coef;
  const double sigma = front.sigma_star;
  const double ln_amp = front.ln_amplitude();
  const auto temp = integrate_temperature(front);

  ProfileTable table;
  table.xi_ign = -r;
  table.xi_tr = 0.0;
  const std::size_t n_up = (n_points + 1) / 2;
  table.rows.reserve(n_up + n_points);
  for (std::size_t k = 0; k < n_up; ++k) {
    const double xi = xi_min + (-r - xi_min) * static_cast<double>(k) / static_cast<double>(n_up);
    const double e_u = std::exp(c * (xi + r));
    const double e_v = std::exp(c * (xi + r) / lam);
    table.rows.push_back({xi, theta * e_u, 1.0 - a * e_v, c * theta * e_u, -a * c / lam * e_v});
  }
  table.ign_row = table.rows.size();
  for (std::size_t j = 0; j < n_points; ++j) {
    const double frac = 1.0 - static_cast<double>(j) / static_cast<double>(n_points - 1);
    const double s = sigma * frac;
    ProfileRow row{};
    row.xi = j == 0 ? -r : (s > 0.0 ? -s / c : 0.0);
    if (s > 0.0) {
      const LogState y = front.traj->eval_log(s);
      row.v = std::exp(ln_amp + y[0]);
      row.vprime = -c * y[1] * row.v;
    }
    const auto ut = temp.at(j == 0 ? r : s / c);
    row.u = ut[0];
    row.uprime = ut[1];
    table.rows.push_back(row);
  }
  return table;
}

double ResidualReport::max() const {
  return std::max({ignition, flux, ode, c_identity, theta_identity});
}

ResidualReport validate_front(const FrontSolution& front, const ProfileTable& profile) {
  ResidualReport rep;
  const double c = front.c_star;
  const double lam = front.params.lambda;
  const double alpha = front.params.alpha;
  const double theta = front.theta;
  const double sigma = front.sigma_star;
  const double ln_amp = front.ln_amplitude();
  const WTrajectory& traj = *front.traj;

  const ProfileRow& ign = profile.rows.at(profile.ign_row);
  rep.ignition = std::max(std::abs(ign.u - theta), std::abs(ign.uprime - c * theta));
  rep.flux = std::abs(c * (1.0 - ign.v) + lam * ign.vprime);

  // Once-integrated equations from xi to the trailing interface:
  //   u' + c(1 - u) = int_xi^0 v^alpha,   c v - lambda v' = int_xi^0 v^alpha,
  // with int_xi^0 v^alpha = A^alpha I(-c xi) / c from the trajectory.
  const double ln_scale = alpha * ln_amp - std::log(c);
  for (std::size_t i = profile.ign_row; i < profile.rows.size(); ++i) {
    const ProfileRow& row = profile.rows[i];
    const double s = std::min(-c * row.xi, sigma);
    const double source = s > 0.0 ? std::exp(ln_scale + traj.eval_log(s)[2]) : 0.0;
    const double r_u = std::abs(row.uprime + c * (1.0 - row.u) - source);
    const double r_v = std::abs(c * row.v - lam * row.vprime - source);
    rep.ode = std::max({rep.ode, r_u, r_v});
  }

  // Direct quadrature of v^alpha on the dense output, in s = -c xi.
  auto va = [&](double s) {
    return s > 0.0 ? std::exp(alpha * (ln_amp + traj.eval_log(s)[0])) : 0.0;
  };
  const double int_v = integrate_over_trajectory(traj, sigma, va) / c;
  const double int_ve =
      integrate_over_trajectory(traj, sigma, [&](double s) { return va(s) * std::exp(s - sigma); }) /
      c;
  rep.c_identity = std::abs(int_v - c);
  rep.theta_identity = std::abs(int_ve - c * theta);
  return rep;
}

}  // namespace flamefront
