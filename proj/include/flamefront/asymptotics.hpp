#pragma once

// Closed-form limits and leading-order asymptotics of the front. Pure
// functions; used as cross-checks and outside the solver's alpha window.

#include <string_view>

#include "flamefront/params.hpp"

namespace flamefront::asymptotics {

enum class Regime {
  theta_near_one,
  theta_small,
  alpha_zero,
  alpha_one,
  w_small_x,
  w_large_x,
  w0_profile,
  w_upper_bound,
  phi_zeta_small_x,
  phi_zeta_large_x,
};

std::string_view to_string(Regime r);
// Accepts both "theta-near-one" and "theta_near_one"; throws on unknown names.
Regime regime_from_string(std::string_view name);

enum class Branch { small_x, large_x };

struct SpeedWidth {
  double c;
  double r;  // +inf when the reaction zone is unbounded
};

struct PhiZeta {
  double phi;
  double zeta;
};

// Leading-order w at x < 0 near the origin (small_x) or far from it (large_x).
double w_asymptotic(double lambda, double alpha, double x, Branch branch);

// alpha -> 0 limit profile: -x + lambda (e^{x/lambda} - 1).
double w0_profile(double lambda, double x);

// [(1-alpha)(-x)]^{1/(1-alpha)}, an upper bound for w.
double w_upper_bound(double alpha, double x);

SpeedWidth front_theta_near_one(double theta, double lambda, double alpha);
SpeedWidth front_theta_small(double theta, double alpha);
// alpha = 1: c = [t + lambda t^2]^{-1/2} with t = theta/(1-theta); R = inf.
SpeedWidth front_alpha_one(double theta, double lambda);
// alpha = 0: c = R = sqrt(kappa), theta kappa = 1 - e^{-kappa}.
SpeedWidth front_alpha_zero(double theta);
double kappa_alpha_zero(double theta);

PhiZeta phi_zeta_asymptotic(double lambda, double alpha, double x, Branch branch);

}  // namespace flamefront::asymptotics
