#include "flamefront/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace flamefront::asymptotics {
namespace {

void require_alpha_open(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha", "alpha must lie in (0,1)");
}

void require_negative(double x) {
  if (!(x < 0.0)) throw std::invalid_argument("x must be negative");
}

constexpr struct {
  Regime regime;
  std::string_view name;
} kRegimeNames[] = {
    {Regime::theta_near_one, "theta-near-one"},
    {Regime::theta_small, "theta-small"},
    {Regime::alpha_zero, "alpha-zero"},
    {Regime::alpha_one, "alpha-one"},
    {Regime::w_small_x, "w-small-x"},
    {Regime::w_large_x, "w-large-x"},
    {Regime::w0_profile, "w0-profile"},
    {Regime::w_upper_bound, "w-upper-bound"},
    {Regime::phi_zeta_small_x, "phi-zeta-small-x"},
    {Regime::phi_zeta_large_x, "phi-zeta-large-x"},
};

}  // namespace

std::string_view to_string(Regime r) {
  for (const auto& e : kRegimeNames)
    if (e.regime == r) return e.name;
  return "unknown";
}

Regime regime_from_string(std::string_view name) {
  std::string key(name);
  for (auto& ch : key)
    if (ch == '_') ch = '-';
  for (const auto& e : kRegimeNames)
    if (e.name == key) return e.regime;
  throw std::invalid_argument("unknown regime '" + std::string(name) + "'");
}

double w_asymptotic(double lambda, double alpha, double x, Branch branch) {
  require_alpha_open(alpha);
  require_negative(x);
  const double inv = 1.0 / (1.0 - alpha);
  if (branch == Branch::small_x) {
    const double coef =
        std::pow((1.0 - alpha) * (1.0 - alpha) / (2.0 * lambda * (1.0 + alpha)), inv);
    return coef * std::pow(-x, 2.0 * inv);
  }
  return std::pow(1.0 - alpha, inv) * std::pow(-x, inv);
}

double w0_profile(double lambda, double x) {
  if (x > 0.0) throw std::invalid_argument("x must be nonpositive");
  if (!(lambda > 0.0)) throw ParameterError("lambda", "lambda must be positive");
  return -x + lambda * std::expm1(x / lambda);
}

double w_upper_bound(double alpha, double x) {
  if (x > 0.0) throw std::invalid_argument("x must be nonpositive");
  require_alpha_open(alpha);
  return std::pow((1.0 - alpha) * (-x), 1.0 / (1.0 - alpha));
}

SpeedWidth front_theta_near_one(double theta, double lambda, double alpha) {
  validate_theta(theta);
  require_alpha_open(alpha);
  const double d = 1.0 - theta;
  const double c = std::sqrt(2.0 / (1.0 + alpha)) * std::pow(lambda, -0.5 * alpha) *
                   std::pow(d, 0.5 * (1.0 + alpha));
  const double r = std::sqrt(2.0 * (1.0 + alpha)) / (1.0 - alpha) *
                   std::pow(lambda, 0.5 * alpha) * std::pow(d, 0.5 * (1.0 - alpha));
  return {c, r};
}

SpeedWidth front_theta_small(double theta, double alpha) {
  validate_theta(theta);
  const double c = 1.0 / std::sqrt(theta);
  return {c, c / (1.0 - alpha)};
}

SpeedWidth front_alpha_one(double theta, double lambda) {
  validate_theta(theta);
  const double t = theta / (1.0 - theta);
  return {1.0 / std::sqrt(t + lambda * t * t), std::numeric_limits<double>::infinity()};
}

double kappa_alpha_zero(double theta) {
  validate_theta(theta);
  // theta k = 1 - e^{-k} rather than e^k = 1/(1 - theta k): no overflow and
  // the spurious root k = 0 sits outside the bracket.
  auto f = [theta](double k) { return -std::expm1(-k) - theta * k; };
  double lo = 1e-12;
  double hi = 1.0 / theta - 1e-12;
  if (!(f(lo) > 0.0 && f(hi) < 0.0)) {
    throw std::runtime_error("kappa root is not bracketed");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SpeedWidth front_alpha_zero(double theta) {
  const double c = std::sqrt(kappa_alpha_zero(theta));
  return {c, c};
}

PhiZeta phi_zeta_asymptotic(double lambda, double alpha, double x, Branch branch) {
  require_alpha_open(alpha);
  if (!(x > 0.0)) throw std::invalid_argument("x must be positive");
  if (branch == Branch::small_x) {
    const double phi = 1.0 - 0.5 * (1.0 - alpha) * x;
    const double zeta = std::pow(2.0 * lambda, -0.5 * alpha) *
                        std::pow(1.0 - alpha, 0.5 * (1.0 + alpha)) / std::sqrt(1.0 + alpha) *
                        std::pow(x, 0.5 * (1.0 + alpha));
    return {phi, zeta};
  }
  return {1.0 / ((1.0 - alpha) * x), std::sqrt((1.0 - alpha) * x)};
}

}  // namespace flamefront::asymptotics
