#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace flamefront {

// Accepted reaction-order window for the numerical solver. Outside it the
// exponents 1/(1-alpha) and 2/(1-alpha) are badly conditioned and the
// closed-form limits in asymptotics.hpp should be used instead.
inline constexpr double kAlphaMin = 0.005;
inline constexpr double kAlphaMax = 0.995;

class ParameterError : public std::invalid_argument {
 public:
  ParameterError(std::string name, const std::string& what)
      : std::invalid_argument(what), name_(std::move(name)) {}
  // Name of the offending parameter ("theta", "lambda", "alpha", ...).
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

struct ModelParams {
  double lambda = 1.0;  // inverse Lewis number
  double alpha = 0.5;   // reaction order
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  // Series-start offset; empty means choose automatically.
  std::optional<double> seed_offset;

  // Throws ParameterError on any violated invariant.
  void validate() const;

  // 1/(1-alpha) and 2/(1-alpha), used everywhere.
  double inv_one_minus_alpha() const { return 1.0 / (1.0 - alpha); }
};

ModelParams make_params(double lambda, double alpha);

void validate_theta(double theta);

}  // namespace flamefront
