#include "flamefront/params.hpp"

#include <cmath>
#include <sstream>

namespace flamefront {

void ModelParams::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda", "lambda must be positive and finite");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ParameterError("alpha", "alpha must lie in (0,1)");
  }
  if (alpha < kAlphaMin || alpha > kAlphaMax) {
    std::ostringstream msg;
    msg << "alpha must lie in [" << kAlphaMin << ", " << kAlphaMax
        << "] for the numerical solver; use the closed-form limit ("
        << (alpha < kAlphaMin ? "asymptotics alpha-zero" : "asymptotics alpha-one")
        << ") instead";
    throw ParameterError("alpha", msg.str());
  }
  if (!(rel_tol > 0.0)) throw ParameterError("rel_tol", "rel_tol must be positive");
  if (!(abs_tol > 0.0)) throw ParameterError("abs_tol", "abs_tol must be positive");
  if (seed_offset && !(*seed_offset > 0.0)) {
    throw ParameterError("seed_offset", "seed_offset must be positive");
  }
}

ModelParams make_params(double lambda, double alpha) {
  ModelParams p;
  p.lambda = lambda;
  p.alpha = alpha;
  p.validate();
  return p;
}

void validate_theta(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw ParameterError("theta", "theta must lie in (0,1)");
  }
}

}  // namespace flamefront
