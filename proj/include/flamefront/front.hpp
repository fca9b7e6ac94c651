#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "flamefront/params.hpp"
#include "flamefront/trajectory.hpp"

namespace flamefront {

struct SolverOptions {
  double sigma_tol = 1e-10;  // relative bracket width on sigma*
  double max_x = 1e6;        // ceiling for upper-bracket doubling
};

// Upper-bracket expansion hit the ceiling before phi dropped below theta.
class BracketError : public std::runtime_error {
 public:
  BracketError(double x, double phi, const std::string& what)
      : std::runtime_error(what), x_(x), phi_(phi) {}
  double x_reached() const noexcept { return x_; }
  double phi_reached() const noexcept { return phi_; }

 private:
  double x_;
  double phi_;
};

// phi(x) = K(x)/I(x), the exponentially weighted mean of w^alpha over
// [-x, 0]. Extends the trajectory to -x if needed.
double phi(WTrajectory& traj, double x);

// zeta(x) = I(x)^{(1-alpha)/2}. Extends the trajectory to -x if needed.
double zeta(WTrajectory& traj, double x);

// Unique root of phi(sigma) = theta by doubling then bisection.
double solve_sigma(WTrajectory& traj, double theta, const SolverOptions& opts = {});
double solve_sigma(const ModelParams& params, double theta, double tol);

struct FrontSolution {
  double theta = 0.0;
  ModelParams params;
  double sigma_star = 0.0;  // c* R*
  double c_star = 0.0;
  double r_star = 0.0;
  double a_coef = 0.0;  // upstream reactant: v = 1 - a exp(c(xi+R)/lambda)
  std::shared_ptr<const WTrajectory> traj;

  // ln A with A = c^{-2/(1-alpha)}, the amplitude in v(xi) = A w(c xi).
  double ln_amplitude() const;
};

FrontSolution solve_front(const ModelParams& params, double theta, const SolverOptions& opts = {});

// Assembles a solution from an already extended trajectory and a given
// sigma. Exposed so that inconsistent fronts can be built deliberately.
FrontSolution assemble_front(std::shared_ptr<const WTrajectory> traj, double theta, double sigma);

struct ProfileRow {
  double xi;
  double u;
  double v;
  double uprime;
  double vprime;
};

struct ProfileTable {
  std::vector<ProfileRow> rows;  // ascending xi
  double xi_ign = 0.0;           // -R*
  double xi_tr = 0.0;
  std::size_t ign_row = 0;  // first reaction-zone row, xi == xi_ign
};

// -R* - 5/c*: five e-folding lengths of the upstream temperature.
double default_xi_min(const FrontSolution& front);

ProfileTable reconstruct_profiles(const FrontSolution& front, double xi_min, std::size_t n_points);

struct ResidualReport {
  double ignition = 0.0;        // |u(-R)-theta|, |u'(-R)-c theta|
  double flux = 0.0;            // |c(1 - v(-R+)) + lambda v'(-R+)|
  double ode = 0.0;             // integrated-form residuals on the reaction zone
  double c_identity = 0.0;      // |int v^alpha - c|
  double theta_identity = 0.0;  // |int v^alpha e^{-c(xi+R)} - c theta|

  double max() const;
};

ResidualReport validate_front(const FrontSolution& front, const ProfileTable& profile);

}  // namespace flamefront
