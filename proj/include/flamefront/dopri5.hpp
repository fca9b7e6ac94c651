#pragma once

// Dormand-Prince 5(4) embedded Runge-Kutta pair with the fourth-order
// continuous extension of Hairer & Wanner (DOPRI5). Integrates forward in t
// only; callers map their marching direction onto increasing t.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace flamefront {

template <std::size_t N>
using State = std::array<double, N>;

class StepSizeUnderflow : public std::runtime_error {
 public:
  StepSizeUnderflow(double t, const std::string& what)
      : std::runtime_error(what), t_(t) {}
  double where() const noexcept { return t_; }

 private:
  double t_;
};

// Interpolating polynomial over one accepted step [t0, t0 + h].
template <std::size_t N>
struct DenseSegment {
  double t0 = 0.0;
  double h = 0.0;
  std::array<State<N>, 5> rc{};

  double t1() const { return t0 + h; }

  State<N> operator()(double t) const {
    const double th = (t - t0) / h;
    const double th1 = 1.0 - th;
    State<N> y;
    for (std::size_t i = 0; i < N; ++i) {
      y[i] = rc[0][i] +
             th * (rc[1][i] + th1 * (rc[2][i] + th * (rc[3][i] + th1 * rc[4][i])));
    }
    return y;
  }

  // Single component; avoids computing the whole state.
  double component(double t, std::size_t i) const {
    const double th = (t - t0) / h;
    const double th1 = 1.0 - th;
    return rc[0][i] +
           th * (rc[1][i] + th1 * (rc[2][i] + th * (rc[3][i] + th1 * rc[4][i])));
  }
};

struct StepControl {
  double safety = 0.9;
  double fac_min = 0.2;  // largest shrink per attempt
  double fac_max = 10.0;  // largest growth per step
  double h_max = 1e300;
  double h_min_rel = 1e-14;  // relative to |t|, plus an absolute floor
  double h_min_abs = 1e-300;
  int max_rejects = 60;
};

template <std::size_t N>
struct AcceptedStep {
  double t = 0.0;  // end of the step
  State<N> y{};
  State<N> dy{};
  DenseSegment<N> segment;
  int rejected = 0;
};

template <std::size_t N>
class Dopri5 {
 public:
  using Rhs = std::function<void(double, const State<N>&, State<N>&)>;
  // Fills the per-component error scale from the states at both ends of a
  // trial step. The step is accepted when the RMS of error/scale is <= 1.
  using Scale = std::function<void(const State<N>&, const State<N>&, State<N>&)>;

  Dopri5(Rhs rhs, Scale scale, StepControl control = {})
      : rhs_(std::move(rhs)), scale_(std::move(scale)), ctl_(control) {}

  void eval_rhs(double t, const State<N>& y, State<N>& dy) const { rhs_(t, y, dy); }

  // Advances (t, y) by one accepted step. `h` is the trial size on entry and
  // the proposal for the next step on exit. `dy` must equal rhs(t, y).
  AcceptedStep<N> step(double t, const State<N>& y, const State<N>& dy, double& h) const {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192,
                            a75 = -2187.0 / 6784, a76 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    static constexpr double d1 = -12715105075.0 / 11282082432.0,
                            d3 = 87487479700.0 / 32700410799.0,
                            d4 = -10690763975.0 / 1880347072.0,
                            d5 = 701980252875.0 / 199316789632.0,
                            d6 = -1453857185.0 / 822651844.0,
                            d7 = 69997945.0 / 29380423.0;

    State<N> k2, k3, k4, k5, k6, k7, tmp, y1, sc;
    int rejected = 0;
    for (;;) {
      h = std::min(h, ctl_.h_max);
      const double h_floor = std::max(ctl_.h_min_abs, ctl_.h_min_rel * std::abs(t));
      if (!(h > h_floor) || rejected > ctl_.max_rejects) {
        throw StepSizeUnderflow(t, "step size underflow at t = " + std::to_string(t));
      }
      for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * dy[i];
      rhs_(t + c2 * h, tmp, k2);
      for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * dy[i] + a32 * k2[i]);
      rhs_(t + c3 * h, tmp, k3);
      for (std::size_t i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (a41 * dy[i] + a42 * k2[i] + a43 * k3[i]);
      rhs_(t + c4 * h, tmp, k4);
      for (std::size_t i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (a51 * dy[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
      rhs_(t + c5 * h, tmp, k5);
      for (std::size_t i = 0; i < N; ++i)
        tmp[i] = y[i] + h * (a61 * dy[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                             a65 * k5[i]);
      rhs_(t + h, tmp, k6);
      for (std::size_t i = 0; i < N; ++i)
        y1[i] = y[i] + h * (a71 * dy[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] +
                            a76 * k6[i]);
      rhs_(t + h, y1, k7);

      bool finite = true;
      for (std::size_t i = 0; i < N; ++i) finite = finite && std::isfinite(y1[i]) && std::isfinite(k7[i]);
      double err = 0.0;
      if (finite) {
        scale_(y, y1, sc);
        for (std::size_t i = 0; i < N; ++i) {
          const double e = h * (e1 * dy[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                e6 * k6[i] + e7 * k7[i]) / sc[i];
          err += e * e;
        }
        err = std::sqrt(err / static_cast<double>(N));
      }
      if (!finite || !std::isfinite(err)) {
        h *= ctl_.fac_min;
        ++rejected;
        continue;
      }
      const double fac = std::clamp(ctl_.safety * std::pow(std::max(err, 1e-300), -0.2),
                                    ctl_.fac_min, ctl_.fac_max);
      if (err > 1.0) {
        h *= std::min(1.0, fac);
        ++rejected;
        continue;
      }

      AcceptedStep<N> out;
      out.t = t + h;
      out.y = y1;
      out.dy = k7;
      out.rejected = rejected;
      auto& seg = out.segment;
      seg.t0 = t;
      seg.h = h;
      for (std::size_t i = 0; i < N; ++i) {
        const double ydiff = y1[i] - y[i];
        const double bspl = h * dy[i] - ydiff;
        seg.rc[0][i] = y[i];
        seg.rc[1][i] = ydiff;
        seg.rc[2][i] = bspl;
        seg.rc[3][i] = ydiff - h * k7[i] - bspl;
        seg.rc[4][i] = h * (d1 * dy[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                            d6 * k6[i] + d7 * k7[i]);
      }
      // no growth right after a rejection
      h *= rejected > 0 ? std::min(1.0, fac) : fac;
      return out;
    }
  }

 private:
  Rhs rhs_;
  Scale scale_;
  StepControl ctl_;
};

}  // namespace flamefront
