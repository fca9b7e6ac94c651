#include "doctest.h"

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "flamefront/asymptotics.hpp"
#include "flamefront/trajectory.hpp"
#include "oracles.hpp"

using namespace flamefront;

namespace {

ModelParams params(double lambda, double alpha) { return make_params(lambda, alpha); }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_SUITE("series_seed") {
  TEST_CASE("lambda=1 alpha=1/2 eps=0.1") {
    // C = (1/12)^2, w = C eps^4
    const auto s = series_seed(params(1.0, 0.5), 0.1);
    CHECK(s.w == doctest::Approx(1e-4 / 144.0).epsilon(1e-14));
    CHECK(s.wprime == doctest::Approx(-4.0 * 1e-3 / 144.0).epsilon(1e-14));
  }

  TEST_CASE("lambda=1 alpha=1/4 eps=0.1 against 50-digit arithmetic") {
    using big = boost::multiprecision::cpp_dec_float_50;
    const big base = big(0.5625) / big(2.5);
    const big expected = pow(base, big(4) / 3) * pow(big(1) / 10, big(8) / 3);
    const auto s = series_seed(params(1.0, 0.25), 0.1);
    CHECK(rel(s.w, expected.convert_to<double>()) < 1e-13);
  }

  TEST_CASE("vanishes at the origin") {
    const auto p = params(2.0, 0.3);
    const auto a = series_seed(p, 1e-3);
    const auto b = series_seed(p, 1e-6);
    CHECK(b.w < a.w);
    CHECK(std::abs(b.wprime) < std::abs(a.wprime));
    CHECK(series_seed(p, 1e-30).w < 1e-80);
  }

  TEST_CASE("rejects bad input") {
    CHECK_THROWS_AS(series_seed(params(1.0, 0.5), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(series_seed(params(1.0, 0.5), -1.0), std::invalid_argument);
    ModelParams p;
    p.alpha = 1.0 - 1e-9;
    CHECK_THROWS_AS(series_seed(p, 0.1), ParameterError);
  }
}

TEST_SUITE("params") {
  TEST_CASE("guardrails name the offending parameter") {
    try {
      make_params(1.0, 0.999);
      FAIL("expected ParameterError");
    } catch (const ParameterError& e) {
      CHECK(e.name() == "alpha");
      CHECK(std::string(e.what()).find("asymptotics alpha-one") != std::string::npos);
    }
    CHECK_THROWS_AS(make_params(-1.0, 0.5), ParameterError);
    CHECK_THROWS_AS(make_params(1.0, 0.001), ParameterError);
    ModelParams p;
    p.rel_tol = 0.0;
    CHECK_THROWS_AS(p.validate(), ParameterError);
    p.rel_tol = 1e-10;
    p.seed_offset = -1.0;
    CHECK_THROWS_AS(p.validate(), ParameterError);
  }
}

TEST_SUITE("extend and eval") {
  TEST_CASE("extending to the current reach is a no-op") {
    WTrajectory t(params(1.0, 0.5));
    t.extend(-2.0);
    const auto nodes = t.nodes();
    t.extend(t.reach());
    t.extend(-1.0);
    REQUIRE(t.nodes().size() == nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) CHECK(t.nodes()[i].w == nodes[i].w);
  }

  TEST_CASE("node sequence does not depend on how extension is split") {
    WTrajectory a(params(0.7, 0.4));
    WTrajectory b(params(0.7, 0.4));
    a.extend(-30.0);
    for (double x = -1.0; x > -30.0; x -= 3.7) b.extend(x);
    b.extend(-30.0);
    REQUIRE(a.nodes().size() == b.nodes().size());
    for (std::size_t i = 0; i < a.nodes().size(); ++i) {
      CHECK(a.nodes()[i].x == b.nodes()[i].x);
      CHECK(a.nodes()[i].K == b.nodes()[i].K);
    }
  }

  TEST_CASE("eval at the origin and at nodes") {
    WTrajectory t(params(1.0, 0.5));
    t.extend(-3.0);
    const auto o = t.eval(0.0);
    CHECK(o.w == 0.0);
    CHECK(o.wprime == 0.0);
    CHECK(o.I == 0.0);
    CHECK(o.K == 0.0);
    for (std::size_t i = 1; i < t.nodes().size(); i += 7) {
      const auto& n = t.nodes()[i];
      const auto e = t.eval(n.x);
      CHECK(e.w == n.w);
      CHECK(e.wprime == n.wprime);
      CHECK(e.I == n.I);
      CHECK(e.K == n.K);
    }
  }

  TEST_CASE("eval outside [reach, 0] throws") {
    WTrajectory t(params(1.0, 0.5));
    t.extend(-1.0);
    CHECK_THROWS_AS(t.eval(0.1), std::out_of_range);
    CHECK_THROWS_AS(t.eval(t.reach() - 1e-3), std::out_of_range);
  }

  TEST_CASE("midpoint dense output matches re-integration with halved steps") {
    // step size scales like tol^{1/5}: tol/32 halves the steps
    ModelParams p = params(1.0, 0.5);
    WTrajectory coarse(p);
    p.rel_tol /= 32.0;
    p.abs_tol /= 32.0;
    p.seed_offset = coarse.seed_offset();
    WTrajectory fine(p);
    coarse.extend(-8.0);
    fine.extend(-8.0);
    const auto& bp = coarse.breakpoints();
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
      const double s = 0.5 * (bp[i] + bp[i + 1]);
      const auto a = coarse.eval_log(s);
      const auto b = fine.eval_log(s);
      worst = std::max({worst, std::abs(a[0] - b[0]), std::abs(a[2] - b[2]), std::abs(a[3] - b[3])});
    }
    CHECK(worst < 10.0 * 1e-10);
  }

  TEST_CASE("w(-10) against brute-force RK4 from the same seed") {
    // The fixed-step oracle needs h << eps, so both start from eps = 1e-3.
    ModelParams p = params(1.0, 0.5);
    p.seed_offset = 1e-3;
    WTrajectory t(p);
    t.extend(-10.0);
    const double w = t.eval(-10.0).w;
    const auto seed = oracle::power_law_seed(1.0, 0.5, 1e-3);
    const auto bf = oracle::brute_force_rk4(1.0, 0.5, 1e-3, 10.0, 1e-5, seed);
    CHECK(rel(w, bf.w) < 1e-8);
  }

  TEST_CASE("large-|x| form is approached from below") {
    // ((1-a)|x|)^{1/(1-a)} is also the upper bound, and the approach is
    // slow: w/25 is only ~0.41 at x = -10 (brute-force value 10.2476).
    WTrajectory t(params(1.0, 0.5));
    t.extend(-400.0);
    double prev = 0.0;
    for (double x : {-10.0, -50.0, -120.0, -200.0, -400.0}) {
      const double ratio = t.eval(x).w / asymptotics::w_asymptotic(1.0, 0.5, x, asymptotics::Branch::large_x);
      CHECK(ratio < 1.0);
      CHECK(ratio > prev);
      prev = ratio;
    }
    CHECK(t.eval(-10.0).w == doctest::Approx(10.2476).epsilon(1e-4));
    CHECK(rel(t.eval(-120.0).w, 0.25 * 120.0 * 120.0) < 0.15);
  }

  TEST_CASE("lambda scaling of w: w(x|2) = 4 w(x/2|1) at alpha = 1/2") {
    WTrajectory t2(params(2.0, 0.5));
    WTrajectory t1(params(1.0, 0.5));
    t2.extend(-2.0);
    t1.extend(-1.0);
    CHECK(rel(t2.eval(-2.0).w, 4.0 * t1.eval(-1.0).w) < 10.0 * 1e-10);
  }
}

TEST_SUITE("trajectory invariants") {
  TEST_CASE("monotone, concave-ratio and upper bound on every node") {
    for (double lam : {0.2, 1.0, 5.0})
      for (double a : {0.25, 0.5, 0.75}) {
        CAPTURE(lam);
        CAPTURE(a);
        WTrajectory t(params(lam, a));
        t.extend(-60.0);
        const auto& nodes = t.nodes();
        int bad_mono = 0, bad_conc = 0, bad_bound = 0;
        for (std::size_t i = 1; i < nodes.size(); ++i) {
          const auto& n = nodes[i];
          if (!(n.w > nodes[i - 1].w) || n.wprime > 0.0 || !(n.I > nodes[i - 1].I)) ++bad_mono;
          const double wpp = (n.wprime + std::pow(n.w, a)) / lam;
          if (n.wprime * n.wprime - n.w * wpp < -1e-9) ++bad_conc;
          const double bound = asymptotics::w_upper_bound(a, n.x);
          if (n.w > bound * (1.0 + 1e-9)) ++bad_bound;
        }
        CHECK(bad_mono == 0);
        CHECK(bad_conc == 0);
        CHECK(bad_bound == 0);
      }
  }

  TEST_CASE("scaling law on a grid of x") {
    for (double a : {0.25, 0.5, 0.75}) {
      WTrajectory ref(params(1.0, a));
      ref.extend(-25.0);
      for (double lam : {0.2, 1.0, 5.0}) {
        WTrajectory t(params(lam, a));
        t.extend(-5.0);
        const double scale = std::pow(lam, 1.0 / (1.0 - a));
        double worst = 0.0;
        for (double x = -5.0; x <= -0.1 + 1e-12; x += 0.1) {
          const double w = t.eval(x).w;
          const double w_ref = scale * ref.eval(x / lam).w;
          worst = std::max(worst, std::abs(w - w_ref) / std::max(1.0, w));
        }
        CAPTURE(a);
        CAPTURE(lam);
        CHECK(worst <= 1e-6);
      }
    }
  }

  TEST_CASE("I and K agree with direct quadrature of their definitions") {
    WTrajectory t(params(1.0, 0.5));
    t.extend(-5.0);
    for (double x : {0.5, 1.0, 2.0, 5.0}) {
      auto wa = [&](double s) { return std::pow(t.eval(-s).w, 0.5); };
      const double I = oracle::simpson_graded(wa, x, 4000);
      const double K = oracle::simpson_graded([&](double s) { return wa(s) * std::exp(s - x); }, x, 4000);
      const auto n = t.eval(-x);
      CAPTURE(x);
      CHECK(rel(n.I, I) < 1e-8);
      CHECK(rel(n.K, K) < 1e-8);
    }
  }

  TEST_CASE("seeds at eps and eps/2 agree at x = -1") {
    ModelParams p = params(1.0, 0.5);
    WTrajectory auto_t(p);
    p.seed_offset = auto_t.seed_offset();
    WTrajectory a(p);
    p.seed_offset = auto_t.seed_offset() / 2.0;
    WTrajectory b(p);
    a.extend(-1.0);
    b.extend(-1.0);
    CHECK(rel(a.eval(-1.0).w, b.eval(-1.0).w) < 10.0 * 1e-10);
  }

  TEST_CASE("log form survives alpha near 1 where w underflows") {
    WTrajectory t(params(1.0, 0.995));
    t.extend(-50.0);
    const auto y = t.eval_log(1.0);
    CHECK(std::isfinite(y[0]));
    CHECK(y[0] < -700.0);  // w(-1) is far below the smallest double
    CHECK(t.eval(-1.0).w == 0.0);
    CHECK(y[3] > 0.0);
    CHECK(y[3] < 1.0);
  }
}
