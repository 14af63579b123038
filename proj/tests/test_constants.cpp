#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hyperfrac/constants.hpp"
#include "hyperfrac/quadrature.hpp"
#include "hyperfrac/specialfn.hpp"
#include "hyperfrac/stencils.hpp"

using namespace hyperfrac;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;

// int_0^inf (1-cos t)^m t^{-1-2s} dt.  The first half period carries the
// t^{2m-1-2s} endpoint behavior and goes to a singularity-aware rule; the
// rest is smooth and oscillatory, half-period Gauss panels out to T, then
// the cosine-mode expansion (1-cos t)^m = 2^{-m} sum_k w_k cos(kt) gives
// the tail: an exact power term for the mean plus two integrations by
// parts per mode.
double osc_integral(int m, double s) {
  boost::math::quadrature::tanh_sinh<double> ts;
  const GaussRule& gr = gauss_rule(14);
  Stencil st = make_stencil(m);
  auto f = [&](double t) {
    return std::pow(1.0 - std::cos(t), double(m)) * std::pow(t, -1.0 - 2.0 * s);
  };
  // near 0 the numerator underflows against the singular power; switch to
  // the series form (t^2/2)^m (1 - t^2/12 + ...) there
  auto f0 = [&](double t) {
    if (t > 1e-4) return f(t);
    double corr = 1.0 - t * t / 12.0 + t * t * t * t / 360.0;
    return std::pow(0.5, double(m)) * std::pow(corr, double(m)) *
           std::pow(t, 2.0 * m - 1.0 - 2.0 * s);
  };
  double acc = ts.integrate(f0, 0.0, kPi);
  const long np = 10000;
  for (long j = 1; j < np; ++j) {
    double a = j * kPi, b = (j + 1) * kPi;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a), p = 0.0;
    for (std::size_t i = 0; i < gr.nodes.size(); ++i)
      p += gr.weights[i] * f(mid + half * gr.nodes[i]);
    acc += p * half;
  }
  const double T = np * kPi;
  const double p1 = 1.0 + 2.0 * s;
  double tail = double(st.w(0)) * std::pow(T, -2.0 * s) / (2.0 * s);
  for (int k = 1; k <= m; ++k) {
    double kk = k;
    double ibp = -std::sin(kk * T) * std::pow(T, -p1) / kk +
                 p1 * std::cos(kk * T) * std::pow(T, -p1 - 1.0) / (kk * kk);
    tail += 2.0 * double(st.w(k)) * ibp;
  }
  return acc + std::pow(2.0, -double(m)) * tail;
}

// int_{S^{N-1}} |theta_1|^{2s} dsigma(theta)
double angular_factor(int N, double s) {
  boost::math::quadrature::tanh_sinh<double> ts;
  if (N == 1) return 2.0;
  if (N == 2)
    return 4.0 * ts.integrate(
                     [&](double u) {
                       return std::pow(std::fabs(std::cos(u)), 2.0 * s);
                     },
                     0.0, 0.5 * kPi);
  return 4.0 * kPi *
         ts.integrate([&](double u) { return std::pow(u, 2.0 * s); }, 0.0, 1.0);
}

}  // namespace

TEST_CASE("parameter split and validation") {
  FracParams p{1, 2, 1.5};
  CHECK(!p.s_is_integer());
  CHECK(p.n() == 1);
  CHECK(p.sigma() == doctest::Approx(0.5));
  FracParams q{2, 3, 2.0};
  CHECK(q.s_is_integer());
  CHECK(q.n() == 2);
  CHECK(q.sigma() == 0.0);
  CHECK_THROWS_AS((FracParams{1, 1, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FracParams{1, 0, 0.5}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((FracParams{0, 1, 0.5}.validate()), std::invalid_argument);
  CHECK_NOTHROW((FracParams{3, 2, 1.999}.validate()));
}

TEST_CASE("alternating sum small closed forms") {
  CHECK(p_sum(1, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
  for (double s : {0.3, 0.8, 1.3}) {
    // m = 2: -binom(4,1) + binom(4,0) 2^{2s}
    CHECK(p_sum(2, s) ==
          doctest::Approx(-4.0 + std::pow(2.0, 2.0 * s)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(p_sum(0, 0.5), std::invalid_argument);
}

TEST_CASE("normalizing constant known points") {
  // N = 1, m = 1, s = 1/2: the classical half Laplacian constant 1/pi
  auto c = norm_constant({1, 1, 0.5});
  CHECK(c.branch == ConstantBranch::NonIntegerS);
  CHECK(c.value == doctest::Approx(1.0 / kPi).epsilon(1e-13));

  // N = 1, m = 2, s = 1 on the integer branch:
  // 4 Gamma(3/2) 1! / (2 sqrt(pi) * 4 ln 2) = 1 / (4 ln 2)
  auto ci = norm_constant({1, 2, 1.0});
  CHECK(ci.branch == ConstantBranch::IntegerS);
  CHECK(ci.value ==
        doctest::Approx(1.0 / (4.0 * std::log(2.0))).epsilon(1e-13));

  CHECK(branch_name(ci.branch) == "integer-s");
  CHECK(branch_name(c.branch) == "non-integer-s");
}

TEST_CASE("branches meet continuously at integer s") {
  for (int N : {1, 2}) {
    for (int m : {2, 3}) {
      double at = norm_constant({N, m, 1.0}).value;
      double lo = norm_constant({N, m, 1.0 - 1e-7}).value;
      double hi = norm_constant({N, m, 1.0 + 1e-7}).value;
      CHECK(std::fabs(lo - at) / at < 1e-4);
      CHECK(std::fabs(hi - at) / at < 1e-4);
    }
  }
}

TEST_CASE("constant against the oscillatory integral identity") {
  // 2/c = 2^m int (1-cos y_1)^m |y|^{-N-2s} dy, split into the radial
  // oscillatory factor and the angular moment
  for (int N : {1, 2, 3}) {
    for (int m : {1, 2, 3}) {
      for (double s : {0.3, 0.5, 1.0, 1.5, 2.5}) {
        if (!(s < m)) continue;
        double lhs = 2.0 / norm_constant({N, m, s}).value;
        double rhs =
            std::pow(2.0, double(m)) * osc_integral(m, s) * angular_factor(N, s);
        INFO("N=", N, " m=", m, " s=", s);
        CHECK(std::fabs(lhs - rhs) / std::fabs(lhs) < 1e-5);
      }
    }
  }
}

TEST_CASE("closed-form integral known values") {
  // m = 1, s = 1/2: int_0^inf rho^{-1/2}/(rho+1) = pi
  CHECK(closed_form_integral(1, 0.5) == doctest::Approx(kPi).epsilon(1e-13));
  // m = 2, s = 1: antiderivative (1/3) ln((rho+1)/(rho+4)) gives (2/3) ln 2
  CHECK(closed_form_integral(2, 1.0) ==
        doctest::Approx(2.0 / 3.0 * std::log(2.0)).epsilon(1e-13));
  CHECK_THROWS_AS(closed_form_integral(1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(closed_form_integral(2, 0.0), std::invalid_argument);
}

TEST_CASE("closed-form integral vs adaptive quadrature") {
  boost::math::quadrature::tanh_sinh<double> ts;
  for (int m = 1; m <= 4; ++m) {
    for (double s : {0.5, 1.0, 1.7, 2.0, 3.2}) {
      if (!(s < m)) continue;
      // split at rho = 1; the far half maps back to (0,1) by rho -> 1/rho
      auto base = [&](double rho) {
        double den = 1.0;
        for (int k = 1; k <= m; ++k) den *= rho + double(k) * k;
        return 1.0 / den;
      };
      double near = ts.integrate(
          [&](double rho) { return std::pow(rho, s - 1.0) * base(rho); }, 0.0,
          1.0);
      double far = ts.integrate(
          [&](double u) {
            double den = 1.0;
            for (int k = 1; k <= m; ++k) den *= 1.0 + double(k) * k * u;
            return std::pow(u, double(m) - s - 1.0) / den;
          },
          0.0, 1.0);
      double oracle = near + far;
      INFO("m=", m, " s=", s);
      CHECK(std::fabs(closed_form_integral(m, s) - oracle) /
                std::fabs(oracle) <
            1e-8);
    }
  }
}

TEST_CASE("moment ball integral vs quadrature") {
  boost::math::quadrature::tanh_sinh<double> ts;
  const int m = 2;
  for (double s : {0.4, 1.5}) {
    // N = 1: int_{-1}^{1} |y|^{2m-1-2s} dy = 1/(m-s)
    CHECK(moment_ball_integral(1, m, s, {m}) ==
          doctest::Approx(1.0 / (m - s)).epsilon(1e-12));
    // N = 2, both admissible multi-indices (up to symmetry): the radial
    // factor is 1/(2m-2s), the angular factor a trigonometric moment
    for (auto alpha : std::vector<std::vector<int>>{{1, 1}, {2, 0}}) {
      double ang = ts.integrate(
          [&](double t) {
            return std::pow(std::cos(t), 2.0 * alpha[0]) *
                   std::pow(std::sin(t), 2.0 * alpha[1]);
          },
          0.0, 2.0 * kPi);
      double oracle = ang / (2.0 * (m - s));
      INFO("s=", s, " alpha=(", alpha[0], ",", alpha[1], ")");
      CHECK(std::fabs(moment_ball_integral(2, m, s, alpha) - oracle) /
                oracle <
            1e-6);
    }
  }
  CHECK_THROWS_AS(moment_ball_integral(2, 2, 0.5, {1}), std::invalid_argument);
  CHECK_THROWS_AS(moment_ball_integral(2, 2, 0.5, {3, 0}),
                  std::invalid_argument);
}

TEST_CASE("moment ball integral limit toward the top order") {
  // (2m)!/(2 alpha)! * (c/2) * integral -> m!/alpha! as s -> m
  auto fact = [](int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  struct Case {
    int N;
    std::vector<int> alpha;
  };
  const int m = 2;
  for (const Case& c : {Case{1, {2}}, Case{2, {1, 1}}, Case{2, {2, 0}}}) {
    double s = m - 1e-4;
    double cv = norm_constant({c.N, m, s}).value;
    double integral = moment_ball_integral(c.N, m, s, c.alpha);
    double fact2a = 1.0, facta = 1.0;
    for (int a : c.alpha) {
      fact2a *= fact(2 * a);
      facta *= fact(a);
    }
    double lhs = fact(2 * m) / fact2a * 0.5 * cv * integral;
    double want = fact(m) / facta;
    INFO("N=", c.N);
    CHECK(std::fabs(lhs - want) / want < 1e-3);
  }
}

TEST_CASE("constant limits closed form and numeric probes") {
  // closed forms: 2 (m!)^2 Gamma(N/2) / ((2m)! pi^{N/2}) at zero and
  // 2^{2m+1} m! Gamma(N/2+m) / ((2m)! pi^{N/2}) at m
  auto lim11 = constant_limits(1, 1);
  CHECK(lim11.at_zero ==
        doctest::Approx(2.0 * kSqrtPi / (2.0 * kSqrtPi)).epsilon(1e-13));
  CHECK(lim11.at_m ==
        doctest::Approx(8.0 * gamma_fn(1.5) / (2.0 * kSqrtPi)).epsilon(1e-13));

  for (auto [N, m] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {3, 2}}) {
    auto lim = constant_limits(N, m);
    double s0 = 1e-5;
    double c0 = norm_constant({N, m, s0}).value;
    CHECK(std::fabs(c0 / s0 - lim.at_zero) / lim.at_zero < 1e-3);
    double sm = m - 1e-5;
    double cm = norm_constant({N, m, sm}).value;
    CHECK(std::fabs(cm / (m - sm) - lim.at_m) / lim.at_m < 1e-3);
  }
}
