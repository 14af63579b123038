#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <stdexcept>

#include "hyperfrac/fields.hpp"
#include "hyperfrac/harmonic.hpp"
#include "hyperfrac/operator.hpp"

using namespace hyperfrac;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

OutsideDatum annulus_datum(int N, double a = 2.0, double b = 3.0) {
  return {std::make_shared<AnnulusBumpField>(N, a, b), a, b};
}

double taylor_eval(const Jet& j, double t) {
  double acc = 0.0;
  for (std::size_t p = j.size(); p-- > 0;) acc = acc * t + j[p];
  return acc;
}

QuadratureConfig fine_config() {
  QuadratureConfig cfg;
  cfg.tol = 1e-5;
  cfg.nodes_per_panel = 24;
  cfg.max_panel_width = 0.3;
  cfg.grading = 1.35;
  return cfg;
}

}  // namespace

TEST_CASE("kernel constant for the classical half order") {
  PoissonExtension pe(1, 0.5, annulus_datum(1));
  CHECK(pe.kernel_constant() == doctest::Approx(1.0 / kPi).epsilon(1e-12));
  CHECK(pe.dim() == 1);
  CHECK(pe.order() == 0.5);
  CHECK(pe.outer_radius() == 3.0);
}

TEST_CASE("extension reproduces the datum outside the ball") {
  auto psi = std::make_shared<AnnulusBumpField>(1, 2.0, 3.0);
  PoissonExtension pe(1, 1.5, {psi, 2.0, 3.0});
  for (double x : {1.2, 1.9, 2.5, 2.8, 3.5}) {
    CHECK(pe.eval(Vec{x, 0.0, 0.0}) ==
          doctest::Approx(psi->value(Vec{x, 0.0, 0.0})).epsilon(1e-14));
  }
  // the datum clears the sphere, so the extension vanishes continuously
  CHECK(std::fabs(pe.eval(Vec{0.999, 0.0, 0.0})) < 1e-3);
  CHECK_THROWS_AS(pe.eval(Vec{1.0, 0.0, 0.0}), std::domain_error);
}

TEST_CASE("interior values are a weighted kernel integral") {
  PoissonExtension pe(1, 0.5, annulus_datum(1));
  Vec x{0.3, 0.0, 0.0};
  double u = pe.eval(x);
  double k = pe.kernel_integral(x);
  double w = std::pow(1.0 - 0.09, 0.5);
  CHECK(u == doctest::Approx(pe.kernel_constant() * w * k).epsilon(1e-12));
  CHECK(std::fabs(u) > 0.0);
}

TEST_CASE("line jet matches direct evaluation inside the ball") {
  PoissonExtension pe(1, 1.5, annulus_datum(1));
  Vec x{0.25, 0.0, 0.0};
  Vec dir{1.0, 0.0, 0.0};
  Jet j;
  REQUIRE(pe.line_jet(x, dir, 10, j));
  for (double t : {-0.15, -0.05, 0.04, 0.12}) {
    double direct = pe.eval(Vec{x[0] + t, 0.0, 0.0});
    CHECK(std::fabs(taylor_eval(j, t) - direct) < 1e-9);
  }
}

TEST_CASE("field adapter flags the unit sphere") {
  auto pe = std::make_shared<PoissonExtension>(1, 0.5, annulus_datum(1));
  HarmonicField hf(pe);
  CHECK(hf.kink_radii() == std::vector<double>{1.0});
  CHECK(!hf.smooth());
  CHECK(hf.radius_for(1e-300) == 3.0);
}

TEST_CASE("extension is annihilated by the matching operator") {
  auto pe = std::make_shared<PoissonExtension>(1, 1.5, annulus_datum(1));
  std::vector<Vec> pts;
  for (int i = 0; i < 5; ++i)
    pts.push_back(Vec{-0.8 + 0.4 * i, 0.0, 0.0});
  auto rep = verify_sharmonic(pe, 2, pts, fine_config());
  CHECK(rep.u_scale > 0.0);
  CHECK(rep.ratio < 1e-3);
}

TEST_CASE("half order extension is annihilated as well") {
  auto pe = std::make_shared<PoissonExtension>(1, 0.5, annulus_datum(1));
  std::vector<Vec> pts{Vec{0.0, 0.0, 0.0}, Vec{0.5, 0.0, 0.0},
                       Vec{-0.7, 0.0, 0.0}};
  auto rep = verify_sharmonic(pe, 1, pts, fine_config());
  CHECK(rep.ratio < 1e-3);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(PoissonExtension(1, 1.0, annulus_datum(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(PoissonExtension(1, 0.5, annulus_datum(1, 0.5, 3.0)),
                  std::invalid_argument);
  auto pe = std::make_shared<PoissonExtension>(1, 1.5, annulus_datum(1));
  std::vector<Vec> pts{Vec{0.0, 0.0, 0.0}};
  // the difference order must exceed the fractional order
  CHECK_THROWS_AS(verify_sharmonic(pe, 1, pts), std::invalid_argument);
}
