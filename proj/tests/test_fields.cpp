#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "hyperfrac/fields.hpp"

using namespace hyperfrac;

namespace {

double taylor_eval(const Jet& j, double t) {
  double acc = 0.0;
  for (std::size_t p = j.size(); p-- > 0;) acc = acc * t + j[p];
  return acc;
}

// checks the exact line jet against direct evaluation at small offsets
void check_jet_consistency(const ScalarField& f, const Vec& x, const Vec& theta,
                           double tol = 1e-10) {
  Jet j;
  REQUIRE(f.line_jet(x, theta, 12, j));
  for (double t : {-0.11, -0.03, 0.02, 0.09}) {
    Vec y = x;
    for (int d = 0; d < f.dim(); ++d) y[d] += t * theta[d];
    double direct = f.value(y);
    double series = taylor_eval(j, t);
    CHECK(std::fabs(series - direct) <=
          tol * std::max(1.0, std::fabs(direct)));
  }
}

Vec unit(double a, double b, double c) {
  Vec v{a, b, c};
  double n = std::sqrt(a * a + b * b + c * c);
  for (auto& q : v) q /= n;
  return v;
}

}  // namespace

TEST_CASE("jet arithmetic basics") {
  Jet t = Jet::variable(8, 0.25);  // 0.25 + t
  Jet sq = t * t;
  CHECK(sq[0] == doctest::Approx(0.0625));
  CHECK(sq[1] == doctest::Approx(0.5));
  CHECK(sq[2] == doctest::Approx(1.0));
  Jet e = sq.exp();
  // d/dt exp(q(t)) = q'(t) exp(q(t)) at t=0: 0.5 * exp(0.0625)
  CHECK(e[1] == doctest::Approx(0.5 * std::exp(0.0625)).epsilon(1e-13));
  Jet r = sq.reciprocal();
  CHECK(r[0] == doctest::Approx(16.0));
  Jet back = r * sq;
  CHECK(back[0] == doctest::Approx(1.0));
  for (std::size_t p = 1; p < back.size(); ++p)
    CHECK(std::fabs(back[p]) < 1e-10);
}

TEST_CASE("gaussian field values and jets") {
  GaussianField g(2);
  Vec x{0.3, -0.4, 0.0};
  CHECK(g.value(x) == doctest::Approx(std::exp(-0.125)).epsilon(1e-14));
  check_jet_consistency(g, x, unit(1.0, 2.0, 0.0), 1e-12);
  check_jet_consistency(g, Vec{0.0, 0.0, 0.0}, unit(1.0, 0.0, 0.0), 1e-12);

  // (-Lap) exp(-q/2) = (N - q) exp(-q/2)
  double lap = 0.0;
  REQUIRE(g.neg_laplacian_at(x, 1, lap));
  CHECK(lap == doctest::Approx((2.0 - 0.25) * std::exp(-0.125)).epsilon(1e-12));
  // second power for N = 1: (-Lap)^2 exp(-x^2/2) = (x^4 - 6x^2 + 3) exp(-x^2/2)
  GaussianField g1(1);
  Vec p{0.7, 0.0, 0.0};
  double lap2 = 0.0;
  REQUIRE(g1.neg_laplacian_at(p, 2, lap2));
  double q = 0.49;
  CHECK(lap2 ==
        doctest::Approx((q * q - 6.0 * q + 3.0) * std::exp(-0.5 * q))
            .epsilon(1e-12));

  CHECK(g.radius_for(1e-12) > 7.0);
  CHECK(g.value(Vec{g.radius_for(1e-12) + 0.01, 0.0, 0.0}) < 1e-12);
}

TEST_CASE("bump field support and smooth cutoff") {
  BumpField b(1, 1.0);
  CHECK(b.value(Vec{0.0, 0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(b.value(Vec{1.0, 0.0, 0.0}) == 0.0);
  CHECK(b.value(Vec{1.5, 0.0, 0.0}) == 0.0);
  CHECK(b.value(Vec{0.5, 0.0, 0.0}) > 0.0);
  check_jet_consistency(b, Vec{0.2, 0.0, 0.0}, unit(1.0, 0.0, 0.0), 1e-9);
  CHECK(b.radius_for(1e-300) == 1.0);

  BumpField wide(3, 2.5);
  CHECK(wide.value(Vec{0.0, 0.0, 2.4}) > 0.0);
  CHECK(wide.value(Vec{0.0, 0.0, 2.5001}) == 0.0);
}

TEST_CASE("annulus bump support and amplitude") {
  AnnulusBumpField a(1, 2.0, 3.0);
  CHECK(a.value(Vec{2.0, 0.0, 0.0}) == 0.0);
  CHECK(a.value(Vec{3.0, 0.0, 0.0}) == 0.0);
  CHECK(a.value(Vec{1.0, 0.0, 0.0}) == 0.0);
  CHECK(a.value(Vec{4.0, 0.0, 0.0}) == 0.0);
  CHECK(a.value(Vec{2.5, 0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(a.value(Vec{-2.5, 0.0, 0.0}) == doctest::Approx(1.0));
  check_jet_consistency(a, Vec{2.6, 0.0, 0.0}, unit(1.0, 0.0, 0.0), 1e-7);

  AnnulusBumpField scaled(2, 2.0, 3.0, -0.5);
  CHECK(scaled.value(Vec{0.0, 2.5, 0.0}) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(AnnulusBumpField(1, 3.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(AnnulusBumpField(1, -1.0, 2.0), std::invalid_argument);
}

TEST_CASE("polynomial bump and product fields") {
  // q * bump with unit radius
  PolyBumpField pb(1, 1.0, {0.0, 1.0});
  Vec x{0.4, 0.0, 0.0};
  BumpField b(1, 1.0);
  CHECK(pb.value(x) == doctest::Approx(0.16 * b.value(x)).epsilon(1e-13));
  check_jet_consistency(pb, x, unit(1.0, 0.0, 0.0), 1e-9);

  auto ga = std::make_shared<GaussianField>(1);
  auto bu = std::make_shared<BumpField>(1, 2.0);
  ProductRadialField prod(ga, bu);
  CHECK(prod.value(x) ==
        doctest::Approx(ga->value(x) * bu->value(x)).epsilon(1e-13));
  check_jet_consistency(prod, x, unit(1.0, 0.0, 0.0), 1e-10);
}

TEST_CASE("iterated laplacian field matches the exact derivative") {
  auto g = std::make_shared<GaussianField>(1);
  NegLaplacianPowField lg(g, 2);
  Vec x{0.7, 0.0, 0.0};
  double q = 0.49;
  CHECK(lg.value(x) ==
        doctest::Approx((q * q - 6.0 * q + 3.0) * std::exp(-0.5 * q))
            .epsilon(1e-12));
  check_jet_consistency(lg, x, unit(1.0, 0.0, 0.0), 1e-10);
}

TEST_CASE("shifted scaled and sum wrappers") {
  auto g = std::make_shared<GaussianField>(2);
  Vec h{0.3, -0.2, 0.0};
  ShiftedField sh(g, h);
  Vec x{1.0, 0.5, 0.0};
  Vec xm{0.7, 0.7, 0.0};
  CHECK(sh.value(x) == doctest::Approx(g->value(xm)).epsilon(1e-14));
  check_jet_consistency(sh, x, unit(2.0, -1.0, 0.0), 1e-12);

  ScaledArgField sc(g, 1.7);
  Vec xs{1.7, 0.85, 0.0};
  CHECK(sc.value(x) == doctest::Approx(g->value(xs)).epsilon(1e-14));
  check_jet_consistency(sc, x, unit(1.0, 1.0, 0.0), 1e-11);

  auto b = std::make_shared<BumpField>(2, 2.0);
  SumField sum(2.0, g, -0.5, b);
  CHECK(sum.value(x) ==
        doctest::Approx(2.0 * g->value(x) - 0.5 * b->value(x)).epsilon(1e-14));
  check_jet_consistency(sum, x, unit(1.0, 3.0, 0.0), 1e-10);
}

TEST_CASE("sampled grid field interpolates and vanishes outside") {
  const int M = 64;
  const double L = 8.0;
  GaussianField g(1);
  std::vector<double> samples(M);
  for (int i = 0; i < M; ++i) {
    double xi = -0.5 * L + i * (L / M);
    samples[i] = g.value(Vec{xi, 0.0, 0.0});
  }
  SampledGridField sg(1, L, M, samples);
  CHECK(!sg.smooth());
  for (double x : {-1.3, -0.2, 0.55, 2.1}) {
    CHECK(std::fabs(sg.value(Vec{x, 0.0, 0.0}) - g.value(Vec{x, 0.0, 0.0})) <
          1e-4);
  }
  CHECK(sg.value(Vec{4.5, 0.0, 0.0}) == 0.0);
  CHECK(sg.value(Vec{-7.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("field grammar") {
  CHECK(parse_field("gaussian", 2)->value(Vec{0.0, 0.0, 0.0}) ==
        doctest::Approx(1.0));
  auto b = parse_field("bump:1.5", 1);
  CHECK(b->value(Vec{1.4, 0.0, 0.0}) > 0.0);
  CHECK(b->value(Vec{1.6, 0.0, 0.0}) == 0.0);
  auto a = parse_field("annulus:2:3", 1);
  CHECK(a->value(Vec{2.5, 0.0, 0.0}) == doctest::Approx(1.0));
  auto aa = parse_field("annulus:2:3:0.25", 1);
  CHECK(aa->value(Vec{2.5, 0.0, 0.0}) == doctest::Approx(0.25));
  auto pb = parse_field("polybump", 1);
  CHECK(pb->value(Vec{0.0, 0.0, 0.0}) == 0.0);  // vanishing factor q at 0
  CHECK(pb->value(Vec{0.5, 0.0, 0.0}) > 0.0);
  auto gb = parse_field("gaussbump:2", 1);
  CHECK(gb->value(Vec{2.1, 0.0, 0.0}) == 0.0);
  CHECK_THROWS_AS(parse_field("cauchy", 1), std::invalid_argument);
  CHECK_THROWS_AS(parse_field("annulus:2", 1), std::invalid_argument);
}
