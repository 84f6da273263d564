#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "starslice/bodies.hpp"
#include "starslice/random.hpp"
#include "starslice/slicing.hpp"

using namespace starslice;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_point(RandomSource& rng, int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (double& v : x) v = rng.normal();
  return x;
}

std::vector<double> unit(std::vector<double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  for (double& v : x) v /= std::sqrt(s);
  return x;
}

// A catalog body drawn from a seeded generator.
StarBody random_body(RandomSource& rng, int n) {
  const int pick = static_cast<int>(rng.uniform() * 3);
  if (pick == 0) return make_ball(n, 0.5 + rng.uniform());
  if (pick == 1) {
    std::vector<double> axes(static_cast<std::size_t>(n));
    for (double& a : axes) a = 0.5 + 1.5 * rng.uniform();
    return make_ellipsoid(axes);
  }
  const double ps[] = {0.7, 1.0, 1.5, 2.0, 3.0, std::numeric_limits<double>::infinity()};
  return make_lp_ball(n, ps[static_cast<int>(rng.uniform() * 6)]);
}

}  // namespace

TEST_CASE("gauges are even, 1-homogeneous and positive") {
  RandomSource gen(1001);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(gen.uniform() * 5);
    const StarBody body = random_body(gen, n);
    auto x = random_point(gen, n);
    const double lambda = 0.1 + 5.0 * gen.uniform();
    std::vector<double> scaled = x, negated = x;
    for (double& v : scaled) v *= lambda;
    for (double& v : negated) v = -v;
    const double g = body.gauge(x);
    CHECK(g > 0.0);
    CHECK(body.gauge(scaled) == doctest::Approx(lambda * g).epsilon(1e-12));
    CHECK(body.gauge(negated) == doctest::Approx(g).epsilon(1e-14));
  }
}

TEST_CASE("gauge and radial preconditions") {
  const StarBody ball = make_ball(3, 2.0);
  const double origin[] = {0.0, 0.0, 0.0};
  CHECK(ball.gauge(origin) == 0.0);
  const double e1[] = {1.0, 0.0, 0.0};
  CHECK(ball.radial(e1) == doctest::Approx(2.0));
  const double two[] = {1.0, 0.0};
  CHECK_THROWS_AS(ball.gauge(two), Error);
  const double bad[] = {std::nan(""), 0.0, 0.0};
  CHECK_THROWS_AS(ball.gauge(bad), Error);
  const double long_vec[] = {2.0, 0.0, 0.0};
  CHECK_THROWS_AS(ball.radial(long_vec), Error);
  CHECK_THROWS_AS(make_ball(1), Error);
  CHECK_THROWS_AS(make_ball(3, -1.0), Error);
  CHECK_THROWS_AS(make_lp_ball(3, 0.0), Error);
  const double axes[] = {1.0, 0.0, 2.0};
  CHECK_THROWS_AS(make_ellipsoid(axes), Error);
  CHECK_THROWS_AS(ball.scaled(0.0), Error);
}

TEST_CASE("l_p balls grow with p") {
  RandomSource gen(77);
  const double ps[] = {0.5, 0.8, 1.0, 1.5, 2.0, 3.0, 7.0, std::numeric_limits<double>::infinity()};
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(gen.uniform() * 5);
    const auto x = random_point(gen, n);
    for (int i = 0; i + 1 < 8; ++i) {
      CHECK(make_lp_ball(n, ps[i]).gauge(x) >= make_lp_ball(n, ps[i + 1]).gauge(x) * (1 - 1e-14));
    }
  }
  const double x[] = {3.0, -4.0};
  CHECK(make_lp_ball(2, 1.0).gauge(x) == doctest::Approx(7.0));
  CHECK(make_lp_ball(2, 2.0).gauge(x) == doctest::Approx(5.0));
  CHECK(make_lp_ball(2, std::numeric_limits<double>::infinity()).gauge(x) == doctest::Approx(4.0));
  CHECK(make_lp_ball(2, 3.0).gauge(x) == doctest::Approx(std::cbrt(27.0 + 64.0)).epsilon(1e-14));
}

TEST_CASE("ellipsoid gauge and scaling") {
  const double axes[] = {1.0, 2.0, 3.0};
  const StarBody e = make_ellipsoid(axes);
  const double p[] = {1.0, 2.0, 3.0};
  CHECK(e.gauge(p) == doctest::Approx(std::sqrt(3.0)));
  const StarBody half = e.scaled(0.5);
  CHECK(half.gauge(p) == doctest::Approx(2.0 * std::sqrt(3.0)));
  CHECK(half.certification().certifies(2));
  const double round[] = {2.0, 2.0, 2.0};
  REQUIRE(make_ellipsoid(round).ball_radius().has_value());
  CHECK(*make_ellipsoid(round).ball_radius() == 2.0);
  CHECK_FALSE(e.ball_radius().has_value());
  CHECK(*make_ball(3).scaled(0.5).ball_radius() == 0.5);
}

TEST_CASE("certification metadata") {
  CHECK(make_ball(5).certification().certifies(3));
  CHECK(make_lp_ball(6, 1.5).certification().certifies(2));
  CHECK(make_lp_ball(4, 8.0).certification().certifies(1));
  CHECK_FALSE(make_lp_ball(5, 4.0).certification().certifies(1));
  CHECK_FALSE(make_lp_ball(5, std::numeric_limits<double>::infinity()).certification().certifies(2));
  const Certification generalized{BodyClass::GeneralizedIntersectionBody, 2, "test"};
  CHECK(generalized.certifies(2));
  CHECK(generalized.certifies(4));
  CHECK_FALSE(generalized.certifies(3));
  CHECK_FALSE(generalized.certifies(1));
}

TEST_CASE("catalog volumes") {
  const QuadratureConfig quad;
  const double axes[] = {1.0, 2.0, 3.0};
  const Estimate ev = body_volume(make_ellipsoid(axes), quad);
  CHECK(ev.value == doctest::Approx(8.0 * kPi).epsilon(1e-10));
  CHECK(ev.error < 1e-6);
  const Estimate octa = body_volume(make_lp_ball(3, 1.0), quad);
  CHECK(octa.value == doctest::Approx(4.0 / 3.0).epsilon(1e-9));
  CHECK(std::abs(octa.value - 4.0 / 3.0) <= octa.error + 1e-12);
  const Estimate cube = body_volume(make_lp_ball(3, std::numeric_limits<double>::infinity()), quad);
  CHECK(std::abs(cube.value - 8.0) <= cube.error);
  CHECK(cube.error < 5e-3);
  const Estimate cross4 = body_volume(make_lp_ball(4, 1.0), quad);
  CHECK(cross4.value == doctest::Approx(16.0 / 24.0).epsilon(1e-6));
  for (int n = 2; n <= 5; ++n) {
    CHECK(body_volume(make_ball(n), quad).value == doctest::Approx(ball_volume(n)).epsilon(1e-3 * (n >= 5) + 1e-12));
  }
  // l_p volume 2^n Gamma(1 + 1/p)^n / Gamma(1 + n/p).
  const double lp15 = 8.0 * std::pow(std::tgamma(1.0 + 1.0 / 1.5), 3) / std::tgamma(1.0 + 3.0 / 1.5);
  CHECK(body_volume(make_lp_ball(3, 1.5), quad).value == doctest::Approx(lp15).epsilon(1e-6));
}

TEST_CASE("radial table interpolation") {
  auto grid = cached_sphere_rule(3, 2, RuleKind::ProductAngle);
  const RadialTable constant(grid, std::vector<double>(grid->size(), 2.5));
  RandomSource rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto theta = unit(random_point(rng, 3));
    CHECK(constant.radius(theta) == doctest::Approx(2.5).epsilon(1e-14));
  }
  CHECK(constant.bandwidth() > 0.0);
  const double node[] = {grid->node(5)[0], grid->node(5)[1], grid->node(5)[2]};
  std::vector<double> varied(grid->size());
  for (std::size_t i = 0; i < varied.size(); ++i) varied[i] = 1.0 + 0.01 * static_cast<double>(i / 2 % 7);
  const RadialTable table(grid, varied);
  CHECK(table.radius(node) == varied[5]);
  CHECK_THROWS_AS(RadialTable(grid, std::vector<double>(3, 1.0)), Error);
  CHECK_THROWS_AS(RadialTable(grid, std::vector<double>(grid->size(), -1.0)), Error);
}

TEST_CASE("intersection bodies of catalog bodies") {
  const QuadratureConfig quad;
  auto grid = cached_sphere_rule(3, 4, RuleKind::ProductAngle);
  const SphericalRule& sec = *quad.rule(2);
  const double e3[] = {0.0, 0.0, 1.0};

  const StarBody ib = intersection_body_of(make_ball(3), grid, sec);
  CHECK(ib.radial(e3) == doctest::Approx(kPi).epsilon(1e-10));
  RandomSource rng(5);
  for (int i = 0; i < 20; ++i) CHECK(ib.radial(unit(random_point(rng, 3))) == doctest::Approx(kPi).epsilon(1e-10));
  CHECK(ib.certification().certifies(1));
  CHECK(ib.certification().certifies(2));

  const double axes[] = {1.0, 1.0, 2.0};
  const StarBody ie = intersection_body_of(make_ellipsoid(axes), grid, sec);
  CHECK(ie.radial(e3) == doctest::Approx(kPi).epsilon(2e-2));
  const double e1[] = {1.0, 0.0, 0.0};
  CHECK(ie.radial(e1) == doctest::Approx(2.0 * kPi).epsilon(2e-2));

  // The exact radial value is the section area; the table only approximates
  // it to first order, and B_1^3 has a cusp at the axes.
  const StarBody cross = make_lp_ball(3, 1.0);
  CHECK(section_volume(cross, hyperplane(e3), sec) == doctest::Approx(2.0).epsilon(1e-12));
  const StarBody io = intersection_body_of(cross, grid, sec);
  CHECK(io.radial(e3) == doctest::Approx(2.0).epsilon(1e-10));
  const double tilted[] = {0.0, std::sin(0.05), std::cos(0.05)};
  const double exact = section_volume(cross, hyperplane(tilted), sec);
  double previous = INFINITY;
  for (int level : {2, 4, 8}) {
    const StarBody fine = intersection_body_of(cross, cached_sphere_rule(3, level, RuleKind::ProductAngle), sec);
    const double err = std::abs(fine.radial(tilted) - exact);
    CHECK(err < 0.05 * exact);
    CHECK(err < previous);
    previous = err;
  }

  CHECK_THROWS_AS(intersection_body_of(make_ball(3), grid, *quad.rule(3)), Error);
  CHECK_THROWS_AS(intersection_body_of(make_ball(4), grid, sec), Error);
}

TEST_CASE("gauge invariants hold on random probes for every catalog body") {
  const QuadratureConfig quad;
  auto grid = cached_sphere_rule(3, 4, RuleKind::ProductAngle);
  std::vector<StarBody> bodies = {make_ball(4, 1.5), make_lp_ball(4, 1.0), make_lp_ball(3, 0.8),
                                  make_lp_ball(5, std::numeric_limits<double>::infinity()),
                                  intersection_body_of(make_lp_ball(3, 1.0), grid, *quad.rule(2))};
  RandomSource gen(2718);
  for (const auto& body : bodies) {
    const int n = body.ambient_dim();
    double lipschitz = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto x = unit(random_point(gen, n));
      auto y = x;
      for (double& v : y) v += 1e-3 * gen.normal();
      y = unit(y);
      std::vector<double> neg = x;
      for (double& v : neg) v = -v;
      const double g = body.gauge(x);
      CHECK(g > 0.0);
      CHECK(std::abs(body.gauge(neg) - g) <= 1e-10 * g);
      CHECK(body.radial(x) * g == doctest::Approx(1.0).epsilon(1e-10));
      double dist = 0.0;
      for (int d = 0; d < n; ++d) dist += (x[d] - y[d]) * (x[d] - y[d]);
      lipschitz = std::max(lipschitz, std::abs(body.gauge(y) - g) / std::sqrt(dist));
    }
    CHECK(lipschitz < 100.0);
  }
}

TEST_CASE("intersection_body_of scales like lambda^(n-1)") {
  const QuadratureConfig quad;
  auto grid = cached_sphere_rule(3, 4, RuleKind::ProductAngle);
  const double axes[] = {1.0, 1.5, 0.7};
  const StarBody base = intersection_body_of(make_ellipsoid(axes), grid, *quad.rule(2));
  const StarBody big = intersection_body_of(make_ellipsoid(axes).scaled(2.0), grid, *quad.rule(2));
  RandomSource rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto theta = unit(random_point(rng, 3));
    CHECK(big.radial(theta) == doctest::Approx(4.0 * base.radial(theta)).epsilon(1e-12));
  }
}

TEST_CASE("planar intersection bodies use segment lengths") {
  const QuadratureConfig quad;
  auto grid = cached_sphere_rule(2, 8, RuleKind::ProductAngle);
  const StarBody ib = intersection_body_of(make_ball(2), grid, *quad.rule(1));
  const double e1[] = {1.0, 0.0};
  CHECK(ib.radial(e1) == doctest::Approx(2.0).epsilon(1e-12));
}
