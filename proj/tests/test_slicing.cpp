#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "starslice/random.hpp"
#include "starslice/slicing.hpp"

using namespace starslice;

namespace {

constexpr double kPi = std::numbers::pi;

// int_0^R r^2 exp(-r^2/2) dr in closed form.
double gaussian_moment2(double r) {
  return std::sqrt(kPi / 2.0) * std::erf(r / std::sqrt(2.0)) - r * std::exp(-r * r / 2.0);
}

}  // namespace

TEST_CASE("quadrature config maps base levels per dimension") {
  QuadratureConfig q;
  CHECK(q.level_for(1) == 16);
  CHECK(q.level_for(2) == 16);
  CHECK(q.level_for(3) == 8);
  CHECK(q.level_for(4) == 4);
  CHECK(q.level_for(5) == 16);
  CHECK(q.kind_for(4) == RuleKind::ProductAngle);
  CHECK(q.kind_for(5) == RuleKind::LowDiscrepancy);
  q.levels[3] = 5;
  q.kinds[3] = RuleKind::MonteCarlo;
  CHECK(q.rule(3)->level() == 5);
  CHECK(q.rule(3)->kind() == RuleKind::MonteCarlo);
  CHECK(q.companion_rule(3)->level() < 5);
  CHECK(q.search_rule(4)->kind() == RuleKind::LowDiscrepancy);
}

TEST_CASE("ball volumes and equality of both sides of the slicing identity") {
  const QuadratureConfig quad;
  for (int n = 2; n <= 5; ++n) {
    const Estimate v = body_volume(make_ball(n), quad);
    CHECK(v.value == doctest::Approx(ball_volume(n)).epsilon(n <= 4 ? 1e-12 : 1e-12));
    for (int k = 1; k < n; ++k) {
      const Subspace h = coordinate_subspaces(n, n - k).front();
      const Estimate s = section_volume(make_ball(n), h, quad);
      CHECK(s.value == doctest::Approx(ball_volume(n - k)).epsilon(1e-12));
    }
  }
}

TEST_CASE("section volumes of ellipsoids") {
  const QuadratureConfig quad;
  const double axes[] = {1.0, 2.0, 3.0};
  const StarBody e = make_ellipsoid(axes);
  CHECK(section_volume(e, coordinate_subspace(3, {0, 1}), quad).value == doctest::Approx(2.0 * kPi).epsilon(1e-12));
  CHECK(section_volume(e, coordinate_subspace(3, {1, 2}), quad).value == doctest::Approx(6.0 * kPi).epsilon(1e-12));
  CHECK(section_volume(e, coordinate_subspace(3, {2}), quad).value == doctest::Approx(6.0).epsilon(1e-14));
  // Central section of an ellipsoid by xi^perp: pi a b c |xi|_{A} / ... in closed form
  // pi abc / sqrt(sum (a_i xi_i)^2).
  RandomSource rng(41);
  for (int i = 0; i < 10; ++i) {
    double xi[3];
    double s = 0.0;
    for (double& v : xi) {
      v = rng.normal();
      s += v * v;
    }
    for (double& v : xi) v /= std::sqrt(s);
    double q = 0.0;
    for (int d = 0; d < 3; ++d) q += axes[d] * axes[d] * xi[d] * xi[d];
    const double exact = kPi * 6.0 / std::sqrt(q);
    CHECK(section_volume(e, hyperplane(xi), quad).value == doctest::Approx(exact).epsilon(1e-10));
  }
}

TEST_CASE("measures with radial densities") {
  const QuadratureConfig quad;
  const Density g3 = make_gaussian(3);
  const Estimate mu = body_measure(make_ball(3), g3, quad);
  CHECK(mu.value == doctest::Approx(4.0 * kPi * gaussian_moment2(1.0)).epsilon(1e-12));
  const Estimate sec = section_measure(make_ball(3), coordinate_subspace(3, {0, 1}), g3, quad);
  CHECK(sec.value == doctest::Approx(2.0 * kPi * (1.0 - std::exp(-0.5))).epsilon(1e-12));

  // The non-radial path must agree with the radial fast path.
  const double axes[] = {1.0, 1.0, 1.0};
  const StarBody round = make_ellipsoid(axes);
  const double sig[] = {1.0, 1.0, 1.0};
  const Density aniso = make_anisotropic_gaussian(sig);
  CHECK(body_measure(make_lp_ball(3, 2.0), aniso, quad).value == doctest::Approx(mu.value).epsilon(1e-10));
  CHECK(body_measure(make_lp_ball(3, 2.0), g3, quad).value == doctest::Approx(mu.value).epsilon(1e-10));
  CHECK(round.ball_radius().has_value());

  // Bump (1 - r^2)^2 on the unit disk: 2 pi int_0^1 r (1 - r^2)^2 dr = pi / 3.
  const Density bump = make_bump(3, 1.0);
  CHECK(section_measure(make_lp_ball(3, 2.0), coordinate_subspace(3, {0, 2}), bump, quad).value ==
        doctest::Approx(kPi / 3.0).epsilon(1e-10));
  // Uniform measure equals volume.
  CHECK(body_measure(make_lp_ball(3, 1.0), make_uniform(3), quad).value ==
        doctest::Approx(body_volume(make_lp_ball(3, 1.0), quad).value).epsilon(1e-12));
}

TEST_CASE("density preconditions") {
  CHECK_THROWS_AS(make_gaussian(3, 0.0), Error);
  CHECK_THROWS_AS(make_bump(3, -1.0), Error);
  const Density bad(2, [](std::span<const double> x) { return x[0]; }, "odd");
  const double x[] = {-1.0, 0.0};
  CHECK_THROWS_AS(bad(x), Error);
  const QuadratureConfig quad;
  CHECK_THROWS_AS(body_measure(make_ball(3), make_gaussian(4), quad), Error);
}

TEST_CASE("triangle bumps have unit mass and the declared support") {
  for (int j : {1, 2, 10, 50}) {
    const double lo = 1.0 - 1.0 / j;
    const double peak = 1.0 - 0.5 / j;
    std::vector<double> kinks = {peak};
    if (j > 1) kinks.insert(kinks.begin(), lo);
    const double mass =
        radial_integrate([j](double r) { return triangle_bump(j, r); }, 1.0, RadialRule::fixed(3), kinks);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(triangle_bump(j, peak) == doctest::Approx(2.0 * j));
    CHECK(triangle_bump(j, 1.0) == 0.0);
    if (j > 1) CHECK(triangle_bump(j, lo * 0.99) == 0.0);
  }
  const double mass10 =
      radial_integrate([](double r) { return triangle_bump(10, r); }, 1.0, RadialRule::adaptive(1e-12));
  CHECK(mass10 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("max_section finds the largest central sections") {
  const QuadratureConfig quad;
  const SearchOptions opts;
  const double axes[] = {1.0, 1.0, 2.0};
  const ExtremalSection best = max_section(make_ellipsoid(axes), 1, nullptr, quad, opts);
  CHECK(best.value == doctest::Approx(2.0 * kPi).epsilon(1e-6));
  CHECK(best.value <= 2.0 * kPi + best.error);
  CHECK_FALSE(best.restart_log.empty());

  // Cube: the diagonal rectangle 2 x 2 sqrt(2) beats the coordinate square.
  const StarBody cube = make_lp_ball(3, std::numeric_limits<double>::infinity());
  const ExtremalSection c = max_section(cube, 1, nullptr, quad, opts);
  CHECK(c.value > 4.0 / c_nk(3, 1));
  CHECK(c.value == doctest::Approx(4.0 * std::sqrt(2.0)).epsilon(1e-3));

  // Lines through the cross-polytope: the longest is an axis, length 2.
  const ExtremalSection line = max_section(make_lp_ball(3, 1.0), 2, nullptr, quad, opts);
  CHECK(line.value == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(max_section(cube, 3, nullptr, quad, opts), Error);
  CHECK_THROWS_AS(max_section(cube, 0, nullptr, quad, opts), Error);
}

TEST_CASE("max_section is a lower bound that dominates every coordinate section") {
  const QuadratureConfig quad;
  SearchOptions opts;
  opts.restarts = 2;
  RandomSource gen(97);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 3 + trial % 2;
    std::vector<double> axes(static_cast<std::size_t>(n));
    for (double& a : axes) a = 0.5 + gen.uniform();
    const StarBody e = make_ellipsoid(axes);
    const int k = 1 + trial % (n - 1);
    const ExtremalSection best = max_section(e, k, nullptr, quad, opts);
    for (const auto& h : coordinate_subspaces(n, n - k)) {
      CHECK(best.value >= section_volume(e, h, quad).value * (1 - 1e-12));
    }
    // The largest (n-k)-section of an ellipsoid spans the n-k longest axes.
    std::vector<double> sorted = axes;
    std::sort(sorted.rbegin(), sorted.rend());
    double prod = 1.0;
    for (int i = 0; i < n - k; ++i) prod *= sorted[i];
    CHECK(best.value <= ball_volume(n - k) * prod * (1 + 1e-9));
  }
}

TEST_CASE("searches are reproducible for a fixed seed") {
  const QuadratureConfig quad;
  SearchOptions opts;
  opts.restarts = 3;
  const StarBody body = make_lp_ball(4, 1.5);
  const ExtremalSection a = max_section(body, 2, nullptr, quad, opts);
  const ExtremalSection b = max_section(body, 2, nullptr, quad, opts);
  CHECK(a.value == b.value);
  CHECK(a.probe_count == b.probe_count);
  CHECK(a.subspace.frame() == b.subspace.frame());
}
