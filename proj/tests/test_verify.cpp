#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "starslice/random.hpp"
#include "starslice/verify.hpp"

using namespace starslice;

namespace {

constexpr double kPi = std::numbers::pi;

CheckOptions fast_options() {
  CheckOptions o;
  o.search.restarts = 2;
  return o;
}

// int_0^1 r^d f_j(r) dr for the triangular bump, by expanding r^d = (1 - s)^d
// and integrating s^i against the triangle on s in (0, w), w = 1/j.
double triangle_moment(int j, int d) {
  const double w = 1.0 / j;
  const double c = 4.0 / (w * w);  // slope of the triangle of height 2/w
  double total = 0.0;
  double binom = 1.0;
  for (int i = 0; i <= d; ++i) {
    const double half = w / 2.0;
    const double rise = c * std::pow(half, i + 2) / (i + 2);
    const double fall = c * (w * (std::pow(w, i + 1) - std::pow(half, i + 1)) / (i + 1) -
                             (std::pow(w, i + 2) - std::pow(half, i + 2)) / (i + 2));
    total += (i % 2 == 0 ? 1.0 : -1.0) * binom * (rise + fall);
    binom = binom * (d - i) / (i + 1);
  }
  return total;
}

double ratio_oracle(int n, int k, int j) {
  return sphere_area(n) * triangle_moment(j, n - 1) /
         (sphere_area(n - k) * triangle_moment(j, n - k - 1) * std::pow(ball_volume(n), static_cast<double>(k) / n));
}

}  // namespace

TEST_CASE("verdict bands") {
  CHECK(classify(0.0, 0.0) == Verdict::Holds);
  CHECK(classify(1e-3, 0.0) == Verdict::Holds);
  CHECK(classify(-1e-9, 1e-8) == Verdict::HoldsWithinError);
  CHECK(classify(-1e-8, 1e-8) == Verdict::HoldsWithinError);
  CHECK(classify(-2e-8, 1e-8) == Verdict::Violated);
  CHECK(to_string(Verdict::HoldsWithinError) == "holds-within-error");
  CHECK(statement_from_string("cor4") == Statement::Cor4);
  CHECK_THROWS_AS(statement_from_string("thm9"), Error);
}

TEST_CASE("measured epsilon") {
  const CheckOptions opts = fast_options();
  CHECK(measured_epsilon(make_ball(3), make_ball(3), 1, nullptr, opts).value == 0.0);
  const Estimate half = measured_epsilon(make_ball(3), make_ball(3, 0.5), 1, nullptr, opts);
  CHECK(half.value == doctest::Approx(0.75 * kPi).epsilon(1e-10));
  // Every central plane section of ellipsoid(1,1,2) contains the unit disk.
  const double axes[] = {1.0, 1.0, 2.0};
  CHECK(measured_epsilon(make_ball(3), make_ellipsoid(axes), 1, nullptr, opts).value == 0.0);
  CHECK_THROWS_AS(measured_epsilon(make_ball(3), make_ball(4), 1, nullptr, opts), Error);
}

TEST_CASE("stability for volumes") {
  const CheckOptions opts = fast_options();
  for (int k = 1; k < 4; ++k) {
    const VerificationReport r = check_stability_volume(make_ball(4), make_ball(4), k, opts);
    CHECK(std::abs(r.slack) <= r.numerical_error);
    CHECK(r.verdict != Verdict::Violated);
    CHECK(r.epsilon_used == 0.0);
  }
  // K = B, L = 0.9 B, k = 1: every term in closed form.
  const VerificationReport r = check_stability_volume(make_ball(3), make_ball(3, 0.9), 1, opts);
  const double v = 4.0 * kPi / 3.0;
  const double lhs = std::pow(v, 2.0 / 3.0);
  const double rhs = std::pow(0.729 * v, 2.0 / 3.0) + c_nk(3, 1) * 0.19 * kPi;
  CHECK(r.epsilon_used == doctest::Approx(0.19 * kPi).epsilon(1e-10));
  CHECK(r.lhs == doctest::Approx(lhs).epsilon(1e-10));
  CHECK(r.rhs == doctest::Approx(rhs).epsilon(1e-10));
  // Homothetic balls are an equality case.
  CHECK(std::abs(r.slack) <= r.numerical_error);
  CHECK(r.verdict != Verdict::Violated);

  // Cross-polytope against the ball of equal volume.
  const double radius = std::pow((16.0 / 24.0) / ball_volume(4), 0.25);
  for (int k = 1; k < 4; ++k) {
    const VerificationReport s = check_stability_volume(make_lp_ball(4, 1.0), make_ball(4, radius), k, opts);
    CHECK(s.verdict == Verdict::Holds);
    CHECK(s.certification_banner.empty());
  }
}

TEST_CASE("stability for measures") {
  const CheckOptions opts = fast_options();
  const Density g = make_gaussian(3);
  const VerificationReport same = check_stability_measure(make_lp_ball(3, 1.5), make_lp_ball(3, 1.5), g, 2, opts);
  CHECK(std::abs(same.slack) <= same.numerical_error);

  // Gaussian, K = B, L = 0.8 B, k = 1 from one-dimensional closed forms.
  auto moment = [](int d, double r) {
    return radial_integrate([d](double t) { return std::pow(t, d) * std::exp(-t * t / 2); }, r,
                            RadialRule::adaptive(1e-13));
  };
  const VerificationReport r = check_stability_measure(make_ball(3), make_ball(3, 0.8), g, 1, opts);
  const double eps = 2.0 * kPi * (moment(1, 1.0) - moment(1, 0.8));
  CHECK(r.epsilon_used == doctest::Approx(eps).epsilon(1e-10));
  CHECK(r.lhs == doctest::Approx(4.0 * kPi * moment(2, 1.0)).epsilon(1e-10));
  CHECK(r.rhs == doctest::Approx(4.0 * kPi * moment(2, 0.8) +
                                 1.5 * c_nk(3, 1) * std::pow(4.0 * kPi / 3.0, 1.0 / 3.0) * eps)
                     .epsilon(1e-10));
  CHECK(r.verdict == Verdict::Holds);

  const VerificationReport k1 = check_stability_measure(make_ball(3), make_ball(3), make_uniform(3), 1, opts);
  CHECK(k1.notes.size() >= 2);
}

TEST_CASE("difference inequalities") {
  const CheckOptions opts = fast_options();
  const VerificationReport same = check_difference(make_lp_ball(3, 1.0), make_lp_ball(3, 1.0), 1, nullptr, opts);
  CHECK(same.lhs == 0.0);
  CHECK(same.rhs == 0.0);
  CHECK(same.verdict == Verdict::Holds);

  const VerificationReport r = check_difference(make_ball(3), make_ball(3, 0.5), 1, nullptr, opts);
  const double lhs = std::pow(4.0 * kPi / 3.0, 2.0 / 3.0) * 0.75;
  const double rhs = c_nk(3, 1) * kPi * 0.75;
  CHECK(r.lhs == doctest::Approx(lhs).epsilon(1e-6));
  CHECK(r.rhs == doctest::Approx(rhs).epsilon(1e-6));
  CHECK(std::abs(r.slack - (rhs - lhs)) <= 1e-6);
  CHECK(r.verdict != Verdict::Violated);

  const Density g = make_gaussian(3);
  for (int k : {1, 2}) {
    const VerificationReport m = check_difference(make_lp_ball(3, 1.0), make_ball(3), k, &g, opts);
    CHECK(m.statement == Statement::Cor4);
    CHECK(m.verdict == Verdict::Holds);
  }
}

TEST_CASE("slicing inequality") {
  const CheckOptions opts = fast_options();
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      const VerificationReport r = check_slicing(make_ball(n), k, nullptr, opts);
      CHECK(std::abs(r.slack) <= 1e-6 * r.lhs);
      CHECK(r.verdict != Verdict::Violated);
    }
  }
  const VerificationReport cross = check_slicing(make_lp_ball(3, 1.0), 1, nullptr, opts);
  CHECK(cross.lhs == doctest::Approx(std::pow(4.0 / 3.0, 2.0 / 3.0)).epsilon(1e-8));
  CHECK(cross.epsilon_used >= 2.0 - 1e-10);
  CHECK(cross.verdict == Verdict::Holds);

  const Density g = make_gaussian(3);
  const VerificationReport gauss = check_slicing(make_ball(3), 1, &g, opts);
  CHECK(gauss.slack > 0.0);
  CHECK(gauss.verdict == Verdict::Holds);

  const VerificationReport uncertified = check_slicing(make_lp_ball(5, 4.0), 2, nullptr, opts);
  CHECK_FALSE(uncertified.certification_banner.empty());
}

TEST_CASE("injecting a larger maximum only increases the slack") {
  const double axes[] = {1.0, 1.3, 0.8};
  const StarBody e = make_ellipsoid(axes);
  const StarBody l = make_ball(3, 0.9);
  CheckOptions opts = fast_options();
  const VerificationReport searched = check_stability_volume(e, l, 1, opts);
  // Oracle maximum of the sectional deficit: the section by the plane of the two longest axes.
  const double oracle = kPi * 1.3 * 1.0 - kPi * 0.81;
  CHECK(searched.epsilon_used <= oracle + 1e-9);
  for (double bump : {0.0, 0.1, 1.0}) {
    opts.injected_max = oracle + bump;
    const VerificationReport injected = check_stability_volume(e, l, 1, opts);
    CHECK(injected.slack >= searched.slack - 1e-12);
    CHECK(static_cast<int>(injected.verdict) <= static_cast<int>(searched.verdict));
  }
  opts.injected_max = 2.0 * kPi;
  const VerificationReport slicing = check_slicing(e, 1, nullptr, opts);
  CHECK(slicing.rhs == doctest::Approx(c_nk(3, 1) * 2.0 * kPi));
}

TEST_CASE("lemma closed forms") {
  const RadialRule rule;
  auto constant = [](double) { return 1.0; };
  const VerificationReport r = lemma_check(1.0, 2.0, 1.0, 2, constant, rule);
  CHECK(r.lhs == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(std::abs(r.rhs) < 1e-14);
  CHECK(r.verdict == Verdict::Holds);

  const VerificationReport eq = lemma_check(0.7, 0.7, 2.0, 4, [](double t) { return 1.0 + t * t; }, rule);
  CHECK(eq.slack == 0.0);
  CHECK(eq.verdict == Verdict::Holds);

  // alpha = 1: rhs - lhs = b^n/n - a^k b^{n-k}/(n-k) - a^n/n + a^n/(n-k) >= 0.
  RandomSource gen(5150);
  for (int i = 0; i < 50; ++i) {
    const double a = 0.1 + 1.9 * gen.uniform();
    const double b = 0.1 + 1.9 * gen.uniform();
    const int n = 3 + i % 3;
    const double k = 1.0 + i % 2;
    const VerificationReport c = lemma_check(a, b, k, n, constant, rule);
    const double lhs = std::pow(a, n) / n - std::pow(a, n) / (n - k);
    const double rhs = std::pow(b, n) / n - std::pow(a, k) * std::pow(b, n - k) / (n - k);
    CHECK(c.lhs == doctest::Approx(lhs).epsilon(1e-12));
    CHECK(c.rhs == doctest::Approx(rhs).epsilon(1e-12));
  }

  CHECK_THROWS_AS(lemma_check(1.0, 2.0, 1.0, 3, [](double t) { return t - 0.5; }, rule), Error);
  CHECK_THROWS_AS(lemma_check(-1.0, 2.0, 1.0, 3, constant, rule), Error);
  CHECK_THROWS_AS(lemma_check(1.0, 2.0, 3.0, 3, constant, rule), Error);
}

TEST_CASE("lemma property sweep over random polynomials") {
  RandomSource gen(777);
  const RadialRule rule;
  int violations = 0;
  for (int i = 0; i < 300; ++i) {
    const double a = 0.01 + 1.99 * gen.uniform();
    const double b = 0.01 + 1.99 * gen.uniform();
    const int n = 3 + static_cast<int>(gen.uniform() * 3);
    const double k = 1.0 + static_cast<int>(gen.uniform() * (n - 1));
    std::vector<double> coeffs(4);
    for (double& c : coeffs) c = gen.uniform();
    auto alpha = [coeffs](double t) {
      double v = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
      return v;
    };
    if (lemma_check(a, b, k, n, alpha, rule).verdict == Verdict::Violated) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("sharpness sweep matches the triangle moment oracle") {
  const int js[] = {2, 5, 10, 25, 50, 500};
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}) {
    const SharpnessResult res = sharpness_sweep(n, k, js, RadialRule{});
    CHECK(res.limit == doctest::Approx(static_cast<double>(n) / (n - k) * c_nk(n, k)).epsilon(1e-14));
    REQUIRE(res.points.size() == 6);
    for (std::size_t i = 0; i < res.points.size(); ++i) {
      CHECK(res.points[i].ratio > 0.0);
      CHECK(res.points[i].ratio == doctest::Approx(ratio_oracle(n, k, res.points[i].j)).epsilon(1e-12));
      if (i > 0) CHECK(res.points[i].ratio > res.points[i - 1].ratio - 1e-9);
    }
    CHECK(std::abs(res.points[4].ratio - res.limit) <= 0.05 * res.limit);
    CHECK(std::abs(res.points[5].ratio - res.limit) <= 0.01 * res.limit);
  }
  const SharpnessResult r31 = sharpness_sweep(3, 1, js, RadialRule{});
  CHECK(r31.limit == doctest::Approx(1.2407009818).epsilon(1e-9));
  const VerificationReport rep = sharpness_report(r31);
  CHECK(rep.statement == Statement::Sharpness);

  const int huge[] = {2000000};
  CHECK_THROWS_WITH_AS(sharpness_sweep(3, 1, huge, RadialRule{}), doctest::Contains("double precision"), Error);
  const int zero[] = {0};
  CHECK_THROWS_AS(sharpness_sweep(3, 1, zero, RadialRule{}), Error);
  CHECK_THROWS_AS(sharpness_sweep(3, 3, js, RadialRule{}), Error);
}
