#include "starslice/slicing.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "starslice/radon.hpp"

namespace starslice {

namespace {

int mapped_level(int base, int m) {
  if (m <= 2) return 2 * base;
  if (m == 3) return base;
  if (m == 4) return std::max(1, base / 2);
  return 2 * base;
}

int companion_level(int level) { return std::max(1, level - std::max(1, level / 4)); }

void require_dim(const StarBody& body, const SphericalRule& rule, int m, const char* what) {
  if (rule.ambient_dim() != m) {
    throw Error(std::string(what) + ": rule on S^" + std::to_string(rule.ambient_dim() - 1) +
                " does not match dimension " + std::to_string(m) + " (body " + body.label() + ")");
  }
}

Estimate with_error(double fine, double coarse) {
  return {fine, std::abs(fine - coarse) + kRoundoffRelative * std::abs(fine)};
}

// int_0^rho r^d f(r theta) dr for unit theta.
double radial_moment(const Density& f, std::span<const double> theta, std::vector<double>& point, double rho, int d,
                     const RadialRule& rrule) {
  if (f.is_uniform()) return std::pow(rho, d + 1) / (d + 1);
  if (f.is_radial()) {
    return radial_integrate([&](double r) { return std::pow(r, d) * f.profile(r); }, rho, rrule, f.breakpoints());
  }
  return radial_integrate(
      [&](double r) {
        for (std::size_t i = 0; i < theta.size(); ++i) point[i] = r * theta[i];
        return std::pow(r, d) * f(point);
      },
      rho, rrule);
}

// Radial-density measure of a centered Euclidean ball of radius R in R^m.
double ball_radial_measure(int m, double radius, const Density& f, const RadialRule& rrule) {
  std::vector<double> unused;
  std::vector<double> e(static_cast<std::size_t>(m), 0.0);
  e[0] = 1.0;
  return sphere_area(m) * radial_moment(f, e, unused, radius, m - 1, rrule);
}

bool radial_fast_path(const StarBody& body, const Density& f) { return f.is_radial() && body.ball_radius(); }

}  // namespace

int QuadratureConfig::level_for(int m) const {
  if (auto it = levels.find(m); it != levels.end()) return it->second;
  return mapped_level(level, m);
}

int QuadratureConfig::search_level_for(int m) const { return mapped_level(search_level, m); }

RuleKind QuadratureConfig::kind_for(int m) const {
  if (auto it = kinds.find(m); it != kinds.end()) return it->second;
  return m <= 4 ? RuleKind::ProductAngle : RuleKind::LowDiscrepancy;
}

std::shared_ptr<const SphericalRule> QuadratureConfig::rule(int m) const {
  return cached_sphere_rule(m, level_for(m), kind_for(m), seed);
}

std::shared_ptr<const SphericalRule> QuadratureConfig::companion_rule(int m) const {
  return cached_sphere_rule(m, companion_level(level_for(m)), kind_for(m), seed);
}

std::shared_ptr<const SphericalRule> QuadratureConfig::search_rule(int m) const {
  if (m <= 3) return cached_sphere_rule(m, search_level_for(m), kind_for(m), seed);
  // Product rules on S^3 and above are too large for inner search loops.
  return cached_sphere_rule(m, std::max(1, search_level / 2), RuleKind::LowDiscrepancy, seed);
}

double body_volume(const StarBody& body, const SphericalRule& rule) {
  const int n = body.ambient_dim();
  require_dim(body, rule, n, "body_volume");
  const double sum = rule.integrate([&](std::span<const double> theta) {
    return std::pow(body.gauge_unchecked(theta), -n);
  });
  return sum / n;
}

Estimate body_volume(const StarBody& body, const QuadratureConfig& quad) {
  const int n = body.ambient_dim();
  return with_error(body_volume(body, *quad.rule(n)), body_volume(body, *quad.companion_rule(n)));
}

double section_volume(const StarBody& body, const Subspace& h, const SphericalRule& rule) {
  if (h.ambient_dim() != body.ambient_dim()) throw Error("section_volume: subspace and body dimensions differ");
  const int m = h.dim();
  require_dim(body, rule, m, "section_volume");
  std::vector<double> x(static_cast<std::size_t>(h.ambient_dim()));
  const double sum = rule.integrate([&](std::span<const double> u) {
    h.embed(u, x);
    return std::pow(body.gauge_unchecked(x), -m);
  });
  return sum / m;
}

Estimate section_volume(const StarBody& body, const Subspace& h, const QuadratureConfig& quad) {
  const int m = h.dim();
  return with_error(section_volume(body, h, *quad.rule(m)), section_volume(body, h, *quad.companion_rule(m)));
}

double section_volume_radon(const StarBody& body, const Subspace& h, const SphericalRule& rule) {
  const int m = h.dim();
  SphericalFunction power{body.ambient_dim(),
                          [&body, m](std::span<const double> theta) { return std::pow(body.gauge(theta), -m); },
                          true};
  return radon_lower(power, h, rule) / m;
}

double body_measure(const StarBody& body, const Density& f, const SphericalRule& srule, const RadialRule& rrule) {
  const int n = body.ambient_dim();
  if (f.ambient_dim() != n) throw Error("body_measure: density and body dimensions differ");
  require_dim(body, srule, n, "body_measure");
  std::vector<double> point(static_cast<std::size_t>(n));
  return srule.integrate([&](std::span<const double> theta) {
    const double rho = 1.0 / body.gauge_unchecked(theta);
    return radial_moment(f, theta, point, rho, n - 1, rrule);
  });
}

Estimate body_measure(const StarBody& body, const Density& f, const QuadratureConfig& quad) {
  const int n = body.ambient_dim();
  if (f.ambient_dim() != n) throw Error("body_measure: density and body dimensions differ");
  if (radial_fast_path(body, f)) {
    return with_error(ball_radial_measure(n, *body.ball_radius(), f, quad.radial),
                      ball_radial_measure(n, *body.ball_radius(), f, quad.radial.companion()));
  }
  return with_error(body_measure(body, f, *quad.rule(n), quad.radial),
                    body_measure(body, f, *quad.companion_rule(n), quad.radial.companion()));
}

double section_measure(const StarBody& body, const Subspace& h, const Density& f, const SphericalRule& srule,
                       const RadialRule& rrule) {
  const int n = body.ambient_dim();
  if (h.ambient_dim() != n || f.ambient_dim() != n) throw Error("section_measure: dimension mismatch");
  const int m = h.dim();
  require_dim(body, srule, m, "section_measure");
  std::vector<double> theta(static_cast<std::size_t>(n));
  std::vector<double> point(static_cast<std::size_t>(n));
  return srule.integrate([&](std::span<const double> u) {
    h.embed(u, theta);
    const double rho = 1.0 / body.gauge_unchecked(theta);
    return radial_moment(f, theta, point, rho, m - 1, rrule);
  });
}

Estimate section_measure(const StarBody& body, const Subspace& h, const Density& f, const QuadratureConfig& quad) {
  const int m = h.dim();
  if (radial_fast_path(body, f)) {
    return with_error(ball_radial_measure(m, *body.ball_radius(), f, quad.radial),
                      ball_radial_measure(m, *body.ball_radius(), f, quad.radial.companion()));
  }
  return with_error(section_measure(body, h, f, *quad.rule(m), quad.radial),
                    section_measure(body, h, f, *quad.companion_rule(m), quad.radial.companion()));
}

Estimate section_quantity(const StarBody& body, const Subspace& h, const Density* f, const QuadratureConfig& quad) {
  if (f == nullptr || f->is_uniform()) return section_volume(body, h, quad);
  return section_measure(body, h, *f, quad);
}

double section_quantity_search(const StarBody& body, const Subspace& h, const Density* f,
                               const QuadratureConfig& quad) {
  const int m = h.dim();
  if (f == nullptr || f->is_uniform()) return section_volume(body, h, *quad.search_rule(m));
  if (radial_fast_path(body, *f)) return section_measure(body, h, *f, quad).value;
  return section_measure(body, h, *f, *quad.search_rule(m), quad.radial.companion());
}

Estimate body_quantity(const StarBody& body, const Density* f, const QuadratureConfig& quad) {
  if (f == nullptr || f->is_uniform()) return body_volume(body, quad);
  return body_measure(body, *f, quad);
}

ExtremalSection max_section(const StarBody& body, int k, const Density* f, const QuadratureConfig& quad,
                            const SearchOptions& opts) {
  const int n = body.ambient_dim();
  if (k < 1 || k >= n) throw Error("max_section: need 1 <= k < n");
  if (f && f->ambient_dim() != n) throw Error("max_section: density and body dimensions differ");
  return maximize_over_grassmannian(
      n, n - k, [&](const Subspace& h) { return section_quantity_search(body, h, f, quad); },
      [&](const Subspace& h) { return section_quantity(body, h, f, quad); }, opts);
}

}  // namespace starslice
