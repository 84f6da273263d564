#include "starslice/radon.hpp"

#include <cmath>
#include <vector>

#include "starslice/common.hpp"

namespace starslice {

namespace {

double integrate_over_section(const SphericalFunction& f, const Subspace& h, const SphericalRule& rule) {
  std::vector<double> x(static_cast<std::size_t>(h.ambient_dim()));
  return rule.integrate([&](std::span<const double> u) {
    h.embed(u, x);
    return f(x);
  });
}

}  // namespace

double radon_hyperplane(const SphericalFunction& f, std::span<const double> xi, const SphericalRule& rule) {
  const int n = static_cast<int>(xi.size());
  if (f.ambient_dim != n) throw Error("radon_hyperplane: function and direction dimensions differ");
  if (rule.ambient_dim() != n - 1) throw Error("radon_hyperplane: rule must live on S^{n-2}");
  return integrate_over_section(f, hyperplane(xi), rule);
}

double radon_lower(const SphericalFunction& f, const Subspace& h, const SphericalRule& rule) {
  if (f.ambient_dim != h.ambient_dim()) throw Error("radon_lower: function and subspace dimensions differ");
  if (rule.ambient_dim() != h.dim()) {
    throw Error("radon_lower: rule on S^" + std::to_string(rule.ambient_dim() - 1) +
                " does not match subspace dimension " + std::to_string(h.dim()));
  }
  return integrate_over_section(f, h, rule);
}

double selfduality_residual(const SphericalFunction& f, const SphericalFunction& g,
                            const SphericalRule& outer_rule, const SphericalRule& inner_rule) {
  const int n = outer_rule.ambient_dim();
  if (f.ambient_dim != n || g.ambient_dim != n) throw Error("selfduality_residual: dimension mismatch");
  if (inner_rule.ambient_dim() != n - 1) throw Error("selfduality_residual: inner rule must live on S^{n-2}");
  // Both sides summed node-by-node in one pass so f = g cancels exactly.
  double diff = 0.0;
  for (std::size_t i = 0; i < outer_rule.size(); ++i) {
    const auto xi = outer_rule.node(i);
    const double lhs = radon_hyperplane(f, xi, inner_rule) * g(xi);
    const double rhs = f(xi) * radon_hyperplane(g, xi, inner_rule);
    diff += outer_rule.weight(i) * (lhs - rhs);
  }
  return std::abs(diff);
}

}  // namespace starslice
