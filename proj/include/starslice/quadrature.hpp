#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "starslice/common.hpp"

namespace starslice {

enum class RuleKind { ProductAngle, LowDiscrepancy, MonteCarlo };

std::string to_string(RuleKind kind);
RuleKind rule_kind_from_string(const std::string& name);

inline constexpr std::uint64_t kDefaultRuleSeed = 0x5eedULL;

/// Node/weight set on the unit sphere S^{m-1} of R^m.
///
/// Nodes are stored row-major. Every rule is centrally symmetric: node 2i+1
/// is the exact negation of node 2i and carries the same weight, so odd
/// integrands integrate to zero up to rounding.
class SphericalRule {
 public:
  SphericalRule(int ambient_dim, int level, RuleKind kind, std::vector<double> nodes,
                std::vector<double> weights);

  int ambient_dim() const { return dim_; }
  int level() const { return level_; }
  RuleKind kind() const { return kind_; }
  std::size_t size() const { return weights_.size(); }

  std::span<const double> node(std::size_t i) const {
    return {nodes_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
  }
  double weight(std::size_t i) const { return weights_[i]; }
  double total_weight() const;

  /// Sum of weight(i) * f(node(i)) in a fixed order, partitioned into fixed
  /// blocks so the result does not depend on the worker count.
  double integrate(const std::function<double(std::span<const double>)>& f) const;

 private:
  int dim_;
  int level_;
  RuleKind kind_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Builds a rule on S^{m-1}.
///
/// ProductAngle (m <= 4): composite Gauss-Legendre in hyperspherical angles
/// with panel breaks at multiples of pi/4, so coordinate hyperplanes (and on
/// the circle, the diagonals) never cut a panel. level+5 points per panel;
/// even polynomials of degree <= 2*level integrate to within 1e-10.
/// LowDiscrepancy: antipodal pairs from a Halton sequence pushed through the
/// Gaussian inverse CDF; 512*level pairs. MonteCarlo: same with seeded
/// Gaussian draws. m = 1 always yields S^0 = {+1, -1} with unit weights.
SphericalRule sphere_rule(int m, int level, RuleKind kind, std::uint64_t seed = kDefaultRuleSeed);

/// Process-wide memoized sphere_rule. Returned rules are immutable.
std::shared_ptr<const SphericalRule> cached_sphere_rule(int m, int level, RuleKind kind,
                                                        std::uint64_t seed = kDefaultRuleSeed);

/// Gauss-Legendre nodes and weights on [-1, 1]; nodes ascending and exactly
/// antisymmetric.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int points);

enum class RadialKind { FixedOrder, Adaptive };

/// One-dimensional rule on an interval [0, a].
struct RadialRule {
  RadialKind kind = RadialKind::FixedOrder;
  int order = 31;           // polynomial degree integrated exactly, per panel
  int panels = 1;
  double tolerance = 1e-10;  // adaptive only

  static RadialRule fixed(int order, int panels = 1) {
    return RadialRule{RadialKind::FixedOrder, order, panels, 1e-10};
  }
  static RadialRule adaptive(double tolerance) {
    return RadialRule{RadialKind::Adaptive, 31, 1, tolerance};
  }

  /// A cheaper rule of the same family, used for error estimation.
  RadialRule companion() const;

  int points_per_panel() const { return order / 2 + 1; }

  bool operator==(const RadialRule&) const = default;
};

/// Integral of g over [0, a]. Interior breakpoints (kinks of g) split the
/// interval so each piece is smooth. Throws on non-finite g, naming the
/// abscissa.
double radial_integrate(const std::function<double(double)>& g, double a, const RadialRule& rule,
                        std::span<const double> breakpoints = {});

}  // namespace starslice
