#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "starslice/bodies.hpp"
#include "starslice/common.hpp"
#include "starslice/constants.hpp"
#include "starslice/density.hpp"
#include "starslice/grassmann.hpp"
#include "starslice/quadrature.hpp"

namespace starslice {

/// Rule selection per sphere dimension.
///
/// `level` is a base refinement; the level actually used on S^{m-1} is
/// 2*level for m <= 2, level for m = 3, max(1, level/2) for m = 4 and
/// 2*level for m >= 5 (sampled rules), unless overridden in `levels`.
/// Searches use the same mapping applied to `search_level`. Every estimate
/// reports |fine - companion| as its error, where the companion runs a
/// coarser level and the radial companion rule.
struct QuadratureConfig {
  int level = 8;
  int search_level = 4;
  std::map<int, int> levels;
  std::map<int, RuleKind> kinds;
  RadialRule radial = RadialRule::fixed(31);
  std::uint64_t seed = kDefaultRuleSeed;

  int level_for(int m) const;
  int search_level_for(int m) const;
  RuleKind kind_for(int m) const;

  std::shared_ptr<const SphericalRule> rule(int m) const;
  std::shared_ptr<const SphericalRule> companion_rule(int m) const;
  std::shared_ptr<const SphericalRule> search_rule(int m) const;

  bool operator==(const QuadratureConfig&) const = default;
};

/// Relative rounding allowance added to every reported error.
inline constexpr double kRoundoffRelative = 1e-12;

// Volumes: Vol_n(K) = (1/n) int rho_K^n.
double body_volume(const StarBody& body, const SphericalRule& rule);
Estimate body_volume(const StarBody& body, const QuadratureConfig& quad);

// Vol_m(K cap H) computed as the m-dimensional polar volume of the section.
double section_volume(const StarBody& body, const Subspace& h, const SphericalRule& rule);
Estimate section_volume(const StarBody& body, const Subspace& h, const QuadratureConfig& quad);

/// The same quantity through the Radon route (1/m) R_m(||.||_K^{-m})(H).
double section_volume_radon(const StarBody& body, const Subspace& h, const SphericalRule& rule);

// Measures: mu(K) = int_S int_0^{rho(theta)} r^{n-1} f(r theta) dr dtheta.
double body_measure(const StarBody& body, const Density& f, const SphericalRule& srule, const RadialRule& rrule);
Estimate body_measure(const StarBody& body, const Density& f, const QuadratureConfig& quad);

double section_measure(const StarBody& body, const Subspace& h, const Density& f, const SphericalRule& srule,
                       const RadialRule& rrule);
Estimate section_measure(const StarBody& body, const Subspace& h, const Density& f, const QuadratureConfig& quad);

/// Generic section quantity: volume when f is absent or uniform, else measure.
Estimate section_quantity(const StarBody& body, const Subspace& h, const Density* f, const QuadratureConfig& quad);
double section_quantity_search(const StarBody& body, const Subspace& h, const Density* f,
                               const QuadratureConfig& quad);
Estimate body_quantity(const StarBody& body, const Density* f, const QuadratureConfig& quad);

struct SearchOptions {
  int restarts = 6;      // Haar-random starts added to the coordinate subspaces
  double step = 0.3;     // initial perturbation size
  double min_step = 1e-5;
  double tol = 1e-10;    // relative improvement below which a round counts as failed
  int proposals = 6;     // perturbations tried per round
  int max_probes = 600;  // per restart
  std::uint64_t seed = 20240917;

  bool operator==(const SearchOptions&) const = default;
};

struct ExtremalSection {
  Subspace subspace;
  double value = 0.0;
  double error = 0.0;
  long probe_count = 0;
  std::vector<std::pair<Subspace, double>> restart_log;
};

/// Multi-start stochastic ascent over G(n, m). `search_objective` drives the
/// ascent; each restart's end point is re-scored with `final_objective` and
/// logged. The best logged value (first found wins ties) is returned; it is
/// a lower bound on the true maximum.
ExtremalSection maximize_over_grassmannian(int n, int m,
                                           const std::function<double(const Subspace&)>& search_objective,
                                           const std::function<Estimate(const Subspace&)>& final_objective,
                                           const SearchOptions& opts);

/// Largest (n-k)-dimensional central section volume (f absent) or measure.
ExtremalSection max_section(const StarBody& body, int k, const Density* f, const QuadratureConfig& quad,
                            const SearchOptions& opts);

}  // namespace starslice
