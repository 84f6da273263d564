#include "starslice/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <tuple>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>

#include "starslice/constants.hpp"
#include "starslice/parallel.hpp"
#include "starslice/random.hpp"

namespace starslice {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kBlock = 4096;
constexpr std::size_t kParallelThreshold = 4 * kBlock;

struct RawRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Full product rule on S^{m-1}, m >= 1, q Gauss points per pi/4 panel.
// Built as a half-set plus exact negations (interleaved).
RawRule product_rule(int m, int q) {
  RawRule out;
  if (m == 1) {
    out.nodes = {1.0, -1.0};
    out.weights = {1.0, 1.0};
    return out;
  }
  const auto& [gx, gw] = gauss_legendre(q);
  const double half = kPi / 8.0;

  auto push_pair = [&](const std::vector<double>& x, double w) {
    out.nodes.insert(out.nodes.end(), x.begin(), x.end());
    for (double v : x) out.nodes.push_back(-v);
    out.weights.push_back(w);
    out.weights.push_back(w);
  };

  std::vector<double> x(static_cast<std::size_t>(m));
  if (m == 2) {
    // phi in [0, pi): four panels; negations cover [pi, 2pi).
    for (int panel = 0; panel < 4; ++panel) {
      const double mid = (2 * panel + 1) * half;
      for (int i = 0; i < q; ++i) {
        const double phi = mid + half * gx[i];
        x[0] = std::cos(phi);
        x[1] = std::sin(phi);
        push_pair(x, half * gw[i]);
      }
    }
    return out;
  }

  const RawRule lower = product_rule(m - 1, q);
  const std::size_t lower_dim = static_cast<std::size_t>(m - 1);
  // psi in [0, pi/2]: two panels; negations cover the lower hemisphere.
  for (int panel = 0; panel < 2; ++panel) {
    const double mid = (2 * panel + 1) * half;
    for (int i = 0; i < q; ++i) {
      const double psi = mid + half * gx[i];
      const double c = std::cos(psi);
      const double s = std::sin(psi);
      const double wpsi = half * gw[i] * std::pow(s, m - 2);
      for (std::size_t j = 0; j < lower.weights.size(); ++j) {
        x[0] = c;
        for (std::size_t d = 0; d < lower_dim; ++d) x[d + 1] = s * lower.nodes[j * lower_dim + d];
        push_pair(x, wpsi * lower.weights[j]);
      }
    }
  }
  return out;
}

int first_primes(int index) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  if (index >= static_cast<int>(std::size(primes))) {
    throw Error("low-discrepancy rule supports sphere dimension m <= 16");
  }
  return primes[index];
}

double radical_inverse(std::uint64_t i, int base) {
  double inv = 1.0 / base;
  double f = inv;
  double r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
    i /= static_cast<std::uint64_t>(base);
    f *= inv;
  }
  return r;
}

RawRule sampled_rule(int m, int level, RuleKind kind, std::uint64_t seed) {
  const std::size_t pairs = 512 * static_cast<std::size_t>(level);
  const double w = sphere_area(m) / static_cast<double>(2 * pairs);
  RawRule out;
  out.nodes.reserve(2 * pairs * static_cast<std::size_t>(m));
  out.weights.assign(2 * pairs, w);
  RandomSource rng(seed);
  std::vector<double> x(static_cast<std::size_t>(m));
  std::uint64_t index = 1;
  for (std::size_t p = 0; p < pairs; ++p) {
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (int d = 0; d < m; ++d) {
        double g = 0.0;
        if (kind == RuleKind::LowDiscrepancy) {
          const double u = radical_inverse(index, first_primes(d));
          g = std::numbers::sqrt2 * boost::math::erf_inv(2.0 * u - 1.0);
        } else {
          g = rng.normal();
        }
        x[static_cast<std::size_t>(d)] = g;
        norm2 += g * g;
      }
      ++index;
    } while (norm2 < 1e-24);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : x) v *= inv;
    out.nodes.insert(out.nodes.end(), x.begin(), x.end());
    for (double v : x) out.nodes.push_back(-v);
  }
  return out;
}

}  // namespace

std::string to_string(RuleKind kind) {
  switch (kind) {
    case RuleKind::ProductAngle: return "product-angle";
    case RuleKind::LowDiscrepancy: return "low-discrepancy";
    case RuleKind::MonteCarlo: return "monte-carlo";
  }
  return "unknown";
}

RuleKind rule_kind_from_string(const std::string& name) {
  if (name == "product-angle") return RuleKind::ProductAngle;
  if (name == "low-discrepancy") return RuleKind::LowDiscrepancy;
  if (name == "monte-carlo") return RuleKind::MonteCarlo;
  throw Error("unknown rule kind '" + name +
              "' (expected product-angle, low-discrepancy or monte-carlo)");
}

SphericalRule::SphericalRule(int ambient_dim, int level, RuleKind kind, std::vector<double> nodes,
                             std::vector<double> weights)
    : dim_(ambient_dim), level_(level), kind_(kind), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.size() != weights_.size() * static_cast<std::size_t>(dim_)) {
    throw Error("SphericalRule: node/weight size mismatch");
  }
}

double SphericalRule::total_weight() const {
  double s = 0.0;
  for (double w : weights_) s += w;
  return s;
}

double SphericalRule::integrate(const std::function<double(std::span<const double>)>& f) const {
  const std::size_t n = size();
  auto block_sum = [&](std::size_t begin, std::size_t end) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += weights_[i] * f(node(i));
    return s;
  };
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  if (n < kParallelThreshold || worker_count() <= 1) {
    double total = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) total += block_sum(b * kBlock, std::min(n, (b + 1) * kBlock));
    return total;
  }
  std::vector<double> partial(blocks, 0.0);
  parallel_for(blocks, [&](std::size_t b) {
    partial[b] = block_sum(b * kBlock, std::min(n, (b + 1) * kBlock));
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

SphericalRule sphere_rule(int m, int level, RuleKind kind, std::uint64_t seed) {
  if (m < 1) throw Error("sphere_rule: ambient dimension must be >= 1, got " + std::to_string(m));
  if (level < 1) throw Error("sphere_rule: level must be >= 1, got " + std::to_string(level));
  if (m == 1) {
    return SphericalRule(1, level, kind, {1.0, -1.0}, {1.0, 1.0});
  }
  RawRule raw;
  if (kind == RuleKind::ProductAngle) {
    if (m > 4) {
      throw Error("sphere_rule: product-angle supports m <= 4 (got m = " + std::to_string(m) +
                  "); use low-discrepancy or monte-carlo");
    }
    raw = product_rule(m, level + 5);
  } else {
    raw = sampled_rule(m, level, kind, seed);
  }
  return SphericalRule(m, level, kind, std::move(raw.nodes), std::move(raw.weights));
}

std::shared_ptr<const SphericalRule> cached_sphere_rule(int m, int level, RuleKind kind,
                                                        std::uint64_t seed) {
  using Key = std::tuple<int, int, RuleKind, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const SphericalRule>> cache;
  if (kind != RuleKind::MonteCarlo) seed = 0;
  const Key key{m, level, kind, seed};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const SphericalRule>(sphere_rule(m, level, kind, seed));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(rule)).first->second;
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int points) {
  static std::mutex mutex;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  if (points < 1) throw Error("gauss_legendre: need at least one point");
  std::lock_guard lock(mutex);
  if (auto it = cache.find(points); it != cache.end()) return it->second;

  const int n = points;
  // Legendre P_n and its derivative by the three-term recurrence.
  auto legendre = [n](double z) {
    double p0 = 1.0, p1 = z;
    for (int j = 2; j <= n; ++j) {
      const double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    return std::make_pair(p1, n * (z * p1 - p0) / (z * z - 1.0));
  };
  std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(z);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double dp = legendre(z).second;
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    x[lo] = -z;
    x[hi] = z;
    w[lo] = weight;
    w[hi] = weight;
  }
  if (n % 2 == 1) x[static_cast<std::size_t>(n / 2)] = 0.0;
  return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

RadialRule RadialRule::companion() const {
  RadialRule c = *this;
  if (kind == RadialKind::FixedOrder) {
    c.order = std::max(1, order / 2);
  } else {
    c.tolerance = tolerance * 100.0;
  }
  return c;
}

double radial_integrate(const std::function<double(double)>& g, double a, const RadialRule& rule,
                        std::span<const double> breakpoints) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw Error("radial_integrate: upper limit must be positive and finite");
  }
  auto checked = [&](double r) {
    const double v = g(r);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "radial_integrate: non-finite integrand value at r = " << r;
      throw Error(msg.str());
    }
    return v;
  };

  std::vector<double> cuts{0.0};
  for (double b : breakpoints) {
    if (b > 0.0 && b < a) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  cuts.push_back(a);

  double total = 0.0;
  if (rule.kind == RadialKind::Adaptive) {
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
      double err = 0.0;
      total += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          checked, cuts[p], cuts[p + 1], 20, rule.tolerance, &err);
    }
    return total;
  }

  if (rule.order < 0 || rule.panels < 1) throw Error("radial_integrate: invalid fixed-order rule");
  const auto& [gx, gw] = gauss_legendre(rule.points_per_panel());
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    const double width = (cuts[p + 1] - cuts[p]) / rule.panels;
    for (int panel = 0; panel < rule.panels; ++panel) {
      const double lo = cuts[p] + panel * width;
      const double half = 0.5 * width;
      const double mid = lo + half;
      double s = 0.0;
      for (std::size_t i = 0; i < gx.size(); ++i) s += gw[i] * checked(mid + half * gx[i]);
      total += half * s;
    }
  }
  return total;
}

}  // namespace starslice
