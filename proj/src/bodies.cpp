#include "starslice/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "starslice/grassmann.hpp"
#include "starslice/random.hpp"
#include "starslice/slicing.hpp"

namespace starslice {

namespace {

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Certification intersection_certificate(std::string provenance) {
  return Certification{BodyClass::IntersectionBody, 1, std::move(provenance)};
}

}  // namespace

bool Certification::certifies(int kk) const {
  switch (body_class) {
    case BodyClass::IntersectionBody: return kk >= 1;
    case BodyClass::GeneralizedIntersectionBody: return k >= 1 && kk >= 1 && kk % k == 0;
    case BodyClass::Uncertified: return false;
  }
  return false;
}

StarBody::StarBody(int ambient_dim, GaugeFn gauge, Certification certification, std::string label,
                   std::optional<double> ball_radius)
    : dim_(ambient_dim),
      gauge_(std::move(gauge)),
      cert_(std::move(certification)),
      label_(std::move(label)),
      ball_radius_(ball_radius) {
  if (dim_ < 1) throw Error("StarBody: ambient dimension must be >= 1");
}

double StarBody::gauge(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw Error("gauge: dimension mismatch for body " + label_);
  bool zero = true;
  for (double v : x) {
    if (!std::isfinite(v)) throw Error("gauge: non-finite coordinate for body " + label_);
    if (v != 0.0) zero = false;
  }
  if (zero) return 0.0;
  return gauge_(x);
}

double StarBody::radial(std::span<const double> theta) const {
  double norm2 = 0.0;
  for (double v : theta) norm2 += v * v;
  if (!(std::abs(std::sqrt(norm2) - 1.0) <= 1e-10)) {
    throw Error("radial: direction is not a unit vector (body " + label_ + ")");
  }
  return 1.0 / gauge(theta);
}

StarBody StarBody::scaled(double lambda) const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error("scaled: factor must be positive");
  auto inner = gauge_;
  std::optional<double> radius;
  if (ball_radius_) radius = *ball_radius_ * lambda;
  return StarBody(
      dim_, [inner, lambda](std::span<const double> x) { return inner(x) / lambda; }, cert_,
      format_number(lambda) + "*" + label_, radius);
}

StarBody make_ball(int n, double radius) {
  if (n < 2) throw Error("make_ball: dimension must be >= 2");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw Error("make_ball: radius must be positive");
  const double inv = 1.0 / radius;
  std::string label = "ball(" + std::to_string(n) + (radius == 1.0 ? "" : ", r=" + format_number(radius)) + ")";
  return StarBody(
      n,
      [inv](std::span<const double> x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return std::sqrt(s) * inv;
      },
      intersection_certificate("Euclidean ball"), std::move(label), radius);
}

StarBody make_lp_ball(int n, double p) {
  if (n < 2) throw Error("make_lp_ball: dimension must be >= 2");
  if (!(p > 0.0)) throw Error("make_lp_ball: p must be positive or infinity");

  Certification cert;
  if (p <= 2.0) {
    cert = intersection_certificate("unit ball of l_p with 0 < p <= 2, a subspace of L_p");
  } else if (n <= 4) {
    cert = intersection_certificate("origin-symmetric convex body in dimension n <= 4");
  } else {
    cert = Certification{BodyClass::Uncertified, 1, "l_p ball with p > 2 in dimension n >= 5"};
  }

  const std::string label = "lp(" + std::to_string(n) + ", p=" + (std::isinf(p) ? "inf" : format_number(p)) + ")";
  GaugeFn gauge;
  if (std::isinf(p)) {
    gauge = [](std::span<const double> x) {
      double m = 0.0;
      for (double v : x) m = std::max(m, std::abs(v));
      return m;
    };
  } else if (p == 1.0) {
    gauge = [](std::span<const double> x) {
      double s = 0.0;
      for (double v : x) s += std::abs(v);
      return s;
    };
  } else if (p == 2.0) {
    gauge = [](std::span<const double> x) {
      double s = 0.0;
      for (double v : x) s += v * v;
      return std::sqrt(s);
    };
  } else {
    gauge = [p](std::span<const double> x) {
      // scale by the max coordinate to avoid under/overflow
      double m = 0.0;
      for (double v : x) m = std::max(m, std::abs(v));
      if (m == 0.0) return 0.0;
      double s = 0.0;
      for (double v : x) s += std::pow(std::abs(v) / m, p);
      return m * std::pow(s, 1.0 / p);
    };
  }
  return StarBody(n, std::move(gauge), std::move(cert), label);
}

StarBody make_ellipsoid(std::span<const double> semi_axes) {
  const int n = static_cast<int>(semi_axes.size());
  if (n < 2) throw Error("make_ellipsoid: need at least two semi-axes");
  std::vector<double> inv;
  std::string label = "ellipsoid(";
  for (std::size_t i = 0; i < semi_axes.size(); ++i) {
    const double a = semi_axes[i];
    if (!(a > 0.0) || !std::isfinite(a)) throw Error("make_ellipsoid: semi-axes must be positive");
    inv.push_back(1.0 / a);
    label += (i ? "," : "") + format_number(a);
  }
  label += ")";
  const bool round = std::all_of(semi_axes.begin(), semi_axes.end(), [&](double a) { return a == semi_axes[0]; });
  std::optional<double> radius;
  if (round) radius = semi_axes[0];
  return StarBody(
      n,
      [inv](std::span<const double> x) {
        double s = 0.0;
        for (std::size_t i = 0; i < inv.size(); ++i) {
          const double t = x[i] * inv[i];
          s += t * t;
        }
        return std::sqrt(s);
      },
      intersection_certificate("invertible linear image of the Euclidean ball"), std::move(label), radius);
}

RadialTable::RadialTable(std::shared_ptr<const SphericalRule> grid, std::vector<double> radii) {
  if (!grid) throw Error("RadialTable: missing grid");
  if (radii.size() != grid->size()) throw Error("RadialTable: one radius per grid node required");
  dim_ = grid->ambient_dim();
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const auto x = grid->node(i);
    nodes_.insert(nodes_.end(), x.begin(), x.end());
  }
  radii_ = std::move(radii);
  build();
}

RadialTable::RadialTable(int dim, std::vector<double> nodes, std::vector<double> radii)
    : dim_(dim), nodes_(std::move(nodes)), radii_(std::move(radii)) {
  if (dim_ < 1) throw Error("RadialTable: dimension must be >= 1");
  if (nodes_.size() != radii_.size() * static_cast<std::size_t>(dim_)) {
    throw Error("RadialTable: one radius per node required");
  }
  build();
}

void RadialTable::build() {
  if (radii_.empty()) throw Error("RadialTable: no nodes");
  for (double r : radii_) {
    if (!(r > 0.0) || !std::isfinite(r)) throw Error("RadialTable: radii must be positive and finite");
  }
  const std::size_t m = static_cast<std::size_t>(dim_);
  const std::size_t n = radii_.size();

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return nodes_[a * m] < nodes_[b * m]; });
  std::vector<double> nodes(nodes_.size());
  std::vector<double> radii(n);
  first_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy_n(nodes_.begin() + static_cast<std::ptrdiff_t>(order[i] * m), m,
                nodes.begin() + static_cast<std::ptrdiff_t>(i * m));
    radii[i] = radii_[order[i]];
    first_[i] = nodes[i * m];
  }
  nodes_ = std::move(nodes);
  radii_ = std::move(radii);

  // Bandwidth: 1.5x the covering radius estimated on a fixed probe set.
  RandomSource rng(0xb0d1e5ULL);
  std::vector<double> probe(m);
  double cover2 = 0.0;
  const std::size_t probes = std::min<std::size_t>(2000, 4 * n);
  for (std::size_t s = 0; s < probes; ++s) {
    double norm2 = 0.0;
    for (double& v : probe) {
      v = rng.normal();
      norm2 += v * v;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      double dot = 0.0;
      for (std::size_t d = 0; d < m; ++d) dot += nodes_[i * m + d] * probe[d] * inv;
      nearest = std::min(nearest, 2.0 - 2.0 * dot);
    }
    cover2 = std::max(cover2, nearest);
  }
  bandwidth_ = 1.5 * std::sqrt(std::max(cover2, 0.0));
  if (!(bandwidth_ > 0.0)) throw Error("RadialTable: degenerate grid");
}

double RadialTable::radius(std::span<const double> theta) const {
  const std::size_t m = static_cast<std::size_t>(dim_);
  const double h = bandwidth_;
  const double h2 = h * h;
  // Nodes within chord h differ from theta by at most h in the first coordinate.
  const auto lo = std::lower_bound(first_.begin(), first_.end(), theta[0] - h) - first_.begin();
  const auto hi = std::upper_bound(first_.begin(), first_.end(), theta[0] + h) - first_.begin();
  double num = 0.0;
  double den = 0.0;
  for (auto i = static_cast<std::size_t>(lo); i < static_cast<std::size_t>(hi); ++i) {
    const double* node = nodes_.data() + i * m;
    double chord2 = 0.0;
    for (std::size_t d = 0; d < m; ++d) {
      const double diff = node[d] - theta[d];
      chord2 += diff * diff;
    }
    if (chord2 >= h2) continue;
    if (chord2 <= 1e-28) return radii_[i];
    const double dist = std::sqrt(chord2);
    const double t = (h - dist) / (h * dist);
    num += t * t * radii_[i];
    den += t * t;
  }
  if (!(den > 0.0)) throw Error("RadialTable: interpolation failed, no node within bandwidth");
  return num / den;
}

StarBody intersection_body_of(const StarBody& body, std::shared_ptr<const SphericalRule> grid,
                              const SphericalRule& sec_rule) {
  const int n = body.ambient_dim();
  if (!grid || grid->ambient_dim() != n) throw Error("intersection_body_of: grid must live on S^{n-1}");
  if (sec_rule.ambient_dim() != n - 1) throw Error("intersection_body_of: section rule must live on S^{n-2}");

  std::vector<double> nodes;
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const auto x = grid->node(i);
    nodes.insert(nodes.end(), x.begin(), x.end());
  }
  for (int axis = 0; axis < n; ++axis) {
    for (double sign : {1.0, -1.0}) {
      for (int d = 0; d < n; ++d) nodes.push_back(d == axis ? sign : 0.0);
    }
  }
  const std::size_t count = nodes.size() / static_cast<std::size_t>(n);
  std::vector<double> radii(count);
  // Nodes come in antipodal pairs (2i, 2i+1) sharing one hyperplane.
  for (std::size_t i = 0; i < count; i += 2) {
    const Subspace h = hyperplane(std::span<const double>(nodes.data() + i * static_cast<std::size_t>(n),
                                                          static_cast<std::size_t>(n)));
    radii[i] = section_volume(body, h, sec_rule);
    radii[i + 1] = radii[i];
  }
  auto table = std::make_shared<const RadialTable>(n, std::move(nodes), std::move(radii));
  return StarBody(
      n,
      [table](std::span<const double> x) {
        double norm2 = 0.0;
        for (double v : x) norm2 += v * v;
        const double norm = std::sqrt(norm2);
        thread_local std::vector<double> theta;
        theta.assign(x.begin(), x.end());
        for (double& v : theta) v /= norm;
        return norm / table->radius(theta);
      },
      intersection_certificate("intersection body of the star body " + body.label() +
                               " (radial function interpolated from a grid)"),
      "intersection_of(" + body.label() + ")");
}

}  // namespace starslice
