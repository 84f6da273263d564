#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starslice/quadrature.hpp"

namespace starslice {

enum class BodyClass { IntersectionBody, GeneralizedIntersectionBody, Uncertified };

/// Records which known sufficient condition places a body in a class.
/// This is metadata, not a decision procedure.
struct Certification {
  BodyClass body_class = BodyClass::Uncertified;
  int k = 1;  // meaningful for GeneralizedIntersectionBody
  std::string provenance;

  /// True when the body is known to be a generalized k-intersection body.
  /// Intersection bodies qualify for every k; a generalized m-intersection
  /// body qualifies for every multiple of m.
  bool certifies(int k) const;
};

using GaugeFn = std::function<double(std::span<const double>)>;

/// Origin-symmetric star body given by its Minkowski functional.
class StarBody {
 public:
  StarBody(int ambient_dim, GaugeFn gauge, Certification certification, std::string label,
           std::optional<double> ball_radius = std::nullopt);

  int ambient_dim() const { return dim_; }
  const Certification& certification() const { return cert_; }
  const std::string& label() const { return label_; }

  /// Radius when the body is a centered Euclidean ball (enables radial fast paths).
  std::optional<double> ball_radius() const { return ball_radius_; }

  /// ||x||_K. Returns 0 at the origin; throws on non-finite input.
  double gauge(std::span<const double> x) const;

  /// rho_K(theta) = 1 / ||theta||_K for unit theta (|theta| = 1 within 1e-10).
  double radial(std::span<const double> theta) const;

  /// Unchecked gauge for hot loops on points known to be finite and nonzero.
  double gauge_unchecked(std::span<const double> x) const { return gauge_(x); }

  /// lambda * K for lambda > 0. Certification is preserved.
  StarBody scaled(double lambda) const;

 private:
  int dim_;
  GaugeFn gauge_;
  Certification cert_;
  std::string label_;
  std::optional<double> ball_radius_;
};

StarBody make_ball(int n, double radius = 1.0);

/// Unit ball of l_p^n; p = +infinity gives the cube.
StarBody make_lp_ball(int n, double p);

StarBody make_ellipsoid(std::span<const double> semi_axes);

/// Radial values at unit directions, interpolated by compactly supported
/// inverse-distance weights ((h - d)_+ / (h d))^2 over nodes within chordal
/// distance h. Exact at nodes, continuous, first-order accurate, and even
/// when nodes come in antipodal pairs with equal values.
class RadialTable {
 public:
  RadialTable(std::shared_ptr<const SphericalRule> grid, std::vector<double> radii);
  /// Row-major unit nodes in R^dim.
  RadialTable(int dim, std::vector<double> nodes, std::vector<double> radii);

  int ambient_dim() const { return dim_; }
  std::size_t size() const { return radii_.size(); }
  double bandwidth() const { return bandwidth_; }
  const std::vector<double>& radii() const { return radii_; }

  /// Interpolated radius at a unit direction.
  double radius(std::span<const double> theta) const;

 private:
  void build();

  int dim_ = 0;
  std::vector<double> nodes_;  // sorted by first coordinate
  std::vector<double> radii_;
  std::vector<double> first_;  // first coordinate of each node
  double bandwidth_ = 0.0;
};

/// K with rho_K(xi) = Vol_{n-1}(L cap xi^perp) at every grid node and at
/// the coordinate directions +-e_i, interpolated through a RadialTable.
/// sec_rule lives on S^{n-2}.
StarBody intersection_body_of(const StarBody& body, std::shared_ptr<const SphericalRule> grid,
                              const SphericalRule& sec_rule);

}  // namespace starslice
