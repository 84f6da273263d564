#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace starslice {

/// Even, continuous, non-negative density f on R^n defining a measure mu.
class Density {
 public:
  using Eval = std::function<double(std::span<const double>)>;
  using Profile = std::function<double(double)>;

  /// General (possibly non-radial) density.
  Density(int ambient_dim, Eval eval, std::string label);

  /// Radial density f(x) = profile(|x|_2). breakpoints are radii where the
  /// profile is not smooth; radial integration splits there.
  static Density radial(int ambient_dim, Profile profile, std::vector<double> breakpoints, std::string label);

  int ambient_dim() const { return dim_; }
  const std::string& label() const { return label_; }
  bool is_radial() const { return static_cast<bool>(profile_); }
  bool is_uniform() const { return uniform_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  double operator()(std::span<const double> x) const;

  /// f(r * theta) for unit theta.
  double along(std::span<const double> theta, double r) const;

  /// Radial profile; only valid when is_radial().
  double profile(double r) const { return profile_(r); }

 private:
  friend Density make_uniform(int n);
  int dim_;
  Eval eval_;
  Profile profile_;
  std::vector<double> breakpoints_;
  std::string label_;
  bool uniform_ = false;
};

Density make_uniform(int n);

/// exp(-|x|^2 / (2 sigma^2)).
Density make_gaussian(int n, double sigma = 1.0);

/// (1 - |x|^2/R^2)_+^2, compactly supported in the ball of radius R.
Density make_bump(int n, double radius = 1.0);

/// exp(-sum (x_i / s_i)^2 / 2): even but not radial.
Density make_anisotropic_gaussian(std::span<const double> sigmas);

/// Triangular profile supported in (1 - 1/j, 1), peak 2j at 1 - 1/(2j),
/// unit integral over [0, 1].
double triangle_bump(int j, double r);

/// Density f_j(|x|_2) built from triangle_bump.
Density make_triangle_bump(int n, int j);

}  // namespace starslice
