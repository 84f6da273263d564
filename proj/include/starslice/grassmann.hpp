#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "starslice/random.hpp"

namespace starslice {

/// An m-dimensional linear subspace of R^n held as an orthonormal n x m frame.
class Subspace {
 public:
  /// Validates F^T F = I within 1e-10 entrywise.
  explicit Subspace(Eigen::MatrixXd frame);

  int ambient_dim() const { return static_cast<int>(frame_.rows()); }
  int dim() const { return static_cast<int>(frame_.cols()); }
  const Eigen::MatrixXd& frame() const { return frame_; }

  /// Writes frame * u (u in R^m) into out (R^n).
  void embed(std::span<const double> u, std::span<double> out) const;

  Eigen::MatrixXd projection() const { return frame_ * frame_.transpose(); }

 private:
  Eigen::MatrixXd frame_;
};

/// Largest principal angle between equal-dimensional subspaces (radians).
double max_principal_angle(const Subspace& a, const Subspace& b);

/// Subspace equality: all principal angles below tol.
bool same_subspace(const Subspace& a, const Subspace& b, double tol = 1e-8);

/// Orthonormal frame of the hyperplane xi^perp, by a Householder reflector.
/// The frame depends on xi only up to sign, so xi and -xi share it exactly.
Subspace hyperplane(std::span<const double> xi);

/// span(e_{i}) for the given coordinate indices.
Subspace coordinate_subspace(int n, const std::vector<int>& axes);

/// All C(n, m) coordinate subspaces in lexicographic order of index sets.
std::vector<Subspace> coordinate_subspaces(int n, int m);

/// Haar-distributed samples of G(n, m) by orthonormalizing Gaussian matrices.
std::vector<Subspace> grassmann_sample(int n, int m, int count, RandomSource& rng);

/// Random nearby subspace: frame moved by `step` along a random unit tangent
/// direction, then re-orthonormalized. Max principal angle <= atan(step).
Subspace subspace_perturb(const Subspace& h, double step, RandomSource& rng);

}  // namespace starslice
