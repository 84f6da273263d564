#include "starslice/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "starslice/common.hpp"

namespace starslice {

namespace {

constexpr double kOrthoTol = 1e-10;

// Thin Q of a QR factorization with sign convention diag(R) > 0, so the
// result is Haar distributed for Gaussian input. Returns false when rank
// deficient.
bool orthonormalize(const Eigen::MatrixXd& a, Eigen::MatrixXd& q) {
  const Eigen::Index n = a.rows();
  const Eigen::Index m = a.cols();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  const Eigen::MatrixXd r = qr.matrixQR().topLeftCorner(m, m).triangularView<Eigen::Upper>();
  const double scale = std::max(1.0, a.norm());
  q = qr.householderQ() * Eigen::MatrixXd::Identity(n, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    if (std::abs(r(j, j)) <= 1e-12 * scale) return false;
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return true;
}

}  // namespace

Subspace::Subspace(Eigen::MatrixXd frame) : frame_(std::move(frame)) {
  const auto n = frame_.rows();
  const auto m = frame_.cols();
  if (m < 1 || m > n) {
    throw Error("Subspace: need 1 <= dim <= ambient dimension, got " + std::to_string(m) + " in R^" +
                std::to_string(n));
  }
  const Eigen::MatrixXd gram = frame_.transpose() * frame_;
  const double dev = (gram - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff();
  if (!(dev <= kOrthoTol)) throw Error("Subspace: frame columns are not orthonormal");
}

void Subspace::embed(std::span<const double> u, std::span<double> out) const {
  const auto n = frame_.rows();
  const auto m = frame_.cols();
  for (Eigen::Index i = 0; i < n; ++i) {
    double s = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) s += frame_(i, j) * u[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = s;
  }
}

double max_principal_angle(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.dim() != b.dim()) {
    throw Error("max_principal_angle: subspaces must have equal dimensions");
  }
  // Sines of the principal angles are the singular values of (I - P_a) F_b.
  const Eigen::MatrixXd residual = b.frame() - a.frame() * (a.frame().transpose() * b.frame());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(residual);
  const double s = svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
  return std::asin(std::clamp(s, 0.0, 1.0));
}

bool same_subspace(const Subspace& a, const Subspace& b, double tol) {
  return max_principal_angle(a, b) < tol;
}

Subspace hyperplane(std::span<const double> xi) {
  const auto n = static_cast<Eigen::Index>(xi.size());
  if (n < 2) throw Error("hyperplane: ambient dimension must be >= 2");
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = xi[static_cast<std::size_t>(i)];
  const double norm = v.norm();
  if (!(std::abs(norm - 1.0) <= 1e-10)) throw Error("hyperplane: normal must be a unit vector");

  Eigen::Index pivot = 0;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (std::abs(v(i)) > std::abs(v(pivot))) pivot = i;
  }
  if (v(pivot) < 0.0) v = -v;
  // Reflector I - 2 w w^T / (w^T w) with w = xi + e_pivot maps e_pivot to -xi;
  // its remaining columns span xi^perp.
  Eigen::VectorXd w = v;
  w(pivot) += 1.0;
  const Eigen::MatrixXd reflector =
      Eigen::MatrixXd::Identity(n, n) - (2.0 / w.squaredNorm()) * (w * w.transpose());
  Eigen::MatrixXd frame(n, n - 1);
  Eigen::Index col = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j != pivot) frame.col(col++) = reflector.col(j);
  }
  return Subspace(std::move(frame));
}

Subspace coordinate_subspace(int n, const std::vector<int>& axes) {
  Eigen::MatrixXd frame = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(axes.size()));
  for (std::size_t j = 0; j < axes.size(); ++j) {
    if (axes[j] < 0 || axes[j] >= n) throw Error("coordinate_subspace: axis out of range");
    frame(axes[j], static_cast<Eigen::Index>(j)) = 1.0;
  }
  return Subspace(std::move(frame));
}

std::vector<Subspace> coordinate_subspaces(int n, int m) {
  if (m < 1 || m > n) throw Error("coordinate_subspaces: need 1 <= m <= n");
  std::vector<Subspace> out;
  std::vector<int> axes(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) axes[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(coordinate_subspace(n, axes));
    int i = m - 1;
    while (i >= 0 && axes[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) break;
    ++axes[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) axes[static_cast<std::size_t>(j)] = axes[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::vector<Subspace> grassmann_sample(int n, int m, int count, RandomSource& rng) {
  if (m < 1 || m > n) throw Error("grassmann_sample: need 1 <= m <= n");
  if (count < 1) throw Error("grassmann_sample: count must be >= 1");
  std::vector<Subspace> out;
  out.reserve(static_cast<std::size_t>(count));
  Eigen::MatrixXd g(n, m);
  Eigen::MatrixXd q;
  for (int c = 0; c < count; ++c) {
    int failures = 0;
    while (true) {
      for (Eigen::Index j = 0; j < m; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) g(i, j) = rng.normal();
      }
      if (orthonormalize(g, q)) break;
      if (++failures >= 100) throw Error("grassmann_sample: 100 consecutive degenerate Gaussian draws");
    }
    out.emplace_back(q);
  }
  return out;
}

Subspace subspace_perturb(const Subspace& h, double step, RandomSource& rng) {
  if (!(step >= 0.0 && step <= 1.0)) throw Error("subspace_perturb: step must lie in [0, 1]");
  const int n = h.ambient_dim();
  const int m = h.dim();
  if (m == n || step == 0.0) return h;
  const Eigen::MatrixXd& f = h.frame();
  Eigen::MatrixXd g(n, m);
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) g(i, j) = rng.normal();
    }
    Eigen::MatrixXd tangent = g - f * (f.transpose() * g);
    const double norm = tangent.norm();
    if (norm < 1e-12) continue;
    Eigen::MatrixXd q;
    if (orthonormalize(f + (step / norm) * tangent, q)) return Subspace(std::move(q));
  }
  throw Error("subspace_perturb: could not draw a non-degenerate tangent direction");
}

}  // namespace starslice
