#include "starslice/density.hpp"

#include <cmath>
#include <sstream>

#include "starslice/common.hpp"

namespace starslice {

Density::Density(int ambient_dim, Eval eval, std::string label)
    : dim_(ambient_dim), eval_(std::move(eval)), label_(std::move(label)) {
  if (dim_ < 1) throw Error("Density: ambient dimension must be >= 1");
}

Density Density::radial(int ambient_dim, Profile profile, std::vector<double> breakpoints, std::string label) {
  auto eval = [profile](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return profile(std::sqrt(s));
  };
  Density d(ambient_dim, std::move(eval), std::move(label));
  d.profile_ = std::move(profile);
  d.breakpoints_ = std::move(breakpoints);
  return d;
}

double Density::operator()(std::span<const double> x) const {
  const double v = eval_(x);
  if (!std::isfinite(v) || v < 0.0) throw Error("density " + label_ + " evaluated to a negative or non-finite value");
  return v;
}

double Density::along(std::span<const double> theta, double r) const {
  if (profile_) return profile_(r);
  std::vector<double> x(theta.begin(), theta.end());
  for (double& v : x) v *= r;
  return (*this)(x);
}

Density make_uniform(int n) {
  Density d = Density::radial(n, [](double) { return 1.0; }, {}, "uniform");
  d.uniform_ = true;
  return d;
}

Density make_gaussian(int n, double sigma) {
  if (!(sigma > 0.0)) throw Error("make_gaussian: sigma must be positive");
  const double c = 0.5 / (sigma * sigma);
  std::ostringstream label;
  label << "gaussian(sigma=" << sigma << ")";
  return Density::radial(n, [c](double r) { return std::exp(-c * r * r); }, {}, label.str());
}

Density make_bump(int n, double radius) {
  if (!(radius > 0.0)) throw Error("make_bump: radius must be positive");
  std::ostringstream label;
  label << "bump(R=" << radius << ")";
  return Density::radial(
      n,
      [radius](double r) {
        const double t = 1.0 - (r * r) / (radius * radius);
        return t > 0.0 ? t * t : 0.0;
      },
      {radius}, label.str());
}

Density make_anisotropic_gaussian(std::span<const double> sigmas) {
  std::vector<double> inv;
  std::ostringstream label;
  label << "aniso-gaussian(";
  for (std::size_t i = 0; i < sigmas.size(); ++i) {
    if (!(sigmas[i] > 0.0)) throw Error("make_anisotropic_gaussian: sigmas must be positive");
    inv.push_back(1.0 / sigmas[i]);
    label << (i ? "," : "") << sigmas[i];
  }
  label << ")";
  return Density(
      static_cast<int>(sigmas.size()),
      [inv](std::span<const double> x) {
        double s = 0.0;
        for (std::size_t i = 0; i < inv.size(); ++i) {
          const double t = x[i] * inv[i];
          s += t * t;
        }
        return std::exp(-0.5 * s);
      },
      label.str());
}

double triangle_bump(int j, double r) {
  const double width = 1.0 / j;
  const double lo = 1.0 - width;
  const double peak = 1.0 - 0.5 * width;
  if (r <= lo || r >= 1.0) return 0.0;
  const double height = 2.0 * j;
  return r <= peak ? height * (r - lo) / (peak - lo) : height * (1.0 - r) / (1.0 - peak);
}

Density make_triangle_bump(int n, int j) {
  if (j < 1) throw Error("make_triangle_bump: j must be >= 1");
  const double width = 1.0 / j;
  return Density::radial(n, [j](double r) { return triangle_bump(j, r); },
                         {1.0 - width, 1.0 - 0.5 * width, 1.0}, "triangle-bump(j=" + std::to_string(j) + ")");
}

}  // namespace starslice
