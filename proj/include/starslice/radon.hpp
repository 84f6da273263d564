#pragma once

#include <functional>
#include <span>

#include "starslice/grassmann.hpp"
#include "starslice/quadrature.hpp"

namespace starslice {

/// Continuous function on S^{n-1}.
struct SphericalFunction {
  int ambient_dim = 0;
  std::function<double(std::span<const double>)> eval;
  bool even = false;

  double operator()(std::span<const double> theta) const { return eval(theta); }
};

/// Rf(xi): integral of f over the great subsphere S^{n-1} cap xi^perp.
/// rule lives on S^{n-2}.
double radon_hyperplane(const SphericalFunction& f, std::span<const double> xi, const SphericalRule& rule);

/// R_{n-k} f(H): integral of f over S^{n-1} cap H. rule lives on S^{dim H - 1}.
double radon_lower(const SphericalFunction& f, const Subspace& h, const SphericalRule& rule);

/// | int Rf g - int f Rg | with outer_rule on S^{n-1} and inner_rule on S^{n-2}.
double selfduality_residual(const SphericalFunction& f, const SphericalFunction& g,
                            const SphericalRule& outer_rule, const SphericalRule& inner_rule);

}  // namespace starslice
