#include "starslice/constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "starslice/common.hpp"

namespace starslice {

double ball_volume(int n) {
  if (n < 1) throw Error("ball_volume: dimension must be >= 1, got " + std::to_string(n));
  const double half = 0.5 * n;
  return std::exp(half * std::log(std::numbers::pi) - std::lgamma(half + 1.0));
}

double sphere_area(int n) {
  if (n < 1) throw Error("sphere_area: dimension must be >= 1, got " + std::to_string(n));
  const double half = 0.5 * n;
  return 2.0 * std::exp(half * std::log(std::numbers::pi) - std::lgamma(half));
}

double c_nk(int n, int k) {
  if (k < 1 || k >= n) {
    throw Error("c_nk: need 1 <= k < n, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
  }
  const double exponent = static_cast<double>(n - k) / n;
  return std::pow(ball_volume(n), exponent) / ball_volume(n - k);
}

}  // namespace starslice
