#pragma once

namespace starslice {

/// |B_2^n|, volume of the Euclidean unit ball in R^n (n >= 1).
double ball_volume(int n);

/// |S^{n-1}|, surface area of the unit sphere in R^n (n >= 1; n = 1 gives 2).
double sphere_area(int n);

/// Slicing constant |B_2^n|^{(n-k)/n} / |B_2^{n-k}|, 1 <= k < n. Always < 1.
double c_nk(int n, int k);

}  // namespace starslice
