#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "starslice/slicing.hpp"

namespace starslice {

enum class Statement { Thm1, Thm2, Cor3, Cor4, Cor5, Lemma1, Sharpness };
enum class Verdict { Holds, HoldsWithinError, Violated };

std::string to_string(Statement s);
Statement statement_from_string(const std::string& name);
std::string to_string(Verdict v);

/// holds iff slack >= 0; holds-within-error iff -error <= slack < 0.
Verdict classify(double slack, double numerical_error);

/// Outcome of checking one inequality instance.
struct VerificationReport {
  Statement statement = Statement::Cor5;
  std::string inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  double epsilon_used = 0.0;
  double numerical_error = 0.0;
  Verdict verdict = Verdict::Holds;
  std::string certification_banner;  // empty when the hypothesis is certified
  std::vector<std::string> notes;
};

struct CheckOptions {
  QuadratureConfig quad;
  SearchOptions search;
  /// Replaces the searched maximum (of the section quantity, or of the
  /// sectional deficit for stability checks) by a supplied value.
  std::optional<double> injected_max;
};

/// Largest probed sectional deficit sup_H (q(K cap H) - q(L cap H)), clamped
/// at 0, where q is volume (f absent) or the mu-measure.
Estimate measured_epsilon(const StarBody& k_body, const StarBody& l_body, int k, const Density* f,
                          const CheckOptions& opts);

VerificationReport check_stability_volume(const StarBody& k_body, const StarBody& l_body, int k,
                                          const CheckOptions& opts);
VerificationReport check_stability_measure(const StarBody& k_body, const StarBody& l_body, const Density& f, int k,
                                           const CheckOptions& opts);
/// Volume form when f is null, measure form otherwise.
VerificationReport check_difference(const StarBody& k_body, const StarBody& l_body, int k, const Density* f,
                                    const CheckOptions& opts);
/// Volume form when f is null or uniform, measure form otherwise.
VerificationReport check_slicing(const StarBody& body, int k, const Density* f, const CheckOptions& opts);

VerificationReport lemma_check(double a, double b, double k, int n, const std::function<double(double)>& alpha,
                               const RadialRule& rule);

struct SharpnessPoint {
  int j = 0;
  double ratio = 0.0;
};

struct SharpnessResult {
  int n = 0;
  int k = 0;
  std::vector<SharpnessPoint> points;
  double limit = 0.0;  // (n/(n-k)) c_{n,k}
};

/// Ratios mu_j(B) / (max_H mu_j(B cap H) Vol(B)^{k/n}) for the triangular
/// bump family on the unit ball, via the radial fast path.
SharpnessResult sharpness_sweep(int n, int k, std::span<const int> j_values, const RadialRule& rule);

/// Summary report: largest-j ratio against the limit.
VerificationReport sharpness_report(const SharpnessResult& result);

}  // namespace starslice
