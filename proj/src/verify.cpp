#include "starslice/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace starslice {

namespace {

std::string describe_pair(const StarBody& a, const StarBody& b, int k, const Density* f) {
  std::ostringstream os;
  os << "K=" << a.label() << "; L=" << b.label() << "; n=" << a.ambient_dim() << "; k=" << k;
  if (f) os << "; density=" << f->label();
  return os.str();
}

std::string describe_body(const StarBody& a, int k, const Density* f) {
  std::ostringstream os;
  os << "K=" << a.label() << "; n=" << a.ambient_dim() << "; k=" << k;
  if (f) os << "; density=" << f->label();
  return os.str();
}

std::string banner_for(const StarBody& body, int k) {
  if (body.certification().certifies(k)) return {};
  return "hypothesis uncertified: " + body.label() + " is not known to be a generalized " + std::to_string(k) +
         "-intersection body (" + body.certification().provenance + ")";
}

void join_banner(std::string& banner, const std::string& more) {
  if (more.empty()) return;
  banner += banner.empty() ? more : "; " + more;
}

void finish(VerificationReport& r, double propagated) {
  r.slack = r.rhs - r.lhs;
  r.numerical_error = propagated + kRoundoffRelative * std::max(std::abs(r.lhs), std::abs(r.rhs));
  r.verdict = classify(r.slack, r.numerical_error);
}

void require_pair(const StarBody& a, const StarBody& b, int k) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("bodies must share the ambient dimension");
  if (k < 1 || k >= a.ambient_dim()) throw Error("need 1 <= k < n");
}

// d/dV V^e at V, times an absolute error in V.
double power_error(double v, double exponent, double err) {
  return std::abs(exponent) * std::pow(v, exponent - 1.0) * err;
}

std::string search_note(const char* what) {
  return std::string(what) + " over G(n, n-k) replaced by a multi-start search lower bound";
}

}  // namespace

std::string to_string(Statement s) {
  switch (s) {
    case Statement::Thm1: return "thm1";
    case Statement::Thm2: return "thm2";
    case Statement::Cor3: return "cor3";
    case Statement::Cor4: return "cor4";
    case Statement::Cor5: return "cor5";
    case Statement::Lemma1: return "lemma1";
    case Statement::Sharpness: return "sharpness";
  }
  return "unknown";
}

Statement statement_from_string(const std::string& name) {
  for (Statement s : {Statement::Thm1, Statement::Thm2, Statement::Cor3, Statement::Cor4, Statement::Cor5,
                      Statement::Lemma1, Statement::Sharpness}) {
    if (to_string(s) == name) return s;
  }
  throw Error("unknown statement '" + name + "' (expected thm1, thm2, cor3, cor4, cor5, lemma1 or sharpness)");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::HoldsWithinError: return "holds-within-error";
    case Verdict::Violated: return "violated";
  }
  return "unknown";
}

Verdict classify(double slack, double numerical_error) {
  if (slack >= 0.0) return Verdict::Holds;
  if (slack >= -numerical_error) return Verdict::HoldsWithinError;
  return Verdict::Violated;
}

Estimate measured_epsilon(const StarBody& k_body, const StarBody& l_body, int k, const Density* f,
                          const CheckOptions& opts) {
  require_pair(k_body, l_body, k);
  if (opts.injected_max) return {std::max(0.0, *opts.injected_max), 0.0};
  const int n = k_body.ambient_dim();
  const auto& quad = opts.quad;
  ExtremalSection best = maximize_over_grassmannian(
      n, n - k,
      [&](const Subspace& h) {
        return section_quantity_search(k_body, h, f, quad) - section_quantity_search(l_body, h, f, quad);
      },
      [&](const Subspace& h) {
        const Estimate a = section_quantity(k_body, h, f, quad);
        const Estimate b = section_quantity(l_body, h, f, quad);
        return Estimate{a.value - b.value, a.error + b.error};
      },
      opts.search);
  return {std::max(0.0, best.value), best.error};
}

VerificationReport check_stability_volume(const StarBody& k_body, const StarBody& l_body, int k,
                                          const CheckOptions& opts) {
  require_pair(k_body, l_body, k);
  const int n = k_body.ambient_dim();
  const double e = static_cast<double>(n - k) / n;
  const double c = c_nk(n, k);
  const Estimate vk = body_volume(k_body, opts.quad);
  const Estimate vl = body_volume(l_body, opts.quad);
  const Estimate eps = measured_epsilon(k_body, l_body, k, nullptr, opts);

  VerificationReport r;
  r.statement = Statement::Thm1;
  r.inputs = describe_pair(k_body, l_body, k, nullptr);
  r.lhs = std::pow(vk.value, e);
  r.rhs = std::pow(vl.value, e) + c * eps.value;
  r.epsilon_used = eps.value;
  r.certification_banner = banner_for(k_body, k);
  if (!opts.injected_max) r.notes.push_back(search_note("sup of the sectional deficit"));
  finish(r, power_error(vk.value, e, vk.error) + power_error(vl.value, e, vl.error) + c * eps.error);
  return r;
}

VerificationReport check_stability_measure(const StarBody& k_body, const StarBody& l_body, const Density& f, int k,
                                           const CheckOptions& opts) {
  require_pair(k_body, l_body, k);
  const int n = k_body.ambient_dim();
  const double factor = static_cast<double>(n) / (n - k) * c_nk(n, k);
  const double e = static_cast<double>(k) / n;
  const Estimate mk = body_measure(k_body, f, opts.quad);
  const Estimate ml = body_measure(l_body, f, opts.quad);
  const Estimate vk = body_volume(k_body, opts.quad);
  const Estimate eps = measured_epsilon(k_body, l_body, k, &f, opts);

  VerificationReport r;
  r.statement = Statement::Thm2;
  r.inputs = describe_pair(k_body, l_body, k, &f);
  r.lhs = mk.value;
  const double vpow = std::pow(vk.value, e);
  r.rhs = ml.value + factor * vpow * eps.value;
  r.epsilon_used = eps.value;
  r.certification_banner = banner_for(k_body, k);
  if (k == 1) {
    r.notes.push_back("k = 1 lies outside the 1 < k < n range of the measure stability statement; "
                      "checked under the 1 <= k < n form");
  }
  if (f.is_uniform()) {
    r.notes.push_back("uniform density: this is a weaker volume stability bound than thm1");
  }
  if (!opts.injected_max) r.notes.push_back(search_note("sup of the sectional deficit"));
  finish(r, mk.error + ml.error + factor * (power_error(vk.value, e, vk.error) * eps.value + vpow * eps.error));
  return r;
}

VerificationReport check_difference(const StarBody& k_body, const StarBody& l_body, int k, const Density* f,
                                    const CheckOptions& opts) {
  require_pair(k_body, l_body, k);
  const int n = k_body.ambient_dim();
  const double c = c_nk(n, k);

  Estimate dmax;
  if (opts.injected_max) {
    dmax = {std::abs(*opts.injected_max), 0.0};
  } else {
    const Estimate up = measured_epsilon(k_body, l_body, k, f, opts);
    const Estimate down = measured_epsilon(l_body, k_body, k, f, opts);
    dmax = up.value >= down.value ? up : down;
  }

  VerificationReport r;
  r.inputs = describe_pair(k_body, l_body, k, f);
  r.epsilon_used = dmax.value;
  join_banner(r.certification_banner, banner_for(k_body, k));
  join_banner(r.certification_banner, banner_for(l_body, k));
  if (!opts.injected_max) {
    r.notes.push_back(search_note("max of the absolute sectional difference (both signed directions)"));
  }

  const Estimate vk = body_volume(k_body, opts.quad);
  const Estimate vl = body_volume(l_body, opts.quad);
  if (f == nullptr) {
    const double e = static_cast<double>(n - k) / n;
    r.statement = Statement::Cor3;
    r.lhs = std::abs(std::pow(vk.value, e) - std::pow(vl.value, e));
    r.rhs = c * dmax.value;
    finish(r, power_error(vk.value, e, vk.error) + power_error(vl.value, e, vl.error) + c * dmax.error);
    return r;
  }

  const double factor = static_cast<double>(n) / (n - k) * c;
  const double e = static_cast<double>(k) / n;
  const Estimate mk = body_measure(k_body, *f, opts.quad);
  const Estimate ml = body_measure(l_body, *f, opts.quad);
  const Estimate& vmax = vk.value >= vl.value ? vk : vl;
  const double vpow = std::pow(vmax.value, e);
  r.statement = Statement::Cor4;
  r.lhs = std::abs(mk.value - ml.value);
  r.rhs = factor * dmax.value * vpow;
  finish(r, mk.error + ml.error + factor * (dmax.error * vpow + dmax.value * power_error(vmax.value, e, vmax.error)));
  return r;
}

VerificationReport check_slicing(const StarBody& body, int k, const Density* f, const CheckOptions& opts) {
  const int n = body.ambient_dim();
  if (k < 1 || k >= n) throw Error("check_slicing: need 1 <= k < n");
  const double c = c_nk(n, k);
  const bool volume_form = f == nullptr || f->is_uniform();

  Estimate best;
  VerificationReport r;
  if (opts.injected_max) {
    best = {*opts.injected_max, 0.0};
  } else {
    const ExtremalSection s = max_section(body, k, volume_form ? nullptr : f, opts.quad, opts.search);
    best = {s.value, s.error};
    r.notes.push_back(search_note("max") + " (" + std::to_string(s.probe_count) + " probes, " +
                      std::to_string(s.restart_log.size()) + " restarts)");
  }

  r.statement = Statement::Cor5;
  r.inputs = describe_body(body, k, volume_form ? nullptr : f);
  r.epsilon_used = best.value;
  r.certification_banner = banner_for(body, k);

  const Estimate v = body_volume(body, opts.quad);
  if (volume_form) {
    const double e = static_cast<double>(n - k) / n;
    r.lhs = std::pow(v.value, e);
    r.rhs = c * best.value;
    finish(r, power_error(v.value, e, v.error) + c * best.error);
    return r;
  }
  const double factor = static_cast<double>(n) / (n - k) * c;
  const double e = static_cast<double>(k) / n;
  const Estimate mu = body_measure(body, *f, opts.quad);
  const double vpow = std::pow(v.value, e);
  r.lhs = mu.value;
  r.rhs = factor * best.value * vpow;
  finish(r, mu.error + factor * (best.error * vpow + best.value * power_error(v.value, e, v.error)));
  return r;
}

VerificationReport lemma_check(double a, double b, double k, int n, const std::function<double(double)>& alpha,
                               const RadialRule& rule) {
  if (!(a > 0.0) || !(b > 0.0) || !(k > 0.0)) throw Error("lemma_check: a, b, k must be positive");
  if (n < 1) throw Error("lemma_check: n must be >= 1");
  const double low_exp = n - k - 1.0;
  if (low_exp < 0.0) {
    throw Error("lemma_check: need k <= n - 1 so that r^{n-k-1} alpha is integrable by the radial rule");
  }
  auto checked_alpha = [&](double r) {
    const double v = alpha(r);
    if (!(v >= 0.0)) {
      std::ostringstream msg;
      msg << "lemma_check: alpha must be non-negative, got " << v << " at r = " << r;
      throw Error(msg.str());
    }
    return v;
  };
  const double high_exp = n - 1.0;
  const double ak = std::pow(a, k);

  auto evaluate = [&](const RadialRule& rr, double& lhs, double& rhs, double& scale) {
    const double ia_hi = radial_integrate([&](double r) { return std::pow(r, high_exp) * checked_alpha(r); }, a, rr);
    const double ia_lo = radial_integrate([&](double r) { return std::pow(r, low_exp) * checked_alpha(r); }, a, rr);
    const double ib_hi = radial_integrate([&](double r) { return std::pow(r, high_exp) * checked_alpha(r); }, b, rr);
    const double ib_lo = radial_integrate([&](double r) { return std::pow(r, low_exp) * checked_alpha(r); }, b, rr);
    lhs = ia_hi - ak * ia_lo;
    rhs = ib_hi - ak * ib_lo;
    scale = std::abs(ia_hi) + ak * std::abs(ia_lo) + std::abs(ib_hi) + ak * std::abs(ib_lo);
  };

  VerificationReport r;
  r.statement = Statement::Lemma1;
  std::ostringstream inputs;
  inputs << "a=" << a << "; b=" << b << "; k=" << k << "; n=" << n;
  r.inputs = inputs.str();
  double scale = 0.0;
  evaluate(rule, r.lhs, r.rhs, scale);
  double lhs_c = 0.0, rhs_c = 0.0, scale_c = 0.0;
  evaluate(rule.companion(), lhs_c, rhs_c, scale_c);
  r.slack = r.rhs - r.lhs;
  const double slack_c = rhs_c - lhs_c;
  r.numerical_error = std::abs(r.slack - slack_c) + kRoundoffRelative * scale;
  r.verdict = classify(r.slack, r.numerical_error);
  return r;
}

SharpnessResult sharpness_sweep(int n, int k, std::span<const int> j_values, const RadialRule& rule) {
  if (k < 1 || k >= n) throw Error("sharpness_sweep: need 1 <= k < n");
  SharpnessResult out;
  out.n = n;
  out.k = k;
  out.limit = static_cast<double>(n) / (n - k) * c_nk(n, k);
  const double denom_const = sphere_area(n - k) * std::pow(ball_volume(n), static_cast<double>(k) / n);
  for (int j : j_values) {
    if (j < 1) throw Error("sharpness_sweep: j must be >= 1");
    const double half_width = 0.5 / j;
    // Abscissae near r = 1 carry absolute rounding ~1e-16, i.e. relative ~1e-16 j on the bump.
    if (2.0 * half_width < 1e-6) {
      throw Error("sharpness_sweep: bump support for j = " + std::to_string(j) +
                  " is narrower than 1e-6 and cannot be resolved near r = 1 in double precision; use j <= 1000000");
    }
    const double breaks[] = {1.0 - 2.0 * half_width, 1.0 - half_width};
    auto moment = [&](int d) {
      return radial_integrate([&](double r) { return std::pow(r, d) * triangle_bump(j, r); }, 1.0, rule, breaks);
    };
    const double ratio = sphere_area(n) * moment(n - 1) / (denom_const * moment(n - k - 1));
    out.points.push_back({j, ratio});
  }
  return out;
}

VerificationReport sharpness_report(const SharpnessResult& result) {
  if (result.points.empty()) throw Error("sharpness_report: empty sweep");
  const auto& last = result.points.back();
  VerificationReport r;
  r.statement = Statement::Sharpness;
  std::ostringstream inputs;
  inputs << "ball; n=" << result.n << "; k=" << result.k << "; j=" << last.j;
  r.inputs = inputs.str();
  r.lhs = last.ratio;
  r.rhs = result.limit;
  r.epsilon_used = 0.0;
  r.notes.push_back("ratio approaches the constant from below as j grows");
  finish(r, 0.0);
  return r;
}

}  // namespace starslice
