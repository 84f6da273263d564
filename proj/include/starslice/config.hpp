#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "starslice/verify.hpp"

namespace starslice {

/// Body descriptor. Shorthand text forms:
///   ball:N[:R]   lp:N:P (P may be inf)   ellipsoid:a1,a2,...
///   intersection_of:<descriptor>   and an optional "S*" prefix for S*K.
struct BodySpec {
  std::string type = "ball";
  int n = 0;
  double radius = 1.0;
  double p = 2.0;
  std::vector<double> axes;
  double scale = 1.0;
  std::vector<BodySpec> inner;  // one element for intersection_of

  int dim() const;
  bool operator==(const BodySpec&) const = default;
};

/// Density descriptor: uniform | gaussian[:sigma] | bump[:R] | triangle:j | aniso:s1,s2,...
struct DensitySpec {
  std::string type = "uniform";
  double param = 1.0;
  std::vector<double> sigmas;

  bool operator==(const DensitySpec&) const = default;
};

BodySpec parse_body_spec(const std::string& text);
std::string to_string(const BodySpec& spec);
DensitySpec parse_density_spec(const std::string& text);
std::string to_string(const DensitySpec& spec);

StarBody build_body(const BodySpec& spec, const QuadratureConfig& quad);
Density build_density(const DensitySpec& spec, int n);

struct RunConfig {
  std::vector<BodySpec> bodies;
  std::vector<DensitySpec> densities{DensitySpec{}};
  std::vector<int> ks;
  std::vector<Statement> statements{Statement::Cor5};
  /// Index pairs (K, L) into bodies for thm1..cor4. Empty: every ordered
  /// pair of bodies sharing a dimension, identical pairs included.
  std::vector<std::pair<int, int>> pairs;
  QuadratureConfig rules;
  SearchOptions search;
  std::uint64_t seed = 20240917;
  std::string output_path;
  std::string format = "json";

  bool operator==(const RunConfig&) const = default;
};

/// Parses and validates a JSON config. Errors name the line/column (syntax)
/// or the offending field (content).
RunConfig parse_config(const std::string& text, const std::string& origin = "<config>");
RunConfig load_config(const std::string& path);

/// Fully materialized config (all defaults written out).
nlohmann::json dump_config(const RunConfig& config);

/// Throws naming the field when an invariant fails.
void validate_config(const RunConfig& config);

CheckOptions check_options(const RunConfig& config);

/// Runs every (statement, body or pair, k, density) tuple. Order is fixed by
/// the config; tuples may run in parallel.
std::vector<VerificationReport> run_batch(const RunConfig& config);

}  // namespace starslice
