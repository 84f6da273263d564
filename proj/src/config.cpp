#include "starslice/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "starslice/parallel.hpp"

namespace starslice {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& s, const std::string& what) {
  if (s == "inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("cannot parse " + what + " from '" + s + "'");
  }
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error("cannot parse " + what + " from '" + s + "'");
  }
}

std::string number_text(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

json number_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

double json_number(const json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_double(j.get<std::string>(), "field '" + field + "'");
  throw Error("field '" + field + "': expected a number");
}

int json_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw Error("field '" + field + "': expected an integer");
  return j.get<int>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw Error("field '" + where + it.key() + "': unknown key");
  }
}

BodySpec body_from_json(const json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_body_spec(j.get<std::string>());
    } catch (const Error& e) {
      throw Error("field '" + field + "': " + e.what());
    }
  }
  if (!j.is_object()) throw Error("field '" + field + "': expected a body descriptor string or object");
  reject_unknown(j, {"type", "n", "radius", "p", "axes", "scale", "inner"}, field + ".");
  BodySpec s;
  if (!j.contains("type") || !j["type"].is_string()) throw Error("field '" + field + ".type': required string");
  s.type = j["type"].get<std::string>();
  if (j.contains("n")) s.n = json_int(j["n"], field + ".n");
  if (j.contains("radius")) s.radius = json_number(j["radius"], field + ".radius");
  if (j.contains("p")) s.p = json_number(j["p"], field + ".p");
  if (j.contains("scale")) s.scale = json_number(j["scale"], field + ".scale");
  if (j.contains("axes")) {
    if (!j["axes"].is_array()) throw Error("field '" + field + ".axes': expected an array");
    for (std::size_t i = 0; i < j["axes"].size(); ++i) {
      s.axes.push_back(json_number(j["axes"][i], field + ".axes[" + std::to_string(i) + "]"));
    }
    s.n = static_cast<int>(s.axes.size());
  }
  if (j.contains("inner")) {
    s.inner.push_back(body_from_json(j["inner"], field + ".inner"));
    s.n = s.inner.front().dim();
  }
  if (s.type != "ball" && s.type != "lp" && s.type != "ellipsoid" && s.type != "intersection_of") {
    throw Error("field '" + field + ".type': unknown body type '" + s.type + "'");
  }
  if (s.type == "intersection_of" && s.inner.empty()) throw Error("field '" + field + ".inner': required");
  return s;
}

json body_to_json(const BodySpec& s) {
  json j;
  j["type"] = s.type;
  j["n"] = s.dim();
  j["scale"] = s.scale;
  if (s.type == "ball") j["radius"] = s.radius;
  if (s.type == "lp") j["p"] = number_json(s.p);
  if (s.type == "ellipsoid") j["axes"] = s.axes;
  if (s.type == "intersection_of") j["inner"] = body_to_json(s.inner.front());
  return j;
}

DensitySpec density_from_json(const json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_density_spec(j.get<std::string>());
    } catch (const Error& e) {
      throw Error("field '" + field + "': " + e.what());
    }
  }
  if (!j.is_object()) throw Error("field '" + field + "': expected a density descriptor string or object");
  reject_unknown(j, {"type", "param", "sigmas"}, field + ".");
  DensitySpec d;
  if (!j.contains("type") || !j["type"].is_string()) throw Error("field '" + field + ".type': required string");
  d.type = j["type"].get<std::string>();
  if (j.contains("param")) d.param = json_number(j["param"], field + ".param");
  if (j.contains("sigmas")) {
    for (std::size_t i = 0; i < j["sigmas"].size(); ++i) {
      d.sigmas.push_back(json_number(j["sigmas"][i], field + ".sigmas[" + std::to_string(i) + "]"));
    }
  }
  if (d.type != "uniform" && d.type != "gaussian" && d.type != "bump" && d.type != "triangle" && d.type != "aniso") {
    throw Error("field '" + field + ".type': unknown density type '" + d.type + "'");
  }
  return d;
}

json density_to_json(const DensitySpec& d) {
  json j;
  j["type"] = d.type;
  j["param"] = d.param;
  if (d.type == "aniso") j["sigmas"] = d.sigmas;
  return j;
}

RadialRule radial_from_json(const json& j, const std::string& field) {
  reject_unknown(j, {"kind", "order", "panels", "tolerance"}, field + ".");
  RadialRule r;
  if (j.contains("kind")) {
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "fixed-order") {
      r.kind = RadialKind::FixedOrder;
    } else if (kind == "adaptive") {
      r.kind = RadialKind::Adaptive;
    } else {
      throw Error("field '" + field + ".kind': expected fixed-order or adaptive");
    }
  }
  if (j.contains("order")) r.order = json_int(j["order"], field + ".order");
  if (j.contains("panels")) r.panels = json_int(j["panels"], field + ".panels");
  if (j.contains("tolerance")) r.tolerance = json_number(j["tolerance"], field + ".tolerance");
  return r;
}

std::size_t line_of(const std::string& text, std::size_t byte, std::size_t& column) {
  std::size_t line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return line;
}

}  // namespace

int BodySpec::dim() const {
  if (type == "ellipsoid") return static_cast<int>(axes.size());
  if (type == "intersection_of" && !inner.empty()) return inner.front().dim();
  return n;
}

BodySpec parse_body_spec(const std::string& text) {
  BodySpec s;
  std::string rest = text;
  if (auto star = rest.find('*'); star != std::string::npos && rest.find(':') > star) {
    s.scale = parse_double(rest.substr(0, star), "body scale");
    rest = rest.substr(star + 1);
  }
  const auto colon = rest.find(':');
  s.type = rest.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : rest.substr(colon + 1);
  if (s.type == "intersection_of") {
    if (args.empty()) throw Error("intersection_of needs an inner body descriptor");
    s.inner.push_back(parse_body_spec(args));
    s.n = s.inner.front().dim();
    return s;
  }
  const auto parts = split(args, ':');
  if (s.type == "ball") {
    if (parts.empty() || parts.size() > 2) throw Error("ball descriptor is ball:N[:R], got '" + text + "'");
    s.n = parse_int(parts[0], "ball dimension");
    if (parts.size() == 2) s.radius = parse_double(parts[1], "ball radius");
  } else if (s.type == "lp") {
    if (parts.size() != 2) throw Error("lp descriptor is lp:N:P, got '" + text + "'");
    s.n = parse_int(parts[0], "lp dimension");
    s.p = parse_double(parts[1], "lp exponent");
  } else if (s.type == "ellipsoid") {
    if (parts.size() != 1) throw Error("ellipsoid descriptor is ellipsoid:a1,a2,..., got '" + text + "'");
    for (const auto& a : split(parts[0], ',')) s.axes.push_back(parse_double(a, "ellipsoid semi-axis"));
    s.n = static_cast<int>(s.axes.size());
  } else {
    throw Error("unknown body type '" + s.type + "' (expected ball, lp, ellipsoid or intersection_of)");
  }
  return s;
}

std::string to_string(const BodySpec& s) {
  std::string prefix = s.scale == 1.0 ? "" : number_text(s.scale) + "*";
  if (s.type == "ball") {
    return prefix + "ball:" + std::to_string(s.n) + (s.radius == 1.0 ? "" : ":" + number_text(s.radius));
  }
  if (s.type == "lp") return prefix + "lp:" + std::to_string(s.n) + ":" + number_text(s.p);
  if (s.type == "ellipsoid") {
    std::string out = prefix + "ellipsoid:";
    for (std::size_t i = 0; i < s.axes.size(); ++i) out += (i ? "," : "") + number_text(s.axes[i]);
    return out;
  }
  return prefix + "intersection_of:" + to_string(s.inner.front());
}

DensitySpec parse_density_spec(const std::string& text) {
  DensitySpec d;
  const auto colon = text.find(':');
  d.type = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (d.type == "uniform") {
    if (!arg.empty()) throw Error("uniform density takes no parameter");
  } else if (d.type == "gaussian" || d.type == "bump") {
    if (!arg.empty()) d.param = parse_double(arg, d.type + " parameter");
  } else if (d.type == "triangle") {
    d.param = parse_int(arg, "triangle bump index j");
  } else if (d.type == "aniso") {
    for (const auto& s : split(arg, ',')) d.sigmas.push_back(parse_double(s, "anisotropic sigma"));
  } else {
    throw Error("unknown density '" + d.type + "' (expected uniform, gaussian, bump, triangle or aniso)");
  }
  return d;
}

std::string to_string(const DensitySpec& d) {
  if (d.type == "uniform") return "uniform";
  if (d.type == "aniso") {
    std::string out = "aniso:";
    for (std::size_t i = 0; i < d.sigmas.size(); ++i) out += (i ? "," : "") + number_text(d.sigmas[i]);
    return out;
  }
  if (d.type == "triangle") return "triangle:" + std::to_string(static_cast<int>(d.param));
  return d.type + ":" + number_text(d.param);
}

StarBody build_body(const BodySpec& s, const QuadratureConfig& quad) {
  auto base = [&]() -> StarBody {
    if (s.type == "ball") return make_ball(s.n, s.radius);
    if (s.type == "lp") return make_lp_ball(s.n, s.p);
    if (s.type == "ellipsoid") return make_ellipsoid(s.axes);
    if (s.type == "intersection_of") {
      const StarBody inner = build_body(s.inner.front(), quad);
      const int n = inner.ambient_dim();
      auto grid = cached_sphere_rule(n, quad.level_for(n), quad.kind_for(n), quad.seed);
      return intersection_body_of(inner, grid, *quad.rule(n - 1));
    }
    throw Error("unknown body type '" + s.type + "'");
  }();
  return s.scale == 1.0 ? base : base.scaled(s.scale);
}

Density build_density(const DensitySpec& d, int n) {
  if (d.type == "uniform") return make_uniform(n);
  if (d.type == "gaussian") return make_gaussian(n, d.param);
  if (d.type == "bump") return make_bump(n, d.param);
  if (d.type == "triangle") return make_triangle_bump(n, static_cast<int>(d.param));
  if (d.type == "aniso") {
    if (static_cast<int>(d.sigmas.size()) != n) {
      throw Error("anisotropic density has " + std::to_string(d.sigmas.size()) + " sigmas but the body lives in R^" +
                  std::to_string(n));
    }
    return make_anisotropic_gaussian(d.sigmas);
  }
  throw Error("unknown density '" + d.type + "'");
}

RunConfig parse_config(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t column = 0;
    const std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1, column);
    throw Error(origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": JSON syntax error: " + e.what());
  }
  if (!j.is_object()) throw Error(origin + ": top level must be an object");
  reject_unknown(j, {"body", "bodies", "density", "densities", "k", "ks", "statements", "pairs", "rules", "search",
                     "seed", "output"},
                 "");

  RunConfig c;
  try {
    if (j.contains("body")) c.bodies.push_back(body_from_json(j["body"], "body"));
    if (j.contains("bodies")) {
      if (!j["bodies"].is_array()) throw Error("field 'bodies': expected an array");
      for (std::size_t i = 0; i < j["bodies"].size(); ++i) {
        c.bodies.push_back(body_from_json(j["bodies"][i], "bodies[" + std::to_string(i) + "]"));
      }
    }
    if (j.contains("density") || j.contains("densities")) c.densities.clear();
    if (j.contains("density")) c.densities.push_back(density_from_json(j["density"], "density"));
    if (j.contains("densities")) {
      for (std::size_t i = 0; i < j["densities"].size(); ++i) {
        c.densities.push_back(density_from_json(j["densities"][i], "densities[" + std::to_string(i) + "]"));
      }
    }
    if (j.contains("k")) c.ks.push_back(json_int(j["k"], "k"));
    if (j.contains("ks")) {
      for (std::size_t i = 0; i < j["ks"].size(); ++i) c.ks.push_back(json_int(j["ks"][i], "ks[" + std::to_string(i) + "]"));
    }
    if (j.contains("statements")) {
      c.statements.clear();
      for (std::size_t i = 0; i < j["statements"].size(); ++i) {
        const std::string field = "statements[" + std::to_string(i) + "]";
        if (!j["statements"][i].is_string()) throw Error("field '" + field + "': expected a string");
        try {
          c.statements.push_back(statement_from_string(j["statements"][i].get<std::string>()));
        } catch (const Error& e) {
          throw Error("field '" + field + "': " + e.what());
        }
      }
    }
    if (j.contains("pairs")) {
      for (std::size_t i = 0; i < j["pairs"].size(); ++i) {
        const auto& p = j["pairs"][i];
        const std::string field = "pairs[" + std::to_string(i) + "]";
        if (!p.is_array() || p.size() != 2) throw Error("field '" + field + "': expected [K index, L index]");
        c.pairs.emplace_back(json_int(p[0], field + "[0]"), json_int(p[1], field + "[1]"));
      }
    }
    if (j.contains("rules")) {
      const json& r = j["rules"];
      reject_unknown(r, {"level", "search_level", "levels", "kinds", "radial"}, "rules.");
      if (r.contains("level")) c.rules.level = json_int(r["level"], "rules.level");
      if (r.contains("search_level")) c.rules.search_level = json_int(r["search_level"], "rules.search_level");
      if (r.contains("levels")) {
        for (auto it = r["levels"].begin(); it != r["levels"].end(); ++it) {
          c.rules.levels[parse_int(it.key(), "rules.levels key")] = json_int(it.value(), "rules.levels." + it.key());
        }
      }
      if (r.contains("kinds")) {
        for (auto it = r["kinds"].begin(); it != r["kinds"].end(); ++it) {
          try {
            c.rules.kinds[parse_int(it.key(), "rules.kinds key")] = rule_kind_from_string(it.value().get<std::string>());
          } catch (const Error& e) {
            throw Error("field 'rules.kinds." + it.key() + "': " + e.what());
          }
        }
      }
      if (r.contains("radial")) c.rules.radial = radial_from_json(r["radial"], "rules.radial");
    }
    if (j.contains("search")) {
      const json& s = j["search"];
      reject_unknown(s, {"restarts", "step", "min_step", "tol", "proposals", "max_probes"}, "search.");
      if (s.contains("restarts")) c.search.restarts = json_int(s["restarts"], "search.restarts");
      if (s.contains("step")) c.search.step = json_number(s["step"], "search.step");
      if (s.contains("min_step")) c.search.min_step = json_number(s["min_step"], "search.min_step");
      if (s.contains("tol")) c.search.tol = json_number(s["tol"], "search.tol");
      if (s.contains("proposals")) c.search.proposals = json_int(s["proposals"], "search.proposals");
      if (s.contains("max_probes")) c.search.max_probes = json_int(s["max_probes"], "search.max_probes");
    }
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned()) throw Error("field 'seed': expected a non-negative integer");
      c.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("output")) {
      const json& o = j["output"];
      reject_unknown(o, {"path", "format"}, "output.");
      if (o.contains("path")) c.output_path = o["path"].get<std::string>();
      if (o.contains("format")) c.format = o["format"].get<std::string>();
    }
  } catch (const json::exception& e) {
    throw Error(origin + ": " + e.what());
  } catch (const Error& e) {
    throw Error(origin + ": " + e.what());
  }
  try {
    validate_config(c);
  } catch (const Error& e) {
    throw Error(origin + ": " + e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

json dump_config(const RunConfig& c) {
  json j;
  j["bodies"] = json::array();
  for (const auto& b : c.bodies) j["bodies"].push_back(body_to_json(b));
  j["densities"] = json::array();
  for (const auto& d : c.densities) j["densities"].push_back(density_to_json(d));
  j["ks"] = c.ks;
  j["statements"] = json::array();
  for (auto s : c.statements) j["statements"].push_back(to_string(s));
  j["pairs"] = json::array();
  for (const auto& [a, b] : c.pairs) j["pairs"].push_back({a, b});
  json rules;
  rules["level"] = c.rules.level;
  rules["search_level"] = c.rules.search_level;
  rules["levels"] = json::object();
  for (const auto& [m, l] : c.rules.levels) rules["levels"][std::to_string(m)] = l;
  rules["kinds"] = json::object();
  for (const auto& [m, k] : c.rules.kinds) rules["kinds"][std::to_string(m)] = to_string(k);
  rules["radial"] = {{"kind", c.rules.radial.kind == RadialKind::FixedOrder ? "fixed-order" : "adaptive"},
                     {"order", c.rules.radial.order},
                     {"panels", c.rules.radial.panels},
                     {"tolerance", c.rules.radial.tolerance}};
  j["rules"] = rules;
  j["search"] = {{"restarts", c.search.restarts}, {"step", c.search.step},          {"min_step", c.search.min_step},
                 {"tol", c.search.tol},           {"proposals", c.search.proposals}, {"max_probes", c.search.max_probes}};
  j["seed"] = c.seed;
  j["output"] = {{"path", c.output_path}, {"format", c.format}};
  return j;
}

void validate_config(const RunConfig& c) {
  if (c.bodies.empty()) throw Error("field 'bodies': at least one body is required");
  if (c.ks.empty()) throw Error("field 'ks': at least one k is required");
  if (c.densities.empty()) throw Error("field 'densities': at least one density is required");
  if (c.format != "json" && c.format != "csv") throw Error("field 'output.format': expected json or csv");
  if (c.rules.level < 1 || c.rules.search_level < 1) throw Error("field 'rules': levels must be >= 1");
  for (const auto& [m, l] : c.rules.levels) {
    if (m < 1 || l < 1) throw Error("field 'rules.levels': dimensions and levels must be >= 1");
  }
  for (const auto& [m, kind] : c.rules.kinds) {
    if (kind == RuleKind::ProductAngle && m > 4) {
      throw Error("field 'rules.kinds." + std::to_string(m) + "': product-angle supports m <= 4");
    }
  }
  if (c.search.restarts < 0 || c.search.proposals < 1 || c.search.max_probes < 1 || !(c.search.step > 0.0) ||
      c.search.step > 1.0 || !(c.search.min_step > 0.0) || !(c.search.tol >= 0.0)) {
    throw Error("field 'search': restarts >= 0, proposals >= 1, max_probes >= 1, 0 < min_step, 0 < step <= 1, tol >= 0");
  }
  for (std::size_t i = 0; i < c.bodies.size(); ++i) {
    const auto& b = c.bodies[i];
    const std::string field = "bodies[" + std::to_string(i) + "]";
    if (b.dim() < 2) throw Error("field '" + field + "': dimension must be >= 2");
    if (!(b.scale > 0.0)) throw Error("field '" + field + ".scale': must be positive");
    for (std::size_t d = 0; d < c.densities.size(); ++d) {
      if (c.densities[d].type == "aniso" && static_cast<int>(c.densities[d].sigmas.size()) != b.dim()) {
        throw Error("field 'densities[" + std::to_string(d) + "].sigmas': needs " + std::to_string(b.dim()) +
                    " entries to pair with " + field);
      }
    }
  }
  for (std::size_t s = 0; s < c.statements.size(); ++s) {
    const Statement st = c.statements[s];
    if (st == Statement::Lemma1 || st == Statement::Sharpness) {
      throw Error("field 'statements[" + std::to_string(s) + "]': " + to_string(st) +
                  " is run by its own subcommand, not by a batch config");
    }
  }
  for (std::size_t i = 0; i < c.pairs.size(); ++i) {
    const auto [a, b] = c.pairs[i];
    const int size = static_cast<int>(c.bodies.size());
    if (a < 0 || b < 0 || a >= size || b >= size) {
      throw Error("field 'pairs[" + std::to_string(i) + "]': body index out of range");
    }
    if (c.bodies[static_cast<std::size_t>(a)].dim() != c.bodies[static_cast<std::size_t>(b)].dim()) {
      throw Error("field 'pairs[" + std::to_string(i) + "]': paired bodies must share a dimension");
    }
  }
  for (std::size_t i = 0; i < c.ks.size(); ++i) {
    for (std::size_t b = 0; b < c.bodies.size(); ++b) {
      const int n = c.bodies[b].dim();
      if (c.ks[i] < 1 || c.ks[i] >= n) {
        throw Error("field 'ks[" + std::to_string(i) + "]': k = " + std::to_string(c.ks[i]) +
                    " must satisfy 1 <= k < n = " + std::to_string(n) + " for bodies[" + std::to_string(b) + "]");
      }
    }
  }
}

CheckOptions check_options(const RunConfig& c) {
  CheckOptions o;
  o.quad = c.rules;
  o.quad.seed = c.seed;
  o.search = c.search;
  o.search.seed = c.seed;
  return o;
}

std::vector<VerificationReport> run_batch(const RunConfig& c) {
  validate_config(c);
  const CheckOptions opts = check_options(c);

  std::vector<StarBody> bodies;
  for (const auto& spec : c.bodies) bodies.push_back(build_body(spec, opts.quad));

  std::vector<std::pair<int, int>> pairs = c.pairs;
  if (pairs.empty()) {
    for (std::size_t a = 0; a < bodies.size(); ++a) {
      for (std::size_t b = 0; b < bodies.size(); ++b) {
        if (bodies[a].ambient_dim() == bodies[b].ambient_dim()) pairs.emplace_back(a, b);
      }
    }
  }

  struct Task {
    Statement statement;
    int body = 0;
    int other = -1;
    int k = 1;
    int density = -1;
  };
  std::vector<Task> tasks;
  for (Statement st : c.statements) {
    const bool uses_density = st == Statement::Thm2 || st == Statement::Cor4 || st == Statement::Cor5;
    const int density_count = uses_density ? static_cast<int>(c.densities.size()) : 1;
    if (st == Statement::Cor5) {
      for (int b = 0; b < static_cast<int>(bodies.size()); ++b) {
        for (int k : c.ks) {
          for (int d = 0; d < density_count; ++d) tasks.push_back({st, b, -1, k, d});
        }
      }
      continue;
    }
    for (const auto& [a, b] : pairs) {
      for (int k : c.ks) {
        for (int d = 0; d < density_count; ++d) tasks.push_back({st, a, b, k, uses_density ? d : -1});
      }
    }
  }

  std::vector<std::optional<VerificationReport>> results(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const Task& t = tasks[i];
    const StarBody& kb = bodies[static_cast<std::size_t>(t.body)];
    std::optional<Density> f;
    if (t.density >= 0) f = build_density(c.densities[static_cast<std::size_t>(t.density)], kb.ambient_dim());
    switch (t.statement) {
      case Statement::Thm1:
        results[i] = check_stability_volume(kb, bodies[static_cast<std::size_t>(t.other)], t.k, opts);
        break;
      case Statement::Thm2:
        results[i] = check_stability_measure(kb, bodies[static_cast<std::size_t>(t.other)], *f, t.k, opts);
        break;
      case Statement::Cor3:
        results[i] = check_difference(kb, bodies[static_cast<std::size_t>(t.other)], t.k, nullptr, opts);
        break;
      case Statement::Cor4:
        results[i] = check_difference(kb, bodies[static_cast<std::size_t>(t.other)], t.k, &*f, opts);
        break;
      case Statement::Cor5:
        results[i] = check_slicing(kb, t.k, f ? &*f : nullptr, opts);
        break;
      default:
        throw Error("statement not supported in batch mode");
    }
  });
  std::vector<VerificationReport> out;
  out.reserve(results.size());
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

}  // namespace starslice
