#include "starslice/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "CLI11.hpp"
#include "starslice/config.hpp"
#include "starslice/report.hpp"

namespace starslice {

namespace {

constexpr int kUsageError = 3;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

void print_estimate(std::ostream& out, const std::string& what, const Estimate& e) {
  out << what << " = " << fmt("%.12g", e.value) << "  (error " << fmt("%.3g", e.error) << ")\n";
}

void print_summary(std::ostream& out, const std::vector<VerificationReport>& reports) {
  char line[512];
  std::snprintf(line, sizeof line, "%-10s %-19s %-19s %-12s %-10s %-18s %s\n", "statement", "lhs", "rhs", "slack",
                "error", "verdict", "inputs");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-10s %-19.12g %-19.12g %-12.4g %-10.3g %-18s %s\n", to_string(r.statement).c_str(),
                  r.lhs, r.rhs, r.slack, r.numerical_error, to_string(r.verdict).c_str(), r.inputs.c_str());
    out << line;
    if (!r.certification_banner.empty()) out << "  ! " << r.certification_banner << "\n";
    for (const auto& note : r.notes) out << "  note: " << note << "\n";
  }
}

std::function<double(double)> parse_alpha(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const double param = colon == std::string::npos ? 1.0 : std::stod(text.substr(colon + 1));
  if (kind == "const") return [param](double) { return param; };
  if (kind == "power") return [param](double r) { return std::pow(r, param); };
  if (kind == "exp") return [param](double r) { return std::exp(-param * r); };
  throw Error("unknown alpha '" + text + "' (expected const:C, power:P or exp:L)");
}

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<int> level;
  std::optional<int> search_level;
  std::optional<int> restarts;
  std::string output;
  std::string format;
};

void apply_globals(const Globals& g, RunConfig& c) {
  if (g.seed) c.seed = *g.seed;
  if (g.level) c.rules.level = *g.level;
  if (g.search_level) c.rules.search_level = *g.search_level;
  if (g.restarts) c.search.restarts = *g.restarts;
  if (!g.output.empty()) c.output_path = g.output;
  if (!g.format.empty()) c.format = g.format;
}

int emit_reports(const std::vector<VerificationReport>& reports, const RunConfig& c, std::ostream& out) {
  print_summary(out, reports);
  if (!c.output_path.empty()) {
    write_text(render_reports(reports, c.format), c.output_path);
    out << "wrote " << reports.size() << " report(s) to " << c.output_path << "\n";
  }
  return exit_code_for(reports);
}

}  // namespace

int exit_code_for(const std::vector<VerificationReport>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Violated) code = std::max(code, 2);
    if (r.verdict == Verdict::HoldsWithinError) code = std::max(code, 1);
  }
  return code;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Volumes, sections and slicing inequalities for origin-symmetric star bodies", "starslice"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "search seed");
  app.add_option("--level", g.level, "base spherical rule level")->check(CLI::PositiveNumber);
  app.add_option("--search-level", g.search_level, "base level of the rules used inside searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--restarts", g.restarts, "random restarts per section search")->check(CLI::NonNegativeNumber);
  app.add_option("--output", g.output, "write reports to this file");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv"}));

  int n = 0;
  auto* constants = app.add_subcommand("constants", "print |B^m|, |S^{m-1}| and c_{n,k}");
  constants->add_option("--n", n, "dimension")->required()->check(CLI::Range(2, 200));

  std::string body_text;
  std::string body2_text;
  std::string density_text;
  int k = 1;
  auto* volume = app.add_subcommand("volume", "volume or measure of a body");
  volume->add_option("--body", body_text, "body descriptor")->required();
  volume->add_option("--density", density_text, "density descriptor");

  std::vector<int> axes;
  auto* section = app.add_subcommand("section", "volume or measure of a coordinate section");
  section->add_option("--body", body_text, "body descriptor")->required();
  section->add_option("--k", k, "codimension of the section")->required();
  section->add_option("--axes", axes, "coordinate indices spanning H (default: the first n-k)")->delimiter(',');
  section->add_option("--density", density_text, "density descriptor");

  auto* max_sec = app.add_subcommand("max-section", "search for the largest central (n-k)-section");
  max_sec->add_option("--body", body_text, "body descriptor")->required();
  max_sec->add_option("--k", k, "codimension of the section")->required();
  max_sec->add_option("--density", density_text, "density descriptor");

  std::string statement_text;
  std::optional<double> injected;
  double lemma_a = 1.0, lemma_b = 1.0, lemma_k = 1.0;
  int lemma_n = 3;
  std::string alpha_text = "const:1";
  auto* check = app.add_subcommand("check", "check one inequality instance");
  check->add_option("statement", statement_text, "thm1 | thm2 | cor3 | cor4 | cor5 | lemma1")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "cor3", "cor4", "cor5", "lemma1"}));
  check->add_option("--body", body_text, "body K");
  check->add_option("--body2", body2_text, "body L (defaults to K)");
  check->add_option("--k", k, "codimension");
  check->add_option("--density", density_text, "density descriptor");
  check->add_option("--injected-max", injected, "use this value in place of the searched maximum");
  check->add_option("--a", lemma_a, "lemma1: a");
  check->add_option("--b", lemma_b, "lemma1: b");
  check->add_option("--lemma-k", lemma_k, "lemma1: real exponent k (defaults to --k)");
  check->add_option("--n", lemma_n, "lemma1: n");
  check->add_option("--alpha", alpha_text, "lemma1: const:C | power:P | exp:L");

  std::vector<int> js;
  auto* sharp = app.add_subcommand("sharpness", "ratio sweep over the triangular bump family on the unit ball");
  sharp->add_option("--n", n, "dimension")->required();
  sharp->add_option("--k", k, "codimension")->required();
  sharp->add_option("--j", js, "bump indices")->required()->delimiter(',');

  std::string config_path;
  auto* batch = app.add_subcommand("batch", "run every check listed in a JSON config");
  batch->add_option("--config", config_path, "config file")->required();


  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "error: unknown subcommand '" << args.front() << "'\n\n" << app.help();
    return kUsageError;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    RunConfig config;
    apply_globals(g, config);
    CheckOptions opts = check_options(config);
    auto need_body = [&](const std::string& text, const char* flag) {
      if (text.empty()) throw Error(std::string("missing required option ") + flag);
      return build_body(parse_body_spec(text), opts.quad);
    };
    auto density_for = [&](int dim) -> std::optional<Density> {
      if (density_text.empty()) return std::nullopt;
      return build_density(parse_density_spec(density_text), dim);
    };

    if (*constants) {
      char line[160];
      out << "n = " << n << "\n";
      std::snprintf(line, sizeof line, "%-4s %-20s %s\n", "m", "|B^m|", "|S^{m-1}|");
      out << line;
      for (int m = 1; m <= n; ++m) {
        std::snprintf(line, sizeof line, "%-4d %-20.12g %.12g\n", m, ball_volume(m), sphere_area(m));
        out << line;
      }
      std::snprintf(line, sizeof line, "\n%-4s %s\n", "k", "c_{n,k}");
      out << line;
      for (int kk = 1; kk < n; ++kk) {
        std::snprintf(line, sizeof line, "%-4d %.12g\n", kk, c_nk(n, kk));
        out << line;
      }
      return 0;
    }
    if (*volume) {
      const StarBody body = need_body(body_text, "--body");
      const auto f = density_for(body.ambient_dim());
      print_estimate(out, f ? "measure" : "volume", body_quantity(body, f ? &*f : nullptr, opts.quad));
      return 0;
    }
    if (*section) {
      const StarBody body = need_body(body_text, "--body");
      const int dim = body.ambient_dim();
      if (k < 1 || k >= dim) throw Error("--k must satisfy 1 <= k < n = " + std::to_string(dim));
      if (axes.empty()) {
        for (int i = 0; i < dim - k; ++i) axes.push_back(i);
      }
      if (static_cast<int>(axes.size()) != dim - k) throw Error("--axes must list n-k coordinate indices");
      Eigen::MatrixXd frame = Eigen::MatrixXd::Zero(dim, dim - k);
      for (std::size_t i = 0; i < axes.size(); ++i) {
        if (axes[i] < 0 || axes[i] >= dim) throw Error("--axes index out of range");
        frame(axes[i], static_cast<Eigen::Index>(i)) = 1.0;
      }
      const Subspace h(frame);
      const auto f = density_for(dim);
      print_estimate(out, f ? "section measure" : "section volume",
                     section_quantity(body, h, f ? &*f : nullptr, opts.quad));
      return 0;
    }
    if (*max_sec) {
      const StarBody body = need_body(body_text, "--body");
      const auto f = density_for(body.ambient_dim());
      const ExtremalSection best = max_section(body, k, f ? &*f : nullptr, opts.quad, opts.search);
      print_estimate(out, "max section", {best.value, best.error});
      out << "probes = " << best.probe_count << "\nframe =\n" << best.subspace.frame() << "\n";
      return 0;
    }
    if (*check) {
      const Statement st = statement_from_string(statement_text);
      opts.injected_max = injected;
      std::vector<VerificationReport> reports;
      if (st == Statement::Lemma1) {
        const double kk = check->count("--lemma-k") ? lemma_k : static_cast<double>(k);
        reports.push_back(lemma_check(lemma_a, lemma_b, kk, lemma_n, parse_alpha(alpha_text), opts.quad.radial));
        return emit_reports(reports, config, out);
      }
      const StarBody kb = need_body(body_text, "--body");
      const int dim = kb.ambient_dim();
      if (k < 1 || k >= dim) throw Error("--k must satisfy 1 <= k < n = " + std::to_string(dim));
      const StarBody lb = body2_text.empty() ? kb : need_body(body2_text, "--body2");
      if (lb.ambient_dim() != dim) throw Error("--body2 must live in the same dimension as --body");
      const auto f = density_for(dim);
      switch (st) {
        case Statement::Thm1:
          reports.push_back(check_stability_volume(kb, lb, k, opts));
          break;
        case Statement::Thm2:
          reports.push_back(check_stability_measure(kb, lb, f ? *f : make_uniform(dim), k, opts));
          break;
        case Statement::Cor3:
          reports.push_back(check_difference(kb, lb, k, nullptr, opts));
          break;
        case Statement::Cor4: {
          const Density d = f ? *f : make_uniform(dim);
          reports.push_back(check_difference(kb, lb, k, &d, opts));
          break;
        }
        default:
          reports.push_back(check_slicing(kb, k, f ? &*f : nullptr, opts));
      }
      return emit_reports(reports, config, out);
    }
    if (*sharp) {
      const SharpnessResult res = sharpness_sweep(n, k, js, opts.quad.radial);
      const std::string format = g.format.empty() ? "csv" : g.format;
      const std::string text = render_sharpness(res, format);
      if (g.output.empty()) {
        out << text;
      } else {
        write_text(text, g.output);
        out << "wrote " << res.points.size() << " point(s) to " << g.output << "\n";
      }
      return 0;
    }
    if (*batch) {
      RunConfig c = load_config(config_path);
      apply_globals(g, c);
      validate_config(c);
      return emit_reports(run_batch(c), c, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace starslice
