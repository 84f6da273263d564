#include "starslice/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace starslice {

namespace {

constexpr const char* kSchema = "starslice-report-v1";

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (std::size_t i = 0; i < notes.size(); ++i) out += (i ? "; " : "") + notes[i];
  return out;
}

nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_significant(v);
}

}  // namespace

double round_significant(double value) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

std::string render_reports(const std::vector<VerificationReport>& reports, const std::string& format) {
  if (format == "json") {
    nlohmann::json doc;
    doc["schema"] = kSchema;
    doc["reports"] = nlohmann::json::array();
    for (const auto& r : reports) {
      doc["reports"].push_back({{"statement", to_string(r.statement)},
                                {"inputs", r.inputs},
                                {"lhs", number(r.lhs)},
                                {"rhs", number(r.rhs)},
                                {"slack", number(r.slack)},
                                {"epsilon_used", number(r.epsilon_used)},
                                {"numerical_error", number(r.numerical_error)},
                                {"verdict", to_string(r.verdict)},
                                {"certification_banner", r.certification_banner},
                                {"notes", r.notes}});
    }
    return doc.dump(2) + "\n";
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "statement,inputs,lhs,rhs,slack,epsilon_used,numerical_error,verdict,certification_banner,notes\n";
    for (const auto& r : reports) {
      os << to_string(r.statement) << ',' << csv_field(r.inputs) << ',' << csv_number(r.lhs) << ','
         << csv_number(r.rhs) << ',' << csv_number(r.slack) << ',' << csv_number(r.epsilon_used) << ','
         << csv_number(r.numerical_error) << ',' << to_string(r.verdict) << ',' << csv_field(r.certification_banner)
         << ',' << csv_field(join_notes(r.notes)) << '\n';
    }
    return os.str();
  }
  throw Error("unknown output format '" + format + "' (expected json or csv)");
}

std::string render_sharpness(const SharpnessResult& result, const std::string& format) {
  if (format == "json") {
    nlohmann::json doc;
    doc["schema"] = "starslice-sharpness-v1";
    doc["n"] = result.n;
    doc["k"] = result.k;
    doc["limit"] = number(result.limit);
    doc["points"] = nlohmann::json::array();
    for (const auto& p : result.points) doc["points"].push_back({{"j", p.j}, {"ratio", number(p.ratio)}});
    return doc.dump(2) + "\n";
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "n,k,j,ratio,limit\n";
    for (const auto& p : result.points) {
      os << result.n << ',' << result.k << ',' << p.j << ',' << csv_number(p.ratio) << ',' << csv_number(result.limit)
         << '\n';
    }
    return os.str();
  }
  throw Error("unknown output format '" + format + "' (expected json or csv)");
}

void write_text(const std::string& text, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + path + "'");
  out << text;
  out.flush();
  if (!out) throw Error("failed writing output file '" + path + "'");
}

}  // namespace starslice
