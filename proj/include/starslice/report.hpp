#pragma once

#include <string>
#include <vector>

#include "starslice/verify.hpp"

namespace starslice {

/// Renders reports as "json" or "csv". Output is byte-identical for equal input.
std::string render_reports(const std::vector<VerificationReport>& reports, const std::string& format);
std::string render_sharpness(const SharpnessResult& result, const std::string& format);

/// Writes text to path; throws Error naming the path on failure.
void write_text(const std::string& text, const std::string& path);

/// Rounds to 12 significant digits.
double round_significant(double value);

}  // namespace starslice
