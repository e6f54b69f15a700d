#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "domgeo/engine.hpp"
#include "domgeo/geometry.hpp"

namespace domgeo {

/// Dataset text: a header "n d_real d_feat", then n rows of d_real real and
/// d_feat feature coordinates. Blank lines and lines starting with '#' are
/// skipped. Throws ParseError naming the offending line.
Dataset parse_dataset(std::string_view text);
std::string format_dataset(const Dataset& ds);

/// Throws IoError if the file cannot be read, ParseError if it is malformed.
Dataset read_dataset_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Shortest decimal form that round-trips exactly (17 significant digits).
std::string format_double(double v);

/// One line per point: "i j sqdist", or "i - -" without a dominator.
std::string format_result(const DominatorResult& result);

} // namespace domgeo
