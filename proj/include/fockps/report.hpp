#pragma once

#include <json.hpp>

#include <string>

namespace fockps {

using Json = nlohmann::json;

/// Locale-independent general formatting at 12 significant digits.
std::string format_sig12(double v);

/// Nearest double to the 12-significant-digit text form of v; JSON numeric
/// fields go through this so emitted documents carry the same values the
/// human-readable output prints.
double round_sig12(double v);

/// Report skeleton shared by every command.
Json make_report(const std::string& command, Json inputs, Json outputs, Json provenance);

}  // namespace fockps
