#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dmm/bounds.hpp"
#include "dmm/milne.hpp"
#include "dmm/oracle.hpp"
#include "dmm/validation.hpp"

namespace dmm {

/// Header: name,direction,log2_value,exponent,citation. log2_value is "p/q".
std::string bounds_csv(const std::vector<BoundReport>& rows);
nlohmann::ordered_json to_json(const BoundReport& r);
nlohmann::ordered_json to_json(const std::vector<BoundReport>& rows);

/// Boxes as {x: [lo, hi], y: [lo, hi], count} with exact rationals as strings, plus stats.
nlohmann::ordered_json to_json(const IsolationResult& r);
nlohmann::ordered_json to_json(const ValidationReport& r);
/// Roots refined to the given width; exact coordinates as a single string.
nlohmann::ordered_json to_json(const std::vector<OracleRoot>& roots);

std::string validation_csv(const ValidationReport& r);

/// Fixed-format decimal for display, e.g. "-10.000".
std::string fixed3(double v);

}  // namespace dmm
