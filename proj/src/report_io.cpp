#include "dmm/report_io.hpp"

#include <cmath>
#include <cstdio>

#include "dmm/poly_text.hpp"

namespace dmm {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::ordered_json interval_json(const RootInterval& r) {
  if (r.exact_point) return rational_str(*r.exact_point);
  return nlohmann::ordered_json::array({rational_str(r.lo), rational_str(r.hi)});
}

nlohmann::ordered_json number_or_string(double v) {
  if (std::isfinite(v)) return std::stod(fixed3(v));
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::string fixed3(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

std::string bounds_csv(const std::vector<BoundReport>& rows) {
  std::string out = "name,direction,log2_value,exponent,citation\n";
  for (const auto& r : rows)
    out += r.name + "," + to_string(r.direction) + "," + rational_str(r.log2_value) + "," + r.rounded.get_str() + "," +
           csv_field(r.citation) + "\n";
  return out;
}

nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["direction"] = to_string(r.direction);
  j["log2_value"] = rational_str(r.log2_value);
  j["exponent"] = r.rounded.get_str();
  j["expression"] = r.exponent.to_string();
  j["citation"] = r.citation;
  return j;
}

nlohmann::ordered_json to_json(const std::vector<BoundReport>& rows) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

nlohmann::ordered_json to_json(const IsolationResult& r) {
  nlohmann::ordered_json j;
  auto box = [](const IsolationBox& b) {
    nlohmann::ordered_json o;
    o["x"] = {rational_str(b.x_lo), rational_str(b.x_hi)};
    o["y"] = {rational_str(b.y_lo), rational_str(b.y_hi)};
    o["count"] = b.certified_count;
    return o;
  };
  j["initial"] = box(r.initial);
  j["boxes"] = nlohmann::ordered_json::array();
  for (const auto& b : r.boxes) j["boxes"].push_back(box(b));
  nlohmann::ordered_json s;
  s["oracle_calls"] = r.stats.oracle_calls;
  s["nodes"] = r.stats.nodes;
  s["max_depth"] = r.stats.max_depth;
  s["nudges"] = r.stats.nudges;
  s["depth_cap"] = r.stats.depth_cap;
  s["bound_value"] = r.stats.bound_value.get_str();
  if (r.stats.profile_bound_value) s["profile_bound_value"] = r.stats.profile_bound_value->get_str();
  j["stats"] = s;
  return j;
}

nlohmann::ordered_json to_json(const ValidationReport& r) {
  nlohmann::ordered_json j;
  j["system"] = r.system;
  j["real_roots"] = r.real_roots;
  j["toric_roots"] = r.toric_roots;
  j["failures"] = r.failures();
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o;
    o["bound"] = row.bound;
    o["direction"] = to_string(row.direction);
    o["exponent"] = row.rounded.get_str();
    o["expression"] = row.exponent;
    o["quantity"] = row.quantity;
    o["measured_log2"] = number_or_string(row.measured_log2);
    o["verdict"] = to_string(row.verdict);
    o["slack_bits"] = number_or_string(row.slack_bits);
    j["rows"].push_back(o);
  }
  return j;
}

nlohmann::ordered_json to_json(const std::vector<OracleRoot>& roots) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& r : roots) {
    nlohmann::ordered_json o;
    o["x"] = interval_json(r.x);
    o["y"] = interval_json(r.y);
    a.push_back(o);
  }
  return a;
}

std::string validation_csv(const ValidationReport& r) {
  std::string out = "bound,direction,exponent,quantity,measured_log2,verdict,slack_bits\n";
  for (const auto& row : r.rows)
    out += row.bound + "," + to_string(row.direction) + "," + row.rounded.get_str() + "," + csv_field(row.quantity) + "," +
           fixed3(row.measured_log2) + "," + to_string(row.verdict) + "," + fixed3(row.slack_bits) + "\n";
  return out;
}

}  // namespace dmm
