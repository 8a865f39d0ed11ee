#include "dmm/system_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "dmm/errors.hpp"
#include "dmm/poly_text.hpp"

namespace dmm {

namespace {

std::string_view strip(std::string_view s) {
  auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_small(std::string_view v, int line) {
  Integer k;
  try {
    k = parse_integer(v);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line) + ": " + e.what());
  }
  if (k < 1 || !k.fits_sint_p()) throw ParseError("line " + std::to_string(line) + ": value out of range");
  return static_cast<int>(k.get_si());
}

}  // namespace

int SystemFile::degree() const {
  if (declared_degree) return *declared_degree;
  int d = 0;
  for (const auto& p : polys) d = std::max(d, total_degree(p));
  return d;
}

int SystemFile::bitsize() const {
  if (declared_bitsize) return *declared_bitsize;
  int t = 0;
  for (const auto& p : polys) t = std::max(t, measures(p).bitsize);
  return t;
}

SystemFile parse_system(std::string_view text) {
  SystemFile sys;
  bool have_vars = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = strip(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    auto colon = line.find(':');
    std::string_view key = colon == std::string_view::npos ? std::string_view{} : strip(line.substr(0, colon));
    std::string_view val = colon == std::string_view::npos ? std::string_view{} : strip(line.substr(colon + 1));
    if (key == "vars") {
      if (have_vars) throw ParseError("line " + std::to_string(line_no) + ": duplicate vars");
      std::istringstream in{std::string(val)};
      for (std::string v; in >> v;) {
        if (std::find(sys.vars.begin(), sys.vars.end(), v) != sys.vars.end())
          throw ParseError("line " + std::to_string(line_no) + ": repeated variable " + v);
        sys.vars.push_back(v);
      }
      if (sys.vars.empty()) throw ParseError("line " + std::to_string(line_no) + ": no variables");
      have_vars = true;
    } else if (key == "d") {
      sys.declared_degree = parse_small(val, line_no);
    } else if (key == "tau") {
      sys.declared_bitsize = parse_small(val, line_no);
    } else if (key == "name") {
      sys.name = std::string(val);
    } else {
      if (!have_vars) throw ParseError("line " + std::to_string(line_no) + ": polynomial before vars header");
      try {
        sys.polys.push_back(parse_poly(line, sys.vars.size()));
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  if (!have_vars) throw ParseError("missing vars header");
  if (sys.polys.empty()) throw ParseError("no polynomials");
  return sys;
}

SystemFile load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

std::string serialize_system(const SystemFile& sys) {
  std::string out;
  if (!sys.name.empty()) out += "name: " + sys.name + "\n";
  out += "vars:";
  for (const auto& v : sys.vars) out += " " + v;
  out += "\n";
  if (sys.declared_degree) out += "d: " + std::to_string(*sys.declared_degree) + "\n";
  if (sys.declared_bitsize) out += "tau: " + std::to_string(*sys.declared_bitsize) + "\n";
  for (const auto& p : sys.polys) out += serialize_poly(p) + "\n";
  return out;
}

}  // namespace dmm
