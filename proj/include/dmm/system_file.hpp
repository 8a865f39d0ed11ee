#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmm/sparse_poly.hpp"

namespace dmm {

/// A polynomial system read from a `.sys` file.
///
/// Grammar, one item per line:
///   # comment            (also trailing, after `#`)
///   vars: x y            (required, before any polynomial)
///   d: 8                 (optional declared degree)
///   tau: 20              (optional declared bitsize)
///   name: circle-line    (optional)
///   2:2,0;1:0,2;-2:0,0   (one polynomial per line, see parse_poly)
struct SystemFile {
  std::string name;
  std::vector<std::string> vars;
  std::vector<SparsePoly> polys;
  std::optional<int> declared_degree;
  std::optional<int> declared_bitsize;

  std::size_t nvars() const { return vars.size(); }
  /// Declared values when present, otherwise the maxima over the polynomials.
  int degree() const;
  int bitsize() const;
};

/// Throws ParseError with a line number on malformed input.
SystemFile parse_system(std::string_view text);
SystemFile load_system(const std::string& path);
std::string serialize_system(const SystemFile& sys);

}  // namespace dmm
