#pragma once

#include <array>
#include <string>
#include <vector>

#include "dmm/bounds.hpp"

namespace dmm {

/// One row of the positive-minimum comparison table: (n, d, tau) and the printed exponents.
struct Table1Reference {
  int n, d, tau;
  long dmmp, dmm, jp, blr, by;
};

inline constexpr std::array<Table1Reference, 3> kTable1 = {{
    {2, 2, 5, 87, 54, 72, 27136, 1192},
    {2, 8, 20, 7457, 5201, 15360, 6684672, 74000},
    {2, 32, 85, 442447, 324506, 3309568, 1604321280, 4696811},
}};

/// Printed value for column m_DMMp, m_DMM, m_JP, m_BLR or m_BY.
inline long table1_printed(const Table1Reference& t, const std::string& column) {
  if (column == "m_DMMp") return t.dmmp;
  if (column == "m_DMM") return t.dmm;
  if (column == "m_JP") return t.jp;
  if (column == "m_BLR") return t.blr;
  return t.by;
}

/// Allowed |computed - printed|: exact except the Brownawell-Yap column.
inline long table1_tolerance(const std::string& column) { return column == "m_BY" ? 1 : 0; }

}  // namespace dmm
