#pragma once

#include <string>
#include <vector>

#include "dmm/bounds.hpp"
#include "dmm/oracle.hpp"
#include "dmm/system_file.hpp"

namespace dmm {

enum class Verdict { pass, fail, undecided };
const char* to_string(Verdict v);

/// One bound checked against oracle roots.
struct ValidationRow {
  std::string bound;
  Direction direction = Direction::lower;
  std::string exponent;
  Integer rounded;
  /// What was measured, e.g. "min |coordinate| over 4 values".
  std::string quantity;
  /// log2 of the extreme measured value (display only).
  double measured_log2 = 0;
  Verdict verdict = Verdict::undecided;
  /// measured minus bound for lower bounds, bound minus measured for upper bounds, in bits.
  double slack_bits = 0;
};

struct ValidationReport {
  std::string system;
  std::size_t real_roots = 0;
  /// Real roots with no zero coordinate; the bounds are stated for these.
  std::size_t toric_roots = 0;
  std::vector<ValidationRow> rows;

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Checks the coordinate, separation and product bounds (profile, mixed-volume and dense
/// forms, plus the Gap theorem) on the real toric roots of a bivariate system.
ValidationReport validate_bounds(const SparsePoly& f, const SparsePoly& g, int d, int tau, std::string name = {});
ValidationReport validate_bounds(const SystemFile& sys);

/// log2 |coordinate| bracket for an oracle root refined to `width`; axis 0 or 1.
Bracket coordinate_log2(const RootOracle2D& oracle, OracleRoot r, int axis, const Rational& width);

}  // namespace dmm
