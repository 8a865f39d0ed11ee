#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dmm/log2_bracket.hpp"
#include "dmm/polytope.hpp"
#include "dmm/sparse_poly.hpp"

namespace dmm {

/// Combinatorial and arithmetic aggregates of a square system f_1..f_n in n variables.
///
/// Index conventions: entry i-1 of the per-polynomial vectors belongs to f_i;
/// mv[0] = M_0 = MV(Q_1..Q_n), mv[i] = M_i = MV(Q_0, Q_1..Q_n without Q_i), Q_0 the unit simplex.
struct SystemProfile {
  std::size_t n = 0;
  std::vector<int> degrees;
  std::vector<int> bitsizes;
  std::vector<Integer> inf_norms;
  std::vector<Integer> lattice_counts;
  std::vector<Integer> mv;
  /// Root count bound used by the formulas; M_0 unless overridden.
  Integer D;
  /// (n - 1) * binom(D, 2).
  Integer B;
  LogExpr lg_C;
  LogExpr lg_rho;
  LogExpr lg_h;
  LogExpr lg_A;
  /// Exact mixed volumes unavailable; Bezout products used instead.
  bool bezout_mode = false;
  std::vector<std::string> warnings;

  int max_degree() const;
  int max_bitsize() const;
  /// sum over i of M_i (tau_i + lg #Q_i).
  LogExpr mixed_sum() const;
};

/// Throws PreconditionError on an empty or non-square system.
SystemProfile system_profile(std::span<const SparsePoly> polys, std::optional<Integer> root_count = std::nullopt);

}  // namespace dmm
