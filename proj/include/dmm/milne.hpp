#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dmm/real_roots.hpp"
#include "dmm/resultant.hpp"
#include "dmm/sparse_poly.hpp"

namespace dmm {

/// Eliminant h(x, y, u) of {f(a,b), g(a,b), u + (x-a)(y-b)} and its u-remainder sequence.
///
/// Up to a constant, h = u^k prod (u + (x - a_i)(y - b_i)) over the complex roots (a_i, b_i);
/// the u^k factor and the integer content are removed.
struct VolumeFunctionData {
  SparsePoly f, g;
  /// Variables (x, y, u, a, b); h1 is free of a, h2 likewise.
  SparsePoly h1, h2;
  /// Variables (x, y, u).
  SparsePoly milne_h;
  int u_power_removed = 0;
  Integer content_removed = 1;
  SignedRemainderSeq seq;
  /// Variables (x, y): sequence elements at u = 0, their leading coefficients in u, the PRS divisors.
  std::vector<SparsePoly> sturm_at_zero;
  std::vector<SparsePoly> lead_coeffs;
  std::vector<SparsePoly> divisors;
  std::vector<int> degrees;
  /// Square-free res_y(f, g) in x and res_x(f, g) in y.
  UPoly rx, ry;
  std::vector<RootInterval> rx_roots, ry_roots;
};

/// Throws PositiveDimensional when an eliminant vanishes identically.
VolumeFunctionData build_volume_function(const SparsePoly& f, const SparsePoly& g);

struct IsolationBox {
  Rational x_lo, x_hi, y_lo, y_hi;
  int certified_count = 0;
  int depth = 0;
};

struct IsolationStats {
  long oracle_calls = 0;
  long nodes = 0;
  int max_depth = 0;
  long nudges = 0;
  int depth_cap = 0;
  /// Step bounds for comparison: dense chain and, when available, the profile chain.
  Integer bound_value;
  std::optional<Integer> profile_bound_value;
};

/// Box-counting oracle with a vertex cache. Roots on the lower/left edge of a box count as
/// inside and roots on the upper/right edge as outside.
class MilneOracle {
 public:
  explicit MilneOracle(const VolumeFunctionData& vf) : vf_(vf) {}

  /// Real roots in [x_lo, x_hi) x [y_lo, y_hi). Throws DegenerateBox when no certified nudge exists.
  int count(const IsolationBox& box);
  long calls() const { return calls_; }
  long nudges() const { return nudges_; }

  /// N_pos - N_neg of u -> h(P, u) at a vertex, or nullopt when the sequence degenerates there.
  std::optional<int> vertex_value(const Rational& x, const Rational& y) const;

 private:
  int nudged_vertex_value(const Rational& x, const Rational& y);
  bool shift_is_clean(const Rational& c, const Rational& delta, const UPoly& p,
                      const std::vector<RootInterval>& roots) const;

  const VolumeFunctionData& vf_;
  std::map<std::pair<Rational, Rational>, int> cache_;
  long calls_ = 0;
  long nudges_ = 0;
};

int count_in_box(const VolumeFunctionData& vf, const IsolationBox& box);

struct IsolationResult {
  std::vector<IsolationBox> boxes;
  IsolationBox initial;
  int initial_count = 0;
  IsolationStats stats;
};

/// Subdivision isolation of the real roots of {f = g = 0} in the plane.
/// Without an initial box, [-R, R]^2 covers every real root.
IsolationResult isolate(const SparsePoly& f, const SparsePoly& g, std::optional<IsolationBox> initial_box = std::nullopt);
IsolationResult isolate(const VolumeFunctionData& vf, std::optional<IsolationBox> initial_box = std::nullopt);

/// Nudge schedule: attempt k moves a vertex by (-1 / (2^k kNudgePrime), -1 / (3^k kNudgePrime)).
inline constexpr long kNudgePrime = 1000003;
inline constexpr int kMaxNudges = 40;

}  // namespace dmm
