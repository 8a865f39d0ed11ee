#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmm/log2_bracket.hpp"
#include "dmm/profile.hpp"
#include "dmm/sparse_poly.hpp"

namespace dmm {

enum class Direction { lower, upper };

/// A bound of the form quantity >= 2^E (lower) or quantity <= 2^E (upper).
struct BoundReport {
  std::string name;
  Direction direction = Direction::lower;
  /// Exact exponent E.
  LogExpr exponent;
  /// Rational endpoint of the enclosure of E on the safe side.
  Rational log2_value;
  /// floor(E) for lower bounds, ceil(E) for upper bounds.
  Integer rounded;
  std::string citation;
};

BoundReport make_report(std::string name, Direction dir, const LogExpr& exponent, std::string citation);
const char* to_string(Direction d);

/// Aggregate bounds on a product of ell root differences of a univariate integer polynomial.
/// Rows: dmm1_product_upper, dmm1_product_lower, and for ell <= d the integer forms
/// dmm1_product_upper_int, dmm1_product_lower_int, dmm1_product_lower_coarse.
std::vector<BoundReport> dmm1_product_bounds(const SparsePoly& f, int ell);

/// Product, coordinate and separation bounds from the profile aggregates.
std::vector<BoundReport> dmm_n_bounds(const SystemProfile& prof, int ell);
/// Same three families in terms of M_0 and sum M_i (tau_i + lg #Q_i).
std::vector<BoundReport> dmm_n_mixedvol_bounds(const SystemProfile& prof, int ell);
/// Closed forms in (n, d, tau) for dense systems.
std::vector<BoundReport> dmm_n_dense_bounds(int n, int d, int tau);
/// Bounds that survive positive-dimensional components (D -> M_0, C -> A C), plus dense forms.
std::vector<BoundReport> dmm_n_excess_bounds(const SystemProfile& prof, int ell);
std::vector<BoundReport> dmm_n_excess_dense_bounds(int n, int d, int tau);

/// Nonzero coordinates exceed (3 d c)^(-n d^n).
BoundReport gap_theorem_bound(int n, int d, const Integer& c);
/// Coordinate lower bound through a projection with b free variables and m polynomials.
BoundReport by_projection_bound(int n, int d, int tau, int m, int b);
/// The simplified form n(n+1)(2 lg(n+1) + n + 2) d^n + n (lg n + tau) d^(n-1), negated.
BoundReport by_projection_simplified(int n, int d, int tau);

/// Rows: eigen_magnitude_lower, eigen_magnitude_lower_rederived, eigen_sep_lower, eigen_gap_lower.
std::vector<BoundReport> eigen_bounds(int n, int tau);

/// Exponents of 1/m for a positive polynomial's minimum: m_DMMp, m_DMM, m_JP, m_BLR, m_BY.
std::vector<BoundReport> positive_min_bounds(int n, int d, int tau);

struct StepBound {
  /// Nodes of the pruned tree.
  LogExpr pruned_nodes;
  /// 2^n times the pruned count.
  LogExpr tree_nodes;
  Integer tree_nodes_ceil;
  std::string mode;
};

/// Explicit dense chain for the number of subdivision steps.
StepBound subdivision_step_bound(int n, int d, int tau);
/// Profile chain D + D lg C + 2D^2 + 3D lg C + 3D lg h + 5nD^2 lg B.
StepBound subdivision_step_bound(const SystemProfile& prof);

/// Linear forms x_1 + i x_2 + ... + i^(n-1) x_n for i = 0..B, B = (n-1) binom(D, 2).
class SeparatingForms {
 public:
  SeparatingForms(int n, const Integer& D);
  const Integer& B() const { return B_; }
  std::size_t count() const;
  std::vector<Integer> form(long i) const;
  /// max coefficient of any form, B^(n-1) (1 when n = 1).
  Integer max_coefficient() const;
  /// First form injective on the points, if any.
  std::optional<long> find_separating(const std::vector<std::vector<Rational>>& points) const;

 private:
  int n_;
  Integer B_;
};

}  // namespace dmm
