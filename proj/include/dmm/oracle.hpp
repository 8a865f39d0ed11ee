#pragma once

#include <memory>
#include <vector>

#include "dmm/real_roots.hpp"
#include "dmm/sparse_poly.hpp"

namespace dmm {

/// One real root of a bivariate system as a product of isolating intervals.
struct OracleRoot {
  RootInterval x;
  RootInterval y;
};

/// Independent real-root finder for a zero-dimensional bivariate system.
///
/// Candidates are pairs of roots of res_y(f, g) and res_x(f, g). Pairs with a rational
/// coordinate are decided by a univariate gcd; the rest by interval exclusion or a
/// Krawczyk inclusion test on the product box.
class RootOracle2D {
 public:
  /// Throws PositiveDimensional when a resultant vanishes identically.
  RootOracle2D(const SparsePoly& f, const SparsePoly& g);

  /// Sorted by x, then y.
  const std::vector<OracleRoot>& roots() const { return roots_; }
  /// Shrinks both intervals to width <= max_width.
  void refine(OracleRoot& r, const Rational& max_width) const;
  /// Sign of (coordinate - q) for axis 0 (x) or 1 (y); narrows the interval.
  int compare(OracleRoot& r, int axis, const Rational& q) const;

  const UPoly& x_eliminant() const { return xiso_->squarefree(); }
  const UPoly& y_eliminant() const { return yiso_->squarefree(); }

 private:
  bool decide(RootInterval x, RootInterval y) const;

  SparsePoly f_, g_;
  std::unique_ptr<RealRootIsolator> xiso_, yiso_;
  std::vector<OracleRoot> roots_;
};

std::vector<OracleRoot> oracle_roots_2d(const SparsePoly& f, const SparsePoly& g);

/// Detects a rational root inside r (denominator dividing the leading coefficient) and pins it.
void snap_rational(const RealRootIsolator& iso, RootInterval& r);

}  // namespace dmm
