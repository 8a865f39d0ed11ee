#pragma once

#include <optional>
#include <vector>

#include "dmm/sparse_poly.hpp"
#include "dmm/upoly.hpp"

namespace dmm {

/// Isolating interval (lo, hi) for one real root, or an exact rational root.
struct RootInterval {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact_point;
  int multiplicity_of_squarefree = 1;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return exact_point ? *exact_point : Rational((lo + hi) / 2); }
};

/// Sturm chain f, f', -rem, ... made primitive at every step (positive scalings only).
std::vector<UPoly> sturm_sequence(const UPoly& f);
/// Sign changes of the chain at x, zeros skipped.
int sign_variations(const std::vector<UPoly>& seq, const Rational& x);
/// Sign changes at +infinity (dir > 0) or -infinity (dir < 0).
int sign_variations_at_infinity(const std::vector<UPoly>& seq, int dir);

/// Distinct real roots in (a, b]. Throws EndpointRoot if f(a) = 0 or f(b) = 0.
int sturm_count(const std::vector<UPoly>& seq, const Rational& a, const Rational& b);
int sturm_count(const UPoly& f, const Rational& a, const Rational& b);
int sturm_count(const SparsePoly& f, const Rational& a, const Rational& b);
/// Total number of distinct real roots.
int real_root_count(const UPoly& f);

/// f / gcd(f, f'), primitive with positive leading coefficient.
UPoly squarefree_part(const UPoly& f);
SparsePoly squarefree_part(const SparsePoly& f);

/// 1 + max|f_i| / |lead f|; every complex root is strictly smaller in modulus.
Rational cauchy_bound(const UPoly& f);
Rational cauchy_bound(const SparsePoly& f);

/// Certified real-root isolation for one polynomial, reusing its Sturm chain.
class RealRootIsolator {
 public:
  explicit RealRootIsolator(const UPoly& f);

  const UPoly& squarefree() const { return sqf_; }
  const std::vector<UPoly>& chain() const { return chain_; }

  /// Disjoint isolating intervals in increasing order. Interval endpoints are not roots.
  std::vector<RootInterval> isolate() const;
  int count(const Rational& a, const Rational& b) const { return sturm_count(chain_, a, b); }
  int sign_at(const Rational& x) const { return dmm::sign_at(sqf_, x); }
  /// Bisect until width <= max_width or the root is hit exactly.
  void refine(RootInterval& r, const Rational& max_width) const;
  /// Sign of (root - q): -1, 0 or +1. Narrows r as a side effect when q lies inside.
  int compare(RootInterval& r, const Rational& q) const;

 private:
  UPoly sqf_;
  std::vector<UPoly> chain_;
};

std::vector<RootInterval> isolate_real_roots(const UPoly& f);
std::vector<RootInterval> isolate_real_roots(const SparsePoly& f);

/// Deterministic rational split point strictly inside (lo, hi) avoiding roots of f:
/// tries i/j positions for j = 2, 3, 4, ... in order.
Rational split_point(const UPoly& f, const Rational& lo, const Rational& hi);

}  // namespace dmm
