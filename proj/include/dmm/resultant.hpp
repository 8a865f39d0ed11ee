#pragma once

#include <vector>

#include "dmm/sparse_poly.hpp"
#include "dmm/upoly.hpp"

namespace dmm {

/// Remainder sequence in one variable of multivariate polynomials.
///
/// For kind == subresultant, polys[k+1] = prem(polys[k-1], polys[k]) / divisors[k-1]
/// with divisors the usual g*h^delta scalars of the subresultant algorithm.
struct SignedRemainderSeq {
  enum class Kind { sturm, subresultant };

  std::vector<SparsePoly> polys;
  std::size_t var = 0;
  Kind kind = Kind::subresultant;
  std::vector<SparsePoly> divisors;
  std::vector<int> degrees;
};

/// Subresultant PRS of (f, g) in `var`; requires deg f >= deg g >= 0 and both nonzero.
/// The sequence stops at the last nonzero element.
SignedRemainderSeq subresultant_prs(const SparsePoly& f, const SparsePoly& g, std::size_t var);

/// Sign of the Sturm-sequence element k relative to polys[k], as a function of the
/// signs of leading coefficients and divisors at a point. lc_signs[k] is the sign of
/// lc_var(polys[k]); div_signs[k-1] the sign of divisors[k-1]. Returns +1 or -1.
std::vector<int> sturm_sign_factors(const SignedRemainderSeq& seq, const std::vector<int>& lc_signs,
                                    const std::vector<int>& div_signs);

/// Resultant in `var`, with the Sylvester-determinant sign convention.
/// Zero when the polynomials share a factor of positive degree in var.
SparsePoly resultant(const SparsePoly& f, const SparsePoly& g, std::size_t var);
/// Determinant of the Sylvester matrix by cofactor expansion; small degrees only.
SparsePoly sylvester_resultant(const SparsePoly& f, const SparsePoly& g, std::size_t var);

Integer resultant(const UPoly& f, const UPoly& g);
/// (-1)^(d(d-1)/2) res(f, f') / lead(f). Requires deg f >= 2.
Integer discriminant(const UPoly& f);

}  // namespace dmm
