#pragma once

#include <vector>

#include "dmm/sparse_poly.hpp"

namespace dmm {

/// Dense univariate integer polynomial, coefficients from degree 0 upward.
/// Kept trimmed: no trailing zeros, the zero polynomial is empty.
using UPoly = std::vector<Integer>;

void trim(UPoly& f);
/// -1 for the zero polynomial.
int degree(const UPoly& f);
const Integer& lead(const UPoly& f);

/// Requires every variable other than `var` to have exponent 0.
UPoly to_upoly(const SparsePoly& p, std::size_t var = 0);
SparsePoly from_upoly(const UPoly& f, std::size_t nvars = 1, std::size_t var = 0);

UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Integer& c);
UPoly derivative(const UPoly& f);

/// Nonnegative gcd of the coefficients.
Integer content(const UPoly& f);
/// f / content(f) with positive leading coefficient.
UPoly primitive_part(const UPoly& f);

/// lead(b)^(deg a - deg b + 1) * a = q * b + r.
void pseudo_divide(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
UPoly prem(const UPoly& a, const UPoly& b);
/// Exact quotient; throws PreconditionError if b does not divide a over Z.
UPoly divide_exact(const UPoly& a, const UPoly& b);
/// Primitive gcd with positive leading coefficient (0 only when both are 0).
UPoly gcd(const UPoly& a, const UPoly& b);

Rational eval(const UPoly& f, const Rational& x);
/// Sign of f(x), computed on the homogenized integer form.
int sign_at(const UPoly& f, const Rational& x);
/// Sign of f as x tends to +infinity (dir > 0) or -infinity (dir < 0).
int sign_at_infinity(const UPoly& f, int dir);

}  // namespace dmm
