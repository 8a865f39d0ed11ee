#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace dmm {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical num/den; den must be nonzero.
inline Rational frac(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Exponent vector of a monomial; entries may be negative (Laurent terms).
using Exponent = std::vector<int>;

struct Term {
  Integer coeff;
  Exponent exp;
};

/// Total degree of the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

int exponent_degree(const Exponent& e);

/// Graded-lex comparison: true when `a` sorts strictly before `b` in the
/// canonical (descending) term order.
bool grlex_before(const Exponent& a, const Exponent& b);

/// Multivariate Laurent polynomial with exact integer coefficients.
///
/// Terms are kept in descending graded-lex order with distinct exponents and
/// nonzero coefficients, so structural equality is polynomial equality.
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}
  /// Canonicalizes: merges equal exponents, drops zeros, sorts.
  SparsePoly(std::size_t nvars, std::vector<Term> terms);

  static SparsePoly constant(std::size_t nvars, const Integer& c);
  static SparsePoly variable(std::size_t nvars, std::size_t index);
  static SparsePoly monomial(std::size_t nvars, const Integer& c, Exponent e);
  /// Dense univariate constructor, coefficients from degree 0 upward.
  static SparsePoly univariate(std::span<const Integer> coeffs);
  static SparsePoly univariate(std::initializer_list<long> coeffs);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Leading term in grlex order. Requires nonzero.
  const Term& leading_term() const { return terms_.front(); }

  Integer coeff_of(const Exponent& e) const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& q);
  SparsePoly& operator-=(const SparsePoly& q);
  SparsePoly& operator*=(const SparsePoly& q);
  SparsePoly& operator*=(const Integer& c);

  friend SparsePoly operator+(SparsePoly p, const SparsePoly& q) { return p += q; }
  friend SparsePoly operator-(SparsePoly p, const SparsePoly& q) { return p -= q; }
  friend SparsePoly operator*(const SparsePoly& p, const SparsePoly& q);
  friend SparsePoly operator*(SparsePoly p, const Integer& c) { return p *= c; }
  friend SparsePoly operator*(const Integer& c, SparsePoly p) { return p *= c; }
  friend bool operator==(const SparsePoly& p, const SparsePoly& q);

 private:
  void check_same_nvars(const SparsePoly& q) const;

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

SparsePoly pow(const SparsePoly& p, unsigned k);

/// Degree, norm and bitsize summary of a nonzero polynomial.
struct PolyMeasures {
  int total_degree = kNegInfDegree;
  std::vector<int> var_degrees;
  Integer inf_norm;
  Integer two_norm_sq;
  /// 1 + bit length of the largest coefficient magnitude (sign bit included).
  int bitsize = 0;
  std::size_t nterms = 0;
};

/// Zero input yields total_degree == kNegInfDegree and zero norms; callers reject it.
PolyMeasures measures(const SparsePoly& p);

int total_degree(const SparsePoly& p);
/// Largest exponent of variable `var`; kNegInfDegree for zero.
int degree_in(const SparsePoly& p, std::size_t var);
/// Smallest exponent of variable `var`; 0 for zero.
int min_degree_in(const SparsePoly& p, std::size_t var);
/// Bit length of |n| plus one sign bit.
int bitsize(const Integer& n);

/// Exponent vectors of the terms. Throws PreconditionError on zero.
std::vector<Exponent> support(const SparsePoly& p);

/// Exact evaluation. Throws PreconditionError when a zero is substituted
/// into a variable carrying a negative exponent.
Rational eval_rational(const SparsePoly& p, std::span<const Rational> point);

/// Multiplies by the smallest monomial that makes every exponent nonnegative.
SparsePoly clear_laurent(const SparsePoly& p);
bool has_negative_exponents(const SparsePoly& p);

SparsePoly derivative(const SparsePoly& p, std::size_t var);

/// Coefficients of `p` viewed in R[var]; entry k is the coefficient of var^k
/// (still an nvars polynomial, free of `var`). Requires nonnegative exponents in var.
std::vector<SparsePoly> coefficients_in(const SparsePoly& p, std::size_t var);
SparsePoly from_coefficients(std::span<const SparsePoly> coeffs, std::size_t var);
/// Coefficient of the highest power of `var`.
SparsePoly leading_coeff_in(const SparsePoly& p, std::size_t var);

/// Substitutes the rational `value` for `var` and clears denominators by the
/// positive factor den^deg_var(p). Signs of evaluations are preserved.
SparsePoly specialize(const SparsePoly& p, std::size_t var, const Rational& value);

/// Renames variables: variable i of `p` becomes variable mapping[i] of the result.
SparsePoly remap(const SparsePoly& p, std::size_t new_nvars, std::span<const std::size_t> mapping);

/// Exact quotient p / q. Throws PreconditionError when q does not divide p.
SparsePoly divide_exact(const SparsePoly& p, const SparsePoly& q);
SparsePoly divide_exact(const SparsePoly& p, const Integer& c);

/// Positive gcd of the integer coefficients (0 for the zero polynomial).
Integer integer_content(const SparsePoly& p);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b with respect to `var`.
SparsePoly prem(const SparsePoly& a, const SparsePoly& b, std::size_t var);

/// Human-readable form, e.g. "2*x0^2 - 3*x1 + 1".
std::string to_display(const SparsePoly& p, std::span<const std::string> names = {});

}  // namespace dmm
