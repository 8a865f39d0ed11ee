#pragma once

#include <map>
#include <string>

#include "dmm/sparse_poly.hpp"

namespace dmm {

/// Exact symbolic exponent: constant + sum c_k lg(a_k) + c_e lg(e), rational coefficients.
///
/// Arguments are normalized on insertion (powers of two and small prime factors are
/// split off), so expressions that are integers in exact arithmetic evaluate exactly.
class LogExpr {
 public:
  LogExpr() = default;
  LogExpr(const Rational& c) : constant_(c) {}  // NOLINT: implicit by design
  LogExpr(long c) : constant_(c) {}             // NOLINT

  /// lg(x), x > 0.
  static LogExpr lg(const Rational& x);
  static LogExpr lg(long x) { return lg(Rational(x)); }
  static LogExpr lg_e();

  const Rational& constant() const { return constant_; }
  const std::map<Integer, Rational>& logs() const { return logs_; }
  const Rational& lg_e_coeff() const { return e_coeff_; }
  bool is_rational() const { return logs_.empty() && e_coeff_ == 0; }

  LogExpr& operator+=(const LogExpr& o);
  LogExpr& operator-=(const LogExpr& o);
  LogExpr& operator*=(const Rational& c);
  LogExpr operator-() const;
  friend LogExpr operator+(LogExpr a, const LogExpr& b) { return a += b; }
  friend LogExpr operator-(LogExpr a, const LogExpr& b) { return a -= b; }
  friend LogExpr operator*(LogExpr a, const Rational& c) { return a *= c; }
  friend LogExpr operator*(const Rational& c, LogExpr a) { return a *= c; }

  std::string to_string() const;

 private:
  void add_log(const Integer& arg, const Rational& coeff);

  Rational constant_ = 0;
  std::map<Integer, Rational> logs_;
  Rational e_coeff_ = 0;
};

/// Closed rational enclosure [lo, hi] of a LogExpr.
struct Bracket {
  Rational lo;
  Rational hi;
};

/// Outward enclosure with lg values computed at `precision` bits under directed rounding.
Bracket bracket(const LogExpr& e, unsigned precision);

/// floor / ceil of the exact value when the bracket resolves it by 4096 bits; otherwise
/// the outward value floor(lo) / ceil(hi) at that precision.
Integer floor_exponent(const LogExpr& e);
Integer ceil_exponent(const LogExpr& e);
/// Sign of the exact value, or 0 if not resolved (the value may be exactly 0).
int sign_of(const LogExpr& e);

/// Ceiling and floor of a rational.
Integer ceil_q(const Rational& q);
Integer floor_q(const Rational& q);

/// Floating value for display only.
double approx(const LogExpr& e);

}  // namespace dmm
