#include "dmm/log2_bracket.hpp"

#include <mpfr.h>

#include <sstream>

#include "dmm/errors.hpp"

namespace dmm {

namespace {

constexpr unsigned long kSmallPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

class Mpfr {
 public:
  explicit Mpfr(unsigned prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }
  Rational to_q() {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

 private:
  mpfr_t v_;
};

// [lo, hi] enclosing lg(a) for an integer a >= 2.
Bracket lg_bracket(const Integer& a, unsigned prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_set_z(lo.get(), a.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi.get(), a.get_mpz_t(), MPFR_RNDU);
  mpfr_log2(lo.get(), lo.get(), MPFR_RNDD);
  mpfr_log2(hi.get(), hi.get(), MPFR_RNDU);
  return {lo.to_q(), hi.to_q()};
}

Bracket lg_e_bracket(unsigned prec) {
  Mpfr lo(prec), hi(prec);
  mpfr_const_log2(lo.get(), MPFR_RNDD);
  mpfr_const_log2(hi.get(), MPFR_RNDU);
  // lg e = 1 / ln 2
  return {1 / hi.to_q(), 1 / lo.to_q()};
}

}  // namespace

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

void LogExpr::add_log(const Integer& arg_in, const Rational& coeff) {
  if (coeff == 0) return;
  Integer arg = arg_in;
  if (arg <= 0) throw PreconditionError("logarithm of a nonpositive number");
  unsigned long twos = mpz_scan1(arg.get_mpz_t(), 0);
  if (twos) {
    mpz_fdiv_q_2exp(arg.get_mpz_t(), arg.get_mpz_t(), twos);
    constant_ += coeff * static_cast<long>(twos);
  }
  for (unsigned long p : kSmallPrimes) {
    unsigned long k = 0;
    while (mpz_divisible_ui_p(arg.get_mpz_t(), p)) {
      mpz_divexact_ui(arg.get_mpz_t(), arg.get_mpz_t(), p);
      ++k;
    }
    if (k) {
      Rational& slot = logs_[Integer(p)];
      slot += coeff * static_cast<long>(k);
      if (slot == 0) logs_.erase(Integer(p));
    }
  }
  if (arg == 1) return;
  if (mpz_perfect_power_p(arg.get_mpz_t())) {
    for (unsigned long k = mpz_sizeinbase(arg.get_mpz_t(), 2); k >= 2; --k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), arg.get_mpz_t(), k)) {
        add_log(root, coeff * static_cast<long>(k));
        return;
      }
    }
  }
  Rational& slot = logs_[arg];
  slot += coeff;
  if (slot == 0) logs_.erase(arg);
}

LogExpr LogExpr::lg(const Rational& x) {
  if (x <= 0) throw PreconditionError("logarithm of a nonpositive number");
  LogExpr e;
  e.add_log(x.get_num(), 1);
  e.add_log(x.get_den(), -1);
  return e;
}

LogExpr LogExpr::lg_e() {
  LogExpr e;
  e.e_coeff_ = 1;
  return e;
}

LogExpr& LogExpr::operator+=(const LogExpr& o) {
  constant_ += o.constant_;
  e_coeff_ += o.e_coeff_;
  for (const auto& [a, c] : o.logs_) {
    Rational& slot = logs_[a];
    slot += c;
    if (slot == 0) logs_.erase(a);
  }
  return *this;
}

LogExpr LogExpr::operator-() const {
  LogExpr r = *this;
  r *= Rational(-1);
  return r;
}

LogExpr& LogExpr::operator-=(const LogExpr& o) { return *this += -o; }

LogExpr& LogExpr::operator*=(const Rational& c) {
  if (c == 0) {
    *this = LogExpr();
    return *this;
  }
  constant_ *= c;
  e_coeff_ *= c;
  for (auto& [a, k] : logs_) k *= c;
  return *this;
}

std::string LogExpr::to_string() const {
  std::ostringstream os;
  os << constant_.get_str();
  for (const auto& [a, c] : logs_) os << (c < 0 ? " - " : " + ") << Rational(abs(c)).get_str() << "*lg(" << a.get_str() << ")";
  if (e_coeff_ != 0) os << (e_coeff_ < 0 ? " - " : " + ") << Rational(abs(e_coeff_)).get_str() << "*lg(e)";
  return os.str();
}

Bracket bracket(const LogExpr& e, unsigned precision) {
  Bracket b{e.constant(), e.constant()};
  auto accumulate = [&](const Bracket& x, const Rational& c) {
    if (c > 0) {
      b.lo += c * x.lo;
      b.hi += c * x.hi;
    } else {
      b.lo += c * x.hi;
      b.hi += c * x.lo;
    }
  };
  for (const auto& [a, c] : e.logs()) accumulate(lg_bracket(a, precision), c);
  if (e.lg_e_coeff() != 0) accumulate(lg_e_bracket(precision), e.lg_e_coeff());
  return b;
}

namespace {

constexpr unsigned kMinPrecision = 64;
constexpr unsigned kMaxPrecision = 4096;

}  // namespace

Integer floor_exponent(const LogExpr& e) {
  if (e.is_rational()) return floor_q(e.constant());
  Bracket b;
  for (unsigned p = kMinPrecision; p <= kMaxPrecision; p *= 2) {
    b = bracket(e, p);
    if (floor_q(b.lo) == floor_q(b.hi)) break;
  }
  return floor_q(b.lo);
}

Integer ceil_exponent(const LogExpr& e) {
  if (e.is_rational()) return ceil_q(e.constant());
  Bracket b;
  for (unsigned p = kMinPrecision; p <= kMaxPrecision; p *= 2) {
    b = bracket(e, p);
    if (ceil_q(b.lo) == ceil_q(b.hi)) break;
  }
  return ceil_q(b.hi);
}

int sign_of(const LogExpr& e) {
  if (e.is_rational()) return sgn(e.constant());
  for (unsigned p = kMinPrecision; p <= kMaxPrecision; p *= 2) {
    Bracket b = bracket(e, p);
    if (b.lo > 0) return 1;
    if (b.hi < 0) return -1;
  }
  return 0;
}

double approx(const LogExpr& e) {
  Bracket b = bracket(e, 64);
  return Rational((b.lo + b.hi) / 2).get_d();
}

}  // namespace dmm
