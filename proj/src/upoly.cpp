#include "dmm/upoly.hpp"

#include <algorithm>

#include "dmm/errors.hpp"

namespace dmm {

void trim(UPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UPoly& f) { return static_cast<int>(f.size()) - 1; }

const Integer& lead(const UPoly& f) {
  if (f.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return f.back();
}

UPoly to_upoly(const SparsePoly& p, std::size_t var) {
  UPoly f;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < t.exp.size(); ++i)
      if (i != var && t.exp[i] != 0) throw PreconditionError("polynomial is not univariate in the requested variable");
    if (t.exp[var] < 0) throw PreconditionError("negative exponent in univariate conversion");
    auto k = static_cast<std::size_t>(t.exp[var]);
    if (f.size() <= k) f.resize(k + 1);
    f[k] = t.coeff;
  }
  trim(f);
  return f;
}

SparsePoly from_upoly(const UPoly& f, std::size_t nvars, std::size_t var) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (f[k] == 0) continue;
    Exponent e(nvars, 0);
    e[var] = static_cast<int>(k);
    terms.push_back(Term{f[k], std::move(e)});
  }
  return SparsePoly(nvars, std::move(terms));
}

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  return r;
}

UPoly scale(const UPoly& a, const Integer& c) {
  if (c == 0) return {};
  UPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

UPoly derivative(const UPoly& f) {
  if (f.size() <= 1) return {};
  UPoly r(f.size() - 1);
  for (std::size_t k = 1; k < f.size(); ++k) r[k - 1] = f[k] * static_cast<unsigned long>(k);
  trim(r);
  return r;
}

Integer content(const UPoly& f) {
  Integer g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

UPoly primitive_part(const UPoly& f) {
  if (f.empty()) return f;
  Integer g = content(f);
  if (f.back() < 0) g = -g;
  UPoly r = f;
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

void pseudo_divide(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  if (b.empty()) throw PreconditionError("pseudo-division by zero");
  r = a;
  q.clear();
  int da = degree(a), db = degree(b);
  if (da < db) return;
  q.assign(static_cast<std::size_t>(da - db + 1), 0);
  const Integer& lb = b.back();
  int e = da - db + 1;
  int dr = da;
  while (dr >= db) {
    Integer lr = r[static_cast<std::size_t>(dr)];
    int shift = dr - db;
    for (auto& c : q) c *= lb;
    q[static_cast<std::size_t>(shift)] += lr;
    for (int k = 0; k <= dr; ++k) r[static_cast<std::size_t>(k)] *= lb;
    for (int k = 0; k <= db; ++k)
      mpz_submul(r[static_cast<std::size_t>(k + shift)].get_mpz_t(), lr.get_mpz_t(), b[static_cast<std::size_t>(k)].get_mpz_t());
    --e;
    trim(r);
    dr = degree(r);
  }
  if (e > 0) {
    Integer m;
    mpz_pow_ui(m.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : q) c *= m;
    for (auto& c : r) c *= m;
  }
  trim(q);
}

UPoly prem(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  pseudo_divide(a, b, q, r);
  return r;
}

UPoly divide_exact(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw PreconditionError("division by the zero polynomial");
  if (a.empty()) return {};
  int da = degree(a), db = degree(b);
  if (da < db) throw PreconditionError("inexact univariate division");
  UPoly r = a;
  UPoly q(static_cast<std::size_t>(da - db + 1));
  for (int k = da - db; k >= 0; --k) {
    Integer& top = r[static_cast<std::size_t>(k + db)];
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) throw PreconditionError("inexact univariate division");
    Integer c = top / b.back();
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[static_cast<std::size_t>(k + j)].get_mpz_t(), c.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
    q[static_cast<std::size_t>(k)] = std::move(c);
  }
  trim(r);
  if (!r.empty()) throw PreconditionError("inexact univariate division");
  trim(q);
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.empty()) return primitive_part(b);
  if (b.empty()) return primitive_part(a);
  UPoly x = primitive_part(a), y = primitive_part(b);
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    UPoly r = prem(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  return x;
}

Rational eval(const UPoly& f, const Rational& x) {
  Rational acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int sign_at(const UPoly& f, const Rational& x) {
  if (f.empty()) return 0;
  const Integer& p = x.get_num();
  const Integer& q = x.get_den();
  Integer acc = f.back();
  Integer qpow = 1;
  for (int k = degree(f) - 1; k >= 0; --k) {
    qpow *= q;
    acc *= p;
    mpz_addmul(acc.get_mpz_t(), f[static_cast<std::size_t>(k)].get_mpz_t(), qpow.get_mpz_t());
  }
  return sgn(acc);
}

int sign_at_infinity(const UPoly& f, int dir) {
  if (f.empty()) return 0;
  int s = sgn(f.back());
  if (dir < 0 && degree(f) % 2 == 1) s = -s;
  return s;
}

}  // namespace dmm
