#include "dmm/sparse_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "dmm/errors.hpp"

namespace dmm {

namespace {

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (int v : e) h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const { return grlex_before(a, b); }
};

using TermMap = std::unordered_map<Exponent, Integer, ExponentHash>;

std::vector<Term> canonical_from(TermMap& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (c != 0) out.push_back(Term{std::move(c), e});
  std::sort(out.begin(), out.end(),
            [](const Term& a, const Term& b) { return grlex_before(a.exp, b.exp); });
  return out;
}

Integer ipow(const Integer& base, unsigned long k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), k);
  return r;
}

}  // namespace

int exponent_degree(const Exponent& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

bool grlex_before(const Exponent& a, const Exponent& b) {
  int da = exponent_degree(a), db = exponent_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

SparsePoly::SparsePoly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars) {
  TermMap acc;
  for (auto& t : terms) {
    if (t.exp.size() != nvars) throw PreconditionError("term exponent length does not match nvars");
    acc[t.exp] += t.coeff;
  }
  terms_ = canonical_from(acc);
}

SparsePoly SparsePoly::constant(std::size_t nvars, const Integer& c) {
  return monomial(nvars, c, Exponent(nvars, 0));
}

SparsePoly SparsePoly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw PreconditionError("variable index out of range");
  Exponent e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, 1, std::move(e));
}

SparsePoly SparsePoly::monomial(std::size_t nvars, const Integer& c, Exponent e) {
  SparsePoly p(nvars);
  if (e.size() != nvars) throw PreconditionError("monomial exponent length does not match nvars");
  if (c != 0) p.terms_.push_back(Term{c, std::move(e)});
  return p;
}

SparsePoly SparsePoly::univariate(std::span<const Integer> coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) terms.push_back(Term{coeffs[k], Exponent{static_cast<int>(k)}});
  return SparsePoly(1, std::move(terms));
}

SparsePoly SparsePoly::univariate(std::initializer_list<long> coeffs) {
  std::vector<Integer> c;
  for (long v : coeffs) c.emplace_back(v);
  return univariate(std::span<const Integer>(c));
}

bool SparsePoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exp.begin(), terms_[0].exp.end(), [](int v) { return v == 0; });
}

Integer SparsePoly::coeff_of(const Exponent& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return grlex_before(t.exp, x); });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return 0;
}

void SparsePoly::check_same_nvars(const SparsePoly& q) const {
  if (nvars_ != q.nvars_) throw PreconditionError("polynomials have different numbers of variables");
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& q) {
  check_same_nvars(q);
  std::vector<Term> out;
  out.reserve(terms_.size() + q.terms_.size());
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  while (a != terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != terms_.end() && grlex_before(a->exp, b->exp))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || grlex_before(b->exp, a->exp)) {
      out.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) out.push_back(Term{std::move(c), std::move(a->exp)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& q) { return *this += -q; }

SparsePoly operator*(const SparsePoly& p, const SparsePoly& q) {
  p.check_same_nvars(q);
  SparsePoly r(p.nvars_);
  if (p.is_zero() || q.is_zero()) return r;
  TermMap acc;
  acc.reserve(p.size() * q.size());
  Exponent e(p.nvars_);
  for (const auto& s : p.terms_) {
    for (const auto& t : q.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = s.exp[i] + t.exp[i];
      Integer& slot = acc[e];
      mpz_addmul(slot.get_mpz_t(), s.coeff.get_mpz_t(), t.coeff.get_mpz_t());
    }
  }
  r.terms_ = canonical_from(acc);
  return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& q) { return *this = *this * q; }

SparsePoly& SparsePoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

bool operator==(const SparsePoly& p, const SparsePoly& q) {
  if (p.nvars_ != q.nvars_ || p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i)
    if (p.terms_[i].coeff != q.terms_[i].coeff || p.terms_[i].exp != q.terms_[i].exp) return false;
  return true;
}

SparsePoly pow(const SparsePoly& p, unsigned k) {
  SparsePoly result = SparsePoly::constant(p.nvars(), 1);
  SparsePoly base = p;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

int bitsize(const Integer& n) {
  if (n == 0) return 1;
  return static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2)) + 1;
}

PolyMeasures measures(const SparsePoly& p) {
  PolyMeasures m;
  m.var_degrees.assign(p.nvars(), kNegInfDegree);
  m.nterms = p.size();
  if (p.is_zero()) {
    m.inf_norm = 0;
    m.two_norm_sq = 0;
    return m;
  }
  m.total_degree = exponent_degree(p.leading_term().exp);
  m.inf_norm = 0;
  m.two_norm_sq = 0;
  for (const auto& t : p.terms()) {
    Integer a = abs(t.coeff);
    if (a > m.inf_norm) m.inf_norm = a;
    m.two_norm_sq += a * a;
    for (std::size_t i = 0; i < p.nvars(); ++i) m.var_degrees[i] = std::max(m.var_degrees[i], t.exp[i]);
  }
  m.bitsize = bitsize(m.inf_norm);
  return m;
}

int total_degree(const SparsePoly& p) {
  return p.is_zero() ? kNegInfDegree : exponent_degree(p.leading_term().exp);
}

int degree_in(const SparsePoly& p, std::size_t var) {
  int d = kNegInfDegree;
  for (const auto& t : p.terms()) d = std::max(d, t.exp[var]);
  return d;
}

int min_degree_in(const SparsePoly& p, std::size_t var) {
  if (p.is_zero()) return 0;
  int d = std::numeric_limits<int>::max();
  for (const auto& t : p.terms()) d = std::min(d, t.exp[var]);
  return d;
}

std::vector<Exponent> support(const SparsePoly& p) {
  if (p.is_zero()) throw PreconditionError("support of the zero polynomial");
  std::vector<Exponent> s;
  s.reserve(p.size());
  for (const auto& t : p.terms()) s.push_back(t.exp);
  return s;
}

Rational eval_rational(const SparsePoly& p, std::span<const Rational> point) {
  if (point.size() != p.nvars()) throw PreconditionError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Integer num = t.coeff, den = 1;
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      int e = t.exp[i];
      if (e == 0) continue;
      const Rational& v = point[i];
      if (v == 0) {
        if (e < 0) throw PreconditionError("zero substituted into a negative exponent");
        num = 0;
        break;
      }
      unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
      if (e > 0) {
        num *= ipow(v.get_num(), k);
        den *= ipow(v.get_den(), k);
      } else {
        num *= ipow(v.get_den(), k);
        den *= ipow(v.get_num(), k);
      }
    }
    Rational term(num, den);
    term.canonicalize();
    sum += term;
  }
  return sum;
}

bool has_negative_exponents(const SparsePoly& p) {
  for (const auto& t : p.terms())
    for (int v : t.exp)
      if (v < 0) return true;
  return false;
}

SparsePoly clear_laurent(const SparsePoly& p) {
  if (p.is_zero()) return p;
  Exponent shift(p.nvars(), 0);
  for (std::size_t i = 0; i < p.nvars(); ++i) shift[i] = std::min(0, min_degree_in(p, i));
  std::vector<Term> terms = p.terms();
  for (auto& t : terms)
    for (std::size_t i = 0; i < p.nvars(); ++i) t.exp[i] -= shift[i];
  return SparsePoly(p.nvars(), std::move(terms));
}

SparsePoly derivative(const SparsePoly& p, std::size_t var) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.exp[var] == 0) continue;
    Term d{t.coeff * t.exp[var], t.exp};
    d.exp[var] -= 1;
    terms.push_back(std::move(d));
  }
  return SparsePoly(p.nvars(), std::move(terms));
}

std::vector<SparsePoly> coefficients_in(const SparsePoly& p, std::size_t var) {
  if (p.is_zero()) return {};
  int deg = degree_in(p, var);
  if (min_degree_in(p, var) < 0) throw PreconditionError("negative exponent in coefficient extraction");
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(deg) + 1);
  for (const auto& t : p.terms()) {
    Term c = t;
    c.exp[var] = 0;
    buckets[static_cast<std::size_t>(t.exp[var])].push_back(std::move(c));
  }
  std::vector<SparsePoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.emplace_back(p.nvars(), std::move(b));
  return out;
}

SparsePoly from_coefficients(std::span<const SparsePoly> coeffs, std::size_t var) {
  if (coeffs.empty()) return SparsePoly();
  std::size_t nvars = coeffs[0].nvars();
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Term c = t;
      c.exp[var] += static_cast<int>(k);
      terms.push_back(std::move(c));
    }
  }
  return SparsePoly(nvars, std::move(terms));
}

SparsePoly leading_coeff_in(const SparsePoly& p, std::size_t var) {
  if (p.is_zero()) return p;
  int deg = degree_in(p, var);
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.exp[var] != deg) continue;
    Term c = t;
    c.exp[var] = 0;
    terms.push_back(std::move(c));
  }
  return SparsePoly(p.nvars(), std::move(terms));
}

SparsePoly specialize(const SparsePoly& p, std::size_t var, const Rational& value) {
  if (p.is_zero()) return p;
  if (min_degree_in(p, var) < 0) throw PreconditionError("specialize requires nonnegative exponents");
  int deg = degree_in(p, var);
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  std::vector<Integer> num_pow(static_cast<std::size_t>(deg) + 1), den_pow(static_cast<std::size_t>(deg) + 1);
  num_pow[0] = 1;
  den_pow[0] = 1;
  for (int k = 1; k <= deg; ++k) {
    num_pow[k] = num_pow[k - 1] * num;
    den_pow[k] = den_pow[k - 1] * den;
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    int k = t.exp[var];
    Term c{t.coeff * num_pow[k] * den_pow[deg - k], t.exp};
    c.exp[var] = 0;
    terms.push_back(std::move(c));
  }
  return SparsePoly(p.nvars(), std::move(terms));
}

SparsePoly remap(const SparsePoly& p, std::size_t new_nvars, std::span<const std::size_t> mapping) {
  if (mapping.size() != p.nvars()) throw PreconditionError("variable mapping has wrong length");
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Exponent e(new_nvars, 0);
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      if (t.exp[i] == 0) continue;
      if (mapping[i] >= new_nvars) throw PreconditionError("variable mapping out of range");
      e[mapping[i]] += t.exp[i];
    }
    terms.push_back(Term{t.coeff, std::move(e)});
  }
  return SparsePoly(new_nvars, std::move(terms));
}

SparsePoly divide_exact(const SparsePoly& p, const SparsePoly& q) {
  if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (p.nvars() != q.nvars()) throw PreconditionError("polynomials have different numbers of variables");
  if (q.is_constant()) return divide_exact(p, q.leading_term().coeff);
  std::map<Exponent, Integer, GrlexLess> rem;
  for (const auto& t : p.terms()) rem.emplace(t.exp, t.coeff);
  const Term& lq = q.leading_term();
  std::vector<Term> quot;
  Exponent e(p.nvars());
  while (!rem.empty()) {
    auto lead = rem.begin();
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = lead->first[i] - lq.exp[i];
      if (e[i] < 0) throw PreconditionError("inexact polynomial division");
    }
    if (!mpz_divisible_p(lead->second.get_mpz_t(), lq.coeff.get_mpz_t()))
      throw PreconditionError("inexact polynomial division");
    Integer c = lead->second / lq.coeff;
    Exponent m(e.size());
    for (const auto& t : q.terms()) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = t.exp[i] + e[i];
      auto it = rem.try_emplace(m, 0).first;
      mpz_submul(it->second.get_mpz_t(), c.get_mpz_t(), t.coeff.get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quot.push_back(Term{std::move(c), e});
  }
  return SparsePoly(p.nvars(), std::move(quot));
}

SparsePoly divide_exact(const SparsePoly& p, const Integer& c) {
  if (c == 0) throw PreconditionError("division by zero");
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
      throw PreconditionError("inexact division by an integer");
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  }
  return SparsePoly(p.nvars(), std::move(terms));
}

Integer integer_content(const SparsePoly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

SparsePoly prem(const SparsePoly& a, const SparsePoly& b, std::size_t var) {
  if (b.is_zero()) throw PreconditionError("pseudo-remainder by zero");
  if (a.is_zero()) return a;
  int da = degree_in(a, var), db = degree_in(b, var);
  if (da < db) return a;
  std::vector<SparsePoly> r = coefficients_in(a, var);
  std::vector<SparsePoly> bc = coefficients_in(b, var);
  const SparsePoly lcb = bc.back();
  int e = da - db + 1;
  int dr = da;
  while (dr >= db) {
    SparsePoly lr = r[static_cast<std::size_t>(dr)];
    for (int k = 0; k <= dr; ++k) r[static_cast<std::size_t>(k)] *= lcb;
    for (int k = 0; k <= db; ++k) r[static_cast<std::size_t>(k + dr - db)] -= lr * bc[static_cast<std::size_t>(k)];
    --e;
    while (dr >= 0 && r[static_cast<std::size_t>(dr)].is_zero()) --dr;
    if (dr < 0) break;
  }
  r.resize(static_cast<std::size_t>(std::max(dr, -1) + 1));
  SparsePoly out = r.empty() ? SparsePoly(a.nvars()) : from_coefficients(r, var);
  if (e > 0 && !out.is_zero()) out *= pow(lcb, static_cast<unsigned>(e));
  return out;
}

std::string to_display(const SparsePoly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Integer c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < t.exp.size(); ++i) {
      if (t.exp[i] == 0) continue;
      if (has_var) mono << "*";
      has_var = true;
      if (i < names.size()) mono << names[i];
      else mono << "x" << i;
      if (t.exp[i] != 1) mono << "^" << t.exp[i];
    }
    if (!has_var) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

}  // namespace dmm
