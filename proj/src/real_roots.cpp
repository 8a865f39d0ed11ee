#include "dmm/real_roots.hpp"

#include <algorithm>
#include <numeric>

#include "dmm/errors.hpp"

namespace dmm {

std::vector<UPoly> sturm_sequence(const UPoly& f) {
  std::vector<UPoly> seq;
  if (f.empty()) return seq;
  seq.push_back(primitive_part(f));
  UPoly d = derivative(f);
  if (d.empty()) return seq;
  seq.push_back(primitive_part(d));
  while (true) {
    const UPoly& a = seq[seq.size() - 2];
    const UPoly& b = seq.back();
    int delta = degree(a) - degree(b);
    UPoly r = prem(a, b);
    if (r.empty()) break;
    // prem = lead(b)^(delta+1) * rem; negate and undo the sign of that factor.
    bool flip = !(lead(b) < 0 && (delta + 1) % 2 == 1);
    Integer c = content(r);
    for (auto& x : r) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      if (flip) x = -x;
    }
    seq.push_back(std::move(r));
  }
  return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sign_variations_at_infinity(const std::vector<UPoly>& seq, int dir) {
  int count = 0, last = 0;
  for (const auto& p : seq) {
    int s = sign_at_infinity(p, dir);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sturm_count(const std::vector<UPoly>& seq, const Rational& a, const Rational& b) {
  if (seq.empty()) throw PreconditionError("Sturm count of the zero polynomial");
  if (a > b) throw PreconditionError("Sturm count needs a <= b");
  if (sign_at(seq[0], a) == 0) throw EndpointRoot("root at interval endpoint " + a.get_str());
  if (sign_at(seq[0], b) == 0) throw EndpointRoot("root at interval endpoint " + b.get_str());
  return sign_variations(seq, a) - sign_variations(seq, b);
}

int sturm_count(const UPoly& f, const Rational& a, const Rational& b) { return sturm_count(sturm_sequence(f), a, b); }

int sturm_count(const SparsePoly& f, const Rational& a, const Rational& b) {
  return sturm_count(to_upoly(f, 0), a, b);
}

int real_root_count(const UPoly& f) {
  auto seq = sturm_sequence(f);
  if (seq.empty()) throw PreconditionError("root count of the zero polynomial");
  return sign_variations_at_infinity(seq, -1) - sign_variations_at_infinity(seq, +1);
}

UPoly squarefree_part(const UPoly& f) {
  if (f.empty()) throw PreconditionError("squarefree part of the zero polynomial");
  if (degree(f) == 0) return UPoly{1};
  UPoly g = gcd(f, derivative(f));
  return primitive_part(divide_exact(primitive_part(f), g));
}

SparsePoly squarefree_part(const SparsePoly& f) {
  if (f.nvars() != 1) throw PreconditionError("squarefree_part expects a univariate polynomial");
  return from_upoly(squarefree_part(to_upoly(f, 0)));
}

Rational cauchy_bound(const UPoly& f) {
  if (degree(f) < 1) throw PreconditionError("Cauchy bound of a constant polynomial");
  Integer m = 0;
  for (std::size_t i = 0; i + 1 < f.size(); ++i) m = std::max(m, Integer(abs(f[i])));
  Rational b(m, abs(lead(f)));
  b.canonicalize();
  return b + 1;
}

Rational cauchy_bound(const SparsePoly& f) { return cauchy_bound(to_upoly(f, 0)); }

Rational split_point(const UPoly& f, const Rational& lo, const Rational& hi) {
  Rational w = hi - lo;
  for (long j = 2;; ++j) {
    for (long i = 1; i < j; ++i) {
      if (std::gcd(i, j) != 1) continue;
      Rational p = lo + w * Rational(i, j);
      if (sign_at(f, p) != 0) return p;
    }
  }
}

RealRootIsolator::RealRootIsolator(const UPoly& f) {
  if (f.empty()) throw PreconditionError("isolation of the zero polynomial");
  sqf_ = squarefree_part(f);
  chain_ = sturm_sequence(sqf_);
}

std::vector<RootInterval> RealRootIsolator::isolate() const {
  std::vector<RootInterval> out;
  if (degree(sqf_) < 1) return out;
  Rational b = cauchy_bound(sqf_);
  struct Item {
    Rational lo, hi;
    int count;
  };
  std::vector<Item> stack;
  int total = count(-b, b);
  if (total > 0) stack.push_back({-b, b, total});
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    if (it.count == 1) {
      out.push_back(RootInterval{it.lo, it.hi, std::nullopt, 1});
      continue;
    }
    Rational m = split_point(sqf_, it.lo, it.hi);
    int left = count(it.lo, m);
    int right = it.count - left;
    if (right > 0) stack.push_back({m, it.hi, right});
    if (left > 0) stack.push_back({it.lo, m, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& c) { return a.lo < c.lo; });
  return out;
}

void RealRootIsolator::refine(RootInterval& r, const Rational& max_width) const {
  if (r.exact_point) return;
  int slo = sign_at(r.lo);
  while (r.hi - r.lo > max_width) {
    Rational m = (r.lo + r.hi) / 2;
    int s = sign_at(m);
    if (s == 0) {
      r.exact_point = m;
      r.lo = m;
      r.hi = m;
      return;
    }
    if (s == slo) r.lo = m;
    else r.hi = m;
  }
}

int RealRootIsolator::compare(RootInterval& r, const Rational& q) const {
  if (r.exact_point) return sgn(*r.exact_point - q);
  if (q <= r.lo) return 1;
  if (q >= r.hi) return -1;
  int s = sign_at(q);
  if (s == 0) {
    r.exact_point = q;
    r.lo = q;
    r.hi = q;
    return 0;
  }
  if (s == sign_at(r.lo)) {
    r.lo = q;
    return 1;
  }
  r.hi = q;
  return -1;
}

std::vector<RootInterval> isolate_real_roots(const UPoly& f) { return RealRootIsolator(f).isolate(); }

std::vector<RootInterval> isolate_real_roots(const SparsePoly& f) {
  if (f.nvars() != 1) throw PreconditionError("isolate_real_roots expects a univariate polynomial");
  return isolate_real_roots(to_upoly(f, 0));
}

}  // namespace dmm
