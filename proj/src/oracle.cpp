#include "dmm/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmm/errors.hpp"
#include "dmm/log2_bracket.hpp"
#include "dmm/resultant.hpp"
#include "dmm/upoly.hpp"

namespace dmm {

namespace {

constexpr int kMaxOracleRounds = 400;

struct Iv {
  Rational lo, hi;
  bool has_zero() const { return lo <= 0 && hi >= 0; }
};

Iv point(const Rational& q) { return {q, q}; }
Iv operator+(const Iv& a, const Iv& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Iv operator-(const Iv& a, const Iv& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Iv operator*(const Iv& a, const Iv& b) {
  Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Iv ipow(const Iv& a, int k) {
  if (k == 0) return point(1);
  Rational lo = 1, hi = 1;
  for (int i = 0; i < k; ++i) {
    lo *= a.lo;
    hi *= a.hi;
  }
  if (k % 2 == 1) return {lo, hi};
  if (a.lo >= 0) return {lo, hi};
  if (a.hi <= 0) return {hi, lo};
  return {0, std::max(lo, hi)};
}

Iv interval_eval(const SparsePoly& p, const Iv& x, const Iv& y) {
  Iv acc = point(0);
  for (const auto& t : p.terms()) acc = acc + point(Rational(t.coeff)) * ipow(x, t.exp[0]) * ipow(y, t.exp[1]);
  return acc;
}

Rational eval2(const SparsePoly& p, const Rational& x, const Rational& y) {
  const Rational pt[] = {x, y};
  return eval_rational(p, pt);
}

Iv as_iv(const RootInterval& r) { return r.exact_point ? point(*r.exact_point) : Iv{r.lo, r.hi}; }

UPoly eliminant(const SparsePoly& f, const SparsePoly& g, std::size_t eliminated, std::size_t kept) {
  SparsePoly r = resultant(f, g, eliminated);
  if (r.is_zero()) throw PositiveDimensional("resultant vanishes identically: system is not zero-dimensional");
  UPoly u = to_upoly(r, kept);
  return degree(u) < 1 ? UPoly{1} : squarefree_part(u);
}

// Real roots of gcd(f(a, t), g(a, t)) (axis 0 fixed) or gcd(f(t, a), g(t, a)) (axis 1 fixed).
UPoly fiber_gcd(const SparsePoly& f, const SparsePoly& g, std::size_t fixed, const Rational& a) {
  std::size_t free_var = 1 - fixed;
  UPoly fu = to_upoly(specialize(f, fixed, a), free_var);
  UPoly gu = to_upoly(specialize(g, fixed, a), free_var);
  if (fu.empty() && gu.empty()) throw PositiveDimensional("both polynomials vanish on a coordinate line");
  return gcd(fu, gu);
}

bool fiber_has_root(const UPoly& gc, const RootInterval& r) {
  if (degree(gc) < 1) return false;
  if (r.exact_point) return sign_at(gc, *r.exact_point) == 0;
  return sturm_count(gc, r.lo, r.hi) > 0;
}

}  // namespace

void snap_rational(const RealRootIsolator& iso, RootInterval& r) {
  if (r.exact_point) return;
  Integer L = abs(lead(iso.squarefree()));
  iso.refine(r, frac(1, 2 * L));
  if (r.exact_point) return;
  for (Integer k = ceil_q(Rational(r.lo * L)); k <= floor_q(Rational(r.hi * L)); ++k) {
    Rational c = frac(k, L);
    if (iso.sign_at(c) == 0) {
      r.exact_point = c;
      r.lo = r.hi = c;
      return;
    }
  }
}

RootOracle2D::RootOracle2D(const SparsePoly& f, const SparsePoly& g) {
  if (f.nvars() != 2 || g.nvars() != 2) throw PreconditionError("bivariate polynomials expected");
  if (f.is_zero() || g.is_zero()) throw PreconditionError("zero polynomial in system");
  f_ = clear_laurent(f);
  g_ = clear_laurent(g);
  xiso_ = std::make_unique<RealRootIsolator>(eliminant(f_, g_, 1, 0));
  yiso_ = std::make_unique<RealRootIsolator>(eliminant(f_, g_, 0, 1));
  std::vector<RootInterval> xs = xiso_->isolate(), ys = yiso_->isolate();
  for (auto& r : xs) snap_rational(*xiso_, r);
  for (auto& r : ys) snap_rational(*yiso_, r);
  for (const auto& x : xs)
    for (const auto& y : ys)
      if (decide(x, y)) roots_.push_back({x, y});
}

bool RootOracle2D::decide(RootInterval x, RootInterval y) const {
  if (x.exact_point && y.exact_point)
    return eval2(f_, *x.exact_point, *y.exact_point) == 0 && eval2(g_, *x.exact_point, *y.exact_point) == 0;
  if (x.exact_point) return fiber_has_root(fiber_gcd(f_, g_, 0, *x.exact_point), y);
  if (y.exact_point) return fiber_has_root(fiber_gcd(f_, g_, 1, *y.exact_point), x);

  const SparsePoly fx = derivative(f_, 0), fy = derivative(f_, 1);
  const SparsePoly gx = derivative(g_, 0), gy = derivative(g_, 1);
  for (int round = 0; round < kMaxOracleRounds; ++round) {
    Iv X = as_iv(x), Y = as_iv(y);
    if (!interval_eval(f_, X, Y).has_zero() || !interval_eval(g_, X, Y).has_zero()) return false;
    Rational mx = (X.lo + X.hi) / 2, my = (Y.lo + Y.hi) / 2;
    Rational a = eval2(fx, mx, my), b = eval2(fy, mx, my), c = eval2(gx, mx, my), d = eval2(gy, mx, my);
    Rational det = a * d - b * c;
    if (det != 0) {
      // Y = J(m)^-1, K = m - Y F(m) + (I - Y J(box)) (box - m).
      Rational y00 = d / det, y01 = -b / det, y10 = -c / det, y11 = a / det;
      Rational fm = eval2(f_, mx, my), gm = eval2(g_, mx, my);
      Rational cx = mx - (y00 * fm + y01 * gm), cy = my - (y10 * fm + y11 * gm);
      Iv jfx = interval_eval(fx, X, Y), jfy = interval_eval(fy, X, Y);
      Iv jgx = interval_eval(gx, X, Y), jgy = interval_eval(gy, X, Y);
      Iv m00 = point(1) - (point(y00) * jfx + point(y01) * jgx);
      Iv m01 = point(0) - (point(y00) * jfy + point(y01) * jgy);
      Iv m10 = point(0) - (point(y10) * jfx + point(y11) * jgx);
      Iv m11 = point(1) - (point(y10) * jfy + point(y11) * jgy);
      Iv dx = X - point(mx), dy = Y - point(my);
      Iv kx = point(cx) + m00 * dx + m01 * dy;
      Iv ky = point(cy) + m10 * dx + m11 * dy;
      if (kx.lo > X.lo && kx.hi < X.hi && ky.lo > Y.lo && ky.hi < Y.hi) return true;
      if (kx.hi < X.lo || kx.lo > X.hi || ky.hi < Y.lo || ky.lo > Y.hi) return false;
    }
    xiso_->refine(x, x.width() / 2);
    yiso_->refine(y, y.width() / 2);
    if (x.exact_point || y.exact_point) return decide(x, y);
  }
  throw std::runtime_error("oracle could not certify a candidate root (singular root?)");
}

void RootOracle2D::refine(OracleRoot& r, const Rational& max_width) const {
  xiso_->refine(r.x, max_width);
  yiso_->refine(r.y, max_width);
}

int RootOracle2D::compare(OracleRoot& r, int axis, const Rational& q) const {
  return axis == 0 ? xiso_->compare(r.x, q) : yiso_->compare(r.y, q);
}

std::vector<OracleRoot> oracle_roots_2d(const SparsePoly& f, const SparsePoly& g) {
  return RootOracle2D(f, g).roots();
}

}  // namespace dmm
