#include "dmm/bounds.hpp"

#include <set>

#include "dmm/errors.hpp"
#include "dmm/real_roots.hpp"
#include "dmm/upoly.hpp"

namespace dmm {

namespace {

constexpr unsigned kReportPrecision = 256;

LogExpr lg(long x) { return LogExpr::lg(Rational(x)); }
LogExpr lg(const Integer& x) { return LogExpr::lg(Rational(x)); }
LogExpr q(const Rational& x) { return LogExpr(x); }

Rational ipow(long base, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return Rational(r);
}

void require_positive(int v, const char* what) {
  if (v < 1) throw PreconditionError(std::string(what) + " must be at least 1");
}

}  // namespace

const char* to_string(Direction d) { return d == Direction::lower ? "lower" : "upper"; }

BoundReport make_report(std::string name, Direction dir, const LogExpr& exponent, std::string citation) {
  BoundReport r;
  r.name = std::move(name);
  r.direction = dir;
  r.exponent = exponent;
  r.citation = std::move(citation);
  if (exponent.is_rational()) {
    r.log2_value = exponent.constant();
  } else {
    Bracket b = bracket(exponent, kReportPrecision);
    r.log2_value = dir == Direction::lower ? b.lo : b.hi;
  }
  r.rounded = dir == Direction::lower ? floor_exponent(exponent) : ceil_exponent(exponent);
  return r;
}

std::vector<BoundReport> dmm1_product_bounds(const SparsePoly& f, int ell) {
  if (f.is_zero()) throw PreconditionError("zero polynomial");
  if (f.nvars() != 1) throw PreconditionError("univariate polynomial expected");
  UPoly u = to_upoly(clear_laurent(f), 0);
  const long d = degree(u);
  if (d < 2) throw PreconditionError("degree must be at least 2");
  const long r = degree(squarefree_part(u));
  if (r < 2) throw PreconditionError("square-free part has fewer than two roots");
  if (ell < 1 || ell > d * (d - 1) / 2 || ell > r * (r - 1) / 2)
    throw PreconditionError("ell out of range: need 1 <= ell <= " + std::to_string(r * (r - 1) / 2));
  PolyMeasures m = measures(f);
  const long tau = m.bitsize;
  LogExpr lg_norm2 = Rational(1, 2) * LogExpr::lg(Rational(m.two_norm_sq));
  const char* cite = "univariate aggregate root-difference bound";
  std::vector<BoundReport> out;
  out.push_back(make_report("dmm1_product_upper", Direction::upper, Rational(ell) * (q(1) + lg_norm2), cite));
  out.push_back(make_report("dmm1_product_lower", Direction::lower,
                            q(Rational(ell) - frac(d * (d - 1), 2)) - Rational(d - 1 + ell) * lg_norm2, cite));
  if (ell <= d) {
    const char* icite = "univariate aggregate root-difference bound, integer form";
    out.push_back(make_report("dmm1_product_upper_int", Direction::upper,
                              frac(ell, 2) * lg(d) + q(Rational(2 * ell * tau)), icite));
    out.push_back(make_report("dmm1_product_lower_int", Direction::lower,
                              -Rational(d) * lg(d) - q(Rational(d * d + 3 * tau * (ell + d))), icite));
    out.push_back(make_report("dmm1_product_lower_coarse", Direction::lower,
                              -Rational(d) * lg(d) - q(Rational(d * d + 6 * d * tau)), icite));
  }
  return out;
}

std::vector<BoundReport> dmm_n_bounds(const SystemProfile& prof, int ell) {
  require_positive(ell, "ell");
  if (prof.D < 1) throw PreconditionError("root count bound is zero: no toric roots");
  const Rational D(prof.D), n(static_cast<long>(prof.n)), l(ell);
  LogExpr lgB = prof.B > 0 ? lg(prof.B) : LogExpr();
  LogExpr coord = q(D) + prof.lg_rho + prof.lg_C;
  const char* cite = "multivariate aggregate bound";
  std::vector<BoundReport> out;
  out.push_back(make_report("dmm_product_upper", Direction::upper, l * (q(D + 1) + prof.lg_rho + prof.lg_C), cite));
  out.push_back(make_report("dmm_product_lower", Direction::lower,
                            q(-l - (D - 1) * (D + 2) / 2) + (1 - D - l) * (prof.lg_h + prof.lg_C) +
                                (1 - n) * (D * D + D * (l - 1) + l) * lgB,
                            cite));
  out.push_back(make_report("dmm_coord_upper", Direction::upper, coord, "multivariate coordinate annulus"));
  out.push_back(make_report("dmm_coord_lower", Direction::lower, -coord, "multivariate coordinate annulus"));
  out.push_back(make_report("dmm_sep_lower", Direction::lower,
                            q(-(3 * D + 2) * (D - 1) / 2) -
                                D * (Rational(1, 2) * LogExpr::lg(D + 1) + prof.lg_rho + prof.lg_C),
                            "multivariate separation bound"));
  return out;
}

std::vector<BoundReport> dmm_n_mixedvol_bounds(const SystemProfile& prof, int ell) {
  require_positive(ell, "ell");
  if (prof.mv[0] < 1) throw PreconditionError("mixed volume is zero: no toric roots");
  const Rational M0(prof.mv[0]);
  const long n = static_cast<long>(prof.n);
  LogExpr sigma = prof.mixed_sum();
  std::string cite = prof.bezout_mode ? "mixed-volume form (Bezout degrees substituted)" : "mixed-volume form";
  std::vector<BoundReport> out;
  out.push_back(make_report("mv_product_upper", Direction::upper, M0 * (q(1 + M0) + sigma), cite));
  out.push_back(make_report("mv_product_lower", Direction::lower,
                            Rational(-2) * M0 * sigma -
                                Rational(2) * M0 * M0 *
                                    (q(1) + lg(n + 1) + Rational(n) * lg(n) + Rational(2 * n) * LogExpr::lg(M0)),
                            cite));
  out.push_back(make_report("mv_coord_upper", Direction::upper, q(M0) + sigma, cite));
  out.push_back(make_report("mv_coord_lower", Direction::lower, -(q(M0) + sigma), cite));
  out.push_back(make_report("mv_sep_lower", Direction::lower,
                            -M0 * (q(Rational(3, 2) * M0) + LogExpr::lg(M0) + sigma), cite));
  return out;
}

std::vector<BoundReport> dmm_n_dense_bounds(int n_, int d_, int tau_) {
  require_positive(n_, "n");
  require_positive(d_, "d");
  require_positive(tau_, "tau");
  const long n = n_, d = d_, tau = tau_;
  const Rational dn = ipow(d, n), d2n = ipow(d, 2 * n), d2n1 = ipow(d, 2 * n - 1), dn1 = ipow(d, n - 1);
  LogExpr lgd = lg(d), lgn = lg(n);
  const char* cite = "dense closed form";
  std::vector<BoundReport> out;
  out.push_back(make_report("dense_product_lower", Direction::lower,
                            -d2n * (q(3) + Rational(4) * lgn + Rational(4 * n) * lgd) -
                                Rational(2 * n) * d2n1 * (q(1 + tau) + Rational(n) * lgd),
                            cite));
  LogExpr coord = q(dn) + Rational(n) * dn1 * (q(tau + 1) + Rational(n) * lgd);
  out.push_back(make_report("dense_coord_upper", Direction::upper, coord, cite));
  out.push_back(make_report("dense_coord_lower", Direction::lower, -coord, cite));
  out.push_back(make_report("dense_sep_lower", Direction::lower,
                            -q(2 * d2n) - Rational(n) * d2n1 * (Rational(2 * n) * lgd + q(tau)), cite));
  return out;
}

std::vector<BoundReport> dmm_n_excess_bounds(const SystemProfile& prof, int ell) {
  require_positive(ell, "ell");
  if (prof.mv[0] < 1) throw PreconditionError("mixed volume is zero: no isolated toric roots");
  const Rational M0(prof.mv[0]), n(static_cast<long>(prof.n)), l(ell);
  Integer pairs = prof.mv[0] * (prof.mv[0] - 1) / 2;
  Integer B = static_cast<long>(prof.n - 1) * pairs;
  LogExpr lgB = B > 0 ? lg(B) : LogExpr();
  LogExpr lgh = M0 * lg(static_cast<long>(prof.n + 1)) + prof.lg_rho;
  LogExpr lgCA = prof.lg_C + prof.lg_A;
  LogExpr coord = q(M0) + prof.lg_rho + lgCA;
  const char* cite = "aggregate bound with excess components";
  std::vector<BoundReport> out;
  out.push_back(make_report("excess_product_upper", Direction::upper, l * (q(M0 + 1) + prof.lg_rho + lgCA), cite));
  out.push_back(make_report("excess_product_lower", Direction::lower,
                            q(-l - (M0 - 1) * (M0 + 2) / 2) + (1 - M0 - l) * (lgh + lgCA) +
                                (1 - n) * (M0 * M0 + M0 * (l - 1) + l) * lgB,
                            cite));
  out.push_back(make_report("excess_coord_upper", Direction::upper, coord, cite));
  out.push_back(make_report("excess_coord_lower", Direction::lower, -coord, cite));
  out.push_back(make_report("excess_sep_lower", Direction::lower,
                            q(-(3 * M0 + 2) * (M0 - 1) / 2) -
                                M0 * (Rational(1, 2) * LogExpr::lg(M0 + 1) + prof.lg_rho + lgCA),
                            cite));
  return out;
}

std::vector<BoundReport> dmm_n_excess_dense_bounds(int n_, int d_, int tau_) {
  require_positive(n_, "n");
  require_positive(d_, "d");
  require_positive(tau_, "tau");
  const long n = n_, d = d_, tau = tau_;
  const Rational dn = ipow(d, n), d2n = ipow(d, 2 * n), d2n1 = ipow(d, 2 * n - 1), dn1 = ipow(d, n - 1);
  LogExpr lgd = lg(d), lgn = lg(n);
  LogExpr corr = frac(n * n - n, 2) * lgd;
  const char* cite = "aggregate bound with excess components, dense form";
  std::vector<BoundReport> out;
  out.push_back(make_report("excess_dense_product_lower", Direction::lower,
                            -dn * corr - d2n * (q(3) + Rational(4) * lgn + Rational(4 * n) * lgd) -
                                Rational(2 * n) * d2n1 * (q(2 + tau) + Rational(n) * lgd),
                            cite));
  LogExpr coord = corr + q(dn) + Rational(n) * dn1 * (q(tau + 2) + Rational(n) * lgd);
  out.push_back(make_report("excess_dense_coord_upper", Direction::upper, coord, cite));
  out.push_back(make_report("excess_dense_coord_lower", Direction::lower, -coord, cite));
  out.push_back(make_report("excess_dense_sep_lower", Direction::lower,
                            -dn * corr - q(2 * d2n) - Rational(n) * d2n1 * (Rational(2 * n) * lgd + q(tau + 1)), cite));
  return out;
}

BoundReport gap_theorem_bound(int n, int d, const Integer& c) {
  require_positive(n, "n");
  require_positive(d, "d");
  if (c < 1) throw PreconditionError("coefficient bound must be at least 1");
  Integer arg = 3 * d * c;
  return make_report("gap_coord_lower", Direction::lower, -(Rational(n) * ipow(d, n)) * lg(arg), "Gap theorem");
}

BoundReport by_projection_bound(int n_, int d_, int tau, int m, int b_) {
  require_positive(n_, "n");
  require_positive(d_, "d");
  require_positive(m, "m");
  if (b_ < 0 || b_ >= n_) throw PreconditionError("b must satisfy 0 <= b < n");
  const long n = n_, d = d_, b = b_;
  LogExpr first = Rational(n * (n + 1)) * ipow(d, n) * (Rational(2) * lg(n + 1) + Rational(n + 2) * LogExpr::lg_e());
  LogExpr second = Rational(n - b) * ipow(d, n - b - 1) *
                   (Rational(n - b - 1) * lg(std::max(1L, b)) + lg(static_cast<long>(m)) + q(tau));
  return make_report("by_coord_lower", Direction::lower, -(first + second), "Brownawell-Yap projection bound");
}

BoundReport by_projection_simplified(int n_, int d_, int tau) {
  require_positive(n_, "n");
  require_positive(d_, "d");
  const long n = n_, d = d_;
  LogExpr e = Rational(n * (n + 1)) * ipow(d, n) * (Rational(2) * lg(n + 1) + q(n + 2)) +
              Rational(n) * ipow(d, n - 1) * (lg(n) + q(tau));
  return make_report("by_coord_lower_simplified", Direction::lower, -e, "Brownawell-Yap projection bound, simplified");
}

std::vector<BoundReport> eigen_bounds(int n_, int tau_) {
  require_positive(n_, "n");
  require_positive(tau_, "tau");
  const long n = n_, tau = tau_;
  const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
  std::vector<BoundReport> out;
  out.push_back(make_report("eigen_magnitude_lower", Direction::lower, q(-(2 * n3 + 5 * n2 + 5 + 2 * n2 * tau)),
                            "eigenproblem magnitude bound"));
  out.push_back(make_report("eigen_magnitude_lower_rederived", Direction::lower,
                            q(-(2 * n3 + 5 * n2 + 5 * n + 2 * n2 * tau)), "eigenproblem magnitude bound, re-derived"));
  out.push_back(make_report("eigen_sep_lower", Direction::lower,
                            -(q(4 * n3 * tau + 4 * n4 + 10 * n3 + 12 * n2 + n - 1) + Rational(n) * lg(n)),
                            "eigenproblem separation bound"));
  out.push_back(make_report("eigen_gap_lower", Direction::lower, -(Rational(n + 1) * ipow(2, n)) * (lg(6) + q(tau)),
                            "Gap theorem, eigenproblem"));
  return out;
}

std::vector<BoundReport> positive_min_bounds(int n_, int d_, int tau_) {
  require_positive(n_, "n");
  require_positive(d_, "d");
  require_positive(tau_, "tau");
  const long n = n_, d = d_, tau = tau_;
  LogExpr lgd = lg(d), lgn = lg(n);
  const Rational w = Rational(d) * ipow(d - 1, n - 1);
  const Rational dn1 = ipow(d, n + 1);
  const Rational cnd = Rational(n * n + 3 * n + 1);
  std::vector<BoundReport> out;
  out.push_back(make_report(
      "m_DMMp", Direction::upper,
      frac(n * n + n, 2) * lgd + w * (q(2 + 3 * n + d) + cnd * lgd + Rational((n + 1) * d) * lgn) + q(Rational((n + 1) * tau) * w),
      "positive-minimum bound with excess components"));
  out.push_back(make_report("m_DMM", Direction::upper, w * (q((n + 1) * tau + n + d) + cnd * lgd),
                            "positive-minimum bound, zero-dimensional case"));
  out.push_back(make_report("m_JP", Direction::upper, dn1 * q(tau + 1) + Rational(n + 1) * dn1 * lgd,
                            "Jeronimo-Perrucci positive-minimum bound"));
  out.push_back(make_report("m_BLR", Direction::upper,
                            q(ipow(2, n + 3) * Rational(n * tau) * dn1) +
                                ipow(2, n + 5) * Rational(n) * dn1 * (q(2 * n * d) + Rational(d) * lgn + Rational(n) * lgd),
                            "Basu-Leroy-Roy positive-minimum bound"));
  out.push_back(make_report(
      "m_BY", Direction::upper,
      Rational((n + 1) * (n + 2)) * dn1 * (Rational(2) * lg(n + 2) + Rational(n + 3) * LogExpr::lg_e()) +
          Rational(n + 1) * ipow(d, n) * (Rational(n) * lgn + lg(n + 1) + lgd + q(tau)),
      "Brownawell-Yap evaluation bound"));
  return out;
}

StepBound subdivision_step_bound(int n_, int d_, int tau_) {
  require_positive(n_, "n");
  require_positive(d_, "d");
  require_positive(tau_, "tau");
  const long n = n_, d = d_, tau = tau_;
  LogExpr lgd = lg(d), lgn = lg(n);
  StepBound s;
  s.mode = "dense";
  s.pruned_nodes = q(Rational(2) * ipow(d, n) * Rational(n * tau) * ipow(d, n - 1)) +
                   Rational(8) * ipow(d, 2 * n) * (lgn + Rational(n) * lgd) +
                   Rational(3 * n) * ipow(d, 2 * n - 1) * (Rational(n) * lgd + q(tau));
  s.tree_nodes = ipow(2, n) * s.pruned_nodes;
  s.tree_nodes_ceil = ceil_exponent(s.tree_nodes);
  return s;
}

StepBound subdivision_step_bound(const SystemProfile& prof) {
  const Rational D(prof.D), n(static_cast<long>(prof.n));
  LogExpr lgB = prof.B > 0 ? lg(prof.B) : LogExpr();
  StepBound s;
  s.mode = "profile";
  s.pruned_nodes = q(D) + D * prof.lg_C + q(2 * D * D) + Rational(3) * D * prof.lg_C + Rational(3) * D * prof.lg_h +
                   Rational(5) * n * D * D * lgB;
  s.tree_nodes = ipow(2, static_cast<long>(prof.n)) * s.pruned_nodes;
  s.tree_nodes_ceil = ceil_exponent(s.tree_nodes);
  return s;
}

SeparatingForms::SeparatingForms(int n, const Integer& D) : n_(n) {
  require_positive(n, "n");
  if (D < 1) throw PreconditionError("D must be at least 1");
  B_ = static_cast<long>(n - 1) * (D * (D - 1) / 2);
}

std::size_t SeparatingForms::count() const { return B_.get_ui() + 1; }

std::vector<Integer> SeparatingForms::form(long i) const {
  std::vector<Integer> c(static_cast<std::size_t>(n_));
  Integer p = 1;
  for (auto& x : c) {
    x = p;
    p *= i;
  }
  return c;
}

Integer SeparatingForms::max_coefficient() const {
  if (n_ == 1 || B_ == 0) return 1;
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), B_.get_mpz_t(), static_cast<unsigned long>(n_ - 1));
  return r;
}

std::optional<long> SeparatingForms::find_separating(const std::vector<std::vector<Rational>>& points) const {
  for (long i = 0; Integer(i) <= B_; ++i) {
    auto c = form(i);
    std::set<Rational> values;
    bool ok = true;
    for (const auto& p : points) {
      Rational v = 0;
      for (int k = 0; k < n_; ++k) v += Rational(c[static_cast<std::size_t>(k)]) * p[static_cast<std::size_t>(k)];
      if (!values.insert(v).second) {
        ok = false;
        break;
      }
    }
    if (ok) return i;
  }
  return std::nullopt;
}

}  // namespace dmm
