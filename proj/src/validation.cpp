#include "dmm/validation.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "dmm/errors.hpp"
#include "dmm/profile.hpp"

namespace dmm {

namespace {

constexpr unsigned kCheckPrecision = 256;
constexpr int kFirstLevel = 16;
constexpr int kLastLevel = 4096;

struct Iv {
  Rational lo, hi;
};

Iv abs_iv(const RootInterval& r) {
  if (r.exact_point) {
    Rational a = abs(*r.exact_point);
    return {a, a};
  }
  if (r.lo >= 0) return {r.lo, r.hi};
  if (r.hi <= 0) return {-r.hi, -r.lo};
  return {0, std::max(Rational(-r.lo), r.hi)};
}

Iv diff_sq(const RootInterval& a, const RootInterval& b) {
  Rational lo = a.lo - b.hi, hi = a.hi - b.lo;
  Rational l2 = lo * lo, h2 = hi * hi;
  if (lo <= 0 && hi >= 0) return {0, std::max(l2, h2)};
  return {std::min(l2, h2), std::max(l2, h2)};
}

Iv dist_sq(const OracleRoot& p, const OracleRoot& q) {
  Iv dx = diff_sq(p.x, q.x), dy = diff_sq(p.y, q.y);
  return {dx.lo + dy.lo, dx.hi + dy.hi};
}

// lg(value) / power - E
LogExpr gap_expr(const Rational& value, int power, const LogExpr& e) {
  return Rational(1, power) * LogExpr::lg(value) - e;
}

struct Judged {
  Verdict verdict;
  double slack;
  double measured;
};

Judged judge(const Iv& m, int power, const BoundReport& b) {
  Rational mid = (m.lo + m.hi) / 2;
  Judged j{Verdict::undecided, 0, 0};
  if (mid > 0) {
    j.measured = approx(Rational(1, power) * LogExpr::lg(mid));
    j.slack = approx(gap_expr(mid, power, b.exponent));
    if (b.direction == Direction::upper) j.slack = -j.slack;
  } else {
    j.measured = -std::numeric_limits<double>::infinity();
    j.slack = b.direction == Direction::upper ? std::numeric_limits<double>::infinity()
                                              : -std::numeric_limits<double>::infinity();
  }
  if (b.direction == Direction::lower) {
    if (m.lo > 0 && bracket(gap_expr(m.lo, power, b.exponent), kCheckPrecision).lo >= 0) j.verdict = Verdict::pass;
    else if (m.hi == 0 || (m.hi > 0 && bracket(gap_expr(m.hi, power, b.exponent), kCheckPrecision).hi < 0))
      j.verdict = Verdict::fail;
  } else {
    if (m.hi == 0 || bracket(gap_expr(m.hi, power, b.exponent), kCheckPrecision).hi <= 0) j.verdict = Verdict::pass;
    else if (m.lo > 0 && bracket(gap_expr(m.lo, power, b.exponent), kCheckPrecision).lo > 0) j.verdict = Verdict::fail;
  }
  return j;
}

struct Check {
  BoundReport bound;
  int power;
  std::string quantity;
  std::function<std::vector<Iv>(const std::vector<OracleRoot>&)> items;
};

std::vector<Iv> coordinate_items(const std::vector<OracleRoot>& roots) {
  std::vector<Iv> out;
  for (const auto& r : roots) {
    out.push_back(abs_iv(r.x));
    out.push_back(abs_iv(r.y));
  }
  return out;
}

std::vector<Iv> pair_items(const std::vector<OracleRoot>& roots) {
  std::vector<Iv> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) out.push_back(dist_sq(roots[i], roots[j]));
  return out;
}

std::vector<Iv> product_item(const std::vector<OracleRoot>& roots) {
  Iv acc{1, 1};
  for (const auto& d : pair_items(roots)) acc = {acc.lo * d.lo, acc.hi * d.hi};
  return {acc};
}

const BoundReport& find_row(const std::vector<BoundReport>& rows, const std::string& name) {
  for (const auto& r : rows)
    if (r.name == name) return r;
  throw std::logic_error("missing bound row " + name);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "undecided";
  }
}

std::size_t ValidationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ValidationRow& r) { return r.verdict != Verdict::pass; }));
}

Bracket coordinate_log2(const RootOracle2D& oracle, OracleRoot r, int axis, const Rational& width) {
  oracle.refine(r, width);
  Iv a = abs_iv(axis == 0 ? r.x : r.y);
  if (a.lo <= 0) throw PreconditionError("coordinate interval still contains zero");
  return {bracket(LogExpr::lg(a.lo), kCheckPrecision).lo, bracket(LogExpr::lg(a.hi), kCheckPrecision).hi};
}

ValidationReport validate_bounds(const SparsePoly& f, const SparsePoly& g, int d, int tau, std::string name) {
  if (f.nvars() != 2 || g.nvars() != 2) throw PreconditionError("validation needs a 2-variable system");
  ValidationReport rep;
  rep.system = std::move(name);
  RootOracle2D oracle(f, g);
  std::vector<OracleRoot> roots;
  for (OracleRoot r : oracle.roots()) {
    ++rep.real_roots;
    if (oracle.compare(r, 0, 0) != 0 && oracle.compare(r, 1, 0) != 0) roots.push_back(r);
  }
  rep.toric_roots = roots.size();
  if (roots.empty()) return rep;

  const SparsePoly sys[] = {f, g};
  SystemProfile prof = system_profile(sys);
  const int pairs = static_cast<int>(roots.size() * (roots.size() - 1) / 2);
  auto zd1 = dmm_n_bounds(prof, 1);
  auto mv1 = dmm_n_mixedvol_bounds(prof, 1);
  auto dense = dmm_n_dense_bounds(2, d, tau);
  Integer c = std::max(measures(f).inf_norm, measures(g).inf_norm);

  const std::string ncoord = std::to_string(2 * roots.size()) + " coordinates";
  std::vector<Check> checks;
  for (const auto* rows : {&zd1, &mv1, &dense}) {
    for (const auto& b : *rows) {
      bool upper = b.direction == Direction::upper;
      if (b.name.find("coord") != std::string::npos)
        checks.push_back({b, 1, (upper ? "max |coordinate| over " : "min |coordinate| over ") + ncoord, coordinate_items});
      else if (b.name.find("sep") != std::string::npos && pairs > 0)
        checks.push_back({b, 2, "min distance over " + std::to_string(pairs) + " pairs", pair_items});
    }
  }
  checks.push_back({gap_theorem_bound(2, d, c), 1, "min |coordinate| over " + ncoord, coordinate_items});
  if (pairs > 0) {
    auto zdl = dmm_n_bounds(prof, pairs);
    auto mvl = dmm_n_mixedvol_bounds(prof, pairs);
    std::string label = "product of " + std::to_string(pairs) + " distances";
    for (const char* nm : {"dmm_product_upper", "dmm_product_lower"}) checks.push_back({find_row(zdl, nm), 2, label, product_item});
    for (const char* nm : {"mv_product_upper", "mv_product_lower"}) checks.push_back({find_row(mvl, nm), 2, label, product_item});
    checks.push_back({find_row(dense, "dense_product_lower"), 2, label, product_item});
  }

  std::vector<ValidationRow> rows(checks.size());
  std::vector<bool> done(checks.size(), false);
  for (int level = kFirstLevel; level <= kLastLevel; level *= 2) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(level));
    for (auto& r : roots) oracle.refine(r, frac(1, den));
    bool all_done = true;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      if (done[i]) continue;
      const Check& ck = checks[i];
      ValidationRow& row = rows[i];
      row.bound = ck.bound.name;
      row.direction = ck.bound.direction;
      row.exponent = ck.bound.exponent.to_string();
      row.rounded = ck.bound.rounded;
      row.quantity = ck.quantity;
      row.verdict = Verdict::pass;
      row.slack_bits = std::numeric_limits<double>::infinity();
      bool lower = ck.bound.direction == Direction::lower;
      row.measured_log2 = lower ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
      for (const Iv& m : ck.items(roots)) {
        Judged j = judge(m, ck.power, ck.bound);
        row.slack_bits = std::min(row.slack_bits, j.slack);
        row.measured_log2 = lower ? std::min(row.measured_log2, j.measured) : std::max(row.measured_log2, j.measured);
        if (j.verdict == Verdict::fail) row.verdict = Verdict::fail;
        else if (j.verdict == Verdict::undecided && row.verdict == Verdict::pass) row.verdict = Verdict::undecided;
      }
      done[i] = row.verdict != Verdict::undecided;
      all_done = all_done && done[i];
    }
    if (all_done) break;
  }
  rep.rows = std::move(rows);
  return rep;
}

ValidationReport validate_bounds(const SystemFile& sys) {
  if (sys.nvars() != 2 || sys.polys.size() != 2) throw PreconditionError("validation needs two polynomials in two variables");
  return validate_bounds(sys.polys[0], sys.polys[1], sys.degree(), sys.bitsize(), sys.name);
}

}  // namespace dmm
