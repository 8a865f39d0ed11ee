#include "dmm/milne.hpp"

#include <algorithm>
#include <deque>

#include "dmm/bounds.hpp"
#include "dmm/errors.hpp"
#include "dmm/profile.hpp"

namespace dmm {

namespace {

constexpr std::size_t kX = 0, kY = 1, kU = 2, kA = 3, kB = 4;

SparsePoly drop_to_xy(const SparsePoly& p) {
  const std::size_t map[] = {0, 1, 0};
  return remap(p, 2, map);
}

int sign_eval(const SparsePoly& p, const Rational& x, const Rational& y) {
  const Rational pt[] = {x, y};
  return sgn(eval_rational(p, pt));
}

// Sign of (root - q) for a root of the square-free p isolated by r.
int compare_root(const UPoly& p, RootInterval r, const Rational& q) {
  if (r.exact_point) return sgn(*r.exact_point - q);
  if (q <= r.lo) return 1;
  if (q >= r.hi) return -1;
  int s = sign_at(p, q);
  if (s == 0) return 0;
  return s == sign_at(p, r.lo) ? 1 : -1;
}

std::string box_str(const IsolationBox& b) {
  return "[" + b.x_lo.get_str() + ", " + b.x_hi.get_str() + "] x [" + b.y_lo.get_str() + ", " + b.y_hi.get_str() + "]";
}

UPoly univariate_eliminant(const SparsePoly& r, std::size_t var) {
  if (r.is_zero()) throw PositiveDimensional("resultant vanishes identically: system is not zero-dimensional");
  UPoly u = to_upoly(r, var);
  if (degree(u) < 1) return UPoly{1};
  return squarefree_part(u);
}

}  // namespace

VolumeFunctionData build_volume_function(const SparsePoly& f, const SparsePoly& g) {
  if (f.nvars() != 2 || g.nvars() != 2) throw PreconditionError("bivariate polynomials expected");
  if (f.is_zero() || g.is_zero()) throw PreconditionError("zero polynomial in system");
  VolumeFunctionData vf;
  vf.f = clear_laurent(f);
  vf.g = clear_laurent(g);

  vf.rx = univariate_eliminant(resultant(vf.f, vf.g, kY), kX);
  vf.ry = univariate_eliminant(resultant(vf.f, vf.g, kX), kY);
  if (degree(vf.rx) >= 1) vf.rx_roots = isolate_real_roots(vf.rx);
  if (degree(vf.ry) >= 1) vf.ry_roots = isolate_real_roots(vf.ry);

  const std::size_t to_ab[] = {kA, kB};
  SparsePoly fab = remap(vf.f, 5, to_ab);
  SparsePoly gab = remap(vf.g, 5, to_ab);
  auto mono = [](long c, Exponent e) { return SparsePoly::monomial(5, c, std::move(e)); };
  SparsePoly v = mono(1, {0, 0, 1, 0, 0}) + mono(1, {1, 1, 0, 0, 0}) + mono(-1, {1, 0, 0, 0, 1}) +
                 mono(-1, {0, 1, 0, 1, 0}) + mono(1, {0, 0, 0, 1, 1});
  vf.h1 = resultant(fab, v, kA);
  vf.h2 = resultant(gab, v, kA);
  SparsePoly h = resultant(vf.h1, vf.h2, kB);
  if (h.is_zero()) throw PositiveDimensional("volume-function eliminant vanishes identically");
  const std::size_t to_xyu[] = {0, 1, 2, 0, 0};
  h = remap(h, 3, to_xyu);

  vf.u_power_removed = min_degree_in(h, kU);
  if (vf.u_power_removed > 0) {
    std::vector<Term> terms = h.terms();
    for (auto& t : terms) t.exp[kU] -= vf.u_power_removed;
    h = SparsePoly(3, std::move(terms));
  }
  vf.content_removed = integer_content(h);
  h = divide_exact(h, vf.content_removed);
  vf.milne_h = h;

  if (degree_in(h, kU) >= 1) {
    vf.seq = subresultant_prs(h, derivative(h, kU), kU);
    for (std::size_t k = 0; k < vf.seq.polys.size(); ++k) {
      const SparsePoly& s = vf.seq.polys[k];
      vf.sturm_at_zero.push_back(drop_to_xy(specialize(s, kU, 0)));
      vf.lead_coeffs.push_back(drop_to_xy(leading_coeff_in(s, kU)));
    }
    for (const auto& c : vf.seq.divisors) vf.divisors.push_back(drop_to_xy(c));
    vf.degrees = vf.seq.degrees;
  }
  return vf;
}

std::optional<int> MilneOracle::vertex_value(const Rational& x, const Rational& y) const {
  const std::size_t m = vf_.sturm_at_zero.size();
  if (m == 0) return 0;
  std::vector<int> lc(m), dv(vf_.divisors.size());
  for (std::size_t k = 0; k < m; ++k) {
    lc[k] = sign_eval(vf_.lead_coeffs[k], x, y);
    if (lc[k] == 0) return std::nullopt;
  }
  for (std::size_t k = 0; k < dv.size(); ++k) {
    dv[k] = sign_eval(vf_.divisors[k], x, y);
    if (dv[k] == 0) return std::nullopt;
  }
  if (sign_eval(vf_.sturm_at_zero[0], x, y) == 0) return std::nullopt;
  std::vector<int> sigma = sturm_sign_factors(vf_.seq, lc, dv);
  auto variations = [&](auto sign_of_k) {
    int count = 0, last = 0;
    for (std::size_t k = 0; k < m; ++k) {
      int s = sign_of_k(k);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  int v0 = variations([&](std::size_t k) { return sign_eval(vf_.sturm_at_zero[k], x, y) * sigma[k]; });
  int vp = variations([&](std::size_t k) { return lc[k] * sigma[k]; });
  int vm = variations([&](std::size_t k) { return lc[k] * sigma[k] * (vf_.degrees[k] % 2 ? -1 : 1); });
  return 2 * v0 - vp - vm;
}

bool MilneOracle::shift_is_clean(const Rational& c, const Rational& delta, const UPoly& p,
                                 const std::vector<RootInterval>& roots) const {
  Rational lo = c - delta;
  for (const auto& r : roots)
    if (compare_root(p, r, lo) >= 0 && compare_root(p, r, c) < 0) return false;
  return true;
}

int MilneOracle::nudged_vertex_value(const Rational& x, const Rational& y) {
  auto key = std::make_pair(x, y);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  std::optional<int> v = vertex_value(x, y);
  if (!v) {
    // Slopes (2/3)^k differ between attempts so a nudge never follows a fixed line.
    Rational dx(1, kNudgePrime), dy(1, kNudgePrime);
    for (int k = 1; k <= kMaxNudges && !v; ++k) {
      dx /= 2;
      dy /= 3;
      if (!shift_is_clean(x, dx, vf_.rx, vf_.rx_roots) || !shift_is_clean(y, dy, vf_.ry, vf_.ry_roots)) continue;
      v = vertex_value(x - dx, y - dy);
    }
    if (!v) throw DegenerateBox("no certified nudge at vertex (" + x.get_str() + ", " + y.get_str() + ")");
    ++nudges_;
  }
  cache_.emplace(key, *v);
  return *v;
}

int MilneOracle::count(const IsolationBox& box) {
  if (box.x_lo >= box.x_hi || box.y_lo >= box.y_hi) throw PreconditionError("empty box " + box_str(box));
  ++calls_;
  int sum = -nudged_vertex_value(box.x_lo, box.y_lo) + nudged_vertex_value(box.x_hi, box.y_lo) +
            nudged_vertex_value(box.x_lo, box.y_hi) - nudged_vertex_value(box.x_hi, box.y_hi);
  if (sum % 4 != 0 || sum < 0)
    throw DegenerateBox("variation sum " + std::to_string(sum) + " is not a nonnegative multiple of 4 on " + box_str(box));
  return sum / 4;
}

int count_in_box(const VolumeFunctionData& vf, const IsolationBox& box) {
  MilneOracle oracle(vf);
  return oracle.count(box);
}

IsolationResult isolate(const SparsePoly& f, const SparsePoly& g, std::optional<IsolationBox> initial_box) {
  VolumeFunctionData vf = build_volume_function(f, g);
  return isolate(vf, initial_box);
}

IsolationResult isolate(const VolumeFunctionData& vf, std::optional<IsolationBox> initial_box) {
  IsolationResult res;
  const SparsePoly sys[] = {vf.f, vf.g};

  std::optional<SystemProfile> prof;
  std::optional<Integer> coord_exp, sep_exp;
  try {
    prof = system_profile(sys);
    if (prof->D >= 1) {
      auto rows = dmm_n_bounds(*prof, 1);
      for (const auto& r : rows) {
        if (r.name == "dmm_coord_upper") coord_exp = r.rounded;
        if (r.name == "dmm_sep_lower") sep_exp = r.rounded;
      }
    }
  } catch (const PreconditionError&) {
    prof.reset();
  }

  Rational radius = 1;
  if (coord_exp && *coord_exp > 0) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, coord_exp->get_ui());
    radius = p;
  }
  for (const UPoly* e : {&vf.rx, &vf.ry})
    if (degree(*e) >= 1) radius = std::max(radius, cauchy_bound(*e));
  Integer pow2 = 1;
  while (Rational(pow2) < radius) pow2 *= 2;
  radius = pow2;

  if (initial_box) {
    res.initial = *initial_box;
  } else {
    res.initial = IsolationBox{-radius, radius, -radius, radius, 0, 0};
  }
  Rational side = std::max(Rational(res.initial.x_hi - res.initial.x_lo), Rational(res.initial.y_hi - res.initial.y_lo));
  long lg_side = static_cast<long>(mpz_sizeinbase(ceil_q(side).get_mpz_t(), 2));
  long cap = lg_side + 3 + (sep_exp ? static_cast<long>(-sep_exp->get_si()) : 256L);
  res.stats.depth_cap = static_cast<int>(std::min(cap, 100000L));

  int dmax = std::max(total_degree(vf.f), total_degree(vf.g));
  int tmax = std::max(measures(vf.f).bitsize, measures(vf.g).bitsize);
  res.stats.bound_value = subdivision_step_bound(2, std::max(dmax, 1), tmax).tree_nodes_ceil;
  if (prof && prof->D >= 1) res.stats.profile_bound_value = subdivision_step_bound(*prof).tree_nodes_ceil;

  MilneOracle oracle(vf);
  res.initial.depth = 0;
  res.initial.certified_count = oracle.count(res.initial);
  res.initial_count = res.initial.certified_count;
  std::deque<IsolationBox> queue;
  if (res.initial_count > 0) queue.push_back(res.initial);
  while (!queue.empty()) {
    IsolationBox b = std::move(queue.front());
    queue.pop_front();
    ++res.stats.nodes;
    res.stats.max_depth = std::max(res.stats.max_depth, b.depth);
    if (b.certified_count == 1) {
      res.boxes.push_back(b);
      continue;
    }
    if (b.depth >= res.stats.depth_cap) throw DegenerateBox("depth cap exceeded in box " + box_str(b));
    Rational xm = degree(vf.rx) >= 1 ? split_point(vf.rx, b.x_lo, b.x_hi) : Rational((b.x_lo + b.x_hi) / 2);
    Rational ym = degree(vf.ry) >= 1 ? split_point(vf.ry, b.y_lo, b.y_hi) : Rational((b.y_lo + b.y_hi) / 2);
    IsolationBox kids[4] = {
        {b.x_lo, xm, b.y_lo, ym, 0, b.depth + 1},
        {xm, b.x_hi, b.y_lo, ym, 0, b.depth + 1},
        {b.x_lo, xm, ym, b.y_hi, 0, b.depth + 1},
        {xm, b.x_hi, ym, b.y_hi, 0, b.depth + 1},
    };
    int total = 0;
    for (auto& k : kids) {
      k.certified_count = oracle.count(k);
      total += k.certified_count;
    }
    if (total != b.certified_count)
      throw DegenerateBox("children counts do not add up on " + box_str(b));
    for (auto& k : kids)
      if (k.certified_count > 0) queue.push_back(k);
  }
  std::sort(res.boxes.begin(), res.boxes.end(), [](const IsolationBox& a, const IsolationBox& b) {
    if (a.x_lo != b.x_lo) return a.x_lo < b.x_lo;
    return a.y_lo < b.y_lo;
  });
  res.stats.oracle_calls = oracle.calls();
  res.stats.nudges = oracle.nudges();
  return res;
}

}  // namespace dmm
