#include <doctest.h>

#include "dmm/bounds.hpp"
#include "dmm/errors.hpp"
#include "dmm/poly_text.hpp"
#include "dmm/profile.hpp"
#include "dmm/table1.hpp"

using namespace dmm;

namespace {

const BoundReport& row(const std::vector<BoundReport>& rows, const std::string& name) {
  for (const auto& r : rows)
    if (r.name == name) return r;
  FAIL("missing row " << name);
  return rows.front();
}

SystemProfile profile_of(std::initializer_list<const char*> polys, std::size_t n) {
  std::vector<SparsePoly> ps;
  for (const char* p : polys) ps.push_back(parse_poly(p, n));
  return system_profile(ps);
}

}  // namespace

TEST_CASE("log expressions") {
  CHECK(LogExpr::lg(8).is_rational());
  CHECK(LogExpr::lg(8).constant() == 3);
  CHECK(LogExpr::lg(frac(1, 4)).constant() == -2);
  LogExpr l12 = LogExpr::lg(12);
  CHECK(l12.constant() == 2);
  CHECK(l12.logs().size() == 1);
  CHECK((LogExpr::lg(9) - Rational(2) * LogExpr::lg(3)).is_rational());
  Bracket e = bracket(LogExpr::lg_e(), 128);
  CHECK(e.lo < parse_rational("1.44269504088896341"));
  CHECK(e.hi > parse_rational("1.44269504088896340"));
  CHECK(e.hi - e.lo < parse_rational("0.000000000000000000000000000001"));
  CHECK(floor_exponent(LogExpr::lg(3)) == 1);
  CHECK(ceil_exponent(LogExpr::lg(3)) == 2);
  CHECK(floor_exponent(LogExpr(Rational(-7, 2))) == -4);
  CHECK(sign_of(LogExpr::lg(3) - frac(3, 2)) > 0);
  CHECK(sign_of(LogExpr::lg(3) - frac(8, 5)) < 0);
}

TEST_CASE("dense closed-form examples") {
  auto d = dmm_n_dense_bounds(2, 2, 5);
  CHECK(row(d, "dense_sep_lower").rounded == -176);
  for (int tau = 1; tau <= 12; ++tau) CHECK(row(dmm_n_dense_bounds(2, 2, tau), "dense_coord_lower").rounded == -4 - 4 * (tau + 3));
  // n = 1: -d - (tau + lg d + 1).
  CHECK(row(dmm_n_dense_bounds(1, 4, 3), "dense_coord_lower").rounded == -4 - (3 + 2 + 1));
  CHECK(row(dmm_n_excess_dense_bounds(2, 2, 5), "excess_dense_sep_lower").rounded == -196);
}

TEST_CASE("univariate product bounds") {
  auto b = dmm1_product_bounds(parse_poly("1:2;-1:0", 1), 1);
  CHECK(row(b, "dmm1_product_lower_coarse").rounded == -30);
  CHECK(row(b, "dmm1_product_lower").rounded <= 1);
  CHECK(row(b, "dmm1_product_upper").rounded >= 1);
  CHECK_THROWS_AS(dmm1_product_bounds(parse_poly("1:2;-2:1;1:0", 1), 1), PreconditionError);
  CHECK_THROWS_AS(dmm1_product_bounds(parse_poly("1:2;-1:0", 1), 2), PreconditionError);
  CHECK_THROWS_AS(dmm1_product_bounds(parse_poly("1:1;-1:0", 1), 1), PreconditionError);

  // Roots {0, 1, 2, 4}: product over all six pairs is 48.
  auto six = dmm1_product_bounds(parse_poly("1:4;-7:3;14:2;-8:1", 1), 6);
  CHECK(sign_of(LogExpr::lg(48) - row(six, "dmm1_product_lower").exponent) > 0);
  CHECK(sign_of(row(six, "dmm1_product_upper").exponent - LogExpr::lg(48)) > 0);
  CHECK(six.size() == 2);
}

TEST_CASE("Gap theorem and Brownawell-Yap") {
  CHECK(row(eigen_bounds(2, 1), "eigen_gap_lower").rounded == -44);
  BoundReport g = gap_theorem_bound(2, 2, 32);
  CHECK(sign_of(g.exponent + Rational(8) * LogExpr::lg(192)) == 0);
  CHECK((g.exponent + Rational(8) * LogExpr::lg(192)).is_rational());
  CHECK(g.rounded == -61);
  CHECK(gap_theorem_bound(3, 1, 5).rounded == floor_exponent(Rational(-3) * LogExpr::lg(15)));
  for (int n = 1; n <= 3; ++n) {
    BoundReport full = by_projection_bound(n, 3, 7, n, 0);
    BoundReport simple = by_projection_simplified(n, 3, 7);
    Rational k = Rational(n * (n + 1) * (n + 2)) * Rational(n == 1 ? 3 : n == 2 ? 9 : 27);
    CHECK((full.exponent - simple.exponent + k * (LogExpr::lg_e() - 1)).is_rational());
    CHECK((full.exponent - simple.exponent + k * (LogExpr::lg_e() - 1)).constant() == 0);
  }
  CHECK_THROWS_AS(by_projection_bound(2, 2, 2, 2, 2), PreconditionError);
}

TEST_CASE("eigen bounds") {
  auto e = eigen_bounds(2, 1);
  CHECK(row(e, "eigen_magnitude_lower").rounded == -49);
  CHECK(row(e, "eigen_sep_lower").rounded == -227);
  CHECK(row(e, "eigen_magnitude_lower_rederived").rounded == -54);
  for (int n = 2; n <= 8; ++n)
    for (int tau : {10, 20}) {
      auto r = eigen_bounds(n, tau);
      CHECK(sign_of(row(r, "eigen_magnitude_lower").exponent - row(r, "eigen_gap_lower").exponent) > 0);
    }
  CHECK_NOTHROW(eigen_bounds(1, 1));
}

TEST_CASE("positive-minimum comparison table") {
  for (const auto& t : kTable1) {
    for (const auto& r : positive_min_bounds(t.n, t.d, t.tau)) {
      long printed = table1_printed(t, r.name);
      if (r.name == "m_DMM") CHECK(r.rounded != printed);
      else CHECK(abs(r.rounded - printed) <= table1_tolerance(r.name));
    }
  }
  CHECK(row(positive_min_bounds(2, 2, 5), "m_DMM").rounded == 60);
  for (int i = 1; i < 3; ++i) {
    auto r = positive_min_bounds(2, kTable1[i].d, kTable1[i].tau);
    CHECK(row(r, "m_DMMp").rounded < row(r, "m_JP").rounded);
  }
}

TEST_CASE("monotonicity on a grid") {
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 5; ++d)
      for (int tau = 1; tau <= 6; ++tau) {
        auto base = dmm_n_dense_bounds(n, d, tau);
        auto more_tau = dmm_n_dense_bounds(n, d, tau + 1);
        auto more_d = dmm_n_dense_bounds(n, d + 1, tau);
        auto more_n = dmm_n_dense_bounds(n + 1, d, tau);
        for (std::size_t i = 0; i < base.size(); ++i) {
          int s = base[i].direction == Direction::lower ? 1 : -1;
          CHECK(s * sign_of(base[i].exponent - more_tau[i].exponent) >= 0);
          CHECK(s * sign_of(base[i].exponent - more_d[i].exponent) >= 0);
          CHECK(s * sign_of(base[i].exponent - more_n[i].exponent) >= 0);
        }
        auto pm = positive_min_bounds(n, d, tau), pm2 = positive_min_bounds(n, d, tau + 1);
        for (std::size_t i = 0; i < pm.size(); ++i) CHECK(pm[i].rounded <= pm2[i].rounded);
      }
}

TEST_CASE("dense coordinate bound beats the Gap theorem") {
  int checked = 0;
  for (int n = 2; n <= 3; ++n)
    for (int d = 2; d <= 8; ++d)
      for (int tau = 1; tau <= 16; ++tau) {
        LogExpr dense = row(dmm_n_dense_bounds(n, d, tau), "dense_coord_lower").exponent;
        Integer c;
        mpz_ui_pow_ui(c.get_mpz_t(), 2, static_cast<unsigned long>(tau));
        LogExpr gap = gap_theorem_bound(n, d, c).exponent;
        CHECK(sign_of(dense - gap) > 0);
        ++checked;
      }
  CHECK(checked == 2 * 7 * 16);
}

TEST_CASE("outward rounding survives doubled precision") {
  std::vector<BoundReport> all = dmm_n_dense_bounds(3, 5, 9);
  for (auto v : {positive_min_bounds(2, 8, 20), eigen_bounds(3, 4), dmm_n_excess_dense_bounds(2, 3, 7)})
    all.insert(all.end(), v.begin(), v.end());
  all.push_back(by_projection_bound(3, 4, 5, 3, 1));
  for (const auto& r : all) {
    Bracket b = bracket(r.exponent, 512);
    if (r.direction == Direction::lower) {
      CHECK(r.log2_value <= b.hi);
      CHECK(Rational(r.rounded) <= b.hi);
    } else {
      CHECK(r.log2_value >= b.lo);
      CHECK(Rational(r.rounded) >= b.lo);
    }
  }
}

TEST_CASE("profile bounds") {
  SystemProfile lin = profile_of({"1:1,0;1:0,1;-1:0,0", "1:1,0;-1:0,1"}, 2);
  LogExpr sum = lin.mixed_sum() - (LogExpr(5) + LogExpr::lg(3));
  CHECK(sum.is_rational());
  CHECK(sum.constant() == 0);

  SystemProfile eig = profile_of({"2:1,0,0;1:0,1,0;-1:1,0,1", "1:1,0,0;3:0,1,0;-1:0,1,1", "1:2,0,0;1:0,2,0;-1:0,0,0"}, 3);
  CHECK((eig.lg_A - frac(25, 2)).is_rational());
  CHECK((eig.lg_A - frac(25, 2)).constant() == 0);

  auto zd = dmm_n_bounds(eig, 2), ex = dmm_n_excess_bounds(eig, 2);
  for (const char* nm : {"product_lower", "coord_lower", "sep_lower"})
    CHECK(sign_of(row(zd, std::string("dmm_") + nm).exponent - row(ex, std::string("excess_") + nm).exponent) >= 0);

  SystemProfile uni = profile_of({"1:2;-1:0"}, 1);
  auto u = dmm_n_bounds(uni, 1);
  CHECK(row(u, "dmm_sep_lower").rounded < 1);
  CHECK_THROWS_AS(dmm_n_bounds(uni, 0), PreconditionError);

  auto mv = dmm_n_mixedvol_bounds(lin, 1);
  CHECK(row(mv, "mv_coord_upper").rounded >= 2);
}

TEST_CASE("subdivision step bound") {
  StepBound s = subdivision_step_bound(2, 2, 5);
  CHECK(s.pruned_nodes.is_rational());
  CHECK(s.pruned_nodes.constant() == 880);
  CHECK(s.tree_nodes_ceil == 3520);
  for (int d = 1; d <= 9; ++d)
    for (int tau = 1; tau <= 5; ++tau) {
      LogExpr closed = Rational(8 * d * d) * LogExpr::lg(d) + Rational(3 * d) * LogExpr::lg(d) + LogExpr(5L * d * tau);
      LogExpr diff = subdivision_step_bound(1, d, tau).pruned_nodes - closed;
      CHECK(diff.is_rational());
      CHECK(diff.constant() == 0);
    }
  SystemProfile lin = profile_of({"1:1,0;1:0,1;-3:0,0", "1:1,0;-1:0,1;-1:0,0"}, 2);
  CHECK(subdivision_step_bound(lin).tree_nodes_ceil > 0);
}

TEST_CASE("separating forms") {
  SeparatingForms f(2, 3);
  CHECK(f.B() == 3);
  CHECK(f.count() == 4);
  CHECK(f.form(2) == std::vector<Integer>{1, 2});
  CHECK(f.max_coefficient() == 3);
  SeparatingForms one(1, 5);
  CHECK(one.B() == 0);
  CHECK(one.count() == 1);
  CHECK(one.form(0) == std::vector<Integer>{1});
  std::vector<std::vector<Rational>> pts = {{0, 1}, {1, 0}, {2, -1}};
  auto i = f.find_separating(pts);
  REQUIRE(i.has_value());
  CHECK(*i == 0);
  std::vector<std::vector<Rational>> clash = {{0, 0}, {0, 1}, {1, 0}};
  REQUIRE(f.find_separating(clash).has_value());
  CHECK(*f.find_separating(clash) == 2);
}
