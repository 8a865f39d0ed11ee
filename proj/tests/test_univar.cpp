#include <doctest.h>

#include <random>

#include "dmm/errors.hpp"
#include "dmm/poly_text.hpp"
#include "dmm/real_roots.hpp"
#include "dmm/resultant.hpp"
#include "dmm/upoly.hpp"

using namespace dmm;

namespace {

SparsePoly P(const char* s, std::size_t n = 2) { return parse_poly(s, n); }

UPoly from_roots(const std::vector<Rational>& roots) {
  UPoly f{1};
  for (const auto& r : roots) f = mul(f, UPoly{-r.get_num(), r.get_den()});
  return f;
}

bool contains(const RootInterval& r, const Rational& q) {
  if (r.exact_point) return *r.exact_point == q;
  return r.lo < q && q < r.hi;
}

SparsePoly random_bivariate(std::mt19937& rng, int maxdeg) {
  std::uniform_int_distribution<int> c(-5, 5), e(0, maxdeg);
  std::vector<Term> t;
  for (int i = 0; i < 4; ++i) t.push_back({c(rng), {e(rng), e(rng)}});
  t.push_back({std::uniform_int_distribution<int>(1, 4)(rng), {maxdeg, 0}});
  return SparsePoly(2, std::move(t));
}

}  // namespace

TEST_CASE("resultant examples") {
  SparsePoly r = resultant(P("1:2,0;1:0,2;-2:0,0"), P("1:1,0;-1:0,1"), 1);
  SparsePoly expect = P("2:2,0;-2:0,0");
  CHECK((r == expect || r == -expect));
  SparsePoly f = P("1:2,0;3:1,1;-1:0,0");
  CHECK(resultant(f, f, 0).is_zero());
  SparsePoly lin = resultant(P("1:1,0,0;-1:0,1,0", 3), P("1:1,0,0;-1:0,0,1", 3), 0);
  SparsePoly ab = P("1:0,1,0;-1:0,0,1", 3);
  CHECK((lin == ab || lin == -ab));
  CHECK(resultant(P("3:0,0"), P("1:2,0;1:0,0"), 0) == P("9:0,0"));
}

TEST_CASE("subresultant resultants equal Sylvester determinants up to degree 3") {
  std::mt19937 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int df = 1 + trial % 3, dg = 1 + (trial / 3) % 3;
    SparsePoly f = random_bivariate(rng, df), g = random_bivariate(rng, dg);
    for (std::size_t var : {0u, 1u}) {
      CHECK(resultant(f, g, var) == sylvester_resultant(f, g, var));
      ++checked;
    }
  }
  CHECK(checked == 120);
}

TEST_CASE("resultant vanishes exactly at projections of common roots") {
  // Roots (1, 1), (-1, -1) of the circle and the diagonal.
  UPoly rx = to_upoly(resultant(P("1:2,0;1:0,2;-2:0,0"), P("1:1,0;-1:0,1"), 1), 0);
  for (int x = -3; x <= 3; ++x) CHECK((sign_at(rx, x) == 0) == (x == 1 || x == -1));
  UPoly ry = to_upoly(resultant(P("1:2,0;-1:0,0"), P("1:0,2;-4:0,0"), 0), 1);
  for (int y = -3; y <= 3; ++y) CHECK((sign_at(ry, y) == 0) == (y == 2 || y == -2));
}

TEST_CASE("subresultant sequence shape") {
  SparsePoly h = P("1:3,0;-3:1,1;1:0,0");
  SignedRemainderSeq seq = subresultant_prs(h, derivative(h, 0), 0);
  for (std::size_t k = 1; k < seq.degrees.size(); ++k) CHECK(seq.degrees[k] < seq.degrees[k - 1]);
  CHECK(seq.divisors.size() + 2 == seq.polys.size());
  CHECK_THROWS_AS(subresultant_prs(P("1:1,0"), P("1:2,0"), 0), PreconditionError);
}

TEST_CASE("Sturm counts") {
  UPoly f = {-2, 0, 1};
  CHECK(sturm_count(f, 0, 2) == 1);
  CHECK(sturm_count(f, -2, 2) == 2);
  UPoly sq = mul(UPoly{-1, 0, 1}, UPoly{-1, 0, 1});
  CHECK(squarefree_part(sq) == UPoly{-1, 0, 1});
  CHECK(sturm_count(squarefree_part(sq), 0, 3) == 1);
  CHECK(sturm_count(sq, 0, 3) == 1);
  CHECK_THROWS_AS(sturm_count(UPoly{-1, 1}, 0, 1), EndpointRoot);
  CHECK(real_root_count(UPoly{1, 0, 1}) == 0);
}

TEST_CASE("square-free part") {
  UPoly f = mul(mul(UPoly{-1, 1}, UPoly{-1, 1}), UPoly{2, 1});
  CHECK(squarefree_part(f) == mul(UPoly{-1, 1}, UPoly{2, 1}));
  UPoly g = {3, -5, 2};
  CHECK(squarefree_part(g) == g);
  CHECK(squarefree_part(P("1:4;-2:2;1:0", 1)) == P("1:2;-1:0", 1));
}

TEST_CASE("Cauchy bound") {
  Rational b = cauchy_bound(UPoly{-2, 0, 1});
  CHECK(b * b >= 2);
  CHECK(cauchy_bound(UPoly{28, -3, 1}) == 29);
  CHECK_THROWS_AS(cauchy_bound(UPoly{5}), PreconditionError);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(UPoly{-1, 0, 1}) == 4);
  CHECK(discriminant(UPoly{1, 0, 1}) == -4);
  CHECK(discriminant(UPoly{0, -1, 0, 1}) == 4);
  CHECK(discriminant(UPoly{1, 2, 1}) == 0);
}

TEST_CASE("isolation examples") {
  auto r = isolate_real_roots(UPoly{-2, 0, 1});
  REQUIRE(r.size() == 2);
  CHECK(r[0].hi <= 0);
  CHECK(r[1].lo >= 0);
  CHECK(r[1].lo * r[1].lo < 2);
  CHECK(r[1].hi * r[1].hi > 2);

  RealRootIsolator iso(UPoly{-2, 0, 2});
  auto ones = iso.isolate();
  REQUIRE(ones.size() == 2);
  for (auto& q : ones) iso.refine(q, frac(1, 1 << 20));
  CHECK(ones[0].exact_point == Rational(-1));
  CHECK(ones[1].exact_point == Rational(1));

  auto w = isolate_real_roots(from_roots({1, 2, 3, 4, 5}));
  REQUIRE(w.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(contains(w[i], i + 1));
  for (int i = 0; i + 1 < 5; ++i) CHECK(w[i].hi <= w[i + 1].lo);
}

TEST_CASE("isolator agrees with known rational roots") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 6);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> roots;
    while (roots.size() < 4) {
      Rational q = frac(num(rng), den(rng));
      if (std::find(roots.begin(), roots.end(), q) == roots.end()) roots.push_back(q);
    }
    std::sort(roots.begin(), roots.end());
    UPoly f = mul(from_roots(roots), UPoly{1, 0, 1});
    RealRootIsolator iso(f);
    auto found = iso.isolate();
    REQUIRE(found.size() == roots.size());
    Rational b = cauchy_bound(f);
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(contains(found[i], roots[i]));
      CHECK(found[i].lo >= -b);
      CHECK(found[i].hi <= b);
      CHECK(iso.sign_at(found[i].lo) * iso.sign_at(found[i].hi) < 0);
      CHECK(iso.compare(found[i], roots[i]) == 0);
    }
    CHECK(iso.count(-b, b) == static_cast<int>(found.size()));
  }
}

TEST_CASE("split point avoids roots") {
  UPoly f = {-1, 2};  // root 1/2
  Rational p = split_point(f, 0, 1);
  CHECK(p > 0);
  CHECK(p < 1);
  CHECK(sign_at(f, p) != 0);
}
