#include <doctest.h>

#include <algorithm>
#include <random>

#include "dmm/errors.hpp"
#include "dmm/poly_text.hpp"
#include "dmm/sparse_poly.hpp"

using namespace dmm;

namespace {

SparsePoly P(const char* s, std::size_t n = 2) { return parse_poly(s, n); }

SparsePoly random_poly(std::mt19937& rng, std::size_t nvars, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> c(-9, 9), e(0, maxdeg);
  std::vector<Term> terms;
  for (int i = 0; i < nterms; ++i) {
    Exponent ex(nvars);
    for (auto& v : ex) v = e(rng);
    terms.push_back({c(rng), ex});
  }
  return SparsePoly(nvars, std::move(terms));
}

std::vector<Rational> random_point(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 7);
  std::vector<Rational> pt;
  for (std::size_t i = 0; i < n; ++i) pt.push_back(frac(num(rng), den(rng)));
  return pt;
}

}  // namespace

TEST_CASE("ring arithmetic examples") {
  SparsePoly x = SparsePoly::variable(1, 0), one = SparsePoly::constant(1, 1);
  CHECK((x + one) * (x - one) == SparsePoly::univariate({-1, 0, 1}));
  CHECK((x * SparsePoly(1)).is_zero());
  SparsePoly l1 = P("1:1,0;2:0,1;-3:0,0"), l2 = P("1:1,0;2:0,1;-4:0,0");
  CHECK(l1 * l1 + l2 * l2 == P("2:2,0;8:1,1;8:0,2;-14:1,0;-28:0,1;25:0,0"));
  CHECK(pow(l1, 3) == l1 * l1 * l1);
  CHECK_THROWS_AS(SparsePoly::variable(1, 0) + SparsePoly::variable(2, 0), PreconditionError);
}

TEST_CASE("canonical form merges and drops zero terms") {
  SparsePoly p(2, {{3, {1, 0}}, {-3, {1, 0}}, {2, {0, 1}}, {1, {0, 1}}});
  REQUIRE(p.size() == 1);
  CHECK(p.leading_term().coeff == 3);
  CHECK(P("1:0,0;1:2,0;1:1,1") == P("1:1,1;1:0,0;1:2,0"));
  CHECK(P("1:2,0;1:1,1").terms()[0].exp == Exponent{2, 0});
}

TEST_CASE("measures") {
  PolyMeasures m = measures(P("2:2,0;8:1,1;8:0,2;-14:1,0;-28:0,1;25:0,0"));
  CHECK(m.total_degree == 2);
  CHECK(m.inf_norm == 28);
  CHECK(m.bitsize == 6);
  CHECK(m.var_degrees == std::vector<int>{2, 2});
  PolyMeasures mx = measures(P("1:1", 1));
  CHECK(mx.total_degree == 1);
  CHECK(mx.inf_norm == 1);
  CHECK(mx.bitsize == 2);
  CHECK(measures(P("1:1,0,0;1:0,1,0;1:0,0,1", 3)).inf_norm == 1);
  CHECK(measures(SparsePoly(2)).total_degree == kNegInfDegree);
  CHECK(bitsize(Integer(-32)) == 7);
}

TEST_CASE("support") {
  CHECK(support(P("1:2;-1:0", 1)) == std::vector<Exponent>{{2}, {0}});
  CHECK(support(P("1:1,1;1:1,0;1:0,0")) == std::vector<Exponent>{{1, 1}, {1, 0}, {0, 0}});
  auto laurent = support(P("1:-1,1;1:0,0"));
  std::sort(laurent.begin(), laurent.end());
  CHECK(laurent == std::vector<Exponent>{{-1, 1}, {0, 0}});
  CHECK_THROWS_AS(support(SparsePoly(2)), PreconditionError);
}

TEST_CASE("rational evaluation") {
  SparsePoly f = P("1:2;-1:0", 1);
  Rational three[] = {3}, half[] = {frac(1, 2)}, one[] = {1};
  CHECK(eval_rational(f, three) == 8);
  CHECK(eval_rational(f, half) == frac(-3, 4));
  CHECK(eval_rational(P("2:2;-2:0", 1), one) == 0);
  Rational zero[] = {0};
  CHECK_THROWS_AS(eval_rational(P("1:-1;1:0", 1), zero), PreconditionError);
  Rational two[] = {2};
  CHECK(eval_rational(P("1:-1;1:0", 1), two) == frac(3, 2));
}

TEST_CASE("ring properties on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    SparsePoly p = random_poly(rng, 2, 3, 4), q = random_poly(rng, 2, 3, 4), r = random_poly(rng, 2, 2, 3);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    if (!p.is_zero() && !q.is_zero()) CHECK(total_degree(p * q) == total_degree(p) + total_degree(q));
    auto pt = random_point(rng, 2);
    CHECK(eval_rational(p * q, pt) == eval_rational(p, pt) * eval_rational(q, pt));
    if (!p.is_zero()) {
      PolyMeasures m = measures(p);
      CHECK(m.inf_norm * m.inf_norm <= m.two_norm_sq);
      CHECK(m.two_norm_sq <= Integer(static_cast<long>(m.nterms)) * m.inf_norm * m.inf_norm);
      CHECK(divide_exact(p * q + p * r, p) == q + r);
    }
  }
}

TEST_CASE("Laurent clearing") {
  SparsePoly p = P("1:-1,1;1:0,0;3:2,-2");
  CHECK(has_negative_exponents(p));
  SparsePoly c = clear_laurent(p);
  CHECK_FALSE(has_negative_exponents(c));
  CHECK(c == P("1:0,3;1:1,2;3:3,0"));
}

TEST_CASE("derivative, coefficients, specialization, remap") {
  SparsePoly f = P("3:2,1;-1:0,3;5:1,0");
  CHECK(derivative(f, 0) == P("6:1,1;5:0,0"));
  CHECK(derivative(f, 1) == P("3:2,0;-3:0,2"));
  auto cs = coefficients_in(f, 1);
  REQUIRE(cs.size() == 4);
  CHECK(cs[1] == P("3:2,0"));
  CHECK(from_coefficients(cs, 1) == f);
  CHECK(leading_coeff_in(f, 0) == P("3:0,1"));
  // f(x, 1/2) scaled by 2^3.
  CHECK(specialize(f, 1, frac(1, 2)) == P("12:2,0;-1:0,0;40:1,0"));
  const std::size_t swap[] = {1, 0};
  CHECK(remap(f, 2, swap) == P("3:1,2;-1:3,0;5:0,1"));
}

TEST_CASE("exact division and pseudo-remainder") {
  SparsePoly a = P("1:2,0;-1:0,2"), b = P("1:1,0;1:0,1");
  CHECK(divide_exact(a, b) == P("1:1,0;-1:0,1"));
  CHECK_THROWS_AS(divide_exact(a, P("1:1,0;2:0,1")), PreconditionError);
  CHECK(divide_exact(P("6:1,0;4:0,0"), Integer(2)) == P("3:1,0;2:0,0"));
  CHECK(integer_content(P("6:1,0;4:0,0")) == 2);
  // prem(x^2 + y, 2x + 1, x) = 4y + 1
  CHECK(prem(P("1:2,0;1:0,1"), P("2:1,0;1:0,0"), 0) == P("4:0,1;1:0,0"));
}

TEST_CASE("text round trip") {
  std::mt19937 rng(11);
  for (int i = 0; i < 30; ++i) {
    SparsePoly p = random_poly(rng, 3, 4, 5);
    CHECK(parse_poly(serialize_poly(p), 3) == p);
  }
  CHECK(parse_poly("0", 2).is_zero());
  CHECK(serialize_poly(SparsePoly(2)) == "0");
  CHECK(parse_poly(" 2 : 1 , 0 ; -3 : 0 , 0 ") == P("2:1,0;-3:0,0"));
  CHECK(parse_poly("123456789012345678901234567890:1", 1).leading_term().coeff == Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_poly("1:1,0", 3), ParseError);
  CHECK_THROWS_AS(parse_poly("x:1"), ParseError);
  CHECK_THROWS_AS(parse_poly("1:"), ParseError);
  CHECK(parse_rational("-1.25") == frac(-5, 4));
  CHECK(parse_rational("6/4") == frac(3, 2));
  CHECK(rational_str(frac(-6, 4)) == "-3/2");
  CHECK(rational_str(Rational(7)) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("display") {
  const std::string names[] = {"x", "y"};
  CHECK(to_display(P("2:2,0;-3:0,1;1:0,0"), names) == "2*x^2 - 3*y + 1");
}
