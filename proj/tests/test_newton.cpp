#include <doctest.h>

#include <random>

#include "dmm/errors.hpp"
#include "dmm/poly_text.hpp"
#include "dmm/polytope.hpp"
#include "dmm/profile.hpp"
#include "dmm/system_file.hpp"

using namespace dmm;

namespace {

LatticePolytope H(std::vector<Exponent> pts) { return LatticePolytope::hull(std::move(pts)); }

LatticePolytope simplex2(int d) { return H({{0, 0}, {d, 0}, {0, d}}); }

Integer mv2(const LatticePolytope& a, const LatticePolytope& b) {
  const LatticePolytope ps[] = {a, b};
  return mixed_volume(ps);
}

// Membership without the facet description: adding an inside point leaves the volume unchanged.
Integer brute_force_count(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  Exponent lo(n, 1 << 20), hi(n, -(1 << 20));
  for (const auto& v : p.vertices())
    for (std::size_t i = 0; i < n; ++i) lo[i] = std::min(lo[i], v[i]), hi[i] = std::max(hi[i], v[i]);
  Integer count = 0;
  Exponent x = lo;
  while (true) {
    std::vector<Exponent> pts = p.vertices();
    pts.push_back(x);
    if (H(pts).normalized_volume() == p.normalized_volume()) ++count;
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == n) break;
    ++x[i];
  }
  return count;
}

LatticePolytope random_full_dim(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> c(0, 5), k(static_cast<int>(n) + 1, 8);
  while (true) {
    std::vector<Exponent> pts(static_cast<std::size_t>(k(rng)), Exponent(n));
    for (auto& p : pts)
      for (auto& v : p) v = c(rng);
    LatticePolytope P = H(pts);
    if (!P.degenerate()) return P;
  }
}

}  // namespace

TEST_CASE("hull examples") {
  LatticePolytope sq = H({{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}});
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.facets().size() == 4);
  CHECK_FALSE(sq.degenerate());
  LatticePolytope tri = LatticePolytope::newton(parse_poly("1:1,0;2:0,1;-3:0,0"));
  CHECK(tri.vertices() == LatticePolytope::unit_simplex(2).vertices());
  LatticePolytope seg = H({{0, 0}, {2, 0}, {1, 0}});
  CHECK(seg.degenerate());
  CHECK(seg.affine_dim() == 1);
  CHECK(seg.vertices().size() == 2);
  CHECK(lattice_point_count(seg) == 3);
  CHECK(H({{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}).affine_dim() == 1);
  CHECK_THROWS_AS(H({}), PreconditionError);
  CHECK_THROWS_AS(H({{0, 0, 0, 0, 0}}), UnsupportedDimension);
}

TEST_CASE("volumes") {
  VolumeData t = volume(LatticePolytope::unit_simplex(2));
  CHECK(t.euclidean_volume == frac(1, 2));
  CHECK(t.lattice_points == 3);
  VolumeData s = volume(H({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
  CHECK(s.euclidean_volume == 1);
  CHECK(s.lattice_points == 4);
  VolumeData t2 = volume(simplex2(2));
  CHECK(t2.euclidean_volume == 2);
  CHECK(t2.lattice_points == 6);
  CHECK(volume(LatticePolytope::unit_simplex(3)).euclidean_volume == frac(1, 6));
  CHECK(volume(H({{0, 0}, {3, 0}})).euclidean_volume == 0);
}

TEST_CASE("Minkowski sums") {
  LatticePolytope q = LatticePolytope::unit_simplex(2);
  CHECK(volume(minkowski_sum(q, q)).euclidean_volume == 2);
  CHECK(minkowski_sum(q, H({{0, 0}})).vertices() == q.vertices());
  CHECK(minkowski_sum(H({{0, 0}, {1, 0}}), H({{0, 0}, {0, 1}})).vertices() ==
        H({{0, 0}, {1, 0}, {0, 1}, {1, 1}}).vertices());
  CHECK(dilate(q, 3).vertices() == simplex2(3).vertices());
}

TEST_CASE("mixed volumes") {
  LatticePolytope q = LatticePolytope::unit_simplex(2);
  CHECK(mv2(q, q) == 1);
  for (int d = 1; d <= 8; ++d) CHECK(mv2(simplex2(d), simplex2(d)) == d * d);
  LatticePolytope sq = H({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(mv2(sq, sq) == 2);
  CHECK(mv2(H({{0, 0}, {1, 0}}), H({{0, 0}, {0, 1}})) == 1);
  const LatticePolytope three[] = {LatticePolytope::unit_simplex(3), LatticePolytope::unit_simplex(3),
                                   dilate(LatticePolytope::unit_simplex(3), 2)};
  CHECK(mixed_volume(three) == 2);
}

TEST_CASE("mixed volume properties on random polytopes") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    LatticePolytope p = random_full_dim(rng, 2), q = random_full_dim(rng, 2);
    CHECK(mv2(p, q) == mv2(q, p));
    CHECK(mv2(dilate(p, 2), q) == 2 * mv2(p, q));
    CHECK(mv2(p, p) == p.normalized_volume());
    int dp = 0, dq = 0;
    for (const auto& v : p.vertices()) dp = std::max(dp, v[0] + v[1]);
    for (const auto& v : q.vertices()) dq = std::max(dq, v[0] + v[1]);
    CHECK(mv2(p, q) <= dp * dq);
  }
}

TEST_CASE("facet description is consistent with the vertices") {
  std::mt19937 rng(23);
  for (std::size_t n : {2u, 3u}) {
    for (int trial = 0; trial < 10; ++trial) {
      LatticePolytope p = random_full_dim(rng, n);
      for (const auto& v : p.vertices()) {
        int tight = 0;
        for (const auto& f : p.facets()) {
          Integer s = 0;
          for (std::size_t i = 0; i < n; ++i) s += f.normal[i] * v[i];
          CHECK(s <= f.offset);
          if (s == f.offset) ++tight;
        }
        CHECK(tight >= static_cast<int>(n));
      }
      VolumeData vd = volume(p);
      Integer fact = n == 2 ? 2 : 6;
      CHECK(vd.lattice_points <= fact * vd.euclidean_volume + static_cast<long>(n));
    }
  }
}

TEST_CASE("lattice counts agree with brute-force membership on 50 random polytopes") {
  std::mt19937 rng(29);
  int agreed = 0;
  for (int trial = 0; trial < 50; ++trial) {
    LatticePolytope p = random_full_dim(rng, trial % 2 == 0 ? 2 : 3);
    if (lattice_point_count(p) == brute_force_count(p)) ++agreed;
  }
  CHECK(agreed == 50);
}

TEST_CASE("system profiles") {
  SystemFile e2 = parse_system(
      "vars: v1 v2 l\n2:1,0,0;1:0,1,0;-1:1,0,1\n1:1,0,0;3:0,1,0;-1:0,1,1\n1:2,0,0;1:0,2,0;-1:0,0,0\n");
  SystemProfile p2 = system_profile(e2.polys);
  CHECK(p2.mv == std::vector<Integer>{4, 4, 4, 2});
  CHECK(p2.D == 4);
  CHECK(p2.B == 2 * 6);

  SystemFile e3 = parse_system(
      "vars: a b c l\n2:1,0,0,0;1:0,1,0,0;-1:1,0,0,1\n1:1,0,0,0;3:0,1,0,0;1:0,0,1,0;-1:0,1,0,1\n"
      "1:0,1,0,0;4:0,0,1,0;-1:0,0,1,1\n1:2,0,0,0;1:0,2,0,0;1:0,0,2,0;-1:0,0,0,0\n");
  SystemProfile p3 = system_profile(e3.polys);
  CHECK(p3.mv == std::vector<Integer>{6, 6, 6, 6, 3});

  const SparsePoly uni[] = {parse_poly("1:2;-1:0", 1)};
  SystemProfile p1 = system_profile(uni);
  CHECK(p1.D == 2);
  CHECK(p1.B == 0);

  const SparsePoly lin[] = {parse_poly("1:1,0;1:0,1;-1:0,0"), parse_poly("1:1,0;-1:0,1")};
  SystemProfile pl = system_profile(lin);
  CHECK(pl.mv[0] == 1);
  CHECK(pl.D == 1);
  CHECK(pl.lattice_counts == std::vector<Integer>{3, 2});

  const SparsePoly bad[] = {parse_poly("1:1,0;1:0,0")};
  CHECK_THROWS_AS(system_profile(bad), PreconditionError);
  CHECK_THROWS_AS(system_profile(std::span<const SparsePoly>{}), PreconditionError);

  // Both Newton polytopes on the x-axis: their sum has dimension 1 < 2.
  const SparsePoly flat[] = {parse_poly("1:2,0;-1:0,0"), parse_poly("1:1,0;-3:0,0")};
  CHECK_FALSE(system_profile(flat).warnings.empty());
}
