#pragma once

#include <span>
#include <vector>

#include "dmm/sparse_poly.hpp"

namespace dmm {

/// Largest ambient dimension with exact hulls and volumes.
inline constexpr std::size_t kMaxExactDim = 4;

/// Half-space normal . x <= offset (or an equality, depending on context).
struct Facet {
  std::vector<Integer> normal;
  Integer offset;
  friend bool operator==(const Facet&, const Facet&) = default;
};

struct VolumeData {
  Rational euclidean_volume;
  /// dim! * euclidean_volume, an integer for lattice polytopes.
  Integer normalized_volume;
  Integer lattice_points;
};

/// Convex hull of a finite lattice point set.
///
/// Full-dimensional hulls carry a facet description. Lower-dimensional hulls set
/// degenerate(), list the affine hull as equalities(), and describe the polytope
/// inside it with facets over a coordinate projection (embedded with zero entries).
class LatticePolytope {
 public:
  LatticePolytope() = default;

  /// Throws PreconditionError on an empty set or mixed lengths, UnsupportedDimension above kMaxExactDim.
  static LatticePolytope hull(std::vector<Exponent> points);
  /// conv{0, e_1, ..., e_n}.
  static LatticePolytope unit_simplex(std::size_t n);
  static LatticePolytope newton(const SparsePoly& p);

  std::size_t dim() const { return dim_; }
  const std::vector<Exponent>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Facet>& equalities() const { return equalities_; }
  bool degenerate() const { return affine_dim_ < static_cast<int>(dim_); }
  int affine_dim() const { return affine_dim_; }
  const Integer& normalized_volume() const { return normalized_volume_; }

  bool contains(std::span<const int> point) const;

 private:
  std::size_t dim_ = 0;
  int affine_dim_ = -1;
  std::vector<Exponent> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> equalities_;
  Integer normalized_volume_ = 0;
};

VolumeData volume(const LatticePolytope& p);
/// Lattice points by bounding-box enumeration against the facet description.
Integer lattice_point_count(const LatticePolytope& p);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
/// k * P for k >= 0.
LatticePolytope dilate(const LatticePolytope& p, int k);

/// MV(P_1, ..., P_n) for n polytopes in R^n, normalized so that MV(P, ..., P) = n! vol(P).
Integer mixed_volume(std::span<const LatticePolytope> polys);

/// Determinant of a square integer matrix (fraction-free elimination).
Integer determinant(std::vector<std::vector<Integer>> m);

}  // namespace dmm
