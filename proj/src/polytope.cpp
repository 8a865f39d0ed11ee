#include "dmm/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dmm/errors.hpp"

namespace dmm {

namespace {

using IVec = std::vector<Integer>;
using QVec = std::vector<Rational>;

Integer dot(const IVec& a, std::span<const int> p) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * p[i];
  return s;
}

Integer dot(const IVec& a, const IVec& p) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * p[i];
  return s;
}

// Incremental row echelon over Q. Returns true and records the row when it is
// independent of the rows seen so far.
struct Echelon {
  std::vector<QVec> rows;
  std::vector<std::size_t> pivots;

  bool add(QVec v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational& c = v[pivots[r]];
      if (c == 0) continue;
      Rational f = c / rows[r][pivots[r]];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j] != 0) {
        rows.push_back(std::move(v));
        pivots.push_back(j);
        return true;
      }
    }
    return false;
  }
};

std::size_t rank_of(const std::vector<IVec>& vs) {
  Echelon e;
  for (const auto& v : vs) {
    QVec q(v.begin(), v.end());
    e.add(std::move(q));
  }
  return e.rows.size();
}

// Integer basis of the orthogonal complement of the row space.
std::vector<IVec> orthogonal_complement(const std::vector<QVec>& rows_in, std::size_t n) {
  std::vector<QVec> rows = rows_in;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t k = r;
    while (k < rows.size() && rows[k][c] == 0) ++k;
    if (k == rows.size()) continue;
    std::swap(rows[r], rows[k]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<IVec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(piv.begin(), piv.end(), free) != piv.end()) continue;
    QVec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows[i][free];
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
    IVec iv(n);
    Integer g = 0;
    for (std::size_t j = 0; j < n; ++j) {
      Rational t = v[j] * l;
      iv[j] = t.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[j].get_mpz_t());
    }
    for (auto& x : iv) x /= g;
    basis.push_back(std::move(iv));
  }
  return basis;
}

Facet primitive_facet(IVec a, Integer b) {
  Integer g = abs(b);
  for (const auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : a) x /= g;
    b /= g;
  }
  return Facet{std::move(a), std::move(b)};
}

struct SimplexFacet {
  std::vector<int> verts;  // sorted point indices
  IVec normal;
  Integer offset;
};

// Full-dimensional hull of distinct points (dimension n = pts[0].size()).
void full_hull(const std::vector<Exponent>& pts, const std::vector<int>& simplex, std::vector<Facet>& facets_out,
               std::vector<Exponent>& verts_out, Integer& nvol_out) {
  const std::size_t n = pts[0].size();
  IVec interior(n, 0);  // (n+1) * centroid of the initial simplex
  for (int s : simplex)
    for (std::size_t j = 0; j < n; ++j) interior[j] += pts[static_cast<std::size_t>(s)][j];
  const Integer scale = static_cast<long>(n + 1);

  auto make_facet = [&](std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    const Exponent& p0 = pts[static_cast<std::size_t>(verts[0])];
    std::vector<IVec> diffs;
    for (std::size_t i = 1; i < verts.size(); ++i) {
      IVec d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = pts[static_cast<std::size_t>(verts[i])][j] - p0[j];
      diffs.push_back(std::move(d));
    }
    IVec a(n);
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<IVec> minor;
      for (const auto& d : diffs) {
        IVec row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != j) row.push_back(d[k]);
        minor.push_back(std::move(row));
      }
      Integer m = determinant(std::move(minor));
      a[j] = (j % 2 == 0) ? m : Integer(-m);
    }
    Integer b = dot(a, std::span<const int>(p0));
    if (dot(a, interior) > scale * b) {
      for (auto& x : a) x = -x;
      b = -b;
    }
    return SimplexFacet{std::move(verts), std::move(a), std::move(b)};
  };

  std::vector<SimplexFacet> facets;
  for (std::size_t skip = 0; skip < simplex.size(); ++skip) {
    std::vector<int> v;
    for (std::size_t i = 0; i < simplex.size(); ++i)
      if (i != skip) v.push_back(simplex[i]);
    facets.push_back(make_facet(std::move(v)));
  }

  std::vector<bool> in_simplex(pts.size(), false);
  for (int s : simplex) in_simplex[static_cast<std::size_t>(s)] = true;
  for (std::size_t pi = 0; pi < pts.size(); ++pi) {
    if (in_simplex[pi]) continue;
    std::span<const int> p(pts[pi]);
    std::vector<std::size_t> visible;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (dot(facets[f].normal, p) > facets[f].offset) visible.push_back(f);
    if (visible.empty()) continue;
    std::map<std::vector<int>, int> ridges;
    for (std::size_t f : visible) {
      const auto& vs = facets[f].verts;
      for (std::size_t drop = 0; drop < vs.size(); ++drop) {
        std::vector<int> r;
        for (std::size_t i = 0; i < vs.size(); ++i)
          if (i != drop) r.push_back(vs[i]);
        ++ridges[r];
      }
    }
    std::vector<SimplexFacet> kept;
    std::size_t vi = 0;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (vi < visible.size() && visible[vi] == f) {
        ++vi;
        continue;
      }
      kept.push_back(std::move(facets[f]));
    }
    for (auto& [r, c] : ridges) {
      if (c != 1) continue;
      std::vector<int> v = r;
      v.push_back(static_cast<int>(pi));
      kept.push_back(make_facet(std::move(v)));
    }
    facets = std::move(kept);
  }

  // n! vol as a fan of simplices from the lexicographically smallest point, which is a vertex.
  const Exponent& q = pts[0];
  Integer nvol = 0;
  for (const auto& f : facets) {
    std::vector<IVec> m;
    for (int v : f.verts) {
      IVec row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = pts[static_cast<std::size_t>(v)][j] - q[j];
      m.push_back(std::move(row));
    }
    nvol += abs(determinant(std::move(m)));
  }
  nvol_out = nvol;

  std::map<int, std::vector<IVec>> incident;
  std::set<std::pair<IVec, Integer>> seen;
  facets_out.clear();
  for (const auto& f : facets) {
    for (int v : f.verts) incident[v].push_back(f.normal);
    Facet pf = primitive_facet(f.normal, f.offset);
    if (seen.insert({pf.normal, pf.offset}).second) facets_out.push_back(std::move(pf));
  }
  std::sort(facets_out.begin(), facets_out.end(), [](const Facet& a, const Facet& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
  });
  verts_out.clear();
  for (auto& [v, normals] : incident)
    if (rank_of(normals) == n) verts_out.push_back(pts[static_cast<std::size_t>(v)]);
  std::sort(verts_out.begin(), verts_out.end());
}

}  // namespace

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Integer d = m[n - 1][n - 1];
  return sign < 0 ? Integer(-d) : d;
}

LatticePolytope LatticePolytope::hull(std::vector<Exponent> points) {
  if (points.empty()) throw PreconditionError("hull of an empty point set");
  const std::size_t n = points[0].size();
  for (const auto& p : points)
    if (p.size() != n) throw PreconditionError("hull points have different dimensions");
  if (n > kMaxExactDim) throw UnsupportedDimension("exact hulls are limited to dimension " + std::to_string(kMaxExactDim));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  LatticePolytope out;
  out.dim_ = n;

  Echelon ech;
  std::vector<int> simplex{0};
  for (std::size_t i = 1; i < points.size() && ech.rows.size() < n; ++i) {
    QVec d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = points[i][j] - points[0][j];
    if (ech.add(std::move(d))) simplex.push_back(static_cast<int>(i));
  }
  const std::size_t r = ech.rows.size();
  out.affine_dim_ = static_cast<int>(r);

  if (r == n) {
    if (n == 0) {
      out.vertices_ = points;
      out.normalized_volume_ = 1;
      return out;
    }
    full_hull(points, simplex, out.facets_, out.vertices_, out.normalized_volume_);
    return out;
  }

  // Lower-dimensional: affine equalities, then a hull of the projection onto pivot coordinates.
  for (auto& v : orthogonal_complement(ech.rows, n)) {
    Integer b = dot(v, std::span<const int>(points[0]));
    out.equalities_.push_back(primitive_facet(std::move(v), std::move(b)));
  }
  out.normalized_volume_ = 0;
  if (r == 0) {
    out.vertices_ = points;
    return out;
  }
  std::vector<std::size_t> coords = ech.pivots;
  std::sort(coords.begin(), coords.end());
  std::vector<Exponent> proj;
  proj.reserve(points.size());
  for (const auto& p : points) {
    Exponent q;
    for (std::size_t c : coords) q.push_back(p[c]);
    proj.push_back(std::move(q));
  }
  LatticePolytope sub = hull(proj);
  for (const auto& f : sub.facets_) {
    IVec a(n, 0);
    for (std::size_t i = 0; i < coords.size(); ++i) a[coords[i]] = f.normal[i];
    out.facets_.push_back(Facet{std::move(a), f.offset});
  }
  std::set<Exponent> subv(sub.vertices_.begin(), sub.vertices_.end());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (subv.count(proj[i])) out.vertices_.push_back(points[i]);
  return out;
}

LatticePolytope LatticePolytope::unit_simplex(std::size_t n) {
  std::vector<Exponent> pts{Exponent(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return hull(std::move(pts));
}

LatticePolytope LatticePolytope::newton(const SparsePoly& p) { return hull(support(p)); }

bool LatticePolytope::contains(std::span<const int> point) const {
  if (point.size() != dim_) throw PreconditionError("point dimension does not match polytope");
  for (const auto& e : equalities_)
    if (dot(e.normal, point) != e.offset) return false;
  for (const auto& f : facets_)
    if (dot(f.normal, point) > f.offset) return false;
  return true;
}

Integer lattice_point_count(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  const auto& vs = p.vertices();
  if (vs.empty()) return 0;
  Exponent lo = vs[0], hi = vs[0];
  for (const auto& v : vs)
    for (std::size_t j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], v[j]);
      hi[j] = std::max(hi[j], v[j]);
    }
  Integer count = 0;
  Exponent x = lo;
  while (true) {
    if (p.contains(x)) ++count;
    std::size_t j = 0;
    while (j < n) {
      if (x[j] < hi[j]) {
        ++x[j];
        break;
      }
      x[j] = lo[j];
      ++j;
    }
    if (j == n) break;
  }
  return count;
}

VolumeData volume(const LatticePolytope& p) {
  VolumeData v;
  v.normalized_volume = p.normalized_volume();
  Integer fact = 1;
  for (std::size_t k = 2; k <= p.dim(); ++k) fact *= static_cast<unsigned long>(k);
  v.euclidean_volume = Rational(v.normalized_volume, fact);
  v.euclidean_volume.canonicalize();
  v.lattice_points = lattice_point_count(p);
  return v;
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
  if (a.dim() != b.dim()) throw PreconditionError("Minkowski sum of polytopes of different dimension");
  std::vector<Exponent> pts;
  pts.reserve(a.vertices().size() * b.vertices().size());
  for (const auto& u : a.vertices())
    for (const auto& w : b.vertices()) {
      Exponent s(u.size());
      for (std::size_t j = 0; j < s.size(); ++j) s[j] = u[j] + w[j];
      pts.push_back(std::move(s));
    }
  return LatticePolytope::hull(std::move(pts));
}

LatticePolytope dilate(const LatticePolytope& p, int k) {
  if (k < 0) throw PreconditionError("negative dilation factor");
  std::vector<Exponent> pts;
  for (const auto& v : p.vertices()) {
    Exponent s = v;
    for (auto& x : s) x *= k;
    pts.push_back(std::move(s));
  }
  return LatticePolytope::hull(std::move(pts));
}

Integer mixed_volume(std::span<const LatticePolytope> polys) {
  const std::size_t n = polys.size();
  if (n == 0) throw PreconditionError("mixed volume of no polytopes");
  for (const auto& p : polys)
    if (p.dim() != n) throw PreconditionError("mixed volume needs n polytopes in dimension n");
  if (n > kMaxExactDim) throw UnsupportedDimension("exact mixed volume is limited to dimension " + std::to_string(kMaxExactDim));
  std::vector<LatticePolytope> sums(std::size_t{1} << n);
  Integer total = 0;
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    std::size_t top = 0;
    while (!((mask >> top) & 1u) || (mask >> (top + 1))) ++top;
    std::size_t rest = mask & ~(std::size_t{1} << top);
    sums[mask] = rest == 0 ? polys[top] : minkowski_sum(sums[rest], polys[top]);
    int size = __builtin_popcountll(mask);
    if ((static_cast<int>(n) - size) % 2 == 0) total += sums[mask].normalized_volume();
    else total -= sums[mask].normalized_volume();
  }
  Integer fact = 1;
  for (std::size_t k = 2; k <= n; ++k) fact *= static_cast<unsigned long>(k);
  if (!mpz_divisible_p(total.get_mpz_t(), fact.get_mpz_t()))
    throw PreconditionError("mixed volume is not an integer; polytope computation failed");
  return total / fact;
}

}  // namespace dmm
