#include "dmm/profile.hpp"

#include <algorithm>

#include "dmm/errors.hpp"

namespace dmm {

int SystemProfile::max_degree() const { return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end()); }

int SystemProfile::max_bitsize() const { return bitsizes.empty() ? 0 : *std::max_element(bitsizes.begin(), bitsizes.end()); }

LogExpr SystemProfile::mixed_sum() const {
  LogExpr s;
  for (std::size_t i = 0; i < n; ++i)
    s += Rational(mv[i + 1]) * (LogExpr(bitsizes[i]) + LogExpr::lg(Rational(lattice_counts[i])));
  return s;
}

namespace {

Integer binomial(long a, long b) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

}  // namespace

SystemProfile system_profile(std::span<const SparsePoly> polys, std::optional<Integer> root_count) {
  if (polys.empty()) throw PreconditionError("empty system");
  const std::size_t n = polys[0].nvars();
  for (const auto& p : polys) {
    if (p.nvars() != n) throw PreconditionError("polynomials have inconsistent variable counts");
    if (p.is_zero()) throw PreconditionError("zero polynomial in system");
  }
  if (polys.size() != n) throw PreconditionError("system is not square: " + std::to_string(polys.size()) + " polynomials in " + std::to_string(n) + " variables");

  SystemProfile prof;
  prof.n = n;
  std::vector<LatticePolytope> newton;
  prof.bezout_mode = n > kMaxExactDim;
  for (const auto& p : polys) {
    SparsePoly q = clear_laurent(p);
    PolyMeasures m = measures(q);
    prof.degrees.push_back(m.total_degree);
    prof.bitsizes.push_back(m.bitsize);
    prof.inf_norms.push_back(m.inf_norm);
    if (!prof.bezout_mode) {
      newton.push_back(LatticePolytope::newton(q));
      prof.lattice_counts.push_back(lattice_point_count(newton.back()));
    } else {
      prof.lattice_counts.push_back(binomial(m.total_degree + static_cast<long>(n), static_cast<long>(n)));
    }
  }

  prof.mv.assign(n + 1, 0);
  if (!prof.bezout_mode) {
    prof.mv[0] = mixed_volume(newton);
    LatticePolytope q0 = LatticePolytope::unit_simplex(n);
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<LatticePolytope> args{q0};
      for (std::size_t j = 0; j < n; ++j)
        if (j + 1 != i) args.push_back(newton[j]);
      prof.mv[i] = mixed_volume(args);
    }
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Exponent> pts{Exponent(n, 0)};
      int size = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!((mask >> j) & 1u)) continue;
        ++size;
        std::vector<Exponent> next;
        for (const auto& a : pts)
          for (const auto& v : newton[j].vertices()) {
            Exponent s = a;
            for (std::size_t k = 0; k < n; ++k) s[k] += v[k];
            next.push_back(std::move(s));
          }
        pts = LatticePolytope::hull(std::move(next)).vertices();
      }
      if (LatticePolytope::hull(pts).affine_dim() < size) {
        prof.warnings.push_back("Minkowski sum of a subset of " + std::to_string(size) +
                                " Newton polytopes has dimension below " + std::to_string(size));
        break;
      }
    }
  } else {
    Integer all = 1;
    for (int d : prof.degrees) all *= d;
    prof.mv[0] = all;
    for (std::size_t i = 1; i <= n; ++i) {
      Integer p = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j + 1 != i) p *= prof.degrees[j];
      prof.mv[i] = p;
    }
    prof.warnings.push_back("dimension above " + std::to_string(kMaxExactDim) + ": Bezout products replace mixed volumes");
  }

  prof.D = root_count ? *root_count : prof.mv[0];
  if (prof.D < 0) throw PreconditionError("negative root count");
  Integer pairs = prof.D * (prof.D - 1) / 2;
  prof.B = static_cast<long>(n - 1) * pairs;

  for (std::size_t i = 0; i < n; ++i) {
    Rational mi(prof.mv[i + 1]);
    prof.lg_C += mi * LogExpr::lg(Rational(prof.inf_norms[i]));
    prof.lg_rho += mi * LogExpr::lg(Rational(prof.lattice_counts[i]));
    if (prof.mv[i + 1] > 0) prof.lg_A += Rational(1, 2) * LogExpr::lg(mi) + LogExpr(mi);
  }
  prof.lg_h = Rational(prof.D) * LogExpr::lg(static_cast<long>(n + 1)) + prof.lg_rho;
  return prof;
}

}  // namespace dmm
