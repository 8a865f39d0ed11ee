#include "dmm/resultant.hpp"

#include <map>

#include "dmm/errors.hpp"

namespace dmm {

namespace {

SparsePoly lc_in(const SparsePoly& p, std::size_t var) { return leading_coeff_in(p, var); }

}  // namespace

SignedRemainderSeq subresultant_prs(const SparsePoly& f, const SparsePoly& g, std::size_t var) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("subresultant sequence of a zero polynomial");
  if (degree_in(f, var) < degree_in(g, var)) throw PreconditionError("subresultant sequence needs deg f >= deg g");
  SignedRemainderSeq seq;
  seq.var = var;
  seq.kind = SignedRemainderSeq::Kind::subresultant;
  seq.polys = {f, g};
  seq.degrees = {degree_in(f, var), degree_in(g, var)};
  const std::size_t nv = f.nvars();
  SparsePoly gg = SparsePoly::constant(nv, 1);
  SparsePoly hh = SparsePoly::constant(nv, 1);
  while (seq.degrees.back() > 0) {
    const SparsePoly& a = seq.polys[seq.polys.size() - 2];
    const SparsePoly& b = seq.polys.back();
    int delta = seq.degrees[seq.degrees.size() - 2] - seq.degrees.back();
    SparsePoly r = prem(a, b, var);
    if (r.is_zero()) break;
    SparsePoly c = gg * pow(hh, static_cast<unsigned>(delta));
    SparsePoly next = divide_exact(r, c);
    gg = lc_in(b, var);
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      hh = gg;
    } else {
      hh = divide_exact(pow(gg, static_cast<unsigned>(delta)), pow(hh, static_cast<unsigned>(delta - 1)));
    }
    seq.divisors.push_back(std::move(c));
    seq.degrees.push_back(degree_in(next, var));
    seq.polys.push_back(std::move(next));
  }
  return seq;
}

std::vector<int> sturm_sign_factors(const SignedRemainderSeq& seq, const std::vector<int>& lc_signs,
                                    const std::vector<int>& div_signs) {
  std::vector<int> sigma(seq.polys.size(), 1);
  for (std::size_t k = 1; k + 1 < seq.polys.size(); ++k) {
    int delta = seq.degrees[k - 1] - seq.degrees[k];
    int s = -sigma[k - 1] * div_signs[k - 1];
    if ((delta + 1) % 2 == 1) s *= lc_signs[k];
    sigma[k + 1] = s;
  }
  return sigma;
}

SparsePoly resultant(const SparsePoly& f, const SparsePoly& g, std::size_t var) {
  const std::size_t nv = f.nvars();
  if (f.is_zero() || g.is_zero()) return SparsePoly(nv);
  SparsePoly a = f, b = g;
  int da = degree_in(a, var), db = degree_in(b, var);
  int s = 1;
  if (da < db) {
    std::swap(a, b);
    std::swap(da, db);
    if (da % 2 == 1 && db % 2 == 1) s = -1;
  }
  if (db == 0) return pow(b, static_cast<unsigned>(da));
  SparsePoly gg = SparsePoly::constant(nv, 1);
  SparsePoly hh = SparsePoly::constant(nv, 1);
  while (true) {
    int delta = da - db;
    if (da % 2 == 1 && db % 2 == 1) s = -s;
    SparsePoly r = prem(a, b, var);
    if (r.is_zero()) return SparsePoly(nv);
    a = std::move(b);
    b = divide_exact(r, gg * pow(hh, static_cast<unsigned>(delta)));
    da = db;
    db = degree_in(b, var);
    gg = lc_in(a, var);
    if (delta == 1) {
      hh = gg;
    } else if (delta > 1) {
      hh = divide_exact(pow(gg, static_cast<unsigned>(delta)), pow(hh, static_cast<unsigned>(delta - 1)));
    }
    if (db == 0) break;
  }
  SparsePoly res = da == 1 ? b : divide_exact(pow(b, static_cast<unsigned>(da)), pow(hh, static_cast<unsigned>(da - 1)));
  return s < 0 ? -res : res;
}

SparsePoly sylvester_resultant(const SparsePoly& f, const SparsePoly& g, std::size_t var) {
  const std::size_t nv = f.nvars();
  if (f.is_zero() || g.is_zero()) return SparsePoly(nv);
  std::vector<SparsePoly> fc = coefficients_in(f, var), gc = coefficients_in(g, var);
  int m = static_cast<int>(fc.size()) - 1, n = static_cast<int>(gc.size()) - 1;
  int size = m + n;
  if (size == 0) return SparsePoly::constant(nv, 1);
  if (size > 20) throw PreconditionError("Sylvester determinant too large");
  std::vector<std::vector<SparsePoly>> mat(static_cast<std::size_t>(size), std::vector<SparsePoly>(static_cast<std::size_t>(size), SparsePoly(nv)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) mat[i][i + k] = fc[static_cast<std::size_t>(m - k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) mat[n + i][i + k] = gc[static_cast<std::size_t>(n - k)];
  // Expand along columns left to right; memo keyed by the set of rows already used.
  std::map<unsigned, SparsePoly> memo;
  auto det = [&](auto&& self, int col, unsigned used) -> SparsePoly {
    if (col == size) return SparsePoly::constant(nv, 1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    SparsePoly acc(nv);
    int sign_pos = 0;
    for (int row = 0; row < size; ++row) {
      if (used & (1u << row)) continue;
      if (!mat[row][col].is_zero()) {
        SparsePoly term = mat[row][col] * self(self, col + 1, used | (1u << row));
        if (sign_pos % 2) acc -= term;
        else acc += term;
      }
      ++sign_pos;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return det(det, 0, 0u);
}

Integer resultant(const UPoly& f, const UPoly& g) {
  SparsePoly r = resultant(from_upoly(f), from_upoly(g), 0);
  return r.is_zero() ? Integer(0) : r.leading_term().coeff;
}

Integer discriminant(const UPoly& f) {
  int d = degree(f);
  if (d < 2) throw PreconditionError("discriminant needs degree >= 2");
  Integer r = resultant(f, derivative(f));
  if (!mpz_divisible_p(r.get_mpz_t(), lead(f).get_mpz_t())) throw PreconditionError("discriminant division failed");
  r /= lead(f);
  if ((d * (d - 1) / 2) % 2 == 1) r = -r;
  return r;
}

}  // namespace dmm
