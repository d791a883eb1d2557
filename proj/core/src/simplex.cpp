#include "toric/simplex.hpp"

namespace toric {

// Standard-form Phase-I: decide {y >= 0 : A y = b} and return y.
// Bland's rule guarantees termination.
static std::optional<RatVec> phase1(std::vector<RatVec> a, RatVec b) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i].sign() < 0) {
      b[i] = -b[i];
      for (auto& v : a[i]) v = -v;
    }
  }
  // tableau over columns: n structural + m artificial, rhs separate
  const std::size_t total = n + m;
  std::vector<RatVec> t(m, RatVec(total));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = Rat(1);
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // objective: minimize sum of artificials; reduced-cost row
  RatVec cost(total);
  Rat obj;
  for (std::size_t j = 0; j < total; ++j) {
    Rat s;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    cost[j] = (j >= n ? Rat(1) : Rat(0)) - s;
  }
  for (std::size_t i = 0; i < m; ++i) obj += b[i];

  for (;;) {
    std::size_t enter = total;
    for (std::size_t j = 0; j < total; ++j)
      if (cost[j].sign() < 0) {
        enter = j;
        break;
      }
    if (enter == total) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      Rat ratio = b[i] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) fail_internal("phase-1 objective unbounded");
    Rat piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    b[leave] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter].is_zero()) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j < total; ++j) t[i][j] -= f * t[leave][j];
      b[i] -= f * b[leave];
    }
    if (!cost[enter].is_zero()) {
      Rat f = cost[enter];
      for (std::size_t j = 0; j < total; ++j) cost[j] -= f * t[leave][j];
      obj -= f * b[leave];
    }
    basis[leave] = enter;
  }
  if (!obj.is_zero()) return std::nullopt;
  RatVec y(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) y[basis[i]] = b[i];
  return y;
}

std::optional<RatVec> feasible_point(const std::vector<LinConstraint>& cs, std::size_t nvars) {
  // x = x+ - x-, one slack per inequality
  std::size_t nslack = 0;
  for (const auto& c : cs)
    if (c.rel == LinConstraint::Rel::Ge) ++nslack;
  const std::size_t cols = 2 * nvars + nslack;
  std::vector<RatVec> a;
  RatVec b;
  std::size_t s = 0;
  for (const auto& c : cs) {
    if (c.coeff.size() != nvars) fail_pre("constraint arity mismatch");
    RatVec row(cols);
    for (std::size_t j = 0; j < nvars; ++j) {
      row[j] = c.coeff[j];
      row[nvars + j] = -c.coeff[j];
    }
    if (c.rel == LinConstraint::Rel::Ge) row[2 * nvars + s++] = Rat(-1);
    a.push_back(std::move(row));
    b.push_back(c.rhs);
  }
  auto y = phase1(std::move(a), std::move(b));
  if (!y) return std::nullopt;
  RatVec x(nvars);
  for (std::size_t j = 0; j < nvars; ++j) x[j] = (*y)[j] - (*y)[nvars + j];
  return x;
}

}  // namespace toric
