#include "toric/mat.hpp"

#include <algorithm>

namespace toric {

Mat::Mat(std::size_t r, std::size_t c, RatVec entries) : rows_(r), cols_(c), a_(std::move(entries)) {
  if (a_.size() != r * c) fail_pre("matrix entry count does not match dimensions");
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

Mat Mat::from_rows(const std::vector<RatVec>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail_pre("ragged rows in matrix construction");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

RatVec Mat::row(std::size_t i) const {
  RatVec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

RatVec Mat::col(std::size_t j) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) fail_pre("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
  }
  return m;
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
  Mat m(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) fail_pre("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  }
  return m;
}

Mat Mat::hstack(const Mat& o) const {
  if (rows_ != o.rows_) fail_pre("hstack: row count mismatch");
  Mat m(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, cols_ + j) = o.at(i, j);
  }
  return m;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) fail_pre("matrix product dimension mismatch");
  Mat m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

RatVec Mat::apply(const RatVec& x) const {
  if (x.size() != cols_) fail_pre("matrix-vector dimension mismatch");
  RatVec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

namespace {

// Clears denominators rowwise: returns integer matrix plus the product of
// the row scaling factors (each row multiplied by the lcm of denominators).
std::vector<std::vector<mpz_class>> clear_denominators(const Mat& m, mpz_class& scale) {
  scale = 1;
  std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).den());
    for (std::size_t j = 0; j < m.cols(); ++j) z[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    scale *= l;
  }
  return z;
}

// Fraction-free Gaussian elimination (Bareiss). Returns rank; if square and
// full rank, det receives sign * last pivot.
std::size_t bareiss(std::vector<std::vector<mpz_class>>& a, mpz_class& det_out) {
  std::size_t r = a.size();
  std::size_t c = r ? a[0].size() : 0;
  mpz_class prev = 1;
  int sign = 1;
  std::size_t rk = 0;
  det_out = 0;
  std::vector<std::size_t> colperm(c);
  for (std::size_t j = 0; j < c; ++j) colperm[j] = j;
  for (std::size_t k = 0; rk < r && k < c; ++k) {
    // full pivot search on the trailing block
    std::size_t pi = r, pj = c;
    for (std::size_t i = rk; i < r && pi == r; ++i)
      for (std::size_t j = k; j < c; ++j)
        if (sgn(a[i][j]) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi == r) break;
    if (pi != rk) {
      std::swap(a[pi], a[rk]);
      sign = -sign;
    }
    if (pj != k) {
      for (std::size_t i = 0; i < r; ++i) std::swap(a[i][pj], a[i][k]);
      sign = -sign;
    }
    for (std::size_t i = rk + 1; i < r; ++i) {
      for (std::size_t j = k + 1; j < c; ++j) {
        mpz_class t = a[i][j] * a[rk][k] - a[i][k] * a[rk][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
      a[i][k] = 0;
    }
    prev = a[rk][k];
    ++rk;
  }
  if (rk == r && r == c && r > 0) det_out = sign * a[r - 1][r - 1];
  if (r == 0) det_out = 1;
  return rk;
}

}  // namespace

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) fail_pre("determinant of non-square matrix");
  if (m.rows() == 0) return Rat(1);
  mpz_class scale;
  auto z = clear_denominators(m, scale);
  mpz_class d;
  std::size_t rk = bareiss(z, d);
  if (rk < m.rows()) return Rat(0);
  return Rat(d, scale);
}

std::size_t rank(const Mat& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  mpz_class scale;
  auto z = clear_denominators(m, scale);
  mpz_class d;
  return bareiss(z, d);
}

Mat rref(const Mat& m, std::vector<std::size_t>& pivot_cols) {
  Mat a = m;
  pivot_cols.clear();
  std::size_t r = a.rows(), c = a.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t piv = r;
    for (std::size_t i = row; i < r; ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv == r) continue;
    if (piv != row)
      for (std::size_t j = 0; j < c; ++j) std::swap(a.at(piv, j), a.at(row, j));
    Rat inv = a.at(row, col).inv();
    for (std::size_t j = col; j < c; ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Rat f = a.at(i, col);
      for (std::size_t j = col; j < c; ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return a;
}

std::vector<RatVec> kernel_basis(const Mat& m) {
  std::vector<std::size_t> piv;
  Mat r = rref(m, piv);
  std::size_t c = m.cols();
  std::vector<bool> is_piv(c, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < c; ++f) {
    if (is_piv[f]) continue;
    RatVec v(c);
    v[f] = Rat(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return echelon_rows(basis);
}

std::optional<RatVec> solve(const Mat& m, const RatVec& b) {
  if (b.size() != m.rows()) fail_pre("solve: rhs length mismatch");
  Mat aug = m.hstack(Mat::from_rows({b}).transpose());
  std::vector<std::size_t> piv;
  Mat r = rref(aug, piv);
  for (auto p : piv)
    if (p == m.cols()) return std::nullopt;
  RatVec x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r.at(i, m.cols());
  return x;
}

std::vector<RatVec> echelon_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return {};
  std::vector<std::size_t> piv;
  Mat r = rref(Mat::from_rows(rows), piv);
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(r.row(i));
  return out;
}

std::vector<std::vector<mpz_class>> integer_kernel(const std::vector<std::vector<mpz_class>>& a) {
  std::size_t r = a.size();
  std::size_t c = r ? a[0].size() : 0;
  if (c == 0) return {};
  auto m = a;
  std::vector<std::vector<mpz_class>> u(c, std::vector<mpz_class>(c, 0));
  for (std::size_t j = 0; j < c; ++j) u[j][j] = 1;
  std::vector<bool> fixed(c, false);

  auto col_sub = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t i = 0; i < r; ++i) m[i][dst] -= q * m[i][src];
    for (std::size_t i = 0; i < c; ++i) u[i][dst] -= q * u[i][src];
  };

  for (std::size_t i = 0; i < r; ++i) {
    for (;;) {
      // column with smallest nonzero |entry| in row i among non-fixed columns
      std::size_t best = c;
      for (std::size_t j = 0; j < c; ++j) {
        if (fixed[j] || sgn(m[i][j]) == 0) continue;
        if (best == c || cmp(abs(m[i][j]), abs(m[i][best])) < 0) best = j;
      }
      if (best == c) break;
      bool others = false;
      for (std::size_t j = 0; j < c; ++j) {
        if (j == best || fixed[j] || sgn(m[i][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][j].get_mpz_t(), m[i][best].get_mpz_t());
        col_sub(j, best, q);
        if (sgn(m[i][j]) != 0) others = true;
      }
      if (!others) {
        fixed[best] = true;
        break;
      }
    }
  }

  std::vector<std::vector<mpz_class>> ker;
  for (std::size_t j = 0; j < c; ++j) {
    if (fixed[j]) continue;
    bool zero = true;
    for (std::size_t i = 0; i < r; ++i)
      if (sgn(m[i][j]) != 0) {
        zero = false;
        break;
      }
    if (!zero) continue;
    std::vector<mpz_class> v(c);
    for (std::size_t i = 0; i < c; ++i) v[i] = u[i][j];
    ker.push_back(std::move(v));
  }
  return ker;
}

}  // namespace toric
