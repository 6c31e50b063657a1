#include "symsing/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symsing {

namespace {

void check_rect(const Matrix& a) {
  for (const auto& row : a)
    if (row.size() != a[0].size()) throw std::invalid_argument("ragged matrix");
}

// Forward elimination to row echelon form; returns pivot columns and the sign
// of the row permutation (for determinants).
struct Echelon {
  std::vector<size_t> pivot_cols;
  int sign = 1;
};

Echelon echelonize(Matrix& a) {
  Echelon res;
  if (a.empty()) return res;
  check_rect(a);
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      res.sign = -res.sign;
    }
    const Cyclo inv = a[r][c].inverse();
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c].is_zero()) continue;
      Cyclo f = a[i][c] * inv;
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  return res;
}

}  // namespace

Matrix identity_matrix(size_t n) {
  Matrix m(n, std::vector<Cyclo>(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = Cyclo(1);
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.empty() || b.empty()) return {};
  check_rect(a);
  check_rect(b);
  if (a[0].size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Matrix c(a.size(), std::vector<Cyclo>(b[0].size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < b[0].size(); ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] += a[i][k] * b[k][j];
      }
    }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
    throw std::invalid_argument("dimension mismatch");
  Matrix c = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size() || (!a.empty() && a[0].size() != b[0].size()))
    throw std::invalid_argument("dimension mismatch");
  Matrix c = a;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[i].size(); ++j) c[i][j] -= b[i][j];
  return c;
}

Matrix mat_scale(const Cyclo& c, const Matrix& a) {
  Matrix m = a;
  for (auto& row : m)
    for (auto& x : row) x *= c;
  return m;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  check_rect(a);
  Matrix t(a[0].size(), std::vector<Cyclo>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix mat_conj(const Matrix& a) {
  Matrix m = a;
  for (auto& row : m)
    for (auto& x : row) x = x.conj();
  return m;
}

bool mat_eq(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

Matrix mat_pow(const Matrix& a, long e) {
  if (a.empty() || a.size() != a[0].size()) throw std::invalid_argument("square matrix required");
  if (e < 0) {
    auto inv = inverse(a);
    if (!inv) throw std::domain_error("singular matrix");
    return mat_pow(*inv, -e);
  }
  Matrix acc = identity_matrix(a.size());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) acc = mat_mul(acc, base);
    if (e >>= 1) base = mat_mul(base, base);
  }
  return acc;
}

size_t rank(Matrix a) { return echelonize(a).pivot_cols.size(); }

Cyclo det(Matrix a) {
  if (a.empty()) return Cyclo(1);
  if (a.size() != a[0].size()) throw std::invalid_argument("square matrix required");
  Echelon e = echelonize(a);
  if (e.pivot_cols.size() != a.size()) return Cyclo();
  Cyclo d(e.sign);
  for (size_t i = 0; i < a.size(); ++i) d *= a[i][i];
  return d;
}

Matrix rref(Matrix a) {
  Echelon e = echelonize(a);
  const size_t nr = e.pivot_cols.size();
  for (size_t r = nr; r-- > 0;) {
    size_t c = e.pivot_cols[r];
    Cyclo inv = a[r][c].inverse();
    for (size_t j = c; j < a[r].size(); ++j) a[r][j] *= inv;
    for (size_t i = 0; i < r; ++i) {
      if (a[i][c].is_zero()) continue;
      Cyclo f = a[i][c];
      for (size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
  }
  a.resize(nr);
  return a;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.empty()) return Matrix{};
  if (a.size() != a[0].size()) throw std::invalid_argument("square matrix required");
  const size_t n = a.size();
  Matrix aug = a;
  for (size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n);
    aug[i][n + i] = Cyclo(1);
  }
  Matrix red = rref(std::move(aug));
  if (red.size() != n) return std::nullopt;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (red[i][j] != (i == j ? Cyclo(1) : Cyclo())) return std::nullopt;
  Matrix inv(n, std::vector<Cyclo>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = red[i][n + j];
  return inv;
}

std::vector<std::vector<Cyclo>> kernel_basis(const Matrix& a) {
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  Matrix red = rref(a);
  std::vector<long> pivot_of_col(cols, -1);
  {
    size_t r = 0;
    for (size_t c = 0; c < cols && r < red.size(); ++c)
      if (!red[r][c].is_zero()) pivot_of_col[c] = static_cast<long>(r), ++r;
  }
  std::vector<std::vector<Cyclo>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<Cyclo> v(cols);
    v[free_col] = Cyclo(1);
    for (size_t c = 0; c < cols; ++c) {
      long r = pivot_of_col[c];
      if (r >= 0) v[c] = -red[static_cast<size_t>(r)][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Cyclo>> solve(Matrix a, std::vector<Cyclo> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  if (a.empty()) return std::vector<Cyclo>{};
  const size_t cols = a[0].size();
  for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  Matrix red = rref(std::move(a));
  std::vector<Cyclo> x(cols);
  for (const auto& row : red) {
    size_t c = 0;
    while (c < cols && row[c].is_zero()) ++c;
    if (c == cols) {
      if (!row[cols].is_zero()) return std::nullopt;  // 0 = nonzero
      continue;
    }
    // In reduced echelon form the remaining entries of a pivot row sit in
    // free columns; those variables are taken as 0.
    x[c] = row[cols];
  }
  return x;
}

UniPoly det_one_minus_t(const Matrix& m) {
  if (m.empty()) return UniPoly(Cyclo(1));
  if (m.size() != m[0].size()) throw std::invalid_argument("square matrix required");
  const size_t n = m.size();
  if (n > 6) throw std::invalid_argument("matrix too large for direct expansion");
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  UniPoly acc;
  do {
    int inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    UniPoly term(Cyclo(inversions % 2 ? -1 : 1));
    for (size_t i = 0; i < n; ++i) {
      // entry (i, perm[i]) of I - t M
      UniPoly entry = UniPoly::from_coeffs(
          {i == perm[i] ? Cyclo(1) : Cyclo(), -m[i][perm[i]]});
      term *= entry;
    }
    acc += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace symsing
