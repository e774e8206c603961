#include "gal/matrix.hpp"

#include <algorithm>

#include "gal/error.hpp"

namespace gal {

MatrixF MatrixF::identity(int n) {
  MatrixF m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool MatrixF::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

static void check_same_shape(const MatrixF& x, const MatrixF& y) {
  require(x.rows == y.rows && x.cols == y.cols, errc::invalid_parameter,
          "matrix shape mismatch");
}

MatrixF mat_add(const RootField& f, const MatrixF& x, const MatrixF& y) {
  check_same_shape(x, y);
  MatrixF r(x.rows, x.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(x.a[i], y.a[i]);
  return r;
}

MatrixF mat_sub(const RootField& f, const MatrixF& x, const MatrixF& y) {
  check_same_shape(x, y);
  MatrixF r(x.rows, x.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.sub(x.a[i], y.a[i]);
  return r;
}

MatrixF mat_neg(const RootField& f, const MatrixF& x) {
  MatrixF r(x.rows, x.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.neg(x.a[i]);
  return r;
}

MatrixF mat_mul(const RootField& f, const MatrixF& x, const MatrixF& y) {
  require(x.cols == y.rows, errc::invalid_parameter, "matrix shape mismatch");
  MatrixF r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      std::int64_t v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = (r.at(i, j) + v * y.at(k, j)) % f.p();
    }
  return r;
}

MatrixF mat_scale(const RootField& f, std::int64_t c, const MatrixF& x) {
  MatrixF r(x.rows, x.cols);
  c = f.reduce(c);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.mul(c, x.a[i]);
  return r;
}

MatrixF mat_transpose(const MatrixF& x) {
  MatrixF r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

MatrixF mat_kron(const RootField& f, const MatrixF& x, const MatrixF& y) {
  MatrixF r(x.rows * y.rows, x.cols * y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) {
      std::int64_t v = x.at(i, j);
      if (!v) continue;
      for (int k = 0; k < y.rows; ++k)
        for (int l = 0; l < y.cols; ++l)
          r.at(i * y.rows + k, j * y.cols + l) = f.mul(v, y.at(k, l));
    }
  return r;
}

std::int64_t mat_trace(const RootField& f, const MatrixF& x) {
  require(x.rows == x.cols, errc::invalid_parameter, "trace of a nonsquare matrix");
  std::int64_t t = 0;
  for (int i = 0; i < x.rows; ++i) t = f.add(t, x.at(i, i));
  return t;
}

std::optional<MatrixF> mat_inverse(const RootField& f, const MatrixF& x) {
  require(x.rows == x.cols, errc::invalid_parameter, "inverse of a nonsquare matrix");
  int n = x.rows;
  MatrixF aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv = rref_in_place(f, aug);
  if (static_cast<int>(piv.size()) != n || piv.back() >= n) return std::nullopt;
  MatrixF inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

MatrixF mat_bracket(const RootField& f, const MatrixF& x, const MatrixF& y) {
  return mat_sub(f, mat_mul(f, x, y), mat_mul(f, y, x));
}

MatrixF mat_pow(const RootField& f, const MatrixF& x, std::int64_t e) {
  require(x.rows == x.cols && e >= 0, errc::invalid_parameter, "bad matrix power");
  MatrixF r = MatrixF::identity(x.rows);
  MatrixF base = x;
  while (e) {
    if (e & 1) r = mat_mul(f, r, base);
    base = mat_mul(f, base, base);
    e >>= 1;
  }
  return r;
}

std::vector<std::int64_t> mat_flatten(const MatrixF& x) { return x.a; }

void mat_place(MatrixF& dst, int r0, int c0, const MatrixF& src) {
  require(r0 + src.rows <= dst.rows && c0 + src.cols <= dst.cols, errc::invalid_parameter,
          "block placement out of range");
  for (int i = 0; i < src.rows; ++i)
    for (int j = 0; j < src.cols; ++j) dst.at(r0 + i, c0 + j) = src.at(i, j);
}

std::optional<std::int64_t> mat_proportional(const RootField& f, const MatrixF& x,
                                             const MatrixF& y) {
  if (x.rows != y.rows || x.cols != y.cols) return std::nullopt;
  std::int64_t c = 0;
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    if (x.a[i] == 0) {
      if (y.a[i] != 0) return std::nullopt;
      continue;
    }
    std::int64_t ratio = f.mul(y.a[i], f.inv(x.a[i]));
    if (c == 0)
      c = ratio;
    else if (c != ratio)
      return std::nullopt;
  }
  if (c == 0) return std::nullopt;  // x == 0
  return c;
}

std::vector<int> rref_in_place(const RootField& f, MatrixF& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int sel = -1;
    for (int i = row; i < m.rows; ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    std::int64_t s = f.inv(m.at(row, col));
    for (int j = col; j < m.cols; ++j) m.at(row, j) = f.mul(s, m.at(row, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      std::int64_t c = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

LinearSolution solve_linear(const RootField& f, const MatrixF& a,
                            const std::vector<std::int64_t>& b) {
  require(static_cast<int>(b.size()) == a.rows, errc::invalid_parameter,
          "right-hand side has wrong length");
  MatrixF aug(a.rows, a.cols + 1);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = f.reduce(b[i]);
  }
  std::vector<int> piv = rref_in_place(f, aug);
  LinearSolution sol;
  sol.feasible = piv.empty() || piv.back() < a.cols;
  std::vector<bool> is_pivot(a.cols, false);
  if (sol.feasible) {
    sol.particular.assign(a.cols, 0);
    for (std::size_t r = 0; r < piv.size(); ++r) {
      is_pivot[piv[r]] = true;
      sol.particular[piv[r]] = aug.at(static_cast<int>(r), a.cols);
    }
  } else {
    for (int c : piv)
      if (c < a.cols) is_pivot[c] = true;
  }
  int free_count = 0;
  for (int c = 0; c < a.cols; ++c)
    if (!is_pivot[c]) ++free_count;
  sol.nullspace = MatrixF(free_count, a.cols);
  int k = 0;
  for (int c = 0; c < a.cols; ++c) {
    if (is_pivot[c]) continue;
    sol.nullspace.at(k, c) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (piv[r] < a.cols) sol.nullspace.at(k, piv[r]) = f.neg(aug.at(static_cast<int>(r), c));
    ++k;
  }
  return sol;
}

}  // namespace gal
