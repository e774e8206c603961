#include "gal/subspace.hpp"

#include "gal/error.hpp"

namespace gal {

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = MatrixF(0, ambient);
  return s;
}

Subspace Subspace::from_rows(const RootField& f, const MatrixF& rows) {
  Subspace s;
  s.ambient_ = rows.cols;
  MatrixF m = rows;
  for (auto& v : m.a) v = f.reduce(v);
  std::vector<int> piv = rref_in_place(f, m);
  s.basis_ = MatrixF(static_cast<int>(piv.size()), rows.cols);
  for (int i = 0; i < s.basis_.rows; ++i)
    for (int j = 0; j < rows.cols; ++j) s.basis_.at(i, j) = m.at(i, j);
  return s;
}

bool Subspace::contains(const RootField& f, const std::vector<std::int64_t>& v) const {
  require(static_cast<int>(v.size()) == ambient_, errc::invalid_parameter,
          "vector has wrong ambient dimension");
  std::vector<std::int64_t> w(v);
  for (auto& x : w) x = f.reduce(x);
  // Reduce against RREF rows; each row's pivot is its first nonzero entry.
  for (int i = 0; i < basis_.rows; ++i) {
    int pc = -1;
    for (int j = 0; j < ambient_; ++j)
      if (basis_.at(i, j) != 0) {
        pc = j;
        break;
      }
    if (pc < 0 || w[pc] == 0) continue;
    std::int64_t c = w[pc];
    for (int j = pc; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(c, basis_.at(i, j)));
  }
  for (std::int64_t x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const RootField& f, const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (int i = 0; i < other.basis_.rows; ++i) {
    std::vector<std::int64_t> row(ambient_);
    for (int j = 0; j < ambient_; ++j) row[j] = other.basis_.at(i, j);
    if (!contains(f, row)) return false;
  }
  return true;
}

Subspace Subspace::sum(const RootField& f, const Subspace& other) const {
  require(other.ambient_ == ambient_, errc::invalid_parameter,
          "subspace ambient mismatch");
  MatrixF stacked(basis_.rows + other.basis_.rows, ambient_);
  for (int i = 0; i < basis_.rows; ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  for (int i = 0; i < other.basis_.rows; ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(basis_.rows + i, j) = other.basis_.at(i, j);
  return from_rows(f, stacked);
}

Subspace Subspace::intersect(const RootField& f, const Subspace& other) const {
  require(other.ambient_ == ambient_, errc::invalid_parameter,
          "subspace ambient mismatch");
  // Zassenhaus: row reduce [U U; W 0]; rows with zero left half carry the
  // intersection in the right half.
  int n = ambient_;
  MatrixF z(basis_.rows + other.basis_.rows, 2 * n);
  for (int i = 0; i < basis_.rows; ++i)
    for (int j = 0; j < n; ++j) {
      z.at(i, j) = basis_.at(i, j);
      z.at(i, n + j) = basis_.at(i, j);
    }
  for (int i = 0; i < other.basis_.rows; ++i)
    for (int j = 0; j < n; ++j) z.at(basis_.rows + i, j) = other.basis_.at(i, j);
  rref_in_place(f, z);
  MatrixF rows(z.rows, n);
  int k = 0;
  for (int i = 0; i < z.rows; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n; ++j)
      if (z.at(i, j) != 0) {
        left_zero = false;
        break;
      }
    if (!left_zero) continue;
    bool right_zero = true;
    for (int j = 0; j < n; ++j) {
      rows.at(k, j) = z.at(i, n + j);
      if (z.at(i, n + j) != 0) right_zero = false;
    }
    if (!right_zero) ++k;
  }
  MatrixF trimmed(k, n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) trimmed.at(i, j) = rows.at(i, j);
  return from_rows(f, trimmed);
}

}  // namespace gal
