#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gal/field.hpp"

namespace gal {

/// Dense matrix over a RootField, row major, entries reduced mod p.
struct MatrixF {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> a;

  MatrixF() = default;
  MatrixF(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  MatrixF(int r, int c, std::vector<std::int64_t> entries)
      : rows(r), cols(c), a(std::move(entries)) {}

  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

  static MatrixF identity(int n);
  bool is_zero() const;
  bool operator==(const MatrixF& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool operator!=(const MatrixF& o) const { return !(*this == o); }
};

MatrixF mat_add(const RootField& f, const MatrixF& x, const MatrixF& y);
MatrixF mat_sub(const RootField& f, const MatrixF& x, const MatrixF& y);
MatrixF mat_neg(const RootField& f, const MatrixF& x);
MatrixF mat_mul(const RootField& f, const MatrixF& x, const MatrixF& y);
MatrixF mat_scale(const RootField& f, std::int64_t c, const MatrixF& x);
MatrixF mat_transpose(const MatrixF& x);
MatrixF mat_kron(const RootField& f, const MatrixF& x, const MatrixF& y);
std::int64_t mat_trace(const RootField& f, const MatrixF& x);
/// Inverse via Gauss-Jordan; nullopt when singular.
std::optional<MatrixF> mat_inverse(const RootField& f, const MatrixF& x);
/// x*y - y*x.
MatrixF mat_bracket(const RootField& f, const MatrixF& x, const MatrixF& y);
MatrixF mat_pow(const RootField& f, const MatrixF& x, std::int64_t e);
/// Entries in row-major order.
std::vector<std::int64_t> mat_flatten(const MatrixF& x);
/// Writes src into dst with top-left corner (r0, c0).
void mat_place(MatrixF& dst, int r0, int c0, const MatrixF& src);
/// If y == c*x for a scalar c != 0 (x != 0), returns c.
std::optional<std::int64_t> mat_proportional(const RootField& f, const MatrixF& x,
                                             const MatrixF& y);

/// Reduced row echelon form in place; returns pivot columns.  Zero rows are
/// moved to the bottom (not removed).
std::vector<int> rref_in_place(const RootField& f, MatrixF& m);

struct LinearSolution {
  bool feasible = false;
  std::vector<std::int64_t> particular;  // one solution of A x = b
  MatrixF nullspace;                     // rows span the kernel of A
};

/// Solves A x = b exactly.
LinearSolution solve_linear(const RootField& f, const MatrixF& a,
                            const std::vector<std::int64_t>& b);

}  // namespace gal
