#pragma once

#include <vector>

#include "gal/field.hpp"
#include "gal/matrix.hpp"

namespace gal {

// Subspace of F^n kept in reduced row echelon form, so equal subspaces
// compare equal componentwise.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(int ambient);
  static Subspace from_rows(const RootField& f, const MatrixF& rows);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const MatrixF& basis() const { return basis_; }

  bool contains(const RootField& f, const std::vector<std::int64_t>& v) const;
  bool contains(const RootField& f, const Subspace& other) const;

  Subspace sum(const RootField& f, const Subspace& other) const;
  Subspace intersect(const RootField& f, const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }
  bool operator!=(const Subspace& other) const { return !(*this == other); }

 private:
  int ambient_ = 0;
  MatrixF basis_;  // dim x ambient, RREF, no zero rows
};

}  // namespace gal
