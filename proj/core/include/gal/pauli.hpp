#pragma once

#include <vector>

#include "gal/characters.hpp"
#include "gal/matrix.hpp"

namespace gal {

/// Graded division algebra on a support group T with a nondegenerate
/// alternating bicharacter beta, realized by generalized Pauli matrices.
/// A symplectic basis (u_i, v_i) of orders l_i splits T; on the i-th tensor
/// slot u_i acts as diag(1, zeta, ..., zeta^(l_i - 1)) and v_i as the cyclic
/// shift e_j -> e_(j+1).  X_t for t = sum a_i u_i + b_i v_i is the ordered
/// product of generator powers, and X_s X_t = sigma(s, t) X_(s+t).
class PauliAlgebra {
 public:
  PauliAlgebra() = default;

  static PauliAlgebra build(const Subgroup& t, const Bicharacter& beta,
                            const RootField& f);

  const Subgroup& support() const { return t_; }
  const Bicharacter& beta() const { return beta_; }
  const SymplecticBasis& sym_basis() const { return sb_; }
  const RootField& field() const { return f_; }
  int dim() const { return dim_; }

  const MatrixF& x(const Elem& t) const { return x_[t_.index_of(t)]; }
  const MatrixF& x_idx(std::size_t i) const { return x_[i]; }

  RootOfUnity sigma(const Elem& s, const Elem& t) const;
  std::int64_t sigma_f(const Elem& s, const Elem& t) const;

  /// True when every element of T has order at most 2, so transposition
  /// fixes each X_t up to sign.
  bool has_sign_form() const { return t_.is_elementary_2(); }
  /// X_t^T = sign(t) X_t; requires the sign form to exist.
  RootOfUnity sign(const Elem& t) const;
  std::int64_t sign_f(const Elem& t) const { return f_.root(sign(t)); }

 private:
  Subgroup t_;
  Bicharacter beta_;
  SymplecticBasis sb_;
  RootField f_;
  int dim_ = 1;
  std::vector<MatrixF> x_;
  std::vector<std::vector<RootOfUnity>> sigma_;
  std::vector<RootOfUnity> sign_;
};

/// Orders whose roots of unity the matrices of a split basis need.
std::vector<std::int64_t> pauli_orders(const SymplecticBasis& sb);

/// Invertible w with w * from[k] * w^-1 proportional to to[k] for every k.
/// Both families must satisfy the same power and commutation relations up to
/// scalars and generate the full matrix algebra; orders[k] is the group order
/// of the k-th generator.
MatrixF pauli_intertwiner(const RootField& f, const std::vector<MatrixF>& from,
                          const std::vector<MatrixF>& to,
                          const std::vector<std::int64_t>& orders);

}  // namespace gal
