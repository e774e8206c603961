#pragma once

#include <string>
#include <vector>

#include "gal/graded_matrix.hpp"

namespace gal {

/// tau(A) = g0 + 2 gamma(A) for a self-paired coset of a paired table; lies
/// in the support and is recomputed with every representative to pin down
/// independence of the transversal.  Throws `not-self-paired` when
/// g0 + 2A does not land in the support.
Elem tau_of(const CosetTable& ct, std::size_t a);

/// Per-coset scalars mu_A of a compatible bilinear form, indexed like the
/// coset table that produced them.
struct MuMap {
  std::vector<RootOfUnity> values;

  bool operator==(const MuMap& o) const { return values == o.values; }
  bool operator!=(const MuMap& o) const { return !(*this == o); }
};

/// mu_A * mu_(partner A) = 1 for every coset.
bool mu_paired(const CosetTable& ct, const MuMap& mu);

/// Copy with mu_A = 1 forced on cosets of multiplicity zero, the convention
/// used when comparing maps of different origin.
MuMap normalize_mu(const KappaMap& kappa, const MuMap& mu);

/// mu^g, the scalar map of the grading shifted by g: the coset g + A
/// receives the old value of A.
MuMap mu_shift(const CosetTable& ct, const MuMap& mu, const Elem& g);

/// Scalars whose form has an involutive adjoint of sign delta:
/// mu_A = delta * sign(tau(A)) on self-paired cosets, delta elsewhere.
MuMap mu_from_delta(const CosetTable& ct, const PauliAlgebra& d, int delta);

/// Scalars of the antiautomorphism used by the quotient refinement:
/// mu_A = mu0 * chi2(gamma(A))^-1, times sign(tau(A)) on self-paired cosets.
/// chi2 is a character of the table's group (the square of the
/// distinguishing character pushed down to the quotient); it must vanish on
/// the support (`splitting-violation`) and mu0 must satisfy
/// mu0^2 * chi2(g0) = 1 (`invalid-parameter`).
MuMap mu_from_type2(const CosetTable& ct, const PauliAlgebra& d,
                    const Character& chi2, const RootOfUnity& mu0);

/// The mu0 values admissible for the given multiplicities: a self-paired
/// coset of odd multiplicity pins mu0 = chi2(gamma(A)) * sign(tau(A)); with
/// several pins they must agree, and with none both square roots of
/// chi2(g0)^-1 qualify.  Zero, one or two values.
std::vector<RootOfUnity> admissible_mu0(const CosetTable& ct, const KappaMap& kappa,
                                        const PauliAlgebra& d, const Character& chi2);

/// Involution existence test: multiplicities must pair up and self-paired
/// cosets of odd multiplicity must have sign(tau(A)) = delta.  Equivalent to
/// build_form succeeding on mu_from_delta.
bool exist_involution(const CosetTable& ct, const KappaMap& kappa,
                      const PauliAlgebra& d, int delta);

/// Homogeneous bilinear form with Gram matrix S and its adjoint
/// antiautomorphism phi(r) = S^-1 r^T S.  Q = S^-T S acts on the slots of a
/// coset A as the scalar lambda_A.
struct InvolutionData {
  MatrixF s;
  MatrixF s_inv;
  MuMap mu;
  std::vector<RootOfUnity> lambda;
  std::vector<MatrixF> btilde;  // scalar block pairing the slots of A with partner(A)
  int delta = 0;                // sign when phi is an involution, 0 otherwise

  MatrixF apply(const RootField& f, const MatrixF& x) const;
};

/// Assembles the Gram matrix blockwise: identity between the slots of
/// partner cosets with the mu-scaled block transposed back, and, on a
/// self-paired coset, the identity (mu_A = 1) or the standard skew block
/// [[0, I], [-I, 0]] (mu_A = -1) tensored with X_tau(A).  Throws `no-form`
/// when multiplicities do not pair up, a skew block would be odd-sized, or
/// the scalars violate their own pairing.
InvolutionData build_form(const GradedMatrixAlgebra& m, const MuMap& mu);

/// Checks of the adjoint map on the labeled basis.
struct AntiautoReport {
  bool antiauto = true;           // phi(xy) = phi(y) phi(x)
  bool degree_preserving = true;  // phi maps every component into itself
  bool square_scalar = true;      // phi^2(E) = lambda_A^-1 lambda_B E blockwise
  bool involutive_on_e = true;    // phi^2 = id on the identity component
  bool involution = true;         // phi^2 = id everywhere
  std::string witness;

  bool ok() const {
    return antiauto && degree_preserving && square_scalar && involutive_on_e;
  }
};

AntiautoReport check_antiauto(const GradedMatrixAlgebra& m, const InvolutionData& data);

/// phi^2(r) = chi2(deg r) r, checked pointwise on every basis element and,
/// independently, via the splitting of chi2 plus the shape of mu; the two
/// answers must agree.
struct CompatReport {
  bool pointwise = true;
  bool criterion = true;
  std::vector<Elem> violations;  // degrees where the pointwise check failed

  bool agree() const { return pointwise == criterion; }
};

CompatReport check_compat(const GradedMatrixAlgebra& m, const InvolutionData& data,
                          const Character& chi2);

}  // namespace gal
