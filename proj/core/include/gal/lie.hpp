#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gal/graded_matrix.hpp"
#include "gal/involution.hpp"

namespace gal {

/// The four families of graded matrix Lie algebras: special linear with the
/// grading inherited from the associative algebra (Type I), special linear
/// refined through a character and an antiautomorphism (Type II), orthogonal
/// and symplectic.
enum class LieFamily { sl_i, sl_ii, orthogonal, symplectic };

const char* lie_family_name(LieFamily f);

/// Graded Lie algebra of matrices under the commutator bracket.  Components
/// and graded bases are indexed by the grading group's element order.  For
/// Type II the ambient associative algebra is graded by the quotient of
/// `group` modulo the distinguished order-2 element.
struct GradedLieAlgebra {
  LieFamily family = LieFamily::sl_i;
  GradedMatrixAlgebra ambient;
  FinAbGroup group;
  std::vector<Subspace> components;
  std::vector<std::vector<MatrixF>> graded_basis;
  std::int64_t dim = 0;

  /// Antiautomorphism data (absent for Type I).
  std::optional<InvolutionData> form;
  /// Type II only: projection onto the ambient grading group, the character
  /// that cuts the refinement and its square pushed down the projection.
  std::optional<Quotient> quotient;
  std::optional<Elem> h;
  std::optional<Character> chi;
  std::optional<Character> chi_sq;
  /// Type II only: the refined decomposition of the full associative algebra.
  std::vector<Subspace> refined;
  /// Basis emission diagnostics (non-proportional dependent drops).
  std::vector<std::string> notes;

  const Subspace& component(const Elem& g) const;
  const std::vector<MatrixF>& basis_at(const Elem& g) const;
  std::vector<std::int64_t> component_dims() const;
};

/// v_i(A) (X) X_t (X) v_j(C) as a matrix: the rank-one-over-D operator
/// sending u to v_i(A) * X_t * B(v_j(C), u), with B the bilinear form behind
/// `data`.  Nonzero only on the coset paired with C.
MatrixF tensor_element(const GradedMatrixAlgebra& m, const InvolutionData& data,
                       std::size_t a, int i, const Elem& t, std::size_t c, int j);

/// Traceless matrices of the model algebra with its inherited grading.
GradedLieAlgebra build_sl_i(const FinAbGroup& g, const Subgroup& t,
                            const Bicharacter& beta, const KappaMap& kappa,
                            const std::optional<RootField>& field = std::nullopt);

/// Traceless matrices graded by g, refined from the quotient grading modulo
/// <h> through the canonical character with chi(h) = -1 and the adjoint of a
/// balanced form.  h_sub is an elementary 2-subgroup of g containing h; the
/// bicharacter, multiplicities and base degree live on the quotient (support
/// h_sub/<h>, coset order of CosetTable::build on the quotient).
GradedLieAlgebra build_sl_ii(const FinAbGroup& g, const Subgroup& h_sub, const Elem& h,
                             const Bicharacter& beta_bar, const KappaMap& kappa,
                             const RootOfUnity& mu0, const Elem& g0_bar,
                             const std::optional<RootField>& field = std::nullopt);

/// Skew elements of the degree-preserving orthogonal (delta = +1) involution.
GradedLieAlgebra build_orthogonal(const FinAbGroup& g, const Subgroup& t,
                                  const Bicharacter& beta, const KappaMap& kappa,
                                  const Elem& g0,
                                  const std::optional<RootField>& field = std::nullopt);

/// Skew elements of the degree-preserving symplectic (delta = -1) involution.
GradedLieAlgebra build_symplectic(const FinAbGroup& g, const Subgroup& t,
                                  const Bicharacter& beta, const KappaMap& kappa,
                                  const Elem& g0,
                                  const std::optional<RootField>& field = std::nullopt);

struct LieReport {
  bool bracket_closed = true;   // [L_g, L_h] inside L_(g+h) on all basis pairs
  bool direct_sum = true;       // components independent, dims add up to dim
  bool bases_match = true;      // bases independent, spanning, degree-true
  bool family_laws = true;      // tracelessness / form skewness / eigenspace cuts
  bool refinement_strict = true;  // Type II: a proper refinement admits an
                                  // associative product escaping it
  std::string witness;
  bool ok() const {
    return bracket_closed && direct_sum && bases_match && family_laws &&
           refinement_strict;
  }
};

LieReport verify_lie(const GradedLieAlgebra& l);

/// True when the Lie algebra generates the full ambient matrix algebra under
/// associative products.
bool generates_ambient(const GradedLieAlgebra& l);

}  // namespace gal
