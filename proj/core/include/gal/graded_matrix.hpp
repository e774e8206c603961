#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gal/pauli.hpp"
#include "gal/subspace.hpp"

namespace gal {

/// Multiplicity of each coset of the support, indexed as in
/// CosetTable::build(g, t) without a base point (cosets sorted by their
/// lex-min member).
struct KappaMap {
  std::vector<std::int64_t> mult;

  std::int64_t total() const;
  bool operator==(const KappaMap& o) const { return mult == o.mult; }
  bool operator!=(const KappaMap& o) const { return !(*this == o); }
  bool operator<(const KappaMap& o) const { return mult < o.mult; }
};

/// kappa^g, the multiplicity map of the grading shifted by g: the coset B
/// receives the old multiplicity of B - g.
KappaMap kappa_shift(const CosetTable& ct, const KappaMap& kappa, const Elem& g);
/// Multiplicities pulled back along inversion: coset A receives kappa(-A).
KappaMap kappa_reflect(const CosetTable& ct, const KappaMap& kappa);

/// Label of one basis element E^(A,B)_(i,j)(t): the block unit from slot
/// (B, j) to slot (A, i) tensored with X_t.
struct BasisTriple {
  std::size_t a = 0;
  std::size_t b = 0;
  int i = 0;
  int j = 0;
  Elem t;

  bool operator==(const BasisTriple&) const = default;
};

/// Graded matrix algebra with a division part realized by Pauli matrices and
/// an elementary part given by coset multiplicities.  Rows are grouped into
/// slots (A, i), i < kappa(A), each slot spanning dim(D) coordinates; the
/// basis element E^(A,B)_(i,j)(t) has degree gamma(A) + t - gamma(B).
class GradedMatrixAlgebra {
 public:
  GradedMatrixAlgebra() = default;

  /// The coset table may be built with or without a base point; multiplicity
  /// indices must follow its coset order.
  static GradedMatrixAlgebra build(std::shared_ptr<const PauliAlgebra> d,
                                   CosetTable cosets, KappaMap kappa);

  const FinAbGroup& group() const { return cosets_.group(); }
  const PauliAlgebra& pauli() const { return *d_; }
  std::shared_ptr<const PauliAlgebra> pauli_ptr() const { return d_; }
  const RootField& field() const { return d_->field(); }
  const CosetTable& cosets() const { return cosets_; }
  const KappaMap& kappa() const { return kappa_; }

  int dim() const { return n_; }
  std::int64_t block_dim() const { return d_->dim(); }
  /// First matrix row of slot (a, i).
  int slot_offset(std::size_t a, int i) const;

  Elem degree(const BasisTriple& e) const;
  MatrixF realize(const BasisTriple& e) const;
  MatrixF realize(const std::vector<std::pair<std::int64_t, BasisTriple>>& combo) const;

  /// Homogeneous basis of fixed degree, ordered by (a, b, i, j).
  std::vector<BasisTriple> component_basis(const Elem& deg) const;
  std::int64_t component_dim(const Elem& deg) const;
  /// Degrees with a nonzero component, lex sorted.
  std::vector<Elem> support() const;
  Subspace component_space(const Elem& deg) const;

  /// Structural product of two labels; nullopt when the product is zero.
  /// The scalar multiplies the returned label.
  std::optional<std::pair<std::int64_t, BasisTriple>> unit_product(
      const BasisTriple& x, const BasisTriple& y) const;

 private:
  std::shared_ptr<const PauliAlgebra> d_;
  CosetTable cosets_;
  KappaMap kappa_;
  int n_ = 0;
  std::vector<int> offsets_;  // per coset
};

/// Convenience construction from raw parameters; picks a field large enough
/// for the group exponent and the split orders when none is given.
GradedMatrixAlgebra build_model(const FinAbGroup& g, const Subgroup& t,
                                const Bicharacter& beta, const KappaMap& kappa,
                                const std::optional<Elem>& g0 = std::nullopt,
                                const std::optional<RootField>& field = std::nullopt);

/// Field orders any realization of the parameters needs.
std::vector<std::int64_t> model_orders(const FinAbGroup& g, const SymplecticBasis& sb);

/// Axiom check outcome with the first violation spelled out.
struct GradingReport {
  bool spans = true;          // components fill the whole matrix space
  bool direct = true;         // component dimensions add up
  bool multiplicative = true; // M_g M_h inside M_(g+h)
  bool unital = true;         // identity is homogeneous of trivial degree
  std::string witness;
  bool ok() const { return spans && direct && multiplicative && unital; }
};

/// Dense verification of an arbitrary degree-indexed decomposition of n x n
/// matrices (components flattened row major).
GradingReport verify_grading(const RootField& f, const FinAbGroup& g,
                             const std::vector<std::pair<Elem, Subspace>>& comps,
                             int n);

/// Structural verification of a model algebra: degree additivity and product
/// closure on the labeled basis, plus dense identities when n <= dense_limit.
GradingReport verify_model(const GradedMatrixAlgebra& m, int dense_limit = 8);

/// Grading of M_n by a degree tuple: entry (i, j) sits in degree g_i - g_j.
/// Returns the model algebra with trivial division part together with the
/// permutation that sorts the tuple into coset blocks, and checks the two
/// describe the same decomposition.
struct ElementaryGrading {
  GradedMatrixAlgebra algebra;
  std::vector<int> permutation;  // original index -> slot row index
};
ElementaryGrading elementary_grading(const FinAbGroup& g, const std::vector<Elem>& degs,
                                     const std::optional<RootField>& field = std::nullopt);

/// Degree-preserving non-unital algebra embedding induced by a slotwise
/// injection; exists when the target multiplicities dominate the source ones
/// and both sides share support, twist and field.
struct Embedding {
  std::vector<int> row_map;
  MatrixF apply(const MatrixF& m, int big_n) const;
};
Embedding embed(const GradedMatrixAlgebra& sub, const GradedMatrixAlgebra& big);

/// Isomorphism-invariant shape data of a graded decomposition.
struct Fingerprint {
  std::vector<Elem> support;
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> subgroup_factors;  // invariant factors of <support>
  std::vector<std::int64_t> block_sizes;       // identity-component splitting, ascending

  bool operator==(const Fingerprint& o) const {
    return support == o.support && dims == o.dims &&
           subgroup_factors == o.subgroup_factors && block_sizes == o.block_sizes;
  }
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
};

/// Generic fingerprint of a decomposition: the identity component is closed
/// into a unital algebra, its center is split into minimal idempotents and
/// the block sizes are the dimensions of their column spaces.
Fingerprint fingerprint(const RootField& f, const FinAbGroup& g,
                        const std::vector<std::pair<Elem, Subspace>>& comps, int n);

/// Model-algebra fingerprint computed structurally (one block of size
/// kappa(A) * dim(D) per occupied coset).
Fingerprint fingerprint(const GradedMatrixAlgebra& m);

}  // namespace gal
