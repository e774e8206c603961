#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gal/isoclass.hpp"

namespace gal {

/// One homogeneous component of the stored decomposition.  `basis` holds the
/// flattened basis matrices and may be empty when the artifact was written
/// without dense data.
struct DegreeComponent {
  Elem degree;
  std::int64_t dim = 0;
  std::vector<MatrixF> basis;

  bool operator==(const DegreeComponent&) const = default;
};

/// Bilinear form block: the pairing base point, the adjoint sign (0 when the
/// adjoint is not involutive), the per-coset scalars and the Gram matrix.
struct FormBlock {
  Elem g0;
  int delta = 0;
  MuMap mu;
  std::vector<RootOfUnity> lambda;
  MatrixF s;

  bool operator==(const FormBlock&) const = default;
};

struct LieBlock {
  LieFamily family = LieFamily::sl_i;
  std::int64_t dim = 0;

  bool operator==(const LieBlock&) const = default;
};

/// Self-contained record of one constructed structure: the exact field, the
/// defining parameters, the labeled basis of the ambient matrix algebra and
/// the degree table of the structure itself (the model's components for the
/// associative kinds, the Lie components over the full grading group for the
/// Lie kinds), plus the optional form and Lie summaries.
struct Artifact {
  RootField field;
  ParamTuple params;
  int n = 0;
  std::vector<BasisTriple> basis;
  std::vector<DegreeComponent> components;
  std::optional<FormBlock> form;
  std::optional<LieBlock> lie;

  bool operator==(const Artifact&) const = default;
};

/// Realizes the tuple and packages the result.  `with_matrices` controls
/// whether the dense component bases are stored.
Artifact make_artifact(const ParamTuple& p,
                       const std::optional<RootField>& field = std::nullopt,
                       bool with_matrices = true);

/// JSON text, schema `gal-v1`.  Serialization is deterministic and
/// parse(serialize(a)) == a holds field by field.
std::string serialize_artifact(const Artifact& a);
Artifact parse_artifact(const std::string& text);

/// Parameters alone, either from a bare {"group", "parameters"} object or
/// from a full artifact.
ParamTuple parse_params(const std::string& text);

/// Checks the stored data against a fresh realization of the parameters and
/// runs the grading axioms on the stored decomposition.  In associative mode
/// the rebuilt structure is instead tested as a grading of the full matrix
/// algebra (for Type II this is the refined decomposition), so a nonempty
/// report is the expected outcome for a proper refinement.
struct ArtifactReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }

  bool operator==(const ArtifactReport&) const = default;
};
ArtifactReport verify_artifact(const Artifact& a, bool associative = false);

/// Decision record: verdict plus either the witness shift or the refutation
/// counters (and the fingerprint discrepancy when one exists).
std::string decision_json(const ParamTuple& p, const ParamTuple& q,
                          const IsoDecision& d);

std::string fingerprint_json(const Fingerprint& fp);

}  // namespace gal
