#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gal/involution.hpp"
#include "gal/lie.hpp"

namespace gal {

/// The seven parameter shapes the equivalence deciders handle.
enum class ParamKind {
  assoc,             // graded matrix algebra
  assoc_antiauto,    // with a degree-preserving antiautomorphism
  assoc_involution,  // with an involution of fixed sign
  sl_i,
  sl_ii,
  so,
  sp,
};

const char* param_kind_name(ParamKind k);
std::optional<ParamKind> parse_param_kind(const std::string& name);

/// Parameters of one graded structure.  The base fields (group, support,
/// beta, kappa) are always read; mu and g0 belong to assoc-antiauto, delta
/// and g0 to assoc-involution, g0 to so/sp.  For sl-II the support is the
/// subgroup H of the grading group, h the distinguished order-2 element, and
/// beta, kappa, g0 live on the quotient modulo <h> (mu0 the form scalar).
struct ParamTuple {
  ParamKind kind = ParamKind::assoc;
  FinAbGroup group;
  Subgroup support;
  Bicharacter beta;
  KappaMap kappa;
  MuMap mu;
  int delta = 0;
  Elem g0;
  Elem h;
  RootOfUnity mu0;

  bool operator==(const ParamTuple&) const = default;
};

/// Root-of-unity orders a field must support to realize the tuple and to
/// express the scalars of an equivalence witness.
std::vector<std::int64_t> required_orders(const ParamTuple& p);

/// The structure a tuple describes.  Throws like the underlying builders
/// when the parameters are invalid.
struct Realization {
  GradedMatrixAlgebra algebra;
  std::optional<InvolutionData> form;
  std::optional<GradedLieAlgebra> lie;
};
Realization realize(const ParamTuple& p,
                    const std::optional<RootField>& field = std::nullopt);

/// The parameters an equivalent structure presents after relabeling degrees
/// by the shift g; `reversal` (sl-I only) composes with the transpose map,
/// inverting the bicharacter and reflecting the multiplicities first.
ParamTuple shift_tuple(const ParamTuple& p, const Elem& g, bool reversal = false);

/// Outcome of one equivalence test.  On success the witness is the shift
/// realizing the parameter match (plus the reversal flag for sl-I); on
/// failure `checked` counts the exhausted shifts and `reason` names the
/// invariant that separates the tuples, when one does.
struct IsoDecision {
  bool equivalent = false;
  Elem shift;
  bool reversal = false;
  std::int64_t checked = 0;
  std::string reason;
};

IsoDecision decide_assoc(const ParamTuple& p, const ParamTuple& q);
IsoDecision decide_antiauto(const ParamTuple& p, const ParamTuple& q);
IsoDecision decide_involution(const ParamTuple& p, const ParamTuple& q);
IsoDecision decide_sl(const ParamTuple& p, const ParamTuple& q);
IsoDecision decide_so_sp(const ParamTuple& p, const ParamTuple& q);

/// Dispatches on the kinds.  Mixed kinds are decided when they compete for
/// the same structure (sl-I vs sl-II, so vs sp, always inequivalent) and
/// rejected as `invalid-parameter` otherwise.
IsoDecision decide_iso(const ParamTuple& p, const ParamTuple& q);

/// Realizes the decision's witness as a change of basis u and checks it:
/// conjugation by u (composed with x -> -x^T first when the witness
/// reverses) must map every graded component of p onto the matching
/// component of q, and for form kinds u^T S' u must be a scalar multiple of
/// S.  Returns u; throws `verification-failure` when a check fails.
MatrixF verify_witness(const ParamTuple& p, const ParamTuple& q,
                       const IsoDecision& d);

Fingerprint fingerprint_of(const ParamTuple& p);

/// Equality of fingerprints with the first discrepancy spelled out.
struct FingerprintDelta {
  bool equal = true;
  std::string discrepancy;
};
FingerprintDelta fingerprint_compare(const Fingerprint& a, const Fingerprint& b);

}  // namespace gal
