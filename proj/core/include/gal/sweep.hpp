#pragma once

#include <string>
#include <vector>

#include "gal/isoclass.hpp"

namespace gal {

/// One census class: the first tuple that opened it, the matrix size and the
/// number of enumerated tuples it absorbed.
struct SweepClass {
  ParamTuple rep;
  int n = 0;
  std::int64_t size = 0;
};

struct SweepResult {
  FinAbGroup group;
  ParamKind kind = ParamKind::assoc;
  int max_n = 0;
  std::int64_t tuples = 0;
  std::vector<SweepClass> classes;  // ascending n, then discovery order
};

/// Enumerates every valid tuple of the kind with matrix size at most max_n
/// (all square-order supports with all nondegenerate alternating
/// bicharacters, all multiplicity maps, and all base point / sign / scalar
/// choices where the kind has them) and buckets the tuples by the
/// equivalence decider.  Validity filtering runs in parallel over the
/// candidates; the bucketing pass consumes them in enumeration order, so the
/// result is deterministic.  Scalar-map sweeps (assoc-antiauto) are
/// rejected as `unsupported`: the scalars range over all roots of unity.
SweepResult sweep_census(const FinAbGroup& g, ParamKind kind, int max_n);

/// Census as text: class counts grouped by matrix size with one
/// representative line per class.  Byte-identical across runs.
std::string census_table(const SweepResult& r);

}  // namespace gal
