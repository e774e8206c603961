#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gal {

/// Group element: residue vector, one coordinate per invariant factor.
using Elem = std::vector<std::int64_t>;

/// Finite abelian group in invariant factor form m_1 | m_2 | ... | m_r
/// (ascending divisibility, factors >= 2; empty list = trivial group).
/// Elements are ordered lexicographically, which coincides with the
/// mixed-radix index used by `at`/`index_of`.
class FinAbGroup {
public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::int64_t> invariant_factors);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::int64_t order() const { return order_; }
  std::int64_t exponent() const;
  std::size_t rank() const { return factors_.size(); }

  Elem id() const { return Elem(factors_.size(), 0); }
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul_int(const Elem& a, std::int64_t k) const;
  std::int64_t order_of(const Elem& a) const;
  bool is_valid(const Elem& a) const;
  void check(const Elem& a) const;

  std::int64_t index_of(const Elem& a) const;
  Elem at(std::int64_t idx) const;
  std::vector<Elem> elements() const;

  bool operator==(const FinAbGroup& o) const { return factors_ == o.factors_; }
  bool operator!=(const FinAbGroup& o) const { return !(*this == o); }

  std::string str(const Elem& a) const;

private:
  std::vector<std::int64_t> factors_;
  std::int64_t order_ = 1;
};

/// Normalizes an arbitrary list of moduli (>= 1) into invariant factor form.
FinAbGroup make_group(const std::vector<std::int64_t>& moduli);

/// Subgroup given by its full, lex-sorted element list.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(FinAbGroup parent, std::vector<Elem> elems_sorted);

  static Subgroup trivial(const FinAbGroup& g);
  static Subgroup full(const FinAbGroup& g);
  static Subgroup from_generators(const FinAbGroup& g, const std::vector<Elem>& gens);

  const FinAbGroup& parent() const { return parent_; }
  const std::vector<Elem>& elements() const { return elems_; }
  std::int64_t order() const { return static_cast<std::int64_t>(elems_.size()); }
  bool contains(const Elem& x) const;
  /// Position of x in the sorted element list; throws if absent.
  std::size_t index_of(const Elem& x) const;
  bool is_elementary_2() const;
  /// True if |T| is a perfect square; also reports the square root.
  bool square_order(std::int64_t* root = nullptr) const;

  /// Independent generators b_i with T = <b_1> + ... + <b_k> (direct),
  /// orders descending.  Empty for the trivial subgroup.
  struct Basis {
    std::vector<Elem> gens;
    std::vector<std::int64_t> orders;
  };
  Basis basis() const;

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && elems_ == o.elems_;
  }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }

private:
  FinAbGroup parent_;
  std::vector<Elem> elems_;
};

/// All subgroups of g, deduplicated, sorted by (order, element list).
std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g);

/// Cosets of a subgroup T in G.  Cosets are sorted by their lex-min member;
/// each representative gamma(A) lies in A.  In paired mode (g0 given) the
/// cosets are partitioned into self-paired ones (g0*A*A = T) and partner
/// pairs {A, g0^-1 A^-1}; the lex-smaller coset of each pair keeps the
/// lex-min representative and its partner gets the forced one, so that
/// g0 * gamma(A) * gamma(g0^-1 A^-1) = e holds for every non-self-paired A.
class CosetTable {
public:
  CosetTable() = default;

  static CosetTable build(const FinAbGroup& g, const Subgroup& t,
                          const std::optional<Elem>& g0 = std::nullopt);

  const FinAbGroup& group() const { return sub_.parent(); }
  const Subgroup& subgroup() const { return sub_; }
  std::size_t coset_count() const { return cosets_.size(); }
  const std::vector<Elem>& coset(std::size_t idx) const { return cosets_[idx]; }
  const Elem& gamma(std::size_t idx) const { return gamma_[idx]; }
  std::size_t coset_of(const Elem& x) const;
  bool paired() const { return g0_.has_value(); }
  const Elem& g0() const;
  bool self_paired(std::size_t idx) const;
  /// Index of g0^-1 A^-1 (equals idx when self-paired); paired mode only.
  std::size_t partner(std::size_t idx) const;
  /// Index of the coset x*A.
  std::size_t shifted(std::size_t idx, const Elem& x) const;
  /// Index of the coset A^-1.
  std::size_t inverse_coset(std::size_t idx) const;

private:
  Subgroup sub_;
  std::vector<std::vector<Elem>> cosets_;
  std::vector<Elem> gamma_;
  std::vector<std::size_t> elem_to_coset_;
  std::optional<Elem> g0_;
  std::vector<std::size_t> partner_;
  std::vector<bool> self_paired_;
};

/// Quotient G/N in invariant factor form with the projection map.
class Quotient {
public:
  static Quotient build(const FinAbGroup& g, const Subgroup& n);

  const FinAbGroup& group() const { return quot_; }
  const FinAbGroup& source() const { return src_; }
  Elem project(const Elem& x) const;
  /// Lex-min preimage of a quotient element.
  Elem lift(const Elem& q) const;

private:
  FinAbGroup src_;
  FinAbGroup quot_;
  std::vector<std::vector<std::int64_t>> u_;  // left SNF transform
  std::vector<std::int64_t> diag_;            // nontrivial diagonal entries' moduli
  std::vector<std::size_t> rows_;             // rows of u_ kept for projection
  std::vector<Elem> lift_;                    // quotient index -> lex-min preimage
};

}  // namespace gal
