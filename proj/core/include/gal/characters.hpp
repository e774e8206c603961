#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gal/group.hpp"
#include "gal/roots.hpp"

namespace gal {

/// Multiplicative character of a finite abelian group, stored as one exponent
/// per invariant factor: chi(x) = prod_i zeta_{m_i}^{e_i x_i}.
class Character {
public:
  Character() = default;
  Character(FinAbGroup g, std::vector<std::int64_t> exponents);

  static Character trivial(const FinAbGroup& g);

  const FinAbGroup& group() const { return g_; }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  RootOfUnity value(const Elem& x) const;
  /// chi(x)^2; well defined on any quotient on which it is checked trivial.
  RootOfUnity square_value(const Elem& x) const { return value(x).pow(2); }
  Character mul(const Character& o) const;
  bool operator==(const Character& o) const { return g_ == o.g_ && exps_ == o.exps_; }

private:
  FinAbGroup g_;
  std::vector<std::int64_t> exps_;
};

/// One constraint chi(element) = value.
struct CharacterConstraint {
  Elem element;
  RootOfUnity value;
};

/// Smallest solution of the constraints, where characters are ranked by the
/// lexicographic order of their value tables over the sorted element list.
/// Throws `no-character` when the constraints are inconsistent.
Character solve_character(const FinAbGroup& g, const std::vector<CharacterConstraint>& cs);

std::vector<Character> all_characters(const FinAbGroup& g);

/// chi^2 pushed down along a quotient projection.  Defined when chi^2 kills
/// the kernel, which is verified on every source element; throws
/// `no-character` otherwise.
Character descend_square(const Quotient& q, const Character& chi);

/// Bicharacter on a subgroup T, stored as the full |T| x |T| value table
/// indexed by positions in the sorted element list of T.
class Bicharacter {
public:
  Bicharacter() = default;

  static Bicharacter trivial(const Subgroup& t);
  static Bicharacter from_table(const Subgroup& t,
                                std::vector<std::vector<RootOfUnity>> table);
  /// Values on an independent generating set (gens must decompose T as a
  /// direct product); gram[i][j] = beta(gens[i], gens[j]).
  static Bicharacter from_gram(const Subgroup& t, const std::vector<Elem>& gens,
                               const std::vector<std::vector<RootOfUnity>>& gram);

  const Subgroup& subgroup() const { return t_; }
  RootOfUnity eval(const Elem& a, const Elem& b) const;
  RootOfUnity eval_idx(std::size_t i, std::size_t j) const { return table_[i][j]; }
  Bicharacter inverse() const;

  bool operator==(const Bicharacter& o) const {
    return t_ == o.t_ && table_ == o.table_;
  }
  bool operator!=(const Bicharacter& o) const { return !(*this == o); }

private:
  Subgroup t_;
  std::vector<std::vector<RootOfUnity>> table_;
};

/// Multiplicativity / alternation / nondegeneracy report with witnesses.
struct BicharacterReport {
  bool multiplicative = true;
  bool alternating = true;
  bool nondegenerate = true;
  std::string witness;  // first violation found, empty if valid
  bool valid() const { return multiplicative && alternating && nondegenerate; }
};

/// Checks beta and its inverse; throws `invalid-bicharacter` with the witness
/// when `throwing`, otherwise returns the report.
BicharacterReport validate_bicharacter(const Bicharacter& beta, bool throwing = true);

/// Symplectic basis of a nondegenerate alternating bicharacter: pairs
/// (u_i, v_i) of equal order l_i with beta(u_i, v_i) = zeta_{l_i}, l_1 >=
/// l_2 >= ..., beta trivial across distinct pairs.  Deterministic given the
/// sorted element order of T.
struct SymplecticBasis {
  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<std::int64_t> orders;
};

SymplecticBasis symplectic_basis(const Subgroup& t, const Bicharacter& beta);

/// All nondegenerate alternating bicharacters on T, deduplicated by value
/// table, deterministic order.  Empty when |T| is not a perfect square or T
/// admits none.
std::vector<Bicharacter> enumerate_alternating_bicharacters(const Subgroup& t);

}  // namespace gal
