#include "gal/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gal/error.hpp"

namespace gal {

Character::Character(FinAbGroup g, std::vector<std::int64_t> exponents)
    : g_(std::move(g)), exps_(std::move(exponents)) {
  require(exps_.size() == g_.rank(), errc::invalid_parameter,
          "character needs one exponent per invariant factor");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    exps_[i] %= g_.factors()[i];
    if (exps_[i] < 0) exps_[i] += g_.factors()[i];
  }
}

Character Character::trivial(const FinAbGroup& g) {
  return Character(g, std::vector<std::int64_t>(g.rank(), 0));
}

RootOfUnity Character::value(const Elem& x) const {
  g_.check(x);
  RootOfUnity v = RootOfUnity::one();
  for (std::size_t i = 0; i < exps_.size(); ++i)
    v = v.mul(RootOfUnity::make(exps_[i] * x[i], g_.factors()[i]));
  return v;
}

Character Character::mul(const Character& o) const {
  require(g_ == o.g_, errc::invalid_parameter, "characters of different groups");
  std::vector<std::int64_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] + o.exps_[i];
  return Character(g_, e);
}

std::vector<Character> all_characters(const FinAbGroup& g) {
  std::vector<Character> out;
  std::int64_t n = g.order();
  for (std::int64_t i = 0; i < n; ++i) out.emplace_back(g, g.at(i));
  return out;
}

Character descend_square(const Quotient& q, const Character& chi) {
  require(chi.group() == q.source(), errc::invalid_parameter,
          "character lives on a different group");
  const FinAbGroup& h = q.group();
  std::vector<std::int64_t> exps(h.rank());
  for (std::size_t i = 0; i < h.rank(); ++i) {
    Elem unit(h.rank(), 0);
    unit[i] = 1;
    RootOfUnity v = chi.square_value(q.lift(unit));
    require(h.factors()[i] % v.order() == 0, errc::no_character,
            "character square does not descend");
    exps[i] = v.num * (h.factors()[i] / v.den);
  }
  Character out(h, exps);
  for (const Elem& x : q.source().elements())
    require(out.value(q.project(x)) == chi.square_value(x), errc::no_character,
            "character square does not descend");
  return out;
}

Character solve_character(const FinAbGroup& g, const std::vector<CharacterConstraint>& cs) {
  std::optional<Character> best;
  std::vector<RootOfUnity> best_table;
  auto elems = g.elements();
  for (const Character& chi : all_characters(g)) {
    bool ok = true;
    for (const auto& c : cs)
      if (chi.value(c.element) != c.value) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<RootOfUnity> table;
    table.reserve(elems.size());
    for (const auto& x : elems) table.push_back(chi.value(x));
    if (!best || std::lexicographical_compare(table.begin(), table.end(),
                                              best_table.begin(), best_table.end())) {
      best = chi;
      best_table = std::move(table);
    }
  }
  require(best.has_value(), errc::no_character, "constraints admit no character");
  return *best;
}

Bicharacter Bicharacter::trivial(const Subgroup& t) {
  std::size_t n = static_cast<std::size_t>(t.order());
  return from_table(t, std::vector<std::vector<RootOfUnity>>(
                           n, std::vector<RootOfUnity>(n, RootOfUnity::one())));
}

Bicharacter Bicharacter::from_table(const Subgroup& t,
                                    std::vector<std::vector<RootOfUnity>> table) {
  std::size_t n = static_cast<std::size_t>(t.order());
  require(table.size() == n, errc::invalid_parameter, "bicharacter table has wrong size");
  for (const auto& row : table)
    require(row.size() == n, errc::invalid_parameter, "bicharacter table has wrong size");
  Bicharacter b;
  b.t_ = t;
  b.table_ = std::move(table);
  return b;
}

Bicharacter Bicharacter::from_gram(const Subgroup& t, const std::vector<Elem>& gens,
                                   const std::vector<std::vector<RootOfUnity>>& gram) {
  const FinAbGroup& g = t.parent();
  require(gram.size() == gens.size(), errc::invalid_parameter, "gram size mismatch");
  for (const auto& row : gram)
    require(row.size() == gens.size(), errc::invalid_parameter, "gram size mismatch");
  std::vector<std::int64_t> orders;
  std::int64_t prod = 1;
  for (const auto& x : gens) {
    require(t.contains(x), errc::invalid_parameter, "generator outside the subgroup");
    orders.push_back(g.order_of(x));
    prod *= orders.back();
  }
  require(prod == t.order(), errc::invalid_parameter,
          "generators do not decompose the subgroup as a direct product");

  // discrete logs: enumerate all exponent tuples
  std::size_t n = static_cast<std::size_t>(t.order());
  std::vector<std::vector<std::int64_t>> dlog(n);
  std::vector<std::int64_t> exps(gens.size(), 0);
  for (std::int64_t count = 0; count < prod; ++count) {
    Elem x = g.id();
    for (std::size_t i = 0; i < gens.size(); ++i) x = g.add(x, g.mul_int(gens[i], exps[i]));
    std::size_t pos = t.index_of(x);
    require(dlog[pos].empty() || count == 0, errc::invalid_parameter,
            "generators do not decompose the subgroup as a direct product");
    dlog[pos] = exps;
    for (std::size_t i = gens.size(); i-- > 0;) {
      if (++exps[i] < orders[i]) break;
      exps[i] = 0;
    }
  }

  std::vector<std::vector<RootOfUnity>> table(n, std::vector<RootOfUnity>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      RootOfUnity v = RootOfUnity::one();
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j)
          v = v.mul(gram[i][j].pow(dlog[a][i] * dlog[b][j]));
      table[a][b] = v;
    }
  return from_table(t, std::move(table));
}

RootOfUnity Bicharacter::eval(const Elem& a, const Elem& b) const {
  return table_[t_.index_of(a)][t_.index_of(b)];
}

Bicharacter Bicharacter::inverse() const {
  Bicharacter b = *this;
  for (auto& row : b.table_)
    for (auto& v : row) v = v.inv();
  return b;
}

namespace {

BicharacterReport check_one(const Bicharacter& beta) {
  BicharacterReport rep;
  const Subgroup& t = beta.subgroup();
  const FinAbGroup& g = t.parent();
  const auto& el = t.elements();
  std::size_t n = el.size();
  for (std::size_t i = 0; i < n && rep.multiplicative; ++i)
    for (std::size_t j = 0; j < n && rep.multiplicative; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::size_t ij = t.index_of(g.add(el[i], el[j]));
        if (beta.eval_idx(ij, k) != beta.eval_idx(i, k).mul(beta.eval_idx(j, k)) ||
            beta.eval_idx(k, ij) != beta.eval_idx(k, i).mul(beta.eval_idx(k, j))) {
          rep.multiplicative = false;
          rep.witness = "multiplicativity fails at (" + g.str(el[i]) + "," + g.str(el[j]) +
                        "," + g.str(el[k]) + ")";
          break;
        }
      }
  if (!rep.multiplicative) return rep;
  for (std::size_t i = 0; i < n; ++i)
    if (!beta.eval_idx(i, i).is_one()) {
      rep.alternating = false;
      rep.witness = "beta(t,t) != 1 at t = " + g.str(el[i]);
      return rep;
    }
  for (std::size_t i = 0; i < n; ++i) {
    bool radical = true;
    for (std::size_t j = 0; j < n && radical; ++j) radical = beta.eval_idx(i, j).is_one();
    if (radical && el[i] != g.id()) {
      rep.nondegenerate = false;
      rep.witness = "radical contains " + g.str(el[i]);
      return rep;
    }
  }
  return rep;
}

}  // namespace

BicharacterReport validate_bicharacter(const Bicharacter& beta, bool throwing) {
  BicharacterReport rep = check_one(beta);
  if (rep.valid()) {
    BicharacterReport inv = check_one(beta.inverse());
    if (!inv.valid()) {
      rep = inv;
      rep.witness = "inverse bicharacter: " + rep.witness;
    }
  }
  if (throwing && !rep.valid()) fail(errc::invalid_bicharacter, rep.witness);
  return rep;
}

SymplecticBasis symplectic_basis(const Subgroup& t, const Bicharacter& beta) {
  validate_bicharacter(beta);
  const FinAbGroup& g = t.parent();
  SymplecticBasis sb;

  // working set: element indices of the current orthogonal complement
  std::vector<Elem> rest = t.elements();
  while (rest.size() > 1) {
    // u: maximal order, lex-min among those
    Elem u;
    std::int64_t ord_u = 0;
    for (const auto& x : rest) {
      if (x == g.id()) continue;
      std::int64_t o = g.order_of(x);
      if (o > ord_u) {
        ord_u = o;
        u = x;
      }
    }
    // v: lex-min with beta(u,v) of full order ord_u, then power-normalized
    // so that beta(u,v) = zeta_{ord_u}
    Elem v;
    bool found = false;
    for (const auto& x : rest) {
      RootOfUnity b = beta.eval(u, x);
      if (b.order() == ord_u) {
        v = x;
        found = true;
        break;
      }
    }
    require(found, errc::invalid_bicharacter, "no symplectic partner; beta degenerate");
    // beta(u, v) = zeta^k with gcd(k, ord)=1; replace v by v^(k^-1 mod ord)
    std::int64_t k = beta.eval(u, v).num * (ord_u / beta.eval(u, v).den);
    std::int64_t kinv = 0;
    for (std::int64_t c = 1; c < ord_u; ++c)
      if ((k * c) % ord_u == 1) {
        kinv = c;
        break;
      }
    require(kinv != 0, errc::internal_error, "noninvertible pairing exponent");
    v = g.mul_int(v, kinv);
    require(beta.eval(u, v) == RootOfUnity::make(1, ord_u), errc::internal_error,
            "pairing normalization failed");

    sb.pairs.emplace_back(u, v);
    sb.orders.push_back(ord_u);

    std::vector<Elem> next;
    for (const auto& x : rest)
      if (beta.eval(x, u).is_one() && beta.eval(x, v).is_one()) next.push_back(x);
    require(next.size() * static_cast<std::size_t>(ord_u) * static_cast<std::size_t>(ord_u) ==
                rest.size(),
            errc::internal_error, "orthogonal complement has unexpected size");
    rest = std::move(next);
  }
  return sb;
}

std::vector<Bicharacter> enumerate_alternating_bicharacters(const Subgroup& t) {
  std::vector<Bicharacter> out;
  std::int64_t root = 0;
  if (!t.square_order(&root)) return out;
  if (t.order() == 1) {
    out.push_back(Bicharacter::trivial(t));
    return out;
  }
  Subgroup::Basis bas = t.basis();
  std::size_t k = bas.gens.size();
  // candidate exponents e_ij for i<j, values in Z_{gcd(o_i,o_j)}
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  std::vector<std::int64_t> mods;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      slots.emplace_back(i, j);
      mods.push_back(std::gcd(bas.orders[i], bas.orders[j]));
    }
  std::vector<std::int64_t> e(slots.size(), 0);
  while (true) {
    std::vector<std::vector<RootOfUnity>> gram(k, std::vector<RootOfUnity>(k, RootOfUnity::one()));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [i, j] = slots[s];
      gram[i][j] = RootOfUnity::make(e[s], mods[s]);
      gram[j][i] = gram[i][j].inv();
    }
    Bicharacter b = Bicharacter::from_gram(t, bas.gens, gram);
    BicharacterReport rep = validate_bicharacter(b, /*throwing=*/false);
    if (rep.valid()) out.push_back(b);
    std::size_t s = 0;
    for (; s < slots.size(); ++s) {
      if (++e[s] < mods[s]) break;
      e[s] = 0;
    }
    if (s == slots.size()) break;
  }
  std::sort(out.begin(), out.end(), [&](const Bicharacter& a, const Bicharacter& b) {
    std::size_t n = static_cast<std::size_t>(t.order());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (a.eval_idx(i, j) != b.eval_idx(i, j)) return a.eval_idx(i, j) < b.eval_idx(i, j);
      }
    return false;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gal
