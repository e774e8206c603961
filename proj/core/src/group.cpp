#include "gal/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "gal/error.hpp"

namespace gal {

FinAbGroup::FinAbGroup(std::vector<std::int64_t> invariant_factors)
    : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    require(factors_[i] >= 2, errc::invalid_parameter, "invariant factor must be >= 2");
    if (i + 1 < factors_.size())
      require(factors_[i + 1] % factors_[i] == 0, errc::invalid_parameter,
              "invariant factors must form a divisibility chain");
    order_ *= factors_[i];
  }
  require(order_ <= (std::int64_t(1) << 40), errc::invalid_parameter, "group too large");
}

std::int64_t FinAbGroup::exponent() const {
  return factors_.empty() ? 1 : factors_.back();
}

Elem FinAbGroup::add(const Elem& a, const Elem& b) const {
  check(a);
  check(b);
  Elem r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
  return r;
}

Elem FinAbGroup::neg(const Elem& a) const {
  check(a);
  Elem r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = (factors_[i] - a[i]) % factors_[i];
  return r;
}

Elem FinAbGroup::mul_int(const Elem& a, std::int64_t k) const {
  check(a);
  Elem r(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::int64_t v = (a[i] * (k % factors_[i])) % factors_[i];
    if (v < 0) v += factors_[i];
    r[i] = v;
  }
  return r;
}

std::int64_t FinAbGroup::order_of(const Elem& a) const {
  check(a);
  std::int64_t o = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    o = std::lcm(o, factors_[i] / std::gcd(a[i], factors_[i]));
  return o;
}

bool FinAbGroup::is_valid(const Elem& a) const {
  if (a.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (a[i] < 0 || a[i] >= factors_[i]) return false;
  return true;
}

void FinAbGroup::check(const Elem& a) const {
  require(is_valid(a), errc::invalid_parameter, "element does not belong to the group");
}

std::int64_t FinAbGroup::index_of(const Elem& a) const {
  check(a);
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a[i];
  return idx;
}

Elem FinAbGroup::at(std::int64_t idx) const {
  require(idx >= 0 && idx < order_, errc::invalid_parameter, "element index out of range");
  Elem a(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    a[i] = idx % factors_[i];
    idx /= factors_[i];
  }
  return a;
}

std::vector<Elem> FinAbGroup::elements() const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t i = 0; i < order_; ++i) out.push_back(at(i));
  return out;
}

std::string FinAbGroup::str(const Elem& a) const {
  check(a);
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

FinAbGroup make_group(const std::vector<std::int64_t>& moduli) {
  // Collect prime power components, then rebuild the invariant factor chain.
  std::map<std::int64_t, std::vector<std::int64_t>> ppow;  // prime -> exponents
  for (std::int64_t m : moduli) {
    require(m >= 1, errc::invalid_parameter, "modulus must be positive");
    std::int64_t x = m;
    for (std::int64_t p = 2; p * p <= x; ++p) {
      if (x % p) continue;
      std::int64_t e = 0;
      while (x % p == 0) x /= p, ++e;
      ppow[p].push_back(e);
    }
    if (x > 1) ppow[x].push_back(1);
  }
  std::size_t rank = 0;
  for (auto& [p, es] : ppow) {
    std::sort(es.begin(), es.end(), std::greater<>());
    rank = std::max(rank, es.size());
  }
  std::vector<std::int64_t> inv(rank, 1);
  for (auto& [p, es] : ppow)
    for (std::size_t i = 0; i < es.size(); ++i) {
      std::int64_t q = 1;
      for (std::int64_t k = 0; k < es[i]; ++k) q *= p;
      inv[i] *= q;  // inv[0] largest
    }
  std::reverse(inv.begin(), inv.end());  // ascending divisibility
  return FinAbGroup(inv);
}

Subgroup::Subgroup(FinAbGroup parent, std::vector<Elem> elems_sorted)
    : parent_(std::move(parent)), elems_(std::move(elems_sorted)) {
  require(!elems_.empty() && elems_.front() == parent_.id(), errc::invalid_parameter,
          "subgroup must contain the identity and be sorted");
  for (const auto& x : elems_) parent_.check(x);
  require(std::is_sorted(elems_.begin(), elems_.end()), errc::invalid_parameter,
          "subgroup element list must be sorted");
  for (const auto& x : elems_)
    for (const auto& y : elems_)
      require(std::binary_search(elems_.begin(), elems_.end(), parent_.sub(x, y)),
              errc::invalid_parameter, "element list is not closed under the group operation");
}

Subgroup Subgroup::trivial(const FinAbGroup& g) { return Subgroup(g, {g.id()}); }

Subgroup Subgroup::full(const FinAbGroup& g) { return Subgroup(g, g.elements()); }

Subgroup Subgroup::from_generators(const FinAbGroup& g, const std::vector<Elem>& gens) {
  std::set<Elem> clo{g.id()};
  std::vector<Elem> frontier{g.id()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const auto& x : frontier)
      for (const auto& gen : gens) {
        Elem y = g.add(x, gen);
        if (clo.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return Subgroup(g, std::vector<Elem>(clo.begin(), clo.end()));
}

bool Subgroup::contains(const Elem& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::size_t Subgroup::index_of(const Elem& x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  require(it != elems_.end() && *it == x, errc::invalid_parameter,
          "element does not belong to the subgroup");
  return static_cast<std::size_t>(it - elems_.begin());
}

bool Subgroup::is_elementary_2() const {
  for (const auto& x : elems_)
    if (parent_.order_of(x) > 2) return false;
  return true;
}

bool Subgroup::square_order(std::int64_t* root) const {
  std::int64_t n = order();
  std::int64_t r = static_cast<std::int64_t>(std::llround(std::sqrt(double(n))));
  while (r * r < n) ++r;
  while (r * r > n) --r;
  if (root) *root = r;
  return r * r == n;
}

Subgroup::Basis Subgroup::basis() const {
  Basis best;
  std::int64_t target = order();
  if (target == 1) return best;
  // Candidates sorted by descending order, then lex; depth-first search for a
  // chain whose spans grow by exactly the order of each new generator.
  std::vector<Elem> cand(elems_.begin() + 1, elems_.end());
  std::stable_sort(cand.begin(), cand.end(), [&](const Elem& a, const Elem& b) {
    return parent_.order_of(a) > parent_.order_of(b);
  });
  struct Frame {
    std::vector<Elem> gens;
    std::vector<std::int64_t> orders;
    std::set<Elem> span;
  };
  Frame start;
  start.span.insert(parent_.id());
  std::vector<Frame> stack{start};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (static_cast<std::int64_t>(f.span.size()) == target) {
      best.gens = f.gens;
      best.orders = f.orders;
      return best;
    }
    for (auto it = cand.rbegin(); it != cand.rend(); ++it) {
      const Elem& b = *it;
      if (f.span.count(b)) continue;
      std::int64_t ob = parent_.order_of(b);
      if (!f.orders.empty() && ob > f.orders.back()) continue;
      // span' = span + <b>; direct iff size multiplies by ob
      std::set<Elem> span2;
      Elem p = parent_.id();
      for (std::int64_t k = 0; k < ob; ++k) {
        for (const auto& s : f.span) span2.insert(parent_.add(s, p));
        p = parent_.add(p, b);
      }
      if (static_cast<std::int64_t>(span2.size()) != static_cast<std::int64_t>(f.span.size()) * ob)
        continue;
      Frame g = f;
      g.gens.push_back(b);
      g.orders.push_back(ob);
      g.span = std::move(span2);
      stack.push_back(std::move(g));
    }
  }
  fail(errc::internal_error, "subgroup basis search failed");
}

std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g) {
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> out;
  std::vector<std::vector<Elem>> frontier;
  Subgroup triv = Subgroup::trivial(g);
  seen.insert(triv.elements());
  frontier.push_back(triv.elements());
  out.push_back(triv);
  auto all = g.elements();
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (const auto& elems : frontier) {
      for (const auto& x : all) {
        if (std::binary_search(elems.begin(), elems.end(), x)) continue;
        std::vector<Elem> gens(elems.begin(), elems.end());
        gens.push_back(x);
        Subgroup s = Subgroup::from_generators(g, gens);
        if (seen.insert(s.elements()).second) {
          next.push_back(s.elements());
          out.push_back(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

CosetTable CosetTable::build(const FinAbGroup& g, const Subgroup& t,
                             const std::optional<Elem>& g0) {
  require(t.parent() == g, errc::invalid_parameter, "subgroup has a different parent group");
  CosetTable ct;
  ct.sub_ = t;
  ct.g0_ = g0;
  if (g0) g.check(*g0);

  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (std::int64_t i = 0; i < g.order(); ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    Elem rep = g.at(i);
    std::vector<Elem> coset;
    for (const auto& s : t.elements()) coset.push_back(g.add(rep, s));
    std::sort(coset.begin(), coset.end());
    for (const auto& x : coset) used[static_cast<std::size_t>(g.index_of(x))] = true;
    ct.cosets_.push_back(std::move(coset));
  }
  std::sort(ct.cosets_.begin(), ct.cosets_.end());  // sorts by lex-min member

  ct.elem_to_coset_.assign(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t c = 0; c < ct.cosets_.size(); ++c)
    for (const auto& x : ct.cosets_[c])
      ct.elem_to_coset_[static_cast<std::size_t>(g.index_of(x))] = c;

  std::size_t nc = ct.cosets_.size();
  ct.gamma_.resize(nc);
  ct.partner_.assign(nc, 0);
  ct.self_paired_.assign(nc, false);

  if (!g0) {
    for (std::size_t c = 0; c < nc; ++c) ct.gamma_[c] = ct.cosets_[c].front();
    for (std::size_t c = 0; c < nc; ++c) ct.partner_[c] = c;
    return ct;
  }

  for (std::size_t c = 0; c < nc; ++c) {
    const Elem& a = ct.cosets_[c].front();
    // g0 * A * A = T  <=>  g0 + 2a in T
    Elem q = g.add(*g0, g.mul_int(a, 2));
    ct.self_paired_[c] = t.contains(q);
    Elem pr = g.sub(g.neg(a), *g0);  // representative of g0^-1 A^-1
    ct.partner_[c] = ct.elem_to_coset_[static_cast<std::size_t>(g.index_of(pr))];
  }
  std::vector<bool> assigned(nc, false);
  for (std::size_t c = 0; c < nc; ++c) {
    if (assigned[c]) continue;
    if (ct.self_paired_[c]) {
      ct.gamma_[c] = ct.cosets_[c].front();
      assigned[c] = true;
    } else {
      std::size_t p = ct.partner_[c];
      ct.gamma_[c] = ct.cosets_[c].front();
      ct.gamma_[p] = g.sub(g.neg(ct.gamma_[c]), *g0);  // forces (19)
      assigned[c] = assigned[p] = true;
    }
  }
  return ct;
}

std::size_t CosetTable::coset_of(const Elem& x) const {
  group().check(x);
  return elem_to_coset_[static_cast<std::size_t>(group().index_of(x))];
}

const Elem& CosetTable::g0() const {
  require(g0_.has_value(), errc::invalid_parameter, "coset table is not in paired mode");
  return *g0_;
}

bool CosetTable::self_paired(std::size_t idx) const {
  require(g0_.has_value(), errc::invalid_parameter, "coset table is not in paired mode");
  return self_paired_[idx];
}

std::size_t CosetTable::partner(std::size_t idx) const {
  require(g0_.has_value(), errc::invalid_parameter, "coset table is not in paired mode");
  return partner_[idx];
}

std::size_t CosetTable::shifted(std::size_t idx, const Elem& x) const {
  return coset_of(group().add(x, cosets_[idx].front()));
}

std::size_t CosetTable::inverse_coset(std::size_t idx) const {
  return coset_of(group().neg(cosets_[idx].front()));
}

namespace {

// Smith normal form over the integers for small matrices; tracks the left
// transform U with U*A*V = D.  Only U and the diagonal are needed.
struct Snf {
  std::vector<std::vector<std::int64_t>> u;
  std::vector<std::int64_t> diag;
};

Snf smith_left(std::vector<std::vector<std::int64_t>> a) {
  std::size_t r = a.size();
  std::size_t c = r ? a[0].size() : 0;
  Snf out;
  out.u.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) out.u[i][i] = 1;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(out.u[i], out.u[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t t = 0; t < c; ++t) a[dst][t] += k * a[src][t];
    for (std::size_t t = 0; t < r; ++t) out.u[dst][t] += k * out.u[src][t];
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < r; ++t) std::swap(a[t][i], a[t][j]);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t k) {
    for (std::size_t t = 0; t < r; ++t) a[t][dst] += k * a[t][src];
  };

  std::size_t k = 0;
  while (k < r && k < c) {
    // find nonzero entry with minimal |value| in the trailing submatrix
    std::size_t pi = k, pj = k;
    std::int64_t best = 0;
    for (std::size_t i = k; i < r; ++i)
      for (std::size_t j = k; j < c; ++j)
        if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
          best = std::abs(a[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    swap_rows(k, pi);
    swap_cols(k, pj);
    for (std::size_t i = k + 1; i < r; ++i)
      if (a[i][k] != 0) add_row(i, k, -(a[i][k] / a[k][k]));
    for (std::size_t j = k + 1; j < c; ++j)
      if (a[k][j] != 0) add_col(j, k, -(a[k][j] / a[k][k]));
    bool zeroed = true;
    for (std::size_t i = k + 1; i < r && zeroed; ++i) zeroed = a[i][k] == 0;
    for (std::size_t j = k + 1; j < c && zeroed; ++j) zeroed = a[k][j] == 0;
    if (!zeroed) continue;  // division remainders left a smaller entry behind
    // pivot must divide every remaining entry, else fold the offender in
    bool divides = true;
    for (std::size_t i = k + 1; i < r && divides; ++i)
      for (std::size_t j = k + 1; j < c && divides; ++j)
        if (a[i][j] % a[k][k] != 0) {
          add_row(k, i, 1);
          divides = false;
        }
    if (!divides) continue;
    ++k;
  }
  std::size_t m = std::min(r, c);
  out.diag.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.diag[i] = std::abs(a[i][i]);
  return out;
}

}  // namespace

Quotient Quotient::build(const FinAbGroup& g, const Subgroup& n) {
  require(n.parent() == g, errc::invalid_parameter, "subgroup has a different parent group");
  Quotient q;
  q.src_ = g;
  std::size_t r = g.rank();
  if (r == 0) {
    q.quot_ = FinAbGroup(std::vector<std::int64_t>{});
    q.lift_ = {g.id()};
    return q;
  }
  // Columns: diag(m) followed by lifts of the subgroup elements.
  std::vector<std::vector<std::int64_t>> a(r);
  for (std::size_t i = 0; i < r; ++i) {
    a[i].assign(r + n.elements().size(), 0);
    a[i][i] = g.factors()[i];
    for (std::size_t j = 0; j < n.elements().size(); ++j) a[i][r + j] = n.elements()[j][i];
  }
  Snf s = smith_left(std::move(a));
  std::vector<std::int64_t> inv;
  for (std::size_t i = 0; i < r; ++i) {
    require(s.diag[i] != 0, errc::internal_error, "quotient lattice not full rank");
    if (s.diag[i] > 1) {
      inv.push_back(s.diag[i]);
      q.rows_.push_back(i);
      q.diag_.push_back(s.diag[i]);
    }
  }
  q.quot_ = FinAbGroup(inv);
  q.u_ = s.u;

  q.lift_.assign(static_cast<std::size_t>(q.quot_.order()), Elem());
  for (std::int64_t i = 0; i < g.order(); ++i) {
    Elem x = g.at(i);
    Elem px = q.project(x);
    auto& slot = q.lift_[static_cast<std::size_t>(q.quot_.index_of(px))];
    if (slot.empty() || x < slot) slot = x;
  }
  return q;
}

Elem Quotient::project(const Elem& x) const {
  src_.check(x);
  Elem out(rows_.size());
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < src_.rank(); ++j) acc += u_[rows_[k]][j] * x[j];
    acc %= diag_[k];
    if (acc < 0) acc += diag_[k];
    out[k] = acc;
  }
  return out;
}

Elem Quotient::lift(const Elem& q) const {
  quot_.check(q);
  return lift_[static_cast<std::size_t>(quot_.index_of(q))];
}

}  // namespace gal
