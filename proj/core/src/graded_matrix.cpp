#include "gal/graded_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "gal/error.hpp"

namespace gal {

namespace {

std::vector<std::int64_t> flatten(const MatrixF& m) { return m.a; }

MatrixF row_matrix(const Subspace& s, int row, int n) {
  MatrixF m(n, n);
  for (int j = 0; j < n * n; ++j) m.a[j] = s.basis().at(row, j);
  return m;
}

}  // namespace

std::int64_t KappaMap::total() const {
  return std::accumulate(mult.begin(), mult.end(), std::int64_t{0});
}

KappaMap kappa_shift(const CosetTable& ct, const KappaMap& kappa, const Elem& g) {
  require(kappa.mult.size() == ct.coset_count(), errc::invalid_parameter,
          "multiplicity list does not match the coset table");
  KappaMap out;
  out.mult.resize(kappa.mult.size());
  Elem mg = ct.group().neg(g);
  for (std::size_t b = 0; b < ct.coset_count(); ++b)
    out.mult[b] = kappa.mult[ct.shifted(b, mg)];
  return out;
}

KappaMap kappa_reflect(const CosetTable& ct, const KappaMap& kappa) {
  require(kappa.mult.size() == ct.coset_count(), errc::invalid_parameter,
          "multiplicity list does not match the coset table");
  KappaMap out;
  out.mult.resize(kappa.mult.size());
  for (std::size_t a = 0; a < ct.coset_count(); ++a)
    out.mult[a] = kappa.mult[ct.inverse_coset(a)];
  return out;
}

GradedMatrixAlgebra GradedMatrixAlgebra::build(std::shared_ptr<const PauliAlgebra> d,
                                               CosetTable cosets, KappaMap kappa) {
  require(d != nullptr, errc::invalid_parameter, "missing division part");
  require(kappa.mult.size() == cosets.coset_count(), errc::invalid_parameter,
          "multiplicity list does not match the coset table");
  require(d->support() == cosets.subgroup(), errc::invalid_parameter,
          "division part lives on a different support");
  for (std::int64_t m : kappa.mult)
    require(m >= 0, errc::invalid_parameter, "negative multiplicity");
  require(kappa.total() >= 1, errc::invalid_parameter, "empty multiplicity map");

  GradedMatrixAlgebra alg;
  alg.d_ = std::move(d);
  alg.cosets_ = std::move(cosets);
  alg.kappa_ = std::move(kappa);
  int l = alg.d_->dim();
  alg.offsets_.resize(alg.cosets_.coset_count());
  int off = 0;
  for (std::size_t a = 0; a < alg.cosets_.coset_count(); ++a) {
    alg.offsets_[a] = off;
    off += static_cast<int>(alg.kappa_.mult[a]) * l;
  }
  alg.n_ = off;
  return alg;
}

int GradedMatrixAlgebra::slot_offset(std::size_t a, int i) const {
  return offsets_[a] + i * d_->dim();
}

Elem GradedMatrixAlgebra::degree(const BasisTriple& e) const {
  const FinAbGroup& g = group();
  return g.add(cosets_.gamma(e.a), g.sub(e.t, cosets_.gamma(e.b)));
}

MatrixF GradedMatrixAlgebra::realize(const BasisTriple& e) const {
  MatrixF m(n_, n_);
  mat_place(m, slot_offset(e.a, e.i), slot_offset(e.b, e.j), d_->x(e.t));
  return m;
}

MatrixF GradedMatrixAlgebra::realize(
    const std::vector<std::pair<std::int64_t, BasisTriple>>& combo) const {
  const RootField& f = field();
  MatrixF m(n_, n_);
  for (const auto& [c, e] : combo) {
    const MatrixF& x = d_->x(e.t);
    int r0 = slot_offset(e.a, e.i), c0 = slot_offset(e.b, e.j);
    for (int r = 0; r < x.rows; ++r)
      for (int s = 0; s < x.cols; ++s)
        m.at(r0 + r, c0 + s) = f.add(m.at(r0 + r, c0 + s), f.mul(f.reduce(c), x.at(r, s)));
  }
  return m;
}

std::vector<BasisTriple> GradedMatrixAlgebra::component_basis(const Elem& deg) const {
  const FinAbGroup& g = group();
  const Subgroup& t = d_->support();
  std::vector<BasisTriple> out;
  for (std::size_t a = 0; a < cosets_.coset_count(); ++a) {
    if (!kappa_.mult[a]) continue;
    for (std::size_t b = 0; b < cosets_.coset_count(); ++b) {
      if (!kappa_.mult[b]) continue;
      Elem tt = g.add(g.sub(deg, cosets_.gamma(a)), cosets_.gamma(b));
      if (!t.contains(tt)) continue;
      for (int i = 0; i < kappa_.mult[a]; ++i)
        for (int j = 0; j < kappa_.mult[b]; ++j)
          out.push_back(BasisTriple{a, b, i, j, tt});
    }
  }
  return out;
}

std::int64_t GradedMatrixAlgebra::component_dim(const Elem& deg) const {
  const FinAbGroup& g = group();
  std::int64_t dim = 0;
  for (std::size_t b = 0; b < cosets_.coset_count(); ++b) {
    if (!kappa_.mult[b]) continue;
    std::size_t a = cosets_.coset_of(g.add(deg, cosets_.gamma(b)));
    dim += kappa_.mult[a] * kappa_.mult[b];
  }
  return dim;
}

std::vector<Elem> GradedMatrixAlgebra::support() const {
  std::vector<Elem> out;
  for (const Elem& g : group().elements())
    if (component_dim(g) > 0) out.push_back(g);
  return out;
}

Subspace GradedMatrixAlgebra::component_space(const Elem& deg) const {
  std::vector<BasisTriple> basis = component_basis(deg);
  MatrixF rows(static_cast<int>(basis.size()), n_ * n_);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    MatrixF m = realize(basis[k]);
    for (int j = 0; j < n_ * n_; ++j) rows.at(static_cast<int>(k), j) = m.a[j];
  }
  return Subspace::from_rows(field(), rows);
}

std::optional<std::pair<std::int64_t, BasisTriple>> GradedMatrixAlgebra::unit_product(
    const BasisTriple& x, const BasisTriple& y) const {
  if (x.b != y.a || x.j != y.i) return std::nullopt;
  BasisTriple p{x.a, y.b, x.i, y.j, group().add(x.t, y.t)};
  return std::make_pair(d_->sigma_f(x.t, y.t), p);
}

std::vector<std::int64_t> model_orders(const FinAbGroup& g, const SymplecticBasis& sb) {
  std::vector<std::int64_t> orders{1, g.exponent()};
  for (std::int64_t o : sb.orders) orders.push_back(o);
  return orders;
}

GradedMatrixAlgebra build_model(const FinAbGroup& g, const Subgroup& t,
                                const Bicharacter& beta, const KappaMap& kappa,
                                const std::optional<Elem>& g0,
                                const std::optional<RootField>& field) {
  require(t.parent() == g, errc::invalid_parameter, "support of a different group");
  RootField f;
  if (field) {
    f = *field;
    require(f.n() % g.exponent() == 0, errc::invalid_field,
            "field cannot represent all degree characters");
  } else {
    f = RootField::make(model_orders(g, symplectic_basis(t, beta)));
  }
  auto d = std::make_shared<PauliAlgebra>(PauliAlgebra::build(t, beta, f));
  return GradedMatrixAlgebra::build(std::move(d), CosetTable::build(g, t, g0), kappa);
}

GradingReport verify_grading(const RootField& f, const FinAbGroup& g,
                             const std::vector<std::pair<Elem, Subspace>>& comps,
                             int n) {
  GradingReport rep;
  std::map<Elem, std::size_t> by_deg;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    g.check(comps[k].first);
    require(comps[k].second.ambient() == n * n, errc::invalid_parameter,
            "component has wrong ambient dimension");
    require(!by_deg.count(comps[k].first), errc::invalid_parameter,
            "duplicate degree in decomposition");
    by_deg[comps[k].first] = k;
  }

  std::int64_t dim_total = 0;
  Subspace acc = Subspace::zero(n * n);
  for (const auto& [deg, s] : comps) {
    dim_total += s.dim();
    acc = acc.sum(f, s);
  }
  if (acc.dim() != dim_total) {
    rep.direct = false;
    rep.witness = "components overlap: total rank " + std::to_string(acc.dim()) +
                  " of " + std::to_string(dim_total);
  }
  if (acc.dim() != n * n) {
    rep.spans = false;
    if (rep.witness.empty())
      rep.witness = "components span rank " + std::to_string(acc.dim()) + " of " +
                    std::to_string(n * n);
  }

  std::vector<std::int64_t> id = flatten(MatrixF::identity(n));
  auto it = by_deg.find(g.id());
  if (it == by_deg.end() || !comps[it->second].second.contains(f, id)) {
    rep.unital = false;
    if (rep.witness.empty())
      rep.witness = "identity is not in the trivial-degree component";
  }

  for (const auto& [dx, sx] : comps) {
    if (!rep.multiplicative) break;
    for (const auto& [dy, sy] : comps) {
      if (!rep.multiplicative) break;
      Elem dz = g.add(dx, dy);
      auto itz = by_deg.find(dz);
      for (int r = 0; r < sx.dim() && rep.multiplicative; ++r)
        for (int s = 0; s < sy.dim(); ++s) {
          MatrixF prod = mat_mul(f, row_matrix(sx, r, n), row_matrix(sy, s, n));
          bool ok = itz == by_deg.end()
                        ? prod.is_zero()
                        : comps[itz->second].second.contains(f, flatten(prod));
          if (!ok) {
            rep.multiplicative = false;
            if (rep.witness.empty())
              rep.witness = "product of degrees " + g.str(dx) + " and " + g.str(dy) +
                            " leaves the component of degree " + g.str(dz);
            break;
          }
        }
    }
  }
  return rep;
}

GradingReport verify_model(const GradedMatrixAlgebra& m, int dense_limit) {
  GradingReport rep;
  const FinAbGroup& g = m.group();
  const RootField& f = m.field();

  std::int64_t total = 0;
  for (const Elem& deg : g.elements()) total += m.component_dim(deg);
  std::int64_t n2 = static_cast<std::int64_t>(m.dim()) * m.dim();
  if (total != n2) {
    rep.spans = rep.direct = false;
    rep.witness = "component dimensions add to " + std::to_string(total) + " of " +
                  std::to_string(n2);
    return rep;
  }

  std::vector<BasisTriple> all;
  for (const Elem& deg : g.elements()) {
    auto part = m.component_basis(deg);
    if (static_cast<std::int64_t>(part.size()) != m.component_dim(deg)) {
      rep.direct = false;
      rep.witness = "component basis of degree " + g.str(deg) +
                    " disagrees with its dimension";
      return rep;
    }
    all.insert(all.end(), part.begin(), part.end());
  }

  for (const BasisTriple& x : all)
    for (const BasisTriple& y : all) {
      auto prod = m.unit_product(x, y);
      if (!prod) continue;
      Elem want = g.add(m.degree(x), m.degree(y));
      if (m.degree(prod->second) != want) {
        rep.multiplicative = false;
        rep.witness = "degree of a basis product is off at " + g.str(want);
        return rep;
      }
      if (prod->first == 0) {
        rep.multiplicative = false;
        rep.witness = "vanishing twist scalar";
        return rep;
      }
    }

  if (m.dim() <= dense_limit) {
    for (const BasisTriple& x : all)
      for (const BasisTriple& y : all) {
        MatrixF lhs = mat_mul(f, m.realize(x), m.realize(y));
        auto prod = m.unit_product(x, y);
        MatrixF rhs = prod ? mat_scale(f, prod->first, m.realize(prod->second))
                           : MatrixF(m.dim(), m.dim());
        if (lhs != rhs) {
          rep.multiplicative = false;
          rep.witness = "realized product disagrees with the structure scalars";
          return rep;
        }
      }
    MatrixF id(m.dim(), m.dim());
    for (std::size_t a = 0; a < m.cosets().coset_count(); ++a)
      for (int i = 0; i < m.kappa().mult[a]; ++i) {
        BasisTriple e{a, a, i, i, g.id()};
        id = mat_add(f, id, m.realize(e));
      }
    if (id != MatrixF::identity(m.dim())) {
      rep.unital = false;
      rep.witness = "diagonal units do not add to the identity";
    }
  }
  return rep;
}

ElementaryGrading elementary_grading(const FinAbGroup& g, const std::vector<Elem>& degs,
                                     const std::optional<RootField>& field) {
  require(!degs.empty(), errc::invalid_parameter, "empty degree tuple");
  for (const Elem& x : degs) g.check(x);
  Subgroup t = Subgroup::trivial(g);
  CosetTable ct = CosetTable::build(g, t);
  KappaMap kappa;
  kappa.mult.assign(ct.coset_count(), 0);
  for (const Elem& x : degs) ++kappa.mult[ct.coset_of(x)];
  GradedMatrixAlgebra alg =
      build_model(g, t, Bicharacter::trivial(t), kappa, std::nullopt, field);

  ElementaryGrading out;
  out.algebra = alg;
  out.permutation.resize(degs.size());
  std::vector<int> used(ct.coset_count(), 0);
  for (std::size_t i = 0; i < degs.size(); ++i) {
    std::size_t a = ct.coset_of(degs[i]);
    out.permutation[i] = alg.slot_offset(a, used[a]++);
  }
  // The permuted unit E_(perm i, perm j) must carry degree degs[i] - degs[j].
  for (std::size_t i = 0; i < degs.size(); ++i)
    for (std::size_t j = 0; j < degs.size(); ++j) {
      std::size_t a = ct.coset_of(degs[i]), b = ct.coset_of(degs[j]);
      BasisTriple e{a, b, out.permutation[i] - alg.slot_offset(a, 0),
                    out.permutation[j] - alg.slot_offset(b, 0), g.id()};
      require(alg.degree(e) == g.sub(degs[i], degs[j]), errc::internal_error,
              "permuted unit has the wrong degree");
    }
  return out;
}

MatrixF Embedding::apply(const MatrixF& m, int big_n) const {
  require(m.rows == m.cols && m.rows == static_cast<int>(row_map.size()),
          errc::invalid_parameter, "matrix does not match the embedding source");
  MatrixF out(big_n, big_n);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(row_map[i], row_map[j]) = m.at(i, j);
  return out;
}

Embedding embed(const GradedMatrixAlgebra& sub, const GradedMatrixAlgebra& big) {
  require(sub.group() == big.group(), errc::invalid_parameter,
          "embedding across different groups");
  require(sub.pauli().support() == big.pauli().support() &&
              sub.pauli().beta() == big.pauli().beta(),
          errc::invalid_parameter, "embedding across different division parts");
  require(sub.field() == big.field(), errc::invalid_parameter,
          "embedding across different fields");
  for (std::size_t a = 0; a < sub.cosets().coset_count(); ++a)
    require(sub.kappa().mult[a] <= big.kappa().mult[a], errc::invalid_parameter,
            "target multiplicities do not dominate the source");
  Embedding e;
  e.row_map.resize(sub.dim());
  int l = static_cast<int>(sub.block_dim());
  for (std::size_t a = 0; a < sub.cosets().coset_count(); ++a)
    for (int i = 0; i < sub.kappa().mult[a]; ++i)
      for (int r = 0; r < l; ++r)
        e.row_map[sub.slot_offset(a, i) + r] = big.slot_offset(a, i) + r;
  return e;
}

namespace {

/// Closes a spanning set of matrices into a unital subalgebra of M_n.
Subspace close_algebra(const RootField& f, Subspace span, int n) {
  span = span.sum(f, Subspace::from_rows(
                        f, MatrixF(1, n * n, flatten(MatrixF::identity(n)))));
  while (true) {
    int before = span.dim();
    MatrixF prods(before * before, n * n);
    for (int r = 0; r < before; ++r)
      for (int s = 0; s < before; ++s) {
        MatrixF p = mat_mul(f, row_matrix(span, r, n), row_matrix(span, s, n));
        for (int j = 0; j < n * n; ++j) prods.at(r * before + s, j) = p.a[j];
      }
    span = span.sum(f, Subspace::from_rows(f, prods));
    if (span.dim() == before) return span;
  }
}

std::vector<MatrixF> center_of(const RootField& f, const Subspace& alg, int n) {
  int m = alg.dim();
  MatrixF sys(m * n * n, m);
  for (int j = 0; j < m; ++j) {
    MatrixF uj = row_matrix(alg, j, n);
    for (int k = 0; k < m; ++k) {
      MatrixF c = mat_bracket(f, row_matrix(alg, k, n), uj);
      for (int e = 0; e < n * n; ++e) sys.at(j * n * n + e, k) = c.a[e];
    }
  }
  LinearSolution sol = solve_linear(f, sys, std::vector<std::int64_t>(m * n * n, 0));
  std::vector<MatrixF> out;
  for (int r = 0; r < sol.nullspace.rows; ++r) {
    MatrixF z(n, n);
    for (int k = 0; k < m; ++k) {
      std::int64_t c = sol.nullspace.at(r, k);
      if (!c) continue;
      z = mat_add(f, z, mat_scale(f, c, row_matrix(alg, k, n)));
    }
    out.push_back(z);
  }
  return out;
}

/// Monic minimal polynomial coefficients (low to high) of z acting on F^n.
std::vector<std::int64_t> min_poly(const RootField& f, const MatrixF& z) {
  int n = z.rows;
  std::vector<std::vector<std::int64_t>> powers{flatten(MatrixF::identity(n))};
  MatrixF cur = MatrixF::identity(n);
  for (int d = 1;; ++d) {
    cur = mat_mul(f, cur, z);
    // Is cur a combination of the previous powers?
    MatrixF sys(n * n, d);
    for (int k = 0; k < d; ++k)
      for (int e = 0; e < n * n; ++e) sys.at(e, k) = powers[k][e];
    LinearSolution sol = solve_linear(f, sys, flatten(cur));
    if (sol.feasible) {
      std::vector<std::int64_t> coeffs(d + 1);
      for (int k = 0; k < d; ++k) coeffs[k] = f.neg(sol.particular[k]);
      coeffs[d] = 1;
      return coeffs;
    }
    powers.push_back(flatten(cur));
  }
}

/// Splits a monic polynomial into linear factors; throws when it does not
/// split over the field.
std::vector<std::pair<std::int64_t, int>> split_roots(const RootField& f,
                                                      std::vector<std::int64_t> poly) {
  std::vector<std::pair<std::int64_t, int>> roots;
  auto degree = [&](const std::vector<std::int64_t>& q) {
    int d = static_cast<int>(q.size()) - 1;
    while (d > 0 && q[d] == 0) --d;
    return d;
  };
  while (degree(poly) > 0) {
    std::int64_t found = -1;
    for (std::int64_t x = 0; x < f.p(); ++x) {
      std::int64_t acc = 0;
      for (int k = degree(poly); k >= 0; --k) acc = f.add(f.mul(acc, x), poly[k]);
      if (acc == 0) {
        found = x;
        break;
      }
    }
    require(found >= 0, errc::unsupported,
            "identity component does not split over the chosen field");
    int mult = 0;
    while (true) {
      // Synthetic division by (x - found).
      int d = degree(poly);
      std::vector<std::int64_t> quot(d);
      std::int64_t carry = 0;
      for (int k = d; k >= 1; --k) {
        carry = f.add(poly[k], f.mul(carry, found));
        quot[k - 1] = carry;
      }
      std::int64_t rem = f.add(poly[0], f.mul(carry, found));
      if (rem != 0) break;
      poly = quot;
      poly.push_back(0);
      ++mult;
      if (degree(poly) == 0) break;
    }
    roots.emplace_back(found, mult);
  }
  return roots;
}

std::vector<std::int64_t> generic_block_sizes(const RootField& f,
                                              const Subspace& e_comp, int n) {
  Subspace alg = close_algebra(f, e_comp, n);
  std::vector<MatrixF> center = center_of(f, alg, n);

  // Column spaces as subspaces of F^n, refined by generalized eigenspaces of
  // every central element.
  std::vector<Subspace> parts{Subspace::from_rows(f, MatrixF::identity(n))};
  for (const MatrixF& z : center) {
    auto roots = split_roots(f, min_poly(f, z));
    if (roots.size() <= 1) continue;
    std::vector<Subspace> next;
    for (const auto& [lambda, mult] : roots) {
      MatrixF shifted = mat_sub(f, z, mat_scale(f, lambda, MatrixF::identity(n)));
      MatrixF power = mat_pow(f, shifted, mult);
      LinearSolution ker = solve_linear(f, power, std::vector<std::int64_t>(n, 0));
      Subspace eig = Subspace::from_rows(f, ker.nullspace);
      for (const Subspace& part : parts) {
        Subspace cut = part.intersect(f, eig);
        if (cut.dim() > 0) next.push_back(cut);
      }
    }
    parts = std::move(next);
  }
  std::vector<std::int64_t> sizes;
  for (const Subspace& part : parts) sizes.push_back(part.dim());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<std::int64_t> support_factors(const FinAbGroup& g,
                                          const std::vector<Elem>& support) {
  Subgroup s = Subgroup::from_generators(g, support);
  return make_group(s.basis().orders).factors();
}

}  // namespace

Fingerprint fingerprint(const RootField& f, const FinAbGroup& g,
                        const std::vector<std::pair<Elem, Subspace>>& comps, int n) {
  Fingerprint fp;
  Subspace e_comp = Subspace::zero(n * n);
  for (const auto& [deg, s] : comps) {
    if (s.dim() == 0) continue;
    fp.support.push_back(deg);
    fp.dims.push_back(s.dim());
    if (deg == g.id()) e_comp = s;
  }
  std::vector<std::size_t> order(fp.support.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fp.support[a] < fp.support[b];
  });
  std::vector<Elem> sup;
  std::vector<std::int64_t> dims;
  for (std::size_t k : order) {
    sup.push_back(fp.support[k]);
    dims.push_back(fp.dims[k]);
  }
  fp.support = std::move(sup);
  fp.dims = std::move(dims);
  fp.subgroup_factors = support_factors(g, fp.support);
  fp.block_sizes = generic_block_sizes(f, e_comp, n);
  return fp;
}

Fingerprint fingerprint(const GradedMatrixAlgebra& m) {
  Fingerprint fp;
  for (const Elem& deg : m.group().elements()) {
    std::int64_t d = m.component_dim(deg);
    if (!d) continue;
    fp.support.push_back(deg);
    fp.dims.push_back(d);
  }
  fp.subgroup_factors = support_factors(m.group(), fp.support);
  for (std::int64_t mult : m.kappa().mult)
    if (mult > 0) fp.block_sizes.push_back(mult * m.block_dim());
  std::sort(fp.block_sizes.begin(), fp.block_sizes.end());
  return fp;
}

}  // namespace gal
