#include "gal/lie.hpp"

#include <algorithm>
#include <utility>

#include "gal/error.hpp"

namespace gal {
namespace {

Elem tau_or_e(const CosetTable& ct, std::size_t c) {
  return ct.self_paired(c) ? tau_of(ct, c) : ct.group().id();
}

MatrixF unflatten(const MatrixF& rows, int r, int n) {
  MatrixF out(n, n);
  for (int k = 0; k < n * n; ++k) out.a[k] = rows.at(r, k);
  return out;
}

struct CutResult {
  Subspace space;
  std::vector<MatrixF> basis;
};

/// Kernel of r -> phi(r) + c r on the span of the given labels, optionally
/// intersected with the traceless matrices.
CutResult eigen_cut(const GradedMatrixAlgebra& m, const InvolutionData& data,
                    const std::vector<BasisTriple>& triples, std::int64_t c,
                    bool cut_trace) {
  const RootField& f = m.field();
  int nn = m.dim() * m.dim();
  if (triples.empty()) return {Subspace::zero(nn), {}};
  int k = static_cast<int>(triples.size());
  std::vector<MatrixF> mats;
  mats.reserve(triples.size());
  for (const BasisTriple& e : triples) mats.push_back(m.realize(e));

  MatrixF cond(nn + (cut_trace ? 1 : 0), k);
  for (int i = 0; i < k; ++i) {
    MatrixF img = mat_add(f, data.apply(f, mats[i]), mat_scale(f, c, mats[i]));
    for (int r = 0; r < nn; ++r) cond.at(r, i) = img.a[r];
    if (cut_trace) cond.at(nn, i) = mat_trace(f, mats[i]);
  }
  LinearSolution sol =
      solve_linear(f, cond, std::vector<std::int64_t>(cond.rows, 0));

  CutResult out;
  MatrixF rows(sol.nullspace.rows, nn);
  out.basis.reserve(sol.nullspace.rows);
  for (int r = 0; r < sol.nullspace.rows; ++r) {
    MatrixF x(m.dim(), m.dim());
    for (int i = 0; i < k; ++i) {
      std::int64_t coeff = sol.nullspace.at(r, i);
      if (coeff != 0) x = mat_add(f, x, mat_scale(f, coeff, mats[i]));
    }
    for (int j = 0; j < nn; ++j) rows.at(r, j) = x.a[j];
    out.basis.push_back(std::move(x));
  }
  out.space = Subspace::from_rows(f, rows);
  return out;
}

/// Keeps a maximal independent subset of `raw` in emission order.  Dependent
/// elements that are not a scalar multiple of a kept one are reported.
std::vector<MatrixF> extract_basis(const RootField& f, int ambient,
                                   const std::vector<MatrixF>& raw,
                                   Subspace* span_out,
                                   std::vector<std::string>* notes,
                                   const std::string& where) {
  Subspace span = Subspace::zero(ambient);
  std::vector<MatrixF> kept;
  for (const MatrixF& x : raw) {
    std::vector<std::int64_t> flat = mat_flatten(x);
    if (span.contains(f, flat)) {
      if (notes) {
        bool prop = false;
        for (const MatrixF& k : kept)
          if (mat_proportional(f, k, x)) prop = true;
        if (!prop)
          notes->push_back("dropped a dependent non-proportional element at " +
                           where);
      }
      continue;
    }
    span = span.sum(f, Subspace::from_rows(f, MatrixF(1, ambient, flat)));
    kept.push_back(x);
  }
  if (span_out) *span_out = span;
  return kept;
}

/// First (coset, v index, w index) whose pairing value is 1.
struct Anchor {
  bool found = false;
  std::size_t a = 0;
  int i = 0;
  int j = 0;
};

Anchor find_anchor(const GradedMatrixAlgebra& m, const InvolutionData& data) {
  const CosetTable& ct = m.cosets();
  Anchor out;
  for (std::size_t a = 0; a < ct.coset_count() && !out.found; ++a) {
    std::size_t w = ct.partner(a);
    const MatrixF& bt = data.btilde[w];
    for (int i = 0; i < m.kappa().mult[a] && !out.found; ++i)
      for (int j = 0; j < m.kappa().mult[w] && !out.found; ++j)
        if (bt.at(j, i) == 1) out = {true, a, i, j};
  }
  return out;
}

std::int64_t family_dim(LieFamily fam, std::int64_t n) {
  switch (fam) {
    case LieFamily::sl_i:
    case LieFamily::sl_ii:
      return n * n - 1;
    case LieFamily::orthogonal:
      return n * (n - 1) / 2;
    case LieFamily::symplectic:
      return n * (n + 1) / 2;
  }
  return 0;
}

GradedLieAlgebra build_bc(const FinAbGroup& g, const Subgroup& t,
                          const Bicharacter& beta, const KappaMap& kappa,
                          const Elem& g0, int delta,
                          const std::optional<RootField>& field) {
  GradedMatrixAlgebra m = build_model(g, t, beta, kappa, g0, field);
  require(m.dim() >= 2, errc::invalid_parameter, "matrix size must be at least 2");
  if (delta == -1)
    require(m.dim() % 2 == 0, errc::no_involution,
            "a skew form needs an even matrix size");
  const CosetTable& ct = m.cosets();
  const PauliAlgebra& d = m.pauli();
  const RootField& f = m.field();
  require(exist_involution(ct, m.kappa(), d, delta), errc::no_involution,
          "the multiplicities admit no form of this sign");
  InvolutionData data = build_form(m, mu_from_delta(ct, d, delta));

  GradedLieAlgebra l;
  l.family = delta == 1 ? LieFamily::orthogonal : LieFamily::symplectic;
  l.ambient = m;
  l.group = g;
  l.form = data;

  int nn = m.dim() * m.dim();
  const auto& kap = m.kappa().mult;
  for (const Elem& deg : g.elements()) {
    CutResult cut = eigen_cut(m, data, m.component_basis(deg), 1, false);
    std::vector<MatrixF> raw;
    for (std::size_t a = 0; a < ct.coset_count(); ++a) {
      std::size_t c = ct.shifted(a, g.neg(deg));
      if (kap[a] == 0 || kap[c] == 0) continue;
      std::size_t w = ct.partner(c);
      Elem tt = g.add(g.sub(deg, ct.gamma(a)), g.add(ct.gamma(c), tau_or_e(ct, c)));
      std::int64_t sg = d.sign_f(tt);
      for (int i = 0; i < kap[a]; ++i) {
        for (int j = 0; j < kap[w]; ++j) {
          MatrixF second =
              mat_scale(f, sg, tensor_element(m, data, w, j, tt, a, i));
          MatrixF first = tensor_element(m, data, a, i, tt, w, j);
          MatrixF e = delta == 1 ? mat_sub(f, first, second)
                                 : mat_add(f, first, second);
          if (!e.is_zero()) raw.push_back(std::move(e));
        }
      }
    }
    Subspace span;
    std::vector<MatrixF> kept = extract_basis(
        f, nn, raw, &span, &l.notes,
        std::string(lie_family_name(l.family)) + " degree " + g.str(deg));
    require(span == cut.space, errc::internal_error,
            "emitted elements span the wrong component");
    l.components.push_back(std::move(cut.space));
    l.graded_basis.push_back(std::move(kept));
    l.dim += l.components.back().dim();
  }
  require(l.dim == family_dim(l.family, m.dim()), errc::internal_error,
          "component dimensions do not add up");
  return l;
}

}  // namespace

const char* lie_family_name(LieFamily f) {
  switch (f) {
    case LieFamily::sl_i: return "sl-I";
    case LieFamily::sl_ii: return "sl-II";
    case LieFamily::orthogonal: return "so";
    case LieFamily::symplectic: return "sp";
  }
  return "?";
}

const Subspace& GradedLieAlgebra::component(const Elem& g) const {
  return components[static_cast<std::size_t>(group.index_of(g))];
}

const std::vector<MatrixF>& GradedLieAlgebra::basis_at(const Elem& g) const {
  return graded_basis[static_cast<std::size_t>(group.index_of(g))];
}

std::vector<std::int64_t> GradedLieAlgebra::component_dims() const {
  std::vector<std::int64_t> out;
  out.reserve(components.size());
  for (const Subspace& s : components) out.push_back(s.dim());
  return out;
}

MatrixF tensor_element(const GradedMatrixAlgebra& m, const InvolutionData& data,
                       std::size_t a, int i, const Elem& t, std::size_t c, int j) {
  const CosetTable& ct = m.cosets();
  const RootField& f = m.field();
  require(a < ct.coset_count() && c < ct.coset_count(), errc::invalid_parameter,
          "coset index out of range");
  require(i < m.kappa().mult[a] && j < m.kappa().mult[c], errc::invalid_parameter,
          "slot index out of range");
  std::size_t ap = ct.partner(c);
  Elem tau = tau_or_e(ct, c);
  std::int64_t twist = m.pauli().sigma_f(t, tau);
  Elem shift = ct.group().add(t, tau);
  const MatrixF& bt = data.btilde[c];
  std::vector<std::pair<std::int64_t, BasisTriple>> combo;
  for (int k = 0; k < bt.cols; ++k) {
    std::int64_t coeff = f.mul(bt.at(j, k), twist);
    if (coeff != 0) combo.push_back({coeff, BasisTriple{a, ap, i, k, shift}});
  }
  return m.realize(combo);
}

GradedLieAlgebra build_sl_i(const FinAbGroup& g, const Subgroup& t,
                            const Bicharacter& beta, const KappaMap& kappa,
                            const std::optional<RootField>& field) {
  GradedMatrixAlgebra m = build_model(g, t, beta, kappa, std::nullopt, field);
  require(m.dim() >= 2, errc::invalid_parameter, "matrix size must be at least 2");
  const RootField& f = m.field();
  int nn = m.dim() * m.dim();

  GradedLieAlgebra l;
  l.family = LieFamily::sl_i;
  l.ambient = m;
  l.group = g;

  std::size_t a0 = 0;
  while (a0 < m.cosets().coset_count() && m.kappa().mult[a0] == 0) ++a0;
  MatrixF e0 = m.realize(BasisTriple{a0, a0, 0, 0, g.id()});

  for (const Elem& deg : g.elements()) {
    std::vector<BasisTriple> triples = m.component_basis(deg);
    std::vector<MatrixF> basis;
    if (deg == g.id()) {
      for (const BasisTriple& e : triples) {
        if (e.a == a0 && e.i == 0 && e.j == 0) continue;
        MatrixF x = m.realize(e);
        if (e.i == e.j) x = mat_sub(f, x, e0);
        basis.push_back(std::move(x));
      }
    } else {
      basis.reserve(triples.size());
      for (const BasisTriple& e : triples) basis.push_back(m.realize(e));
    }
    MatrixF rows(static_cast<int>(basis.size()), nn);
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (int k = 0; k < nn; ++k) rows.at(static_cast<int>(r), k) = basis[r].a[k];
    Subspace comp = basis.empty() ? Subspace::zero(nn) : Subspace::from_rows(f, rows);
    require(comp.dim() == static_cast<int>(basis.size()), errc::internal_error,
            "emitted elements are dependent");
    l.components.push_back(std::move(comp));
    l.graded_basis.push_back(std::move(basis));
    l.dim += l.components.back().dim();
  }
  require(l.dim == family_dim(l.family, m.dim()), errc::internal_error,
          "component dimensions do not add up");
  return l;
}

GradedLieAlgebra build_sl_ii(const FinAbGroup& g, const Subgroup& h_sub, const Elem& h,
                             const Bicharacter& beta_bar, const KappaMap& kappa,
                             const RootOfUnity& mu0, const Elem& g0_bar,
                             const std::optional<RootField>& field) {
  require(h_sub.parent() == g && h_sub.contains(h), errc::invalid_parameter,
          "the distinguished element must lie in the chosen subgroup");
  require(g.order_of(h) == 2, errc::invalid_parameter,
          "the distinguished element must have order 2");
  require(h_sub.is_elementary_2(), errc::invalid_parameter,
          "the subgroup must be an elementary 2-group");

  Quotient q = Quotient::build(g, Subgroup::from_generators(g, {h}));
  const FinAbGroup& qg = q.group();
  std::vector<Elem> tbar_elems;
  for (const Elem& x : h_sub.elements()) tbar_elems.push_back(q.project(x));
  std::sort(tbar_elems.begin(), tbar_elems.end());
  tbar_elems.erase(std::unique(tbar_elems.begin(), tbar_elems.end()),
                   tbar_elems.end());
  Subgroup tbar(qg, tbar_elems);
  require(beta_bar.subgroup() == tbar, errc::invalid_parameter,
          "bicharacter does not live on the projected subgroup");

  Character chi = solve_character(g, {{h, RootOfUnity::minus_one()}});
  SymplecticBasis sb = symplectic_basis(tbar, beta_bar);
  std::vector<std::int64_t> orders = model_orders(qg, sb);
  for (const Elem& x : g.elements()) orders.push_back(chi.value(x).order());
  orders.push_back(mu0.order());
  RootField f = field ? *field : RootField::make(orders);

  GradedMatrixAlgebra m = build_model(qg, tbar, beta_bar, kappa, g0_bar, f);
  require(m.dim() >= 2, errc::invalid_parameter, "matrix size must be at least 2");
  Character chi2 = descend_square(q, chi);
  const CosetTable& ct = m.cosets();
  const PauliAlgebra& d = m.pauli();
  MuMap mu = mu_from_type2(ct, d, chi2, mu0);
  InvolutionData data = build_form(m, mu);
  CompatReport comp = check_compat(m, data, chi2);
  require(comp.pointwise && comp.criterion, errc::rejected_parameters,
          "the adjoint square is incompatible with the character");

  GradedLieAlgebra l;
  l.family = LieFamily::sl_ii;
  l.ambient = m;
  l.group = g;
  l.form = data;
  l.quotient = q;
  l.h = h;
  l.chi = chi;
  l.chi_sq = chi2;

  int nn = m.dim() * m.dim();
  const auto& kap = m.kappa().mult;
  Anchor anchor = find_anchor(m, data);
  require(anchor.found || m.kappa().total() == 0, errc::internal_error,
          "no pairing anchor found");

  for (const Elem& gg : g.elements()) {
    Elem gbar = q.project(gg);
    std::vector<BasisTriple> triples = m.component_basis(gbar);
    std::int64_t c = f.root(chi.value(gg));
    bool identity_bar = gbar == qg.id();
    CutResult refined = eigen_cut(m, data, triples, c, false);
    CutResult cut = identity_bar ? eigen_cut(m, data, triples, c, true) : refined;

    auto make = [&](std::size_t a, int i, int j) {
      std::size_t cc = ct.shifted(a, qg.neg(gbar));
      std::size_t w = ct.partner(cc);
      Elem tt = qg.add(qg.sub(gbar, ct.gamma(a)), qg.add(ct.gamma(cc), tau_or_e(ct, cc)));
      RootOfUnity co = mu0.mul(d.sign(tt)).mul(chi.value(gg)).mul(
          chi2.value(ct.gamma(a)).inv());
      return mat_sub(f, tensor_element(m, data, a, i, tt, w, j),
                     mat_scale(f, f.root(co), tensor_element(m, data, w, j, tt, a, i)));
    };

    MatrixF e0;
    std::int64_t tr0 = 0;
    if (identity_bar && anchor.found) {
      e0 = make(anchor.a, anchor.i, anchor.j);
      tr0 = mat_trace(f, e0);
    }
    std::vector<MatrixF> raw;
    for (std::size_t a = 0; a < ct.coset_count(); ++a) {
      std::size_t cc = ct.shifted(a, qg.neg(gbar));
      if (kap[a] == 0 || kap[cc] == 0) continue;
      std::size_t w = ct.partner(cc);
      for (int i = 0; i < kap[a]; ++i) {
        for (int j = 0; j < kap[w]; ++j) {
          MatrixF e = make(a, i, j);
          if (tr0 != 0) {
            std::int64_t tr = mat_trace(f, e);
            if (tr != 0) e = mat_sub(f, e, mat_scale(f, f.mul(tr, f.inv(tr0)), e0));
          }
          if (!e.is_zero()) raw.push_back(std::move(e));
        }
      }
    }
    Subspace span;
    std::vector<MatrixF> kept =
        extract_basis(f, nn, raw, &span, &l.notes,
                      std::string("sl-II degree ") + g.str(gg));
    require(span == cut.space, errc::internal_error,
            "emitted elements span the wrong component");
    l.refined.push_back(std::move(refined.space));
    l.components.push_back(std::move(cut.space));
    l.graded_basis.push_back(std::move(kept));
    l.dim += l.components.back().dim();
  }
  require(l.dim == family_dim(l.family, m.dim()), errc::internal_error,
          "component dimensions do not add up");

  for (const Elem& gg : g.elements()) {
    const Subspace& rg = l.refined[static_cast<std::size_t>(g.index_of(gg))];
    const Subspace& rgh =
        l.refined[static_cast<std::size_t>(g.index_of(g.add(gg, h)))];
    Elem gbar = q.project(gg);
    require(rg.intersect(f, rgh).dim() == 0 &&
                rg.dim() + rgh.dim() == m.component_dim(gbar),
            errc::internal_error, "refinement does not split the component");
  }
  return l;
}

GradedLieAlgebra build_orthogonal(const FinAbGroup& g, const Subgroup& t,
                                  const Bicharacter& beta, const KappaMap& kappa,
                                  const Elem& g0,
                                  const std::optional<RootField>& field) {
  return build_bc(g, t, beta, kappa, g0, 1, field);
}

GradedLieAlgebra build_symplectic(const FinAbGroup& g, const Subgroup& t,
                                  const Bicharacter& beta, const KappaMap& kappa,
                                  const Elem& g0,
                                  const std::optional<RootField>& field) {
  return build_bc(g, t, beta, kappa, g0, -1, field);
}

LieReport verify_lie(const GradedLieAlgebra& l) {
  LieReport rep;
  const RootField& f = l.ambient.field();
  const FinAbGroup& grp = l.group;
  int n = l.ambient.dim();
  int nn = n * n;
  std::vector<Elem> elems = grp.elements();

  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    if (rep.witness.empty()) rep.witness = msg;
  };

  std::int64_t total = 0;
  MatrixF all(static_cast<int>(l.dim), nn);
  int row = 0;
  for (std::size_t idx = 0; idx < elems.size(); ++idx) {
    const Elem& deg = elems[idx];
    const auto& basis = l.graded_basis[idx];
    const Subspace& comp = l.components[idx];
    total += comp.dim();
    if (static_cast<int>(basis.size()) != comp.dim())
      fail(rep.bases_match, "basis count differs from the component dimension");

    MatrixF rows(static_cast<int>(basis.size()), nn);
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (int k = 0; k < nn; ++k) rows.at(static_cast<int>(r), k) = basis[r].a[k];
    if (!basis.empty()) {
      Subspace span = Subspace::from_rows(f, rows);
      if (span != comp || span.dim() != static_cast<int>(basis.size()))
        fail(rep.bases_match, "basis does not span its component at degree " +
                                  grp.str(deg));
    }

    Elem amb_deg = l.quotient ? l.quotient->project(deg) : deg;
    Subspace amb = l.ambient.component_space(amb_deg);
    std::int64_t eig = 1;
    if (l.family == LieFamily::sl_ii) eig = f.root(l.chi->value(deg));
    for (const MatrixF& x : basis) {
      if (row < all.rows)
        for (int k = 0; k < nn; ++k) all.at(row, k) = x.a[k];
      ++row;
      if (!amb.contains(f, mat_flatten(x)))
        fail(rep.bases_match,
             "basis element is not homogeneous at degree " + grp.str(deg));
      switch (l.family) {
        case LieFamily::sl_i:
          if (mat_trace(f, x) != 0)
            fail(rep.family_laws, "basis element has nonzero trace");
          break;
        case LieFamily::orthogonal:
        case LieFamily::symplectic:
          if (l.form->apply(f, x) != mat_neg(f, x))
            fail(rep.family_laws, "basis element is not skew under the form");
          break;
        case LieFamily::sl_ii:
          if (mat_trace(f, x) != 0)
            fail(rep.family_laws, "basis element has nonzero trace");
          if (l.form->apply(f, x) != mat_scale(f, f.neg(eig), x))
            fail(rep.family_laws,
                 "basis element is not in the right character eigenspace");
          break;
      }
    }
  }

  if (total != l.dim || row != l.dim)
    fail(rep.direct_sum, "component dimensions do not add up");
  if (total == family_dim(l.family, n) && l.dim == total) {
    MatrixF stacked = all;
    std::vector<int> piv = rref_in_place(f, stacked);
    if (static_cast<std::int64_t>(piv.size()) != l.dim)
      fail(rep.direct_sum, "components overlap");
  } else {
    fail(rep.family_laws, "total dimension is wrong for the family");
  }

  if (l.family == LieFamily::orthogonal && l.form->delta != 1)
    fail(rep.family_laws, "form sign is not +1");
  if (l.family == LieFamily::symplectic && l.form->delta != -1)
    fail(rep.family_laws, "form sign is not -1");

  for (std::size_t gi = 0; gi < elems.size() && rep.bracket_closed; ++gi) {
    for (std::size_t gj = 0; gj < elems.size() && rep.bracket_closed; ++gj) {
      std::size_t target = static_cast<std::size_t>(
          grp.index_of(grp.add(elems[gi], elems[gj])));
      for (const MatrixF& x : l.graded_basis[gi]) {
        for (const MatrixF& y : l.graded_basis[gj]) {
          MatrixF b = mat_bracket(f, x, y);
          if (!l.components[target].contains(f, mat_flatten(b))) {
            fail(rep.bracket_closed,
                 "bracket escapes the component at degrees " +
                     grp.str(elems[gi]) + ", " + grp.str(elems[gj]));
            break;
          }
        }
        if (!rep.bracket_closed) break;
      }
    }
  }

  if (l.family == LieFamily::sl_ii) {
    const Elem& h = *l.h;
    bool proper = false;
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
      std::int64_t amb =
          l.ambient.component_dim(l.quotient->project(elems[idx]));
      std::size_t other =
          static_cast<std::size_t>(grp.index_of(grp.add(elems[idx], h)));
      if (l.refined[idx].dim() + l.refined[other].dim() != amb ||
          l.refined[idx].intersect(f, l.refined[other]).dim() != 0)
        fail(rep.family_laws, "refinement does not split the quotient component");
      if (amb > 0 && l.refined[idx].dim() != amb) proper = true;
    }
    if (proper) {
      bool found = false;
      for (std::size_t gi = 0; gi < elems.size() && !found; ++gi) {
        for (std::size_t gj = 0; gj < elems.size() && !found; ++gj) {
          std::size_t target = static_cast<std::size_t>(
              grp.index_of(grp.add(elems[gi], elems[gj])));
          for (int ri = 0; ri < l.refined[gi].dim() && !found; ++ri) {
            MatrixF x = unflatten(l.refined[gi].basis(), ri, n);
            for (int rj = 0; rj < l.refined[gj].dim() && !found; ++rj) {
              MatrixF y = unflatten(l.refined[gj].basis(), rj, n);
              if (!l.refined[target].contains(f, mat_flatten(mat_mul(f, x, y))))
                found = true;
            }
          }
        }
      }
      rep.refinement_strict = found;
      if (!found && rep.witness.empty())
        rep.witness = "every associative product stays homogeneous";
    }
  }
  return rep;
}

bool generates_ambient(const GradedLieAlgebra& l) {
  const RootField& f = l.ambient.field();
  int n = l.ambient.dim();
  int nn = n * n;
  Subspace span = Subspace::zero(nn);
  for (const auto& basis : l.graded_basis)
    for (const MatrixF& x : basis)
      span = span.sum(f, Subspace::from_rows(f, MatrixF(1, nn, mat_flatten(x))));
  bool grew = true;
  while (grew && span.dim() < nn) {
    grew = false;
    std::vector<MatrixF> pool;
    pool.reserve(span.dim());
    for (int r = 0; r < span.dim(); ++r) pool.push_back(unflatten(span.basis(), r, n));
    for (const MatrixF& x : pool) {
      for (const MatrixF& y : pool) {
        MatrixF p = mat_mul(f, x, y);
        if (!span.contains(f, mat_flatten(p))) {
          span = span.sum(f, Subspace::from_rows(f, MatrixF(1, nn, mat_flatten(p))));
          grew = true;
        }
      }
    }
  }
  return span.dim() == nn;
}

}  // namespace gal
