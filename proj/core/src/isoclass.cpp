#include "gal/isoclass.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gal/error.hpp"

namespace gal {

namespace {

int kind_category(ParamKind k) {
  switch (k) {
    case ParamKind::assoc: return 0;
    case ParamKind::assoc_antiauto: return 1;
    case ParamKind::assoc_involution: return 2;
    case ParamKind::sl_i:
    case ParamKind::sl_ii: return 3;
    case ParamKind::so:
    case ParamKind::sp: return 4;
  }
  return -1;
}

void check_same_group(const ParamTuple& p, const ParamTuple& q) {
  require(p.group == q.group, errc::invalid_parameter,
          "equivalence is decided inside one grading group");
}

IsoDecision miss(std::string what) {
  IsoDecision d;
  d.reason = std::move(what);
  return d;
}

Elem g0_shift(const FinAbGroup& g, const Elem& g0, const Elem& s) {
  return g.sub(g0, g.mul_int(s, 2));
}

struct QuotientData {
  Quotient q;
  Character chi;
};

QuotientData quotient_data(const ParamTuple& p) {
  require(p.group.is_valid(p.h) && p.group.order_of(p.h) == 2,
          errc::invalid_parameter, "the distinguished element must have order 2");
  Quotient qu = Quotient::build(p.group, Subgroup::from_generators(p.group, {p.h}));
  require(qu.group() == p.beta.subgroup().parent(), errc::invalid_parameter,
          "the quotient parameters live on a different group");
  Character chi =
      solve_character(p.group, {{p.h, RootOfUnity::minus_one()}});
  return {std::move(qu), std::move(chi)};
}

MatrixF submat(const MatrixF& x, int r0, int c0, int rows, int cols) {
  MatrixF out(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = x.at(r0 + i, c0 + j);
  return out;
}

/// Block matrix of the shift g between two models over the same support:
/// the slots of coset A go to the slots of gA through X_(s(A)) with
/// s(A) = gamma'(gA)^-1 g gamma(A), scaled by alpha[A].
MatrixF conjugator(const RootField& f, const GradedMatrixAlgebra& src,
                   const GradedMatrixAlgebra& dst, const Elem& g,
                   const std::vector<std::int64_t>& alpha) {
  const CosetTable& cs = src.cosets();
  const CosetTable& cd = dst.cosets();
  const FinAbGroup& grp = src.group();
  int n = src.dim();
  int l = static_cast<int>(src.block_dim());
  MatrixF u(n, n);
  for (std::size_t a = 0; a < cs.coset_count(); ++a) {
    int mult = static_cast<int>(src.kappa().mult[a]);
    if (mult == 0) continue;
    std::size_t ad = cd.shifted(a, g);
    require(dst.kappa().mult[ad] == mult, errc::verification_failure,
            "the multiplicities do not transport along the shift");
    Elem s = grp.sub(grp.add(g, cs.gamma(a)), cd.gamma(ad));
    MatrixF blk = mat_scale(f, alpha[a], dst.pauli().x(s));
    for (int i = 0; i < mult; ++i)
      mat_place(u, dst.slot_offset(ad, i), src.slot_offset(a, i), blk);
  }
  return u;
}

/// Per-coset scalars making the pulled back Gram matrix one scalar multiple
/// of the original: u0^T S' u0 is blockwise proportional to S, anchors are
/// fixed to 1 and self-paired cosets take a square root.
std::vector<std::int64_t> solve_alpha(const RootField& f,
                                      const GradedMatrixAlgebra& src,
                                      const InvolutionData& sform,
                                      const InvolutionData& dform,
                                      const MatrixF& u0) {
  const CosetTable& ct = src.cosets();
  int l = static_cast<int>(src.block_dim());
  std::size_t nc = ct.coset_count();
  MatrixF pulled = mat_mul(f, mat_mul(f, mat_transpose(u0), dform.s), u0);

  std::vector<std::int64_t> ratio(nc, 1);
  std::vector<bool> occupied(nc, false);
  for (std::size_t a = 0; a < nc; ++a) {
    if (src.kappa().mult[a] == 0) continue;
    occupied[a] = true;
    std::size_t pa = ct.partner(a);
    int rows = static_cast<int>(src.kappa().mult[a]) * l;
    int cols = static_cast<int>(src.kappa().mult[pa]) * l;
    MatrixF sb = submat(sform.s, src.slot_offset(a, 0), src.slot_offset(pa, 0),
                        rows, cols);
    MatrixF mb = submat(pulled, src.slot_offset(a, 0), src.slot_offset(pa, 0),
                        rows, cols);
    auto c = mat_proportional(f, sb, mb);
    require(c.has_value(), errc::verification_failure,
            "the pulled back form is not blockwise proportional");
    ratio[a] = *c;
  }

  std::int64_t target = 0;
  for (std::size_t a = 0; a < nc && target == 0; ++a)
    if (occupied[a] && ct.self_paired(a)) target = ratio[a];
  for (std::size_t a = 0; a < nc && target == 0; ++a)
    if (occupied[a]) target = ratio[a];
  require(target != 0, errc::verification_failure, "the form has no support");

  std::vector<std::int64_t> alpha(nc, 1);
  for (std::size_t a = 0; a < nc; ++a) {
    if (!occupied[a]) continue;
    if (ct.self_paired(a)) {
      auto root = f.sqrt(f.mul(target, f.inv(ratio[a])));
      require(root.has_value(), errc::verification_failure,
              "the form normalization needs a missing square root");
      alpha[a] = *root;
    } else if (a < ct.partner(a)) {
      alpha[ct.partner(a)] = f.mul(target, f.inv(ratio[a]));
    }
  }
  return alpha;
}

/// Witness of the transpose branch: v such that r -> v (-r^T) v^-1 maps the
/// components of the (beta, kappa) model onto those of the
/// (beta^-1, reflected kappa shifted by g) model.  Transposed Pauli
/// generators are intertwined into the target division algebra and slots are
/// rerouted through the inverse coset with a translation fixing the degree.
MatrixF reversal_conjugator(const RootField& f, const GradedMatrixAlgebra& m,
                            const GradedMatrixAlgebra& mp, const Elem& g) {
  const CosetTable& ct = m.cosets();
  const FinAbGroup& grp = m.group();
  int n = m.dim();
  int l = static_cast<int>(m.block_dim());
  std::size_t nc = ct.coset_count();

  KappaMap kref = kappa_reflect(ct, m.kappa());
  std::vector<int> toff(nc, 0);
  int acc = 0;
  for (std::size_t a = 0; a < nc; ++a) {
    toff[a] = acc;
    acc += static_cast<int>(kref.mult[a]) * l;
  }

  const SymplecticBasis& sb = m.pauli().sym_basis();
  MatrixF omega = MatrixF::identity(l);
  if (!sb.pairs.empty()) {
    std::vector<MatrixF> from;
    std::vector<MatrixF> to;
    std::vector<std::int64_t> gord;
    for (std::size_t i = 0; i < sb.pairs.size(); ++i) {
      from.push_back(mat_transpose(m.pauli().x(sb.pairs[i].first)));
      from.push_back(mat_transpose(m.pauli().x(sb.pairs[i].second)));
      to.push_back(mp.pauli().x(sb.pairs[i].first));
      to.push_back(mp.pauli().x(sb.pairs[i].second));
      gord.push_back(sb.orders[i]);
      gord.push_back(sb.orders[i]);
    }
    omega = pauli_intertwiner(f, from, to, gord);
  }

  MatrixF w(n, n);
  for (std::size_t a = 0; a < nc; ++a) {
    int mult = static_cast<int>(m.kappa().mult[a]);
    if (mult == 0) continue;
    std::size_t ia = ct.inverse_coset(a);
    Elem s = grp.neg(grp.add(ct.gamma(a), ct.gamma(ia)));
    MatrixF blk = mat_mul(f, mp.pauli().x(s), omega);
    for (int j = 0; j < mult; ++j)
      mat_place(w, toff[ia] + j * l, m.slot_offset(a, j), blk);
  }

  MatrixF u(n, n);
  for (std::size_t a = 0; a < nc; ++a) {
    int mult = static_cast<int>(kref.mult[a]);
    if (mult == 0) continue;
    std::size_t ad = mp.cosets().shifted(a, g);
    require(mp.kappa().mult[ad] == mult, errc::verification_failure,
            "the multiplicities do not transport along the shift");
    Elem s = grp.sub(grp.add(g, ct.gamma(a)), mp.cosets().gamma(ad));
    const MatrixF& blk = mp.pauli().x(s);
    for (int i = 0; i < mult; ++i)
      mat_place(u, mp.slot_offset(ad, i), toff[a] + i * l, blk);
  }
  return mat_mul(f, u, w);
}

MatrixF conjugate_through(const RootField& f, const MatrixF& u,
                          const MatrixF& uinv, bool rev, const MatrixF& x) {
  MatrixF y = x;
  if (rev) y = mat_neg(f, mat_transpose(y));
  return mat_mul(f, mat_mul(f, u, y), uinv);
}

void check_graded_transport(const RootField& f, const GradedMatrixAlgebra& src,
                            const GradedMatrixAlgebra& dst, const MatrixF& u,
                            const MatrixF& uinv, bool rev) {
  std::vector<Elem> degs = src.support();
  for (const Elem& d : dst.support())
    if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
  int nn = src.dim() * src.dim();
  for (const Elem& deg : degs) {
    auto triples = src.component_basis(deg);
    require(static_cast<std::int64_t>(triples.size()) == dst.component_dim(deg),
            errc::verification_failure,
            "the component dimensions do not transport");
    if (triples.empty()) continue;
    MatrixF rows(static_cast<int>(triples.size()), nn);
    for (std::size_t k = 0; k < triples.size(); ++k) {
      MatrixF y = conjugate_through(f, u, uinv, rev, src.realize(triples[k]));
      auto flat = mat_flatten(y);
      for (int c = 0; c < nn; ++c) rows.at(static_cast<int>(k), c) = flat[c];
    }
    require(Subspace::from_rows(f, rows) == dst.component_space(deg),
            errc::verification_failure, "a graded component does not transport");
  }
}

void check_lie_transport(const RootField& f, const GradedLieAlgebra& l,
                         const GradedLieAlgebra& lp, const MatrixF& u,
                         const MatrixF& uinv, bool rev) {
  int nn = l.ambient.dim() * l.ambient.dim();
  for (const Elem& g : l.group.elements()) {
    const auto& basis = l.basis_at(g);
    const Subspace& target = lp.component(g);
    require(static_cast<std::int64_t>(basis.size()) == target.dim(),
            errc::verification_failure,
            "the component dimensions do not transport");
    if (basis.empty()) continue;
    MatrixF rows(static_cast<int>(basis.size()), nn);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      MatrixF y = conjugate_through(f, u, uinv, rev, basis[k]);
      auto flat = mat_flatten(y);
      for (int c = 0; c < nn; ++c) rows.at(static_cast<int>(k), c) = flat[c];
    }
    require(Subspace::from_rows(f, rows) == target, errc::verification_failure,
            "a component does not transport");
  }
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  os << ']';
  return os.str();
}

std::string join_elems(const std::vector<Elem>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << '(';
    for (std::size_t j = 0; j < v[i].size(); ++j) {
      if (j) os << ',';
      os << v[i][j];
    }
    os << ')';
  }
  os << ']';
  return os.str();
}

}  // namespace

std::vector<std::int64_t> required_orders(const ParamTuple& p) {
  std::vector<std::int64_t> orders;
  if (p.kind == ParamKind::sl_ii) {
    QuotientData qd = quotient_data(p);
    orders = model_orders(qd.q.group(),
                          symplectic_basis(p.beta.subgroup(), p.beta));
    for (const Elem& x : p.group.elements())
      orders.push_back(qd.chi.value(x).order());
    orders.push_back(p.mu0.order());
    return orders;
  }
  orders = model_orders(p.group, symplectic_basis(p.support, p.beta));
  if (p.kind == ParamKind::assoc_antiauto)
    for (const auto& v : p.mu.values) orders.push_back(v.order());
  return orders;
}

const char* param_kind_name(ParamKind k) {
  switch (k) {
    case ParamKind::assoc: return "assoc";
    case ParamKind::assoc_antiauto: return "assoc-antiauto";
    case ParamKind::assoc_involution: return "assoc-involution";
    case ParamKind::sl_i: return "sl-I";
    case ParamKind::sl_ii: return "sl-II";
    case ParamKind::so: return "so";
    case ParamKind::sp: return "sp";
  }
  return "?";
}

std::optional<ParamKind> parse_param_kind(const std::string& name) {
  for (ParamKind k :
       {ParamKind::assoc, ParamKind::assoc_antiauto, ParamKind::assoc_involution,
        ParamKind::sl_i, ParamKind::sl_ii, ParamKind::so, ParamKind::sp})
    if (name == param_kind_name(k)) return k;
  return std::nullopt;
}

Realization realize(const ParamTuple& p, const std::optional<RootField>& field) {
  Realization r;
  switch (p.kind) {
    case ParamKind::assoc:
      r.algebra = build_model(p.group, p.support, p.beta, p.kappa, std::nullopt,
                              field);
      return r;
    case ParamKind::assoc_antiauto: {
      std::optional<RootField> f = field;
      if (!f) {
        auto orders = model_orders(p.group, symplectic_basis(p.support, p.beta));
        for (const auto& v : p.mu.values) orders.push_back(v.order());
        f = RootField::make(orders);
      }
      r.algebra = build_model(p.group, p.support, p.beta, p.kappa, p.g0, f);
      r.form = build_form(r.algebra, p.mu);
      return r;
    }
    case ParamKind::assoc_involution:
      require(p.delta == 1 || p.delta == -1, errc::invalid_parameter,
              "the adjoint sign must be +1 or -1");
      r.algebra = build_model(p.group, p.support, p.beta, p.kappa, p.g0, field);
      r.form = build_form(
          r.algebra, mu_from_delta(r.algebra.cosets(), r.algebra.pauli(), p.delta));
      return r;
    case ParamKind::sl_i:
      r.lie = build_sl_i(p.group, p.support, p.beta, p.kappa, field);
      break;
    case ParamKind::sl_ii:
      r.lie = build_sl_ii(p.group, p.support, p.h, p.beta, p.kappa, p.mu0, p.g0,
                          field);
      break;
    case ParamKind::so:
      r.lie = build_orthogonal(p.group, p.support, p.beta, p.kappa, p.g0, field);
      break;
    case ParamKind::sp:
      r.lie = build_symplectic(p.group, p.support, p.beta, p.kappa, p.g0, field);
      break;
  }
  r.algebra = r.lie->ambient;
  if (r.lie->form) r.form = r.lie->form;
  return r;
}

ParamTuple shift_tuple(const ParamTuple& p, const Elem& g, bool reversal) {
  require(!reversal || p.kind == ParamKind::sl_i, errc::invalid_parameter,
          "only sl-I admits the transpose branch");
  ParamTuple out = p;
  if (p.kind == ParamKind::sl_ii) {
    QuotientData qd = quotient_data(p);
    const FinAbGroup& qg = qd.q.group();
    Elem gb = qd.q.project(g);
    CosetTable ct = CosetTable::build(qg, p.beta.subgroup());
    out.kappa = kappa_shift(ct, p.kappa, gb);
    out.mu0 = p.mu0.mul(qd.chi.square_value(g));
    out.g0 = g0_shift(qg, p.g0, gb);
    return out;
  }
  CosetTable ct = CosetTable::build(p.group, p.support);
  KappaMap base = p.kappa;
  if (reversal) {
    out.beta = p.beta.inverse();
    base = kappa_reflect(ct, base);
  }
  out.kappa = kappa_shift(ct, base, g);
  switch (p.kind) {
    case ParamKind::assoc_antiauto:
      out.mu = mu_shift(ct, p.mu, g);
      out.g0 = g0_shift(p.group, p.g0, g);
      break;
    case ParamKind::assoc_involution:
    case ParamKind::so:
    case ParamKind::sp:
      out.g0 = g0_shift(p.group, p.g0, g);
      break;
    default:
      break;
  }
  return out;
}

IsoDecision decide_assoc(const ParamTuple& p, const ParamTuple& q) {
  require(p.kind == ParamKind::assoc && q.kind == ParamKind::assoc,
          errc::invalid_parameter, "both tuples must describe plain algebras");
  check_same_group(p, q);
  if (!(p.support == q.support)) return miss("different supports");
  if (p.beta != q.beta) return miss("different bicharacters");
  CosetTable ct = CosetTable::build(p.group, p.support);
  IsoDecision d;
  for (const Elem& g : p.group.elements()) {
    ++d.checked;
    if (kappa_shift(ct, p.kappa, g) == q.kappa) {
      d.equivalent = true;
      d.shift = g;
      return d;
    }
  }
  d.reason = "no shift matches the multiplicity map";
  return d;
}

IsoDecision decide_antiauto(const ParamTuple& p, const ParamTuple& q) {
  require(p.kind == ParamKind::assoc_antiauto && q.kind == ParamKind::assoc_antiauto,
          errc::invalid_parameter,
          "both tuples must describe algebras with an antiautomorphism");
  check_same_group(p, q);
  if (!(p.support == q.support)) return miss("different supports");
  if (p.beta != q.beta) return miss("different bicharacters");
  CosetTable ct = CosetTable::build(p.group, p.support);
  MuMap qmu = normalize_mu(q.kappa, q.mu);
  IsoDecision d;
  for (const Elem& g : p.group.elements()) {
    ++d.checked;
    if (q.g0 != g0_shift(p.group, p.g0, g)) continue;
    if (kappa_shift(ct, p.kappa, g) != q.kappa) continue;
    if (normalize_mu(q.kappa, mu_shift(ct, p.mu, g)) != qmu) continue;
    d.equivalent = true;
    d.shift = g;
    return d;
  }
  d.reason = "no shift matches the base degree, multiplicities and scalars";
  return d;
}

IsoDecision decide_involution(const ParamTuple& p, const ParamTuple& q) {
  require(p.kind == ParamKind::assoc_involution &&
              q.kind == ParamKind::assoc_involution,
          errc::invalid_parameter,
          "both tuples must describe algebras with an involution");
  check_same_group(p, q);
  if (!(p.support == q.support)) return miss("different supports");
  if (p.beta != q.beta) return miss("different bicharacters");
  if (p.delta != q.delta) return miss("different signs");
  CosetTable ct = CosetTable::build(p.group, p.support);
  IsoDecision d;
  for (const Elem& g : p.group.elements()) {
    ++d.checked;
    if (q.g0 != g0_shift(p.group, p.g0, g)) continue;
    if (kappa_shift(ct, p.kappa, g) != q.kappa) continue;
    d.equivalent = true;
    d.shift = g;
    return d;
  }
  d.reason = "no shift matches the base degree and multiplicities";
  return d;
}

IsoDecision decide_sl(const ParamTuple& p, const ParamTuple& q) {
  require(kind_category(p.kind) == 3 && kind_category(q.kind) == 3,
          errc::invalid_parameter, "both tuples must describe special linear gradings");
  check_same_group(p, q);
  if (p.kind != q.kind) return miss("different types");

  if (p.kind == ParamKind::sl_i) {
    if (!(p.support == q.support)) return miss("different supports");
    CosetTable ct = CosetTable::build(p.group, p.support);
    IsoDecision d;
    if (p.beta == q.beta) {
      for (const Elem& g : p.group.elements()) {
        ++d.checked;
        if (kappa_shift(ct, p.kappa, g) == q.kappa) {
          d.equivalent = true;
          d.shift = g;
          return d;
        }
      }
    }
    if (q.beta == p.beta.inverse()) {
      KappaMap refl = kappa_reflect(ct, p.kappa);
      for (const Elem& g : p.group.elements()) {
        ++d.checked;
        if (kappa_shift(ct, refl, g) == q.kappa) {
          d.equivalent = true;
          d.shift = g;
          d.reversal = true;
          return d;
        }
      }
    }
    if (d.checked == 0) return miss("different bicharacters");
    d.reason = "no shift matches the multiplicity map on either branch";
    return d;
  }

  if (!(p.support == q.support)) return miss("different subgroups");
  if (p.h != q.h) return miss("different distinguished elements");
  if (p.beta != q.beta) return miss("different bicharacters");
  QuotientData qd = quotient_data(p);
  const FinAbGroup& qg = qd.q.group();
  CosetTable ct = CosetTable::build(qg, p.beta.subgroup());
  IsoDecision d;
  for (const Elem& g : p.group.elements()) {
    ++d.checked;
    Elem gb = qd.q.project(g);
    if (q.g0 != g0_shift(qg, p.g0, gb)) continue;
    if (q.mu0 != p.mu0.mul(qd.chi.square_value(g))) continue;
    if (kappa_shift(ct, p.kappa, gb) != q.kappa) continue;
    d.equivalent = true;
    d.shift = g;
    return d;
  }
  d.reason = "no shift matches the base degree, scalar and multiplicities";
  return d;
}

IsoDecision decide_so_sp(const ParamTuple& p, const ParamTuple& q) {
  require(kind_category(p.kind) == 4 && kind_category(q.kind) == 4,
          errc::invalid_parameter, "both tuples must describe form gradings");
  check_same_group(p, q);
  if (p.kind != q.kind) return miss("different families");
  if (!(p.support == q.support)) return miss("different supports");
  if (p.beta != q.beta) return miss("different bicharacters");
  CosetTable ct = CosetTable::build(p.group, p.support);
  IsoDecision d;
  for (const Elem& g : p.group.elements()) {
    ++d.checked;
    if (q.g0 != g0_shift(p.group, p.g0, g)) continue;
    if (kappa_shift(ct, p.kappa, g) != q.kappa) continue;
    d.equivalent = true;
    d.shift = g;
    return d;
  }
  d.reason = "no shift matches the base degree and multiplicities";
  return d;
}

IsoDecision decide_iso(const ParamTuple& p, const ParamTuple& q) {
  require(kind_category(p.kind) == kind_category(q.kind), errc::invalid_parameter,
          "the kinds describe unrelated structures");
  switch (kind_category(p.kind)) {
    case 0: return decide_assoc(p, q);
    case 1: return decide_antiauto(p, q);
    case 2: return decide_involution(p, q);
    case 3: return decide_sl(p, q);
    default: return decide_so_sp(p, q);
  }
}

MatrixF verify_witness(const ParamTuple& p, const ParamTuple& q,
                       const IsoDecision& d) {
  require(d.equivalent, errc::invalid_parameter,
          "only an equivalence carries a witness");
  require(kind_category(p.kind) == kind_category(q.kind) && p.kind == q.kind,
          errc::invalid_parameter, "the kinds describe unrelated structures");
  check_same_group(p, q);
  require(!d.reversal || p.kind == ParamKind::sl_i, errc::invalid_parameter,
          "only sl-I admits the transpose branch");
  if (d.reversal)
    require(q.beta == p.beta.inverse(), errc::verification_failure,
            "the transpose branch needs the inverse bicharacter");
  else
    require(q.beta == p.beta, errc::verification_failure,
            "the shift branch needs equal bicharacters");
  require(p.support == q.support, errc::verification_failure,
          "the supports differ");
  if (p.kind == ParamKind::sl_ii)
    require(p.h == q.h, errc::verification_failure,
            "the distinguished elements differ");

  auto orders = required_orders(p);
  for (auto o : required_orders(q)) orders.push_back(o);
  std::size_t base = orders.size();
  for (std::size_t i = 0; i < base; ++i) orders.push_back(2 * orders[i]);
  RootField f = RootField::make(orders);

  Realization rp = realize(p, f);
  Realization rq = realize(q, f);
  const GradedMatrixAlgebra& m = rp.algebra;
  const GradedMatrixAlgebra& mp = rq.algebra;
  require(m.dim() == mp.dim(), errc::verification_failure,
          "the matrix sizes differ");

  MatrixF u;
  if (d.reversal) {
    u = reversal_conjugator(f, m, mp, d.shift);
  } else {
    Elem shift = d.shift;
    if (p.kind == ParamKind::sl_ii) shift = quotient_data(p).q.project(d.shift);
    std::vector<std::int64_t> alpha(m.cosets().coset_count(), 1);
    if (rp.form) {
      MatrixF u0 = conjugator(f, m, mp, shift, alpha);
      require(rq.form.has_value(), errc::verification_failure,
              "the target carries no form");
      alpha = solve_alpha(f, m, *rp.form, *rq.form, u0);
    }
    u = conjugator(f, m, mp, shift, alpha);
  }

  auto uinv = mat_inverse(f, u);
  require(uinv.has_value(), errc::verification_failure,
          "the witness matrix is singular");

  if (rp.form) {
    MatrixF pulled = mat_mul(f, mat_mul(f, mat_transpose(u), rq.form->s), u);
    require(mat_proportional(f, rp.form->s, pulled).has_value(),
            errc::verification_failure, "the witness does not transport the form");
  }

  check_graded_transport(f, m, mp, u, *uinv, d.reversal);
  if (rp.lie) {
    require(rq.lie.has_value(), errc::verification_failure,
            "the target carries no bracket structure");
    check_lie_transport(f, *rp.lie, *rq.lie, u, *uinv, d.reversal);
  }
  return u;
}

Fingerprint fingerprint_of(const ParamTuple& p) {
  Realization r = realize(p);
  if (!r.lie) return fingerprint(r.algebra);
  const GradedLieAlgebra& l = *r.lie;
  std::vector<std::pair<Elem, Subspace>> comps;
  for (const Elem& g : l.group.elements()) comps.emplace_back(g, l.component(g));
  return fingerprint(l.ambient.field(), l.group, comps, l.ambient.dim());
}

FingerprintDelta fingerprint_compare(const Fingerprint& a, const Fingerprint& b) {
  if (a.support != b.support)
    return {false,
            "support: " + join_elems(a.support) + " vs " + join_elems(b.support)};
  if (a.dims != b.dims)
    return {false, "component dimensions: " + join_ints(a.dims) + " vs " +
                       join_ints(b.dims)};
  if (a.subgroup_factors != b.subgroup_factors)
    return {false, "support subgroup invariants: " + join_ints(a.subgroup_factors) +
                       " vs " + join_ints(b.subgroup_factors)};
  if (a.block_sizes != b.block_sizes)
    return {false, "identity component blocks: " + join_ints(a.block_sizes) +
                       " vs " + join_ints(b.block_sizes)};
  return {};
}

}  // namespace gal
