#include "gal/involution.hpp"

#include <optional>
#include <utility>

#include "gal/error.hpp"

namespace gal {
namespace {

RootOfUnity sign_unit(int delta) {
  return delta == 1 ? RootOfUnity::one() : RootOfUnity::minus_one();
}

MatrixF skew_block(const RootField& f, int k) {
  MatrixF j(k, k);
  int h = k / 2;
  for (int i = 0; i < h; ++i) {
    j.at(i, h + i) = 1;
    j.at(h + i, i) = f.neg(1);
  }
  return j;
}

void check_shape(const CosetTable& ct, const PauliAlgebra& d) {
  require(ct.paired(), errc::invalid_parameter, "coset table needs a base point");
  require(d.support() == ct.subgroup(), errc::invalid_parameter,
          "division part lives on a different support");
  require(d.has_sign_form(), errc::invalid_parameter,
          "support is not an elementary 2-group");
}

}  // namespace

Elem tau_of(const CosetTable& ct, std::size_t a) {
  require(ct.paired(), errc::invalid_parameter, "coset table needs a base point");
  require(a < ct.coset_count(), errc::invalid_parameter, "coset index out of range");
  require(ct.self_paired(a), errc::not_self_paired,
          "tau is defined on self-paired cosets only");
  const FinAbGroup& g = ct.group();
  std::optional<Elem> tau;
  for (const Elem& rep : ct.coset(a)) {
    Elem cand = g.add(ct.g0(), g.mul_int(rep, 2));
    if (!tau) {
      tau = cand;
    } else {
      require(cand == *tau, errc::invalid_parameter,
              "tau depends on the representative");
    }
  }
  require(ct.subgroup().contains(*tau), errc::internal_error, "tau left the support");
  return *tau;
}

bool mu_paired(const CosetTable& ct, const MuMap& mu) {
  if (!ct.paired() || mu.values.size() != ct.coset_count()) return false;
  for (std::size_t a = 0; a < ct.coset_count(); ++a)
    if (!mu.values[a].mul(mu.values[ct.partner(a)]).is_one()) return false;
  return true;
}

MuMap normalize_mu(const KappaMap& kappa, const MuMap& mu) {
  require(kappa.mult.size() == mu.values.size(), errc::invalid_parameter,
          "multiplicity and scalar maps have different lengths");
  MuMap out = mu;
  for (std::size_t a = 0; a < out.values.size(); ++a)
    if (kappa.mult[a] == 0) out.values[a] = RootOfUnity::one();
  return out;
}

MuMap mu_shift(const CosetTable& ct, const MuMap& mu, const Elem& g) {
  require(mu.values.size() == ct.coset_count(), errc::invalid_parameter,
          "scalar map does not match the coset table");
  MuMap out;
  out.values.resize(mu.values.size());
  for (std::size_t a = 0; a < ct.coset_count(); ++a)
    out.values[ct.shifted(a, g)] = mu.values[a];
  return out;
}

MuMap mu_from_delta(const CosetTable& ct, const PauliAlgebra& d, int delta) {
  check_shape(ct, d);
  require(delta == 1 || delta == -1, errc::invalid_parameter, "sign must be +1 or -1");
  MuMap mu;
  mu.values.reserve(ct.coset_count());
  for (std::size_t a = 0; a < ct.coset_count(); ++a) {
    RootOfUnity v = sign_unit(delta);
    if (ct.self_paired(a)) v = v.mul(d.sign(tau_of(ct, a)));
    mu.values.push_back(v);
  }
  return mu;
}

MuMap mu_from_type2(const CosetTable& ct, const PauliAlgebra& d,
                    const Character& chi2, const RootOfUnity& mu0) {
  check_shape(ct, d);
  require(chi2.group() == ct.group(), errc::invalid_parameter,
          "character lives on a different group");
  for (const Elem& t : ct.subgroup().elements())
    require(chi2.value(t).is_one(), errc::splitting_violation,
            "character square is nontrivial on the support");
  require(mu0.pow(2).mul(chi2.value(ct.g0())).is_one(), errc::invalid_parameter,
          "mu0 squared must invert the character square at the base point");
  MuMap mu;
  mu.values.reserve(ct.coset_count());
  for (std::size_t a = 0; a < ct.coset_count(); ++a) {
    RootOfUnity v = mu0.mul(chi2.value(ct.gamma(a)).inv());
    if (ct.self_paired(a)) v = v.mul(d.sign(tau_of(ct, a)));
    mu.values.push_back(v);
  }
  return mu;
}

std::vector<RootOfUnity> admissible_mu0(const CosetTable& ct, const KappaMap& kappa,
                                        const PauliAlgebra& d, const Character& chi2) {
  check_shape(ct, d);
  require(chi2.group() == ct.group(), errc::invalid_parameter,
          "character lives on a different group");
  require(kappa.mult.size() == ct.coset_count(), errc::invalid_parameter,
          "multiplicity map does not match the coset table");
  for (const Elem& t : ct.subgroup().elements())
    require(chi2.value(t).is_one(), errc::splitting_violation,
            "character square is nontrivial on the support");
  std::optional<RootOfUnity> pin;
  for (std::size_t a = 0; a < ct.coset_count(); ++a) {
    if (!ct.self_paired(a) || kappa.mult[a] <= 0 || kappa.mult[a] % 2 == 0) continue;
    RootOfUnity v = chi2.value(ct.gamma(a)).mul(d.sign(tau_of(ct, a)));
    if (!pin) {
      pin = v;
    } else if (*pin != v) {
      return {};
    }
  }
  if (pin) {
    require(pin->pow(2).mul(chi2.value(ct.g0())).is_one(), errc::internal_error,
            "pinned mu0 violates the square constraint");
    return {*pin};
  }
  RootOfUnity target = chi2.value(ct.g0()).inv();
  RootOfUnity r1 = RootOfUnity::make(target.num, 2 * target.den);
  RootOfUnity r2 = RootOfUnity::make(target.num + target.den, 2 * target.den);
  if (r2 < r1) std::swap(r1, r2);
  return {r1, r2};
}

bool exist_involution(const CosetTable& ct, const KappaMap& kappa,
                      const PauliAlgebra& d, int delta) {
  check_shape(ct, d);
  require(delta == 1 || delta == -1, errc::invalid_parameter, "sign must be +1 or -1");
  require(kappa.mult.size() == ct.coset_count(), errc::invalid_parameter,
          "multiplicity map does not match the coset table");
  for (std::size_t a = 0; a < ct.coset_count(); ++a) {
    if (kappa.mult[a] != kappa.mult[ct.partner(a)]) return false;
    if (ct.self_paired(a) && kappa.mult[a] > 0 && kappa.mult[a] % 2 == 1 &&
        d.sign(tau_of(ct, a)) != sign_unit(delta))
      return false;
  }
  return true;
}

MatrixF InvolutionData::apply(const RootField& f, const MatrixF& x) const {
  return mat_mul(f, s_inv, mat_mul(f, mat_transpose(x), s));
}

InvolutionData build_form(const GradedMatrixAlgebra& m, const MuMap& mu) {
  const CosetTable& ct = m.cosets();
  const PauliAlgebra& d = m.pauli();
  const RootField& f = m.field();
  check_shape(ct, d);
  require(mu.values.size() == ct.coset_count(), errc::invalid_parameter,
          "scalar map does not match the coset table");
  const auto& kap = m.kappa().mult;
  int ell = static_cast<int>(m.block_dim());

  for (std::size_t a = 0; a < ct.coset_count(); ++a) {
    std::size_t p = ct.partner(a);
    require(kap[a] == kap[p], errc::no_form, "multiplicities do not pair up");
    require(mu.values[a].mul(mu.values[p]).is_one(), errc::no_form,
            "scalars do not pair up");
    if (ct.self_paired(a) && kap[a] > 0) {
      require(mu.values[a].order() <= 2, errc::no_form,
              "self-paired scalar must be a sign");
      if (mu.values[a] == RootOfUnity::minus_one())
        require(kap[a] % 2 == 0, errc::no_form, "skew block needs even multiplicity");
    }
  }

  InvolutionData data;
  data.mu = mu;
  data.s = MatrixF(m.dim(), m.dim());
  data.btilde.resize(ct.coset_count());
  for (std::size_t a = 0; a < ct.coset_count(); ++a) {
    int k = static_cast<int>(kap[a]);
    if (k == 0) {
      data.btilde[a] = MatrixF(0, 0);
      continue;
    }
    if (ct.self_paired(a)) {
      MatrixF bt = mu.values[a].is_one() ? MatrixF::identity(k) : skew_block(f, k);
      data.btilde[a] = bt;
      mat_place(data.s, m.slot_offset(a, 0), m.slot_offset(a, 0),
                mat_kron(f, bt, d.x(tau_of(ct, a))));
    } else {
      std::size_t p = ct.partner(a);
      MatrixF bt = MatrixF::identity(k);
      if (p < a) bt = mat_scale(f, f.root(mu.values[p]), bt);
      data.btilde[a] = bt;
      mat_place(data.s, m.slot_offset(a, 0), m.slot_offset(p, 0),
                mat_kron(f, bt, MatrixF::identity(ell)));
    }
  }

  auto inv = mat_inverse(f, data.s);
  require(inv.has_value(), errc::internal_error, "gram matrix is singular");
  data.s_inv = *inv;

  data.lambda.resize(ct.coset_count());
  for (std::size_t a = 0; a < ct.coset_count(); ++a) {
    data.lambda[a] = ct.self_paired(a)
                         ? mu.values[a].mul(d.sign(tau_of(ct, a)))
                         : mu.values[a];
  }
  MatrixF q = mat_mul(f, mat_transpose(data.s_inv), data.s);
  MatrixF expected(m.dim(), m.dim());
  for (std::size_t a = 0; a < ct.coset_count(); ++a) {
    int base = m.slot_offset(a, 0);
    for (int r = 0; r < static_cast<int>(kap[a]) * ell; ++r)
      expected.at(base + r, base + r) = f.root(data.lambda[a]);
  }
  require(q == expected, errc::internal_error, "form adjoint square is not blockwise scalar");

  MatrixF st = mat_transpose(data.s);
  if (st == data.s)
    data.delta = 1;
  else if (st == mat_neg(f, data.s))
    data.delta = -1;
  else
    data.delta = 0;
  return data;
}

AntiautoReport check_antiauto(const GradedMatrixAlgebra& m, const InvolutionData& data) {
  AntiautoReport rep;
  const RootField& f = m.field();
  const FinAbGroup& g = m.group();
  const Elem id = g.id();

  std::vector<BasisTriple> all;
  std::vector<MatrixF> mats;
  std::vector<MatrixF> phis;
  for (const Elem& deg : m.support()) {
    Subspace comp = m.component_space(deg);
    for (const BasisTriple& e : m.component_basis(deg)) {
      MatrixF x = m.realize(e);
      MatrixF px = data.apply(f, x);
      if (rep.degree_preserving && !comp.contains(f, mat_flatten(px))) {
        rep.degree_preserving = false;
        rep.witness = "image leaves the component of degree " + g.str(deg);
      }
      MatrixF ppx = data.apply(f, px);
      std::int64_t c = f.root(data.lambda[e.a].inv().mul(data.lambda[e.b]));
      if (rep.square_scalar && ppx != mat_scale(f, c, x)) {
        rep.square_scalar = false;
        rep.witness = "square is not the blockwise scalar at degree " + g.str(deg);
      }
      if (ppx != x) {
        if (deg == id && rep.involutive_on_e) {
          rep.involutive_on_e = false;
          rep.witness = "square moves an identity-component element";
        }
        rep.involution = false;
      }
      all.push_back(e);
      mats.push_back(std::move(x));
      phis.push_back(std::move(px));
    }
  }

  for (std::size_t i = 0; i < all.size() && rep.antiauto; ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      MatrixF lhs = data.apply(f, mat_mul(f, mats[i], mats[j]));
      MatrixF rhs = mat_mul(f, phis[j], phis[i]);
      if (lhs != rhs) {
        rep.antiauto = false;
        rep.witness = "product reversal fails on a basis pair";
        break;
      }
    }
  }
  return rep;
}

CompatReport check_compat(const GradedMatrixAlgebra& m, const InvolutionData& data,
                          const Character& chi2) {
  CompatReport rep;
  const RootField& f = m.field();
  require(chi2.group() == m.group(), errc::invalid_parameter,
          "character lives on a different group");

  for (const Elem& deg : m.support()) {
    std::int64_t c = f.root(chi2.value(deg));
    bool bad = false;
    for (const BasisTriple& e : m.component_basis(deg)) {
      MatrixF x = m.realize(e);
      if (data.apply(f, data.apply(f, x)) != mat_scale(f, c, x)) {
        bad = true;
        break;
      }
    }
    if (bad) {
      rep.pointwise = false;
      rep.violations.push_back(deg);
    }
  }

  bool split = true;
  for (const Elem& t : m.cosets().subgroup().elements())
    if (!chi2.value(t).is_one()) split = false;
  bool shape = false;
  if (split) {
    MuMap norm = normalize_mu(m.kappa(), data.mu);
    for (const RootOfUnity& mu0 :
         admissible_mu0(m.cosets(), m.kappa(), m.pauli(), chi2)) {
      if (normalize_mu(m.kappa(),
                       mu_from_type2(m.cosets(), m.pauli(), chi2, mu0)) == norm)
        shape = true;
    }
  }
  rep.criterion = split && shape;
  return rep;
}

}  // namespace gal
