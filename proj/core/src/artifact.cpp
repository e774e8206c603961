#include "gal/artifact.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "gal/error.hpp"

namespace gal {

namespace {

using json = nlohmann::ordered_json;

std::string elem_str(const Elem& x) {
  std::string s = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(x[i]);
  }
  return s + "]";
}

json root_json(const RootOfUnity& r) { return json::array({r.num, r.den}); }

RootOfUnity parse_root(const json& j, const char* what) {
  require(j.is_array() && j.size() == 2, errc::parse_error,
          std::string(what) + " must be a [numerator, denominator] pair");
  return RootOfUnity::make(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

Elem parse_elem(const json& j, const FinAbGroup& g, const char* what) {
  require(j.is_array(), errc::parse_error, std::string(what) + " must be an array");
  Elem x = j.get<std::vector<std::int64_t>>();
  require(g.is_valid(x), errc::parse_error,
          std::string(what) + " is not an element of the group");
  return x;
}

json elems_json(const std::vector<Elem>& xs) {
  json out = json::array();
  for (const Elem& x : xs) out.push_back(x);
  return out;
}

Subgroup parse_subgroup(const json& j, const FinAbGroup& g, const char* what) {
  require(j.is_array(), errc::parse_error, std::string(what) + " must be an array");
  std::vector<Elem> elems;
  for (const json& je : j) elems.push_back(parse_elem(je, g, what));
  return Subgroup(g, std::move(elems));
}

json bichar_json(const Bicharacter& b) {
  std::size_t m = static_cast<std::size_t>(b.subgroup().order());
  json table = json::array();
  for (std::size_t i = 0; i < m; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m; ++j) row.push_back(root_json(b.eval_idx(i, j)));
    table.push_back(std::move(row));
  }
  return table;
}

Bicharacter parse_bichar(const json& j, const Subgroup& t) {
  std::size_t m = static_cast<std::size_t>(t.order());
  require(j.is_array() && j.size() == m, errc::parse_error,
          "the bicharacter table must have one row per support element");
  std::vector<std::vector<RootOfUnity>> table(m);
  for (std::size_t i = 0; i < m; ++i) {
    require(j[i].is_array() && j[i].size() == m, errc::parse_error,
            "the bicharacter table must be square");
    for (std::size_t k = 0; k < m; ++k)
      table[i].push_back(parse_root(j[i][k], "bicharacter value"));
  }
  Bicharacter b = Bicharacter::from_table(t, std::move(table));
  validate_bicharacter(b);
  return b;
}

MatrixF parse_matrix(const json& j, int rows, int cols, const RootField& f,
                     const char* what) {
  require(j.is_array() && j.size() == static_cast<std::size_t>(rows) * cols,
          errc::parse_error,
          std::string(what) + " must hold " + std::to_string(rows * cols) + " entries");
  std::vector<std::int64_t> a = j.get<std::vector<std::int64_t>>();
  for (std::int64_t v : a)
    require(v >= 0 && v < f.p(), errc::parse_error,
            std::string(what) + " has an entry outside the field");
  return MatrixF(rows, cols, std::move(a));
}

bool has_g0(ParamKind k) {
  return k == ParamKind::assoc_antiauto || k == ParamKind::assoc_involution ||
         k == ParamKind::sl_ii || k == ParamKind::so || k == ParamKind::sp;
}

json params_json(const ParamTuple& p) {
  json j;
  j["kind"] = param_kind_name(p.kind);
  j["support"] = elems_json(p.support.elements());
  if (p.kind == ParamKind::sl_ii) {
    j["h"] = p.h;
    j["beta_support"] = elems_json(p.beta.subgroup().elements());
  }
  j["beta"] = bichar_json(p.beta);
  j["kappa"] = p.kappa.mult;
  if (has_g0(p.kind)) j["g0"] = p.g0;
  if (p.kind == ParamKind::assoc_antiauto) {
    json mu = json::array();
    for (const RootOfUnity& v : p.mu.values) mu.push_back(root_json(v));
    j["mu"] = std::move(mu);
  }
  if (p.kind == ParamKind::assoc_involution) j["delta"] = p.delta;
  if (p.kind == ParamKind::sl_ii) j["mu0"] = root_json(p.mu0);
  return j;
}

ParamTuple parse_params_obj(const json& j, const FinAbGroup& g) {
  ParamTuple p;
  auto kind = parse_param_kind(j.at("kind").get<std::string>());
  require(kind.has_value(), errc::parse_error, "unknown parameter kind");
  p.kind = *kind;
  p.group = g;
  p.support = parse_subgroup(j.at("support"), g, "support");
  FinAbGroup ambient = g;
  Subgroup bsup = p.support;
  if (p.kind == ParamKind::sl_ii) {
    p.h = parse_elem(j.at("h"), g, "h");
    require(g.order_of(p.h) == 2, errc::parse_error,
            "the distinguished element must have order 2");
    Quotient q = Quotient::build(g, Subgroup::from_generators(g, {p.h}));
    ambient = q.group();
    bsup = parse_subgroup(j.at("beta_support"), ambient, "beta_support");
  }
  p.beta = parse_bichar(j.at("beta"), bsup);
  p.kappa.mult = j.at("kappa").get<std::vector<std::int64_t>>();
  std::size_t cosets = CosetTable::build(ambient, bsup).coset_count();
  require(p.kappa.mult.size() == cosets, errc::parse_error,
          "the multiplicity map must have one entry per coset");
  for (std::int64_t m : p.kappa.mult)
    require(m >= 0, errc::parse_error, "multiplicities must be nonnegative");
  require(p.kappa.total() >= 1, errc::parse_error, "the multiplicity map is empty");
  if (has_g0(p.kind)) p.g0 = parse_elem(j.at("g0"), ambient, "g0");
  if (p.kind == ParamKind::assoc_antiauto) {
    const json& jm = j.at("mu");
    require(jm.is_array() && jm.size() == cosets, errc::parse_error,
            "the scalar map must have one entry per coset");
    for (const json& jv : jm) p.mu.values.push_back(parse_root(jv, "mu value"));
  }
  if (p.kind == ParamKind::assoc_involution) {
    p.delta = j.at("delta").get<int>();
    require(p.delta == 1 || p.delta == -1, errc::parse_error,
            "the adjoint sign must be +1 or -1");
  }
  if (p.kind == ParamKind::sl_ii) p.mu0 = parse_root(j.at("mu0"), "mu0");
  return p;
}

std::optional<LieFamily> parse_lie_family(const std::string& name) {
  for (LieFamily f : {LieFamily::sl_i, LieFamily::sl_ii, LieFamily::orthogonal,
                      LieFamily::symplectic})
    if (name == lie_family_name(f)) return f;
  return std::nullopt;
}

Artifact parse_artifact_impl(const std::string& text) {
  json j = json::parse(text);
  require(j.is_object(), errc::parse_error, "an artifact must be a JSON object");
  require(j.at("format").get<std::string>() == "gal-v1", errc::parse_error,
          "unsupported artifact format");

  Artifact a;
  const json& jf = j.at("field");
  std::int64_t n_field = jf.at("N").get<std::int64_t>();
  require(n_field >= 2 && n_field % 2 == 0, errc::parse_error,
          "the field root order must be even");
  a.field = RootField::make({n_field / 2}, jf.at("p").get<std::int64_t>());
  require(a.field.zeta_n() == jf.at("zeta").get<std::int64_t>(), errc::parse_error,
          "the field header does not match the canonical root");

  FinAbGroup g(j.at("group").get<std::vector<std::int64_t>>());
  a.params = parse_params_obj(j.at("parameters"), g);

  const Subgroup& bsup = a.params.beta.subgroup();
  const FinAbGroup& ambient = bsup.parent();
  CosetTable ct = CosetTable::build(ambient, bsup);
  std::int64_t block = 0;
  require(bsup.square_order(&block), errc::parse_error,
          "the support order is not a perfect square");

  a.n = j.at("n").get<int>();
  require(a.n >= 1 && a.n == a.params.kappa.total() * block, errc::parse_error,
          "the size does not match the multiplicities");

  for (const json& je : j.at("basis")) {
    BasisTriple e;
    e.a = je.at("a").get<std::size_t>();
    e.b = je.at("b").get<std::size_t>();
    e.i = je.at("i").get<int>();
    e.j = je.at("j").get<int>();
    require(e.a < ct.coset_count() && e.b < ct.coset_count(), errc::parse_error,
            "basis label coset out of range");
    require(e.i >= 0 && e.i < a.params.kappa.mult[e.a] && e.j >= 0 &&
                e.j < a.params.kappa.mult[e.b],
            errc::parse_error, "basis label slot out of range");
    e.t = parse_elem(je.at("t"), ambient, "basis label twist");
    require(bsup.contains(e.t), errc::parse_error,
            "basis label twist outside the support");
    a.basis.push_back(std::move(e));
  }

  for (const json& jc : j.at("components")) {
    DegreeComponent c;
    c.degree = parse_elem(jc.at("degree"), g, "component degree");
    c.dim = jc.at("dim").get<std::int64_t>();
    require(c.dim >= 0, errc::parse_error, "component dimension must be nonnegative");
    if (jc.contains("basis"))
      for (const json& jm : jc.at("basis"))
        c.basis.push_back(parse_matrix(jm, a.n, a.n, a.field, "component basis matrix"));
    a.components.push_back(std::move(c));
  }

  if (j.contains("involution")) {
    const json& ji = j.at("involution");
    FormBlock fb;
    fb.g0 = parse_elem(ji.at("g0"), ambient, "form base point");
    fb.delta = ji.at("delta").get<int>();
    require(fb.delta >= -1 && fb.delta <= 1, errc::parse_error,
            "the adjoint sign must be -1, 0 or +1");
    const json& jm = ji.at("mu");
    require(jm.is_array() && jm.size() == ct.coset_count(), errc::parse_error,
            "the scalar map must have one entry per coset");
    for (const json& jv : jm) fb.mu.values.push_back(parse_root(jv, "mu value"));
    const json& jl = ji.at("lambda");
    require(jl.is_array() && jl.size() == ct.coset_count(), errc::parse_error,
            "the lambda map must have one entry per coset");
    for (const json& jv : jl) fb.lambda.push_back(parse_root(jv, "lambda value"));
    fb.s = parse_matrix(ji.at("s"), a.n, a.n, a.field, "gram matrix");
    a.form = std::move(fb);
  }

  if (j.contains("lie")) {
    LieBlock lb;
    auto fam = parse_lie_family(j.at("lie").at("family").get<std::string>());
    require(fam.has_value(), errc::parse_error, "unknown Lie family");
    lb.family = *fam;
    lb.dim = j.at("lie").at("dim").get<std::int64_t>();
    require(lb.dim >= 0, errc::parse_error, "the Lie dimension must be nonnegative");
    a.lie = lb;
  }
  return a;
}

}  // namespace

Artifact make_artifact(const ParamTuple& p, const std::optional<RootField>& field,
                       bool with_matrices) {
  Realization r = realize(p, field);
  Artifact a;
  a.params = p;
  a.field = r.algebra.field();
  a.n = r.algebra.dim();
  for (const Elem& deg : r.algebra.support())
    for (const BasisTriple& e : r.algebra.component_basis(deg)) a.basis.push_back(e);
  if (r.lie) {
    std::vector<Elem> elems = p.group.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      DegreeComponent c;
      c.degree = elems[i];
      c.dim = r.lie->components[i].dim();
      if (with_matrices) c.basis = r.lie->graded_basis[i];
      a.components.push_back(std::move(c));
    }
    a.lie = LieBlock{r.lie->family, r.lie->dim};
  } else {
    for (const Elem& deg : r.algebra.support()) {
      DegreeComponent c;
      c.degree = deg;
      c.dim = r.algebra.component_dim(deg);
      if (with_matrices)
        for (const BasisTriple& e : r.algebra.component_basis(deg))
          c.basis.push_back(r.algebra.realize(e));
      a.components.push_back(std::move(c));
    }
  }
  if (r.form)
    a.form = FormBlock{p.g0, r.form->delta, r.form->mu, r.form->lambda, r.form->s};
  return a;
}

std::string serialize_artifact(const Artifact& a) {
  json j;
  j["format"] = "gal-v1";
  j["field"] = json{{"p", a.field.p()}, {"N", a.field.n()}, {"zeta", a.field.zeta_n()}};
  j["group"] = a.params.group.factors();
  j["parameters"] = params_json(a.params);
  j["n"] = a.n;
  json basis = json::array();
  for (const BasisTriple& e : a.basis) {
    json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["i"] = e.i;
    je["j"] = e.j;
    je["t"] = e.t;
    basis.push_back(std::move(je));
  }
  j["basis"] = std::move(basis);
  json comps = json::array();
  for (const DegreeComponent& c : a.components) {
    json jc;
    jc["degree"] = c.degree;
    jc["dim"] = c.dim;
    if (!c.basis.empty()) {
      json rows = json::array();
      for (const MatrixF& m : c.basis) rows.push_back(m.a);
      jc["basis"] = std::move(rows);
    }
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  if (a.form) {
    json ji;
    ji["g0"] = a.form->g0;
    ji["delta"] = a.form->delta;
    json mu = json::array();
    for (const RootOfUnity& v : a.form->mu.values) mu.push_back(root_json(v));
    ji["mu"] = std::move(mu);
    json lambda = json::array();
    for (const RootOfUnity& v : a.form->lambda) lambda.push_back(root_json(v));
    ji["lambda"] = std::move(lambda);
    ji["s"] = a.form->s.a;
    j["involution"] = std::move(ji);
  }
  if (a.lie)
    j["lie"] = json{{"family", lie_family_name(a.lie->family)}, {"dim", a.lie->dim}};
  return j.dump(1) + "\n";
}

Artifact parse_artifact(const std::string& text) {
  try {
    return parse_artifact_impl(text);
  } catch (const GalError&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

ParamTuple parse_params(const std::string& text) {
  try {
    json j = json::parse(text);
    require(j.is_object(), errc::parse_error, "parameters must be a JSON object");
    if (j.contains("format")) return parse_artifact_impl(text).params;
    FinAbGroup g(j.at("group").get<std::vector<std::int64_t>>());
    return parse_params_obj(j.at("parameters"), g);
  } catch (const GalError&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::parse_error, e.what());
  }
}

ArtifactReport verify_artifact(const Artifact& a, bool associative) {
  ArtifactReport rep;
  Realization r = realize(a.params, a.field);
  const RootField& f = r.algebra.field();
  const FinAbGroup& g = a.params.group;
  int n = r.algebra.dim();

  if (associative) {
    std::vector<std::pair<Elem, Subspace>> comps;
    if (r.lie) {
      const std::vector<Subspace>& parts =
          r.lie->family == LieFamily::sl_ii ? r.lie->refined : r.lie->components;
      std::vector<Elem> elems = g.elements();
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (parts[i].dim() > 0) comps.emplace_back(elems[i], parts[i]);
    } else {
      for (const Elem& deg : r.algebra.support())
        comps.emplace_back(deg, r.algebra.component_space(deg));
    }
    GradingReport gr = verify_grading(f, g, comps, n);
    if (!gr.spans)
      rep.violations.push_back("associative: the components do not fill the matrix algebra");
    if (!gr.direct)
      rep.violations.push_back("associative: the component dimensions do not add up");
    if (!gr.multiplicative)
      rep.violations.push_back("associative: a product escapes its component");
    if (!gr.unital)
      rep.violations.push_back("associative: the identity is not homogeneous");
    if (!gr.ok() && !gr.witness.empty())
      rep.violations.push_back("witness: " + gr.witness);
    return rep;
  }

  if (a.n != n) {
    rep.violations.push_back("size: stored " + std::to_string(a.n) +
                             " differs from the rebuilt " + std::to_string(n));
    return rep;
  }

  std::vector<BasisTriple> labels;
  for (const Elem& deg : r.algebra.support())
    for (const BasisTriple& e : r.algebra.component_basis(deg)) labels.push_back(e);
  if (labels != a.basis)
    rep.violations.push_back("basis: the stored index differs from the rebuilt one");

  // expected degree table
  struct Expected {
    Elem deg;
    std::int64_t dim;
    std::vector<MatrixF> basis;
  };
  std::vector<Expected> want;
  if (r.lie) {
    std::vector<Elem> elems = g.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
      want.push_back({elems[i], r.lie->components[i].dim(), r.lie->graded_basis[i]});
  } else {
    for (const Elem& deg : r.algebra.support()) {
      Expected w{deg, r.algebra.component_dim(deg), {}};
      for (const BasisTriple& e : r.algebra.component_basis(deg))
        w.basis.push_back(r.algebra.realize(e));
      want.push_back(std::move(w));
    }
  }

  std::map<Elem, std::size_t> stored;
  for (std::size_t i = 0; i < a.components.size(); ++i)
    if (!stored.emplace(a.components[i].degree, i).second)
      rep.violations.push_back(elem_str(a.components[i].degree) +
                               ": degree listed twice");
  std::vector<bool> used(a.components.size(), false);
  bool dense = !a.components.empty();
  for (const DegreeComponent& c : a.components)
    if (static_cast<std::int64_t>(c.basis.size()) != c.dim) dense = false;
  for (const Expected& w : want) {
    auto it = stored.find(w.deg);
    if (it == stored.end()) {
      rep.violations.push_back(elem_str(w.deg) + ": component missing from the artifact");
      continue;
    }
    used[it->second] = true;
    const DegreeComponent& c = a.components[it->second];
    if (c.dim != w.dim)
      rep.violations.push_back(elem_str(w.deg) + ": stored dimension " +
                               std::to_string(c.dim) + " differs from " +
                               std::to_string(w.dim));
    else if (!c.basis.empty() && c.basis != w.basis)
      rep.violations.push_back(elem_str(w.deg) +
                               ": stored basis differs from the rebuilt one");
  }
  for (std::size_t i = 0; i < a.components.size(); ++i)
    if (!used[i])
      rep.violations.push_back(elem_str(a.components[i].degree) +
                               ": not a component of the rebuilt structure");

  // axioms on the stored data alone
  std::map<Elem, Subspace> spaces;
  if (dense) {
    for (const DegreeComponent& c : a.components) {
      MatrixF rows(static_cast<int>(c.basis.size()), n * n);
      for (std::size_t k = 0; k < c.basis.size(); ++k)
        mat_place(rows, static_cast<int>(k), 0,
                  MatrixF(1, n * n, mat_flatten(c.basis[k])));
      Subspace sp = Subspace::from_rows(f, rows);
      if (sp.dim() != c.dim)
        rep.violations.push_back(elem_str(c.degree) + ": stored matrices are dependent");
      spaces.emplace(c.degree, std::move(sp));
    }
    if (!r.lie) {
      std::vector<std::pair<Elem, Subspace>> comps;
      for (const auto& [deg, sp] : spaces) comps.emplace_back(deg, sp);
      GradingReport gr = verify_grading(f, g, comps, n);
      if (!gr.spans)
        rep.violations.push_back("grading: the components do not fill the matrix algebra");
      if (!gr.direct)
        rep.violations.push_back("grading: the component dimensions do not add up");
      if (!gr.multiplicative)
        rep.violations.push_back("grading: a product escapes its component");
      if (!gr.unital)
        rep.violations.push_back("grading: the identity is not homogeneous");
      if (!gr.ok() && !gr.witness.empty())
        rep.violations.push_back("witness: " + gr.witness);
    } else {
      for (const DegreeComponent& ci : a.components) {
        for (const DegreeComponent& cj : a.components) {
          Elem target = g.add(ci.degree, cj.degree);
          auto it = spaces.find(target);
          bool escaped = false;
          for (const MatrixF& x : ci.basis) {
            for (const MatrixF& y : cj.basis) {
              MatrixF br = mat_bracket(f, x, y);
              bool inside = it != spaces.end() ? it->second.contains(f, mat_flatten(br))
                                               : br.is_zero();
              if (!inside) {
                rep.violations.push_back("bracket at (" + elem_str(ci.degree) + ", " +
                                         elem_str(cj.degree) +
                                         ") escapes the component");
                escaped = true;
                break;
              }
            }
            if (escaped) break;
          }
        }
      }
      std::int64_t total = 0;
      for (const DegreeComponent& c : a.components) total += c.dim;
      if (a.lie && total != a.lie->dim)
        rep.violations.push_back("dimension: the components sum to " +
                                 std::to_string(total) + ", the structure claims " +
                                 std::to_string(a.lie->dim));
    }
  }

  if (a.form.has_value() != r.form.has_value()) {
    rep.violations.push_back("form: presence differs from the rebuilt structure");
  } else if (a.form) {
    const FormBlock& fb = *a.form;
    if (fb.g0 != a.params.g0)
      rep.violations.push_back("form: the base point differs from the parameters");
    if (fb.delta != r.form->delta)
      rep.violations.push_back("form: the adjoint sign differs from the rebuilt one");
    if (fb.mu != r.form->mu)
      rep.violations.push_back("form: the scalar map differs from the rebuilt one");
    if (fb.lambda != r.form->lambda)
      rep.violations.push_back("form: the lambda map differs from the rebuilt one");
    if (fb.s != r.form->s)
      rep.violations.push_back("form: the Gram matrix differs from the rebuilt one");
    auto sinv = mat_inverse(f, fb.s);
    if (!sinv) {
      rep.violations.push_back("form: the stored Gram matrix is singular");
    } else {
      if (fb.delta != 0) {
        MatrixF expect = fb.delta == 1 ? fb.s : mat_neg(f, fb.s);
        if (mat_transpose(fb.s) != expect)
          rep.violations.push_back("form: the Gram matrix does not have the stored sign");
      }
      if (dense) {
        auto phi = [&](const MatrixF& x) {
          return mat_mul(f, mat_mul(f, *sinv, mat_transpose(x)), fb.s);
        };
        if (!r.lie) {
          for (const DegreeComponent& c : a.components)
            for (const MatrixF& m : c.basis)
              if (!spaces.at(c.degree).contains(f, mat_flatten(phi(m)))) {
                rep.violations.push_back(elem_str(c.degree) +
                                         ": the adjoint leaves the component");
                break;
              }
        } else if (a.params.kind == ParamKind::so || a.params.kind == ParamKind::sp) {
          for (const DegreeComponent& c : a.components)
            for (const MatrixF& m : c.basis)
              if (phi(m) != mat_neg(f, m)) {
                rep.violations.push_back(elem_str(c.degree) +
                                         ": the component is not skew under the adjoint");
                break;
              }
        } else if (a.params.kind == ParamKind::sl_ii) {
          Character chi =
              solve_character(g, {{a.params.h, RootOfUnity::minus_one()}});
          for (const DegreeComponent& c : a.components) {
            std::int64_t scale = f.neg(f.root(chi.value(c.degree)));
            for (const MatrixF& m : c.basis)
              if (phi(m) != mat_scale(f, scale, m)) {
                rep.violations.push_back(
                    elem_str(c.degree) +
                    ": the adjoint does not act by the character on the component");
                break;
              }
          }
        }
      }
    }
  }

  if (a.lie.has_value() != r.lie.has_value()) {
    rep.violations.push_back("lie: presence differs from the rebuilt structure");
  } else if (a.lie) {
    if (a.lie->family != r.lie->family)
      rep.violations.push_back("lie: the family differs from the rebuilt one");
    if (a.lie->dim != r.lie->dim)
      rep.violations.push_back("lie: the dimension differs from the rebuilt one");
  }
  return rep;
}

std::string decision_json(const ParamTuple& p, const ParamTuple& q,
                          const IsoDecision& d) {
  json j;
  j["verdict"] = d.equivalent ? "equivalent" : "inequivalent";
  if (d.equivalent) {
    json w;
    w["g"] = d.shift;
    w["flavor"] = d.reversal ? "shift-reversal" : "shift";
    j["witness"] = std::move(w);
  } else {
    json rf;
    rf["checked_g_count"] = d.checked;
    if (!d.reason.empty()) rf["reason"] = d.reason;
    FingerprintDelta delta = fingerprint_compare(fingerprint_of(p), fingerprint_of(q));
    if (!delta.equal) rf["fingerprint_delta"] = delta.discrepancy;
    j["refutation"] = std::move(rf);
  }
  return j.dump(1) + "\n";
}

std::string fingerprint_json(const Fingerprint& fp) {
  json j;
  j["support"] = elems_json(fp.support);
  j["dims"] = fp.dims;
  j["subgroup_factors"] = fp.subgroup_factors;
  j["block_sizes"] = fp.block_sizes;
  return j.dump(1) + "\n";
}

}  // namespace gal
