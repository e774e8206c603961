#include <functional>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "gal/artifact.hpp"
#include "gal/error.hpp"
#include "gal/sweep.hpp"
#include "json.hpp"

using namespace gal;

namespace {

errc thrown_code(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GalError& e) {
    return e.code();
  }
  return errc::internal_error;
}

ParamTuple assoc_tuple(const FinAbGroup& g, std::vector<std::int64_t> kappa) {
  ParamTuple p;
  p.group = g;
  p.support = Subgroup::trivial(g);
  p.beta = Bicharacter::trivial(p.support);
  p.kappa = KappaMap{std::move(kappa)};
  return p;
}

ParamTuple pauli_tuple() {
  FinAbGroup g = make_group({2, 2});
  ParamTuple p;
  p.group = g;
  p.support = Subgroup::full(g);
  p.beta = enumerate_alternating_bicharacters(p.support).at(0);
  p.kappa = KappaMap{{1}};
  return p;
}

ParamTuple antiauto_tuple() {
  FinAbGroup g = make_group({2});
  ParamTuple p = assoc_tuple(g, {1, 1});
  p.kind = ParamKind::assoc_antiauto;
  p.g0 = Elem{1};
  PauliAlgebra d = PauliAlgebra::build(
      p.support, p.beta,
      RootField::make(model_orders(g, symplectic_basis(p.support, p.beta))));
  p.mu = mu_from_delta(CosetTable::build(g, p.support, p.g0), d, 1);
  return p;
}

ParamTuple type2_tuple() {
  FinAbGroup g = make_group({4});
  Elem h{2};
  Quotient qu = Quotient::build(g, Subgroup::from_generators(g, {h}));
  ParamTuple p;
  p.kind = ParamKind::sl_ii;
  p.group = g;
  p.support = Subgroup::from_generators(g, {h});
  p.h = h;
  p.beta = Bicharacter::trivial(Subgroup::trivial(qu.group()));
  p.kappa = KappaMap{{2, 1}};
  p.mu0 = RootOfUnity::minus_one();
  p.g0 = qu.group().id();
  return p;
}

std::vector<ParamTuple> sample_tuples() {
  FinAbGroup z2 = make_group({2});
  std::vector<ParamTuple> out;
  out.push_back(assoc_tuple(z2, {2, 1}));
  out.push_back(pauli_tuple());
  out.push_back(antiauto_tuple());

  ParamTuple inv = pauli_tuple();
  inv.kind = ParamKind::assoc_involution;
  inv.g0 = inv.group.id();
  inv.delta = 1;
  out.push_back(inv);

  ParamTuple sl1 = assoc_tuple(z2, {1, 1});
  sl1.kind = ParamKind::sl_i;
  out.push_back(sl1);

  out.push_back(type2_tuple());

  ParamTuple so2 = assoc_tuple(z2, {1, 1});
  so2.kind = ParamKind::so;
  so2.g0 = z2.id();
  out.push_back(so2);

  FinAbGroup triv = make_group({});
  ParamTuple sp2 = assoc_tuple(triv, {2});
  sp2.kind = ParamKind::sp;
  sp2.g0 = triv.id();
  out.push_back(sp2);
  return out;
}

}  // namespace

TEST_CASE("artifacts survive a serialize/parse round trip") {
  for (const ParamTuple& p : sample_tuples()) {
    CAPTURE(param_kind_name(p.kind));
    Artifact a = make_artifact(p);
    std::string s = serialize_artifact(a);
    Artifact b = parse_artifact(s);
    CHECK(b == a);
    CHECK(serialize_artifact(b) == s);
    CHECK(parse_params(s) == p);

    ArtifactReport rep = verify_artifact(a);
    CAPTURE(rep.violations.empty() ? "" : rep.violations.front());
    CHECK(rep.ok());
    CHECK(verify_artifact(b) == rep);

    Artifact sparse = make_artifact(p, std::nullopt, false);
    Artifact sparse2 = parse_artifact(serialize_artifact(sparse));
    CHECK(sparse2 == sparse);
    CHECK(verify_artifact(sparse).ok());
  }
}

TEST_CASE("the header pins the format, the field and the group") {
  ParamTuple p = pauli_tuple();
  Artifact a = make_artifact(p);
  nlohmann::json j = nlohmann::json::parse(serialize_artifact(a));
  CHECK(j["format"] == "gal-v1");
  CHECK(j["field"]["p"] == a.field.p());
  CHECK(j["field"]["N"] == a.field.n());
  CHECK(j["field"]["zeta"] == a.field.zeta_n());
  CHECK(j["group"] == nlohmann::json({2, 2}));
  CHECK(j["n"] == 2);
  CHECK(j["parameters"]["kind"] == "assoc");
  CHECK(j.contains("components"));
  CHECK_FALSE(j.contains("involution"));
  CHECK_FALSE(j.contains("lie"));

  ParamTuple so2 = sample_tuples()[6];
  nlohmann::json js = nlohmann::json::parse(serialize_artifact(make_artifact(so2)));
  CHECK(js.contains("involution"));
  CHECK(js["lie"]["family"] == "so");

  RootField f = RootField::make(required_orders(p), 17);
  Artifact supplied = make_artifact(p, f);
  CHECK(supplied.field.p() == 17);
  CHECK(parse_artifact(serialize_artifact(supplied)) == supplied);
}

TEST_CASE("verification flags corrupted artifacts") {
  ParamTuple so2 = sample_tuples()[6];
  Artifact base = make_artifact(so2);
  REQUIRE(verify_artifact(base).ok());

  Artifact c = base;
  c.n = 5;
  ArtifactReport r = verify_artifact(c);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].starts_with("size:"));

  c = base;
  c.components[1].dim += 1;
  CHECK_FALSE(verify_artifact(c).ok());

  c = base;
  c.components[0].degree = Elem{1};
  CHECK_FALSE(verify_artifact(c).ok());

  c = base;
  REQUIRE(!c.components[1].basis.empty());
  std::int64_t& entry = c.components[1].basis[0].a[0];
  entry = (entry + 1) % base.field.p();
  CHECK_FALSE(verify_artifact(c).ok());

  c = base;
  REQUIRE(c.form.has_value());
  c.form->s.a[0] = (c.form->s.a[0] + 1) % base.field.p();
  CHECK_FALSE(verify_artifact(c).ok());

  c = base;
  REQUIRE(c.lie.has_value());
  c.lie->dim += 1;
  CHECK_FALSE(verify_artifact(c).ok());

  ParamTuple pa = sample_tuples()[0];
  Artifact aa = make_artifact(pa);
  REQUIRE(verify_artifact(aa).ok());
  Artifact ca = aa;
  std::swap(ca.components[0].basis[0], ca.components[1].basis[0]);
  CHECK_FALSE(verify_artifact(ca).ok());
}

TEST_CASE("malformed text is rejected as a parse error") {
  std::string s = serialize_artifact(make_artifact(assoc_tuple(make_group({2}), {2, 1})));
  CHECK(thrown_code([&] { parse_artifact("{}"); }) == errc::parse_error);
  CHECK(thrown_code([&] { parse_artifact("not json"); }) == errc::parse_error);
  CHECK(thrown_code([&] { parse_artifact(s.substr(0, 80)); }) == errc::parse_error);

  auto mutate = [&](const std::function<void(nlohmann::ordered_json&)>& fn) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(s);
    fn(j);
    return j.dump(1);
  };
  CHECK(thrown_code([&] {
          parse_artifact(mutate([](auto& j) { j["format"] = "gal-v0"; }));
        }) == errc::parse_error);
  CHECK(thrown_code([&] {
          parse_artifact(mutate(
              [](auto& j) { j["field"]["zeta"] = j["field"]["zeta"].template get<std::int64_t>() + 1; }));
        }) == errc::parse_error);
  CHECK(thrown_code([&] {
          parse_artifact(mutate([](auto& j) { j["n"] = 7; }));
        }) == errc::parse_error);
  CHECK(thrown_code([&] {
          parse_artifact(mutate([](auto& j) { j["parameters"]["kappa"] = {1}; }));
        }) == errc::parse_error);
  CHECK(thrown_code([&] {
          parse_artifact(mutate([](auto& j) { j["parameters"]["kind"] = "frobnicate"; }));
        }) == errc::parse_error);
  CHECK(thrown_code([&] {
          parse_artifact(mutate([](auto& j) { j["parameters"]["kappa"] = {-1, 4}; }));
        }) == errc::parse_error);
}

TEST_CASE("bare parameter blocks parse on their own") {
  for (const ParamTuple& p : {antiauto_tuple(), type2_tuple()}) {
    nlohmann::ordered_json j =
        nlohmann::ordered_json::parse(serialize_artifact(make_artifact(p)));
    nlohmann::ordered_json bare;
    bare["group"] = j["group"];
    bare["parameters"] = j["parameters"];
    CHECK(parse_params(bare.dump()) == p);
  }
  CHECK(thrown_code([] { parse_params("[]"); }) == errc::parse_error);
}

TEST_CASE("decision records carry the witness or the refutation") {
  FinAbGroup z2 = make_group({2});
  ParamTuple p = assoc_tuple(z2, {2, 1});
  ParamTuple q = assoc_tuple(z2, {1, 2});
  IsoDecision d = decide_iso(p, q);
  nlohmann::json j = nlohmann::json::parse(decision_json(p, q, d));
  CHECK(j["verdict"] == "equivalent");
  CHECK(j["witness"]["g"] == nlohmann::json({1}));
  CHECK(j["witness"]["flavor"] == "shift");
  CHECK_FALSE(j.contains("refutation"));

  ParamTuple a = sample_tuples()[6];
  ParamTuple b = a;
  b.g0 = Elem{1};
  IsoDecision nd = decide_iso(a, b);
  REQUIRE_FALSE(nd.equivalent);
  nlohmann::json nj = nlohmann::json::parse(decision_json(a, b, nd));
  CHECK(nj["verdict"] == "inequivalent");
  CHECK(nj["refutation"]["checked_g_count"] == 2);
  CHECK(nj["refutation"].contains("fingerprint_delta"));

  nlohmann::json fj = nlohmann::json::parse(fingerprint_json(fingerprint_of(a)));
  CHECK(fj.contains("support"));
  CHECK(fj.contains("dims"));
  CHECK(fj.contains("subgroup_factors"));
  CHECK(fj.contains("block_sizes"));
}

TEST_CASE("the orthogonal census over Z2 matches the hand count") {
  FinAbGroup z2 = make_group({2});
  SweepResult r = sweep_census(z2, ParamKind::so, 2);
  CHECK(r.tuples == 4);
  REQUIRE(r.classes.size() == 3);
  int ones = 0;
  for (const SweepClass& cls : r.classes) {
    CHECK(cls.n == 2);
    CHECK_NOTHROW(realize(cls.rep));
    if (cls.rep.kappa == KappaMap{{1, 1}}) ++ones;
    if (cls.rep.kappa == KappaMap{{2, 0}}) CHECK(cls.size == 2);
  }
  CHECK(ones == 2);

  CHECK(census_table(r) ==
        "census kind=so group=[2] max-n=2\n"
        "tuples=4 classes=3\n"
        "n=2: 3 classes\n"
        "  [1] size=2 T=[[0]] beta#0 kappa=[2,0] g0=[0]\n"
        "  [2] size=1 T=[[0]] beta#0 kappa=[1,1] g0=[0]\n"
        "  [3] size=1 T=[[0]] beta#0 kappa=[1,1] g0=[1]\n");
}

TEST_CASE("censuses are deterministic and stable under a larger bound") {
  FinAbGroup z2 = make_group({2});
  SweepResult r2 = sweep_census(z2, ParamKind::so, 2);
  CHECK(census_table(r2) == census_table(sweep_census(z2, ParamKind::so, 2)));

  SweepResult r4 = sweep_census(z2, ParamKind::so, 4);
  std::vector<SweepClass> low;
  for (const SweepClass& cls : r4.classes)
    if (cls.n <= 2) low.push_back(cls);
  REQUIRE(low.size() == r2.classes.size());
  for (std::size_t i = 0; i < low.size(); ++i) {
    CHECK(low[i].rep == r2.classes[i].rep);
    CHECK(low[i].size == r2.classes[i].size);
  }
}

TEST_CASE("trivially graded censuses count matrix sizes") {
  FinAbGroup triv = make_group({});
  SweepResult so3 = sweep_census(triv, ParamKind::so, 3);
  REQUIRE(so3.classes.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(so3.classes[i].n == static_cast<int>(i) + 2);
    CHECK(so3.classes[i].size == 1);
  }

  SweepResult sp4 = sweep_census(triv, ParamKind::sp, 4);
  REQUIRE(sp4.classes.size() == 2);
  CHECK(sp4.classes[0].n == 2);
  CHECK(sp4.classes[1].n == 4);

  CHECK(sweep_census(triv, ParamKind::assoc, 3).classes.size() == 3);
  CHECK(sweep_census(triv, ParamKind::sl_i, 3).classes.size() == 2);

  SweepResult none = sweep_census(triv, ParamKind::sl_ii, 4);
  CHECK(none.tuples == 0);
  CHECK(none.classes.empty());

  CHECK(thrown_code([&] { sweep_census(triv, ParamKind::assoc_antiauto, 3); }) ==
        errc::unsupported);
  CHECK(thrown_code([&] { sweep_census(triv, ParamKind::so, 0); }) ==
        errc::invalid_parameter);
}

TEST_CASE("the type-II census over Z4 matches the hand count") {
  SweepResult r = sweep_census(make_group({4}), ParamKind::sl_ii, 3);
  CHECK(r.tuples == 10);
  REQUIRE(r.classes.size() == 5);
  std::map<int, int> per_n;
  for (const SweepClass& cls : r.classes) {
    CHECK(cls.size == 2);
    ++per_n[cls.n];
    CHECK_NOTHROW(realize(cls.rep));
  }
  CHECK(per_n[2] == 3);
  CHECK(per_n[3] == 2);
}

TEST_CASE("refinement shows up in associative verification") {
  Artifact assoc = make_artifact(sample_tuples()[0]);
  CHECK(verify_artifact(assoc, true).ok());

  Artifact so2 = make_artifact(sample_tuples()[6]);
  ArtifactReport rep = verify_artifact(so2, true);
  CHECK_FALSE(rep.ok());

  FinAbGroup z2 = make_group({2});
  ParamTuple bench;
  bench.kind = ParamKind::sl_ii;
  bench.group = z2;
  bench.support = Subgroup::full(z2);
  bench.h = Elem{1};
  Quotient qu = Quotient::build(z2, Subgroup::full(z2));
  bench.beta = Bicharacter::trivial(Subgroup::trivial(qu.group()));
  bench.kappa = KappaMap{{4}};
  bench.mu0 = RootOfUnity::one();
  bench.g0 = qu.group().id();
  ArtifactReport ref = verify_artifact(make_artifact(bench), true);
  REQUIRE_FALSE(ref.ok());
  bool escaped = false;
  for (const std::string& v : ref.violations)
    escaped = escaped || v == "associative: a product escapes its component";
  CHECK(escaped);
  CHECK(verify_artifact(make_artifact(bench)).ok());
}
