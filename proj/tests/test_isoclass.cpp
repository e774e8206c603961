#include <algorithm>
#include <functional>
#include <vector>

#include "doctest.h"
#include "gal/error.hpp"
#include "gal/isoclass.hpp"

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

ParamTuple form_tuple(ParamKind kind, const FinAbGroup& g,
                      std::vector<std::int64_t> kappa, Elem g0, int delta = 0) {
  ParamTuple p = assoc_tuple(g, std::move(kappa));
  p.kind = kind;
  p.g0 = std::move(g0);
  p.delta = delta;
  return p;
}

}  // namespace

TEST_CASE("multiplicity shifts decide plain equivalence") {
  FinAbGroup g = make_group({2});
  ParamTuple p = assoc_tuple(g, {2, 1});
  ParamTuple q = assoc_tuple(g, {1, 2});

  IsoDecision d = decide_assoc(p, q);
  CHECK(d.equivalent);
  CHECK(d.shift == Elem{1});
  MatrixF u = verify_witness(p, q, d);
  CHECK(u.rows == 3);

  IsoDecision self = decide_iso(p, p);
  CHECK(self.equivalent);
  CHECK(self.shift == g.id());

  IsoDecision no = decide_assoc(p, assoc_tuple(g, {3, 0}));
  CHECK_FALSE(no.equivalent);
  CHECK(no.checked == 2);
  CHECK(no.reason == "no shift matches the multiplicity map");

  FinAbGroup g4 = make_group({4});
  ParamTuple other = assoc_tuple(g4, {2, 1, 0, 0});
  CHECK(thrown_code([&] { decide_assoc(p, other); }) == errc::invalid_parameter);

  ParamTuple wide = assoc_tuple(g4, {1, 1, 1, 0});
  ParamTuple widet = wide;
  widet.support = Subgroup::full(g4);
  widet.beta = Bicharacter::trivial(widet.support);
  widet.kappa = KappaMap{{3}};
  CHECK(decide_assoc(wide, widet).reason == "different supports");
}

TEST_CASE("shifted tuples come back equivalent with a checked witness") {
  FinAbGroup g = make_group({4});
  ParamTuple p = assoc_tuple(g, {1, 0, 2, 1});
  for (const Elem& s : g.elements()) {
    ParamTuple q = shift_tuple(p, s);
    IsoDecision d = decide_assoc(p, q);
    CHECK(d.equivalent);
    CHECK_NOTHROW(verify_witness(p, q, d));
  }

  Elem a{1};
  Elem b{3};
  ParamTuple once = shift_tuple(shift_tuple(p, a), b);
  ParamTuple direct = shift_tuple(p, g.add(a, b));
  CHECK(once.kappa == direct.kappa);
}

TEST_CASE("plain equivalence is an equivalence relation on a small census") {
  FinAbGroup g = make_group({4});
  std::vector<ParamTuple> tuples;
  for (std::int64_t n = 1; n <= 3; ++n)
    for (std::int64_t k0 = 0; k0 <= n; ++k0)
      for (std::int64_t k1 = 0; k0 + k1 <= n; ++k1)
        for (std::int64_t k2 = 0; k0 + k1 + k2 <= n; ++k2)
          tuples.push_back(assoc_tuple(g, {k0, k1, k2, n - k0 - k1 - k2}));

  std::vector<std::size_t> reps;
  for (const ParamTuple& p : tuples) {
    CHECK(decide_assoc(p, p).equivalent);
    bool placed = false;
    for (std::size_t r : reps) {
      IsoDecision pq = decide_assoc(tuples[r], p);
      IsoDecision qp = decide_assoc(p, tuples[r]);
      CHECK(pq.equivalent == qp.equivalent);
      if (pq.equivalent && !placed) placed = true;
    }
    if (!placed) reps.push_back(&p - tuples.data());
  }
  CHECK(tuples.size() == 34);
  CHECK(reps.size() == 9);

  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = i + 1; j < reps.size(); ++j)
      CHECK_FALSE(decide_assoc(tuples[reps[i]], tuples[reps[j]]).equivalent);
}

TEST_CASE("base points and signs split involution classes") {
  FinAbGroup g = make_group({2});
  ParamTuple a = form_tuple(ParamKind::assoc_involution, g, {1, 1}, Elem{0}, 1);
  ParamTuple b = form_tuple(ParamKind::assoc_involution, g, {1, 1}, Elem{1}, 1);
  IsoDecision d = decide_involution(a, b);
  CHECK_FALSE(d.equivalent);
  CHECK(d.checked == 2);

  ParamTuple c = form_tuple(ParamKind::assoc_involution, g, {2, 0}, Elem{0}, 1);
  ParamTuple e = form_tuple(ParamKind::assoc_involution, g, {2, 0}, Elem{0}, -1);
  CHECK(decide_involution(c, e).reason == "different signs");

  ParamTuple shifted = shift_tuple(e, Elem{1});
  CHECK(shifted.kappa == KappaMap{{0, 2}});
  IsoDecision de = decide_involution(e, shifted);
  CHECK(de.equivalent);
  CHECK(de.shift == Elem{1});
  CHECK_NOTHROW(verify_witness(e, shifted, de));

  IsoDecision da = decide_involution(a, a);
  CHECK(da.equivalent);
  CHECK_NOTHROW(verify_witness(a, a, da));
}

TEST_CASE("scalar maps decide antiautomorphism classes") {
  FinAbGroup g = make_group({4});
  RootOfUnity i4 = RootOfUnity::make(1, 4);
  ParamTuple p = form_tuple(ParamKind::assoc_antiauto, g, {1, 1, 2, 1}, Elem{0});
  p.mu = MuMap{{RootOfUnity::one(), i4, RootOfUnity::minus_one(), i4.inv()}};

  for (const Elem& s : g.elements()) {
    ParamTuple q = shift_tuple(p, s);
    IsoDecision d = decide_antiauto(p, q);
    CHECK(d.equivalent);
    CHECK_NOTHROW(verify_witness(p, q, d));
  }

  ParamTuple q = p;
  q.mu = MuMap{{RootOfUnity::one(), i4, RootOfUnity::one(), i4.inv()}};
  IsoDecision d = decide_antiauto(p, q);
  CHECK_FALSE(d.equivalent);
  CHECK(d.checked == 4);
  CHECK(d.reason == "no shift matches the base degree, multiplicities and scalars");
}

TEST_CASE("special linear deciders use both branches") {
  FinAbGroup g = make_group({3, 3});
  Subgroup t = Subgroup::full(g);
  Bicharacter beta = enumerate_alternating_bicharacters(t).front();
  ParamTuple p;
  p.kind = ParamKind::sl_i;
  p.group = g;
  p.support = t;
  p.beta = beta;
  p.kappa = KappaMap{{1}};

  IsoDecision self = decide_sl(p, p);
  CHECK(self.equivalent);
  CHECK_FALSE(self.reversal);
  CHECK_NOTHROW(verify_witness(p, p, self));

  ParamTuple q = shift_tuple(p, g.id(), true);
  CHECK(q.beta == beta.inverse());
  IsoDecision d = decide_sl(p, q);
  CHECK(d.equivalent);
  CHECK(d.reversal);
  MatrixF u = verify_witness(p, q, d);
  CHECK(u.rows == 3);

  IsoDecision back = decide_sl(q, p);
  CHECK(back.equivalent);
  CHECK(back.reversal);
}

TEST_CASE("the transpose branch is needed for lopsided multiplicities") {
  FinAbGroup g = make_group({2, 8});
  Subgroup t = Subgroup::from_generators(g, {Elem{1, 0}, Elem{0, 4}});
  Bicharacter beta = enumerate_alternating_bicharacters(t).front();
  ParamTuple p;
  p.kind = ParamKind::sl_i;
  p.group = g;
  p.support = t;
  p.beta = beta;
  p.kappa = KappaMap{{2, 1, 1, 0}};

  ParamTuple q = shift_tuple(p, g.id(), true);
  CHECK(q.kappa == KappaMap{{2, 0, 1, 1}});
  CHECK(q.beta == beta);

  IsoDecision d = decide_sl(p, q);
  CHECK(d.equivalent);
  CHECK(d.reversal);
  CHECK(d.checked == 17);
  CHECK_NOTHROW(verify_witness(p, q, d));

  ParamTuple far = p;
  far.kappa = KappaMap{{2, 1, 0, 1}};
  IsoDecision miss = decide_sl(p, far);
  CHECK_FALSE(miss.equivalent);
  CHECK(miss.checked == 32);
  CHECK(miss.reason == "no shift matches the multiplicity map on either branch");
}

TEST_CASE("type two decisions act through the quotient") {
  FinAbGroup g = make_group({4});
  Elem h{2};
  Subgroup hsub = Subgroup::from_generators(g, {h});
  Quotient qu = Quotient::build(g, hsub);
  Subgroup tbar = Subgroup::trivial(qu.group());

  ParamTuple p;
  p.kind = ParamKind::sl_ii;
  p.group = g;
  p.support = hsub;
  p.h = h;
  p.beta = Bicharacter::trivial(tbar);
  p.kappa = KappaMap{{2, 1}};
  p.mu0 = RootOfUnity::minus_one();
  p.g0 = qu.group().id();

  ParamTuple q = shift_tuple(p, Elem{1});
  CHECK(q.kappa == KappaMap{{1, 2}});
  CHECK(q.mu0 == RootOfUnity::one());
  IsoDecision d = decide_sl(p, q);
  CHECK(d.equivalent);
  CHECK_NOTHROW(verify_witness(p, q, d));

  IsoDecision self = decide_sl(p, p);
  CHECK(self.equivalent);
  CHECK(self.shift == g.id());
  CHECK_NOTHROW(verify_witness(p, p, self));

  ParamTuple flip = p;
  flip.mu0 = RootOfUnity::one();
  IsoDecision dm = decide_sl(p, flip);
  CHECK_FALSE(dm.equivalent);
  CHECK(dm.checked == 4);

  ParamTuple moved = shift_tuple(p, h);
  CHECK(moved.kappa == p.kappa);
  CHECK(moved.mu0 == p.mu0);
  IsoDecision dh = decide_sl(p, moved);
  CHECK(dh.equivalent);
  CHECK(dh.shift == g.id());
}

TEST_CASE("type mismatches refute without search") {
  FinAbGroup g = make_group({2, 2});
  Elem h10{1, 0};
  Elem h01{0, 1};
  auto type2 = [&](const Subgroup& hsub, const Elem& h) {
    Quotient qu = Quotient::build(g, Subgroup::from_generators(g, {h}));
    Subgroup tbar = Subgroup::trivial(qu.group());
    ParamTuple p;
    p.kind = ParamKind::sl_ii;
    p.group = g;
    p.support = hsub;
    p.h = h;
    p.beta = Bicharacter::trivial(tbar);
    p.kappa = KappaMap{{1, 1}};
    p.mu0 = RootOfUnity::minus_one();
    p.g0 = qu.group().id();
    return p;
  };
  Subgroup s10 = Subgroup::from_generators(g, {h10});
  Subgroup s01 = Subgroup::from_generators(g, {h01});
  IsoDecision d = decide_sl(type2(s10, h10), type2(s01, h01));
  CHECK_FALSE(d.equivalent);
  CHECK(d.reason == "different subgroups");
  CHECK(d.checked == 0);

  Subgroup whole = Subgroup::full(g);
  IsoDecision dh = decide_sl(type2(whole, h10), type2(whole, h01));
  CHECK_FALSE(dh.equivalent);
  CHECK(dh.reason == "different distinguished elements");

  ParamTuple one;
  one.kind = ParamKind::sl_i;
  one.group = g;
  one.support = Subgroup::trivial(g);
  one.beta = Bicharacter::trivial(one.support);
  one.kappa = KappaMap{{1, 1, 0, 0}};
  IsoDecision dt = decide_sl(one, type2(s10, h10));
  CHECK_FALSE(dt.equivalent);
  CHECK(dt.reason == "different types");
}

TEST_CASE("orthogonal base points are separated and fingerprinted") {
  FinAbGroup g = make_group({2});
  ParamTuple a = form_tuple(ParamKind::so, g, {1, 1}, Elem{0});
  ParamTuple b = form_tuple(ParamKind::so, g, {1, 1}, Elem{1});

  IsoDecision d = decide_so_sp(a, b);
  CHECK_FALSE(d.equivalent);
  CHECK(d.checked == 2);

  Fingerprint fa = fingerprint_of(a);
  Fingerprint fb = fingerprint_of(b);
  CHECK(fa.support == std::vector<Elem>{{1}});
  CHECK(fb.support == std::vector<Elem>{{0}});
  CHECK(fa.block_sizes == std::vector<std::int64_t>{2});
  CHECK(fb.block_sizes == std::vector<std::int64_t>{1, 1});
  FingerprintDelta delta = fingerprint_compare(fa, fb);
  CHECK_FALSE(delta.equal);
  CHECK(delta.discrepancy.substr(0, 7) == "support");

  IsoDecision mixed =
      decide_so_sp(a, form_tuple(ParamKind::sp, g, {1, 1}, Elem{0}));
  CHECK_FALSE(mixed.equivalent);
  CHECK(mixed.reason == "different families");
}

TEST_CASE("form family witnesses transport the gram matrix") {
  FinAbGroup g2 = make_group({2});
  ParamTuple s1 = form_tuple(ParamKind::sp, g2, {2, 0}, Elem{0});
  ParamTuple s2 = form_tuple(ParamKind::sp, g2, {0, 2}, Elem{0});
  IsoDecision d = decide_so_sp(s1, s2);
  CHECK(d.equivalent);
  CHECK(d.shift == Elem{1});
  CHECK_NOTHROW(verify_witness(s1, s2, d));

  FinAbGroup g4 = make_group({4});
  ParamTuple p = form_tuple(ParamKind::so, g4, {1, 2, 2, 1}, Elem{1});
  ParamTuple q = shift_tuple(p, Elem{1});
  CHECK(q.g0 == Elem{3});
  IsoDecision dp = decide_so_sp(p, q);
  CHECK(dp.equivalent);
  CHECK_NOTHROW(verify_witness(p, q, dp));
}

TEST_CASE("fingerprints are invariant but not complete") {
  FinAbGroup g = make_group({4});
  ParamTuple base = assoc_tuple(g, {2, 0, 1, 1});
  Fingerprint fb = fingerprint_of(base);
  for (const Elem& s : g.elements())
    CHECK(fingerprint_compare(fb, fingerprint_of(shift_tuple(base, s))).equal);

  ParamTuple left = assoc_tuple(g, {2, 1, 0, 0});
  ParamTuple right = assoc_tuple(g, {2, 0, 0, 1});
  CHECK_FALSE(decide_assoc(left, right).equivalent);
  CHECK(fingerprint_compare(fingerprint_of(left), fingerprint_of(right)).equal);

  Fingerprint fl = fingerprint_of(left);
  CHECK(fl.dims == std::vector<std::int64_t>{5, 2, 2});
  CHECK(fl.subgroup_factors == std::vector<std::int64_t>{4});
  CHECK(fl.block_sizes == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("witness claims are checked and rejected") {
  FinAbGroup g = make_group({2});
  ParamTuple p = assoc_tuple(g, {2, 1});
  ParamTuple q = assoc_tuple(g, {1, 2});

  IsoDecision fake;
  fake.equivalent = true;
  fake.shift = Elem{0};
  CHECK(thrown_code([&] { verify_witness(p, q, fake); }) ==
        errc::verification_failure);

  IsoDecision refuted;
  CHECK(thrown_code([&] { verify_witness(p, q, refuted); }) ==
        errc::invalid_parameter);

  ParamTuple so2 = form_tuple(ParamKind::so, g, {1, 1}, Elem{0});
  CHECK(thrown_code([&] { decide_iso(p, so2); }) == errc::invalid_parameter);
}
