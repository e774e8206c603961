#include "gal/sweep.hpp"

#include <algorithm>
#include <future>
#include <memory>
#include <sstream>
#include <thread>
#include <utility>

#include "gal/error.hpp"

namespace gal {

namespace {

void compositions_rec(std::size_t parts, std::int64_t total,
                      std::vector<std::int64_t>& cur,
                      std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::int64_t first = total; first >= 0; --first) {
    cur.push_back(first);
    compositions_rec(parts, total - first, cur, out);
    cur.pop_back();
  }
}

/// All multiplicity vectors of the given length and total, leading entries
/// descending first.
std::vector<std::vector<std::int64_t>> compositions(std::size_t parts,
                                                    std::int64_t total) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  compositions_rec(parts, total, cur, out);
  return out;
}

/// Shared immutable inputs of one validity check.
struct Ctx {
  std::shared_ptr<const PauliAlgebra> d;
  CosetTable ct;
  Character chi2;  // sl-II only
};

struct Candidate {
  ParamTuple tuple;
  int n = 0;
  int ctx = -1;
};

bool candidate_valid(const Candidate& c, const std::vector<Ctx>& ctxs) {
  const ParamTuple& p = c.tuple;
  switch (p.kind) {
    case ParamKind::assoc:
    case ParamKind::sl_i:
      return true;
    case ParamKind::assoc_antiauto:
      return false;
    case ParamKind::assoc_involution:
    case ParamKind::so:
    case ParamKind::sp: {
      const Ctx& cx = ctxs[c.ctx];
      int delta = p.kind == ParamKind::so    ? 1
                  : p.kind == ParamKind::sp ? -1
                                            : p.delta;
      return exist_involution(cx.ct, p.kappa, *cx.d, delta);
    }
    case ParamKind::sl_ii: {
      const Ctx& cx = ctxs[c.ctx];
      MuMap mu;
      try {
        mu = mu_from_type2(cx.ct, *cx.d, cx.chi2, p.mu0);
      } catch (const GalError&) {
        return false;
      }
      if (!mu_paired(cx.ct, mu)) return false;
      for (std::size_t a = 0; a < cx.ct.coset_count(); ++a) {
        if (cx.ct.self_paired(a)) {
          if (mu.values[a] == RootOfUnity::minus_one() && p.kappa.mult[a] % 2 != 0)
            return false;
        } else if (p.kappa.mult[a] != p.kappa.mult[cx.ct.partner(a)]) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

std::vector<char> validity_mask(const std::vector<Candidate>& cands,
                                const std::vector<Ctx>& ctxs) {
  std::vector<char> ok(cands.size(), 1);
  bool any = false;
  for (const Candidate& c : cands) any = any || c.ctx >= 0;
  if (!any) return ok;
  auto eval = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      ok[i] = candidate_valid(cands[i], ctxs) ? 1 : 0;
  };
  std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  if (workers == 1 || cands.size() < 4 * workers) {
    eval(0, cands.size());
    return ok;
  }
  std::size_t chunk = (cands.size() + workers - 1) / workers;
  std::vector<std::future<void>> parts;
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(cands.size(), lo + chunk);
    if (lo >= hi) break;
    parts.push_back(std::async(std::launch::async, eval, lo, hi));
  }
  for (auto& part : parts) part.get();
  return ok;
}

std::string ints_str(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string elems_str(const std::vector<Elem>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += ints_str(xs[i]);
  }
  return s + "]";
}

std::string root_str(const RootOfUnity& r) {
  if (r.is_one()) return "+1";
  if (r == RootOfUnity::minus_one()) return "-1";
  return r.str();
}

std::size_t beta_index(const Bicharacter& b) {
  std::vector<Bicharacter> all = enumerate_alternating_bicharacters(b.subgroup());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == b) return i;
  return all.size();
}

std::string param_brief(const ParamTuple& p) {
  std::ostringstream os;
  if (p.kind == ParamKind::sl_ii) {
    os << "H=" << elems_str(p.support.elements()) << " h=" << ints_str(p.h)
       << " beta#" << beta_index(p.beta) << " kappa=" << ints_str(p.kappa.mult)
       << " g0=" << ints_str(p.g0) << " mu0=" << root_str(p.mu0);
    return os.str();
  }
  os << "T=" << elems_str(p.support.elements()) << " beta#" << beta_index(p.beta)
     << " kappa=" << ints_str(p.kappa.mult);
  if (p.kind == ParamKind::assoc_involution)
    os << " g0=" << ints_str(p.g0) << " delta=" << (p.delta == 1 ? "+1" : "-1");
  if (p.kind == ParamKind::so || p.kind == ParamKind::sp)
    os << " g0=" << ints_str(p.g0);
  return os.str();
}

}  // namespace

SweepResult sweep_census(const FinAbGroup& g, ParamKind kind, int max_n) {
  require(max_n >= 1, errc::invalid_parameter, "the size bound must be positive");
  require(kind != ParamKind::assoc_antiauto, errc::unsupported,
          "scalar maps range over all roots of unity; sweep the involution kinds instead");
  SweepResult res;
  res.group = g;
  res.kind = kind;
  res.max_n = max_n;
  // the Lie families need n >= 2; the associative kinds start at n = 1
  int min_n = kind == ParamKind::assoc || kind == ParamKind::assoc_involution ? 1 : 2;

  std::vector<Ctx> ctxs;
  std::vector<Candidate> cands;
  bool needs_form = kind == ParamKind::assoc_involution || kind == ParamKind::so ||
                    kind == ParamKind::sp;

  if (kind == ParamKind::sl_ii) {
    for (const Subgroup& hsub : enumerate_subgroups(g)) {
      if (!hsub.is_elementary_2() || hsub.order() < 2) continue;
      for (const Elem& h : hsub.elements()) {
        if (g.order_of(h) != 2) continue;
        Quotient qu = Quotient::build(g, Subgroup::from_generators(g, {h}));
        const FinAbGroup qg = qu.group();
        std::vector<Elem> im;
        for (const Elem& x : hsub.elements()) im.push_back(qu.project(x));
        std::sort(im.begin(), im.end());
        im.erase(std::unique(im.begin(), im.end()), im.end());
        Subgroup tbar(qg, std::move(im));
        std::int64_t block = 0;
        if (!tbar.square_order(&block)) continue;
        Character chi = solve_character(g, {{h, RootOfUnity::minus_one()}});
        Character chi2 = descend_square(qu, chi);
        for (const Bicharacter& beta : enumerate_alternating_bicharacters(tbar)) {
          auto d = std::make_shared<const PauliAlgebra>(PauliAlgebra::build(
              tbar, beta,
              RootField::make(model_orders(qg, symplectic_basis(tbar, beta)))));
          for (const Elem& g0b : qg.elements()) {
            CosetTable ct = CosetTable::build(qg, tbar, g0b);
            std::size_t cosets = ct.coset_count();
            ctxs.push_back({d, std::move(ct), chi2});
            RootOfUnity target = chi2.value(g0b).inv();
            RootOfUnity mu0s[2] = {
                RootOfUnity::make(target.num, 2 * target.den),
                RootOfUnity::make(target.num + target.den, 2 * target.den)};
            for (std::int64_t m = 1; m * block <= max_n; ++m) {
              if (m * block < min_n) continue;
              for (const auto& mult : compositions(cosets, m))
                for (const RootOfUnity& mu0 : mu0s) {
                  ParamTuple p;
                  p.kind = kind;
                  p.group = g;
                  p.support = hsub;
                  p.beta = beta;
                  p.kappa.mult = mult;
                  p.g0 = g0b;
                  p.h = h;
                  p.mu0 = mu0;
                  cands.push_back({std::move(p), static_cast<int>(m * block),
                                   static_cast<int>(ctxs.size()) - 1});
                }
            }
          }
        }
      }
    }
  } else {
    for (const Subgroup& t : enumerate_subgroups(g)) {
      std::int64_t block = 0;
      if (!t.square_order(&block)) continue;
      if (needs_form && !t.is_elementary_2()) continue;
      for (const Bicharacter& beta : enumerate_alternating_bicharacters(t)) {
        std::shared_ptr<const PauliAlgebra> d;
        if (needs_form)
          d = std::make_shared<const PauliAlgebra>(PauliAlgebra::build(
              t, beta, RootField::make(model_orders(g, symplectic_basis(t, beta)))));
        std::size_t cosets = CosetTable::build(g, t).coset_count();
        if (!needs_form) {
          for (std::int64_t m = 1; m * block <= max_n; ++m) {
            if (m * block < min_n) continue;
            for (const auto& mult : compositions(cosets, m)) {
              ParamTuple p;
              p.kind = kind;
              p.group = g;
              p.support = t;
              p.beta = beta;
              p.kappa.mult = mult;
              cands.push_back({std::move(p), static_cast<int>(m * block), -1});
            }
          }
          continue;
        }
        for (const Elem& g0 : g.elements()) {
          ctxs.push_back({d, CosetTable::build(g, t, g0), Character()});
          for (std::int64_t m = 1; m * block <= max_n; ++m) {
            if (m * block < min_n) continue;
            for (const auto& mult : compositions(cosets, m)) {
              int deltas_lo = kind == ParamKind::assoc_involution ? -1 : 0;
              for (int delta = deltas_lo; delta <= (deltas_lo ? 1 : 0); delta += 2) {
                ParamTuple p;
                p.kind = kind;
                p.group = g;
                p.support = t;
                p.beta = beta;
                p.kappa.mult = mult;
                p.g0 = g0;
                if (kind == ParamKind::assoc_involution) p.delta = delta;
                cands.push_back({std::move(p), static_cast<int>(m * block),
                                 static_cast<int>(ctxs.size()) - 1});
              }
            }
          }
        }
      }
    }
  }

  std::vector<char> ok = validity_mask(cands, ctxs);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!ok[i]) continue;
    ++res.tuples;
    bool placed = false;
    for (SweepClass& cls : res.classes) {
      if (cls.n != cands[i].n) continue;
      if (decide_iso(cls.rep, cands[i].tuple).equivalent) {
        ++cls.size;
        placed = true;
        break;
      }
    }
    if (!placed) res.classes.push_back({cands[i].tuple, cands[i].n, 1});
  }
  std::stable_sort(res.classes.begin(), res.classes.end(),
                   [](const SweepClass& a, const SweepClass& b) { return a.n < b.n; });
  return res;
}

std::string census_table(const SweepResult& r) {
  std::ostringstream os;
  os << "census kind=" << param_kind_name(r.kind) << " group="
     << ints_str(r.group.factors()) << " max-n=" << r.max_n << "\n";
  os << "tuples=" << r.tuples << " classes=" << r.classes.size() << "\n";
  std::size_t i = 0;
  std::size_t label = 1;
  while (i < r.classes.size()) {
    std::size_t j = i;
    while (j < r.classes.size() && r.classes[j].n == r.classes[i].n) ++j;
    os << "n=" << r.classes[i].n << ": " << (j - i)
       << (j - i == 1 ? " class" : " classes") << "\n";
    for (std::size_t k = i; k < j; ++k, ++label)
      os << "  [" << label << "] size=" << r.classes[k].size << " "
         << param_brief(r.classes[k].rep) << "\n";
    i = j;
  }
  return os.str();
}

}  // namespace gal
