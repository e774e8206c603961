#include "gal/pauli.hpp"

#include <map>

#include "gal/error.hpp"
#include "gal/subspace.hpp"

namespace gal {

namespace {

MatrixF clock_matrix(const RootField& f, std::int64_t l) {
  MatrixF d(static_cast<int>(l), static_cast<int>(l));
  for (std::int64_t i = 0; i < l; ++i)
    d.at(static_cast<int>(i), static_cast<int>(i)) = f.pow(f.zeta(l), i);
  return d;
}

MatrixF shift_matrix(std::int64_t l) {
  MatrixF p(static_cast<int>(l), static_cast<int>(l));
  for (std::int64_t j = 0; j < l; ++j)
    p.at(static_cast<int>((j + 1) % l), static_cast<int>(j)) = 1;
  return p;
}

}  // namespace

PauliAlgebra PauliAlgebra::build(const Subgroup& t, const Bicharacter& beta,
                                 const RootField& f) {
  validate_bicharacter(beta);
  require(beta.subgroup() == t, errc::invalid_parameter,
          "bicharacter is defined on a different support");
  PauliAlgebra d;
  d.t_ = t;
  d.beta_ = beta;
  d.sb_ = symplectic_basis(t, beta);
  d.f_ = f;

  const auto& pairs = d.sb_.pairs;
  const auto& orders = d.sb_.orders;
  std::int64_t l = 1;
  for (std::int64_t o : orders) l *= o;
  d.dim_ = static_cast<int>(l);

  // Exponent tuples (a_i, b_i) per element of T, via mixed-radix enumeration
  // over the split coordinates.
  std::size_t k = pairs.size();
  std::size_t nt = static_cast<std::size_t>(t.order());
  std::vector<std::vector<std::int64_t>> coords(nt);
  {
    const FinAbGroup& g = t.parent();
    std::vector<std::int64_t> tup(2 * k, 0);
    std::size_t count = 0;
    while (true) {
      Elem e = g.id();
      for (std::size_t i = 0; i < k; ++i) {
        e = g.add(e, g.mul_int(pairs[i].first, tup[2 * i]));
        e = g.add(e, g.mul_int(pairs[i].second, tup[2 * i + 1]));
      }
      std::size_t idx = t.index_of(e);
      require(coords[idx].empty() || idx == t.index_of(g.id()),
              errc::internal_error, "split coordinates collide");
      if (coords[idx].empty()) ++count;
      coords[idx] = tup;
      std::size_t pos = 0;
      for (; pos < 2 * k; ++pos) {
        if (++tup[pos] < orders[pos / 2]) break;
        tup[pos] = 0;
      }
      if (pos == 2 * k) break;
    }
    require(count == nt, errc::internal_error, "split coordinates incomplete");
  }

  // X_t as Kronecker product of per-slot ordered powers D^a P^b.
  d.x_.resize(nt);
  std::vector<MatrixF> dmat(k), pmat(k);
  for (std::size_t i = 0; i < k; ++i) {
    dmat[i] = clock_matrix(f, orders[i]);
    pmat[i] = shift_matrix(orders[i]);
  }
  for (std::size_t idx = 0; idx < nt; ++idx) {
    MatrixF m = MatrixF::identity(1);
    for (std::size_t i = 0; i < k; ++i) {
      MatrixF slot = mat_mul(f, mat_pow(f, dmat[i], coords[idx][2 * i]),
                             mat_pow(f, pmat[i], coords[idx][2 * i + 1]));
      m = mat_kron(f, m, slot);
    }
    d.x_[idx] = m;
  }

  // sigma(s, t) = prod_i zeta_(l_i)^(-a'_i b_i), then verified against the
  // actual matrix products.
  const FinAbGroup& g = t.parent();
  d.sigma_.assign(nt, std::vector<RootOfUnity>(nt));
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t j = 0; j < nt; ++j) {
      RootOfUnity s = RootOfUnity::one();
      for (std::size_t q = 0; q < k; ++q) {
        std::int64_t b = coords[i][2 * q + 1];
        std::int64_t ap = coords[j][2 * q];
        s = s.mul(RootOfUnity::make(-ap * b, orders[q]));
      }
      d.sigma_[i][j] = s;
      MatrixF prod = mat_mul(f, d.x_[i], d.x_[j]);
      std::size_t ij = t.index_of(g.add(t.elements()[i], t.elements()[j]));
      MatrixF expect = mat_scale(f, f.root(s), d.x_[ij]);
      require(prod == expect, errc::internal_error, "twist table mismatch");
      // sigma(s,t) / sigma(t,s) must reproduce beta.
      if (j <= i) {
        RootOfUnity ratio = d.sigma_[i][j].mul(d.sigma_[j][i].inv());
        require(ratio == beta.eval_idx(i, j), errc::invalid_bicharacter,
                "matrix commutation disagrees with the requested bicharacter");
      }
    }

  {
    MatrixF flat(static_cast<int>(nt), d.dim_ * d.dim_);
    for (std::size_t i = 0; i < nt; ++i)
      for (int e = 0; e < d.dim_ * d.dim_; ++e) flat.at(static_cast<int>(i), e) = d.x_[i].a[e];
    require(Subspace::from_rows(f, flat).dim() == static_cast<int>(nt),
            errc::internal_error, "component matrices are dependent");
  }

  if (t.is_elementary_2()) {
    d.sign_.resize(nt);
    for (std::size_t i = 0; i < nt; ++i) {
      std::int64_t e2 = 0;
      for (std::size_t q = 0; q < k; ++q) e2 += coords[i][2 * q] * coords[i][2 * q + 1];
      d.sign_[i] = RootOfUnity::make(e2, 2);
      MatrixF tr = mat_transpose(d.x_[i]);
      require(tr == mat_scale(f, f.root(d.sign_[i]), d.x_[i]), errc::internal_error,
              "transpose sign mismatch");
    }
  }
  return d;
}

RootOfUnity PauliAlgebra::sigma(const Elem& s, const Elem& t) const {
  return sigma_[t_.index_of(s)][t_.index_of(t)];
}

std::int64_t PauliAlgebra::sigma_f(const Elem& s, const Elem& t) const {
  return f_.root(sigma(s, t));
}

RootOfUnity PauliAlgebra::sign(const Elem& t) const {
  require(has_sign_form(), errc::unsupported,
          "transpose sign form needs an elementary 2-group support");
  return sign_[t_.index_of(t)];
}

std::vector<std::int64_t> pauli_orders(const SymplecticBasis& sb) {
  std::vector<std::int64_t> out{1};
  for (std::int64_t o : sb.orders) out.push_back(o);
  return out;
}

MatrixF pauli_intertwiner(const RootField& f, const std::vector<MatrixF>& from,
                          const std::vector<MatrixF>& to,
                          const std::vector<std::int64_t>& orders) {
  require(from.size() == to.size() && from.size() == orders.size(),
          errc::invalid_parameter, "generator lists differ in length");
  int n = from.empty() ? 1 : from[0].rows;
  if (from.empty()) return MatrixF::identity(1);

  // Rescale both families so every generator satisfies X^order = I; then the
  // two families obey identical relations and a nonzero intertwiner solving
  // to[k] * w = w * from[k] exists and is unique up to scale.
  auto normalize = [&](MatrixF m, std::int64_t ord) {
    MatrixF p = mat_pow(f, m, ord);
    auto lam = mat_proportional(f, MatrixF::identity(n), p);
    require(lam.has_value(), errc::invalid_parameter,
            "generator power is not scalar");
    std::int64_t target = f.inv(*lam);
    // mu with mu^ord = target, searched among powers of the field root.
    for (std::int64_t e = 0; e < f.n(); ++e) {
      std::int64_t mu = f.pow(f.zeta_n(), e);
      if (f.pow(mu, ord) == target) return mat_scale(f, mu, m);
    }
    fail(errc::internal_error, "no scaling root for generator normalization");
  };
  std::vector<MatrixF> a(from.size()), b(to.size());
  for (std::size_t k = 0; k < from.size(); ++k) {
    a[k] = normalize(from[k], orders[k]);
    b[k] = normalize(to[k], orders[k]);
  }

  // Stack the linear conditions b_k w - w a_k = 0 over the entries of w.
  std::size_t rows = from.size() * static_cast<std::size_t>(n) * n;
  MatrixF sys(static_cast<int>(rows), n * n);
  int r = 0;
  for (std::size_t k = 0; k < from.size(); ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // row for entry (i, j) of b_k w - w a_k
        for (int s = 0; s < n; ++s) {
          sys.at(r, s * n + j) = f.add(sys.at(r, s * n + j), b[k].at(i, s));
          sys.at(r, i * n + s) = f.sub(sys.at(r, i * n + s), a[k].at(s, j));
        }
        ++r;
      }
  LinearSolution sol = solve_linear(f, sys, std::vector<std::int64_t>(rows, 0));
  require(sol.nullspace.rows >= 1, errc::internal_error,
          "no intertwiner between equivalent generator families");
  for (int c = 0; c < sol.nullspace.rows; ++c) {
    MatrixF w(n, n);
    for (int i = 0; i < n * n; ++i) w.a[i] = sol.nullspace.at(c, i);
    if (mat_inverse(f, w).has_value()) return w;
  }
  fail(errc::internal_error, "intertwiner space contains no invertible element");
}

}  // namespace gal
