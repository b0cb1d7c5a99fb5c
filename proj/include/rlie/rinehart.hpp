#ifndef RLIE_RINEHART_HPP
#define RLIE_RINEHART_HPP

// Restricted Lie-Rinehart algebras over a finite-dimensional commutative
// unital algebra A: the A-module structure on L, the anchor into Der(A),
// itemised verification of all axioms, derivation algebras of A, restricted
// multiderivations, and full/weak deformations with deformed anchors.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "deformation.hpp"
#include "gf.hpp"

namespace rlie {

// A finite-dimensional commutative associative unital algebra, by structure
// constants prod[i][j] = coordinates of e_i e_j.
class AssocAlgebra {
public:
  AssocAlgebra(PrimeField f, std::vector<std::string> names,
               std::vector<std::vector<FpVector>> products, FpVector unit)
      : m_f(f), m_names(std::move(names)), m_prod(std::move(products)), m_unit(std::move(unit)) {
    const std::size_t n = m_names.size();
    if (m_prod.size() != n || m_unit.size() != n)
      throw std::invalid_argument("associative algebra data has wrong size");
    for (const auto& row : m_prod) {
      if (row.size() != n) throw std::invalid_argument("associative algebra data has wrong size");
      for (const auto& v : row) {
        require_same_field(m_f, v.field());
        if (v.size() != n) throw std::invalid_argument("product vector has wrong dimension");
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m_prod[i][j] != m_prod[j][i])
          throw std::invalid_argument("product is not commutative on (" + m_names[i] + "," +
                                      m_names[j] + ")");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (mul(mul(basis(i), basis(j)), basis(k)) != mul(basis(i), mul(basis(j), basis(k))))
            throw std::invalid_argument("product is not associative on (" + m_names[i] + "," +
                                        m_names[j] + "," + m_names[k] + ")");
    for (std::size_t i = 0; i < n; ++i)
      if (mul(m_unit, basis(i)) != basis(i))
        throw std::invalid_argument("claimed unit does not act as identity on " + m_names[i]);
  }

  const PrimeField& field() const { return m_f; }
  std::size_t dim() const { return m_names.size(); }
  const std::vector<std::string>& names() const { return m_names; }
  FpVector basis(std::size_t i) const { return FpVector::unit(m_f, dim(), i); }
  const FpVector& unit() const { return m_unit; }
  FpVector zero() const { return FpVector(m_f, dim()); }

  FpVector mul(const FpVector& a, const FpVector& b) const {
    FpVector r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j] == 0) continue;
        r += m_prod[i][j] * m_f.mul(a[i], b[j]);
      }
    }
    return r;
  }

  // Multiplication-by-a as a matrix.
  FpMatrix mult_matrix(const FpVector& a) const {
    FpMatrix m(m_f, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, mul(a, basis(j)));
    return m;
  }

  FpVector power(const FpVector& a, int64_t e) const {
    FpVector r = m_unit;
    for (int64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

private:
  PrimeField m_f;
  std::vector<std::string> m_names;
  std::vector<std::vector<FpVector>> m_prod;
  FpVector m_unit;
};

// Basis of the derivation algebra of A: all D with D(ab) = D(a)b + a D(b).
inline std::vector<FpMatrix> derivations(const AssocAlgebra& a) {
  const std::size_t n = a.dim();
  const auto& f = a.field();
  std::vector<std::vector<int64_t>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      FpVector prod = a.mul(a.basis(i), a.basis(j));
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<int64_t> row(n * n, 0);
        for (std::size_t m = 0; m < n; ++m) row[k * n + m] = f.add(row[k * n + m], prod[m]);
        // -(D e_i) e_j and -e_i (D e_j)
        for (std::size_t b = 0; b < n; ++b) {
          FpVector w = a.mul(a.basis(b), a.basis(j));
          row[b * n + i] = f.sub(row[b * n + i], w[k]);
        }
        for (std::size_t b = 0; b < n; ++b) {
          FpVector w = a.mul(a.basis(i), a.basis(b));
          row[b * n + j] = f.sub(row[b * n + j], w[k]);
        }
        rows.push_back(row);
      }
    }
  if (rows.empty()) rows.push_back(std::vector<int64_t>(n * n, 0));
  auto kernel = FpMatrix::from_rows(f, rows).kernel_basis();
  std::vector<FpMatrix> ders;
  for (const auto& v : kernel) {
    FpMatrix d(f, n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) d.set(p, q, v[p * n + q]);
    ders.push_back(d);
  }
  return ders;
}

// Der(A) as a restricted Lie algebra: commutator bracket, p-th matrix power
// as p-map, with coordinates relative to the computed derivation basis.
struct DerivationAlgebra {
  std::vector<FpMatrix> basis;
  std::optional<RestrictedLieAlgebra> algebra;

  FpVector coordinates(const FpMatrix& d) const {
    const auto& f = d.field();
    std::size_t n = d.rows();
    FpMatrix sys(f, n * n, basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) sys.set(p * n + q, b, basis[b].at(p, q));
    FpVector rhs(f, n * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) rhs.set(p * n + q, d.at(p, q));
    auto res = sys.solve(rhs);
    if (!res.consistent)
      throw std::invalid_argument("matrix does not lie in the span of the derivation basis");
    return *res.solution;
  }
};

inline DerivationAlgebra derivation_algebra(const AssocAlgebra& a) {
  DerivationAlgebra da;
  da.basis = derivations(a);
  const auto& f = a.field();
  const std::size_t m = da.basis.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("D" + std::to_string(i));
  std::vector<std::vector<FpVector>> c(m, std::vector<FpVector>(m, FpVector(f, m)));
  if (m > 0) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        c[i][j] = da.coordinates(da.basis[i] * da.basis[j] - da.basis[j] * da.basis[i]);
    std::vector<FpVector> images;
    for (std::size_t i = 0; i < m; ++i)
      images.push_back(da.coordinates(da.basis[i].power(f.p())));
    da.algebra = RestrictedLieAlgebra(LieAlgebra(f, names, c), images);
  }
  return da;
}

// A restricted Lie-Rinehart algebra: L is an A-module (action matrices per
// basis element of A), with an anchor rho: L -> Der(A).
struct LieRinehart {
  AssocAlgebra a;
  RestrictedLieAlgebra r;
  std::vector<FpMatrix> action;  // dim(A) matrices, each dim(L) x dim(L)
  std::vector<FpMatrix> anchor;  // dim(L) matrices, each dim(A) x dim(A)

  FpVector act(const FpVector& scalar, const FpVector& x) const {
    FpMatrix m(a.field(), r.dim(), r.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (scalar[i] != 0) m = m + action[i] * scalar[i];
    return m * x;
  }

  FpMatrix rho(const FpVector& x) const {
    FpMatrix m(a.field(), a.dim(), a.dim());
    for (std::size_t i = 0; i < r.dim(); ++i)
      if (x[i] != 0) m = m + anchor[i] * x[i];
    return m;
  }
};

struct ItemizedReport {
  struct Item {
    std::string name;
    bool ok;
    std::string witness;
  };
  std::vector<Item> items;
  bool exhaustive = true;

  bool ok() const {
    for (const auto& it : items)
      if (!it.ok) return false;
    return true;
  }
  void add(const std::string& name, bool pass, const std::string& witness = "") {
    items.push_back({name, pass, witness});
  }
};

// Verify every restricted Lie-Rinehart axiom, itemised. The multilinear
// axioms are checked on basis tuples; the ones involving p-th powers are
// checked on a sweep of (a, x) pairs.
inline ItemizedReport verify_lie_rinehart(const LieRinehart& lr, int64_t max_sweep = 1000000,
                                          uint64_t seed = 1) {
  ItemizedReport rep;
  const auto& A = lr.a;
  const auto& L = lr.r.lie();
  const auto& f = A.field();
  const int64_t p = f.p();

  {
    bool ok = true;
    std::string w;
    FpMatrix unit_act(f, L.dim(), L.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (A.unit()[i] != 0) unit_act = unit_act + lr.action[i] * A.unit()[i];
    if (unit_act != FpMatrix::identity(f, L.dim())) {
      ok = false;
      w = "the unit of A does not act as the identity";
    }
    for (std::size_t i = 0; ok && i < A.dim(); ++i)
      for (std::size_t j = 0; ok && j < A.dim(); ++j) {
        FpMatrix prod_act(f, L.dim(), L.dim());
        FpVector ab = A.mul(A.basis(i), A.basis(j));
        for (std::size_t k = 0; k < A.dim(); ++k)
          if (ab[k] != 0) prod_act = prod_act + lr.action[k] * ab[k];
        if (lr.action[i] * lr.action[j] != prod_act) {
          ok = false;
          w = "action of " + A.names()[i] + "*" + A.names()[j] + " is not the composite";
        }
      }
    rep.add("A-module axioms", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; ok && i < L.dim(); ++i)
      for (std::size_t a = 0; ok && a < A.dim(); ++a)
        for (std::size_t b = 0; ok && b < A.dim(); ++b) {
          FpVector lhs = lr.anchor[i] * A.mul(A.basis(a), A.basis(b));
          FpVector rhs = A.mul(lr.anchor[i] * A.basis(a), A.basis(b)) +
                         A.mul(A.basis(a), lr.anchor[i] * A.basis(b));
          if (lhs != rhs) {
            ok = false;
            w = "rho(" + L.names()[i] + ") is not a derivation of A";
          }
        }
    rep.add("anchor lands in Der(A)", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; ok && i < L.dim(); ++i)
      for (std::size_t j = i + 1; ok && j < L.dim(); ++j)
        if (lr.rho(L.structure(i, j)) !=
            lr.anchor[i] * lr.anchor[j] - lr.anchor[j] * lr.anchor[i]) {
          ok = false;
          w = "rho([" + L.names()[i] + "," + L.names()[j] + "]) != commutator";
        }
    rep.add("anchor is a Lie morphism", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t a = 0; ok && a < A.dim(); ++a)
      for (std::size_t i = 0; ok && i < L.dim(); ++i) {
        FpMatrix lhs = lr.rho(lr.action[a] * L.basis(i));
        FpMatrix rhs = A.mult_matrix(A.basis(a)) * lr.anchor[i];
        if (lhs != rhs) {
          ok = false;
          w = "rho(" + A.names()[a] + "." + L.names()[i] + ") != " + A.names()[a] + ".rho(" +
              L.names()[i] + ")";
        }
      }
    rep.add("anchor is A-linear", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; ok && i < L.dim(); ++i)
      for (std::size_t a = 0; ok && a < A.dim(); ++a)
        for (std::size_t j = 0; ok && j < L.dim(); ++j) {
          FpVector lhs = L.bracket(L.basis(i), lr.action[a] * L.basis(j));
          FpVector rhs = lr.act(lr.anchor[i] * A.basis(a), L.basis(j)) +
                         lr.action[a] * L.bracket(L.basis(i), L.basis(j));
          if (lhs != rhs) {
            ok = false;
            w = "Leibniz rule fails on (" + L.names()[i] + "," + A.names()[a] + "," +
                L.names()[j] + ")";
          }
        }
    rep.add("bracket Leibniz rule", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    auto sweep = sweep_vectors(f, L.dim(), max_sweep, seed);
    rep.exhaustive = rep.exhaustive && sweep.exhaustive;
    for (const auto& v : sweep.vectors)
      if (lr.rho(lr.r.pmap(v)) != lr.rho(v).power(p)) {
        ok = false;
        w = "rho(v^[p]) != rho(v)^p at v=" + vec_str(v);
        break;
      }
    rep.add("anchor is restricted", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    int64_t total_dims = static_cast<int64_t>(A.dim() + L.dim());
    bool exhaustive = pow_ll(p, total_dims, max_sweep) <= max_sweep;
    rep.exhaustive = rep.exhaustive && exhaustive;
    std::vector<std::pair<FpVector, FpVector>> cases;
    if (exhaustive) {
      auto sa = sweep_vectors(f, A.dim(), max_sweep, seed);
      auto sl = sweep_vectors(f, L.dim(), max_sweep, seed);
      for (const auto& a : sa.vectors)
        for (const auto& x : sl.vectors) cases.emplace_back(a, x);
    } else {
      std::mt19937_64 rng(seed + 31);
      for (int k = 0; k < 200; ++k)
        cases.emplace_back(random_vector(f, A.dim(), rng), random_vector(f, L.dim(), rng));
    }
    for (const auto& [a, x] : cases) {
      FpVector ax = lr.act(a, x);
      FpVector lhs = lr.r.pmap(ax);
      FpVector rhs = lr.act(A.power(a, p), lr.r.pmap(x)) +
                     lr.act(lr.rho(ax).power(p - 1) * a, x);
      if (lhs != rhs) {
        ok = false;
        w = "(a.x)^[p] formula fails at a=" + vec_str(a) + " x=" + vec_str(x);
        break;
      }
    }
    rep.add("p-map Hochschild identity", ok, w);
  }
  return rep;
}

// A restricted multiderivation on an A-module L: a bracket candidate m, a
// p-map candidate omega (on the basis, extended by the Jacobson fold in m),
// and an anchor candidate sigma.
struct RestrictedMultiderivation {
  AssocAlgebra a;
  PrimeField f;
  std::size_t nl;                      // dim of the module L
  std::vector<FpMatrix> action;        // A-module structure on L
  std::vector<FpVector> m_pairs;       // values on increasing basis pairs
  std::vector<FpVector> omega_images;  // omega on the basis of L
  std::vector<FpMatrix> sigma;         // sigma(e_i) as a matrix on A

  FpVector m_eval(const FpVector& x, const FpVector& y) const {
    auto prs = increasing_tuples(nl, 2);
    FpVector r(f, nl);
    for (std::size_t i = 0; i < nl; ++i)
      for (std::size_t j = 0; j < nl; ++j) {
        if (x[i] == 0 || y[j] == 0 || i == j) continue;
        std::size_t lo = std::min(i, j), hi = std::max(i, j);
        std::size_t idx = lo * nl - lo * (lo + 1) / 2 + (hi - lo - 1);
        FpVector val = (i < j) ? m_pairs[idx] : -m_pairs[idx];
        r += val * f.mul(x[i], y[j]);
      }
    return r;
  }

  FpMatrix sigma_eval(const FpVector& x) const {
    FpMatrix m(f, a.dim(), a.dim());
    for (std::size_t i = 0; i < nl; ++i)
      if (x[i] != 0) m = m + sigma[i] * x[i];
    return m;
  }

  FpVector act(const FpVector& scalar, const FpVector& x) const {
    FpMatrix m(f, nl, nl);
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (scalar[i] != 0) m = m + action[i] * scalar[i];
    return m * x;
  }
};

// Check the defining equations of a restricted multiderivation, itemised:
// sigma is A-linear, m satisfies the sigma-twisted Leibniz rule, sigma of a
// p-th power is a p-th matrix power, and omega is A-semilinear with the
// anchor correction. The p-th power equations run over vector sweeps.
inline ItemizedReport verify_multiderivation(const RestrictedMultiderivation& md,
                                             int64_t max_sweep = 1000000, uint64_t seed = 1) {
  ItemizedReport rep;
  const auto& A = md.a;
  const auto& f = md.f;
  const int64_t p = f.p();
  auto omega_fold = [&](const FpVector& v) {
    // Jacobson fold in the bracket candidate m
    FpVector r(f, md.nl);
    FpVector u(f, md.nl);
    LieAlgebra* dummy = nullptr;
    (void)dummy;
    for (std::size_t i = 0; i < md.nl; ++i) {
      if (v[i] == 0) continue;
      FpVector term = FpVector::unit(f, md.nl, i) * v[i];
      r += md.omega_images[i] * f.pow(v[i], p);
      // s-terms of (u, term) in the bracket m
      std::vector<FpVector> poly{u};
      for (int64_t step = 0; step < p - 1; ++step) {
        std::vector<FpVector> next(poly.size() + 1, FpVector(f, md.nl));
        for (std::size_t d = 0; d < poly.size(); ++d) {
          next[d] += md.m_eval(term, poly[d]);
          next[d + 1] += md.m_eval(u, poly[d]);
        }
        poly = std::move(next);
      }
      for (int64_t si = 1; si <= p - 1; ++si)
        if (static_cast<std::size_t>(si - 1) < poly.size())
          r += poly[si - 1] * f.inv(si);
      u += term;
    }
    return r;
  };
  {
    bool ok = true;
    std::string w;
    for (std::size_t a = 0; ok && a < A.dim(); ++a)
      for (std::size_t i = 0; ok && i < md.nl; ++i) {
        FpMatrix lhs = md.sigma_eval(md.action[a] * FpVector::unit(f, md.nl, i));
        FpMatrix rhs = A.mult_matrix(A.basis(a)) * md.sigma[i];
        if (lhs != rhs) {
          ok = false;
          w = "sigma(a.x) != a.sigma(x) on basis pair (" + std::to_string(a) + "," +
              std::to_string(i) + ")";
        }
      }
    rep.add("sigma is A-linear", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; ok && i < md.nl; ++i)
      for (std::size_t a = 0; ok && a < A.dim(); ++a)
        for (std::size_t j = 0; ok && j < md.nl; ++j) {
          FpVector x = FpVector::unit(f, md.nl, i), y = FpVector::unit(f, md.nl, j);
          FpVector lhs = md.m_eval(x, md.action[a] * y);
          FpVector rhs = md.action[a] * md.m_eval(x, y) + md.act(md.sigma[i] * A.basis(a), y);
          if (lhs != rhs) {
            ok = false;
            w = "twisted Leibniz rule fails on basis triple";
          }
        }
    rep.add("m satisfies the sigma-Leibniz rule", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    auto sweep = sweep_vectors(f, md.nl, max_sweep, seed);
    rep.exhaustive = rep.exhaustive && sweep.exhaustive;
    for (const auto& v : sweep.vectors)
      if (md.sigma_eval(omega_fold(v)) != md.sigma_eval(v).power(p)) {
        ok = false;
        w = "sigma(omega(v)) != sigma(v)^p at v=" + vec_str(v);
        break;
      }
    rep.add("sigma of p-th powers", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    int64_t total_dims = static_cast<int64_t>(A.dim() + md.nl);
    bool exhaustive = pow_ll(p, total_dims, max_sweep) <= max_sweep;
    rep.exhaustive = rep.exhaustive && exhaustive;
    std::vector<std::pair<FpVector, FpVector>> cases;
    if (exhaustive) {
      auto sa = sweep_vectors(f, A.dim(), max_sweep, seed);
      auto sl = sweep_vectors(f, md.nl, max_sweep, seed);
      for (const auto& a : sa.vectors)
        for (const auto& x : sl.vectors) cases.emplace_back(a, x);
    } else {
      std::mt19937_64 rng(seed + 37);
      for (int k = 0; k < 200; ++k)
        cases.emplace_back(random_vector(f, A.dim(), rng), random_vector(f, md.nl, rng));
    }
    for (const auto& [a, x] : cases) {
      FpVector ax = md.act(a, x);
      FpVector lhs = omega_fold(ax);
      FpVector rhs = md.act(A.power(a, p), omega_fold(x)) +
                     md.act(md.sigma_eval(ax).power(p - 1) * a, x);
      if (lhs != rhs) {
        ok = false;
        w = "omega(a.x) formula fails at a=" + vec_str(a) + " x=" + vec_str(x);
        break;
      }
    }
    rep.add("omega A-semilinearity", ok, w);
  }
  return rep;
}

// Promote a multiderivation whose bracket candidate satisfies the Jacobi
// identity and whose pair (m, omega) is a restricted structure into a
// Lie-Rinehart algebra with anchor sigma. Throws if the data fails.
inline LieRinehart multiderivation_to_structure(const RestrictedMultiderivation& md,
                                                const std::vector<std::string>& names) {
  std::vector<std::vector<FpVector>> c(md.nl, std::vector<FpVector>(md.nl, FpVector(md.f, md.nl)));
  for (std::size_t i = 0; i < md.nl; ++i)
    for (std::size_t j = 0; j < md.nl; ++j)
      c[i][j] = md.m_eval(FpVector::unit(md.f, md.nl, i), FpVector::unit(md.f, md.nl, j));
  LieAlgebra L(md.f, names, c);
  auto rep = verify_restricted(L, md.omega_images);
  if (!rep.ok)
    throw std::invalid_argument("multiderivation does not define a restricted structure: " +
                                rep.failures.front());
  return LieRinehart{md.a, RestrictedLieAlgebra(L, md.omega_images), md.action, md.sigma};
}

inline RestrictedMultiderivation structure_to_multiderivation(const LieRinehart& lr) {
  RestrictedMultiderivation md{lr.a,
                               lr.a.field(),
                               lr.r.dim(),
                               lr.action,
                               {},
                               lr.r.pmap_images(),
                               lr.anchor};
  for (const auto& pr : increasing_tuples(lr.r.dim(), 2))
    md.m_pairs.push_back(lr.r.lie().structure(pr[0], pr[1]));
  return md;
}

// A deformation of a restricted Lie-Rinehart algebra: a deformation of the
// underlying restricted Lie algebra together with deformed anchors
// sigma_t = rho + sum t^q sigma_q (each sigma_q linear in x).
struct RinehartDeformation {
  LieRinehart base;
  Deformation def;
  // sigma_terms[q-1][i] = the matrix of sigma_q(e_i) on A
  std::vector<std::vector<FpMatrix>> sigma_terms;

  FpMatrix sigma_q(std::size_t q, const FpVector& x) const {
    const auto& f = base.a.field();
    if (q == 0) return base.rho(x);
    FpMatrix m(f, base.a.dim(), base.a.dim());
    if (q > sigma_terms.size()) return m;
    for (std::size_t i = 0; i < base.r.dim(); ++i)
      if (x[i] != 0) m = m + sigma_terms[q - 1][i] * x[i];
    return m;
  }
};

struct FullnessReport {
  DeformReport algebra_part;   // the bracket/p-map identities
  bool anchor_compat = true;   // the deformed-anchor equations
  bool power_compat = true;    // the composition-power equations
  std::vector<std::string> failures;
  bool exhaustive = true;

  bool weak() const { return algebra_part.ok; }
  bool full() const { return algebra_part.ok && anchor_compat && power_compat; }
};

// Decide whether a Lie-Rinehart deformation is full or merely weak. The
// anchor equations, order k = 1..N:
//   sum_{i=0}^k sigma_i(omega_{k-i}(x)) = sum over p-compositions of k of
//   sigma_{i_1}(x) o ... o sigma_{i_p}(x), and the power equations
//   sigma_k(x)^{p-1} = sum over (p-1)-compositions of k of the composites.
// In characteristic 2 the anchor equation degenerates to
//   sum_i sigma_i(omega_{k-i}(x)) = sum_i sigma_i(x) o sigma_{k-i}(x).
inline FullnessReport verify_rinehart_deformation(const RinehartDeformation& rd,
                                                  int64_t max_sweep = 1000000,
                                                  uint64_t seed = 1) {
  FullnessReport rep;
  rep.algebra_part = rd.def.verify(max_sweep, seed);
  rep.exhaustive = rep.algebra_part.exhaustive;
  const auto& f = rd.base.a.field();
  const int64_t p = f.p();
  const std::size_t n = rd.def.order();
  auto sweep = sweep_vectors(f, rd.base.r.dim(), max_sweep, seed);
  rep.exhaustive = rep.exhaustive && sweep.exhaustive;
  for (const auto& x : sweep.vectors) {
    TSeries ox = rd.def.omega_eval(rd.def.lift(x));
    for (std::size_t k = 1; k <= n; ++k) {
      FpMatrix lhs(f, rd.base.a.dim(), rd.base.a.dim());
      for (std::size_t i = 0; i <= k; ++i) lhs = lhs + rd.sigma_q(i, ox[k - i]);
      FpMatrix rhs(f, rd.base.a.dim(), rd.base.a.dim());
      std::vector<std::size_t> comp(static_cast<std::size_t>(p), 0);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
        if (pos + 1 == comp.size()) {
          comp[pos] = left;
          FpMatrix term = rd.sigma_q(comp[0], x);
          for (std::size_t t = 1; t < comp.size(); ++t) term = term * rd.sigma_q(comp[t], x);
          rhs = rhs + term;
          return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
          comp[pos] = v;
          rec(pos + 1, left - v);
        }
      };
      rec(0, k);
      if (lhs != rhs) {
        rep.anchor_compat = false;
        rep.failures.push_back("deformed-anchor equation fails at order " + std::to_string(k) +
                               " on x=" + vec_str(x));
        break;
      }
    }
    if (p > 2) {
      for (std::size_t k = 1; k <= n; ++k) {
        FpMatrix lhs = rd.sigma_q(k, x).power(p - 1);
        FpMatrix rhs(f, rd.base.a.dim(), rd.base.a.dim());
        std::vector<std::size_t> comp(static_cast<std::size_t>(p - 1), 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
          if (pos + 1 == comp.size()) {
            comp[pos] = left;
            FpMatrix term = rd.sigma_q(comp[0], x);
            for (std::size_t t = 1; t < comp.size(); ++t) term = term * rd.sigma_q(comp[t], x);
            rhs = rhs + term;
            return;
          }
          for (std::size_t v = 0; v <= left; ++v) {
            comp[pos] = v;
            rec(pos + 1, left - v);
          }
        };
        rec(0, k);
        if (lhs != rhs) {
          rep.power_compat = false;
          rep.failures.push_back("anchor power equation fails at order " + std::to_string(k) +
                                 " on x=" + vec_str(x));
          break;
        }
      }
    }
    if (!rep.anchor_compat && !rep.power_compat) break;
  }
  return rep;
}

}  // namespace rlie

#endif
