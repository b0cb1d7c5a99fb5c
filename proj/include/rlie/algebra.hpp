#ifndef RLIE_ALGEBRA_HPP
#define RLIE_ALGEBRA_HPP

// Finite-dimensional Lie algebras over GF(p), p-maps and restricted structure,
// modules, derivations, and isomorphism testing.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gf.hpp"

namespace rlie {

// Enumerate all of GF(p)^n when its size fits the budget, else a seeded sample.
struct VectorSweep {
  bool exhaustive = true;
  std::vector<FpVector> vectors;
};

inline int64_t pow_ll(int64_t base, int64_t e, int64_t cap) {
  int64_t r = 1;
  for (int64_t i = 0; i < e; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

inline VectorSweep sweep_vectors(const PrimeField& f, std::size_t n, int64_t max_count,
                                 uint64_t seed, std::size_t samples = 200) {
  VectorSweep s;
  int64_t total = pow_ll(f.p(), static_cast<int64_t>(n), max_count);
  if (total <= max_count) {
    s.exhaustive = true;
    FpVector v(f, n);
    for (int64_t idx = 0; idx < total; ++idx) {
      int64_t rem = idx;
      for (std::size_t i = 0; i < n; ++i) {
        v.set(i, rem % f.p());
        rem /= f.p();
      }
      s.vectors.push_back(v);
    }
  } else {
    s.exhaustive = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> dist(0, f.p() - 1);
    for (std::size_t k = 0; k < samples; ++k) {
      FpVector v(f, n);
      for (std::size_t i = 0; i < n; ++i) v.set(i, dist(rng));
      s.vectors.push_back(v);
    }
  }
  return s;
}

inline FpVector random_vector(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> dist(0, f.p() - 1);
  FpVector v(f, n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, dist(rng));
  return v;
}

// A Lie algebra given by structure constants c[i][j] = coordinates of [e_i,e_j].
// Construction validates alternation, skew-symmetry and the Jacobi identity on
// basis triples and rejects invalid input with a diagnostic naming the witness.
class LieAlgebra {
public:
  LieAlgebra(PrimeField f, std::vector<std::string> names,
             std::vector<std::vector<FpVector>> structure)
      : m_f(f), m_names(std::move(names)), m_c(std::move(structure)) {
    const std::size_t n = m_names.size();
    if (m_c.size() != n) throw std::invalid_argument("structure constant table has wrong size");
    for (std::size_t i = 0; i < n; ++i) {
      if (m_c[i].size() != n) throw std::invalid_argument("structure constant table has wrong size");
      for (std::size_t j = 0; j < n; ++j) {
        require_same_field(m_f, m_c[i][j].field());
        if (m_c[i][j].size() != n)
          throw std::invalid_argument("structure constant vector has wrong dimension");
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!m_c[i][i].is_zero())
        throw std::invalid_argument("bracket is not alternating: [" + m_names[i] + "," +
                                    m_names[i] + "] != 0");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m_c[i][j] != -m_c[j][i])
          throw std::invalid_argument("bracket is not skew-symmetric on (" + m_names[i] + "," +
                                      m_names[j] + ")");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          FpVector jac = bracket(m_c[i][j], basis(k)) + bracket(m_c[j][k], basis(i)) +
                         bracket(m_c[k][i], basis(j));
          if (!jac.is_zero())
            throw std::invalid_argument("Jacobi identity fails on (" + m_names[i] + "," +
                                        m_names[j] + "," + m_names[k] + ")");
        }
  }

  const PrimeField& field() const { return m_f; }
  std::size_t dim() const { return m_names.size(); }
  const std::vector<std::string>& names() const { return m_names; }
  const FpVector& structure(std::size_t i, std::size_t j) const { return m_c.at(i).at(j); }
  FpVector basis(std::size_t i) const { return FpVector::unit(m_f, dim(), i); }
  FpVector zero() const { return FpVector(m_f, dim()); }

  FpVector bracket(const FpVector& x, const FpVector& y) const {
    require_same_field(m_f, x.field());
    require_same_field(m_f, y.field());
    FpVector r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) continue;
        r += m_c[i][j] * m_f.mul(x[i], y[j]);
      }
    }
    return r;
  }

  FpMatrix ad(const FpVector& v) const {
    FpMatrix m(m_f, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, bracket(v, basis(j)));
    return m;
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        if (!m_c[i][j].is_zero()) return false;
    return true;
  }

  std::vector<FpVector> center() const {
    std::vector<FpMatrix> blocks;
    for (std::size_t i = 0; i < dim(); ++i) blocks.push_back(ad(basis(i)));
    return vstack(blocks).kernel_basis();
  }

private:
  PrimeField m_f;
  std::vector<std::string> m_names;
  std::vector<std::vector<FpVector>> m_c;
};

// The Jacobson terms s_i(x,y), i = 1..p-1: i*s_i is the coefficient of Z^{i-1}
// in ad_{Zx+y}^{p-1}(x). Returned with s_i at index i-1.
inline std::vector<FpVector> s_terms(const LieAlgebra& L, const FpVector& x, const FpVector& y) {
  const auto& f = L.field();
  const int64_t p = f.p();
  // poly[d] is the coefficient of Z^d; start with the degree-0 polynomial x.
  std::vector<FpVector> poly{x};
  for (int64_t step = 0; step < p - 1; ++step) {
    std::vector<FpVector> next(poly.size() + 1, L.zero());
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += L.bracket(y, poly[d]);
      next[d + 1] += L.bracket(x, poly[d]);
    }
    poly = std::move(next);
  }
  std::vector<FpVector> s;
  for (int64_t i = 1; i <= p - 1; ++i) {
    FpVector coeff = static_cast<std::size_t>(i - 1) < poly.size() ? poly[i - 1] : L.zero();
    s.push_back(coeff * f.inv(i));
  }
  return s;
}

// A p-map given on the basis, extended to all vectors by p-semilinearity and
// Jacobson's additivity formula. The basis fold is the single evaluation path.
class RestrictedLieAlgebra {
public:
  RestrictedLieAlgebra(LieAlgebra L, std::vector<FpVector> pmap_images)
      : m_L(std::move(L)), m_images(std::move(pmap_images)) {
    if (m_images.size() != m_L.dim())
      throw std::invalid_argument("p-map image list has wrong length");
    for (const auto& v : m_images) {
      require_same_field(m_L.field(), v.field());
      if (v.size() != m_L.dim()) throw std::invalid_argument("p-map image has wrong dimension");
    }
  }

  const LieAlgebra& lie() const { return m_L; }
  const PrimeField& field() const { return m_L.field(); }
  std::size_t dim() const { return m_L.dim(); }
  const FpVector& pmap_basis(std::size_t i) const { return m_images.at(i); }
  const std::vector<FpVector>& pmap_images() const { return m_images; }

  FpVector pmap(const FpVector& v) const {
    require_same_field(field(), v.field());
    const auto& f = field();
    FpVector r = m_L.zero();
    FpVector u = m_L.zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (v[i] == 0) continue;
      FpVector term = m_L.basis(i) * v[i];
      r += m_images[i] * f.pow(v[i], f.p());
      auto s = s_terms(m_L, u, term);
      for (const auto& si : s) r += si;
      u += term;
    }
    return r;
  }

private:
  LieAlgebra m_L;
  std::vector<FpVector> m_images;
};

struct RestrictedCheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  bool exhaustive = true;

  void fail(const std::string& msg) {
    ok = false;
    failures.push_back(msg);
  }
};

inline std::string vec_str(const FpVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

// Verify that the candidate p-map makes L a restricted Lie algebra:
// (ad e_j)^p = ad(e_j^[p]) for every basis element, plus p-semilinearity and
// Jacobson additivity of the fold-extended map on a vector sweep.
inline RestrictedCheckReport verify_restricted(const LieAlgebra& L,
                                               const std::vector<FpVector>& images,
                                               int64_t max_sweep = 1000000,
                                               uint64_t seed = 1) {
  RestrictedCheckReport rep;
  RestrictedLieAlgebra R(L, images);
  const auto& f = L.field();
  const int64_t p = f.p();
  for (std::size_t j = 0; j < L.dim(); ++j) {
    if (L.ad(L.basis(j)).power(p) != L.ad(images[j]))
      rep.fail("(ad " + L.names()[j] + ")^p != ad(" + L.names()[j] + "^[p])");
  }
  auto sweep = sweep_vectors(f, L.dim(), max_sweep, seed);
  rep.exhaustive = sweep.exhaustive;
  std::mt19937_64 rng(seed + 17);
  for (const auto& v : sweep.vectors) {
    int64_t lambda = 2 % p;
    if (R.pmap(v * lambda) != R.pmap(v) * f.pow(lambda, p)) {
      rep.fail("p-semilinearity fails at v=" + vec_str(v));
      break;
    }
  }
  std::size_t pair_checks = sweep.exhaustive ? sweep.vectors.size() : 200;
  for (std::size_t k = 0; k < pair_checks; ++k) {
    FpVector a = sweep.exhaustive ? sweep.vectors[k] : random_vector(f, L.dim(), rng);
    FpVector b = random_vector(f, L.dim(), rng);
    FpVector lhs = R.pmap(a + b);
    FpVector rhs = R.pmap(a) + R.pmap(b);
    for (const auto& si : s_terms(L, a, b)) rhs += si;
    if (lhs != rhs) {
      rep.fail("Jacobson additivity fails at a=" + vec_str(a) + " b=" + vec_str(b));
      break;
    }
  }
  return rep;
}

// A module over a restricted Lie algebra, given by action matrices rho(e_i).
class RestrictedModule {
public:
  RestrictedModule(PrimeField f, std::size_t dim, std::vector<FpMatrix> rho)
      : m_f(f), m_dim(dim), m_rho(std::move(rho)) {
    for (const auto& m : m_rho) {
      require_same_field(m_f, m.field());
      if (m.rows() != m_dim || m.cols() != m_dim)
        throw std::invalid_argument("module action matrix has wrong shape");
    }
  }

  static RestrictedModule trivial(const RestrictedLieAlgebra& R, std::size_t dim = 1) {
    std::vector<FpMatrix> rho(R.dim(), FpMatrix(R.field(), dim, dim));
    return RestrictedModule(R.field(), dim, std::move(rho));
  }

  static RestrictedModule adjoint(const RestrictedLieAlgebra& R) {
    std::vector<FpMatrix> rho;
    for (std::size_t i = 0; i < R.dim(); ++i) rho.push_back(R.lie().ad(R.lie().basis(i)));
    return RestrictedModule(R.field(), R.dim(), std::move(rho));
  }

  const PrimeField& field() const { return m_f; }
  std::size_t dim() const { return m_dim; }
  const FpMatrix& rho_basis(std::size_t i) const { return m_rho.at(i); }

  FpMatrix rho(const FpVector& x) const {
    require_same_field(m_f, x.field());
    if (x.size() != m_rho.size()) throw std::invalid_argument("acting vector has wrong dimension");
    FpMatrix m(m_f, m_dim, m_dim);
    for (std::size_t i = 0; i < m_rho.size(); ++i)
      if (x[i] != 0) m = m + m_rho[i] * x[i];
    return m;
  }

  FpVector act(const FpVector& x, const FpVector& v) const { return rho(x) * v; }
  FpVector zero() const { return FpVector(m_f, m_dim); }

  // Check compatibility with the restricted structure on L.
  RestrictedCheckReport verify(const RestrictedLieAlgebra& R) const {
    RestrictedCheckReport rep;
    const auto& L = R.lie();
    if (m_rho.size() != L.dim()) {
      rep.fail("module has action matrices for the wrong algebra dimension");
      return rep;
    }
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = i + 1; j < L.dim(); ++j) {
        FpMatrix lhs = rho(L.structure(i, j));
        FpMatrix rhs = m_rho[i] * m_rho[j] - m_rho[j] * m_rho[i];
        if (lhs != rhs)
          rep.fail("rho([" + L.names()[i] + "," + L.names()[j] + "]) != commutator");
      }
    for (std::size_t i = 0; i < L.dim(); ++i)
      if (rho(R.pmap_basis(i)) != m_rho[i].power(R.field().p()))
        rep.fail("rho(" + L.names()[i] + "^[p]) != rho(" + L.names()[i] + ")^p");
    return rep;
  }

private:
  PrimeField m_f;
  std::size_t m_dim;
  std::vector<FpMatrix> m_rho;
};

// Basis of the derivation algebra Der(L): all D with D[x,y] = [Dx,y] + [x,Dy].
inline std::vector<FpMatrix> derivations(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const auto& f = L.field();
  std::vector<std::vector<int64_t>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // coefficient of D_{ab} (unknown index a*n+b) in
        // (D[e_i,e_j] - [De_i,e_j] - [e_i,De_j])_k
        std::vector<int64_t> row(n * n, 0);
        for (std::size_t m = 0; m < n; ++m)
          row[k * n + m] = f.add(row[k * n + m], L.structure(i, j)[m]);
        for (std::size_t a = 0; a < n; ++a)
          row[a * n + i] = f.sub(row[a * n + i], L.structure(a, j)[k]);
        for (std::size_t b = 0; b < n; ++b)
          row[b * n + j] = f.sub(row[b * n + j], L.structure(i, b)[k]);
        rows.push_back(row);
      }
  if (rows.empty()) rows.push_back(std::vector<int64_t>(n * n, 0));
  auto kernel = FpMatrix::from_rows(f, rows).kernel_basis();
  std::vector<FpMatrix> ders;
  for (const auto& v : kernel) {
    FpMatrix d(f, n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d.set(a, b, v[a * n + b]);
    ders.push_back(d);
  }
  return ders;
}

// Basis of restricted derivations: derivations with D(v^[p]) = ad_v^{p-1}(D v)
// for every v in the sweep. The p-map condition is linear in D but not in v,
// so it is imposed pointwise over all p^n vectors (or a seeded sample).
inline std::vector<FpMatrix> restricted_derivations(const RestrictedLieAlgebra& R,
                                                    int64_t max_sweep = 1000000,
                                                    uint64_t seed = 1,
                                                    bool* exhaustive = nullptr) {
  const auto& L = R.lie();
  const std::size_t n = L.dim();
  const auto& f = L.field();
  std::vector<std::vector<int64_t>> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<int64_t> row(n * n, 0);
        for (std::size_t m = 0; m < n; ++m)
          row[k * n + m] = f.add(row[k * n + m], L.structure(i, j)[m]);
        for (std::size_t a = 0; a < n; ++a)
          row[a * n + i] = f.sub(row[a * n + i], L.structure(a, j)[k]);
        for (std::size_t b = 0; b < n; ++b)
          row[b * n + j] = f.sub(row[b * n + j], L.structure(i, b)[k]);
        rows.push_back(row);
      }
  auto sweep = sweep_vectors(f, n, max_sweep, seed);
  if (exhaustive) *exhaustive = sweep.exhaustive;
  for (const auto& v : sweep.vectors) {
    FpVector w = R.pmap(v);
    FpMatrix a = L.ad(v).power(f.p() - 1);
    for (std::size_t k = 0; k < n; ++k) {
      // (D w)_k - (A D v)_k = 0, unknowns D_{ab}
      std::vector<int64_t> row(n * n, 0);
      for (std::size_t b = 0; b < n; ++b) row[k * n + b] = f.add(row[k * n + b], w[b]);
      for (std::size_t aa = 0; aa < n; ++aa)
        for (std::size_t b = 0; b < n; ++b)
          row[aa * n + b] = f.sub(row[aa * n + b], f.mul(a.at(k, aa), v[b]));
      rows.push_back(row);
    }
  }
  if (rows.empty()) rows.push_back(std::vector<int64_t>(n * n, 0));
  auto kernel = FpMatrix::from_rows(f, rows).kernel_basis();
  std::vector<FpMatrix> ders;
  for (const auto& v : kernel) {
    FpMatrix d(f, n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) d.set(a, b, v[a * n + b]);
    ders.push_back(d);
  }
  return ders;
}

struct IsoResult {
  bool decided = false;       // false: search space exceeded the budget
  bool isomorphic = false;
  std::optional<FpMatrix> map;  // first isomorphism in lexicographic order
  std::string note;
};

// Check whether T carries R1 to R2 as restricted Lie algebras.
inline bool is_restricted_morphism(const RestrictedLieAlgebra& R1, const RestrictedLieAlgebra& R2,
                                   const FpMatrix& t, int64_t max_sweep = 1000000,
                                   uint64_t seed = 1) {
  const auto& L1 = R1.lie();
  const auto& L2 = R2.lie();
  for (std::size_t i = 0; i < L1.dim(); ++i)
    for (std::size_t j = i + 1; j < L1.dim(); ++j)
      if (t * L1.structure(i, j) != L2.bracket(t.col(i), t.col(j))) return false;
  for (std::size_t i = 0; i < L1.dim(); ++i)
    if (t * R1.pmap_basis(i) != R2.pmap(t.col(i))) return false;
  // The p-map is non-additive, so basis compatibility is confirmed on a sweep.
  auto sweep = sweep_vectors(L1.field(), L1.dim(), max_sweep, seed);
  for (const auto& v : sweep.vectors)
    if (t * R1.pmap(v) != R2.pmap(t * v)) return false;
  return true;
}

// Exhaustive isomorphism search over all invertible matrices, in lexicographic
// order of the entry list. Declines (decided = false) when p^(n^2) exceeds the
// budget instead of guessing.
inline IsoResult is_isomorphic_restricted(const RestrictedLieAlgebra& R1,
                                          const RestrictedLieAlgebra& R2,
                                          int64_t max_maps = 10000000,
                                          int64_t max_sweep = 1000000, uint64_t seed = 1) {
  IsoResult res;
  const auto& f = R1.field();
  require_same_field(f, R2.field());
  const std::size_t n = R1.dim();
  if (R2.dim() != n) {
    res.decided = true;
    res.note = "dimensions differ";
    return res;
  }
  int64_t total = pow_ll(f.p(), static_cast<int64_t>(n * n), max_maps);
  if (total > max_maps) {
    res.note = "search infeasible: p^(n^2) exceeds the budget";
    return res;
  }
  res.decided = true;
  FpMatrix t(f, n, n);
  for (int64_t idx = 0; idx < total; ++idx) {
    int64_t rem = idx;
    // lexicographic with entry (0,0) most significant
    for (std::size_t k = 0; k < n * n; ++k) {
      std::size_t pos = n * n - 1 - k;
      t.set(pos / n, pos % n, rem % f.p());
      rem /= f.p();
    }
    if (!t.inverse()) continue;
    if (is_restricted_morphism(R1, R2, t, max_sweep, seed)) {
      res.isomorphic = true;
      res.map = t;
      return res;
    }
  }
  return res;
}

}  // namespace rlie

#endif
