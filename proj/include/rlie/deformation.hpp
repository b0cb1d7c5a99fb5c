#ifndef RLIE_DEFORMATION_HPP
#define RLIE_DEFORMATION_HPP

// Formal deformations of restricted Lie algebras, truncated at a finite
// order: deformed brackets m_t = m + sum t^q m_q, deformed p-maps given on
// the basis and extended by Jacobson additivity in the deformed bracket,
// verification of the defining identities order by order, equivalence and
// conjugation by formal automorphisms, and obstructions to extending a
// deformation one order further.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "cohomology_ce.hpp"
#include "cohomology_char2.hpp"
#include "cohomology_restricted.hpp"
#include "gf.hpp"

namespace rlie {

// Coefficients of a truncated power series with vector coefficients;
// index = power of t.
using TSeries = std::vector<FpVector>;

struct DeformReport {
  bool ok = true;
  std::vector<std::string> failures;
  bool exhaustive = true;
  void fail(const std::string& msg) {
    ok = false;
    failures.push_back(msg);
  }
};

class Deformation {
public:
  // m_terms[q-1][pair] = m_q on the increasing basis pair; omega_terms[q-1][i]
  // = coefficient of t^q in the deformed p-map of e_i.
  Deformation(RestrictedLieAlgebra base, std::size_t order,
              std::vector<std::vector<FpVector>> m_terms,
              std::vector<std::vector<FpVector>> omega_terms)
      : m_base(std::move(base)),
        m_order(order),
        m_pairs(increasing_tuples(m_base.dim(), 2)),
        m_m(std::move(m_terms)),
        m_omega(std::move(omega_terms)) {
    if (m_m.size() != m_order || m_omega.size() != m_order)
      throw std::invalid_argument("deformation term lists do not match the order");
    for (const auto& lvl : m_m)
      if (lvl.size() != m_pairs.size())
        throw std::invalid_argument("bracket term list has wrong length");
    for (const auto& lvl : m_omega)
      if (lvl.size() != m_base.dim())
        throw std::invalid_argument("p-map term list has wrong length");
  }

  const RestrictedLieAlgebra& base() const { return m_base; }
  const PrimeField& field() const { return m_base.field(); }
  std::size_t order() const { return m_order; }
  std::size_t dim() const { return m_base.dim(); }
  const std::vector<std::vector<std::size_t>>& pairs() const { return m_pairs; }
  const std::vector<FpVector>& m_level(std::size_t q) const { return m_m.at(q - 1); }
  const std::vector<FpVector>& omega_level(std::size_t q) const { return m_omega.at(q - 1); }

  // m_q on general vectors (q = 0 is the base bracket).
  FpVector m_q(std::size_t q, const FpVector& x, const FpVector& y) const {
    if (q == 0) return m_base.lie().bracket(x, y);
    if (q > m_order) return m_base.lie().zero();
    const auto& f = field();
    FpVector r = m_base.lie().zero();
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0 || i == j) continue;
        FpVector val = i < j ? m_pair_value(q, i, j) : -m_pair_value(q, j, i);
        r += val * f.mul(x[i], y[j]);
      }
    }
    return r;
  }

  TSeries zero_series() const { return TSeries(m_order + 1, m_base.lie().zero()); }
  TSeries lift(const FpVector& v) const {
    TSeries s = zero_series();
    s[0] = v;
    return s;
  }

  TSeries sadd(const TSeries& a, const TSeries& b) const {
    TSeries r = zero_series();
    for (std::size_t k = 0; k <= m_order; ++k) r[k] = a[k] + b[k];
    return r;
  }

  // Deformed bracket of two truncated series.
  TSeries sbracket(const TSeries& a, const TSeries& b) const {
    TSeries r = zero_series();
    for (std::size_t q = 0; q <= m_order; ++q)
      for (std::size_t i = 0; i + q <= m_order; ++i)
        for (std::size_t j = 0; i + j + q <= m_order; ++j)
          r[i + j + q] += m_q(q, a[i], b[j]);
    return r;
  }

  // Jacobson terms in the deformed bracket, for truncated series arguments.
  std::vector<TSeries> s_terms_series(const TSeries& x, const TSeries& y) const {
    const auto& f = field();
    const int64_t p = f.p();
    std::vector<TSeries> poly{x};
    for (int64_t step = 0; step < p - 1; ++step) {
      std::vector<TSeries> next(poly.size() + 1, zero_series());
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d] = sadd(next[d], sbracket(y, poly[d]));
        next[d + 1] = sadd(next[d + 1], sbracket(x, poly[d]));
      }
      poly = std::move(next);
    }
    std::vector<TSeries> s;
    for (int64_t i = 1; i <= p - 1; ++i) {
      TSeries c = static_cast<std::size_t>(i - 1) < poly.size() ? poly[i - 1] : zero_series();
      int64_t inv = f.inv(i);
      for (auto& vec : c) vec = vec * inv;
      s.push_back(std::move(c));
    }
    return s;
  }

  // Deformed p-map of e_i as a series.
  TSeries omega_basis_series(std::size_t i) const {
    TSeries s = zero_series();
    s[0] = m_base.pmap_basis(i);
    for (std::size_t q = 1; q <= m_order; ++q) s[q] = m_omega[q - 1][i];
    return s;
  }

  // Deformed p-map of a truncated series, via the additivity fold: each term
  // a t^i e_k contributes its p-th power plus Jacobson corrections against the
  // partial sum, all in the deformed bracket.
  TSeries omega_eval(const TSeries& v) const {
    const auto& f = field();
    const int64_t p = f.p();
    TSeries r = zero_series();
    TSeries u = zero_series();
    for (std::size_t i = 0; i <= m_order; ++i)
      for (std::size_t k = 0; k < dim(); ++k) {
        int64_t a = v[i][k];
        if (a == 0) continue;
        TSeries term = zero_series();
        term[i] = m_base.lie().basis(k) * a;
        std::size_t shift = i * static_cast<std::size_t>(p);
        if (shift <= m_order) {
          TSeries pw = omega_basis_series(k);
          int64_t ap = f.pow(a, p);
          for (std::size_t q = 0; q + shift <= m_order; ++q) r[q + shift] += pw[q] * ap;
        }
        if (p == 2) {
          r = sadd(r, sbracket(u, term));
        } else {
          for (const auto& sj : s_terms_series(u, term)) r = sadd(r, sj);
        }
        u = sadd(u, term);
      }
    return r;
  }

  FpVector omega_q(std::size_t q, const FpVector& v) const { return omega_eval(lift(v))[q]; }

  // Check the deformation identities order by order: the Jacobi identity on
  // basis triples and the compatibility of the deformed p-map with the
  // deformed bracket on a sweep of vector pairs. In characteristic 2 the
  // additivity identity omega_t(x+y) = omega_t(x) + omega_t(y) + m_t(x,y)
  // is checked as well.
  DeformReport verify(int64_t max_pairs = 1000000, uint64_t seed = 1) const {
    DeformReport rep;
    const auto& f = field();
    const int64_t p = f.p();
    const auto& L = m_base.lie();
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j)
        for (std::size_t k = j + 1; k < dim(); ++k) {
          TSeries jac = sbracket(lift(L.basis(i)), sbracket(lift(L.basis(j)), lift(L.basis(k))));
          jac = sadd(jac, sbracket(lift(L.basis(j)), sbracket(lift(L.basis(k)), lift(L.basis(i)))));
          jac = sadd(jac, sbracket(lift(L.basis(k)), sbracket(lift(L.basis(i)), lift(L.basis(j)))));
          for (std::size_t q = 1; q <= m_order; ++q)
            if (!jac[q].is_zero()) {
              rep.fail("Jacobi identity fails at order " + std::to_string(q) + " on (" +
                       L.names()[i] + "," + L.names()[j] + "," + L.names()[k] + ")");
              break;
            }
        }
    int64_t budget_each = 1;
    while (budget_each * budget_each <= max_pairs) ++budget_each;
    auto sweep = sweep_vectors(f, dim(), budget_each - 1, seed);
    rep.exhaustive = sweep.exhaustive;
    std::mt19937_64 rng(seed + 23);
    std::vector<std::pair<FpVector, FpVector>> test_pairs;
    if (sweep.exhaustive) {
      for (const auto& y : sweep.vectors)
        for (const auto& x : sweep.vectors) test_pairs.emplace_back(x, y);
    } else {
      for (int k = 0; k < 200; ++k)
        test_pairs.emplace_back(random_vector(f, dim(), rng), random_vector(f, dim(), rng));
    }
    std::map<std::vector<int64_t>, TSeries> omega_memo;
    auto omega_of = [&](const FpVector& y) {
      auto it = omega_memo.find(y.entries());
      if (it != omega_memo.end()) return it->second;
      TSeries s = omega_eval(lift(y));
      omega_memo.emplace(y.entries(), s);
      return s;
    };
    for (const auto& [x, y] : test_pairs) {
      TSeries lhs = sbracket(lift(x), omega_of(y));
      TSeries rhs = lift(x);
      for (int64_t t = 0; t < p; ++t) rhs = sbracket(rhs, lift(y));
      for (std::size_t q = 0; q <= m_order; ++q)
        if (lhs[q] != rhs[q]) {
          rep.fail("p-map compatibility fails at order " + std::to_string(q) + " on x=" +
                   vec_str(x) + " y=" + vec_str(y));
          break;
        }
      if (!rep.ok && rep.failures.size() > 8) return rep;
    }
    if (p == 2) {
      for (const auto& [x, y] : test_pairs) {
        TSeries lhs = omega_of(x + y);
        TSeries rhs = sadd(sadd(omega_of(x), omega_of(y)), sbracket(lift(x), lift(y)));
        for (std::size_t q = 0; q <= m_order; ++q)
          if (lhs[q] != rhs[q]) {
            rep.fail("square-map additivity fails at order " + std::to_string(q) + " on x=" +
                     vec_str(x) + " y=" + vec_str(y));
            break;
          }
        if (!rep.ok && rep.failures.size() > 8) return rep;
      }
    }
    return rep;
  }

  // The order-1 part as a degree-2 pair in the restricted complex with
  // adjoint coefficients (p >= 3 layout; for p = 2 use the char-2 layout).
  FpVector infinitesimal_star(const StarComplex& c) const {
    if (m_order < 1) throw std::invalid_argument("deformation has no order-1 part");
    FpVector phi(field(), c.phi_dim());
    const std::size_t dM = dim();
    for (std::size_t t = 0; t < m_pairs.size(); ++t)
      for (std::size_t k = 0; k < dM; ++k) phi.set(t * dM + k, m_m[0][t][k]);
    return c.make_cochain2(phi, m_omega[0]);
  }

  FpVector infinitesimal_char2(const Char2Complex& c) const {
    if (m_order < 1) throw std::invalid_argument("deformation has no order-1 part");
    FpVector phi(field(), c.ce().dim(2));
    const std::size_t dM = dim();
    for (std::size_t t = 0; t < m_pairs.size(); ++t)
      for (std::size_t k = 0; k < dM; ++k) phi.set(t * dM + k, m_m[0][t][k]);
    return c.make_cochain2(phi, m_omega[0]);
  }

private:
  const FpVector& m_pair_value(std::size_t q, std::size_t i, std::size_t j) const {
    // pair index in the lexicographic list of increasing pairs
    std::size_t n = dim();
    std::size_t idx = i * n - i * (i + 1) / 2 + (j - i - 1);
    return m_m[q - 1][idx];
  }

  RestrictedLieAlgebra m_base;
  std::size_t m_order;
  std::vector<std::vector<std::size_t>> m_pairs;
  std::vector<std::vector<FpVector>> m_m;
  std::vector<std::vector<FpVector>> m_omega;
};

// A formal automorphism phi_t = id + sum_{q>=1} t^q phi_q, truncated.
class FormalAutomorphism {
public:
  FormalAutomorphism(PrimeField f, std::size_t n, std::size_t order, std::vector<FpMatrix> terms)
      : m_f(f), m_n(n), m_order(order), m_terms(std::move(terms)) {
    if (m_terms.size() != m_order)
      throw std::invalid_argument("automorphism term list does not match the order");
    for (const auto& t : m_terms) {
      require_same_field(m_f, t.field());
      if (t.rows() != m_n || t.cols() != m_n)
        throw std::invalid_argument("automorphism term has wrong shape");
    }
  }

  std::size_t order() const { return m_order; }
  const FpMatrix& term(std::size_t q) const { return m_terms.at(q - 1); }

  TSeries apply(const TSeries& v) const {
    TSeries r(v.size(), FpVector(m_f, m_n));
    for (std::size_t k = 0; k < v.size(); ++k) {
      r[k] += v[k];
      for (std::size_t q = 1; q <= m_order && q <= k; ++q) r[k] += m_terms[q - 1] * v[k - q];
    }
    return r;
  }

  // The inverse series: psi_q = -sum_{i=1}^{q} phi_i psi_{q-i}, psi_0 = id.
  FormalAutomorphism inverse() const {
    std::vector<FpMatrix> psi;
    FpMatrix id = FpMatrix::identity(m_f, m_n);
    for (std::size_t q = 1; q <= m_order; ++q) {
      FpMatrix acc(m_f, m_n, m_n);
      for (std::size_t i = 1; i <= q; ++i) {
        const FpMatrix& tail = (q - i == 0) ? id : psi[q - i - 1];
        acc = acc + m_terms[i - 1] * tail;
      }
      psi.push_back(acc * (m_f.p() - 1));
    }
    return FormalAutomorphism(m_f, m_n, m_order, std::move(psi));
  }

private:
  PrimeField m_f;
  std::size_t m_n, m_order;
  std::vector<FpMatrix> m_terms;
};

// Transport a deformation along a formal automorphism:
//   m'_t(x,y) = phi^{-1}(m_t(phi x, phi y)),  omega'_t(x) = phi^{-1}(omega_t(phi x)).
// With this orientation the order-1 parts differ by the coboundary of phi_1.
inline Deformation conjugate(const Deformation& d, const FormalAutomorphism& phi) {
  const auto& L = d.base().lie();
  FormalAutomorphism inv = phi.inverse();
  std::vector<std::vector<FpVector>> m_terms(d.order(),
                                             std::vector<FpVector>(d.pairs().size(), L.zero()));
  std::vector<std::vector<FpVector>> o_terms(d.order(), std::vector<FpVector>(d.dim(), L.zero()));
  for (std::size_t t = 0; t < d.pairs().size(); ++t) {
    auto i = d.pairs()[t][0], j = d.pairs()[t][1];
    TSeries val = inv.apply(d.sbracket(phi.apply(d.lift(L.basis(i))), phi.apply(d.lift(L.basis(j)))));
    for (std::size_t q = 1; q <= d.order(); ++q) m_terms[q - 1][t] = val[q];
  }
  for (std::size_t i = 0; i < d.dim(); ++i) {
    TSeries val = inv.apply(d.omega_eval(phi.apply(d.lift(L.basis(i)))));
    if (val[0] != d.base().pmap_basis(i))
      throw std::invalid_argument("transported p-map does not restrict to the base p-map");
    for (std::size_t q = 1; q <= d.order(); ++q) o_terms[q - 1][i] = val[q];
  }
  return Deformation(d.base(), d.order(), std::move(m_terms), std::move(o_terms));
}

// Check that phi realises an equivalence from d2 to d1:
//   phi(m2_t(x,y)) = m1_t(phi x, phi y) and phi(omega2_t(x)) = omega1_t(phi x).
inline DeformReport check_equivalence(const Deformation& d1, const Deformation& d2,
                                      const FormalAutomorphism& phi, int64_t max_sweep = 1000000,
                                      uint64_t seed = 1) {
  DeformReport rep;
  const auto& L = d1.base().lie();
  for (std::size_t i = 0; i < d1.dim(); ++i)
    for (std::size_t j = i + 1; j < d1.dim(); ++j) {
      TSeries lhs = phi.apply(d2.sbracket(d2.lift(L.basis(i)), d2.lift(L.basis(j))));
      TSeries rhs = d1.sbracket(phi.apply(d1.lift(L.basis(i))), phi.apply(d1.lift(L.basis(j))));
      for (std::size_t q = 0; q <= d1.order(); ++q)
        if (lhs[q] != rhs[q])
          rep.fail("bracket equivalence fails at order " + std::to_string(q) + " on basis pair (" +
                   L.names()[i] + "," + L.names()[j] + ")");
    }
  auto sweep = sweep_vectors(d1.field(), d1.dim(), max_sweep, seed);
  rep.exhaustive = sweep.exhaustive;
  for (const auto& v : sweep.vectors) {
    TSeries lhs = phi.apply(d2.omega_eval(d2.lift(v)));
    TSeries rhs = d1.omega_eval(phi.apply(d1.lift(v)));
    for (std::size_t q = 0; q <= d1.order(); ++q)
      if (lhs[q] != rhs[q]) {
        rep.fail("p-map equivalence fails at order " + std::to_string(q) + " on v=" + vec_str(v));
        break;
      }
    if (rep.failures.size() > 8) return rep;
  }
  return rep;
}

// First obstruction at order n+1 (n = current order): the trilinear map
//   sum_{i=1}^n m_i(x, m_{n+1-i}(y,z)) + cyclic permutations.
inline FpVector obstruction1(const Deformation& d, const FpVector& x, const FpVector& y,
                             const FpVector& z) {
  const std::size_t n = d.order();
  FpVector acc = d.base().lie().zero();
  const FpVector* args[3][3] = {{&x, &y, &z}, {&y, &z, &x}, {&z, &x, &y}};
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t i = 1; i <= n; ++i)
      acc += d.m_q(i, *args[c][0], d.m_q(n + 1 - i, *args[c][1], *args[c][2]));
  return acc;
}

// Second obstruction at order n+1, p >= 3: the chain sum over compositions of
// n+1 into p parts bounded by n, minus the mixed bracket/p-map terms.
inline FpVector obstruction2(const Deformation& d, const FpVector& x, const FpVector& y) {
  const std::size_t n = d.order();
  const int64_t p = d.field().p();
  FpVector acc = d.base().lie().zero();
  std::vector<std::size_t> comp(static_cast<std::size_t>(p), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == comp.size()) {
      if (left > n) return;
      comp[pos] = left;
      FpVector chain = d.m_q(comp[0], x, y);
      for (std::size_t k = 1; k < comp.size(); ++k) chain = d.m_q(comp[k], chain, y);
      acc += chain;
      return;
    }
    for (std::size_t v = 0; v <= left && v <= n; ++v) {
      comp[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, n + 1);
  TSeries oy = d.omega_eval(d.lift(y));
  for (std::size_t i = 1; i <= n; ++i) acc -= d.m_q(i, x, oy[n + 1 - i]);
  return acc;
}

// Second obstruction at order n+1 in characteristic 2:
//   sum_{i=1}^n ( m_i(x, omega_{n+1-i}(y)) + m_i(m_{n+1-i}(x,y), y) ).
inline FpVector obstruction2_char2(const Deformation& d, const FpVector& x, const FpVector& y) {
  const std::size_t n = d.order();
  FpVector acc = d.base().lie().zero();
  TSeries oy = d.omega_eval(d.lift(y));
  for (std::size_t i = 1; i <= n; ++i) {
    acc += d.m_q(i, x, oy[n + 1 - i]);
    acc += d.m_q(i, d.m_q(n + 1 - i, x, y), y);
  }
  return acc;
}

struct ExtendResult {
  bool ok = false;
  std::optional<Deformation> extended;
  std::string reason;
};

// Extend a deformation to order n+1 by a candidate degree-2 pair in the
// restricted complex with adjoint coefficients: succeeds iff the differential
// of the candidate matches the obstruction pair exactly.
inline ExtendResult extend_order_star(const Deformation& d, const StarComplex& c,
                                      const FpVector& candidate) {
  ExtendResult res;
  if (c.dm() != d.dim()) {
    res.reason = "extension requires adjoint coefficients";
    return res;
  }
  const auto& L = d.base().lie();
  for (const auto& tup : c.ce().tuples(3)) {
    FpVector lhs = c.ce().diff_eval_basis(2, c.phi_part(candidate), tup);
    FpVector rhs = obstruction1(d, L.basis(tup[0]), L.basis(tup[1]), L.basis(tup[2]));
    if (lhs != rhs) {
      res.reason = "bracket obstruction mismatch on a basis triple";
      return res;
    }
  }
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) {
      FpVector lhs = c.ind2_eval(candidate, L.basis(i), L.basis(j));
      FpVector rhs = obstruction2(d, L.basis(i), L.basis(j));
      if (lhs != rhs) {
        res.reason = "p-map obstruction mismatch on basis pair (" + L.names()[i] + "," +
                     L.names()[j] + ")";
        return res;
      }
    }
  std::vector<std::vector<FpVector>> m_terms;
  std::vector<std::vector<FpVector>> o_terms;
  for (std::size_t q = 1; q <= d.order(); ++q) {
    m_terms.push_back(d.m_level(q));
    o_terms.push_back(d.omega_level(q));
  }
  std::vector<FpVector> mn, on;
  const std::size_t dM = d.dim();
  for (std::size_t t = 0; t < d.pairs().size(); ++t) {
    FpVector v = d.base().lie().zero();
    for (std::size_t k = 0; k < dM; ++k) v.set(k, candidate[t * dM + k]);
    mn.push_back(v);
  }
  for (std::size_t i = 0; i < d.dim(); ++i) on.push_back(c.omega_basis(candidate, i));
  m_terms.push_back(std::move(mn));
  o_terms.push_back(std::move(on));
  res.ok = true;
  res.extended = Deformation(d.base(), d.order() + 1, std::move(m_terms), std::move(o_terms));
  return res;
}

inline ExtendResult extend_order_char2(const Deformation& d, const Char2Complex& c,
                                       const FpVector& candidate) {
  ExtendResult res;
  if (c.dm() != d.dim()) {
    res.reason = "extension requires adjoint coefficients";
    return res;
  }
  const auto& L = d.base().lie();
  for (const auto& tup : c.ce().tuples(3)) {
    FpVector lhs = c.ce().diff_eval_basis(2, c.phi_part(2, candidate), tup);
    FpVector rhs = obstruction1(d, L.basis(tup[0]), L.basis(tup[1]), L.basis(tup[2]));
    if (lhs != rhs) {
      res.reason = "bracket obstruction mismatch on a basis triple";
      return res;
    }
  }
  for (std::size_t i = 0; i < d.dim(); ++i)
    for (std::size_t j = 0; j < d.dim(); ++j) {
      // the squared variable sits in the first slot of the delta component
      FpVector lhs = c.delta_eval(2, candidate, L.basis(j), {L.basis(i)});
      FpVector rhs = obstruction2_char2(d, L.basis(i), L.basis(j));
      if (lhs != rhs) {
        res.reason = "square-map obstruction mismatch on basis pair (" + L.names()[i] + "," +
                     L.names()[j] + ")";
        return res;
      }
    }
  std::vector<std::vector<FpVector>> m_terms;
  std::vector<std::vector<FpVector>> o_terms;
  for (std::size_t q = 1; q <= d.order(); ++q) {
    m_terms.push_back(d.m_level(q));
    o_terms.push_back(d.omega_level(q));
  }
  std::vector<FpVector> mn, on;
  const std::size_t dM = d.dim();
  for (std::size_t t = 0; t < d.pairs().size(); ++t) {
    FpVector v = d.base().lie().zero();
    for (std::size_t k = 0; k < dM; ++k) v.set(k, candidate[t * dM + k]);
    mn.push_back(v);
  }
  for (std::size_t i = 0; i < d.dim(); ++i) on.push_back(c.omega_basis(2, candidate, {i}));
  m_terms.push_back(std::move(mn));
  o_terms.push_back(std::move(on));
  res.ok = true;
  res.extended = Deformation(d.base(), d.order() + 1, std::move(m_terms), std::move(o_terms));
  return res;
}

// Nijenhuis operator check: N([Nx,y] + [x,Ny] - N[x,y]) = [Nx,Ny] on basis
// pairs and N(N(x^[p]) - ad_x^{p-1} N(x)) = N(x)^[p] on a vector sweep (the
// second identity is not multilinear).
inline RestrictedCheckReport verify_nijenhuis(const RestrictedLieAlgebra& R, const FpMatrix& N,
                                              int64_t max_sweep = 1000000, uint64_t seed = 1) {
  RestrictedCheckReport rep;
  const auto& L = R.lie();
  const auto& f = R.field();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      FpVector x = L.basis(i), y = L.basis(j);
      FpVector def = L.bracket(N * x, y) + L.bracket(x, N * y) - N * L.bracket(x, y);
      if (N * def != L.bracket(N * x, N * y))
        rep.fail("bracket identity fails on (" + L.names()[i] + "," + L.names()[j] + ")");
    }
  auto sweep = sweep_vectors(f, L.dim(), max_sweep, seed);
  rep.exhaustive = sweep.exhaustive;
  for (const auto& x : sweep.vectors) {
    FpVector pdef = N * R.pmap(x) - L.ad(x).power(f.p() - 1) * (N * x);
    if (N * pdef != R.pmap(N * x)) {
      rep.fail("p-map identity fails at v=" + vec_str(x));
      break;
    }
  }
  return rep;
}

// The order-1 deformation induced by a Nijenhuis operator:
//   m_1(x,y) = [Nx,y] + [x,Ny] - N[x,y],  omega_1(x) = N(x^[p]) - ad_x^{p-1} N(x)
// with omega_1 recorded on the basis.
inline Deformation nijenhuis_deformation(const RestrictedLieAlgebra& R, const FpMatrix& N) {
  const auto& L = R.lie();
  const auto& f = R.field();
  auto prs = increasing_tuples(L.dim(), 2);
  std::vector<FpVector> m1;
  for (const auto& pr : prs) {
    FpVector x = L.basis(pr[0]), y = L.basis(pr[1]);
    m1.push_back(L.bracket(N * x, y) + L.bracket(x, N * y) - N * L.bracket(x, y));
  }
  std::vector<FpVector> o1;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    FpVector x = L.basis(i);
    o1.push_back(N * R.pmap(x) - L.ad(x).power(f.p() - 1) * (N * x));
  }
  return Deformation(R, 1, {m1}, {o1});
}

}  // namespace rlie

#endif
