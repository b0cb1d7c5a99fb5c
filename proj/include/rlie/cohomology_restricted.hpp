#ifndef RLIE_COHOMOLOGY_RESTRICTED_HPP
#define RLIE_COHOMOLOGY_RESTRICTED_HPP

// Restricted cohomology in low degrees for p >= 3: pairs (phi, omega) in
// degree 2 with omega satisfying the (*)-property with respect to phi, the
// induced maps from degree-1 cochains, and the specialised complex for
// abelian algebras.

#include <map>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "cohomology_ce.hpp"
#include "gf.hpp"

namespace rlie {

inline int64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// The (*)-property correction term: for omega with the (*)-property w.r.t. phi,
//   omega(x+y) = omega(x) + omega(y) + star_correction(phi, x, y).
// Sequences run over (x_3..x_p) in {x,y}^{p-2} with x_1 = x, x_2 = y fixed;
// module actions are applied with the rightmost written factor innermost.
inline FpVector star_correction(
    const LieAlgebra& L, const RestrictedModule& M,
    const std::function<FpVector(const FpVector&, const FpVector&)>& phi, const FpVector& x,
    const FpVector& y) {
  const auto& f = L.field();
  const int64_t p = f.p();
  FpVector acc = M.zero();
  const std::size_t freedom = static_cast<std::size_t>(p - 2);
  for (std::size_t mask = 0; mask < (std::size_t(1) << freedom); ++mask) {
    std::vector<const FpVector*> arr{&x, &y};
    int64_t count_x = 1;
    for (std::size_t b = 0; b < freedom; ++b) {
      bool is_x = (mask >> b) & 1;
      arr.push_back(is_x ? &x : &y);
      if (is_x) ++count_x;
    }
    int64_t weight = f.inv(count_x);
    for (int64_t k = 0; k <= p - 2; ++k) {
      // phi([[x_1,x_2],...,x_{p-k-1}], x_{p-k}), then actions by
      // x_{p-k+1}, ..., x_p (in that order).
      FpVector nest = *arr[0];
      for (int64_t t = 1; t <= p - k - 2; ++t) nest = L.bracket(nest, *arr[t]);
      FpVector val = phi(nest, *arr[p - k - 1]);
      for (int64_t t = p - k; t <= p - 1; ++t) val = M.act(*arr[t], val);
      int64_t sgn = (k % 2 == 0) ? 1 : f.p() - 1;
      acc += val * f.mul(weight, sgn);
    }
  }
  return acc;
}

// The (**)-property correction for beta w.r.t. a 3-cochain alpha:
//   beta(x, y1+y2) = beta(x,y1) + beta(x,y2) - star2_correction(alpha, x, y1, y2).
inline FpVector star2_correction(
    const LieAlgebra& L, const RestrictedModule& M,
    const std::function<FpVector(const FpVector&, const FpVector&, const FpVector&)>& alpha,
    const FpVector& x, const FpVector& y1, const FpVector& y2) {
  const auto& f = L.field();
  const int64_t p = f.p();
  FpVector acc = M.zero();
  const std::size_t freedom = static_cast<std::size_t>(p - 2);
  for (std::size_t mask = 0; mask < (std::size_t(1) << freedom); ++mask) {
    std::vector<const FpVector*> h{&y1, &y2};
    int64_t count_y1 = 1;
    for (std::size_t b = 0; b < freedom; ++b) {
      bool is_y1 = (mask >> b) & 1;
      h.push_back(is_y1 ? &y1 : &y2);
      if (is_y1) ++count_y1;
    }
    int64_t weight = f.inv(count_y1);
    for (int64_t j = 0; j <= p - 2; ++j) {
      int64_t sgn_j = (j % 2 == 0) ? 1 : f.p() - 1;
      for (int64_t k = 1; k <= j; ++k) {
        FpVector first = x;  // [[x, h_{p-k}], ..., h_{p-j+1}], indices descending
        for (int64_t t = p - k; t >= p - j + 1; --t) first = L.bracket(first, *h[t - 1]);
        FpVector second = *h[0];  // [[h_1, h_2], ..., h_{p-j-1}]
        for (int64_t t = 2; t <= p - j - 1; ++t) second = L.bracket(second, *h[t - 1]);
        FpVector val = alpha(first, second, *h[p - j - 1]);
        for (int64_t t = p - k + 1; t <= p; ++t) val = M.act(*h[t - 1], val);
        acc += val * f.mul(weight, f.mul(sgn_j, binomial(j, k) % f.p()));
      }
    }
  }
  return acc;
}

// Degrees 0..2 of the restricted complex (p >= 3). Degree-2 cochains are pairs
// (phi, omega): phi alternating bilinear, omega defined on the basis and
// extended to all vectors by the (*)-property fold. Coordinate layout:
// phi coefficients first (as in CeComplex degree 2), then omega values on the
// basis, each crossed with the module basis.
class StarComplex {
public:
  StarComplex(RestrictedLieAlgebra R, RestrictedModule M)
      : m_ce(std::move(R), std::move(M)) {
    if (field().p() < 3) throw std::invalid_argument("this complex requires p >= 3");
    if (field().p() > 7)
      throw std::invalid_argument("the (*)-property fold is limited to p <= 7");
  }

  const CeComplex& ce() const { return m_ce; }
  const RestrictedLieAlgebra& algebra() const { return m_ce.algebra(); }
  const RestrictedModule& coefficients() const { return m_ce.coefficients(); }
  const PrimeField& field() const { return m_ce.field(); }
  std::size_t n() const { return algebra().dim(); }
  std::size_t dm() const { return coefficients().dim(); }

  std::size_t dim1() const { return m_ce.dim(1); }
  std::size_t phi_dim() const { return m_ce.dim(2); }
  std::size_t dim2() const { return phi_dim() + n() * dm(); }
  std::size_t dim3() const { return m_ce.dim(3) + n() * n() * dm(); }

  FpVector phi_part(const FpVector& c2) const {
    FpVector phi(field(), phi_dim());
    for (std::size_t i = 0; i < phi_dim(); ++i) phi.set(i, c2[i]);
    return phi;
  }

  FpVector omega_basis(const FpVector& c2, std::size_t i) const {
    FpVector v = coefficients().zero();
    for (std::size_t k = 0; k < dm(); ++k) v.set(k, c2[phi_dim() + i * dm() + k]);
    return v;
  }

  FpVector make_cochain2(const FpVector& phi, const std::vector<FpVector>& omega_images) const {
    FpVector c(field(), dim2());
    for (std::size_t i = 0; i < phi_dim(); ++i) c.set(i, phi[i]);
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t k = 0; k < dm(); ++k)
        c.set(phi_dim() + i * dm() + k, omega_images.at(i)[k]);
    return c;
  }

  FpVector phi_eval(const FpVector& c2, const FpVector& x, const FpVector& y) const {
    return m_ce.eval(2, phi_part(c2), {x, y});
  }

  // omega on an arbitrary vector, via p-semilinearity on each basis component
  // and the (*)-correction between accumulated partial sums.
  FpVector star_extend(const FpVector& c2, const FpVector& v) const {
    const auto& f = field();
    auto phi = [&](const FpVector& a, const FpVector& b) { return phi_eval(c2, a, b); };
    FpVector r = coefficients().zero();
    FpVector u = algebra().lie().zero();
    for (std::size_t i = 0; i < n(); ++i) {
      if (v[i] == 0) continue;
      FpVector term = algebra().lie().basis(i) * v[i];
      r += omega_basis(c2, i) * f.pow(v[i], f.p());
      r += star_correction(algebra().lie(), coefficients(), phi, u, term);
      u += term;
    }
    return r;
  }

  // Induced degree-1 map: ind1(psi)(x) = psi(x^[p]) - x^{p-1}.psi(x).
  FpVector ind1_eval(const FpVector& psi, const FpVector& x) const {
    FpVector val = m_ce.eval(1, psi, {algebra().pmap(x)});
    FpVector tail = m_ce.eval(1, psi, {x});
    return val - coefficients().rho(x).power(field().p() - 1) * tail;
  }

  // Induced degree-2 map applied to a pair (alpha, beta = star-extension).
  FpVector ind2_eval(const FpVector& c2, const FpVector& x, const FpVector& y) const {
    const auto& f = field();
    const auto& L = algebra().lie();
    FpVector acc = m_ce.eval(2, phi_part(c2), {x, algebra().pmap(y)});
    for (int64_t i = 0; i <= f.p() - 1; ++i) {
      int64_t j = f.p() - 1 - i;
      FpVector nest = x;
      for (int64_t t = 0; t < j; ++t) nest = L.bracket(nest, y);
      FpVector term = coefficients().rho(y).power(i) * m_ce.eval(2, phi_part(c2), {nest, y});
      int64_t sgn = (i % 2 == 0) ? 1 : f.p() - 1;
      acc -= term * sgn;
    }
    acc += coefficients().act(x, star_extend(c2, y));
    return acc;
  }

  // d1: C^1 -> C^2, psi |-> (d1_CE psi, ind1 psi).
  const FpMatrix& d1_matrix() const {
    if (!m_d1) {
      FpMatrix d(field(), dim2(), dim1());
      for (std::size_t c = 0; c < dim1(); ++c) {
        FpVector psi(field(), dim1());
        psi.set(c, 1);
        FpVector top = m_ce.diff(1, psi);
        FpVector col(field(), dim2());
        for (std::size_t i = 0; i < phi_dim(); ++i) col.set(i, top[i]);
        for (std::size_t i = 0; i < n(); ++i) {
          FpVector v = ind1_eval(psi, algebra().lie().basis(i));
          for (std::size_t k = 0; k < dm(); ++k) col.set(phi_dim() + i * dm() + k, v[k]);
        }
        d.set_col(c, col);
      }
      m_d1 = d;
    }
    return *m_d1;
  }

  // d2: C^2 -> (3-cochains, maps on ordered basis pairs),
  // (phi, omega) |-> (d2_CE phi, ind2(phi, omega)). Its kernel is Z^2.
  const FpMatrix& d2_matrix() const {
    if (!m_d2) {
      const std::size_t dM = dm();
      FpMatrix d(field(), dim3(), dim2());
      for (std::size_t c = 0; c < dim2(); ++c) {
        FpVector unit(field(), dim2());
        unit.set(c, 1);
        FpVector top = m_ce.diff(2, phi_part(unit));
        FpVector col(field(), dim3());
        for (std::size_t i = 0; i < m_ce.dim(3); ++i) col.set(i, top[i]);
        for (std::size_t i = 0; i < n(); ++i)
          for (std::size_t j = 0; j < n(); ++j) {
            FpVector v = ind2_eval(unit, algebra().lie().basis(i), algebra().lie().basis(j));
            for (std::size_t k = 0; k < dM; ++k)
              col.set(m_ce.dim(3) + (i * n() + j) * dM + k, v[k]);
          }
        d.set_col(c, col);
      }
      m_d2 = d;
    }
    return *m_d2;
  }

  std::vector<FpVector> cocycle_basis2() const { return d2_matrix().kernel_basis(); }
  std::size_t z2_dim() const { return dim2() - d2_matrix().rank(); }
  std::size_t b2_dim() const { return d1_matrix().rank(); }
  std::size_t h2_dim() const { return z2_dim() - b2_dim(); }

  std::size_t z1_dim() const { return dim1() - d1_matrix().rank(); }
  std::size_t b1_dim() const { return m_ce.diff_matrix(0).rank(); }
  std::size_t h1_dim() const { return z1_dim() - b1_dim(); }

  bool is_cocycle2(const FpVector& c2) const { return (d2_matrix() * c2).is_zero(); }

  // Coboundary certificate: a degree-1 cochain psi with d1(psi) = c2, if any.
  std::optional<FpVector> coboundary_preimage(const FpVector& c2) const {
    auto res = d1_matrix().solve(c2);
    if (!res.consistent) return std::nullopt;
    return res.solution;
  }

  // Independent cocycle oracle: re-checks ind2 = 0 over all vector pairs
  // (not just basis pairs), with omega values memoised per vector.
  bool cocycle_oracle(const FpVector& c2, int64_t max_pairs = 1000000,
                      bool* exhaustive = nullptr) const {
    auto sweep = sweep_vectors(field(), n(), max_pairs, 7);
    int64_t sq = static_cast<int64_t>(sweep.vectors.size()) * static_cast<int64_t>(sweep.vectors.size());
    bool full = sweep.exhaustive && sq <= max_pairs;
    if (!full) {
      // fall back to a seeded sample of argument pairs
      std::mt19937_64 rng(7);
      sweep.vectors.clear();
      for (int k = 0; k < 20; ++k) sweep.vectors.push_back(random_vector(field(), n(), rng));
    }
    if (exhaustive) *exhaustive = full;
    std::map<std::vector<int64_t>, FpVector> memo;
    auto omega_of = [&](const FpVector& v) {
      auto it = memo.find(v.entries());
      if (it != memo.end()) return it->second;
      FpVector w = star_extend(c2, v);
      memo.emplace(v.entries(), w);
      return w;
    };
    const auto& f = field();
    const auto& L = algebra().lie();
    for (const auto& x : sweep.vectors)
      for (const auto& y : sweep.vectors) {
        FpVector acc = m_ce.eval(2, phi_part(c2), {x, algebra().pmap(y)});
        for (int64_t i = 0; i <= f.p() - 1; ++i) {
          int64_t j = f.p() - 1 - i;
          FpVector nest = x;
          for (int64_t t = 0; t < j; ++t) nest = L.bracket(nest, y);
          FpVector term = coefficients().rho(y).power(i) * m_ce.eval(2, phi_part(c2), {nest, y});
          acc -= term * ((i % 2 == 0) ? 1 : f.p() - 1);
        }
        acc += coefficients().act(x, omega_of(y));
        if (!acc.is_zero()) return false;
      }
    return true;
  }

private:
  CeComplex m_ce;
  mutable std::optional<FpMatrix> m_d1;
  mutable std::optional<FpMatrix> m_d2;
};

// All non-decreasing m-tuples from {0..n-1}, lexicographic.
inline std::vector<std::vector<std::size_t>> nondecreasing_tuples(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Restricted cohomology of an abelian restricted Lie algebra (p > 3) in all
// degrees: C^k is the direct sum over 2t+s=k of maps that are p-semilinear
// (hence Frobenius-twisted linear) in t symmetric slots and alternating in s
// slots. Coordinates: blocks ordered by increasing t; inside a block,
// non-decreasing t-tuple x increasing s-tuple x module basis.
class AbelianStarComplex {
public:
  AbelianStarComplex(RestrictedLieAlgebra R, RestrictedModule M, std::size_t max_degree = 6)
      : m_R(std::move(R)), m_M(std::move(M)), m_max(max_degree) {
    if (field().p() <= 3)
      throw std::invalid_argument("the abelian complex is defined for p > 3");
    if (!m_R.lie().is_abelian())
      throw std::invalid_argument("this complex requires an abelian Lie algebra");
  }

  const PrimeField& field() const { return m_R.field(); }
  std::size_t n() const { return m_R.dim(); }
  std::size_t dm() const { return m_M.dim(); }

  struct Component {
    std::size_t t, s;
    std::vector<std::vector<std::size_t>> sym;
    std::vector<std::vector<std::size_t>> alt;
    std::size_t offset = 0;  // coordinate offset of this block
  };

  const std::vector<Component>& components(std::size_t k) const {
    auto it = m_comp.find(k);
    if (it != m_comp.end()) return it->second;
    std::vector<Component> comps;
    std::size_t off = 0;
    for (std::size_t t = 0; 2 * t <= k; ++t) {
      std::size_t s = k - 2 * t;
      Component c;
      c.t = t;
      c.s = s;
      c.sym = nondecreasing_tuples(n(), t);
      c.alt = increasing_tuples(n(), s);
      c.offset = off;
      off += c.sym.size() * c.alt.size() * dm();
      comps.push_back(std::move(c));
    }
    return m_comp.emplace(k, std::move(comps)).first->second;
  }

  std::size_t dim(std::size_t k) const {
    std::size_t d = 0;
    for (const auto& c : components(k)) d += c.sym.size() * c.alt.size() * dm();
    return d;
  }

  // Value of the component gamma_t on basis symmetric indices and alternating
  // indices (the latter in any order, with sign).
  FpVector eval_component(std::size_t k, const FpVector& coords, std::size_t t,
                          std::vector<std::size_t> sym_idx,
                          std::vector<std::size_t> alt_idx) const {
    const auto& comps = components(k);
    const Component* comp = nullptr;
    for (const auto& c : comps)
      if (c.t == t) comp = &c;
    if (!comp) return m_M.zero();
    std::sort(sym_idx.begin(), sym_idx.end());
    auto sign = sort_sign(alt_idx);
    if (!sign) return m_M.zero();
    std::size_t si = 0, ai = 0;
    bool found_s = false, found_a = false;
    for (std::size_t i = 0; i < comp->sym.size(); ++i)
      if (comp->sym[i] == sym_idx) { si = i; found_s = true; }
    for (std::size_t i = 0; i < comp->alt.size(); ++i)
      if (comp->alt[i] == alt_idx) { ai = i; found_a = true; }
    if (!found_s || !found_a) throw std::invalid_argument("bad component indices");
    FpVector v = m_M.zero();
    std::size_t base = comp->offset + (si * comp->alt.size() + ai) * dm();
    for (std::size_t q = 0; q < dm(); ++q) v.set(q, coords[base + q]);
    return *sign == 1 ? v : -v;
  }

  // Same, with a general vector in the first alternating slot (the slot that
  // receives basis p-th powers); multilinear there.
  FpVector eval_component_vec_first(std::size_t k, const FpVector& coords, std::size_t t,
                                    const std::vector<std::size_t>& sym_idx, const FpVector& v,
                                    const std::vector<std::size_t>& alt_rest) const {
    FpVector acc = m_M.zero();
    for (std::size_t b = 0; b < n(); ++b) {
      if (v[b] == 0) continue;
      std::vector<std::size_t> alt{b};
      alt.insert(alt.end(), alt_rest.begin(), alt_rest.end());
      acc += eval_component(k, coords, t, sym_idx, alt) * v[b];
    }
    return acc;
  }

  // Differential C^k -> C^{k+1}; the (t, s+1)-component of d(gamma) evaluated
  // on basis tuples (X; Y) is
  //   sum_j (-1)^j y_j . gamma_t(X; Y \ y_j)
  // + sum_i gamma_{t-1}(X \ x_i; x_i^[p], Y) + sum_i x_i^{p-1} . gamma_{t-1}(X \ x_i; x_i, Y).
  const FpMatrix& diff_matrix(std::size_t k) const {
    auto it = m_diff.find(k);
    if (it != m_diff.end()) return it->second;
    const auto& f = field();
    FpMatrix d(f, dim(k + 1), dim(k));
    for (std::size_t col = 0; col < dim(k); ++col) {
      FpVector unit(f, dim(k));
      unit.set(col, 1);
      FpVector out(f, dim(k + 1));
      for (const auto& tc : components(k + 1)) {
        for (std::size_t si = 0; si < tc.sym.size(); ++si)
          for (std::size_t ai = 0; ai < tc.alt.size(); ++ai) {
            const auto& X = tc.sym[si];
            const auto& Y = tc.alt[ai];
            FpVector acc = m_M.zero();
            for (std::size_t j = 0; j < Y.size(); ++j) {
              std::vector<std::size_t> rest;
              for (std::size_t q = 0; q < Y.size(); ++q)
                if (q != j) rest.push_back(Y[q]);
              int64_t sgn = (j % 2 == 0) ? f.p() - 1 : 1;  // (-1)^j, 1-based j
              acc += m_M.act(m_R.lie().basis(Y[j]),
                             eval_component(k, unit, tc.t, X, rest)) * sgn;
            }
            for (std::size_t i = 0; i < X.size(); ++i) {
              std::vector<std::size_t> xrest;
              for (std::size_t q = 0; q < X.size(); ++q)
                if (q != i) xrest.push_back(X[q]);
              acc += eval_component_vec_first(k, unit, tc.t - 1, xrest,
                                              m_R.pmap_basis(X[i]), Y);
              std::vector<std::size_t> alt{X[i]};
              alt.insert(alt.end(), Y.begin(), Y.end());
              FpVector inner = eval_component(k, unit, tc.t - 1, xrest, alt);
              acc += m_M.rho(m_R.lie().basis(X[i])).power(f.p() - 1) * inner;
            }
            std::size_t base = tc.offset + (si * tc.alt.size() + ai) * dm();
            for (std::size_t q = 0; q < dm(); ++q) out.set(base + q, acc[q]);
          }
      }
      d.set_col(col, out);
    }
    return m_diff.emplace(k, std::move(d)).first->second;
  }

  std::size_t cohomology_dim(std::size_t k) const {
    if (k > m_max) throw std::invalid_argument("degree exceeds the configured cap");
    std::size_t z = dim(k) - diff_matrix(k).rank();
    std::size_t b = (k == 0) ? 0 : diff_matrix(k - 1).rank();
    return z - b;
  }

private:
  RestrictedLieAlgebra m_R;
  RestrictedModule m_M;
  std::size_t m_max;
  mutable std::map<std::size_t, std::vector<Component>> m_comp;
  mutable std::map<std::size_t, FpMatrix> m_diff;
};

}  // namespace rlie

#endif
