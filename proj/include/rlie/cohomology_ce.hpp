#ifndef RLIE_COHOMOLOGY_CE_HPP
#define RLIE_COHOMOLOGY_CE_HPP

// Ordinary Lie algebra cohomology with coefficients in a module, via the
// cochain complex of alternating multilinear maps.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "gf.hpp"

namespace rlie {

// All strictly increasing m-tuples from {0..n-1}, in lexicographic order.
inline std::vector<std::vector<std::size_t>> increasing_tuples(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (m - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Sort a tuple of basis indices; returns the permutation sign, or nullopt if
// an index repeats (alternating maps vanish there).
inline std::optional<int> sort_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (idx[i] == idx[j]) return std::nullopt;
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
    }
  return sign;
}

// The cochain complex C^m(L, M) of alternating maps L^m -> M, m <= max_degree.
// Coordinates: increasing basis m-tuples (lex order) crossed with the module
// basis; the coefficient of tuple t and module index k sits at
// t_index * dim(M) + k.
class CeComplex {
public:
  CeComplex(RestrictedLieAlgebra R, RestrictedModule M, std::size_t max_degree = 6)
      : m_R(std::move(R)), m_M(std::move(M)), m_max(max_degree) {
    require_same_field(m_R.field(), m_M.field());
    for (std::size_t m = 0; m <= m_max + 1; ++m) {
      m_tuples.push_back(increasing_tuples(m_R.dim(), m));
      std::map<std::vector<std::size_t>, std::size_t> idx;
      for (std::size_t t = 0; t < m_tuples.back().size(); ++t) idx[m_tuples.back()[t]] = t;
      m_tuple_index.push_back(std::move(idx));
    }
  }

  const RestrictedLieAlgebra& algebra() const { return m_R; }
  const RestrictedModule& coefficients() const { return m_M; }
  std::size_t max_degree() const { return m_max; }

  std::size_t tuple_count(std::size_t m) const { return m_tuples.at(m).size(); }
  const std::vector<std::vector<std::size_t>>& tuples(std::size_t m) const { return m_tuples.at(m); }

  std::size_t dim(std::size_t m) const { return tuple_count(m) * m_M.dim(); }

  FpVector zero_cochain(std::size_t m) const { return FpVector(field(), dim(m)); }
  const PrimeField& field() const { return m_R.field(); }

  // Value of a cochain on basis arguments (any order, repeats give zero).
  FpVector eval_basis(std::size_t m, const FpVector& coords,
                      std::vector<std::size_t> idx) const {
    auto sign = sort_sign(idx);
    FpVector v = m_M.zero();
    if (!sign) return v;
    std::size_t t = m_tuple_index.at(m).at(idx);
    for (std::size_t k = 0; k < m_M.dim(); ++k) v.set(k, coords[t * m_M.dim() + k]);
    return *sign == 1 ? v : -v;
  }

  // Multilinear evaluation on general vector arguments.
  FpVector eval(std::size_t m, const FpVector& coords, const std::vector<FpVector>& args) const {
    if (args.size() != m) throw std::invalid_argument("cochain arity mismatch");
    FpVector acc = m_M.zero();
    std::vector<std::size_t> idx(m, 0);
    std::function<void(std::size_t, int64_t)> rec = [&](std::size_t pos, int64_t coef) {
      if (coef == 0) return;
      if (pos == m) {
        acc += eval_basis(m, coords, idx) * coef;
        return;
      }
      for (std::size_t i = 0; i < m_R.dim(); ++i) {
        if (args[pos][i] == 0) continue;
        idx[pos] = i;
        rec(pos + 1, field().mul(coef, args[pos][i]));
      }
    };
    rec(0, 1);
    return acc;
  }

  // Value of the differential of a cochain on a basis (m+1)-tuple.
  FpVector diff_eval_basis(std::size_t m, const FpVector& coords,
                           const std::vector<std::size_t>& tup) const {
    const auto& L = m_R.lie();
    const auto& f = field();
    FpVector acc = m_M.zero();
    const std::size_t len = tup.size();
    for (std::size_t ii = 0; ii < len; ++ii)
      for (std::size_t jj = ii + 1; jj < len; ++jj) {
        // sign (-1)^{i+j-1} with 1-based positions i, j
        int64_t sgn = ((ii + jj + 1) % 2 == 0) ? 1 : f.p() - 1;
        const FpVector& br = L.structure(tup[ii], tup[jj]);
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < len; ++k)
          if (k != ii && k != jj) rest.push_back(tup[k]);
        for (std::size_t b = 0; b < L.dim(); ++b) {
          if (br[b] == 0) continue;
          std::vector<std::size_t> idx{b};
          idx.insert(idx.end(), rest.begin(), rest.end());
          acc += eval_basis(m, coords, idx) * f.mul(sgn, br[b]);
        }
      }
    for (std::size_t ii = 0; ii < len; ++ii) {
      // sign (-1)^i with 1-based position i
      int64_t sgn = (ii % 2 == 1) ? 1 : f.p() - 1;
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < len; ++k)
        if (k != ii) rest.push_back(tup[k]);
      acc += m_M.act(L.basis(tup[ii]), eval_basis(m, coords, rest)) * sgn;
    }
    return acc;
  }

  FpVector diff(std::size_t m, const FpVector& coords) const {
    FpVector out = zero_cochain(m + 1);
    const std::size_t dM = m_M.dim();
    for (std::size_t t = 0; t < tuple_count(m + 1); ++t) {
      FpVector v = diff_eval_basis(m, coords, m_tuples[m + 1][t]);
      for (std::size_t k = 0; k < dM; ++k) out.set(t * dM + k, v[k]);
    }
    return out;
  }

  const FpMatrix& diff_matrix(std::size_t m) const {
    auto it = m_diff_cache.find(m);
    if (it != m_diff_cache.end()) return it->second;
    FpMatrix d(field(), dim(m + 1), dim(m));
    for (std::size_t c = 0; c < dim(m); ++c) {
      FpVector unit = zero_cochain(m);
      unit.set(c, 1);
      d.set_col(c, diff(m, unit));
    }
    return m_diff_cache.emplace(m, std::move(d)).first->second;
  }

  std::vector<FpVector> cocycle_basis(std::size_t m) const {
    return diff_matrix(m).kernel_basis();
  }

  std::size_t cocycle_dim(std::size_t m) const { return dim(m) - diff_matrix(m).rank(); }
  std::size_t coboundary_dim(std::size_t m) const {
    return m == 0 ? 0 : diff_matrix(m - 1).rank();
  }
  std::size_t cohomology_dim(std::size_t m) const {
    if (m > m_max) throw std::invalid_argument("degree exceeds the configured cap");
    return cocycle_dim(m) - coboundary_dim(m);
  }

private:
  RestrictedLieAlgebra m_R;
  RestrictedModule m_M;
  std::size_t m_max;
  std::vector<std::vector<std::vector<std::size_t>>> m_tuples;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> m_tuple_index;
  mutable std::map<std::size_t, FpMatrix> m_diff_cache;
};

}  // namespace rlie

#endif
