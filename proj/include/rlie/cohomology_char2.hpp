#ifndef RLIE_COHOMOLOGY_CHAR2_HPP
#define RLIE_COHOMOLOGY_CHAR2_HPP

// Restricted cohomology in characteristic 2, in all degrees up to a cap.
// A degree-n cochain (n >= 2) is a pair (phi, omega): phi an alternating
// n-cochain and omega: L^{n-1} -> M quadratic in its first slot, linear in
// the others, with omega(x+y,...) = omega(x,...) + omega(y,...) + phi(x,y,...).

#include <map>
#include <optional>
#include <vector>

#include "algebra.hpp"
#include "cohomology_ce.hpp"
#include "gf.hpp"

namespace rlie {

class Char2Complex {
public:
  Char2Complex(RestrictedLieAlgebra R, RestrictedModule M, std::size_t max_degree = 5)
      : m_ce(std::move(R), std::move(M), max_degree) {
    if (field().p() != 2) throw std::invalid_argument("this complex requires p = 2");
  }

  const CeComplex& ce() const { return m_ce; }
  const RestrictedLieAlgebra& algebra() const { return m_ce.algebra(); }
  const RestrictedModule& coefficients() const { return m_ce.coefficients(); }
  const PrimeField& field() const { return m_ce.field(); }
  std::size_t n() const { return algebra().dim(); }
  std::size_t dm() const { return coefficients().dim(); }

  // omega values are stored on every (deg-1)-tuple of basis indices; no
  // symmetry in the first slot is assumed.
  std::size_t omega_tuples(std::size_t deg) const {
    std::size_t c = 1;
    for (std::size_t i = 0; i + 1 < deg; ++i) c *= n();
    return c;
  }

  std::size_t dim(std::size_t deg) const {
    if (deg <= 1) return m_ce.dim(deg);
    return m_ce.dim(deg) + omega_tuples(deg) * dm();
  }

  std::size_t omega_offset(std::size_t deg) const { return m_ce.dim(deg); }

  std::size_t omega_index(std::size_t deg, const std::vector<std::size_t>& tup) const {
    if (tup.size() + 1 != deg) throw std::invalid_argument("omega tuple arity mismatch");
    std::size_t idx = 0;
    for (auto i : tup) idx = idx * n() + i;
    return idx;
  }

  FpVector phi_part(std::size_t deg, const FpVector& c) const {
    FpVector phi(field(), m_ce.dim(deg));
    for (std::size_t i = 0; i < phi.size(); ++i) phi.set(i, c[i]);
    return phi;
  }

  FpVector omega_basis(std::size_t deg, const FpVector& c,
                       const std::vector<std::size_t>& tup) const {
    FpVector v = coefficients().zero();
    std::size_t base = omega_offset(deg) + omega_index(deg, tup) * dm();
    for (std::size_t k = 0; k < dm(); ++k) v.set(k, c[base + k]);
    return v;
  }

  // omega on a general first argument (fold through phi) and general linear
  // slots (multilinear expansion).
  FpVector omega_eval(std::size_t deg, const FpVector& c, const FpVector& first,
                      const std::vector<FpVector>& rest) const {
    if (rest.size() != deg - 2) throw std::invalid_argument("omega arity mismatch");
    FpVector acc = coefficients().zero();
    FpVector u = algebra().lie().zero();
    for (std::size_t i = 0; i < n(); ++i) {
      if (first[i] == 0) continue;
      // omega(e_i, rest), multilinear in the remaining slots
      std::vector<std::size_t> tup(deg - 1, 0);
      tup[0] = i;
      std::function<void(std::size_t, int64_t)> rec = [&](std::size_t pos, int64_t coef) {
        if (pos + 1 == deg) {
          acc += omega_basis(deg, c, tup) * coef;
          return;
        }
        for (std::size_t b = 0; b < n(); ++b) {
          if (rest[pos - 1][b] == 0) continue;
          tup[pos] = b;
          rec(pos + 1, field().mul(coef, rest[pos - 1][b]));
        }
      };
      rec(1, 1);
      // cross term phi(u, e_i, rest)
      std::vector<FpVector> args{u, algebra().lie().basis(i)};
      for (const auto& r : rest) args.push_back(r);
      acc += m_ce.eval(deg, phi_part(deg, c), args);
      u += algebra().lie().basis(i);
    }
    return acc;
  }

  // The omega-component of the differential of a degree-deg pair, evaluated at
  // (x, z_2, ..., z_{deg+1-1}) = (x, zs) with deg args in total:
  //   x.phi(x, zs) + sum_i z_i.omega(x, zs\z_i) + phi(x^[2], zs)
  // + sum_i phi([x,z_i], x, zs\z_i) + sum_{i<j} omega(x, [z_i,z_j], zs\{z_i,z_j}).
  FpVector delta_eval(std::size_t deg, const FpVector& c, const FpVector& x,
                      const std::vector<FpVector>& zs) const {
    if (zs.size() != deg - 1) throw std::invalid_argument("delta arity mismatch");
    const auto& L = algebra().lie();
    std::vector<FpVector> all_args{x};
    for (const auto& z : zs) all_args.push_back(z);
    FpVector acc = coefficients().act(x, m_ce.eval(deg, phi_part(deg, c), all_args));
    for (std::size_t i = 0; i < zs.size(); ++i) {
      std::vector<FpVector> rest;
      for (std::size_t q = 0; q < zs.size(); ++q)
        if (q != i) rest.push_back(zs[q]);
      acc += coefficients().act(zs[i], omega_eval(deg, c, x, rest));
    }
    {
      std::vector<FpVector> args{algebra().pmap(x)};
      for (const auto& z : zs) args.push_back(z);
      acc += m_ce.eval(deg, phi_part(deg, c), args);
    }
    for (std::size_t i = 0; i < zs.size(); ++i) {
      std::vector<FpVector> args{L.bracket(x, zs[i]), x};
      for (std::size_t q = 0; q < zs.size(); ++q)
        if (q != i) args.push_back(zs[q]);
      acc += m_ce.eval(deg, phi_part(deg, c), args);
    }
    for (std::size_t i = 0; i < zs.size(); ++i)
      for (std::size_t j = i + 1; j < zs.size(); ++j) {
        std::vector<FpVector> rest{L.bracket(zs[i], zs[j])};
        for (std::size_t q = 0; q < zs.size(); ++q)
          if (q != i && q != j) rest.push_back(zs[q]);
        acc += omega_eval(deg, c, x, rest);
      }
    return acc;
  }

  // Full differential C^deg -> C^{deg+1}.
  FpVector diff(std::size_t deg, const FpVector& c) const {
    const auto& L = algebra().lie();
    FpVector out(field(), dim(deg + 1));
    if (deg == 0) return m_ce.diff(0, c);
    FpVector top = m_ce.diff(deg, deg <= 1 ? c : phi_part(deg, c));
    for (std::size_t i = 0; i < top.size(); ++i) out.set(i, top[i]);
    std::size_t dM = dm();
    if (deg == 1) {
      // omega(x) = psi(x^[2]) + x.psi(x) on the basis
      for (std::size_t i = 0; i < n(); ++i) {
        FpVector v = m_ce.eval(1, c, {algebra().pmap_basis(i)}) +
                     coefficients().act(L.basis(i), m_ce.eval(1, c, {L.basis(i)}));
        for (std::size_t k = 0; k < dM; ++k)
          out.set(omega_offset(2) + i * dM + k, v[k]);
      }
      return out;
    }
    // enumerate all (deg)-tuples for the target omega block
    std::vector<std::size_t> tup(deg, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == deg) {
        std::vector<FpVector> zs;
        for (std::size_t q = 1; q < deg; ++q) zs.push_back(L.basis(tup[q]));
        FpVector v = delta_eval(deg, c, L.basis(tup[0]), zs);
        std::size_t base = omega_offset(deg + 1) + omega_index(deg + 1, tup) * dM;
        for (std::size_t k = 0; k < dM; ++k) out.set(base + k, v[k]);
        return;
      }
      for (std::size_t b = 0; b < n(); ++b) {
        tup[pos] = b;
        rec(pos + 1);
      }
    };
    rec(0);
    return out;
  }

  const FpMatrix& diff_matrix(std::size_t deg) const {
    auto it = m_diff.find(deg);
    if (it != m_diff.end()) return it->second;
    FpMatrix d(field(), dim(deg + 1), dim(deg));
    for (std::size_t c = 0; c < dim(deg); ++c) {
      FpVector unit(field(), dim(deg));
      unit.set(c, 1);
      d.set_col(c, diff(deg, unit));
    }
    return m_diff.emplace(deg, std::move(d)).first->second;
  }

  std::size_t cocycle_dim(std::size_t deg) const { return dim(deg) - diff_matrix(deg).rank(); }
  std::size_t coboundary_dim(std::size_t deg) const {
    return deg == 0 ? 0 : diff_matrix(deg - 1).rank();
  }
  std::size_t cohomology_dim(std::size_t deg) const {
    return cocycle_dim(deg) - coboundary_dim(deg);
  }

  std::vector<FpVector> cocycle_basis(std::size_t deg) const {
    return diff_matrix(deg).kernel_basis();
  }

  bool is_cocycle(std::size_t deg, const FpVector& c) const {
    return (diff_matrix(deg) * c).is_zero();
  }

  std::optional<FpVector> coboundary_preimage(std::size_t deg, const FpVector& c) const {
    auto res = diff_matrix(deg - 1).solve(c);
    if (!res.consistent) return std::nullopt;
    return res.solution;
  }

  FpVector make_cochain2(const FpVector& phi, const std::vector<FpVector>& omega_images) const {
    FpVector c(field(), dim(2));
    for (std::size_t i = 0; i < m_ce.dim(2); ++i) c.set(i, phi[i]);
    for (std::size_t i = 0; i < n(); ++i)
      for (std::size_t k = 0; k < dm(); ++k)
        c.set(omega_offset(2) + i * dm() + k, omega_images.at(i)[k]);
    return c;
  }

private:
  CeComplex m_ce;
  mutable std::map<std::size_t, FpMatrix> m_diff;
};

// The square map of a truncated polynomial vector over a restricted algebra
// in characteristic 2: for x_t = sum t^i x_i,
//   x_t^[2] = sum t^{2i} x_i^[2] + sum_{i<j} t^{i+j} [x_i, x_j], truncated.
inline std::vector<FpVector> two_map_extend(const RestrictedLieAlgebra& R,
                                            const std::vector<FpVector>& series,
                                            std::size_t truncation) {
  if (R.field().p() != 2) throw std::invalid_argument("two_map_extend requires p = 2");
  std::vector<FpVector> out(truncation + 1, R.lie().zero());
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (2 * i <= truncation) out[2 * i] += R.pmap(series[i]);
    for (std::size_t j = i + 1; j < series.size(); ++j)
      if (i + j <= truncation) out[i + j] += R.lie().bracket(series[i], series[j]);
  }
  return out;
}

// Central extension of R by a one-dimensional center spanned by c, twisted by
// a scalar-valued degree-2 pair (phi, omega): bracket [x,y] + phi(x,y)c and
// square x^[2] + omega(x)c, with c^[2] = 0. Throws if the data does not give
// a Lie algebra; the caller verifies restrictedness.
inline RestrictedLieAlgebra central_extension(const RestrictedLieAlgebra& R,
                                              const Char2Complex& scalar_complex,
                                              const FpVector& pair2,
                                              const std::string& central_name = "c") {
  if (scalar_complex.dm() != 1)
    throw std::invalid_argument("central extensions use scalar coefficients");
  const auto& L = R.lie();
  const std::size_t n = L.dim();
  const auto& f = L.field();
  std::vector<std::string> names = L.names();
  names.push_back(central_name);
  std::vector<std::vector<FpVector>> c(n + 1, std::vector<FpVector>(n + 1, FpVector(f, n + 1)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FpVector v(f, n + 1);
      for (std::size_t k = 0; k < n; ++k) v.set(k, L.structure(i, j)[k]);
      FpVector val = scalar_complex.ce().eval(2, scalar_complex.phi_part(2, pair2),
                                              {L.basis(i), L.basis(j)});
      v.set(n, val[0]);
      c[i][j] = v;
    }
  std::vector<FpVector> images;
  for (std::size_t i = 0; i < n; ++i) {
    FpVector v(f, n + 1);
    for (std::size_t k = 0; k < n; ++k) v.set(k, R.pmap_basis(i)[k]);
    v.set(n, scalar_complex.omega_basis(2, pair2, {i})[0]);
    images.push_back(v);
  }
  images.push_back(FpVector(f, n + 1));  // c^[2] = 0
  return RestrictedLieAlgebra(LieAlgebra(f, names, c), images);
}

}  // namespace rlie

#endif
