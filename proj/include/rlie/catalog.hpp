#ifndef RLIE_CATALOG_HPP
#define RLIE_CATALOG_HPP

// Named families of restricted Lie algebras and associative algebras used
// throughout the library and the command line tool, plus the classification
// of restricted structures on the Heisenberg algebra.

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "rinehart.hpp"

namespace rlie {
namespace catalog {

// The Heisenberg algebra h = <x,y,z : [x,y] = z> with the p-map determined by
// a linear form theta: e_i^[p] = theta(e_i) z.
inline RestrictedLieAlgebra heisenberg(int64_t p, const std::vector<int64_t>& theta) {
  PrimeField f(p);
  if (theta.size() != 3) throw std::invalid_argument("theta must have three coefficients");
  std::vector<std::string> names{"x", "y", "z"};
  std::vector<std::vector<FpVector>> c(3, std::vector<FpVector>(3, FpVector(f, 3)));
  c[0][1] = FpVector(f, {0, 0, 1});
  c[1][0] = -c[0][1];
  std::vector<FpVector> images;
  for (std::size_t i = 0; i < 3; ++i) images.push_back(FpVector(f, {0, 0, theta[i]}));
  return RestrictedLieAlgebra(LieAlgebra(f, names, c), images);
}

inline std::vector<int64_t> theta_by_name(const std::string& name) {
  if (name == "0") return {0, 0, 0};
  if (name == "x*") return {1, 0, 0};
  if (name == "y*") return {0, 1, 0};
  if (name == "z*") return {0, 0, 1};
  throw std::invalid_argument("unknown theta name '" + name + "' (use 0, x*, y* or z*)");
}

// sl2 for p >= 3: [X,Y] = H, [H,X] = 2X, [H,Y] = -2Y; X,Y are p-nilpotent and
// H^[p] = 2^{p-1} H.
inline RestrictedLieAlgebra sl2(int64_t p) {
  PrimeField f(p);
  if (p < 3) throw std::invalid_argument("sl2 is restricted here only for p >= 3");
  std::vector<std::string> names{"X", "Y", "H"};
  std::vector<std::vector<FpVector>> c(3, std::vector<FpVector>(3, FpVector(f, 3)));
  c[0][1] = FpVector(f, {0, 0, 1});
  c[1][0] = -c[0][1];
  c[2][0] = FpVector(f, {2, 0, 0});
  c[0][2] = -c[2][0];
  c[2][1] = FpVector(f, {0, -2, 0});
  c[1][2] = -c[2][1];
  std::vector<FpVector> images{FpVector(f, 3), FpVector(f, 3),
                               FpVector(f, {0, 0, f.pow(2, p - 1)})};
  return RestrictedLieAlgebra(LieAlgebra(f, names, c), images);
}

// The Witt algebra W(1) for p >= 5: basis e_{-1},...,e_{p-2},
// [e_i,e_j] = (j-i) e_{i+j}, with e_0^[p] = e_0 and all other basis p-th
// powers zero.
inline RestrictedLieAlgebra witt(int64_t p) {
  PrimeField f(p);
  if (p < 5) throw std::invalid_argument("the Witt algebra requires p >= 5");
  const std::size_t n = static_cast<std::size_t>(p);
  std::vector<std::string> names;
  for (int64_t d = -1; d <= p - 2; ++d) names.push_back("e(" + std::to_string(d) + ")");
  std::vector<std::vector<FpVector>> c(n, std::vector<FpVector>(n, FpVector(f, n)));
  for (int64_t i = -1; i <= p - 2; ++i)
    for (int64_t j = -1; j <= p - 2; ++j) {
      int64_t s = i + j;
      if (s < -1 || s > p - 2) continue;
      FpVector v(f, n);
      v.set(static_cast<std::size_t>(s + 1), f.reduce(j - i));
      c[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] = v;
    }
  std::vector<FpVector> images(n, FpVector(f, n));
  images[1].set(1, 1);  // e_0^[p] = e_0
  return RestrictedLieAlgebra(LieAlgebra(f, names, c), images);
}

// Filiform nilpotent algebra of dimension p (p >= 5): [e_1, e_i] = e_{i+1}
// for 2 <= i <= p-1, with p-map e_k^[p] = lambda_k e_p.
inline RestrictedLieAlgebra filiform(int64_t p, const std::vector<int64_t>& lambda) {
  PrimeField f(p);
  if (p < 5) throw std::invalid_argument("this filiform family requires p >= 5");
  const std::size_t n = static_cast<std::size_t>(p);
  if (lambda.size() != n) throw std::invalid_argument("lambda must have dimension-many entries");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::vector<FpVector>> c(n, std::vector<FpVector>(n, FpVector(f, n)));
  for (std::size_t i = 2; i <= n - 1; ++i) {
    FpVector v(f, n);
    v.set(i, 1);  // e_{i+1} has index i
    c[0][i - 1] = v;
    c[i - 1][0] = -v;
  }
  std::vector<FpVector> images;
  for (std::size_t k = 0; k < n; ++k) {
    FpVector v(f, n);
    v.set(n - 1, lambda[k]);
    images.push_back(v);
  }
  return RestrictedLieAlgebra(LieAlgebra(f, names, c), images);
}

// Abelian restricted Lie algebra with a prescribed p-map on the basis; an
// empty image list means the zero p-map.
inline RestrictedLieAlgebra abelian(int64_t p, std::size_t n,
                                    const std::vector<FpVector>& images = {}) {
  PrimeField f(p);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  std::vector<std::vector<FpVector>> c(n, std::vector<FpVector>(n, FpVector(f, n)));
  std::vector<FpVector> im = images.empty() ? std::vector<FpVector>(n, FpVector(f, n)) : images;
  return RestrictedLieAlgebra(LieAlgebra(f, names, c), im);
}

// Two-dimensional unital commutative algebras F[e2]/(e2^2 - w), with e1 the
// unit and e2^2 = 0, e1 or e2 according to the variant.
inline AssocAlgebra assoc_dim2(int64_t p, int variant) {
  PrimeField f(p);
  std::vector<std::string> names{"e1", "e2"};
  std::vector<std::vector<FpVector>> prod(2, std::vector<FpVector>(2, FpVector(f, 2)));
  prod[0][0] = FpVector(f, {1, 0});
  prod[0][1] = FpVector(f, {0, 1});
  prod[1][0] = FpVector(f, {0, 1});
  switch (variant) {
    case 0: prod[1][1] = FpVector(f, {0, 0}); break;
    case 1: prod[1][1] = FpVector(f, {1, 0}); break;
    case 2: prod[1][1] = FpVector(f, {0, 1}); break;
    default: throw std::invalid_argument("assoc_dim2 variant must be 0, 1 or 2");
  }
  return AssocAlgebra(f, names, prod, FpVector(f, {1, 0}));
}

// The truncated group algebra F[x]/(x^p - 1): basis 1, x, ..., x^{p-1}.
inline AssocAlgebra truncated_group_algebra(int64_t p) {
  PrimeField f(p);
  const std::size_t n = static_cast<std::size_t>(p);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x^" + std::to_string(i));
  std::vector<std::vector<FpVector>> prod(n, std::vector<FpVector>(n, FpVector(f, n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FpVector v(f, n);
      v.set((i + j) % n, 1);
      prod[i][j] = v;
    }
  return AssocAlgebra(f, names, prod, FpVector::unit(f, n, 0));
}

// Isomorphism test between restricted structures theta and theta' on the
// Heisenberg algebra, by the parameterised search over maps
//   phi(x) = ax+by+cz, phi(y) = dx+ey+fz, phi(z) = uz with u = ae-bd != 0.
// Such a map is a restricted isomorphism from (h,theta) to (h,theta') iff
//   theta(x) u = a^p theta'(x) + b^p theta'(y) + c^p theta'(z),
//   theta(y) u = d^p theta'(x) + e^p theta'(y) + f^p theta'(z),
//   theta(z) u = u^p theta'(z).
// A found candidate is confirmed by the full morphism check.
inline std::optional<FpMatrix> heisenberg_isomorphism(int64_t p, const std::vector<int64_t>& th,
                                                      const std::vector<int64_t>& thp) {
  PrimeField f(p);
  RestrictedLieAlgebra r1 = heisenberg(p, th);
  RestrictedLieAlgebra r2 = heisenberg(p, thp);
  // In characteristic 2 the square of ax+by+cz picks up the bracket cross
  // term ab z; for p >= 3 the nested correction terms vanish in h.
  int64_t cross = (p == 2) ? 1 : 0;
  for (int64_t a = 0; a < p; ++a)
    for (int64_t b = 0; b < p; ++b)
      for (int64_t d = 0; d < p; ++d)
        for (int64_t e = 0; e < p; ++e) {
          int64_t u = f.sub(f.mul(a, e), f.mul(b, d));
          if (u == 0) continue;
          if (f.mul(th[2], u) != f.mul(f.pow(u, p), thp[2])) continue;
          // scalars satisfy a^p = a, so the p-th powers collapse
          for (int64_t c = 0; c < p; ++c) {
            int64_t lhs0 = f.mul(th[0], u);
            int64_t rhs0 = f.add(f.add(f.mul(a, thp[0]), f.mul(b, thp[1])),
                                 f.add(f.mul(c, thp[2]), f.mul(cross, f.mul(a, b))));
            if (lhs0 != rhs0) continue;
            for (int64_t ff = 0; ff < p; ++ff) {
              int64_t lhs1 = f.mul(th[1], u);
              int64_t rhs1 = f.add(f.add(f.mul(d, thp[0]), f.mul(e, thp[1])),
                                   f.add(f.mul(ff, thp[2]), f.mul(cross, f.mul(d, e))));
              if (lhs1 != rhs1) continue;
              FpMatrix t(f, 3, 3);
              t.set(0, 0, a); t.set(1, 0, b); t.set(2, 0, c);
              t.set(0, 1, d); t.set(1, 1, e); t.set(2, 1, ff);
              t.set(2, 2, u);
              if (is_restricted_morphism(r1, r2, t)) return t;
            }
          }
        }
  return std::nullopt;
}

struct HeisenbergClass {
  std::vector<int64_t> representative;  // lexicographically least theta
  std::size_t size = 0;
};

// Partition all p^3 linear forms theta into restricted-isomorphism classes.
// Classification up to restricted isomorphism with scalars in the algebraic
// closure.  The rational search covers everything except one scalar
// condition: theta(z) u = u^p theta'(z) with u != 0.  Over GF(p) Fermat
// forces theta(z) = theta'(z), but over an extension u^{p-1} can be any
// prescribed nonzero ratio, and the surjectivity of the Frobenius map lets
// the remaining two conditions absorb the adjustment through the c and f
// coefficients (theta'(z) != 0 there).  Hence two forms with nonzero z-values
// are always isomorphic over the closure, while theta(z) = 0 and theta = 0
// remain invariant conditions over any field.
inline std::vector<HeisenbergClass> classify_heisenberg(int64_t p) {
  PrimeField f(p);
  std::vector<HeisenbergClass> classes;
  for (int64_t t0 = 0; t0 < p; ++t0)
    for (int64_t t1 = 0; t1 < p; ++t1)
      for (int64_t t2 = 0; t2 < p; ++t2) {
        std::vector<int64_t> th{t0, t1, t2};
        bool placed = false;
        for (auto& cls : classes) {
          bool iso = heisenberg_isomorphism(p, th, cls.representative) ||
                     (th[2] != 0 && cls.representative[2] != 0) ||
                     (p == 2 && th[2] == 0 && cls.representative[2] == 0);
          if (iso) {
            ++cls.size;
            placed = true;
            break;
          }
        }
        if (!placed) classes.push_back(HeisenbergClass{th, 1});
      }
  return classes;
}

// Resolve a catalog name such as "heisenberg:p=3:theta=z*", "sl2:p=5",
// "witt:p=5" or "filiform:p=5:lambda=1,0,0,0,0".
inline RestrictedLieAlgebra by_name(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw std::invalid_argument("empty catalog name");
  std::map<std::string, std::string> kv;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto eq = parts[i].find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("malformed catalog parameter '" + parts[i] + "'");
    kv[parts[i].substr(0, eq)] = parts[i].substr(eq + 1);
  }
  auto need = [&](const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::invalid_argument("catalog name '" + name + "' is missing parameter '" + key + "'");
    return it->second;
  };
  if (parts[0] == "heisenberg") {
    int64_t p = std::stoll(need("p"));
    return heisenberg(p, theta_by_name(need("theta")));
  }
  if (parts[0] == "sl2") return sl2(std::stoll(need("p")));
  if (parts[0] == "witt") return witt(std::stoll(need("p")));
  if (parts[0] == "filiform") {
    int64_t p = std::stoll(need("p"));
    std::vector<int64_t> lambda;
    std::stringstream ls(need("lambda"));
    std::string tok;
    while (std::getline(ls, tok, ',')) lambda.push_back(std::stoll(tok));
    return filiform(p, lambda);
  }
  throw std::invalid_argument("unknown catalog family '" + parts[0] + "'");
}

}  // namespace catalog
}  // namespace rlie

#endif
