#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rlie/algebra.hpp>
#include <rlie/catalog.hpp>

using namespace rlie;

namespace {

RestrictedLieAlgebra heis(int64_t p, std::vector<int64_t> theta) {
  return catalog::heisenberg(p, theta);
}

}  // namespace

TEST_CASE("vector sweeps enumerate GF(p)^n in little-endian digit order") {
  PrimeField f(2);
  auto sweep = sweep_vectors(f, 3, 1000, 1);
  REQUIRE(sweep.exhaustive);
  REQUIRE(sweep.vectors.size() == 8);
  CHECK(sweep.vectors[0].is_zero());
  CHECK(sweep.vectors[1] == FpVector(f, {1, 0, 0}));
  CHECK(sweep.vectors[2] == FpVector(f, {0, 1, 0}));
  CHECK(sweep.vectors[7] == FpVector(f, {1, 1, 1}));

  PrimeField g(5);
  auto big = sweep_vectors(g, 10, 1000, 1);
  CHECK_FALSE(big.exhaustive);
  CHECK(big.vectors.size() == 200);
}

TEST_CASE("structure constant validation rejects broken data") {
  PrimeField f(5);
  std::vector<std::string> names{"a", "b"};
  // not skew: [a,b] = a but [b,a] = 0
  std::vector<std::vector<FpVector>> c(2, std::vector<FpVector>(2, FpVector(f, 2)));
  c[0][1] = FpVector(f, {1, 0});
  CHECK_THROWS_AS(LieAlgebra(f, names, c), std::invalid_argument);

  // Jacobi failure in dimension 3: [a,b]=c, [a,c]=a, [b,c]=b has
  // [[a,b],c]+[[b,c],a]+[[c,a],b] = [c,c]+[b,a]+[-a,b] = -2c != 0.
  std::vector<std::string> n3{"a", "b", "c"};
  std::vector<std::vector<FpVector>> s(3, std::vector<FpVector>(3, FpVector(f, 3)));
  auto put = [&](std::size_t i, std::size_t j, std::vector<int64_t> v) {
    s[i][j] = FpVector(f, v);
    s[j][i] = -s[i][j];
  };
  put(0, 1, {0, 0, 1});
  put(0, 2, {1, 0, 0});
  put(1, 2, {0, 1, 0});
  CHECK_THROWS_AS(LieAlgebra(f, n3, s), std::invalid_argument);
}

TEST_CASE("Heisenberg bracket and center") {
  auto R = heis(5, {0, 0, 0});
  const auto& L = R.lie();
  CHECK(L.bracket(L.basis(0), L.basis(1)) == L.basis(2));
  CHECK(L.bracket(L.basis(1), L.basis(0)) == -L.basis(2));
  CHECK(L.bracket(L.basis(0), L.basis(2)).is_zero());
  auto z = L.center();
  REQUIRE(z.size() == 1);
  CHECK(z[0] == L.basis(2));
  CHECK_FALSE(L.is_abelian());
}

TEST_CASE("inner derivations of Heisenberg over GF(3) span a 2-dim space") {
  auto R = heis(3, {0, 0, 0});
  const auto& L = R.lie();
  PrimeField f(3);
  std::vector<std::vector<int64_t>> rows;
  for (std::size_t i = 0; i < 3; ++i) {
    auto m = L.ad(L.basis(i));
    std::vector<int64_t> flat;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) flat.push_back(m.at(a, b));
    rows.push_back(flat);
  }
  CHECK(FpMatrix::from_rows(f, rows).rank() == 2);  // ad_z = 0
}

TEST_CASE("closed form of the two s-terms at p = 3") {
  auto R = catalog::sl2(3);
  const auto& L = R.lie();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_vector(L.field(), 3, rng);
    auto y = random_vector(L.field(), 3, rng);
    auto s = s_terms(L, x, y);
    REQUIRE(s.size() == 2);
    auto xy = L.bracket(x, y);
    CHECK(s[0] == L.bracket(xy, y));
    CHECK(s[1] == L.bracket(xy, x) * 2);
  }
}

TEST_CASE("fold construction of the p-map satisfies Jacobson additivity") {
  std::vector<RestrictedLieAlgebra> algs{heis(3, {1, 0, 2}), catalog::sl2(5), catalog::witt(5),
                                         heis(2, {1, 1, 1})};
  for (const auto& R : algs) {
    const auto& L = R.lie();
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
      auto x = random_vector(L.field(), L.dim(), rng);
      auto y = random_vector(L.field(), L.dim(), rng);
      auto rhs = R.pmap(x) + R.pmap(y);
      for (const auto& s : s_terms(L, x, y)) rhs += s;
      CHECK(R.pmap(x + y) == rhs);
    }
  }
}

TEST_CASE("p-map of a Heisenberg element follows the scalar formula") {
  for (int64_t p : {3, 5, 7}) {
    std::vector<int64_t> th{1, 2, p - 1};
    auto R = heis(p, th);
    const auto& f = R.field();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      auto v = random_vector(f, 3, rng);
      // Fermat collapses the p-th powers of the coordinates
      int64_t coeff = f.reduce(v[0] * th[0] + v[1] * th[1] + v[2] * th[2]);
      CHECK(R.pmap(v) == R.lie().basis(2) * coeff);
    }
  }
  // characteristic 2 picks up the bracket cross term ab.z
  auto R2 = heis(2, {1, 0, 1});
  const auto& f2 = R2.field();
  for (int64_t a = 0; a < 2; ++a)
    for (int64_t b = 0; b < 2; ++b)
      for (int64_t c = 0; c < 2; ++c) {
        FpVector v(f2, {a, b, c});
        int64_t coeff = f2.reduce(a * 1 + b * 0 + c * 1 + a * b);
        CHECK(R2.pmap(v) == R2.lie().basis(2) * coeff);
      }
}

TEST_CASE("restrictedness verification accepts central images and rejects others") {
  const int64_t p = 3;
  PrimeField f(p);
  for (int64_t t0 = 0; t0 < p; ++t0)
    for (int64_t t1 = 0; t1 < p; ++t1)
      for (int64_t t2 = 0; t2 < p; ++t2) {
        auto R = heis(p, {t0, t1, t2});
        CHECK(verify_restricted(R.lie(), R.pmap_images()).ok);
      }
  // x^[p] = x pushes the image out of the center
  auto L = heis(p, {0, 0, 0}).lie();
  std::vector<FpVector> bad{L.basis(0), L.zero(), L.zero()};
  auto rep = verify_restricted(L, bad);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("derivation spaces satisfy the Leibniz rule and contain the inner ones") {
  std::vector<RestrictedLieAlgebra> algs{heis(5, {0, 0, 1}), catalog::sl2(5)};
  for (const auto& R : algs) {
    const auto& L = R.lie();
    auto ders = derivations(L);
    CHECK_FALSE(ders.empty());
    for (const auto& d : ders)
      for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = 0; j < L.dim(); ++j) {
          auto lhs = d * L.structure(i, j);
          auto rhs = L.bracket(d * L.basis(i), L.basis(j)) + L.bracket(L.basis(i), d * L.basis(j));
          CHECK(lhs == rhs);
        }
    // inner derivations lie in the span
    std::vector<std::vector<int64_t>> rows;
    for (const auto& d : ders) {
      std::vector<int64_t> flat;
      for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = 0; b < L.dim(); ++b) flat.push_back(d.at(a, b));
      rows.push_back(flat);
    }
    auto span = FpMatrix::from_rows(L.field(), rows);
    auto base_rank = span.rank();
    for (std::size_t i = 0; i < L.dim(); ++i) {
      auto m = L.ad(L.basis(i));
      std::vector<int64_t> flat;
      for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = 0; b < L.dim(); ++b) flat.push_back(m.at(a, b));
      auto with = vstack({span, FpMatrix::from_rows(L.field(), {flat})});
      CHECK(with.rank() == base_rank);
    }
  }
}

TEST_CASE("restricted derivations also commute with the p-map") {
  auto R = heis(5, {0, 0, 1});
  bool exhaustive = false;
  auto rders = restricted_derivations(R, 1000000, 1, &exhaustive);
  CHECK(exhaustive);
  auto all = derivations(R.lie());
  CHECK(rders.size() <= all.size());
  auto sweep = sweep_vectors(R.field(), 3, 1000000, 1);
  for (const auto& d : rders)
    for (const auto& v : sweep.vectors) {
      auto lhs = d * R.pmap(v);
      auto rhs = R.lie().ad(v).power(4) * (d * v);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("morphism check distinguishes maps that respect the p-structure") {
  auto A = heis(5, {1, 0, 0});
  auto B = heis(5, {0, 1, 0});
  PrimeField f(5);
  CHECK(is_restricted_morphism(A, A, FpMatrix::identity(f, 3)));
  // explicit witness family: e = 0, b != 0, d = -b^{p-1}
  int64_t b = 2, d = f.neg(f.pow(b, 4));
  FpMatrix t(f, 3, 3);  // columns are images: x -> b.y, y -> d.x, z -> u.z
  t.set(1, 0, b);
  t.set(0, 1, d);
  t.set(2, 2, f.neg(f.mul(b, d)));  // u = ae - bd = -bd
  CHECK(is_restricted_morphism(A, B, t));
  // the identity does not carry x* to y*
  CHECK_FALSE(is_restricted_morphism(A, B, FpMatrix::identity(f, 3)));
}

TEST_CASE("isomorphism search succeeds, fails and gives up where it should") {
  auto A = heis(3, {1, 0, 0});
  auto B = heis(3, {0, 1, 0});
  auto r = is_isomorphic_restricted(A, B);
  REQUIRE(r.decided);
  CHECK(r.isomorphic);
  REQUIRE(r.map.has_value());
  CHECK(is_restricted_morphism(A, B, *r.map));

  auto C = heis(3, {0, 0, 0});
  auto r2 = is_isomorphic_restricted(A, C);
  REQUIRE(r2.decided);
  CHECK_FALSE(r2.isomorphic);

  auto big1 = catalog::abelian(5, 4, {});
  auto big2 = catalog::abelian(5, 4, {});
  auto r3 = is_isomorphic_restricted(big1, big2);  // 5^16 maps
  CHECK_FALSE(r3.decided);
  CHECK_FALSE(r3.note.empty());
}

TEST_CASE("module verification accepts the adjoint action and rejects a broken one") {
  for (auto& R : {heis(3, {0, 0, 1}), catalog::sl2(5)}) {
    auto adj = RestrictedModule::adjoint(R);
    CHECK(adj.verify(R).ok);
    auto triv = RestrictedModule::trivial(R);
    CHECK(triv.verify(R).ok);
  }
  auto R = catalog::sl2(5);
  PrimeField f(5);
  std::vector<FpMatrix> bad(3, FpMatrix::identity(f, 2));
  auto M = RestrictedModule(f, 2, bad);
  CHECK_FALSE(M.verify(R).ok);
}
