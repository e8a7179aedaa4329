#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/graded.hpp"
#include "core/sset.hpp"
#include "oracle_helpers.hpp"

using namespace eqpath;
using namespace eqpath::testing;

namespace {

GradedComplex to_graded(const NormalizedComplex& N) {
  GradedComplex g;
  g.ring = N.ring;
  g.dims.resize(N.maxdeg + 1);
  for (int n = 0; n <= N.maxdeg; ++n) g.dims[n] = N.dim(n);
  g.diff = N.diff;
  return g;
}

}  // namespace

TEST_CASE("validate: standard simplices pass") {
  CHECK(standard_simplex(2, 3).validate().ok());
  CHECK(standard_simplex(3, 4).validate().ok());
  CHECK(standard_simplex(0, 2).validate().ok());
}

TEST_CASE("validate: corrupted face table is detected and named") {
  // Delta^2 at cap 2, with one face entry of the top simplex redirected
  auto good = standard_simplex(2, 2);
  std::vector<std::vector<Key>> keys(3);
  std::vector<std::vector<std::string>> labels(3);
  std::vector<std::vector<std::vector<int>>> face(3), deg(3);
  for (int n = 0; n <= 2; ++n)
    for (std::size_t i = 0; i < good.size(n); ++i) {
      keys[n].push_back(good.key(n, (int)i));
      labels[n].push_back(good.label(n, (int)i));
    }
  for (int n = 1; n <= 2; ++n) {
    face[n].assign(n + 1, std::vector<int>(good.size(n)));
    for (int i = 0; i <= n; ++i)
      for (std::size_t idx = 0; idx < good.size(n); ++idx)
        face[n][i][idx] = good.face(i, n, (int)idx);
  }
  for (int n = 0; n < 2; ++n) {
    deg[n].assign(n + 1, std::vector<int>(good.size(n)));
    for (int i = 0; i <= n; ++i)
      for (std::size_t idx = 0; idx < good.size(n); ++idx)
        deg[n][i][idx] = good.degeneracy(i, n, (int)idx);
  }
  int top = good.index_of(2, {0, 1, 2});
  REQUIRE(top >= 0);
  face[2][0][top] = (face[2][0][top] + 1) % (int)good.size(1);
  TruncatedSimplicialSet bad(2, keys, labels, face, deg);
  auto rep = bad.validate();
  CHECK(!rep.ok());
  bool names_top = false;
  for (const auto& v : rep.violations)
    if (v.simplex == top && v.level == 2) names_top = true;
  CHECK(names_top);
}

TEST_CASE("is_degenerate matches exhaustive search") {
  auto X = standard_simplex(2, 3);
  for (int n = 1; n <= 3; ++n)
    for (std::size_t i = 0; i < X.size(n); ++i)
      CHECK(X.is_degenerate(n, (int)i) ==
            is_degenerate_bruteforce(X, n, (int)i));
  // s_0(v) is degenerate, a genuine edge is not
  int v = X.index_of(0, {1});
  CHECK(X.is_degenerate(1, X.degeneracy(0, 0, v)));
  CHECK(!X.is_degenerate(1, X.index_of(1, {0, 1})));
}

TEST_CASE("is_degenerate in products matches exhaustive search") {
  auto X = standard_simplex(1, 2);
  auto Y = standard_simplex(2, 2);
  auto P = product(X, Y);
  CHECK(P.validate().ok());
  for (int n = 1; n <= 2; ++n)
    for (std::size_t i = 0; i < P.size(n); ++i)
      CHECK(P.is_degenerate(n, (int)i) ==
            is_degenerate_bruteforce(P, n, (int)i));
  // (s_0 x, y) with y a nondegenerate edge is not degenerate
  int x0 = X.index_of(0, {0});
  int sx = X.degeneracy(0, 0, x0);
  int y = Y.index_of(1, {1, 2});
  CHECK(!P.is_degenerate(1, pair_index(Y.size(1), sx, y)));
  // (s_0 x, s_0 w) is degenerate
  int w = Y.index_of(0, {2});
  int sw = Y.degeneracy(0, 0, w);
  CHECK(P.is_degenerate(1, pair_index(Y.size(1), sx, sw)));
}

TEST_CASE("normalized complex of Delta^1") {
  auto X = standard_simplex(1, 2);
  auto N = normalized_complex(X, Ring::integers(), 2);
  CHECK(N.dim(0) == 2);
  CHECK(N.dim(1) == 1);
  CHECK(N.dim(2) == 0);
  // d(01) = (1) - (0)
  CHECK(N.diff[1].at(0, 0) == -1);
  CHECK(N.diff[1].at(1, 0) == 1);
}

TEST_CASE("normalized complex: d^2 = 0 and simplex count on Delta^3") {
  auto X = standard_simplex(3, 4);
  auto N = normalized_complex(X, Ring::integers(), 4);
  CHECK(d_squared_zero(to_graded(N)));
  CHECK(N.dim(0) == 4);
  CHECK(N.dim(1) == 6);
  CHECK(N.dim(2) == 4);
  CHECK(N.dim(3) == 1);
  CHECK(N.dim(4) == 0);
  // contractible: reduced homology vanishes
  auto h = homology(to_graded(N));
  CHECK(h[0].free_rank == 1);
  for (std::size_t i = 1; i < h.size(); ++i) CHECK(h[i].is_zero());
}

TEST_CASE("product: unit, cardinality, validity") {
  auto pt = standard_simplex(0, 2);
  auto Y = standard_simplex(2, 2);
  auto P = product(pt, Y);
  for (int n = 0; n <= 2; ++n) CHECK(P.size(n) == Y.size(n));
  CHECK(P.validate().ok());

  auto X = standard_simplex(1, 2);
  auto XY = product(X, Y);
  CHECK(XY.size(1) == X.size(1) * Y.size(1));
  CHECK(XY.validate().ok());
}

TEST_CASE("shuffles: sizes and signs") {
  CHECK(shuffles(0, 0).size() == 1);
  CHECK(shuffles(0, 3).size() == 1);
  CHECK(shuffles(3, 0).size() == 1);
  CHECK(shuffles(0, 2)[0].sign == 1);
  auto sh = shuffles(1, 1);
  REQUIRE(sh.size() == 2);
  CHECK(sh[0].sign + sh[1].sign == 0);
  CHECK(shuffles(2, 2).size() == 6);
}

TEST_CASE("shuffle and AW are chain maps; AW o EZ = id") {
  auto X = standard_simplex(2, 4);
  auto Y = standard_simplex(1, 4);
  auto P = product(X, Y);
  Ring ring = Ring::integers();
  auto NX = normalized_complex(X, ring, 4);
  auto NY = normalized_complex(Y, ring, 4);
  auto NP = normalized_complex(P, ring, 4);
  GradedComplex gX = to_graded(NX), gY = to_graded(NY), gP = to_graded(NP);
  GradedComplex T = tensor_complex(gX, gY, 4);
  REQUIRE(d_squared_zero(T));

  // assemble the full EZ and AW matrices per total degree
  auto full_ez = [&](int n) {
    ExactMatrix m(NP.dim(n), T.dims[n], ring);
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      std::size_t c0 = tensor_block_offset(gX, gY, n, p);
      ExactMatrix blk = shuffle_matrix(X, Y, P, NX, NY, NP, p, q);
      for (std::size_t i = 0; i < blk.rows(); ++i)
        for (std::size_t j = 0; j < blk.cols(); ++j)
          if (blk.at(i, j) != 0) m.set(i, c0 + j, blk.at(i, j));
    }
    return m;
  };
  for (int n = 0; n <= 3; ++n) {
    ExactMatrix ez_n = full_ez(n);
    ExactMatrix aw_n = aw_matrix(X, Y, P, NX, NY, NP, n);
    // AW o EZ = identity on the tensor complex
    ExactMatrix comp = aw_n.mul(ez_n);
    CHECK(comp == ExactMatrix::identity(T.dims[n], ring));
    if (n >= 1) {
      ExactMatrix ez_nm1 = full_ez(n - 1);
      CHECK(gP.diff[n].mul(ez_n) == ez_nm1.mul(T.diff[n]));
      ExactMatrix aw_nm1 = aw_matrix(X, Y, P, NX, NY, NP, n - 1);
      CHECK(T.diff[n].mul(aw_n.transpose().transpose()) ==
            aw_nm1.mul(gP.diff[n]));
    }
  }
}

TEST_CASE("aw degree 0 is the identity pairing") {
  auto X = standard_simplex(1, 1);
  auto Y = standard_simplex(1, 1);
  auto P = product(X, Y);
  Ring ring = Ring::integers();
  auto NX = normalized_complex(X, ring, 1);
  auto NY = normalized_complex(Y, ring, 1);
  auto NP = normalized_complex(P, ring, 1);
  ExactMatrix m = aw_matrix(X, Y, P, NX, NY, NP, 0);
  CHECK(m == ExactMatrix::identity(4, ring));
}

TEST_CASE("simplicial map validation and induced chains") {
  auto X = standard_simplex(1, 2);
  auto Y = standard_simplex(2, 2);
  // inclusion Delta^1 -> Delta^2 on vertices {0,1}
  SSetMap f;
  f.level.resize(3);
  for (int n = 0; n <= 2; ++n) {
    f.level[n].resize(X.size(n));
    for (std::size_t i = 0; i < X.size(n); ++i) {
      int t = Y.index_of(n, X.key(n, (int)i));
      REQUIRE(t >= 0);
      f.level[n][i] = t;
    }
  }
  CHECK(validate_simplicial_map(X, Y, f).ok());
  auto NX = normalized_complex(X, Ring::integers(), 2);
  auto NY = normalized_complex(Y, Ring::integers(), 2);
  // chain map property
  for (int n = 1; n <= 2; ++n) {
    ExactMatrix fn = induced_chain_matrix(X, Y, f, NX, NY, n);
    ExactMatrix fnm1 = induced_chain_matrix(X, Y, f, NX, NY, n - 1);
    CHECK(NY.diff[n].mul(fn) == fnm1.mul(NX.diff[n]));
  }
}
