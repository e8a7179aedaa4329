#pragma once

// Test-only oracles and fixtures. Everything here is deliberately
// independent of the library's computation paths: brute-force enumeration,
// direct definitions, and hand-built matrices.

#include <random>
#include <sstream>
#include <vector>

#include "core/exact_linalg.hpp"
#include "core/matrix.hpp"
#include "core/sset.hpp"

namespace eqpath::testing {

inline std::string tuple_label(const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ",";
    os << t[i];
  }
  os << ")";
  return os.str();
}

// The standard simplex Delta^k truncated at cap: n-simplices are monotone
// (n+1)-tuples over {0..k}; faces delete, degeneracies duplicate.
inline TruncatedSimplicialSet standard_simplex(int k, int cap) {
  SSetBuilder b(cap);
  std::vector<std::vector<Key>> tuples(cap + 1);
  for (int v = 0; v <= k; ++v) tuples[0].push_back({v});
  for (int n = 1; n <= cap; ++n)
    for (const auto& t : tuples[n - 1])
      for (int v = t.back(); v <= k; ++v) {
        Key e = t;
        e.push_back(v);
        tuples[n].push_back(e);
      }
  for (int n = 0; n <= cap; ++n)
    for (auto& t : tuples[n]) b.add_simplex(n, t, tuple_label(t));
  b.finalize_levels();
  auto erase_at = [](const Key& t, int i) {
    Key r = t;
    r.erase(r.begin() + i);
    return r;
  };
  auto dup_at = [](const Key& t, int i) {
    Key r = t;
    r.insert(r.begin() + i, t[i]);
    return r;
  };
  return b.build(
      [&](int i, int, const Key& t) { return erase_at(t, i); },
      [&](int i, int, const Key& t) { return dup_at(t, i); });
}

// Direct definition of degeneracy: exhaustive search over s_i images.
inline bool is_degenerate_bruteforce(const TruncatedSimplicialSet& X, int n,
                                     int idx) {
  if (n == 0) return false;
  for (std::size_t y = 0; y < X.size(n - 1); ++y)
    for (int i = 0; i <= n - 1; ++i)
      if (X.degeneracy(i, n - 1, (int)y) == idx) return true;
  return false;
}

// All integer vectors v with entries in [-box, box] such that Mv = 0,
// excluding v = 0.
inline std::vector<std::vector<Int>> kernel_box_search(const ExactMatrix& M,
                                                       int box) {
  std::size_t n = M.cols();
  std::vector<std::vector<Int>> out;
  std::vector<Int> v(n, -box);
  if (n == 0) return out;
  for (;;) {
    bool zero = true, in_ker = true;
    for (std::size_t i = 0; i < n; ++i)
      if (v[i] != 0) zero = false;
    if (!zero) {
      for (std::size_t i = 0; i < M.rows() && in_ker; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j) s += M.at(i, j) * Rat(v[j]);
        if (s != 0) in_ker = false;
      }
      if (in_ker) out.push_back(v);
    }
    std::size_t k = 0;
    while (k < n && v[k] == box) v[k++] = -box;
    if (k == n) break;
    v[k] += 1;
  }
  return out;
}

inline ExactMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r,
                                     std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  ExactMatrix m(r, c, Ring::integers());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rat(d(rng)));
  return m;
}

// Degree-i differential of the flipped-edge two-cycle model, assembled from
// the printed 2x2 blocks. Source dimension 2(i+1), target 2i.
//   diagonal block at column block l (1-based):   [[(-1)^i, e],[e, (-1)^i]]
//   off-diagonal block at column block l+1:       [[1, e],[e, 1]]
// with e = (-1)^(l-1) resp. (-1)^l.
inline ExactMatrix flipped_edge_model_matrix(int i) {
  ExactMatrix m(2 * i, 2 * (i + 1), Ring::integers());
  Rat diag = (i % 2 == 0) ? 1 : -1;
  for (int l = 1; l <= i; ++l) {
    std::size_t r0 = 2 * (l - 1);
    Rat e1 = ((l - 1) % 2 == 0) ? 1 : -1;
    std::size_t c0 = 2 * (l - 1);
    m.set(r0, c0, diag);
    m.set(r0, c0 + 1, e1);
    m.set(r0 + 1, c0, e1);
    m.set(r0 + 1, c0 + 1, diag);
    Rat e2 = (l % 2 == 0) ? 1 : -1;
    std::size_t c1 = 2 * l;
    m.set(r0, c1, 1);
    m.set(r0, c1 + 1, e2);
    m.set(r0 + 1, c1, e2);
    m.set(r0 + 1, c1 + 1, 1);
  }
  return m;
}

}  // namespace eqpath::testing
