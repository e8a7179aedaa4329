#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exact_linalg.hpp"
#include "matrix.hpp"

namespace eqpath {

// Canonical sortable key of a simplex; every construction encodes its
// simplices as integer tuples (vertex tuples, group-element tuples, index
// pairs), which pins basis orders run to run.
using Key = std::vector<int>;

struct SimplexRef {
  int dim = 0;
  int index = 0;
  bool operator==(const SimplexRef& o) const {
    return dim == o.dim && index == o.index;
  }
};

struct Violation {
  std::string law;
  int level = 0;
  int i = 0, j = 0;
  int simplex = 0;
  std::string to_string() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Levelwise-finite simplicial set truncated at a dimension cap, with
// explicit face and degeneracy tables. Immutable after construction.
// Degeneracies at the cap level are not stored (their targets would exceed
// the cap); faces exist on every level >= 1.
class TruncatedSimplicialSet {
public:
  TruncatedSimplicialSet(int cap,
                         std::vector<std::vector<Key>> keys,
                         std::vector<std::vector<std::string>> labels,
                         std::vector<std::vector<std::vector<int>>> face,
                         std::vector<std::vector<std::vector<int>>> deg);

  int cap() const { return cap_; }
  std::size_t size(int n) const {
    return n < 0 || n > cap_ ? 0 : keys_[n].size();
  }
  // i-th face of the idx-th n-simplex, 0 <= i <= n, n >= 1.
  int face(int i, int n, int idx) const { return face_[n][i][idx]; }
  // i-th degeneracy, 0 <= i <= n, n + 1 <= cap.
  int degeneracy(int i, int n, int idx) const { return deg_[n][i][idx]; }
  bool is_degenerate(int n, int idx) const {
    return n > 0 && degenerate_[n][idx];
  }
  const Key& key(int n, int idx) const { return keys_[n][idx]; }
  const std::string& label(int n, int idx) const { return labels_[n][idx]; }
  // -1 when absent.
  int index_of(int n, const Key& k) const;

  // Apply a sequence of degeneracies s_{v_k} ... s_{v_1} (v ascending,
  // rightmost applied first), e.g. a shuffle block.
  int apply_degeneracies(int n, int idx, const std::vector<int>& v) const;
  // Apply iterated 0-faces.
  int front_face_iterate(int n, int idx, int times) const;  // top faces
  int back_face_iterate(int n, int idx, int times) const;   // 0-faces

  ValidationReport validate() const;

private:
  void compute_degeneracy_flags();

  int cap_;
  std::vector<std::vector<Key>> keys_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::vector<std::vector<int>>> face_;
  std::vector<std::vector<std::vector<int>>> deg_;
  std::vector<std::vector<char>> degenerate_;
};

// Convenience builder: declare levels first, then fill structure maps by
// key lookup. Keys are sorted and deduplicated on finalize_levels().
class SSetBuilder {
public:
  explicit SSetBuilder(int cap);
  void add_simplex(int n, Key key, std::string label);
  void finalize_levels();
  int index_of(int n, const Key& k) const;
  std::size_t size(int n) const { return keys_[n].size(); }
  const Key& key(int n, int idx) const { return keys_[n][idx]; }
  // face_fn(i, n, key) / deg_fn(i, n, key) return the target key.
  TruncatedSimplicialSet build(
      const std::function<Key(int, int, const Key&)>& face_fn,
      const std::function<Key(int, int, const Key&)>& deg_fn);

private:
  int cap_;
  bool finalized_ = false;
  std::vector<std::vector<Key>> keys_;
  std::vector<std::vector<std::string>> labels_;
};

// Nondegenerate-basis chain complex of X with the induced differential
// (faces summed with alternating signs, degenerate faces dropped).
struct NormalizedComplex {
  Ring ring;
  int maxdeg = -1;
  // basis[n]: level indices of the nondegenerate n-simplices, level order
  std::vector<std::vector<int>> basis;
  // pos[n][level index] = basis position or -1
  std::vector<std::vector<int>> pos;
  // diff[n]: N_n -> N_{n-1}; diff[0] has zero rows
  std::vector<ExactMatrix> diff;

  std::size_t dim(int n) const {
    return n < 0 || n > maxdeg ? 0 : basis[n].size();
  }
};

NormalizedComplex normalized_complex(const TruncatedSimplicialSet& X,
                                     Ring ring, int maxdeg);

// Chain of a single simplex class in N_n coordinates (zero if degenerate).
ExactMatrix simplex_chain(const NormalizedComplex& N, int n, int idx);

// Levelwise product with componentwise structure maps; level n is ordered
// left-major: pair (ix, iy) sits at index ix * |Y_n| + iy. The optional
// twist redirects the 0-face of the fiber component: given the base simplex
// x at level n and the already-computed 0-face f0 of the fiber component,
// it returns the twisted fiber 0-face.
TruncatedSimplicialSet product(
    const TruncatedSimplicialSet& X, const TruncatedSimplicialSet& Y,
    const std::function<int(int n, int xidx, int f0)>* twist = nullptr);

inline int pair_index(std::size_t right_size, int ix, int iy) {
  return static_cast<int>(ix * right_size + iy);
}
inline std::pair<int, int> pair_split(std::size_t right_size, int idx) {
  return {static_cast<int>(idx / right_size),
          static_cast<int>(idx % right_size)};
}

// A (p,q)-shuffle: complementary ascending subsets of {0..p+q-1};
// nu (size q) is applied to the left factor, mu (size p) to the right.
struct ShuffleIndex {
  int p = 0, q = 0;
  std::vector<int> mu, nu;
  int sign = 1;
};

std::vector<ShuffleIndex> shuffles(int p, int q);

// Eilenberg-Zilber shuffle map at bidegree (p,q):
// N_p(X) (x) N_q(Y) -> N_{p+q}(P), tensor basis ordered x-major.
// P must be the (possibly twisted) product of X and Y.
ExactMatrix shuffle_matrix(const TruncatedSimplicialSet& X,
                           const TruncatedSimplicialSet& Y,
                           const TruncatedSimplicialSet& P,
                           const NormalizedComplex& NX,
                           const NormalizedComplex& NY,
                           const NormalizedComplex& NP, int p, int q);

// Alexander-Whitney map at degree n: N_n(P) -> (+)_{p+q=n} N_p (x) N_q,
// blocks stacked by ascending p. Uses P's own face maps, so a twisted
// product contributes its twisted 0-faces.
ExactMatrix aw_matrix(const TruncatedSimplicialSet& X,
                      const TruncatedSimplicialSet& Y,
                      const TruncatedSimplicialSet& P,
                      const NormalizedComplex& NX, const NormalizedComplex& NY,
                      const NormalizedComplex& NP, int n);

// Levelwise simplicial map, stored as index maps per level.
struct SSetMap {
  std::vector<std::vector<int>> level;  // level[n][idx in X] = idx in Y
};

// Empty report iff f commutes with all faces and degeneracies within cap.
ValidationReport validate_simplicial_map(const TruncatedSimplicialSet& X,
                                         const TruncatedSimplicialSet& Y,
                                         const SSetMap& f);

// Induced chain map N(X) -> N(Y) at degree n (degenerate images dropped).
ExactMatrix induced_chain_matrix(const TruncatedSimplicialSet& X,
                                 const TruncatedSimplicialSet& Y,
                                 const SSetMap& f, const NormalizedComplex& NX,
                                 const NormalizedComplex& NY, int n);

}  // namespace eqpath
