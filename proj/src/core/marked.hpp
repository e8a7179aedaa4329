#pragma once

#include <memory>

#include "graded.hpp"
#include "sset.hpp"

namespace eqpath {

// A simplicial set with a chosen set of marked 1-simplices containing every
// degenerate edge (constructor-enforced).
class MarkedSimplicialSet {
public:
  MarkedSimplicialSet(TruncatedSimplicialSet sset, std::vector<char> marked);
  MarkedSimplicialSet(std::shared_ptr<const TruncatedSimplicialSet> sset,
                      std::vector<char> marked);

  const TruncatedSimplicialSet& sset() const { return *s_; }
  std::shared_ptr<const TruncatedSimplicialSet> sset_ptr() const { return s_; }
  bool marked(int idx1) const { return marked_[idx1] != 0; }
  const std::vector<char>& marking() const { return marked_; }
  std::size_t marked_count() const;

  // Simplicial identities plus marking validity, as data.
  ValidationReport validate() const;

private:
  void enforce_marking_invariant() const;
  std::shared_ptr<const TruncatedSimplicialSet> s_;
  std::vector<char> marked_;
};

// Fully marked sharp marking X#.
MarkedSimplicialSet sharp(TruncatedSimplicialSet sset);
MarkedSimplicialSet sharp(std::shared_ptr<const TruncatedSimplicialSet> sset);

// The (k-1,k)-edge of an n-simplex: the written face composition is applied
// high faces first (descending), then the 0-side faces. The order is
// load-bearing in twisted products.
SimplexRef edge_face(const TruncatedSimplicialSet& X, SimplexRef s, int k);

// Nondegenerate n-simplices whose edge faces are all marked, in level order.
std::vector<int> allowed_basis(const MarkedSimplicialSet& XM, int n);

// Path chain complex Omega_*: the maximal subcomplex of the span of allowed
// simplices. Bases are pinned: over Z each Omega_n is the saturated kernel
// lattice in canonical column order.
struct PathComplex {
  Ring ring = Ring::integers();
  int valid_through = -1;
  std::vector<std::vector<int>> allowed;  // per degree: level indices (A_n)
  std::vector<std::vector<int>> allowed_pos;  // level index -> A_n position
  std::vector<ExactMatrix> omega;  // omega[n]: |A_n| x rank_n, basis columns
  std::vector<ExactMatrix> diff;   // diff[n]: Omega_n -> Omega_{n-1}
  std::vector<std::vector<std::string>> labels;  // labels of A_n entries

  std::size_t rank(int n) const {
    return (n < 0 || n > valid_through) ? 0 : omega[n].cols();
  }
  GradedComplex graded() const;
};

PathComplex path_complex(const MarkedSimplicialSet& XM, Ring ring, int maxdeg);

// Homology in degrees 0..maxdeg (computes the path complex one degree
// higher; the sset cap must cover maxdeg + 1).
std::vector<HomologyGroup> path_homology(const MarkedSimplicialSet& XM,
                                         Ring ring, int maxdeg);

// Marking: an edge is marked iff one component is degenerate and the other
// is marked.
MarkedSimplicialSet box_product(const MarkedSimplicialSet& XM,
                                const MarkedSimplicialSet& YN);

// Omega_n basis expressed in N_n coordinates.
ExactMatrix omega_in_normalized(const PathComplex& pc,
                                const NormalizedComplex& N, int n);

// Express chains (N_n coordinates) in the Omega_n basis; failure means the
// chain escapes the path subcomplex.
std::optional<ExactMatrix> chains_in_omega(const PathComplex& pc,
                                           const NormalizedComplex& N, int n,
                                           const ExactMatrix& chains);

// Chain map Omega(X) -> Omega(Y) induced by a marking-preserving simplicial
// map, per degree 0..maxdeg. Verifies marking preservation and that images
// stay inside Omega(Y).
std::vector<ExactMatrix> induced_omega_maps(const MarkedSimplicialSet& XM,
                                            const MarkedSimplicialSet& YN,
                                            const SSetMap& f,
                                            const PathComplex& pcX,
                                            const PathComplex& pcY,
                                            int maxdeg);

// Kuenneth pair on path complexes of a box product, at total degree n.
// Source/target blocks (p, n-p) are ordered by ascending p, x-major within
// each block. P must be the box product of XM and YN.
ExactMatrix omega_shuffle_matrix(const MarkedSimplicialSet& XM,
                                 const MarkedSimplicialSet& YN,
                                 const MarkedSimplicialSet& PM,
                                 const PathComplex& pcX, const PathComplex& pcY,
                                 const PathComplex& pcP,
                                 const NormalizedComplex& NX,
                                 const NormalizedComplex& NY,
                                 const NormalizedComplex& NP, int n);
ExactMatrix omega_aw_matrix(const MarkedSimplicialSet& XM,
                            const MarkedSimplicialSet& YN,
                            const MarkedSimplicialSet& PM,
                            const PathComplex& pcX, const PathComplex& pcY,
                            const PathComplex& pcP,
                            const NormalizedComplex& NX,
                            const NormalizedComplex& NY,
                            const NormalizedComplex& NP, int n);

// Path cochain algebra over a field: Omega^n = N^n / J^n with
// J^n = K_n + delta(K_{n-1}), K_n the annihilator of the allowed span.
struct CochainQuotient {
  Ring field = Ring::rationals();
  int maxdeg = -1;
  std::vector<std::size_t> dims;
  // canonical coset representatives in N^n coordinates (dim N_n x dims[n])
  std::vector<ExactMatrix> reps;
  std::vector<ExactMatrix> delta;  // delta[n]: Omega^n -> Omega^{n+1}
  // cup[p][q]: (dims[p]*dims[q]) columns -> dims[p+q], f-major ordering
  std::vector<std::vector<ExactMatrix>> cup;

  GradedCochain cochain() const;
};

CochainQuotient cochain_quotient(const MarkedSimplicialSet& XM, Ring field,
                                 int maxdeg);

// Kronecker product A (x) B (used to assemble tensor bases).
ExactMatrix kronecker(const ExactMatrix& A, const ExactMatrix& B);

}  // namespace eqpath
