#pragma once

#include <map>

#include "group.hpp"

namespace eqpath {

// Index sequence (i_1,...,i_n) with 0 <= i_k <= n-k (so i_n = 0), carrying
// the sign (-1)^{i_1+...+i_n}. There are n! of them.
struct SeqIndex {
  int n = 0;
  std::vector<int> seq;
  int sign = 1;
};

// All sequences in lexicographic order.
std::vector<SeqIndex> seq_indices(int n);

// Composition of elementary face/degeneracy operators, rightmost applied
// first. The derived operator shifts every subscript by one.
struct SimplicialOp {
  struct Elem {
    bool is_face;
    int index;
  };
  std::vector<Elem> ops;

  SimplicialOp derived() const;
  int degree() const;
  // Evaluate on a simplex; Domain error if an index is out of range or the
  // cap is exceeded.
  SimplexRef apply(const TruncatedSimplicialSet& X, SimplexRef s) const;
  // Evaluate on a simplicial-group element at the given level; returns
  // (level, element).
  std::pair<int, int> apply_group(const SimplicialGroup& G, int level,
                                  int g) const;
  std::string to_string() const;
};

// D_{i,k} for i in S_n and 0 <= k <= n, defined on simplices of dimension
// >= n - k; raises degree by k.
SimplicialOp d_operator(const SeqIndex& i, int k);

// Szczarba twisting cochain on a simplex x of X_n: a normalized chain in
// the group at level n-1, returned as element -> coefficient (degenerate
// group simplices dropped). n = 0 gives 0; n = 1 gives sigma(x) - 1.
std::map<int, Rat> t_sz(const TruncatedSimplicialSet& X,
                        const SimplicialGroup& G, const TwistingFunction& tau,
                        int n, int idx);

// A graded complex together with a chain action of each group element.
struct ActedComplex {
  GradedComplex complex;
  // action[gamma][degree]
  std::vector<std::vector<ExactMatrix>> action;
  std::vector<std::vector<std::string>> labels;  // optional
};

ActedComplex glmy_acted_complex(const Digraph& G, const DigraphAction& A,
                                Ring ring, int maxdeg);

// Twisted tensor product N(BGamma) (x)_t W for a constant group acting on a
// complex W, with the Borel-specialized differential
//   d(x (x) w) = dx (x) w + (-1)^n x (x) dw
//              + (-1)^n (x_1..x_{n-1}) (x) (x_n^{-1} w - w).
// Blocks at total degree d are ordered by ascending BGamma degree.
struct ModelComplex {
  Ring ring = Ring::integers();
  int maxdeg = -1;
  ClassifyingSpace base;
  NormalizedComplex base_chains;
  ActedComplex coeff;
  GradedComplex complex;

  std::size_t block_offset(int d, int nb) const;
  std::size_t block_dim(int d, int nb) const;
};

ModelComplex model_complex(const FiniteGroup& Gamma, const ActedComplex& W,
                           Ring ring, int maxdeg);

// Convenience: model of a directed Gamma-graph.
ModelComplex model_complex(const Digraph& G, const DigraphAction& A, Ring ring,
                           int maxdeg);

std::vector<HomologyGroup> model_homology(const ModelComplex& mc);

// Generic twisted differential at total degree d, assembled from the
// Szczarba cochain, the Alexander-Whitney diagonal of N(BGamma) and the
// shuffle-based module structure. Used as a cross-check of the specialized
// formula.
ExactMatrix generic_twisted_differential(const ModelComplex& mc, int d);

// Szczarba's twisted shuffle map restricted to path complexes: matrices
// from the model basis to the Omega basis of the Borel construction, per
// total degree 0..maxdeg.
struct PsiOmega {
  std::vector<ExactMatrix> matrices;
};
// glmy must be the path complex the model coefficients were built from.
PsiOmega psi_omega(const BorelModel& borel, const PathComplex& borel_omega,
                   const ModelComplex& mc, const PathComplex& glmy,
                   const Digraph& G, int maxdeg);

// Relative model: N(BGamma) (x)_t (Omega(G)/Omega(sub)) plus the data used
// for the quotient-Borel comparison. The subgraph must be Gamma-invariant.
struct RelativeModel {
  ModelComplex model;
  QuotientComplex relative;  // Omega(G)/Omega(sub)
};
RelativeModel relative_model(const Digraph& G, const Digraph& sub,
                             const DigraphAction& A, Ring ring, int maxdeg);

// Field dual of the model: basis x* (x) u with the transpose differential
//   delta(x* (x) u) = delta(x*) (x) u + (-1)^k x* (x) d^T u
//                   + sum_{h != 1} (-1)^{k+1} (x,h)* (x) (h^{-1} ^ u - u),
// where the wedge is the transpose of the chain action. This is exactly the
// transpose of the model differential under dual bases.
struct DualModelComplex {
  Ring field = Ring::rationals();
  int maxdeg = -1;
  std::vector<std::size_t> dims;
  GradedCochain cochain;
};
DualModelComplex dual_model(const ModelComplex& mc, Ring field);

}  // namespace eqpath
