#pragma once

#include <string>
#include <vector>

#include "digraph.hpp"
#include "marked.hpp"
#include "sset.hpp"

namespace eqpath {

// Multiplication-table group; element 0 is the identity. Elements carry
// printable names; when built from permutation generators the permutations
// are kept alongside.
struct FiniteGroup {
  std::vector<std::string> names;
  std::vector<std::vector<int>> mult;  // mult[g][h] = g * h
  std::vector<int> inv;

  std::size_t order() const { return names.size(); }
  int times(int g, int h) const { return mult[g][h]; }
  int inverse(int g) const { return inv[g]; }
  void check_axioms() const;  // table-checked associativity/identity/inverse
};

// Closure of permutation generators under composition; canonical order is
// identity first, then by generator word length, then lexicographic by
// word. Throws Budget when the order exceeds max_order.
struct PermutationGroup {
  FiniteGroup group;
  std::vector<std::vector<int>> perms;  // perms[g]: permutation of points
};
PermutationGroup group_closure(const std::vector<std::vector<int>>& generators,
                               std::size_t max_order = 4096);

// Group JSON: {"generators": [{"cycles": [[a,b,...], ...]}, ...]} with
// entries naming vertices of G (by name or index).
PermutationGroup load_group_action(const std::string& text, const Digraph& G);

struct DigraphAction {
  FiniteGroup group;
  std::vector<std::vector<int>> perm;  // element -> vertex permutation
};

// Empty report iff every element maps edges to edges.
ValidationReport validate_digraph_action(const Digraph& G,
                                         const DigraphAction& A);

// Simplicial group truncated at a cap: a group structure per level with
// levelwise structure maps that are homomorphisms. Constant groups have all
// faces and degeneracies equal to the identity.
struct SimplicialGroup {
  int cap = 0;
  std::vector<FiniteGroup> level;
  // face[n][i][g], deg[n][i][g] as in simplicial sets
  std::vector<std::vector<std::vector<int>>> face;
  std::vector<std::vector<std::vector<int>>> deg;

  int face_of(int i, int n, int g) const { return face[n][i][g]; }
  int deg_of(int i, int n, int g) const { return deg[n][i][g]; }
  // degenerate as a simplex of the underlying simplicial set
  bool simplex_degenerate(int n, int g) const {
    for (int i = 0; i < n; ++i)
      if (deg[n - 1][i][face[n][i][g]] == g) return true;
    return false;
  }
};

SimplicialGroup constant_simplicial_group(const FiniteGroup& G, int cap);

// tau: X_n -> G_{n-1} for n >= 1, subject to the four twisting axioms.
struct TwistingFunction {
  std::vector<std::vector<int>> tau;  // tau[n][simplex] for n >= 1
  int of(int n, int idx) const { return tau[n][idx]; }
  int sigma(const SimplicialGroup& G, int n, int idx) const {
    return G.level[n - 1].inverse(tau[n][idx]);
  }
};

// Axioms checked on every simplex within cap; violations as data.
ValidationReport validate_twisting(const TruncatedSimplicialSet& X,
                                   const SimplicialGroup& G,
                                   const TwistingFunction& tau);

// Classifying space of a constant group: level n is the set of n-tuples,
// tau is projection onto the first coordinate. Inner faces merge as
// x_{i+1} * x_i, the order forced by the twisting axiom on d_0.
struct ClassifyingSpace {
  TruncatedSimplicialSet sset;
  SimplicialGroup group;      // the constant simplicial group
  TwistingFunction tau;
  std::vector<std::vector<std::vector<int>>> tuples;  // level -> idx -> tuple
};
ClassifyingSpace classifying_space(const FiniteGroup& G, int cap);

// Marked simplicial set with a levelwise group action.
struct MarkedGSet {
  MarkedSimplicialSet marked;
  SimplicialGroup group;
  // act[n][g][idx]: action of g in G_n on n-simplices
  std::vector<std::vector<std::vector<int>>> act;
  bool g_s0_degenerate = false;  // g * s0(x) degenerate for all g, x

  int apply(int n, int g, int idx) const { return act[n][g][idx]; }
};

// Checks: simplicial action, marking invariance; records the
// g*s0-degeneracy hypothesis.
MarkedGSet make_marked_gset(MarkedSimplicialSet marked,
                            const SimplicialGroup& G,
                            std::vector<std::vector<std::vector<int>>> act);

// Constant-group action on a digraph nerve induced by a vertex action.
MarkedGSet nerve_gset(const Digraph& G, const DigraphAction& A,
                      const SimplicialGroup& constant, int cap,
                      std::size_t level_budget = 200000);

// X x_tau F with the box-product-style marking s0(X_0) x M u X_1 x s0(F_0).
// Requires the g*s0-degeneracy hypothesis and validates the twisting.
MarkedSimplicialSet marked_twisted_product(const TruncatedSimplicialSet& X,
                                           const SimplicialGroup& G,
                                           const TwistingFunction& tau,
                                           const MarkedGSet& FM);

// The canonical model BGamma box_tau Nrv(G) of the Borel construction.
struct BorelModel {
  ClassifyingSpace base;
  MarkedGSet fiber;
  MarkedSimplicialSet total;
};
BorelModel borel_marked(const Digraph& G, const DigraphAction& A, int cap,
                        std::size_t level_budget = 200000);

// EGamma x_Gamma Nrv(G) with orbit representatives normalized to top group
// entry = identity, plus the checked isomorphism with borel_marked.
struct BorelQuotient {
  MarkedSimplicialSet total;
  SSetMap to_model;  // levelwise bijection onto borel_marked(...).total
};
BorelQuotient borel_via_quotient(const Digraph& G, const DigraphAction& A,
                                 int cap, std::size_t level_budget = 200000);

// Matrices of e_p -> e_{gamma p} restricted to Omega_n, per degree
// 0..maxdeg, for the group element gamma.
std::vector<ExactMatrix> action_on_path_chains(const Digraph& G,
                                               const DigraphAction& A,
                                               const PathComplex& omega,
                                               int gamma);

}  // namespace eqpath
