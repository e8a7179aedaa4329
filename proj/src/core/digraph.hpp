#pragma once

#include <string>
#include <vector>

#include "graded.hpp"
#include "marked.hpp"

namespace eqpath {

// Finite directed graph with the ghost-loop convention: every vertex
// carries its loop (v, v), counted as a degenerate edge.
struct Digraph {
  std::vector<std::string> vertices;    // document order
  std::vector<std::vector<char>> adj;   // adjacency incl. loops

  std::size_t vertex_count() const { return vertices.size(); }
  bool has_edge(int u, int v) const { return adj[u][v] != 0; }
  std::size_t edge_count() const;  // incl. loops
  int vertex_index(const std::string& name) const;
};

Digraph digraph_from_edges(std::vector<std::string> vertices,
                           const std::vector<std::pair<int, int>>& edges);

// JSON document {"vertices": [...], "edges": [[u, v], ...]} or line-based
// "u -> v" text (vertices implied, in order of first appearance).
Digraph load_digraph(const std::string& text);

// Reflexive-transitive closure of the edge relation.
std::vector<std::vector<char>> reachability(const Digraph& G);

// Number of nerve n-simplices, without materializing the level.
std::vector<std::size_t> nerve_level_sizes(const Digraph& G, int cap);

// Nerve of the reachability preorder, marked by the edge set. Throws a
// Budget error when a level would exceed level_budget simplices.
MarkedSimplicialSet nerve_marked(const Digraph& G, int cap,
                                 std::size_t level_budget = 200000);

// Combinatorial GLMY path complex built directly on regular paths with the
// term-dropping differential; no simplicial set is materialized. The
// `allowed` field indexes the degree-n path list (lex order by vertex
// tuples), aligning generator-for-generator with nerve_marked's A_n.
PathComplex glmy_complex(const Digraph& G, Ring ring, int maxdeg);

// Paths of length n in lex order (vertex index tuples).
std::vector<std::vector<int>> paths_of_length(const Digraph& G, int n);

// Omega^U: elements of Omega supported on paths meeting U, with the
// projected differential.
GradedComplex omega_U_complex(const Digraph& G, const std::vector<int>& U,
                              Ring ring, int maxdeg);

// Subgraph check by vertex names; error (Subgraph) when violated.
void require_subgraph(const Digraph& G, const Digraph& sub);

// Quotient complex Omega(G)/Omega(sub) with projection data.
QuotientComplex relative_complex(const Digraph& G, const Digraph& sub,
                                 Ring ring, int maxdeg);

// True when no edge leaves U = V(G) \ V(sub) into V(sub).
bool no_edges_from_complement(const Digraph& G, const Digraph& sub);

// Complement vertex set U = V(G) \ V(sub) as indices into G.
std::vector<int> complement_vertices(const Digraph& G, const Digraph& sub);

}  // namespace eqpath
