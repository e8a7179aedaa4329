#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace eqpath {

// M = U * S * V with U, V unimodular and S diagonal, d1 | d2 | ... | dr > 0
// followed by zeros. Deterministic for a given input.
struct SmithDecomposition {
  ExactMatrix U, S, V;
  std::vector<Int> invariant_factors;  // length min(rows, cols)
  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : invariant_factors)
      if (d != 0) ++r;
    return r;
  }
};

SmithDecomposition smith_normal_form(const ExactMatrix& M);

// Decomposition together with the tracked inverses of U and V.
struct SmithFull {
  SmithDecomposition snf;
  ExactMatrix Uinv, Vinv;
};
SmithFull smith_normal_form_full(const ExactMatrix& M);

// Columns form a basis of {v : Mv = 0}. Over Z the basis generates the full
// (saturated) kernel lattice; over a field it is a vector-space basis.
// Columns are sign-normalized and canonically ordered.
ExactMatrix kernel_basis(const ExactMatrix& M);

std::size_t rank(const ExactMatrix& M);

// Solve B * X = Y exactly (over Z: integral solution). Returns nullopt when
// no solution exists in the ring.
std::optional<ExactMatrix> try_solve(const ExactMatrix& B,
                                     const ExactMatrix& Y);
// As above but a missing solution is an internal invariant violation.
ExactMatrix solve_in_basis(const ExactMatrix& B, const ExactMatrix& Y,
                           const char* context);

// Square with an inverse over the ring (over Z: determinant +-1).
bool is_unimodular(const ExactMatrix& M);

// free_rank and the invariant-factor torsion list (entries > 1, each
// dividing the next; empty over a field).
struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  bool operator==(const HomologyGroup& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const HomologyGroup& o) const { return !(*this == o); }
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

// ker(d_out) / im(d_in) for a composable pair d_in: C_{n+1} -> C_n,
// d_out: C_n -> C_{n-1}. Requires d_out * d_in = 0.
HomologyGroup homology_of_pair(const ExactMatrix& d_out,
                               const ExactMatrix& d_in, Ring ring);

// Canonical basis normalization used by every basis-producing operation:
// each column's first nonzero entry is positive (fields: scaled to 1) and
// columns are ordered so that at the first differing coordinate the larger
// entry comes first. Unit vectors therefore appear in natural index order.
void canonicalize_columns(ExactMatrix& M);

}  // namespace eqpath
