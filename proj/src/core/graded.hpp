#pragma once

#include <string>
#include <vector>

#include "exact_linalg.hpp"

namespace eqpath {

// A nonnegatively graded chain complex held as dimensions plus differential
// matrices diff[n]: C_n -> C_{n-1} (diff[0] has zero rows). Degrees above
// maxdeg are unknown, not zero; homology_at treats the top boundary as
// uncertified.
struct GradedComplex {
  Ring ring = Ring::integers();
  std::vector<std::size_t> dims;
  std::vector<ExactMatrix> diff;
  std::vector<std::vector<std::string>> labels;  // optional, per degree

  int maxdeg() const { return static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int n) const {
    return (n < 0 || n > maxdeg()) ? 0 : dims[n];
  }
  const ExactMatrix& boundary(int n) const { return diff[n]; }
};

// d o d = 0 in all represented degrees.
bool d_squared_zero(const GradedComplex& C);

// Homology at degree n; requires n + 1 <= maxdeg so the incoming
// differential is known.
HomologyGroup homology_at(const GradedComplex& C, int n);

// All homology groups certified by C, i.e. degrees 0..maxdeg-1.
std::vector<HomologyGroup> homology(const GradedComplex& C);

// Tensor product complex through degree maxdeg; degree-n component is
// (+)_{p+q=n} A_p (x) B_q with blocks ordered by ascending p and each block
// ordered A-major.
GradedComplex tensor_complex(const GradedComplex& A, const GradedComplex& B,
                             int maxdeg);

// Offset of block p inside the degree-n component of the tensor complex.
std::size_t tensor_block_offset(const GradedComplex& A, const GradedComplex& B,
                                int n, int p);

// Quotient of a complex by a subcomplex given as basis columns per degree.
// Over Z the subcomplex must be saturated (true for path subcomplexes), so
// the quotient is free; proj/lift give the coordinate change.
struct QuotientComplex {
  GradedComplex complex;
  std::vector<ExactMatrix> proj;  // big coords -> quotient coords
  std::vector<ExactMatrix> lift;  // a section of proj
};

QuotientComplex quotient_complex(const GradedComplex& big,
                                 const std::vector<ExactMatrix>& sub_in_big);

// Cochain-style complex: delta[n]: C^n -> C^{n+1}. Used for duals.
struct GradedCochain {
  Ring ring = Ring::rationals();
  std::vector<std::size_t> dims;
  std::vector<ExactMatrix> delta;  // delta[n]; delta[maxdeg] has zero rows
  int maxdeg() const { return static_cast<int>(dims.size()) - 1; }
  std::size_t dim(int n) const {
    return (n < 0 || n > maxdeg()) ? 0 : dims[n];
  }
};

bool delta_squared_zero(const GradedCochain& C);
// Cohomology at degree n, certified for n <= maxdeg - 1... degree 0 uses a
// zero incoming map.
HomologyGroup cohomology_at(const GradedCochain& C, int n);

}  // namespace eqpath
