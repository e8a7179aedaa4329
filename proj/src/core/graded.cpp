#include "graded.hpp"

namespace eqpath {

bool d_squared_zero(const GradedComplex& C) {
  for (int n = 2; n <= C.maxdeg(); ++n)
    if (!C.diff[n - 1].mul(C.diff[n]).is_zero()) return false;
  return true;
}

HomologyGroup homology_at(const GradedComplex& C, int n) {
  require_internal(n >= 0 && n + 1 <= C.maxdeg(),
                   "homology_at: degree not certified by this complex");
  return homology_of_pair(C.diff[n], C.diff[n + 1], C.ring);
}

std::vector<HomologyGroup> homology(const GradedComplex& C) {
  std::vector<HomologyGroup> out;
  for (int n = 0; n + 1 <= C.maxdeg(); ++n) out.push_back(homology_at(C, n));
  return out;
}

std::size_t tensor_block_offset(const GradedComplex& A, const GradedComplex& B,
                                int n, int p) {
  std::size_t off = 0;
  for (int t = 0; t < p; ++t) off += A.dim(t) * B.dim(n - t);
  return off;
}

GradedComplex tensor_complex(const GradedComplex& A, const GradedComplex& B,
                             int maxdeg) {
  require_internal(A.ring == B.ring, "tensor_complex: ring mismatch");
  GradedComplex T;
  T.ring = A.ring;
  T.dims.resize(maxdeg + 1, 0);
  for (int n = 0; n <= maxdeg; ++n)
    for (int p = 0; p <= n; ++p) T.dims[n] += A.dim(p) * B.dim(n - p);
  T.diff.assign(maxdeg + 1, ExactMatrix());
  T.diff[0] = ExactMatrix(0, T.dims[0], T.ring);
  for (int n = 1; n <= maxdeg; ++n) {
    ExactMatrix d(T.dims[n - 1], T.dims[n], T.ring);
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      std::size_t col0 = tensor_block_offset(A, B, n, p);
      std::size_t na = A.dim(p), nb = B.dim(q);
      if (na == 0 || nb == 0) continue;
      // dA (x) 1 into block (p-1, q)
      if (p >= 1 && A.dim(p - 1) > 0) {
        std::size_t row0 = tensor_block_offset(A, B, n - 1, p - 1);
        const ExactMatrix& dA = A.diff[p];
        for (std::size_t i = 0; i < A.dim(p - 1); ++i)
          for (std::size_t j = 0; j < na; ++j) {
            if (dA.at(i, j) == 0) continue;
            for (std::size_t y = 0; y < nb; ++y)
              d.add_to(row0 + i * nb + y, col0 + j * nb + y, dA.at(i, j));
          }
      }
      // (-1)^p 1 (x) dB into block (p, q-1)
      if (q >= 1 && B.dim(q - 1) > 0) {
        std::size_t row0 = tensor_block_offset(A, B, n - 1, p);
        const ExactMatrix& dB = B.diff[q];
        Rat sign = (p % 2 == 0) ? 1 : -1;
        std::size_t nbm = B.dim(q - 1);
        for (std::size_t x = 0; x < na; ++x)
          for (std::size_t i = 0; i < nbm; ++i)
            for (std::size_t j = 0; j < nb; ++j) {
              if (dB.at(i, j) == 0) continue;
              d.add_to(row0 + x * nbm + i, col0 + x * nb + j,
                       T.ring.mul(sign, dB.at(i, j)));
            }
      }
    }
    T.diff[n] = std::move(d);
  }
  return T;
}

namespace {

// proj (m - r) x m and lift m x (m - r) with proj * lift = id and
// ker(proj) = column span of R.
std::pair<ExactMatrix, ExactMatrix> quotient_coords(const ExactMatrix& R) {
  const Ring ring = R.ring();
  std::size_t m = R.rows();
  if (ring.kind() == Ring::Kind::Integers) {
    auto f = smith_normal_form_full(R);
    std::size_t r = f.snf.rank();
    for (std::size_t i = 0; i < r; ++i)
      require_internal(f.snf.invariant_factors[i] == 1,
                       "quotient_complex: subcomplex is not saturated");
    ExactMatrix proj(m - r, m, ring), lift(m, m - r, ring);
    for (std::size_t i = 0; i < m - r; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        proj.set(i, j, f.Uinv.at(r + i, j));
        lift.set(j, i, f.snf.U.at(j, r + i));
      }
    return {proj, lift};
  }
  // field: complete a column basis of im(R) by unit vectors
  std::vector<std::size_t> chosen;
  ExactMatrix T(m, 0, ring);
  auto try_add = [&](const ExactMatrix& col) {
    ExactMatrix cand = T.hcat(col);
    if (rank(cand) == cand.cols()) {
      T = cand;
      return true;
    }
    return false;
  };
  for (std::size_t j = 0; j < R.cols(); ++j) try_add(R.column(j));
  std::size_t r = T.cols();
  std::vector<std::size_t> unit_cols;
  for (std::size_t j = 0; j < m && T.cols() < m; ++j) {
    ExactMatrix e(m, 1, ring);
    e.set(j, 0, 1);
    if (try_add(e)) unit_cols.push_back(j);
  }
  require_internal(T.cols() == m, "quotient_complex: completion failed");
  ExactMatrix Tinv =
      solve_in_basis(T, ExactMatrix::identity(m, ring), "quotient_coords");
  ExactMatrix proj(m - r, m, ring), lift(m, m - r, ring);
  for (std::size_t i = 0; i < m - r; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      proj.set(i, j, Tinv.at(r + i, j));
      lift.set(j, i, T.at(j, r + i));
    }
  return {proj, lift};
}

}  // namespace

QuotientComplex quotient_complex(const GradedComplex& big,
                                 const std::vector<ExactMatrix>& sub_in_big) {
  int maxdeg = big.maxdeg();
  require_internal((int)sub_in_big.size() == maxdeg + 1,
                   "quotient_complex: degree mismatch");
  QuotientComplex q;
  q.complex.ring = big.ring;
  q.complex.dims.resize(maxdeg + 1);
  q.complex.diff.resize(maxdeg + 1);
  q.proj.resize(maxdeg + 1);
  q.lift.resize(maxdeg + 1);
  for (int n = 0; n <= maxdeg; ++n) {
    require_internal(sub_in_big[n].rows() == big.dim(n),
                     "quotient_complex: sub basis row mismatch");
    auto [proj, lift] = quotient_coords(sub_in_big[n]);
    q.proj[n] = proj;
    q.lift[n] = lift;
    q.complex.dims[n] = proj.rows();
  }
  q.complex.diff[0] = ExactMatrix(0, q.complex.dims[0], big.ring);
  for (int n = 1; n <= maxdeg; ++n) {
    // descends because the subcomplex is closed under the differential
    ExactMatrix d = q.proj[n - 1].mul(big.diff[n]).mul(q.lift[n]);
    // well-definedness: d(sub_n) must project to zero
    require_internal(
        q.proj[n - 1].mul(big.diff[n]).mul(sub_in_big[n]).is_zero(),
        "quotient_complex: differential does not preserve the subcomplex");
    q.complex.diff[n] = d;
  }
  return q;
}

bool delta_squared_zero(const GradedCochain& C) {
  for (int n = 0; n + 1 <= C.maxdeg(); ++n)
    if (!C.delta[n + 1].mul(C.delta[n]).is_zero()) return false;
  return true;
}

HomologyGroup cohomology_at(const GradedCochain& C, int n) {
  require_internal(n >= 0 && n <= C.maxdeg(),
                   "cohomology_at: degree out of range");
  ExactMatrix d_in = n == 0 ? ExactMatrix(C.dim(0), 0, C.ring)
                            : C.delta[n - 1];
  return homology_of_pair(C.delta[n], d_in, C.ring);
}

}  // namespace eqpath
