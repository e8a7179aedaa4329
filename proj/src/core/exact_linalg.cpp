#include "exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eqpath {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Dense integer workspace tracking M = U * A * V together with the inverses
// of U and V. Row operations on A are mirrored on U/Uinv, column operations
// on V/Vinv.
struct SnfWorkspace {
  std::size_t r, c;
  std::vector<std::vector<Int>> A, U, Uinv, V, Vinv;

  explicit SnfWorkspace(const ExactMatrix& M)
      : r(M.rows()), c(M.cols()) {
    A.assign(r, std::vector<Int>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A[i][j] = numerator(M.at(i, j));
    U = eye(r);
    Uinv = eye(r);
    V = eye(c);
    Vinv = eye(c);
  }

  static std::vector<std::vector<Int>> eye(std::size_t n) {
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(A[i], A[j]);
    for (std::size_t k = 0; k < r; ++k) std::swap(U[k][i], U[k][j]);
    std::swap(Uinv[i], Uinv[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < r; ++k) std::swap(A[k][i], A[k][j]);
    std::swap(V[i], V[j]);
    for (std::size_t k = 0; k < c; ++k) std::swap(Vinv[k][i], Vinv[k][j]);
  }
  void negate_row(std::size_t i) {
    for (auto& x : A[i]) x = -x;
    for (std::size_t k = 0; k < r; ++k) U[k][i] = -U[k][i];
    for (auto& x : Uinv[i]) x = -x;
  }
  // row_i += q * row_j on A
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < c; ++k) A[i][k] += q * A[j][k];
    for (std::size_t k = 0; k < r; ++k) U[k][j] -= q * U[k][i];
    for (std::size_t k = 0; k < r; ++k) Uinv[i][k] += q * Uinv[j][k];
  }
  // col_j += q * col_k on A
  void add_col(std::size_t j, std::size_t k, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < r; ++i) A[i][j] += q * A[i][k];
    for (std::size_t i = 0; i < c; ++i) V[k][i] -= q * V[j][i];
    for (std::size_t i = 0; i < c; ++i) Vinv[i][j] += q * Vinv[i][k];
  }
};

// Quotient rounded to nearest, which keeps remainders small.
Int near_quot(const Int& a, const Int& b) {
  Int q = a / b;
  Int rem = a - q * b;
  Int half = abs_int(b);
  if (2 * abs_int(rem) > half) q += (a < 0) == (b < 0) ? 1 : -1;
  return q;
}

void smith_reduce(SnfWorkspace& w) {
  std::size_t n = std::min(w.r, w.c);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing submatrix; ties by position
      std::size_t pi = 0, pj = 0;
      bool found = false;
      for (std::size_t i = t; i < w.r; ++i)
        for (std::size_t j = t; j < w.c; ++j)
          if (w.A[i][j] != 0 &&
              (!found || abs_int(w.A[i][j]) < abs_int(w.A[pi][pj]))) {
            pi = i;
            pj = j;
            found = true;
          }
      if (!found) return;  // trailing block is zero
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < w.r; ++i) {
        if (w.A[i][t] == 0) continue;
        w.add_row(i, t, -near_quot(w.A[i][t], w.A[t][t]));
        if (w.A[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < w.c; ++j) {
        if (w.A[t][j] == 0) continue;
        w.add_col(j, t, -near_quot(w.A[t][j], w.A[t][t]));
        if (w.A[t][j] != 0) clean = false;
      }
      if (!clean) continue;  // pivot shrank; pick again

      // pivot must divide the whole trailing submatrix for the
      // divisibility chain
      bool divides = true;
      for (std::size_t i = t + 1; i < w.r && divides; ++i)
        for (std::size_t j = t + 1; j < w.c && divides; ++j)
          if (w.A[i][j] % w.A[t][t] != 0) {
            w.add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (w.A[t][t] < 0) w.negate_row(t);
  }
}

ExactMatrix to_matrix(const std::vector<std::vector<Int>>& a, std::size_t r,
                      std::size_t c, Ring ring) {
  ExactMatrix m(r, c, ring);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Rat(a[i][j]));
  return m;
}

// --- field engine -------------------------------------------------------

struct Rref {
  ExactMatrix R;
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> pivot_rows;  // aligned with pivot_cols
};

Rref rref(const ExactMatrix& M) {
  require_internal(M.ring().is_field(), "rref requires a field");
  Rref out{M, {}, {}};
  ExactMatrix& R = out.R;
  const Ring& ring = R.ring();
  std::size_t row = 0;
  for (std::size_t col = 0; col < R.cols() && row < R.rows(); ++col) {
    std::size_t p = row;
    while (p < R.rows() && R.at(p, col) == 0) ++p;
    if (p == R.rows()) continue;
    // swap rows p, row
    if (p != row)
      for (std::size_t j = 0; j < R.cols(); ++j) {
        Rat tmp = R.at(row, j);
        R.set(row, j, R.at(p, j));
        R.set(p, j, tmp);
      }
    Rat piv_inv = ring.inv(R.at(row, col));
    for (std::size_t j = 0; j < R.cols(); ++j)
      R.set(row, j, ring.mul(R.at(row, j), piv_inv));
    for (std::size_t i = 0; i < R.rows(); ++i) {
      if (i == row || R.at(i, col) == 0) continue;
      Rat f = R.at(i, col);
      for (std::size_t j = 0; j < R.cols(); ++j)
        R.set(i, j, ring.sub(R.at(i, j), ring.mul(f, R.at(row, j))));
    }
    out.pivot_cols.push_back(col);
    out.pivot_rows.push_back(row);
    ++row;
  }
  return out;
}

}  // namespace

void canonicalize_columns(ExactMatrix& M) {
  const Ring ring = M.ring();
  std::size_t r = M.rows(), c = M.cols();
  std::vector<std::vector<Rat>> cols(c, std::vector<Rat>(r));
  for (std::size_t j = 0; j < c; ++j) {
    for (std::size_t i = 0; i < r; ++i) cols[j][i] = M.at(i, j);
    // sign / leading-one normalization
    for (std::size_t i = 0; i < r; ++i) {
      if (cols[j][i] == 0) continue;
      if (ring.is_field()) {
        Rat s = ring.inv(cols[j][i]);
        for (std::size_t k = 0; k < r; ++k)
          cols[j][k] = ring.mul(cols[j][k], s);
      } else if (cols[j][i] < 0) {
        for (std::size_t k = 0; k < r; ++k) cols[j][k] = -cols[j][k];
      }
      break;
    }
  }
  std::sort(cols.begin(), cols.end(),
            [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
              for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] > b[i];
              return false;
            });
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t i = 0; i < r; ++i) M.set(i, j, cols[j][i]);
}

SmithDecomposition smith_normal_form(const ExactMatrix& M) {
  require_internal(M.ring().kind() == Ring::Kind::Integers,
                   "smith_normal_form requires integer entries");
  SnfWorkspace w(M);
  smith_reduce(w);
  SmithDecomposition d;
  d.U = to_matrix(w.U, w.r, w.r, M.ring());
  d.S = to_matrix(w.A, w.r, w.c, M.ring());
  d.V = to_matrix(w.V, w.c, w.c, M.ring());
  std::size_t n = std::min(M.rows(), M.cols());
  d.invariant_factors.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.invariant_factors[i] = w.A[i][i];
  return d;
}

SmithFull smith_normal_form_full(const ExactMatrix& M) {
  require_internal(M.ring().kind() == Ring::Kind::Integers,
                   "smith_normal_form requires integer entries");
  SnfWorkspace w(M);
  smith_reduce(w);
  SmithFull f;
  f.snf.U = to_matrix(w.U, w.r, w.r, M.ring());
  f.snf.S = to_matrix(w.A, w.r, w.c, M.ring());
  f.snf.V = to_matrix(w.V, w.c, w.c, M.ring());
  std::size_t n = std::min(M.rows(), M.cols());
  f.snf.invariant_factors.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.snf.invariant_factors[i] = w.A[i][i];
  f.Uinv = to_matrix(w.Uinv, w.r, w.r, M.ring());
  f.Vinv = to_matrix(w.Vinv, w.c, w.c, M.ring());
  return f;
}

ExactMatrix kernel_basis(const ExactMatrix& M) {
  const Ring ring = M.ring();
  if (M.cols() == 0) return ExactMatrix(0, 0, ring);
  if (M.rows() == 0) {
    ExactMatrix k = ExactMatrix::identity(M.cols(), ring);
    canonicalize_columns(k);
    return k;
  }
  if (ring.kind() == Ring::Kind::Integers) {
    SnfWorkspace w(M);
    smith_reduce(w);
    std::size_t rk = 0;
    for (std::size_t i = 0; i < std::min(w.r, w.c); ++i)
      if (w.A[i][i] != 0) ++rk;
    ExactMatrix k(M.cols(), M.cols() - rk, ring);
    for (std::size_t j = rk; j < M.cols(); ++j)
      for (std::size_t i = 0; i < M.cols(); ++i)
        k.set(i, j - rk, Rat(w.Vinv[i][j]));
    canonicalize_columns(k);
    return k;
  }
  Rref f = rref(M);
  std::vector<bool> is_pivot(M.cols(), false);
  for (auto p : f.pivot_cols) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < M.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  ExactMatrix k(M.cols(), free_cols.size(), ring);
  for (std::size_t jj = 0; jj < free_cols.size(); ++jj) {
    std::size_t fc = free_cols[jj];
    k.set(fc, jj, 1);
    for (std::size_t t = 0; t < f.pivot_cols.size(); ++t)
      k.set(f.pivot_cols[t], jj, ring.neg(f.R.at(f.pivot_rows[t], fc)));
  }
  canonicalize_columns(k);
  return k;
}

std::size_t rank(const ExactMatrix& M) {
  if (M.rows() == 0 || M.cols() == 0) return 0;
  if (M.ring().kind() == Ring::Kind::Integers) {
    SnfWorkspace w(M);
    smith_reduce(w);
    std::size_t rk = 0;
    for (std::size_t i = 0; i < std::min(w.r, w.c); ++i)
      if (w.A[i][i] != 0) ++rk;
    return rk;
  }
  return rref(M).pivot_cols.size();
}

std::optional<ExactMatrix> try_solve(const ExactMatrix& B,
                                     const ExactMatrix& Y) {
  require_internal(B.rows() == Y.rows() && B.ring() == Y.ring(),
                   "solve shape/ring mismatch");
  const Ring ring = B.ring();
  if (B.cols() == 0) {
    if (!Y.is_zero()) return std::nullopt;
    return ExactMatrix(0, Y.cols(), ring);
  }
  if (ring.kind() == Ring::Kind::Integers) {
    SnfWorkspace w(B);
    smith_reduce(w);
    std::size_t n = std::min(w.r, w.c);
    // X = Vinv * Splus * Uinv * Y, checking exactness along the way
    ExactMatrix X(B.cols(), Y.cols(), ring);
    for (std::size_t col = 0; col < Y.cols(); ++col) {
      std::vector<Int> uy(w.r, 0);
      for (std::size_t i = 0; i < w.r; ++i)
        for (std::size_t j = 0; j < w.r; ++j)
          uy[i] += w.Uinv[i][j] * numerator(Y.at(j, col));
      std::vector<Int> z(B.cols(), 0);
      for (std::size_t i = 0; i < w.r; ++i) {
        Int d = i < n ? w.A[i][i] : Int(0);
        if (d == 0) {
          if (uy[i] != 0) return std::nullopt;
        } else {
          if (uy[i] % d != 0) return std::nullopt;
          z[i] = uy[i] / d;
        }
      }
      for (std::size_t i = 0; i < B.cols(); ++i) {
        Int v = 0;
        for (std::size_t j = 0; j < B.cols(); ++j) v += w.Vinv[i][j] * z[j];
        X.set(i, col, Rat(v));
      }
    }
    return X;
  }
  // field: eliminate on [B | Y]
  Rref f = rref(B.hcat(Y));
  ExactMatrix X(B.cols(), Y.cols(), ring);
  for (std::size_t t = 0; t < f.pivot_cols.size(); ++t) {
    if (f.pivot_cols[t] >= B.cols()) return std::nullopt;  // inconsistent
    for (std::size_t col = 0; col < Y.cols(); ++col)
      X.set(f.pivot_cols[t], col, f.R.at(f.pivot_rows[t], B.cols() + col));
  }
  // verify (free variables set to zero may not satisfy dependent systems)
  if (B.mul(X) != Y.cast(ring)) return std::nullopt;
  return X;
}

ExactMatrix solve_in_basis(const ExactMatrix& B, const ExactMatrix& Y,
                           const char* context) {
  auto x = try_solve(B, Y);
  if (!x)
    fail(ErrorCode::Internal,
         std::string("exact solve failed in ") + context +
             " (vector escapes the spanned submodule)");
  return *x;
}

bool is_unimodular(const ExactMatrix& M) {
  if (M.rows() != M.cols()) return false;
  if (M.rows() == 0) return true;
  if (M.ring().kind() == Ring::Kind::Integers) {
    auto d = smith_normal_form(M);
    for (const auto& f : d.invariant_factors)
      if (f != 1) return false;
    return true;
  }
  return rank(M) == M.rows();
}

std::string HomologyGroup::to_string() const {
  std::ostringstream os;
  if (is_zero()) return "0";
  bool first = true;
  if (free_rank > 0) {
    os << "free^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

HomologyGroup homology_of_pair(const ExactMatrix& d_out,
                               const ExactMatrix& d_in, Ring ring) {
  require_internal(d_out.cols() == d_in.rows(),
                   "homology_of_pair: differentials not composable");
  ExactMatrix dout = d_out.cast(ring), din = d_in.cast(ring);
  if (!dout.mul(din).is_zero())
    fail(ErrorCode::Internal,
         "homology_of_pair: d_out * d_in != 0 (CompositionNonzero)");
  ExactMatrix K = kernel_basis(dout);
  HomologyGroup h;
  if (K.cols() == 0) return h;
  if (din.cols() == 0) {
    h.free_rank = K.cols();
    return h;
  }
  ExactMatrix Y = solve_in_basis(K, din, "homology_of_pair (im in ker)");
  if (ring.kind() == Ring::Kind::Integers) {
    auto d = smith_normal_form(Y);
    std::size_t rk = d.rank();
    h.free_rank = K.cols() - rk;
    for (const auto& f : d.invariant_factors)
      if (f > 1) h.torsion.push_back(f);
  } else {
    h.free_rank = K.cols() - rank(Y);
  }
  return h;
}

}  // namespace eqpath
