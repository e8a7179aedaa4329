#include "marked.hpp"

#include <algorithm>

namespace eqpath {

MarkedSimplicialSet::MarkedSimplicialSet(TruncatedSimplicialSet sset,
                                         std::vector<char> marked)
    : s_(std::make_shared<const TruncatedSimplicialSet>(std::move(sset))),
      marked_(std::move(marked)) {
  enforce_marking_invariant();
}

MarkedSimplicialSet::MarkedSimplicialSet(
    std::shared_ptr<const TruncatedSimplicialSet> sset,
    std::vector<char> marked)
    : s_(std::move(sset)), marked_(std::move(marked)) {
  enforce_marking_invariant();
}

void MarkedSimplicialSet::enforce_marking_invariant() const {
  require_internal(s_->cap() >= 1, "marked set needs 1-simplices");
  require_internal(marked_.size() == s_->size(1), "marking size mismatch");
  for (std::size_t i = 0; i < marked_.size(); ++i)
    if (s_->is_degenerate(1, (int)i) && !marked_[i])
      fail(ErrorCode::Domain,
           "marking must contain every degenerate 1-simplex (missing " +
               s_->label(1, (int)i) + ")");
}

std::size_t MarkedSimplicialSet::marked_count() const {
  std::size_t c = 0;
  for (char m : marked_)
    if (m) ++c;
  return c;
}

ValidationReport MarkedSimplicialSet::validate() const {
  ValidationReport rep = s_->validate();
  for (std::size_t i = 0; i < marked_.size(); ++i)
    if (s_->is_degenerate(1, (int)i) && !marked_[i])
      rep.violations.push_back({"degenerate edge unmarked", 1, 0, 0, (int)i});
  return rep;
}

MarkedSimplicialSet sharp(TruncatedSimplicialSet sset) {
  std::vector<char> all(sset.size(1), 1);
  return MarkedSimplicialSet(std::move(sset), std::move(all));
}

MarkedSimplicialSet sharp(std::shared_ptr<const TruncatedSimplicialSet> sset) {
  std::vector<char> all(sset->size(1), 1);
  return MarkedSimplicialSet(std::move(sset), std::move(all));
}

SimplexRef edge_face(const TruncatedSimplicialSet& X, SimplexRef s, int k) {
  int n = s.dim;
  require_internal(n >= 1 && k >= 1 && k <= n, "edge_face: bad (n, k)");
  int lvl = n, cur = s.index;
  for (int i = n; i >= k + 1; --i) {
    cur = X.face(i, lvl, cur);
    --lvl;
  }
  for (int i = k - 2; i >= 0; --i) {
    cur = X.face(i, lvl, cur);
    --lvl;
  }
  require_internal(lvl == 1, "edge_face: did not land on an edge");
  return {1, cur};
}

std::vector<int> allowed_basis(const MarkedSimplicialSet& XM, int n) {
  const auto& X = XM.sset();
  require_internal(n >= 0 && n <= X.cap(), "allowed_basis: degree out of cap");
  std::vector<int> out;
  for (std::size_t idx = 0; idx < X.size(n); ++idx) {
    if (X.is_degenerate(n, (int)idx)) continue;
    bool ok = true;
    for (int k = 1; k <= n && ok; ++k)
      if (!XM.marked(edge_face(X, {n, (int)idx}, k).index)) ok = false;
    if (ok) out.push_back((int)idx);
  }
  return out;
}

GradedComplex PathComplex::graded() const {
  GradedComplex g;
  g.ring = ring;
  g.dims.resize(valid_through + 1);
  g.diff.resize(valid_through + 1);
  for (int n = 0; n <= valid_through; ++n) {
    g.dims[n] = omega[n].cols();
    g.diff[n] = diff[n];
  }
  return g;
}

PathComplex path_complex(const MarkedSimplicialSet& XM, Ring ring,
                         int maxdeg) {
  const auto& X = XM.sset();
  if (maxdeg > X.cap())
    fail(ErrorCode::Cap, "path_complex: maxdeg " + std::to_string(maxdeg) +
                             " exceeds cap " + std::to_string(X.cap()));
  PathComplex pc;
  pc.ring = ring;
  pc.valid_through = maxdeg;
  pc.allowed.resize(maxdeg + 1);
  pc.allowed_pos.resize(maxdeg + 1);
  pc.omega.resize(maxdeg + 1, ExactMatrix(0, 0, ring));
  pc.diff.resize(maxdeg + 1, ExactMatrix(0, 0, ring));
  pc.labels.resize(maxdeg + 1);
  for (int n = 0; n <= maxdeg; ++n) {
    pc.allowed[n] = allowed_basis(XM, n);
    pc.allowed_pos[n].assign(X.size(n), -1);
    for (std::size_t p = 0; p < pc.allowed[n].size(); ++p)
      pc.allowed_pos[n][pc.allowed[n][p]] = (int)p;
    for (int idx : pc.allowed[n]) pc.labels[n].push_back(X.label(n, idx));
  }
  pc.omega[0] = ExactMatrix::identity(pc.allowed[0].size(), ring);
  pc.diff[0] = ExactMatrix(0, pc.omega[0].cols(), ring);
  for (int n = 1; n <= maxdeg; ++n) {
    const auto& An = pc.allowed[n];
    const auto& pos_prev = pc.allowed_pos[n - 1];
    // boundary coordinates of allowed simplices, split into the allowed
    // block and the escaping block (nondegenerate, not allowed)
    std::vector<int> escape_rows;  // level indices
    std::vector<int> escape_pos(X.size(n - 1), -1);
    ExactMatrix into_allowed(pc.allowed[n - 1].size(), An.size(), ring);
    std::vector<std::vector<std::pair<int, Rat>>> escape_cols(An.size());
    for (std::size_t c = 0; c < An.size(); ++c) {
      int idx = An[c];
      for (int i = 0; i <= n; ++i) {
        int f = X.face(i, n, idx);
        if (X.is_degenerate(n - 1, f)) continue;
        Rat sgn = (i % 2 == 0) ? 1 : -1;
        if (pos_prev[f] >= 0) {
          into_allowed.add_to(pos_prev[f], c, sgn);
        } else {
          if (escape_pos[f] < 0) {
            escape_pos[f] = (int)escape_rows.size();
            escape_rows.push_back(f);
          }
          escape_cols[c].push_back({escape_pos[f], sgn});
        }
      }
    }
    ExactMatrix escape(escape_rows.size(), An.size(), ring);
    for (std::size_t c = 0; c < An.size(); ++c)
      for (const auto& [r, v] : escape_cols[c]) escape.add_to(r, c, v);
    // Omega_n: combinations of allowed simplices whose boundary stays in
    // the allowed span
    pc.omega[n] = kernel_basis(escape);
    // boundary expressed in the Omega_{n-1} basis (always lands there)
    ExactMatrix b = into_allowed.mul(pc.omega[n]);
    auto solved = try_solve(pc.omega[n - 1], b);
    if (!solved)
      fail(ErrorCode::Internal,
           "path_complex: boundary escapes Omega_{n-1} (SolveFailure)");
    pc.diff[n] = *solved;
  }
  return pc;
}

std::vector<HomologyGroup> path_homology(const MarkedSimplicialSet& XM,
                                         Ring ring, int maxdeg) {
  PathComplex pc = path_complex(XM, ring, maxdeg + 1);
  return homology(pc.graded());
}

MarkedSimplicialSet box_product(const MarkedSimplicialSet& XM,
                                const MarkedSimplicialSet& YN) {
  const auto& X = XM.sset();
  const auto& Y = YN.sset();
  TruncatedSimplicialSet P = product(X, Y);
  std::vector<char> marked(P.size(1), 0);
  for (std::size_t idx = 0; idx < P.size(1); ++idx) {
    auto [ix, iy] = pair_split(Y.size(1), (int)idx);
    bool x_deg = X.is_degenerate(1, ix);
    bool y_deg = Y.is_degenerate(1, iy);
    marked[idx] = (x_deg && YN.marked(iy)) || (y_deg && XM.marked(ix));
  }
  return MarkedSimplicialSet(std::move(P), std::move(marked));
}

ExactMatrix omega_in_normalized(const PathComplex& pc,
                                const NormalizedComplex& N, int n) {
  ExactMatrix m(N.dim(n), pc.rank(n), N.ring);
  for (std::size_t a = 0; a < pc.allowed[n].size(); ++a) {
    int p = N.pos[n][pc.allowed[n][a]];
    require_internal(p >= 0, "allowed simplex missing from N basis");
    for (std::size_t c = 0; c < pc.rank(n); ++c)
      if (pc.omega[n].at(a, c) != 0) m.set(p, c, pc.omega[n].at(a, c));
  }
  return m;
}

std::optional<ExactMatrix> chains_in_omega(const PathComplex& pc,
                                           const NormalizedComplex& N, int n,
                                           const ExactMatrix& chains) {
  // coordinates outside the allowed block must vanish
  std::vector<char> is_allowed(N.dim(n), 0);
  for (int idx : pc.allowed[n]) is_allowed[N.pos[n][idx]] = 1;
  for (std::size_t i = 0; i < N.dim(n); ++i)
    if (!is_allowed[i])
      for (std::size_t j = 0; j < chains.cols(); ++j)
        if (chains.at(i, j) != 0) return std::nullopt;
  ExactMatrix in_a(pc.allowed[n].size(), chains.cols(), pc.ring);
  for (std::size_t a = 0; a < pc.allowed[n].size(); ++a) {
    std::size_t row = N.pos[n][pc.allowed[n][a]];
    for (std::size_t j = 0; j < chains.cols(); ++j)
      in_a.set(a, j, chains.at(row, j));
  }
  return try_solve(pc.omega[n], in_a);
}

std::vector<ExactMatrix> induced_omega_maps(const MarkedSimplicialSet& XM,
                                            const MarkedSimplicialSet& YN,
                                            const SSetMap& f,
                                            const PathComplex& pcX,
                                            const PathComplex& pcY,
                                            int maxdeg) {
  const auto& X = XM.sset();
  const auto& Y = YN.sset();
  for (std::size_t i = 0; i < X.size(1); ++i)
    if (XM.marked((int)i) && !YN.marked(f.level[1][i]))
      fail(ErrorCode::Domain, "induced_omega_maps: map does not preserve "
                              "markings at edge " + X.label(1, (int)i));
  NormalizedComplex NX = normalized_complex(X, pcX.ring, maxdeg);
  NormalizedComplex NY = normalized_complex(Y, pcY.ring, maxdeg);
  std::vector<ExactMatrix> out;
  for (int n = 0; n <= maxdeg; ++n) {
    ExactMatrix chain = induced_chain_matrix(X, Y, f, NX, NY, n);
    ExactMatrix img = chain.mul(omega_in_normalized(pcX, NX, n));
    auto solved = chains_in_omega(pcY, NY, n, img);
    if (!solved)
      fail(ErrorCode::Internal,
           "induced_omega_maps: image escapes the target path complex");
    out.push_back(*solved);
  }
  return out;
}

ExactMatrix kronecker(const ExactMatrix& A, const ExactMatrix& B) {
  ExactMatrix m(A.rows() * B.rows(), A.cols() * B.cols(), A.ring());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (A.at(i, j) == 0) continue;
      for (std::size_t k = 0; k < B.rows(); ++k)
        for (std::size_t l = 0; l < B.cols(); ++l) {
          if (B.at(k, l) == 0) continue;
          m.set(i * B.rows() + k, j * B.cols() + l, A.at(i, j) * B.at(k, l));
        }
    }
  return m;
}

ExactMatrix omega_shuffle_matrix(const MarkedSimplicialSet& XM,
                                 const MarkedSimplicialSet& YN,
                                 const MarkedSimplicialSet& PM,
                                 const PathComplex& pcX, const PathComplex& pcY,
                                 const PathComplex& pcP,
                                 const NormalizedComplex& NX,
                                 const NormalizedComplex& NY,
                                 const NormalizedComplex& NP, int n) {
  (void)XM;
  (void)YN;
  std::size_t src_dim = 0;
  for (int p = 0; p <= n; ++p) src_dim += pcX.rank(p) * pcY.rank(n - p);
  ExactMatrix out(pcP.rank(n), src_dim, pcP.ring);
  std::size_t col0 = 0;
  for (int p = 0; p <= n; ++p) {
    int q = n - p;
    std::size_t nx = pcX.rank(p), ny = pcY.rank(q);
    if (nx == 0 || ny == 0) continue;
    ExactMatrix nabla =
        shuffle_matrix(XM.sset(), YN.sset(), PM.sset(), NX, NY, NP, p, q);
    ExactMatrix tensor_basis = kronecker(omega_in_normalized(pcX, NX, p),
                                         omega_in_normalized(pcY, NY, q));
    ExactMatrix img = nabla.mul(tensor_basis);
    auto solved = chains_in_omega(pcP, NP, n, img);
    if (!solved)
      fail(ErrorCode::Internal,
           "omega_shuffle_matrix: shuffle image escapes Omega(box product)");
    for (std::size_t i = 0; i < solved->rows(); ++i)
      for (std::size_t j = 0; j < solved->cols(); ++j)
        if (solved->at(i, j) != 0) out.set(i, col0 + j, solved->at(i, j));
    col0 += nx * ny;
  }
  return out;
}

ExactMatrix omega_aw_matrix(const MarkedSimplicialSet& XM,
                            const MarkedSimplicialSet& YN,
                            const MarkedSimplicialSet& PM,
                            const PathComplex& pcX, const PathComplex& pcY,
                            const PathComplex& pcP,
                            const NormalizedComplex& NX,
                            const NormalizedComplex& NY,
                            const NormalizedComplex& NP, int n) {
  (void)XM;
  (void)YN;
  ExactMatrix aw = aw_matrix(XM.sset(), YN.sset(), PM.sset(), NX, NY, NP, n);
  ExactMatrix img = aw.mul(omega_in_normalized(pcP, NP, n));
  // target blocks: express inside (+)_p Omega_p (x) Omega_q
  std::size_t tgt_dim = 0;
  for (int p = 0; p <= n; ++p) tgt_dim += pcX.rank(p) * pcY.rank(n - p);
  ExactMatrix out(tgt_dim, pcP.rank(n), pcP.ring);
  std::size_t nrow0 = 0, orow0 = 0;
  for (int p = 0; p <= n; ++p) {
    int q = n - p;
    std::size_t nblock = NX.dim(p) * NY.dim(q);
    std::size_t oblock = pcX.rank(p) * pcY.rank(q);
    if (nblock == 0) {
      require_internal(oblock == 0, "omega block without chain block");
      continue;
    }
    ExactMatrix slab(nblock, img.cols(), pcP.ring);
    for (std::size_t i = 0; i < nblock; ++i)
      for (std::size_t j = 0; j < img.cols(); ++j)
        if (img.at(nrow0 + i, j) != 0) slab.set(i, j, img.at(nrow0 + i, j));
    if (oblock > 0) {
      ExactMatrix basis = kronecker(omega_in_normalized(pcX, NX, p),
                                    omega_in_normalized(pcY, NY, q));
      auto solved = try_solve(basis, slab);
      if (!solved)
        fail(ErrorCode::Internal,
             "omega_aw_matrix: AW image escapes Omega (x) Omega");
      for (std::size_t i = 0; i < solved->rows(); ++i)
        for (std::size_t j = 0; j < solved->cols(); ++j)
          if (solved->at(i, j) != 0)
            out.set(orow0 + i, j, solved->at(i, j));
    } else {
      require_internal(slab.is_zero(),
                       "omega_aw_matrix: AW image hits a vanished block");
    }
    nrow0 += nblock;
    orow0 += oblock;
  }
  return out;
}

namespace {

// Canonical reduction data for a quotient N^n / J^n over a field: RREF rows
// spanning J^n with their pivot coordinates.
struct QuotientReducer {
  ExactMatrix rref_rows;  // s x dimN, row-echelon basis of J
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> copivots;  // complement coordinates

  // canonical representative: kill all pivot coordinates
  ExactMatrix reduce(const ExactMatrix& v) const {
    ExactMatrix r = v;
    const Ring& ring = r.ring();
    for (std::size_t t = 0; t < pivots.size(); ++t)
      for (std::size_t col = 0; col < r.cols(); ++col) {
        Rat c = r.at(pivots[t], col);
        if (c == 0) continue;
        for (std::size_t j = 0; j < r.rows(); ++j)
          r.set(j, col, ring.sub(r.at(j, col),
                                 ring.mul(c, rref_rows.at(t, j))));
      }
    return r;
  }

  // quotient coordinates of an already-reduced vector
  ExactMatrix coords(const ExactMatrix& reduced) const {
    ExactMatrix out(copivots.size(), reduced.cols(), reduced.ring());
    for (std::size_t i = 0; i < copivots.size(); ++i)
      for (std::size_t j = 0; j < reduced.cols(); ++j)
        out.set(i, j, reduced.at(copivots[i], j));
    return out;
  }
};

QuotientReducer make_reducer(const ExactMatrix& span_cols) {
  // Row-reduce the transpose so rows are the J-basis in echelon form.
  QuotientReducer red;
  const Ring ring = span_cols.ring();
  ExactMatrix rowsm = span_cols.transpose();
  // plain Gauss-Jordan tracking pivot columns
  std::vector<std::vector<Rat>> rows;
  for (std::size_t i = 0; i < rowsm.rows(); ++i) {
    std::vector<Rat> r(rowsm.cols());
    for (std::size_t j = 0; j < rowsm.cols(); ++j) r[j] = rowsm.at(i, j);
    rows.push_back(std::move(r));
  }
  std::vector<std::vector<Rat>> basis;
  std::vector<std::size_t> pivots;
  for (auto& r : rows) {
    // reduce against existing basis
    for (std::size_t t = 0; t < basis.size(); ++t) {
      Rat c = r[pivots[t]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j)
        r[j] = ring.sub(r[j], ring.mul(c, basis[t][j]));
    }
    std::size_t p = r.size();
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) {
        p = j;
        break;
      }
    if (p == r.size()) continue;  // dependent
    Rat inv = ring.inv(r[p]);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = ring.mul(r[j], inv);
    // back-substitute into earlier basis rows
    for (std::size_t t = 0; t < basis.size(); ++t) {
      Rat c = basis[t][p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < r.size(); ++j)
        basis[t][j] = ring.sub(basis[t][j], ring.mul(c, r[j]));
    }
    basis.push_back(r);
    pivots.push_back(p);
  }
  // sort by pivot for determinism
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  red.rref_rows = ExactMatrix(basis.size(), span_cols.rows(), ring);
  red.pivots.resize(basis.size());
  for (std::size_t t = 0; t < order.size(); ++t) {
    red.pivots[t] = pivots[order[t]];
    for (std::size_t j = 0; j < span_cols.rows(); ++j)
      red.rref_rows.set(t, j, basis[order[t]][j]);
  }
  std::vector<char> is_pivot(span_cols.rows(), 0);
  for (auto p : red.pivots) is_pivot[p] = 1;
  for (std::size_t j = 0; j < span_cols.rows(); ++j)
    if (!is_pivot[j]) red.copivots.push_back(j);
  return red;
}

}  // namespace

GradedCochain CochainQuotient::cochain() const {
  GradedCochain c;
  c.ring = field;
  c.dims = dims;
  c.delta = delta;
  return c;
}

CochainQuotient cochain_quotient(const MarkedSimplicialSet& XM, Ring field,
                                 int maxdeg) {
  if (!field.is_field())
    fail(ErrorCode::Ring, "cochain_quotient requires field coefficients");
  const auto& X = XM.sset();
  if (maxdeg + 1 > X.cap())
    fail(ErrorCode::Cap, "cochain_quotient: need cap >= maxdeg + 1");
  NormalizedComplex N = normalized_complex(X, field, maxdeg + 1);
  // K_n = annihilator of the allowed span: dual unit vectors at
  // nondegenerate non-allowed positions
  std::vector<std::vector<char>> allowed_flag(maxdeg + 2);
  for (int n = 0; n <= maxdeg + 1; ++n) {
    allowed_flag[n].assign(N.dim(n), 0);
    for (int idx : allowed_basis(XM, n)) allowed_flag[n][N.pos[n][idx]] = 1;
  }
  auto k_basis = [&](int n) {
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < N.dim(n); ++i)
      if (!allowed_flag[n][i]) cols.push_back(i);
    ExactMatrix K(N.dim(n), cols.size(), field);
    for (std::size_t j = 0; j < cols.size(); ++j) K.set(cols[j], j, 1);
    return K;
  };

  CochainQuotient q;
  q.field = field;
  q.maxdeg = maxdeg;
  q.dims.resize(maxdeg + 1);
  q.reps.resize(maxdeg + 1, ExactMatrix(0, 0, field));
  q.delta.resize(maxdeg + 1, ExactMatrix(0, 0, field));

  std::vector<QuotientReducer> reducers(maxdeg + 2);
  for (int n = 0; n <= maxdeg + 1; ++n) {
    ExactMatrix J = k_basis(n);
    if (n >= 1) {
      // delta(K_{n-1}) with delta the transpose of the chain differential
      ExactMatrix dv = N.diff[n].transpose().cast(field).mul(k_basis(n - 1));
      J = J.hcat(dv);
    }
    reducers[n] = make_reducer(J);
  }
  for (int n = 0; n <= maxdeg; ++n) {
    const auto& red = reducers[n];
    q.dims[n] = red.copivots.size();
    ExactMatrix reps(N.dim(n), q.dims[n], field);
    for (std::size_t j = 0; j < q.dims[n]; ++j)
      reps.set(red.copivots[j], j, 1);
    q.reps[n] = reps;
  }
  for (int n = 0; n <= maxdeg; ++n) {
    if (n + 1 > maxdeg) {
      q.delta[n] = ExactMatrix(0, q.dims[n], field);
      continue;
    }
    ExactMatrix dv = N.diff[n + 1].transpose().cast(field).mul(q.reps[n]);
    q.delta[n] = reducers[n + 1].coords(reducers[n + 1].reduce(dv));
  }
  // cup products from the front/back diagonal, reduced into the quotient
  q.cup.assign(maxdeg + 1, {});
  for (int p = 0; p <= maxdeg; ++p) {
    q.cup[p].assign(maxdeg - p + 1, ExactMatrix());
    for (int qq = 0; p + qq <= maxdeg; ++qq) {
      int n = p + qq;
      ExactMatrix table(q.dims[n], q.dims[p] * q.dims[qq], field);
      ExactMatrix vals(N.dim(n), q.dims[p] * q.dims[qq], field);
      for (std::size_t c = 0; c < N.dim(n); ++c) {
        int zi = N.basis[n][c];
        int fr = X.front_face_iterate(n, zi, qq);
        int bk = X.back_face_iterate(n, zi, p);
        int fp = N.pos[p][fr], bq = N.pos[qq][bk];
        if (fp < 0 || bq < 0) continue;
        for (std::size_t a = 0; a < q.dims[p]; ++a) {
          Rat fa = q.reps[p].at(fp, a);
          if (fa == 0) continue;
          for (std::size_t b = 0; b < q.dims[qq]; ++b) {
            Rat gb = q.reps[qq].at(bq, b);
            if (gb == 0) continue;
            vals.add_to(c, a * q.dims[qq] + b, field.mul(fa, gb));
          }
        }
      }
      table = reducers[n].coords(reducers[n].reduce(vals));
      q.cup[p][qq] = table;
    }
  }
  return q;
}

}  // namespace eqpath
