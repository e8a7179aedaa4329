#include "szczarba.hpp"

#include <algorithm>
#include <sstream>

namespace eqpath {

std::vector<SeqIndex> seq_indices(int n) {
  std::vector<SeqIndex> out;
  if (n == 0) {
    out.push_back({0, {}, 1});
    return out;
  }
  std::vector<int> cur(n, 0);
  for (;;) {
    int total = 0;
    for (int v : cur) total += v;
    out.push_back({n, cur, total % 2 == 0 ? 1 : -1});
    // lexicographic successor within 0 <= i_k <= n-k
    int k = n - 1;
    while (k >= 0 && cur[k] == n - (k + 1)) --k;
    if (k < 0) break;
    ++cur[k];
    for (int j = k + 1; j < n; ++j) cur[j] = 0;
  }
  return out;
}

SimplicialOp SimplicialOp::derived() const {
  SimplicialOp d = *this;
  for (auto& e : d.ops) ++e.index;
  return d;
}

int SimplicialOp::degree() const {
  int d = 0;
  for (const auto& e : ops) d += e.is_face ? -1 : 1;
  return d;
}

SimplexRef SimplicialOp::apply(const TruncatedSimplicialSet& X,
                               SimplexRef s) const {
  int lvl = s.dim, cur = s.index;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->is_face) {
      if (lvl < 1 || it->index > lvl)
        fail(ErrorCode::Domain, "simplicial operator: face out of range");
      cur = X.face(it->index, lvl, cur);
      --lvl;
    } else {
      if (it->index > lvl || lvl + 1 > X.cap())
        fail(ErrorCode::Domain, "simplicial operator: degeneracy out of range");
      cur = X.degeneracy(it->index, lvl, cur);
      ++lvl;
    }
  }
  return {lvl, cur};
}

std::pair<int, int> SimplicialOp::apply_group(const SimplicialGroup& G,
                                              int level, int g) const {
  int lvl = level, cur = g;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    if (it->is_face) {
      if (lvl < 1 || it->index > lvl)
        fail(ErrorCode::Domain, "group operator: face out of range");
      cur = G.face_of(it->index, lvl, cur);
      --lvl;
    } else {
      if (it->index > lvl || lvl + 1 > G.cap)
        fail(ErrorCode::Domain, "group operator: degeneracy out of range");
      cur = G.deg_of(it->index, lvl, cur);
      ++lvl;
    }
  }
  return {lvl, cur};
}

std::string SimplicialOp::to_string() const {
  if (ops.empty()) return "id";
  std::ostringstream os;
  for (const auto& e : ops) os << (e.is_face ? "d" : "s") << e.index << " ";
  return os.str();
}

SimplicialOp d_operator(const SeqIndex& i, int k) {
  require_internal(k >= 0 && k <= i.n, "d_operator: k out of range");
  if (i.n == 0) return SimplicialOp{};  // D_{empty,0} = id
  SeqIndex rest;
  rest.n = i.n - 1;
  rest.seq.assign(i.seq.begin() + 1, i.seq.end());
  int i1 = i.seq[0];
  if (k < i1) {
    SimplicialOp op = d_operator(rest, k).derived();
    op.ops.push_back({false, 0});          // s_0
    op.ops.push_back({true, i1 - k});      // d_{i1-k}, applied first
    return op;
  }
  if (k == i1) return d_operator(rest, k).derived();
  SimplicialOp op = d_operator(rest, k - 1).derived();
  op.ops.push_back({false, 0});  // s_0
  return op;
}

std::map<int, Rat> t_sz(const TruncatedSimplicialSet& X,
                        const SimplicialGroup& G, const TwistingFunction& tau,
                        int n, int idx) {
  std::map<int, Rat> chain;
  if (n == 0) return chain;
  if (n == 1) {
    chain[tau.sigma(G, 1, idx)] += 1;
    chain[0] -= 1;  // group identity at level 0
    for (auto it = chain.begin(); it != chain.end();)
      it = it->second == 0 ? chain.erase(it) : std::next(it);
    return chain;
  }
  // n >= 2: sum over S_{n-1} of signed Szczarba operator values
  for (const auto& i : seq_indices(n - 1)) {
    // Sz_i(x) = D_{i,0} sigma(x) D_{i,1} sigma(d0 x) ... applied factors
    int level = -1, prod = -1;
    int face_it = idx;
    for (int k = 0; k <= n - 1; ++k) {
      int xk_level = n - k;  // d0^k x lives here
      int sig = tau.sigma(G, xk_level, face_it);
      auto [lvl, val] = d_operator(i, k).apply_group(G, xk_level - 1, sig);
      require_internal(lvl == n - 1, "Sz factor level mismatch");
      if (k == 0) {
        level = lvl;
        prod = val;
      } else {
        prod = G.level[level].times(prod, val);
      }
      if (k < n - 1) face_it = X.face(0, xk_level, face_it);
    }
    if (!G.simplex_degenerate(n - 1, prod)) chain[prod] += Rat(i.sign);
  }
  for (auto it = chain.begin(); it != chain.end();)
    it = it->second == 0 ? chain.erase(it) : std::next(it);
  return chain;
}

ActedComplex glmy_acted_complex(const Digraph& G, const DigraphAction& A,
                                Ring ring, int maxdeg) {
  ActedComplex out;
  PathComplex pc = glmy_complex(G, ring, maxdeg);
  out.complex = pc.graded();
  out.labels.resize(maxdeg + 1);
  for (int d = 0; d <= maxdeg; ++d) {
    for (std::size_t c = 0; c < pc.rank(d); ++c)
      out.labels[d].push_back("w" + std::to_string(d) + "." +
                              std::to_string(c));
  }
  out.action.resize(A.group.order());
  for (std::size_t g = 0; g < A.group.order(); ++g)
    out.action[g] = action_on_path_chains(G, A, pc, (int)g);
  return out;
}

std::size_t ModelComplex::block_offset(int d, int nb) const {
  std::size_t off = 0;
  for (int t = 0; t < nb; ++t)
    off += base_chains.dim(t) * coeff.complex.dim(d - t);
  return off;
}

std::size_t ModelComplex::block_dim(int d, int nb) const {
  return base_chains.dim(nb) * coeff.complex.dim(d - nb);
}

namespace {

ModelComplex assemble_model(ClassifyingSpace base, const ActedComplex& W,
                            Ring ring, int maxdeg) {
  NormalizedComplex base_chains = normalized_complex(base.sset, ring, maxdeg);
  ModelComplex mc{ring,   maxdeg, std::move(base), std::move(base_chains),
                  W,      {}};
  const FiniteGroup& Gamma = mc.base.group.level[0];
  GradedComplex& C = mc.complex;
  C.ring = ring;
  C.dims.resize(maxdeg + 1, 0);
  C.labels.resize(maxdeg + 1);
  for (int d = 0; d <= maxdeg; ++d) {
    for (int nb = 0; nb <= d; ++nb) {
      C.dims[d] += mc.block_dim(d, nb);
      std::size_t wdim = mc.coeff.complex.dim(d - nb);
      for (std::size_t b = 0; b < mc.base_chains.dim(nb); ++b)
        for (std::size_t w = 0; w < wdim; ++w) {
          std::string wl =
              (d - nb < (int)mc.coeff.labels.size() &&
               w < mc.coeff.labels[d - nb].size())
                  ? mc.coeff.labels[d - nb][w]
                  : ("w" + std::to_string(d - nb) + "." + std::to_string(w));
          C.labels[d].push_back(
              mc.base.sset.label(nb, mc.base_chains.basis[nb][b]) + "(x)" +
              wl);
        }
    }
  }
  C.diff.assign(maxdeg + 1, ExactMatrix());
  C.diff[0] = ExactMatrix(0, C.dims[0], ring);
  for (int d = 1; d <= maxdeg; ++d) {
    ExactMatrix m(C.dims[d - 1], C.dims[d], ring);
    for (int nb = 0; nb <= d; ++nb) {
      int k = d - nb;
      std::size_t bdim = mc.base_chains.dim(nb);
      std::size_t wdim = mc.coeff.complex.dim(k);
      if (bdim == 0 || wdim == 0) continue;
      std::size_t col0 = mc.block_offset(d, nb);
      Rat sign = (nb % 2 == 0) ? 1 : -1;
      for (std::size_t b = 0; b < bdim; ++b) {
        for (std::size_t w = 0; w < wdim; ++w) {
          std::size_t col = col0 + b * wdim + w;
          // d(x) (x) w
          if (nb >= 1) {
            std::size_t row0 = mc.block_offset(d - 1, nb - 1);
            std::size_t wprev = wdim;
            const ExactMatrix& dB = mc.base_chains.diff[nb];
            for (std::size_t r = 0; r < mc.base_chains.dim(nb - 1); ++r)
              if (dB.at(r, b) != 0)
                m.add_to(row0 + r * wprev + w, col, dB.at(r, b));
          }
          // (-1)^n x (x) d(w)
          if (k >= 1 && mc.coeff.complex.dim(k - 1) > 0) {
            std::size_t row0 = mc.block_offset(d - 1, nb);
            std::size_t wprev = mc.coeff.complex.dim(k - 1);
            const ExactMatrix& dW = mc.coeff.complex.diff[k];
            for (std::size_t r = 0; r < wprev; ++r)
              if (dW.at(r, w) != 0)
                m.add_to(row0 + b * wprev + r, col, ring.mul(sign, dW.at(r, w)));
          }
          // (-1)^n (x_1..x_{n-1}) (x) (x_n^{-1} w - w)
          if (nb >= 1) {
            const Key& tuple =
                mc.base.sset.key(nb, mc.base_chains.basis[nb][b]);
            Key prefix(tuple.begin(), tuple.end() - 1);
            int pidx = mc.base.sset.index_of(nb - 1, prefix);
            require_internal(pidx >= 0, "model: prefix tuple missing");
            int ppos = mc.base_chains.pos[nb - 1][pidx];
            require_internal(ppos >= 0, "model: prefix tuple degenerate");
            std::size_t row0 = mc.block_offset(d - 1, nb - 1) + ppos * wdim;
            int glast = Gamma.inverse(tuple.back());
            const ExactMatrix& act = mc.coeff.action[glast][k];
            for (std::size_t r = 0; r < wdim; ++r) {
              Rat v = act.at(r, w);
              if (r == w) v -= 1;
              if (v != 0) m.add_to(row0 + r, col, ring.mul(sign, v));
            }
          }
        }
      }
    }
    C.diff[d] = std::move(m);
  }
  return mc;
}

}  // namespace

ModelComplex model_complex(const FiniteGroup& Gamma, const ActedComplex& W,
                           Ring ring, int maxdeg) {
  return assemble_model(classifying_space(Gamma, maxdeg), W, ring, maxdeg);
}

ModelComplex model_complex(const Digraph& G, const DigraphAction& A, Ring ring,
                           int maxdeg) {
  return model_complex(A.group, glmy_acted_complex(G, A, ring, maxdeg), ring,
                       maxdeg);
}

std::vector<HomologyGroup> model_homology(const ModelComplex& mc) {
  return homology(mc.complex);
}

ExactMatrix generic_twisted_differential(const ModelComplex& mc, int d) {
  require_internal(d >= 1 && d <= mc.maxdeg, "generic differential degree");
  const Ring ring = mc.ring;
  const auto& B = mc.base.sset;
  const auto& NB = mc.base_chains;
  const SimplicialGroup& SG = mc.base.group;
  ExactMatrix m(mc.complex.dims[d - 1], mc.complex.dims[d], ring);
  for (int nb = 0; nb <= d; ++nb) {
    int k = d - nb;
    std::size_t bdim = NB.dim(nb), wdim = mc.coeff.complex.dim(k);
    if (bdim == 0 || wdim == 0) continue;
    std::size_t col0 = mc.block_offset(d, nb);
    for (std::size_t b = 0; b < bdim; ++b) {
      int bidx = NB.basis[nb][b];
      for (std::size_t w = 0; w < wdim; ++w) {
        std::size_t col = col0 + b * wdim + w;
        // d_C (x) 1
        if (nb >= 1) {
          std::size_t row0 = mc.block_offset(d - 1, nb - 1);
          for (std::size_t r = 0; r < NB.dim(nb - 1); ++r)
            if (NB.diff[nb].at(r, b) != 0)
              m.add_to(row0 + r * wdim + w, col, NB.diff[nb].at(r, b));
        }
        // (-1)^{nb} 1 (x) d_M
        if (k >= 1 && mc.coeff.complex.dim(k - 1) > 0) {
          std::size_t row0 = mc.block_offset(d - 1, nb);
          std::size_t wprev = mc.coeff.complex.dim(k - 1);
          Rat sign = (nb % 2 == 0) ? 1 : -1;
          for (std::size_t r = 0; r < wprev; ++r)
            if (mc.coeff.complex.diff[k].at(r, w) != 0)
              m.add_to(row0 + b * wprev + r, col,
                       ring.mul(sign, mc.coeff.complex.diff[k].at(r, w)));
        }
        // - sum over the AW diagonal: (-1)^{|x'|} x' (x) mu(t(x'') (x) w)
        for (int p = 0; p < nb; ++p) {
          // x' = front_p, x'' = back_{nb-p}; t vanishes except in degree 1,
          // but evaluate generically and let normalization decide
          int fr = B.front_face_iterate(nb, bidx, nb - p);
          if (NB.pos[p][fr] < 0) continue;
          int bk = B.back_face_iterate(nb, bidx, p);
          if (B.is_degenerate(nb - p, bk)) continue;
          auto tch = t_sz(B, SG, mc.base.tau, nb - p, bk);
          if (tch.empty()) continue;
          // mu at group degree j = nb - p - 1; normalized chains of a
          // constant group vanish above degree 0
          int j = nb - p - 1;
          if (j > 0) {
            bool all_zero = true;
            for (const auto& [g, c] : tch)
              if (!SG.simplex_degenerate(j, g)) all_zero = false;
            require_internal(all_zero,
                             "constant group has nonzero higher chains?");
            continue;
          }
          std::size_t row0 = mc.block_offset(d - 1, p);
          Rat outer = (p % 2 == 0) ? 1 : -1;  // Koszul: t moved past x'
          for (const auto& [g, c] : tch) {
            const ExactMatrix& act = mc.coeff.action[g][k];
            for (std::size_t r = 0; r < wdim; ++r)
              if (act.at(r, w) != 0)
                m.add_to(row0 + NB.pos[p][fr] * wdim + r, col,
                         ring.mul(Rat(-1) * outer * c, act.at(r, w)));
          }
        }
      }
    }
  }
  return m;
}

PsiOmega psi_omega(const BorelModel& borel, const PathComplex& borel_omega,
                   const ModelComplex& mc, const PathComplex& glmy,
                   const Digraph& G, int maxdeg) {
  const Ring ring = mc.ring;
  const auto& B = borel.base.sset;
  const SimplicialGroup& SG = borel.base.group;
  const FiniteGroup& Gamma = SG.level[0];
  const auto& F = borel.fiber.marked.sset();
  const auto& P = borel.total.sset();
  require_internal(maxdeg <= P.cap(), "psi_omega: cap exceeded");
  require_internal(borel_omega.valid_through >= maxdeg,
                   "psi_omega: Borel path complex too shallow");
  NormalizedComplex NP = normalized_complex(P, ring, maxdeg);

  // glmy paths correspond to allowed nerve simplices of the fiber
  std::vector<std::vector<int>> path_to_fiber(maxdeg + 1);
  for (int k = 0; k <= maxdeg; ++k) {
    auto paths = paths_of_length(G, k);
    require_internal(paths.size() == glmy.allowed[k].size(),
                     "psi_omega: coefficient complex mismatch");
    path_to_fiber[k].resize(paths.size());
    for (std::size_t j = 0; j < paths.size(); ++j) {
      int idx = F.index_of(k, paths[j]);
      require_internal(idx >= 0, "psi_omega: path missing from the nerve");
      path_to_fiber[k][j] = idx;
    }
  }

  PsiOmega out;
  for (int d = 0; d <= maxdeg; ++d) {
    ExactMatrix chains(NP.dim(d), mc.complex.dims[d], ring);
    for (int nb = 0; nb <= d; ++nb) {
      int k = d - nb;
      std::size_t bdim = mc.base_chains.dim(nb);
      std::size_t wdim = mc.coeff.complex.dim(k);
      if (bdim == 0 || wdim == 0) continue;
      require_internal(wdim == glmy.rank(k),
                       "psi_omega: model coefficients are not this glmy "
                       "complex");
      std::size_t col0 = mc.block_offset(d, nb);
      auto sh = shuffles(nb, k);
      for (std::size_t b = 0; b < bdim; ++b) {
        int bidx = mc.base_chains.basis[nb][b];
        struct HatTerm {
          int a;  // base simplex at level nb
          int g;  // group element at level nb
          int sign;
        };
        std::vector<HatTerm> hats;
        for (const auto& i : seq_indices(nb)) {
          SimplexRef a = d_operator(i, 0).apply(B, {nb, bidx});
          require_internal(a.dim == nb, "hat Szczarba base level");
          int g = 0;  // identity when nb = 0
          int face_it = bidx;
          for (int kk = 1; kk <= nb; ++kk) {
            int x_level = nb - (kk - 1);
            int sig = borel.base.tau.sigma(SG, x_level, face_it);
            auto [lvl, val] =
                d_operator(i, kk).apply_group(SG, x_level - 1, sig);
            require_internal(lvl == nb, "hat Szczarba factor level");
            g = kk == 1 ? val : Gamma.times(g, val);
            if (kk < nb) face_it = B.face(0, x_level, face_it);
          }
          hats.push_back({a.index, g, i.sign});
        }
        // precompute shuffled base/fiber images shared across columns
        for (const auto& hat : hats) {
          for (const auto& s : sh) {
            int sa = B.apply_degeneracies(nb, hat.a, s.nu);
            // degeneracies of the group coordinate along nu
            int sg = hat.g, lvl = nb;
            for (int si : s.nu) {
              sg = SG.deg_of(si, lvl, sg);
              ++lvl;
            }
            for (std::size_t arow = 0; arow < glmy.allowed[k].size();
                 ++arow) {
              int sp = F.apply_degeneracies(k, path_to_fiber[k][arow], s.mu);
              int acted = borel.fiber.apply(d, sg, sp);
              int pos = NP.pos[d][pair_index(F.size(d), sa, acted)];
              if (pos < 0) continue;
              Rat coeff = Rat(hat.sign * s.sign);
              for (std::size_t w = 0; w < wdim; ++w) {
                const Rat& c = glmy.omega[k].at(arow, w);
                if (c == 0) continue;
                chains.add_to(pos, col0 + b * wdim + w, coeff * c);
              }
            }
          }
        }
      }
    }
    auto solved = chains_in_omega(borel_omega, NP, d, chains);
    if (!solved)
      fail(ErrorCode::Internal,
           "psi_omega: image escapes Omega of the Borel construction at "
           "degree " + std::to_string(d) + " (ImageEscapesOmega)");
    out.matrices.push_back(*solved);
  }
  return out;
}

RelativeModel relative_model(const Digraph& G, const Digraph& sub,
                             const DigraphAction& A, Ring ring, int maxdeg) {
  require_subgraph(G, sub);
  // Gamma-invariance of the subgraph, with witness
  for (std::size_t g = 0; g < A.group.order(); ++g) {
    for (std::size_t u = 0; u < sub.vertex_count(); ++u) {
      int gu = A.perm[g][G.vertex_index(sub.vertices[u])];
      if (sub.vertex_index(G.vertices[gu]) < 0)
        fail(ErrorCode::Subgraph,
             "subgraph is not invariant: " + A.group.names[g] + " moves " +
                 sub.vertices[u] + " outside the subgraph");
    }
    for (std::size_t u = 0; u < sub.vertex_count(); ++u)
      for (std::size_t v = 0; v < sub.vertex_count(); ++v) {
        if (!sub.adj[u][v]) continue;
        int gu = A.perm[g][G.vertex_index(sub.vertices[u])];
        int gv = A.perm[g][G.vertex_index(sub.vertices[v])];
        int su = sub.vertex_index(G.vertices[gu]);
        int sv = sub.vertex_index(G.vertices[gv]);
        if (su < 0 || sv < 0 || !sub.adj[su][sv])
          fail(ErrorCode::Subgraph,
               "subgraph is not invariant: " + A.group.names[g] +
                   " moves edge " + sub.vertices[u] + " -> " +
                   sub.vertices[v] + " outside the subgraph");
      }
  }
  QuotientComplex rel = relative_complex(G, sub, ring, maxdeg);
  // action descends to the quotient
  ActedComplex W;
  W.complex = rel.complex;
  PathComplex big = glmy_complex(G, ring, maxdeg);
  W.action.resize(A.group.order());
  for (std::size_t g = 0; g < A.group.order(); ++g) {
    auto act = action_on_path_chains(G, A, big, (int)g);
    for (int d = 0; d <= maxdeg; ++d)
      W.action[g].push_back(rel.proj[d].mul(act[d]).mul(rel.lift[d]));
  }
  ModelComplex model = model_complex(A.group, W, ring, maxdeg);
  return RelativeModel{std::move(model), std::move(rel)};
}

DualModelComplex dual_model(const ModelComplex& mc, Ring field) {
  if (!field.is_field())
    fail(ErrorCode::Ring, "dual_model requires field coefficients");
  DualModelComplex out;
  out.field = field;
  out.maxdeg = mc.maxdeg;
  out.dims = mc.complex.dims;
  out.cochain.ring = field;
  out.cochain.dims = mc.complex.dims;
  out.cochain.delta.resize(mc.maxdeg + 1);
  const FiniteGroup& Gamma = mc.base.group.level[0];
  const auto& B = mc.base.sset;
  const auto& NB = mc.base_chains;
  for (int d = 0; d <= mc.maxdeg; ++d) {
    if (d + 1 > mc.maxdeg) {
      out.cochain.delta[d] = ExactMatrix(0, out.dims[d], field);
      continue;
    }
    ExactMatrix delta(out.dims[d + 1], out.dims[d], field);
    // delta(x* (x) u) pairs against the three terms of the model
    // differential; assembled directly from the explicit dual formula
    for (int kb = 0; kb <= d; ++kb) {
      int l = d - kb;  // coefficient degree of u
      std::size_t bdim = NB.dim(kb), wdim = mc.coeff.complex.dim(l);
      if (bdim == 0 || wdim == 0) continue;
      std::size_t col0 = mc.block_offset(d, kb);
      Rat sign = (kb % 2 == 0) ? 1 : -1;
      for (std::size_t b = 0; b < bdim; ++b)
        for (std::size_t u = 0; u < wdim; ++u) {
          std::size_t col = col0 + b * wdim + u;
          // delta(x*) (x) u : transpose of the base differential
          if (kb + 1 <= mc.maxdeg && NB.dim(kb + 1) > 0) {
            std::size_t row0 = mc.block_offset(d + 1, kb + 1);
            const ExactMatrix& dB = NB.diff[kb + 1];
            for (std::size_t y = 0; y < NB.dim(kb + 1); ++y)
              if (dB.at(b, y) != 0)
                delta.add_to(row0 + y * wdim + u, col, dB.at(b, y));
          }
          // (-1)^k x* (x) (d^T u)
          if (l + 1 <= mc.maxdeg - kb && mc.coeff.complex.dim(l + 1) > 0) {
            std::size_t row0 = mc.block_offset(d + 1, kb);
            const ExactMatrix& dW = mc.coeff.complex.diff[l + 1];
            std::size_t wnext = mc.coeff.complex.dim(l + 1);
            for (std::size_t y = 0; y < wnext; ++y)
              if (dW.at(u, y) != 0)
                delta.add_to(row0 + b * wnext + y, col,
                             field.mul(sign, dW.at(u, y)));
          }
          // sum_h (-1)^{k+1} (x,h)* (x) (h^{-1} ^ u - u)
          if (kb + 1 <= mc.maxdeg && NB.dim(kb + 1) > 0) {
            const Key& tuple = B.key(kb, NB.basis[kb][b]);
            std::size_t row0 = mc.block_offset(d + 1, kb + 1);
            for (std::size_t h = 1; h < Gamma.order(); ++h) {
              Key ext = tuple;
              ext.push_back((int)h);
              int eidx = B.index_of(kb + 1, ext);
              require_internal(eidx >= 0, "dual model: extended tuple");
              int epos = NB.pos[kb + 1][eidx];
              require_internal(epos >= 0, "dual model: extension degenerate");
              const ExactMatrix& act =
                  mc.coeff.action[Gamma.inverse((int)h)][l];
              // wedge = transpose action: (h^{-1} ^ u)(w) = u(h^{-1} w)
              for (std::size_t y = 0; y < wdim; ++y) {
                Rat v = act.at(u, y);
                if (y == u) v -= 1;
                if (v != 0)
                  delta.add_to(row0 + epos * wdim + y, col,
                               field.mul(Rat(-1) * sign, v));
              }
            }
          }
        }
    }
    out.cochain.delta[d] = std::move(delta);
  }
  return out;
}

}  // namespace eqpath
