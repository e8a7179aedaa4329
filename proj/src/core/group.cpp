#include "group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace eqpath {

void FiniteGroup::check_axioms() const {
  std::size_t n = order();
  require_internal(mult.size() == n && inv.size() == n, "group table sizes");
  for (std::size_t g = 0; g < n; ++g) {
    require_internal(mult[0][g] == (int)g && mult[g][0] == (int)g,
                     "group identity law fails");
    require_internal(mult[g][inv[g]] == 0 && mult[inv[g]][g] == 0,
                     "group inverse law fails");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        require_internal(mult[mult[a][b]][c] == mult[a][mult[b][c]],
                         "group associativity fails");
}

namespace {

std::vector<int> compose(const std::vector<int>& g, const std::vector<int>& h) {
  // (g h)(v) = g(h(v))
  std::vector<int> r(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) r[v] = g[h[v]];
  return r;
}

}  // namespace

PermutationGroup group_closure(const std::vector<std::vector<int>>& generators,
                               std::size_t max_order) {
  std::size_t npts = generators.empty() ? 0 : generators[0].size();
  for (const auto& g : generators) {
    require_internal(g.size() == npts, "generators act on different sets");
    std::vector<char> seen(npts, 0);
    for (int v : g) {
      require_internal(v >= 0 && v < (int)npts && !seen[v],
                       "generator is not a permutation");
      seen[v] = 1;
    }
  }
  std::vector<int> id(npts);
  std::iota(id.begin(), id.end(), 0);
  // BFS over right multiplication: word length, then lexicographic by word
  std::vector<std::vector<int>> elements{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  std::size_t head = 0;
  while (head < elements.size()) {
    std::vector<int> cur = elements[head++];
    for (const auto& g : generators) {
      auto nxt = compose(cur, g);
      if (index.count(nxt)) continue;
      if (elements.size() >= max_order)
        fail(ErrorCode::Budget, "group order exceeds cap " +
                                    std::to_string(max_order));
      index[nxt] = (int)elements.size();
      elements.push_back(std::move(nxt));
    }
  }
  PermutationGroup out;
  out.perms = elements;
  out.group.names.resize(elements.size());
  out.group.names[0] = "e";
  for (std::size_t i = 1; i < elements.size(); ++i)
    out.group.names[i] = "g" + std::to_string(i);
  out.group.mult.assign(elements.size(),
                        std::vector<int>(elements.size(), -1));
  out.group.inv.assign(elements.size(), -1);
  for (std::size_t a = 0; a < elements.size(); ++a)
    for (std::size_t b = 0; b < elements.size(); ++b) {
      auto prod = compose(elements[a], elements[b]);
      auto it = index.find(prod);
      require_internal(it != index.end(), "closure not closed");
      out.group.mult[a][b] = it->second;
      if (it->second == 0) out.group.inv[a] = (int)b;
    }
  out.group.check_axioms();
  return out;
}

PermutationGroup load_group_action(const std::string& text, const Digraph& G) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("group JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("generators") ||
      !doc["generators"].is_array())
    fail(ErrorCode::Parse, "group JSON: missing \"generators\" array");
  std::size_t n = G.vertex_count();
  std::vector<std::vector<int>> gens;
  for (const auto& gen : doc["generators"]) {
    if (!gen.is_object() || !gen.contains("cycles") ||
        !gen["cycles"].is_array())
      fail(ErrorCode::Parse, "group JSON: generator needs a \"cycles\" array");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> used(n, 0);
    for (const auto& cyc : gen["cycles"]) {
      if (!cyc.is_array() || cyc.empty())
        fail(ErrorCode::Parse, "group JSON: cycle must be a nonempty array");
      std::vector<int> c;
      for (const auto& entry : cyc) {
        int v = -1;
        if (entry.is_string())
          v = G.vertex_index(entry.get<std::string>());
        else if (entry.is_number_integer()) {
          long long raw = entry.get<long long>();
          // prefer the literal vertex name, else treat as an index
          v = G.vertex_index(std::to_string(raw));
          if (v < 0 && raw >= 0 && raw < (long long)n) v = (int)raw;
        }
        if (v < 0)
          fail(ErrorCode::Parse,
               "group JSON: cycle entry does not name a vertex");
        if (used[v])
          fail(ErrorCode::Parse, "group JSON: vertex repeated across cycles");
        used[v] = 1;
        c.push_back(v);
      }
      for (std::size_t i = 0; i < c.size(); ++i)
        perm[c[i]] = c[(i + 1) % c.size()];
    }
    gens.push_back(std::move(perm));
  }
  return group_closure(gens);
}

ValidationReport validate_digraph_action(const Digraph& G,
                                         const DigraphAction& A) {
  ValidationReport rep;
  std::size_t n = G.vertex_count();
  for (std::size_t g = 0; g < A.group.order(); ++g) {
    const auto& p = A.perm[g];
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (G.has_edge((int)u, (int)v) && !G.has_edge(p[u], p[v]))
          rep.violations.push_back(
              {"edge not preserved by " + A.group.names[g] + ": (" +
                   G.vertices[u] + "," + G.vertices[v] + ")",
               1, (int)g, 0, (int)(u * n + v)});
  }
  return rep;
}

SimplicialGroup constant_simplicial_group(const FiniteGroup& G, int cap) {
  SimplicialGroup s;
  s.cap = cap;
  s.level.assign(cap + 1, G);
  s.face.resize(cap + 1);
  s.deg.resize(cap + 1);
  std::vector<int> id(G.order());
  std::iota(id.begin(), id.end(), 0);
  for (int n = 1; n <= cap; ++n) s.face[n].assign(n + 1, id);
  for (int n = 0; n < cap; ++n) s.deg[n].assign(n + 1, id);
  return s;
}

ValidationReport validate_twisting(const TruncatedSimplicialSet& X,
                                   const SimplicialGroup& G,
                                   const TwistingFunction& tau) {
  ValidationReport rep;
  auto note = [&rep](const char* law, int level, int i, int idx) {
    rep.violations.push_back({law, level, i, 0, idx});
  };
  for (int n = 2; n <= X.cap(); ++n)
    for (std::size_t idx = 0; idx < X.size(n); ++idx) {
      int t = tau.of(n, (int)idx);
      // d0 tau(x) = tau(d0 x)^{-1} tau(d1 x)
      int lhs = G.face_of(0, n - 1, t);
      const FiniteGroup& gl = G.level[n - 2];
      int rhs = gl.times(gl.inverse(tau.of(n - 1, X.face(0, n, (int)idx))),
                         tau.of(n - 1, X.face(1, n, (int)idx)));
      if (lhs != rhs) note("d0 tau(x) = tau(d0 x)^-1 tau(d1 x)", n, 0, (int)idx);
      // d_i tau(x) = tau(d_{i+1} x), i > 0
      for (int i = 1; i <= n - 1; ++i)
        if (G.face_of(i, n - 1, t) !=
            tau.of(n - 1, X.face(i + 1, n, (int)idx)))
          note("d_i tau(x) = tau(d_{i+1} x)", n, i, (int)idx);
    }
  for (int n = 1; n < X.cap(); ++n)
    for (std::size_t idx = 0; idx < X.size(n); ++idx) {
      int t = tau.of(n, (int)idx);
      // s_i tau(x) = tau(s_{i+1} x)
      for (int i = 0; i <= n - 1; ++i)
        if (G.deg_of(i, n - 1, t) !=
            tau.of(n + 1, X.degeneracy(i + 1, n, (int)idx)))
          note("s_i tau(x) = tau(s_{i+1} x)", n, i, (int)idx);
    }
  for (int n = 0; n < X.cap(); ++n)
    for (std::size_t idx = 0; idx < X.size(n); ++idx)
      if (tau.of(n + 1, X.degeneracy(0, n, (int)idx)) != 0)
        note("tau(s_0 x) = 1", n, 0, (int)idx);
  return rep;
}

ClassifyingSpace classifying_space(const FiniteGroup& G, int cap) {
  int m = (int)G.order();
  SSetBuilder b(cap);
  std::vector<std::vector<int>> frontier{{}};
  auto label_of = [&G](const std::vector<int>& t) {
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += "|";
      s += G.names[t[i]];
    }
    return s + "]";
  };
  b.add_simplex(0, {}, label_of({}));
  for (int n = 1; n <= cap; ++n) {
    std::vector<std::vector<int>> next;
    for (const auto& t : frontier)
      for (int g = 0; g < m; ++g) {
        auto e = t;
        e.push_back(g);
        next.push_back(std::move(e));
      }
    for (const auto& t : next) b.add_simplex(n, t, label_of(t));
    frontier = std::move(next);
  }
  b.finalize_levels();
  auto face_fn = [&G](int i, int n, const Key& t) {
    Key r;
    if (i == 0) {
      r.assign(t.begin() + 1, t.end());
    } else if (i == n) {
      r.assign(t.begin(), t.end() - 1);
    } else {
      // reversed merge: the twisting axiom on d0 forces x_{i+1} * x_i
      r = t;
      int merged = G.times(t[i], t[i - 1]);
      r.erase(r.begin() + i);
      r[i - 1] = merged;
    }
    return r;
  };
  auto deg_fn = [](int i, int, const Key& t) {
    Key r = t;
    r.insert(r.begin() + i, 0);
    return r;
  };
  TruncatedSimplicialSet sset = b.build(face_fn, deg_fn);
  std::vector<std::vector<std::vector<int>>> tuples(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    tuples[n].resize(sset.size(n));
    for (std::size_t idx = 0; idx < sset.size(n); ++idx)
      tuples[n][idx] = sset.key(n, (int)idx);
  }
  TwistingFunction tau;
  tau.tau.resize(cap + 1);
  for (int n = 1; n <= cap; ++n) {
    tau.tau[n].resize(sset.size(n));
    for (std::size_t idx = 0; idx < sset.size(n); ++idx)
      tau.tau[n][idx] = sset.key(n, (int)idx)[0];
  }
  SimplicialGroup sg = constant_simplicial_group(G, cap);
  auto rep = validate_twisting(sset, sg, tau);
  require_internal(rep.ok(), "classifying space twisting axioms fail:\n" +
                                 rep.to_string());
  return ClassifyingSpace{std::move(sset), std::move(sg), std::move(tau),
                          std::move(tuples)};
}

MarkedGSet make_marked_gset(MarkedSimplicialSet marked,
                            const SimplicialGroup& G,
                            std::vector<std::vector<std::vector<int>>> act) {
  MarkedGSet out{std::move(marked), G, std::move(act), false};
  const auto& X = out.marked.sset();
  // action must be simplicial and compatible with the group structure
  for (int n = 0; n <= X.cap(); ++n) {
    const FiniteGroup& gl = G.level[n];
    require_internal(out.act[n].size() == gl.order(), "action table size");
    for (std::size_t g = 0; g < gl.order(); ++g)
      require_internal(out.act[n][g].size() == X.size(n),
                       "action table level size");
    for (std::size_t idx = 0; idx < X.size(n); ++idx) {
      require_internal(out.act[n][0][idx] == (int)idx,
                       "identity must act trivially");
      for (std::size_t g = 0; g < gl.order(); ++g)
        for (std::size_t h = 0; h < gl.order(); ++h)
          require_internal(
              out.act[n][g][out.act[n][h][idx]] ==
                  out.act[n][gl.times((int)g, (int)h)][idx],
              "action is not associative");
    }
  }
  for (int n = 1; n <= X.cap(); ++n)
    for (std::size_t g = 0; g < G.level[n].order(); ++g)
      for (std::size_t idx = 0; idx < X.size(n); ++idx)
        for (int i = 0; i <= n; ++i)
          require_internal(
              X.face(i, n, out.act[n][g][idx]) ==
                  out.act[n - 1][G.face_of(i, n, (int)g)]
                         [X.face(i, n, (int)idx)],
              "action does not commute with faces");
  for (int n = 0; n < X.cap(); ++n)
    for (std::size_t g = 0; g < G.level[n].order(); ++g)
      for (std::size_t idx = 0; idx < X.size(n); ++idx)
        for (int i = 0; i <= n; ++i)
          require_internal(
              X.degeneracy(i, n, out.act[n][g][idx]) ==
                  out.act[n + 1][G.deg_of(i, n, (int)g)]
                         [X.degeneracy(i, n, (int)idx)],
              "action does not commute with degeneracies");
  // marked edges must be G_1-invariant
  for (std::size_t g = 0; g < G.level[1].order(); ++g)
    for (std::size_t idx = 0; idx < X.size(1); ++idx)
      if (out.marked.marked((int)idx) &&
          !out.marked.marked(out.act[1][g][idx]))
        fail(ErrorCode::ActionInvalid,
             "group action does not preserve marked edges (witness " +
                 X.label(1, (int)idx) + ")");
  // hypothesis: g * s0(x) degenerate for all g in G_1, x in F_0
  out.g_s0_degenerate = true;
  for (std::size_t g = 0; g < G.level[1].order() && out.g_s0_degenerate; ++g)
    for (std::size_t x = 0; x < X.size(0); ++x) {
      int img = out.act[1][g][X.degeneracy(0, 0, (int)x)];
      if (!X.is_degenerate(1, img)) {
        out.g_s0_degenerate = false;
        break;
      }
    }
  return out;
}

MarkedGSet nerve_gset(const Digraph& G, const DigraphAction& A,
                      const SimplicialGroup& constant, int cap,
                      std::size_t level_budget) {
  MarkedSimplicialSet nerve = nerve_marked(G, cap, level_budget);
  const auto& X = nerve.sset();
  std::vector<std::vector<std::vector<int>>> act(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    act[n].assign(A.group.order(), std::vector<int>(X.size(n), -1));
    for (std::size_t g = 0; g < A.group.order(); ++g)
      for (std::size_t idx = 0; idx < X.size(n); ++idx) {
        Key k = X.key(n, (int)idx);
        for (auto& v : k) v = A.perm[g][v];
        int t = X.index_of(n, k);
        require_internal(t >= 0, "nerve action image missing (invalid action?)");
        act[n][g][idx] = t;
      }
  }
  return make_marked_gset(std::move(nerve), constant, std::move(act));
}

MarkedSimplicialSet marked_twisted_product(const TruncatedSimplicialSet& X,
                                           const SimplicialGroup& G,
                                           const TwistingFunction& tau,
                                           const MarkedGSet& FM) {
  if (!FM.g_s0_degenerate)
    fail(ErrorCode::ActionInvalid,
         "marked twisted product requires g * s0(x) degenerate for every "
         "g in G_1 (hypothesis violated)");
  auto rep = validate_twisting(X, G, tau);
  if (!rep.ok())
    fail(ErrorCode::ActionInvalid,
         "invalid twisting function:\n" + rep.to_string());
  const auto& F = FM.marked.sset();
  std::function<int(int, int, int)> twist = [&](int n, int xidx, int f0) {
    return FM.apply(n - 1, tau.of(n, xidx), f0);
  };
  TruncatedSimplicialSet P = product(X, F, &twist);
  // marking: s0(X_0) x M  u  X_1 x s0(F_0)
  std::vector<char> marked(P.size(1), 0);
  for (std::size_t idx = 0; idx < P.size(1); ++idx) {
    auto [ix, iy] = pair_split(F.size(1), (int)idx);
    bool base_degenerate = X.is_degenerate(1, ix);
    marked[idx] = (base_degenerate && FM.marked.marked(iy)) ||
                  F.is_degenerate(1, iy);
  }
  return MarkedSimplicialSet(std::move(P), std::move(marked));
}

BorelModel borel_marked(const Digraph& G, const DigraphAction& A, int cap,
                        std::size_t level_budget) {
  auto bad = validate_digraph_action(G, A);
  if (!bad.ok())
    fail(ErrorCode::ActionInvalid, "invalid digraph action:\n" + bad.to_string());
  // budget: Borel level sizes multiply the nerve levels by |Gamma|^n
  auto nerve_sizes = nerve_level_sizes(G, cap);
  for (int n = 0; n <= cap; ++n) {
    std::size_t bs = 1;
    for (int t = 0; t < n; ++t) bs *= A.group.order();
    if (bs * nerve_sizes[n] > level_budget)
      fail(ErrorCode::Budget,
           "Borel level " + std::to_string(n) + " has " +
               std::to_string(bs * nerve_sizes[n]) + " simplices (budget " +
               std::to_string(level_budget) + ")");
  }
  ClassifyingSpace base = classifying_space(A.group, cap);
  MarkedGSet fiber = nerve_gset(G, A, base.group, cap, level_budget);
  MarkedSimplicialSet total =
      marked_twisted_product(base.sset, base.group, base.tau, fiber);
  return BorelModel{std::move(base), std::move(fiber), std::move(total)};
}

BorelQuotient borel_via_quotient(const Digraph& G, const DigraphAction& A,
                                 int cap, std::size_t level_budget) {
  BorelModel model = borel_marked(G, A, cap, level_budget);
  const FiniteGroup& Gamma = model.base.group.level[0];
  std::size_t m = Gamma.order();
  const auto& B = model.base.sset;
  const auto& F = model.fiber.marked.sset();

  // EGamma = BGamma x_tau Gamma with left translation; elements (b, g)
  std::function<int(int, int, int)> left_translate = [&](int n, int xidx,
                                                         int g0) {
    return Gamma.times(model.base.tau.of(n, xidx), g0);
  };
  SSetBuilder gb(cap);
  for (int n = 0; n <= cap; ++n)
    for (int g = 0; g < (int)m; ++g)
      gb.add_simplex(n, {g}, Gamma.names[g]);
  gb.finalize_levels();
  TruncatedSimplicialSet gamma_sset =
      gb.build([](int, int, const Key& k) { return k; },
               [](int, int, const Key& k) { return k; });
  TruncatedSimplicialSet EG = product(B, gamma_sset, &left_translate);

  // quotient of EG x F by h: ((b, g), f) -> ((b, g h), h^{-1} f)
  TruncatedSimplicialSet big = product(EG, F);
  int cap_q = cap;
  SSetBuilder qb(cap_q);
  // orbit normal form: the unique orbit element with top group entry = 1
  // (the top coordinate is translated freely)
  auto orbit_rep = [&](int n, int idx) {
    auto [eg, f] = pair_split(F.size(n), idx);
    auto [b, g] = pair_split(m, eg);
    return pair_index(F.size(n), pair_index(m, b, 0),
                      model.fiber.apply(n, g, f));
  };
  std::vector<std::vector<int>> rep_of(cap_q + 1);
  for (int n = 0; n <= cap_q; ++n) {
    rep_of[n].resize(big.size(n));
    for (std::size_t idx = 0; idx < big.size(n); ++idx)
      rep_of[n][idx] = orbit_rep(n, (int)idx);
    for (std::size_t idx = 0; idx < big.size(n); ++idx)
      if (rep_of[n][idx] == (int)idx)
        qb.add_simplex(n, {(int)idx}, "[" + big.label(n, (int)idx) + "]");
  }
  qb.finalize_levels();
  TruncatedSimplicialSet quot = qb.build(
      [&](int i, int n, const Key& k) {
        return Key{rep_of[n - 1][big.face(i, n, k[0])]};
      },
      [&](int i, int n, const Key& k) {
        return Key{rep_of[n + 1][big.degeneracy(i, n, k[0])]};
      });

  // marking: orbits of (EG)_1 x s0(F_0)  u  s0((EG)_0) x M
  std::vector<char> marked(quot.size(1), 0);
  for (std::size_t idx = 0; idx < big.size(1); ++idx) {
    auto [eg, f] = pair_split(F.size(1), (int)idx);
    bool mk = (F.is_degenerate(1, f)) ||
              (EG.is_degenerate(1, eg) && model.fiber.marked.marked(f));
    if (mk) marked[quot.index_of(1, {rep_of[1][idx]})] = 1;
  }
  MarkedSimplicialSet total(std::move(quot), std::move(marked));

  // phi[(b, g), f] = (b, g f); check it is a levelwise bijection commuting
  // with the structure maps and markings
  SSetMap phi;
  phi.level.resize(cap_q + 1);
  const auto& Q = total.sset();
  const auto& model_sset = model.total.sset();
  for (int n = 0; n <= cap_q; ++n) {
    phi.level[n].resize(Q.size(n), -1);
    std::vector<char> hit(model_sset.size(n), 0);
    for (std::size_t q = 0; q < Q.size(n); ++q) {
      int idx = Q.key(n, (int)q)[0];
      auto [eg, f] = pair_split(F.size(n), idx);
      auto [b, g] = pair_split(m, eg);
      int img = pair_index(F.size(n), b, model.fiber.apply(n, g, f));
      phi.level[n][q] = img;
      require_internal(!hit[img], "borel quotient: phi not injective");
      hit[img] = 1;
    }
    require_internal(Q.size(n) == model_sset.size(n),
                     "borel quotient: level size mismatch");
  }
  auto rep = validate_simplicial_map(Q, model_sset, phi);
  require_internal(rep.ok(),
                   "borel quotient: phi is not simplicial:\n" + rep.to_string());
  for (std::size_t q = 0; q < Q.size(1); ++q)
    require_internal(total.marked((int)q) ==
                         model.total.marked(phi.level[1][q]),
                     "borel quotient: phi does not match markings");
  return BorelQuotient{std::move(total), std::move(phi)};
}

std::vector<ExactMatrix> action_on_path_chains(const Digraph& G,
                                               const DigraphAction& A,
                                               const PathComplex& omega,
                                               int gamma) {
  std::vector<ExactMatrix> out;
  const auto& p = A.perm[gamma];
  for (int d = 0; d <= omega.valid_through; ++d) {
    auto paths = paths_of_length(G, d);
    require_internal(paths.size() == omega.allowed[d].size(),
                     "action_on_path_chains: complex was not built from this "
                     "digraph");
    ExactMatrix perm(paths.size(), paths.size(), omega.ring);
    for (std::size_t j = 0; j < paths.size(); ++j) {
      std::vector<int> t = paths[j];
      for (auto& v : t) v = p[v];
      auto it = std::lower_bound(paths.begin(), paths.end(), t);
      require_internal(it != paths.end() && *it == t,
                       "action_on_path_chains: image path missing");
      perm.set(it - paths.begin(), j, 1);
    }
    auto solved = try_solve(omega.omega[d], perm.mul(omega.omega[d]));
    if (!solved)
      fail(ErrorCode::Internal,
           "action_on_path_chains: action escapes Omega (SolveFailure)");
    out.push_back(*solved);
  }
  return out;
}

}  // namespace eqpath
