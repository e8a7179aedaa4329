#include "digraph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

namespace eqpath {

std::size_t Digraph::edge_count() const {
  std::size_t c = 0;
  for (const auto& row : adj)
    for (char e : row)
      if (e) ++c;
  return c;
}

int Digraph::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return (int)i;
  return -1;
}

Digraph digraph_from_edges(std::vector<std::string> vertices,
                           const std::vector<std::pair<int, int>>& edges) {
  Digraph g;
  g.vertices = std::move(vertices);
  std::size_t n = g.vertices.size();
  g.adj.assign(n, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < n; ++v) g.adj[v][v] = 1;  // loop completion
  for (auto [u, v] : edges) {
    require_internal(u >= 0 && u < (int)n && v >= 0 && v < (int)n,
                     "digraph_from_edges: index out of range");
    g.adj[u][v] = 1;
  }
  return g;
}

namespace {

Digraph load_digraph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("digraph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") ||
      !doc["vertices"].is_array())
    fail(ErrorCode::Parse, "digraph JSON: missing \"vertices\" array");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (v.is_string())
      vertices.push_back(v.get<std::string>());
    else if (v.is_number_integer())
      vertices.push_back(std::to_string(v.get<long long>()));
    else
      fail(ErrorCode::Parse, "digraph JSON: vertex must be string or int");
  }
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (index.count(vertices[i]))
      fail(ErrorCode::Parse, "digraph JSON: duplicate vertex '" +
                                 vertices[i] + "'");
    index[vertices[i]] = (int)i;
  }
  std::vector<std::pair<int, int>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array())
      fail(ErrorCode::Parse, "digraph JSON: \"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2)
        fail(ErrorCode::Parse, "digraph JSON: edge must be a pair");
      std::string u = e[0].is_string() ? e[0].get<std::string>()
                                       : std::to_string(e[0].get<long long>());
      std::string v = e[1].is_string() ? e[1].get<std::string>()
                                       : std::to_string(e[1].get<long long>());
      if (!index.count(u))
        fail(ErrorCode::DanglingEdge,
             "edge endpoint '" + u + "' is not a declared vertex");
      if (!index.count(v))
        fail(ErrorCode::DanglingEdge,
             "edge endpoint '" + v + "' is not a declared vertex");
      edges.push_back({index[u], index[v]});
    }
  }
  return digraph_from_edges(std::move(vertices), edges);
}

Digraph load_digraph_text(const std::string& text) {
  std::vector<std::string> vertices;
  std::map<std::string, int> index;
  auto intern = [&](const std::string& name, int lineno) {
    if (name.empty())
      fail(ErrorCode::Parse,
           "digraph text: empty vertex name at line " + std::to_string(lineno));
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = (int)vertices.size();
    vertices.push_back(name);
    index[name] = id;
    return id;
  };
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::vector<std::pair<int, int>> edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto arrow = t.find("->");
    if (arrow == std::string::npos) {
      // a bare token declares an isolated vertex
      if (t.find_first_of(" \t") != std::string::npos)
        fail(ErrorCode::Parse, "digraph text: expected 'u -> v' at line " +
                                   std::to_string(lineno));
      intern(t, lineno);
      continue;
    }
    int u = intern(trim(t.substr(0, arrow)), lineno);
    int v = intern(trim(t.substr(arrow + 2)), lineno);
    edges.push_back({u, v});
  }
  return digraph_from_edges(std::move(vertices), edges);
}

}  // namespace

Digraph load_digraph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return load_digraph_json(text);
  return load_digraph_text(text);
}

std::vector<std::vector<char>> reachability(const Digraph& G) {
  std::size_t n = G.vertex_count();
  std::vector<std::vector<char>> r = G.adj;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (r[k][j]) r[i][j] = 1;
    }
  return r;
}

std::vector<std::size_t> nerve_level_sizes(const Digraph& G, int cap) {
  auto reach = reachability(G);
  std::size_t n = G.vertex_count();
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> count(n, 1);  // tuples ending at v
  sizes.push_back(n);
  for (int lvl = 1; lvl <= cap; ++lvl) {
    std::vector<std::size_t> next(n, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (reach[u][v]) next[v] += count[u];
    std::size_t total = 0;
    for (auto c : next) total += c;
    sizes.push_back(total);
    count = std::move(next);
  }
  return sizes;
}

MarkedSimplicialSet nerve_marked(const Digraph& G, int cap,
                                 std::size_t level_budget) {
  auto sizes = nerve_level_sizes(G, cap);
  for (int lvl = 0; lvl <= cap; ++lvl)
    if (sizes[lvl] > level_budget)
      fail(ErrorCode::Budget,
           "nerve level " + std::to_string(lvl) + " has " +
               std::to_string(sizes[lvl]) + " simplices (budget " +
               std::to_string(level_budget) + ")");
  auto reach = reachability(G);
  SSetBuilder b(cap);
  std::size_t n = G.vertex_count();
  std::vector<Key> frontier;
  auto label_of = [&G](const Key& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ",";
      s += G.vertices[t[i]];
    }
    return s + ")";
  };
  for (std::size_t v = 0; v < n; ++v) frontier.push_back({(int)v});
  for (const auto& t : frontier) b.add_simplex(0, t, label_of(t));
  for (int lvl = 1; lvl <= cap; ++lvl) {
    std::vector<Key> next;
    for (const auto& t : frontier)
      for (std::size_t v = 0; v < n; ++v)
        if (reach[t.back()][v]) {
          Key e = t;
          e.push_back((int)v);
          next.push_back(std::move(e));
        }
    for (const auto& t : next) b.add_simplex(lvl, t, label_of(t));
    frontier = std::move(next);
  }
  b.finalize_levels();
  TruncatedSimplicialSet nerve = b.build(
      [](int i, int, const Key& t) {
        Key r = t;
        r.erase(r.begin() + i);
        return r;
      },
      [](int i, int, const Key& t) {
        Key r = t;
        r.insert(r.begin() + i, t[i]);
        return r;
      });
  std::vector<char> marked(nerve.size(1), 0);
  for (std::size_t idx = 0; idx < nerve.size(1); ++idx) {
    const Key& k = nerve.key(1, (int)idx);
    marked[idx] = G.has_edge(k[0], k[1]);
  }
  return MarkedSimplicialSet(std::move(nerve), std::move(marked));
}

std::vector<std::vector<int>> paths_of_length(const Digraph& G, int n) {
  std::vector<std::vector<int>> frontier;
  for (std::size_t v = 0; v < G.vertex_count(); ++v)
    frontier.push_back({(int)v});
  for (int lvl = 1; lvl <= n; ++lvl) {
    std::vector<std::vector<int>> next;
    for (const auto& t : frontier)
      for (std::size_t v = 0; v < G.vertex_count(); ++v)
        if ((int)v != t.back() && G.has_edge(t.back(), (int)v)) {
          auto e = t;
          e.push_back((int)v);
          next.push_back(std::move(e));
        }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

PathComplex glmy_complex(const Digraph& G, Ring ring, int maxdeg) {
  PathComplex pc;
  pc.ring = ring;
  pc.valid_through = maxdeg;
  pc.allowed.resize(maxdeg + 1);
  pc.allowed_pos.resize(maxdeg + 1);
  pc.omega.resize(maxdeg + 1, ExactMatrix(0, 0, ring));
  pc.diff.resize(maxdeg + 1, ExactMatrix(0, 0, ring));
  pc.labels.resize(maxdeg + 1);

  auto path_label = [&G](const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ",";
      s += G.vertices[t[i]];
    }
    return s + ")";
  };

  std::vector<std::vector<std::vector<int>>> paths(maxdeg + 1);
  for (int d = 0; d <= maxdeg; ++d) {
    paths[d] = paths_of_length(G, d);
    pc.allowed[d].resize(paths[d].size());
    for (std::size_t i = 0; i < paths[d].size(); ++i) {
      pc.allowed[d][i] = (int)i;
      pc.labels[d].push_back(path_label(paths[d][i]));
    }
    pc.allowed_pos[d] = pc.allowed[d];
  }
  pc.omega[0] = ExactMatrix::identity(paths[0].size(), ring);
  pc.diff[0] = ExactMatrix(0, pc.omega[0].cols(), ring);
  for (int d = 1; d <= maxdeg; ++d) {
    const auto& gen = paths[d];
    const auto& prev = paths[d - 1];
    auto find_prev = [&prev](const std::vector<int>& t) {
      auto it = std::lower_bound(prev.begin(), prev.end(), t);
      if (it == prev.end() || *it != t) return -1;
      return (int)(it - prev.begin());
    };
    // term-dropping boundary split into path block and escaping block
    std::map<std::vector<int>, int> escape_index;
    std::vector<std::vector<int>> escape_rows;
    ExactMatrix into_paths(prev.size(), gen.size(), ring);
    std::vector<std::vector<std::pair<int, Rat>>> escape_cols(gen.size());
    for (std::size_t c = 0; c < gen.size(); ++c) {
      const auto& t = gen[c];
      for (int i = 0; i <= d; ++i) {
        if (i > 0 && i < d && t[i - 1] == t[i + 1]) continue;  // dropped term
        std::vector<int> f = t;
        f.erase(f.begin() + i);
        Rat sgn = (i % 2 == 0) ? 1 : -1;
        int p = find_prev(f);
        if (p >= 0) {
          into_paths.add_to(p, c, sgn);
        } else {
          auto [it, inserted] =
              escape_index.insert({f, (int)escape_rows.size()});
          if (inserted) escape_rows.push_back(f);
          escape_cols[c].push_back({it->second, sgn});
        }
      }
    }
    ExactMatrix escape(escape_rows.size(), gen.size(), ring);
    for (std::size_t c = 0; c < gen.size(); ++c)
      for (const auto& [r, v] : escape_cols[c]) escape.add_to(r, c, v);
    pc.omega[d] = kernel_basis(escape);
    ExactMatrix b = into_paths.mul(pc.omega[d]);
    pc.diff[d] =
        solve_in_basis(pc.omega[d - 1], b, "glmy_complex boundary");
  }
  return pc;
}

GradedComplex omega_U_complex(const Digraph& G, const std::vector<int>& U,
                              Ring ring, int maxdeg) {
  std::vector<char> in_U(G.vertex_count(), 0);
  for (int v : U) {
    require_internal(v >= 0 && v < (int)G.vertex_count(),
                     "omega_U_complex: vertex out of range");
    in_U[v] = 1;
  }
  PathComplex pc = glmy_complex(G, ring, maxdeg);
  GradedComplex out;
  out.ring = ring;
  out.dims.resize(maxdeg + 1);
  out.diff.resize(maxdeg + 1);
  std::vector<ExactMatrix> basis(maxdeg + 1);       // in A_n coordinates
  std::vector<std::vector<char>> meets(maxdeg + 1);  // per A_n generator
  for (int d = 0; d <= maxdeg; ++d) {
    auto paths = paths_of_length(G, d);
    meets[d].assign(paths.size(), 0);
    for (std::size_t i = 0; i < paths.size(); ++i)
      for (int v : paths[i])
        if (in_U[v]) {
          meets[d][i] = 1;
          break;
        }
    // restriction of Omega_d to chains supported on U-meeting paths
    std::vector<std::size_t> avoid_rows;
    for (std::size_t i = 0; i < paths.size(); ++i)
      if (!meets[d][i]) avoid_rows.push_back(i);
    ExactMatrix avoid(avoid_rows.size(), pc.rank(d), ring);
    for (std::size_t r = 0; r < avoid_rows.size(); ++r)
      for (std::size_t c = 0; c < pc.rank(d); ++c)
        avoid.set(r, c, pc.omega[d].at(avoid_rows[r], c));
    ExactMatrix ker = kernel_basis(avoid);
    basis[d] = pc.omega[d].mul(ker);
    out.dims[d] = basis[d].cols();
  }
  out.diff[0] = ExactMatrix(0, out.dims[0], ring);
  for (int d = 1; d <= maxdeg; ++d) {
    // project the boundary onto U-meeting coordinates, then solve
    ExactMatrix img = pc.omega[d - 1].mul(pc.diff[d]);
    ExactMatrix img_U = basis[d].cols() > 0
                            ? img.mul(solve_in_basis(pc.omega[d], basis[d],
                                                     "omega_U basis lift"))
                            : ExactMatrix(img.rows(), 0, ring);
    for (std::size_t i = 0; i < img_U.rows(); ++i)
      if (!meets[d - 1][i])
        for (std::size_t j = 0; j < img_U.cols(); ++j)
          img_U.set(i, j, 0);
    auto solved = try_solve(basis[d - 1], img_U);
    if (!solved)
      fail(ErrorCode::Domain,
           "omega_U_complex: projected boundary escapes Omega^U (the "
           "supported-complex hypothesis fails for this U)");
    out.diff[d] = *solved;
  }
  return out;
}

void require_subgraph(const Digraph& G, const Digraph& sub) {
  for (const auto& name : sub.vertices)
    if (G.vertex_index(name) < 0)
      fail(ErrorCode::Subgraph, "not a subgraph: vertex '" + name +
                                    "' missing from the ambient digraph");
  for (std::size_t u = 0; u < sub.vertex_count(); ++u)
    for (std::size_t v = 0; v < sub.vertex_count(); ++v)
      if (sub.adj[u][v] &&
          !G.has_edge(G.vertex_index(sub.vertices[u]),
                      G.vertex_index(sub.vertices[v])))
        fail(ErrorCode::Subgraph, "not a subgraph: edge " + sub.vertices[u] +
                                      " -> " + sub.vertices[v] +
                                      " missing from the ambient digraph");
}

QuotientComplex relative_complex(const Digraph& G, const Digraph& sub,
                                 Ring ring, int maxdeg) {
  require_subgraph(G, sub);
  PathComplex big = glmy_complex(G, ring, maxdeg);
  PathComplex small = glmy_complex(sub, ring, maxdeg);
  // include Omega(sub) into Omega(G) via the path renaming
  std::vector<int> vmap(sub.vertex_count());
  for (std::size_t v = 0; v < sub.vertex_count(); ++v)
    vmap[v] = G.vertex_index(sub.vertices[v]);
  std::vector<ExactMatrix> sub_in_big(maxdeg + 1);
  for (int d = 0; d <= maxdeg; ++d) {
    auto gpaths = paths_of_length(G, d);
    auto spaths = paths_of_length(sub, d);
    ExactMatrix incl(gpaths.size(), spaths.size(), ring);
    for (std::size_t j = 0; j < spaths.size(); ++j) {
      std::vector<int> t = spaths[j];
      for (auto& v : t) v = vmap[v];
      auto it = std::lower_bound(gpaths.begin(), gpaths.end(), t);
      require_internal(it != gpaths.end() && *it == t,
                       "relative_complex: subgraph path missing");
      incl.set(it - gpaths.begin(), j, 1);
    }
    ExactMatrix img = incl.mul(small.omega[d]);
    sub_in_big[d] =
        solve_in_basis(big.omega[d], img, "relative_complex inclusion");
  }
  return quotient_complex(big.graded(), sub_in_big);
}

bool no_edges_from_complement(const Digraph& G, const Digraph& sub) {
  std::vector<char> in_sub(G.vertex_count(), 0);
  for (const auto& name : sub.vertices) in_sub[G.vertex_index(name)] = 1;
  for (std::size_t u = 0; u < G.vertex_count(); ++u) {
    if (in_sub[u]) continue;
    for (std::size_t v = 0; v < G.vertex_count(); ++v)
      if (in_sub[v] && u != v && G.has_edge((int)u, (int)v)) return false;
  }
  return true;
}

std::vector<int> complement_vertices(const Digraph& G, const Digraph& sub) {
  std::vector<int> out;
  for (std::size_t v = 0; v < G.vertex_count(); ++v)
    if (sub.vertex_index(G.vertices[v]) < 0) out.push_back((int)v);
  return out;
}

}  // namespace eqpath
