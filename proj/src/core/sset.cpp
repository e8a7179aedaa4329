#include "sset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace eqpath {

std::string Violation::to_string() const {
  std::ostringstream os;
  os << law << " at level " << level << ", i=" << i << ", j=" << j
     << ", simplex #" << simplex;
  return os.str();
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.to_string() << "\n";
  return os.str();
}

TruncatedSimplicialSet::TruncatedSimplicialSet(
    int cap, std::vector<std::vector<Key>> keys,
    std::vector<std::vector<std::string>> labels,
    std::vector<std::vector<std::vector<int>>> face,
    std::vector<std::vector<std::vector<int>>> deg)
    : cap_(cap),
      keys_(std::move(keys)),
      labels_(std::move(labels)),
      face_(std::move(face)),
      deg_(std::move(deg)) {
  require_internal(cap_ >= 0 && keys_.size() == std::size_t(cap_) + 1,
                   "sset: level count must be cap+1");
  require_internal(labels_.size() == keys_.size(), "sset: label levels");
  require_internal(face_.size() == keys_.size() && deg_.size() == keys_.size(),
                   "sset: table levels");
  for (int n = 1; n <= cap_; ++n) {
    require_internal(face_[n].size() == std::size_t(n) + 1,
                     "sset: face arity at level " + std::to_string(n));
    for (const auto& col : face_[n])
      require_internal(col.size() == keys_[n].size(), "sset: face table size");
  }
  for (int n = 0; n < cap_; ++n) {
    require_internal(deg_[n].size() == std::size_t(n) + 1,
                     "sset: degeneracy arity at level " + std::to_string(n));
    for (const auto& col : deg_[n])
      require_internal(col.size() == keys_[n].size(),
                       "sset: degeneracy table size");
  }
  compute_degeneracy_flags();
}

void TruncatedSimplicialSet::compute_degeneracy_flags() {
  degenerate_.assign(keys_.size(), {});
  for (int n = 0; n <= cap_; ++n) {
    degenerate_[n].assign(keys_[n].size(), 0);
    if (n == 0) continue;
    for (std::size_t idx = 0; idx < keys_[n].size(); ++idx) {
      // x degenerate iff x = s_i(d_i x) for some i < n
      for (int i = 0; i < n; ++i) {
        int fy = face_[n][i][idx];
        if (deg_[n - 1][i][fy] == static_cast<int>(idx)) {
          degenerate_[n][idx] = 1;
          break;
        }
      }
    }
  }
}

int TruncatedSimplicialSet::index_of(int n, const Key& k) const {
  if (n < 0 || n > cap_) return -1;
  auto it = std::lower_bound(keys_[n].begin(), keys_[n].end(), k);
  if (it == keys_[n].end() || *it != k) return -1;
  return static_cast<int>(it - keys_[n].begin());
}

int TruncatedSimplicialSet::apply_degeneracies(int n, int idx,
                                               const std::vector<int>& v) const {
  int lvl = n, cur = idx;
  for (int s : v) {
    require_internal(s <= lvl && lvl + 1 <= cap_,
                     "apply_degeneracies: out of range");
    cur = deg_[lvl][s][cur];
    ++lvl;
  }
  return cur;
}

int TruncatedSimplicialSet::front_face_iterate(int n, int idx,
                                               int times) const {
  int lvl = n, cur = idx;
  for (int t = 0; t < times; ++t) {
    cur = face_[lvl][lvl][cur];  // top face
    --lvl;
  }
  return cur;
}

int TruncatedSimplicialSet::back_face_iterate(int n, int idx, int times) const {
  int lvl = n, cur = idx;
  for (int t = 0; t < times; ++t) {
    cur = face_[lvl][0][cur];
    --lvl;
  }
  return cur;
}

ValidationReport TruncatedSimplicialSet::validate() const {
  ValidationReport rep;
  auto note = [&rep](const char* law, int level, int i, int j, int idx) {
    rep.violations.push_back({law, level, i, j, idx});
  };
  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= cap_; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (std::size_t idx = 0; idx < keys_[n].size(); ++idx) {
          int lhs = face_[n - 1][i][face_[n][j][idx]];
          int rhs = face_[n - 1][j - 1][face_[n][i][idx]];
          if (lhs != rhs) note("d_i d_j = d_{j-1} d_i", n, i, j, (int)idx);
        }
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int n = 0; n + 2 <= cap_; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (std::size_t idx = 0; idx < keys_[n].size(); ++idx) {
          int lhs = deg_[n + 1][i][deg_[n][j][idx]];
          int rhs = deg_[n + 1][j + 1][deg_[n][i][idx]];
          if (lhs != rhs) note("s_i s_j = s_{j+1} s_i", n, i, j, (int)idx);
        }
  // face/degeneracy interchange
  for (int n = 0; n + 1 <= cap_; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (std::size_t idx = 0; idx < keys_[n].size(); ++idx) {
          int sj = deg_[n][j][idx];
          int lhs = face_[n + 1][i][sj];
          int rhs;
          if (i < j) {
            if (n == 0) continue;  // d_i on level n undefined at n = 0
            rhs = deg_[n - 1][j - 1][face_[n][i][idx]];
          } else if (i == j || i == j + 1) {
            rhs = static_cast<int>(idx);
          } else {  // i > j + 1
            if (n == 0) continue;
            rhs = deg_[n - 1][j][face_[n][i - 1][idx]];
          }
          if (lhs != rhs) note("d_i s_j interchange", n, i, j, (int)idx);
        }
  return rep;
}

SSetBuilder::SSetBuilder(int cap) : cap_(cap) {
  keys_.resize(cap + 1);
  labels_.resize(cap + 1);
}

void SSetBuilder::add_simplex(int n, Key key, std::string label) {
  require_internal(!finalized_, "builder already finalized");
  require_internal(n >= 0 && n <= cap_, "level out of range");
  keys_[n].push_back(std::move(key));
  labels_[n].push_back(std::move(label));
}

void SSetBuilder::finalize_levels() {
  for (int n = 0; n <= cap_; ++n) {
    std::vector<std::size_t> order(keys_[n].size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [this, n](std::size_t a, std::size_t b) {
      return keys_[n][a] < keys_[n][b];
    });
    std::vector<Key> k;
    std::vector<std::string> l;
    k.reserve(order.size());
    l.reserve(order.size());
    for (std::size_t i : order) {
      if (!k.empty() && keys_[n][i] == k.back()) continue;  // dedupe
      k.push_back(keys_[n][i]);
      l.push_back(labels_[n][i]);
    }
    keys_[n] = std::move(k);
    labels_[n] = std::move(l);
  }
  finalized_ = true;
}

int SSetBuilder::index_of(int n, const Key& k) const {
  auto it = std::lower_bound(keys_[n].begin(), keys_[n].end(), k);
  if (it == keys_[n].end() || *it != k) return -1;
  return static_cast<int>(it - keys_[n].begin());
}

TruncatedSimplicialSet SSetBuilder::build(
    const std::function<Key(int, int, const Key&)>& face_fn,
    const std::function<Key(int, int, const Key&)>& deg_fn) {
  require_internal(finalized_, "finalize_levels() before build()");
  std::vector<std::vector<std::vector<int>>> face(cap_ + 1), deg(cap_ + 1);
  for (int n = 1; n <= cap_; ++n) {
    face[n].assign(n + 1, std::vector<int>(keys_[n].size(), -1));
    for (int i = 0; i <= n; ++i)
      for (std::size_t idx = 0; idx < keys_[n].size(); ++idx) {
        int t = index_of(n - 1, face_fn(i, n, keys_[n][idx]));
        require_internal(t >= 0, "face image missing from level " +
                                     std::to_string(n - 1));
        face[n][i][idx] = t;
      }
  }
  for (int n = 0; n < cap_; ++n) {
    deg[n].assign(n + 1, std::vector<int>(keys_[n].size(), -1));
    for (int i = 0; i <= n; ++i)
      for (std::size_t idx = 0; idx < keys_[n].size(); ++idx) {
        int t = index_of(n + 1, deg_fn(i, n, keys_[n][idx]));
        require_internal(t >= 0, "degeneracy image missing from level " +
                                     std::to_string(n + 1));
        deg[n][i][idx] = t;
      }
  }
  return TruncatedSimplicialSet(cap_, keys_, labels_, std::move(face),
                                std::move(deg));
}

NormalizedComplex normalized_complex(const TruncatedSimplicialSet& X,
                                     Ring ring, int maxdeg) {
  if (maxdeg > X.cap())
    fail(ErrorCode::Cap, "normalized_complex: maxdeg " +
                             std::to_string(maxdeg) + " exceeds cap " +
                             std::to_string(X.cap()));
  NormalizedComplex N{ring, maxdeg, {}, {}, {}};
  N.basis.resize(maxdeg + 1);
  N.pos.resize(maxdeg + 1);
  for (int n = 0; n <= maxdeg; ++n) {
    N.pos[n].assign(X.size(n), -1);
    for (std::size_t idx = 0; idx < X.size(n); ++idx)
      if (!X.is_degenerate(n, (int)idx)) {
        N.pos[n][idx] = static_cast<int>(N.basis[n].size());
        N.basis[n].push_back((int)idx);
      }
  }
  N.diff.resize(maxdeg + 1, ExactMatrix(0, 0, ring));
  N.diff[0] = ExactMatrix(0, N.basis[0].size(), ring);
  for (int n = 1; n <= maxdeg; ++n) {
    ExactMatrix d(N.basis[n - 1].size(), N.basis[n].size(), ring);
    for (std::size_t c = 0; c < N.basis[n].size(); ++c) {
      int idx = N.basis[n][c];
      for (int i = 0; i <= n; ++i) {
        int f = X.face(i, n, idx);
        int p = N.pos[n - 1][f];
        if (p < 0) continue;  // degenerate face vanishes
        d.add_to(p, c, (i % 2 == 0) ? Rat(1) : Rat(-1));
      }
    }
    N.diff[n] = std::move(d);
  }
  return N;
}

ExactMatrix simplex_chain(const NormalizedComplex& N, int n, int idx) {
  ExactMatrix v(N.dim(n), 1, N.ring);
  int p = N.pos[n][idx];
  if (p >= 0) v.set(p, 0, 1);
  return v;
}

TruncatedSimplicialSet product(
    const TruncatedSimplicialSet& X, const TruncatedSimplicialSet& Y,
    const std::function<int(int n, int xidx, int f0)>* twist) {
  if (X.cap() != Y.cap())
    fail(ErrorCode::Cap, "product: cap mismatch (" + std::to_string(X.cap()) +
                             " vs " + std::to_string(Y.cap()) + ")");
  int cap = X.cap();
  std::vector<std::vector<Key>> keys(cap + 1);
  std::vector<std::vector<std::string>> labels(cap + 1);
  std::vector<std::vector<std::vector<int>>> face(cap + 1), deg(cap + 1);
  for (int n = 0; n <= cap; ++n) {
    std::size_t xs = X.size(n), ys = Y.size(n);
    keys[n].reserve(xs * ys);
    labels[n].reserve(xs * ys);
    for (std::size_t ix = 0; ix < xs; ++ix)
      for (std::size_t iy = 0; iy < ys; ++iy) {
        keys[n].push_back({(int)ix, (int)iy});
        labels[n].push_back("(" + X.label(n, (int)ix) + "|" +
                            Y.label(n, (int)iy) + ")");
      }
  }
  for (int n = 1; n <= cap; ++n) {
    std::size_t ys = Y.size(n), ysm = Y.size(n - 1);
    face[n].assign(n + 1, std::vector<int>(keys[n].size(), -1));
    for (std::size_t idx = 0; idx < keys[n].size(); ++idx) {
      auto [ix, iy] = pair_split(ys, (int)idx);
      for (int i = 0; i <= n; ++i) {
        int fx = X.face(i, n, ix);
        int fy = Y.face(i, n, iy);
        if (i == 0 && twist) fy = (*twist)(n, ix, fy);
        face[n][i][idx] = pair_index(ysm, fx, fy);
      }
    }
  }
  for (int n = 0; n < cap; ++n) {
    std::size_t ys = Y.size(n), ysp = Y.size(n + 1);
    deg[n].assign(n + 1, std::vector<int>(keys[n].size(), -1));
    for (std::size_t idx = 0; idx < keys[n].size(); ++idx) {
      auto [ix, iy] = pair_split(ys, (int)idx);
      for (int i = 0; i <= n; ++i)
        deg[n][i][idx] =
            pair_index(ysp, X.degeneracy(i, n, ix), Y.degeneracy(i, n, iy));
    }
  }
  return TruncatedSimplicialSet(cap, std::move(keys), std::move(labels),
                                std::move(face), std::move(deg));
}

std::vector<ShuffleIndex> shuffles(int p, int q) {
  std::vector<ShuffleIndex> out;
  int n = p + q;
  // enumerate mu (size p) lexicographically; nu is the complement
  std::vector<int> mu(p);
  for (int i = 0; i < p; ++i) mu[i] = i;
  auto emit = [&]() {
    ShuffleIndex s;
    s.p = p;
    s.q = q;
    s.mu = mu;
    std::vector<char> in_mu(n, 0);
    for (int m : mu) in_mu[m] = 1;
    for (int i = 0; i < n; ++i)
      if (!in_mu[i]) s.nu.push_back(i);
    long long transpositions = 0;
    for (int i = 0; i < p; ++i) transpositions += mu[i] - i;
    s.sign = (transpositions % 2 == 0) ? 1 : -1;
    out.push_back(std::move(s));
  };
  if (p == 0) {
    emit();
    return out;
  }
  for (;;) {
    emit();
    int k = p - 1;
    while (k >= 0 && mu[k] == n - p + k) --k;
    if (k < 0) break;
    ++mu[k];
    for (int j = k + 1; j < p; ++j) mu[j] = mu[j - 1] + 1;
  }
  return out;
}

ExactMatrix shuffle_matrix(const TruncatedSimplicialSet& X,
                           const TruncatedSimplicialSet& Y,
                           const TruncatedSimplicialSet& P,
                           const NormalizedComplex& NX,
                           const NormalizedComplex& NY,
                           const NormalizedComplex& NP, int p, int q) {
  int n = p + q;
  require_internal(n <= P.cap(), "shuffle_matrix: cap exceeded");
  auto sh = shuffles(p, q);
  std::size_t dx = NX.dim(p), dy = NY.dim(q);
  ExactMatrix m(NP.dim(n), dx * dy, NP.ring);
  for (std::size_t bx = 0; bx < dx; ++bx) {
    int xi = NX.basis[p][bx];
    for (std::size_t by = 0; by < dy; ++by) {
      int yi = NY.basis[q][by];
      std::size_t col = bx * dy + by;
      for (const auto& s : sh) {
        int sx = X.apply_degeneracies(p, xi, s.nu);
        int sy = Y.apply_degeneracies(q, yi, s.mu);
        int pi = pair_index(Y.size(n), sx, sy);
        int pos = NP.pos[n][pi];
        if (pos < 0) continue;  // degenerate pair drops out
        m.add_to(pos, col, Rat(s.sign));
      }
    }
  }
  return m;
}

ExactMatrix aw_matrix(const TruncatedSimplicialSet& X,
                      const TruncatedSimplicialSet& Y,
                      const TruncatedSimplicialSet& P,
                      const NormalizedComplex& NX, const NormalizedComplex& NY,
                      const NormalizedComplex& NP, int n) {
  require_internal(n <= P.cap(), "aw_matrix: cap exceeded");
  std::vector<std::size_t> block_offset(n + 2, 0);
  for (int p = 0; p <= n; ++p)
    block_offset[p + 1] = block_offset[p] + NX.dim(p) * NY.dim(n - p);
  ExactMatrix m(block_offset[n + 1], NP.dim(n), NP.ring);
  for (std::size_t c = 0; c < NP.dim(n); ++c) {
    int zi = NP.basis[n][c];
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      // front: iterated top faces in P, then left component
      int fr = P.front_face_iterate(n, zi, q);
      int xi = pair_split(Y.size(p), fr).first;
      if (NX.pos[p][xi] < 0) continue;
      // back: iterated 0-faces in P (twisted products twist here)
      int bk = P.back_face_iterate(n, zi, p);
      int yi = pair_split(Y.size(q), bk).second;
      if (NY.pos[q][yi] < 0) continue;
      std::size_t row = block_offset[p] +
                        std::size_t(NX.pos[p][xi]) * NY.dim(q) +
                        NY.pos[q][yi];
      m.add_to(row, c, 1);
    }
  }
  return m;
}

ValidationReport validate_simplicial_map(const TruncatedSimplicialSet& X,
                                         const TruncatedSimplicialSet& Y,
                                         const SSetMap& f) {
  ValidationReport rep;
  for (int n = 1; n <= X.cap(); ++n)
    for (int i = 0; i <= n; ++i)
      for (std::size_t idx = 0; idx < X.size(n); ++idx) {
        int lhs = Y.face(i, n, f.level[n][idx]);
        int rhs = f.level[n - 1][X.face(i, n, (int)idx)];
        if (lhs != rhs)
          rep.violations.push_back({"map vs d_i", n, i, 0, (int)idx});
      }
  for (int n = 0; n < X.cap(); ++n)
    for (int i = 0; i <= n; ++i)
      for (std::size_t idx = 0; idx < X.size(n); ++idx) {
        int lhs = Y.degeneracy(i, n, f.level[n][idx]);
        int rhs = f.level[n + 1][X.degeneracy(i, n, (int)idx)];
        if (lhs != rhs)
          rep.violations.push_back({"map vs s_i", n, i, 0, (int)idx});
      }
  return rep;
}

ExactMatrix induced_chain_matrix(const TruncatedSimplicialSet& X,
                                 const TruncatedSimplicialSet& Y,
                                 const SSetMap& f, const NormalizedComplex& NX,
                                 const NormalizedComplex& NY, int n) {
  (void)X;
  (void)Y;
  ExactMatrix m(NY.dim(n), NX.dim(n), NY.ring);
  for (std::size_t c = 0; c < NX.dim(n); ++c) {
    int img = f.level[n][NX.basis[n][c]];
    int pos = NY.pos[n][img];
    if (pos >= 0) m.set(pos, c, 1);
  }
  return m;
}

}  // namespace eqpath
