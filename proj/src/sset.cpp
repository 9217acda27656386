#include "cx/sset.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cx {

// ---------------------------------------------------------------------------
// Monotone-map calculus
// ---------------------------------------------------------------------------
bool is_monotone(const Mono& f) {
  for (size_t i = 0; i + 1 < f.size(); ++i)
    if (f[i] > f[i + 1]) return false;
  return !f.empty() && f.front() >= 0;
}

bool is_surj(const Mono& f, int target_dim) {
  std::vector<char> hit(target_dim + 1, 0);
  for (int v : f) {
    if (v < 0 || v > target_dim) return false;
    hit[v] = 1;
  }
  for (char h : hit)
    if (!h) return false;
  return true;
}

bool is_identity(const Mono& f, int target_dim) {
  if ((int)f.size() != target_dim + 1) return false;
  for (int i = 0; i <= target_dim; ++i)
    if (f[i] != i) return false;
  return true;
}

Mono mono_id(int m) {
  Mono f(m + 1);
  for (int i = 0; i <= m; ++i) f[i] = i;
  return f;
}

Mono mono_delta(int i, int m) {
  Mono f;
  f.reserve(m);
  for (int v = 0; v <= m; ++v)
    if (v != i) f.push_back(v);
  return f;
}

Mono mono_sigma(int j, int m) {
  Mono f;
  f.reserve(m + 2);
  for (int v = 0; v <= m; ++v) {
    f.push_back(v);
    if (v == j) f.push_back(v);
  }
  return f;
}

Mono mono_compose(const Mono& f, const Mono& g) {
  Mono h(g.size());
  for (size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
  return h;
}

Mono sur_of_word(const std::vector<int>& word, int m) {
  // word is strictly decreasing; apply the lowest degeneracy innermost.
  Mono f = mono_id(m - (int)word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int cur = (int)f.size() - 1;
    f = mono_compose(f, mono_sigma(*it, cur));
  }
  return f;
}

std::vector<int> word_of_sur(const Mono& f) {
  // Strictly decreasing list of j with f(j) == f(j+1), read from a surjection.
  std::vector<int> w;
  // Peel repeats from the top so the word comes out strictly decreasing and
  // matches sur_of_word's convention.
  Mono g = f;
  while (true) {
    int j = -1;
    for (int i = (int)g.size() - 2; i >= 0; --i)
      if (g[i] == g[i + 1]) { j = i; break; }
    if (j < 0) break;
    w.push_back(j);
    g.erase(g.begin() + j);
  }
  return w;
}

// ---------------------------------------------------------------------------
// SSet basics
// ---------------------------------------------------------------------------
int SSet::dim() const {
  int d = -1;
  for (const auto& g : gens) d = std::max(d, g.dim);
  return d;
}

size_t SSet::count(int d) const {
  size_t c = 0;
  for (const auto& g : gens)
    if (g.dim == d) ++c;
  return c;
}

std::vector<size_t> SSet::counts() const {
  std::vector<size_t> c(dim() + 1, 0);
  for (const auto& g : gens) c[g.dim]++;
  return c;
}

Mono sur_of(const SSet& X, const Simplex& x) {
  return sur_of_word(x.word, X.dim_of(x));
}

namespace {
// X(beta) applied to a generator, beta : [m] -> [dim gen].
Simplex act_gen(const SSet& X, int gen, Mono beta) {
  int n = X.gens[gen].dim;
  while (true) {
    if (is_surj(beta, n)) return Simplex{gen, word_of_sur(beta)};
    // Peel the largest missed value as a face.
    std::vector<char> hit(n + 1, 0);
    for (int v : beta) hit[v] = 1;
    int b = n;
    while (hit[b]) --b;
    const Simplex& f = X.gens[gen].faces[b];
    for (int& v : beta)
      if (v > b) --v;
    // Compose with the face's own degeneracy word and continue.
    beta = mono_compose(sur_of(X, f), beta);
    gen = f.gen;
    n = X.gens[gen].dim;
  }
}
}  // namespace

Simplex act(const SSet& X, const Simplex& x, const Mono& beta) {
  return act_gen(X, x.gen, mono_compose(sur_of(X, x), beta));
}

Simplex face(const SSet& X, const Simplex& x, int i) {
  return act(X, x, mono_delta(i, X.dim_of(x)));
}

Simplex degen(const SSet& X, const Simplex& x, int j) {
  return act(X, x, mono_sigma(j, X.dim_of(x)));
}

bool deg_at(const SSet& X, const Simplex& x, int j) {
  Mono s = sur_of(X, x);
  return s[j] == s[j + 1];
}

bool SSet::validate(std::string* err) const {
  auto fail = [&](const std::string& m) {
    if (err) *err = m;
    return false;
  };
  for (size_t gi = 0; gi < gens.size(); ++gi) {
    const Gen& g = gens[gi];
    if (g.dim < 0) return fail("negative dimension");
    if ((int)g.faces.size() != (g.dim == 0 ? 0 : g.dim + 1))
      return fail("bad face count on generator " + std::to_string(gi));
    for (const Simplex& f : g.faces) {
      if (f.gen < 0 || f.gen >= (int)gens.size()) return fail("face out of range");
      if (dim_of(f) != g.dim - 1) return fail("face dimension mismatch");
    }
    // d_i d_j = d_{j-1} d_i for i < j
    if (g.dim >= 2) {
      Simplex top{(int)gi, {}};
      for (int j = 1; j <= g.dim; ++j)
        for (int i = 0; i < j; ++i) {
          Simplex a = face(*this, face(*this, top, j), i);
          Simplex b = face(*this, face(*this, top, i), j - 1);
          if (a != b) return fail("simplicial identity fails on generator " + std::to_string(gi));
        }
    }
  }
  return true;
}

std::vector<Simplex> simplices(const SSet& X, int m) {
  std::vector<Simplex> out;
  for (int gi = 0; gi < (int)X.gens.size(); ++gi) {
    int d = X.gens[gi].dim;
    if (d > m) continue;
    int k = m - d;  // word length, indices from {0..m-1} strictly decreasing
    // Enumerate k-subsets of {0..m-1} as decreasing words.
    std::vector<int> idx(k);
    // combinations in lexicographic order of the increasing representation
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    if (k == 0) {
      out.push_back(Simplex{gi, {}});
      continue;
    }
    if (k > m) continue;
    while (true) {
      std::vector<int> w(c.rbegin(), c.rend());
      out.push_back(Simplex{gi, w});
      int i = k - 1;
      while (i >= 0 && c[i] == m - k + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Maps
// ---------------------------------------------------------------------------
Simplex map_apply(const SSet& Y, const SMap& f, const SSet& X, const Simplex& x) {
  const Simplex& img = f[x.gen];
  return act(Y, img, sur_of(X, x));
}

bool map_valid(const SSet& X, const SSet& Y, const SMap& f, std::string* err) {
  if (f.size() != X.gens.size()) {
    if (err) *err = "size mismatch";
    return false;
  }
  for (size_t gi = 0; gi < X.gens.size(); ++gi) {
    if (f[gi].gen < 0 || f[gi].gen >= (int)Y.gens.size()) {
      if (err) *err = "image out of range";
      return false;
    }
    if (Y.dim_of(f[gi]) != X.gens[gi].dim) {
      if (err) *err = "image dimension mismatch at generator " + std::to_string(gi);
      return false;
    }
    Simplex top{(int)gi, {}};
    for (int i = 0; i <= X.gens[gi].dim && X.gens[gi].dim > 0; ++i) {
      Simplex a = map_apply(Y, f, X, face(X, top, i));
      Simplex b = face(Y, f[gi], i);
      if (a != b) {
        if (err)
          *err = "face compatibility fails at generator " + std::to_string(gi) +
                 " face " + std::to_string(i);
        return false;
      }
    }
  }
  return true;
}

SMap map_compose(const SSet& X, const SSet& /*Y*/, const SSet& Z, const SMap& f,
                 const SMap& g) {
  SMap h(X.gens.size());
  for (size_t gi = 0; gi < X.gens.size(); ++gi)
    h[gi] = act(Z, g[f[gi].gen], sur_of_word(f[gi].word, X.gens[gi].dim));
  return h;
}

SMap map_identity(const SSet& X) {
  SMap f(X.gens.size());
  for (size_t gi = 0; gi < X.gens.size(); ++gi) f[gi] = Simplex{(int)gi, {}};
  return f;
}

bool map_mono(const SSet& X, const SSet& Y, const SMap& f) {
  // A simplicial map is mono iff it is injective on nondegenerate simplices
  // and images of distinct generators stay nondegenerate and distinct.
  std::set<Simplex> seen;
  for (size_t gi = 0; gi < X.gens.size(); ++gi) {
    if (f[gi].degenerate()) return false;
    if (!seen.insert(f[gi]).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Standard simplicial sets
// ---------------------------------------------------------------------------
SSet empty_sset() { return SSet{}; }

namespace {
struct DeltaCache {
  std::vector<std::vector<int>> verts;          // id -> vertex list
  std::map<std::vector<int>, int> ids;          // vertex list -> id
  SSet X;
};

const DeltaCache& delta_cache(int n) {
  static std::map<int, DeltaCache> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  DeltaCache dc;
  // Enumerate nonempty subsets ordered by (size, lexicographic).
  for (int sz = 1; sz <= n + 1; ++sz) {
    std::vector<int> c(sz);
    for (int i = 0; i < sz; ++i) c[i] = i;
    while (true) {
      dc.ids[c] = (int)dc.verts.size();
      dc.verts.push_back(c);
      int i = sz - 1;
      while (i >= 0 && c[i] == n - sz + 1 + i) --i;
      if (i < 0) break;
      ++c[i];
      for (int j = i + 1; j < sz; ++j) c[j] = c[j - 1] + 1;
    }
  }
  dc.X.gens.resize(dc.verts.size());
  for (size_t id = 0; id < dc.verts.size(); ++id) {
    const auto& v = dc.verts[id];
    Gen g;
    g.dim = (int)v.size() - 1;
    if (g.dim > 0)
      for (int i = 0; i <= g.dim; ++i) {
        std::vector<int> w = v;
        w.erase(w.begin() + i);
        g.faces.push_back(Simplex{dc.ids.at(w), {}});
      }
    dc.X.gens[id] = g;
  }
  auto [iter, ok] = cache.emplace(n, std::move(dc));
  (void)ok;
  return iter->second;
}
}  // namespace

SSet delta(int n) { return delta_cache(n).X; }

int delta_id(int n, const std::vector<int>& verts) {
  return delta_cache(n).ids.at(verts);
}

const std::vector<int>& delta_verts(int n, int id) {
  return delta_cache(n).verts[id];
}

Simplex delta_simplex(int n, const Mono& f) {
  std::vector<int> core;
  for (int v : f)
    if (core.empty() || core.back() != v) core.push_back(v);
  Mono sur(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    sur[i] = (int)(std::lower_bound(core.begin(), core.end(), f[i]) - core.begin());
  return Simplex{delta_id(n, core), word_of_sur(sur)};
}

Mono delta_mono(int n, const SSet& D, const Simplex& x) {
  const auto& verts = delta_cache(n).verts[x.gen];
  Mono s = sur_of(D, x);
  Mono f(s.size());
  for (size_t i = 0; i < s.size(); ++i) f[i] = verts[s[i]];
  return f;
}

std::pair<SSet, SMap> subcomplex(const SSet& X, const std::set<int>& keep) {
  // Close under faces.
  std::set<int> cl = keep;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int gi : std::vector<int>(cl.begin(), cl.end()))
      for (const Simplex& f : X.gens[gi].faces)
        if (cl.insert(f.gen).second) changed = true;
  }
  // Renumber preserving order (dims are automatically face-closed).
  std::map<int, int> re;
  std::vector<int> order(cl.begin(), cl.end());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return X.gens[a].dim != X.gens[b].dim ? X.gens[a].dim < X.gens[b].dim : a < b;
  });
  for (size_t i = 0; i < order.size(); ++i) re[order[i]] = (int)i;
  SSet S;
  S.gens.resize(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    Gen g = X.gens[order[i]];
    for (Simplex& f : g.faces) f.gen = re.at(f.gen);
    S.gens[i] = g;
  }
  SMap incl(order.size());
  for (size_t i = 0; i < order.size(); ++i) incl[i] = Simplex{order[i], {}};
  return {S, incl};
}

SSet boundary(int n, SMap* incl) {
  const SSet D = delta(n);
  std::set<int> keep;
  for (int gi = 0; gi < (int)D.gens.size(); ++gi)
    if (D.gens[gi].dim < n) keep.insert(gi);
  auto [S, i] = subcomplex(D, keep);
  if (incl) *incl = i;
  return S;
}

SSet horn(int n, int k, SMap* incl) {
  const SSet D = delta(n);
  std::set<int> keep;
  for (int gi = 0; gi < (int)D.gens.size(); ++gi) {
    if (D.gens[gi].dim == n) continue;
    if (D.gens[gi].dim == n - 1) {
      // skip the face opposite vertex k
      const auto& v = delta_verts(n, gi);
      bool hask = std::binary_search(v.begin(), v.end(), k);
      if (!hask) continue;
    }
    keep.insert(gi);
  }
  auto [S, i] = subcomplex(D, keep);
  if (incl) *incl = i;
  return S;
}

// ---------------------------------------------------------------------------
// Product
// ---------------------------------------------------------------------------
PairSimplex normalize_pair(const SSet& X, const SSet& Y, Simplex x, Simplex y) {
  std::vector<int> word;
  while (true) {
    int m = X.dim_of(x);
    Mono sx = sur_of(X, x), sy = sur_of(Y, y);
    int j = -1;
    for (int i = m - 1; i >= 0; --i)
      if (sx[i] == sx[i + 1] && sy[i] == sy[i + 1]) { j = i; break; }
    if (j < 0) break;
    Mono d = mono_delta(j, m);  // section of sigma_j
    x = act(X, x, d);
    y = act(Y, y, d);
    // Record in increasing-application order; combine at the end.
    word.push_back(j);
  }
  // The collected js were peeled top-down; rebuild the canonical word by
  // composing the corresponding sigmas.
  int m0 = X.dim_of(x) + (int)word.size();
  Mono sur = mono_id(X.dim_of(x));
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    sur = mono_compose(sur, mono_sigma(*it, (int)sur.size() - 1));
  (void)m0;
  return PairSimplex{x, y, word_of_sur(sur)};
}

Simplex Product::embed(const SSet& X, const SSet& Y, const Simplex& x,
                       const Simplex& y) const {
  PairSimplex p = normalize_pair(X, Y, x, y);
  return Simplex{id_of.at({p.x, p.y}), p.word};
}

Product product(const SSet& X, const SSet& Y) {
  Product P;
  int dmax = std::max(X.dim(), -1) + std::max(Y.dim(), -1);
  if (X.dim() < 0 || Y.dim() < 0) dmax = -1;
  // Collect generators dimension by dimension.
  for (int m = 0; m <= dmax; ++m) {
    auto xs = simplices(X, m);
    auto ys = simplices(Y, m);
    for (const Simplex& x : xs)
      for (const Simplex& y : ys) {
        // jointly nondegenerate?
        bool joint = true;
        Mono sx = sur_of_word(x.word, m), sy = sur_of_word(y.word, m);
        for (int i = 0; i < m && joint; ++i)
          if (sx[i] == sx[i + 1] && sy[i] == sy[i + 1]) joint = false;
        if (!joint) continue;
        P.id_of[{x, y}] = (int)P.pair_of.size();
        P.pair_of.push_back({x, y});
      }
  }
  P.P.gens.resize(P.pair_of.size());
  for (size_t id = 0; id < P.pair_of.size(); ++id) {
    const auto& [x, y] = P.pair_of[id];
    Gen g;
    g.dim = X.dim_of(x);
    if (g.dim > 0)
      for (int i = 0; i <= g.dim; ++i) {
        PairSimplex f = normalize_pair(X, Y, face(X, x, i), face(Y, y, i));
        g.faces.push_back(Simplex{P.id_of.at({f.x, f.y}), f.word});
      }
    P.P.gens[id] = g;
  }
  return P;
}

// ---------------------------------------------------------------------------
// Colimits
// ---------------------------------------------------------------------------
Colimit colimit(const Diagram& D) {
  DiaRef R;
  for (const SSet& X : D.obs) R.obs.push_back(&X);
  for (const Arr& a : D.arrs) R.arrs.push_back({a.s, a.t, &a.img});
  return colimit(R);
}

Colimit colimit(const DiaRef& D) {
  int dmax = -1;
  for (const SSet* X : D.obs) dmax = std::max(dmax, X->dim());

  auto find = [](std::vector<int>& uf, int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };

  Colimit C;
  C.inj.resize(D.obs.size());
  for (size_t i = 0; i < D.obs.size(); ++i)
    C.inj[i].assign(D.obs[i]->gens.size(), Simplex{-1, {}});

  // The colimit is computed levelwise, but the per-level equivalence is
  // generated on nondegenerate generators alone: the class of a degenerate
  // simplex is determined by the levels below, and two degenerate simplices
  // are identified exactly when their colimit expressions agree (Eilenberg-
  // Zilber uniqueness). Arrows therefore union generator nodes directly; a
  // degenerate image is recorded as a virtual node keyed by its expression.
  auto expr_of = [&](int oi, const Simplex& x, int m) -> Simplex {
    const Simplex& e = C.inj[oi][x.gen];
    if (x.word.empty()) return e;
    int hd = m - (int)x.word.size();
    if (e.word.empty()) return Simplex{e.gen, x.word};
    Mono sur = mono_compose(sur_of_word(e.word, hd), sur_of_word(x.word, m));
    return Simplex{e.gen, word_of_sur(sur)};
  };

  for (int m = 0; m <= dmax; ++m) {
    std::vector<std::pair<int, int>> gnodes;  // (obj, gen), dimension m
    std::map<std::pair<int, int>, int> node_of;
    for (int oi = 0; oi < (int)D.obs.size(); ++oi)
      for (size_t gi = 0; gi < D.obs[oi]->gens.size(); ++gi)
        if (D.obs[oi]->gens[gi].dim == m) {
          node_of[{oi, (int)gi}] = (int)gnodes.size();
          gnodes.push_back({oi, (int)gi});
        }
    int ng = (int)gnodes.size();
    std::vector<int> uf(ng);
    for (int i = 0; i < ng; ++i) uf[i] = i;
    std::vector<Simplex> vexpr;
    std::map<Simplex, int> vnode;
    auto vget = [&](const Simplex& e) {
      auto it = vnode.find(e);
      if (it != vnode.end()) return it->second;
      int id = (int)uf.size();
      uf.push_back(id);
      vnode.emplace(e, id);
      vexpr.push_back(e);
      return id;
    };
    auto unite = [&](int a, int b) {
      a = find(uf, a);
      b = find(uf, b);
      if (a != b) uf[std::max(a, b)] = std::min(a, b);
    };
    for (const DiaRef::Arrow& a : D.arrs)
      for (size_t gi = 0; gi < D.obs[a.s]->gens.size(); ++gi) {
        if (D.obs[a.s]->gens[gi].dim != m) continue;
        const Simplex& img = (*a.img)[gi];
        int src = node_of.at({a.s, (int)gi});
        if (img.word.empty())
          unite(src, node_of.at({a.t, img.gen}));
        else
          unite(src, vget(expr_of(a.t, img, m)));
      }
    // A class containing a virtual node collapses onto that expression;
    // distinct expressions never share a class (the levelwise relation
    // preserves expressions).
    std::vector<Simplex> root_expr(uf.size(), Simplex{-1, {}});
    for (int v = ng; v < (int)uf.size(); ++v) {
      int r = find(uf, v);
      const Simplex& e = vexpr[v - ng];
      if (root_expr[r].gen >= 0 && !(root_expr[r] == e))
        throw std::runtime_error("colimit: inconsistent degenerate images");
      root_expr[r] = e;
    }
    // Remaining classes are new generators, ordered by smallest member.
    for (int i = 0; i < ng; ++i) {
      if (find(uf, i) != i || root_expr[i].gen >= 0) continue;
      auto [oi, gi] = gnodes[i];
      Gen g;
      g.dim = m;
      for (int k = 0; k < m + (m > 0 ? 1 : 0); ++k)
        g.faces.push_back(
            expr_of(oi, D.obs[oi]->gens[gi].faces[k], m - 1));
      root_expr[i] = Simplex{(int)C.X.gens.size(), {}};
      C.X.gens.push_back(g);
    }
    for (int i = 0; i < ng; ++i) {
      auto [oi, gi] = gnodes[i];
      C.inj[oi][gi] = root_expr[find(uf, i)];
    }
  }
  return C;
}

std::optional<SMap> mediating(const Diagram& D, const Colimit& C, const SSet& Z,
                              const std::vector<SMap>& cocone, bool check_cocone) {
  if (check_cocone)
    for (const Arr& a : D.arrs) {
      SMap lhs = map_compose(D.obs[a.s], D.obs[a.t], Z, a.img, cocone[a.t]);
      if (lhs != cocone[a.s]) return std::nullopt;
    }
  SMap u(C.X.gens.size(), Simplex{-1, {}});
  for (size_t oi = 0; oi < D.obs.size(); ++oi)
    for (size_t gi = 0; gi < D.obs[oi].gens.size(); ++gi) {
      const Simplex& target = C.inj[oi][gi];
      Simplex val = cocone[oi][gi];
      if (target.degenerate()) continue;  // determined by lower generators
      if (u[target.gen].gen >= 0 && u[target.gen] != val) return std::nullopt;
      u[target.gen] = val;
    }
  // Degenerate-image generators of the colimit never remain unset: every
  // colimit generator is hit by some injection nondegenerately.
  for (const Simplex& s : u)
    if (s.gen < 0) return std::nullopt;
  if (!map_valid(C.X, Z, u)) return std::nullopt;
  return u;
}

Pushout pushout(const SSet& A, const SSet& B, const SSet& C, const SMap& f,
                const SMap& g) {
  Pushout P;
  P.dia.obs = {A, B, C};
  P.dia.arrs = {Arr{0, 1, f}, Arr{0, 2, g}};
  P.col = colimit(P.dia);
  P.P = P.col.X;
  P.from_b = P.col.inj[1];
  P.from_c = P.col.inj[2];
  return P;
}

Pushout collapse(const SSet& A, const SSet& X, const SMap& incl) {
  SSet pt = delta(0);
  SMap to_pt(A.gens.size());
  for (size_t gi = 0; gi < A.gens.size(); ++gi) {
    int d = A.gens[gi].dim;
    std::vector<int> w(d);
    for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
    to_pt[gi] = Simplex{0, w};
  }
  return pushout(A, X, pt, incl, to_pt);
}

std::optional<SMap> iso_search(const SSet& X, const SSet& Y) {
  return iso_search(X, Y, [](int, int) { return true; });
}

std::optional<SMap> iso_search(const SSet& X, const SSet& Y,
                               const std::function<bool(int, int)>& okf) {
  if (X.gens.size() != Y.gens.size()) return std::nullopt;
  if (X.counts() != Y.counts()) return std::nullopt;
  // Process generators in dimension order.
  std::vector<int> order(X.gens.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return X.gens[a].dim < X.gens[b].dim;
  });
  SMap f(X.gens.size(), Simplex{-1, {}});
  std::vector<char> used(Y.gens.size(), 0);

  std::vector<int> choice(order.size(), -1);
  int pos = 0;
  while (pos >= 0 && pos < (int)order.size()) {
    int gi = order[pos];
    int d = X.gens[gi].dim;
    int start = choice[pos] + 1;
    int found = -1;
    for (int hj = start; hj < (int)Y.gens.size(); ++hj) {
      if (used[hj] || Y.gens[hj].dim != d || !okf(gi, hj)) continue;
      bool ok = true;
      for (int i = 0; i <= d && d > 0 && ok; ++i) {
        Simplex a = map_apply(Y, f, X, face(X, Simplex{gi, {}}, i));
        if (a != face(Y, Simplex{hj, {}}, i)) ok = false;
      }
      if (ok) { found = hj; break; }
    }
    if (found >= 0) {
      if (choice[pos] >= 0) { /* previous candidate already rolled back */ }
      choice[pos] = found;
      used[found] = 1;
      f[gi] = Simplex{found, {}};
      ++pos;
    } else {
      choice[pos] = -1;
      --pos;
      if (pos >= 0) {
        int pgi = order[pos];
        used[choice[pos]] = 0;
        f[pgi] = Simplex{-1, {}};
      }
    }
  }
  if (pos < 0) return std::nullopt;
  return f;
}

}  // namespace cx
