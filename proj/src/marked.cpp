#include "cx/marked.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace cx {

bool thin(const MSSet& X, const Simplex& x) {
  return x.degenerate() || X.marks.count(x.gen) > 0;
}

bool mmap_valid(const MSSet& X, const MSSet& Y, const SMap& f, std::string* err) {
  if (!map_valid(X.s, Y.s, f, err)) return false;
  for (int g : X.marks)
    if (!thin(Y, f[g])) {
      if (err) *err = "mark not preserved at generator " + std::to_string(g);
      return false;
    }
  return true;
}

MonoClass classify_mono(const MSSet& X, const MSSet& Y, const SMap& f) {
  if (!map_mono(X.s, Y.s, f)) return MonoClass::not_mono;
  bool entire = X.s.gens == Y.s.gens && f == map_identity(X.s);
  if (entire) {
    // entire maps with equal marks are also regular; report entire
    return MonoClass::entire;
  }
  bool regular = true;
  for (size_t g = 0; g < X.s.gens.size() && regular; ++g) {
    if (X.s.gens[g].dim < 1) continue;
    bool marked_here = X.marks.count((int)g) > 0;
    bool marked_there = thin(Y, f[g]);
    if (marked_here != marked_there) regular = false;
  }
  return regular ? MonoClass::regular : MonoClass::neither;
}

// ---------------------------------------------------------------------------
// Standard marked objects
// ---------------------------------------------------------------------------
MSSet m_empty() { return MSSet{empty_sset(), {}}; }
MSSet m_delta(int n) { return MSSet{delta(n), {}}; }

MSSet m_delta_t(int n) {
  MSSet X = m_delta(n);
  if (n >= 1) {
    std::vector<int> all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i;
    X.marks.insert(delta_id(n, all));
  }
  return X;
}

namespace {
// Marks of [n]^k: all simplices containing {k-1,k,k+1} cap [n].
std::set<int> nk_core_marks(int n, int k) {
  std::vector<int> need;
  for (int v : {k - 1, k, k + 1})
    if (v >= 0 && v <= n) need.push_back(v);
  std::set<int> m;
  const SSet D = delta(n);
  for (int g = 0; g < (int)D.gens.size(); ++g) {
    if (D.gens[g].dim < 1) continue;
    const auto& verts = delta_verts(n, g);
    bool all = true;
    for (int v : need)
      if (!std::binary_search(verts.begin(), verts.end(), v)) all = false;
    if (all) m.insert(g);
  }
  return m;
}

int face_of_top(int n, int i) {
  std::vector<int> v;
  for (int p = 0; p <= n; ++p)
    if (p != i) v.push_back(p);
  return delta_id(n, v);
}
}  // namespace

MSSet m_nk(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("m_nk: k out of range");
  return MSSet{delta(n), nk_core_marks(n, k)};
}

MSSet m_nk_p(int n, int k) {
  MSSet X = m_nk(n, k);
  if (n >= 2) {
    if (k - 1 >= 0) X.marks.insert(face_of_top(n, k - 1));
    if (k + 1 <= n) X.marks.insert(face_of_top(n, k + 1));
  }
  return X;
}

MSSet m_nk_pp(int n, int k) {
  MSSet X = m_nk_p(n, k);
  if (n >= 2) X.marks.insert(face_of_top(n, k));
  return X;
}

MSSet m_eq3() {
  MSSet X = m_delta(3);
  X.marks.insert(delta_id(3, {0, 1, 2, 3}));
  X.marks.insert(delta_id(3, {0, 2}));
  X.marks.insert(delta_id(3, {1, 3}));
  return X;
}

MSSet m_sharp(int n) {
  MSSet X = m_delta(n);
  for (int g = 0; g < (int)X.s.gens.size(); ++g)
    if (X.s.gens[g].dim >= 1) X.marks.insert(g);
  return X;
}

MSSet m_horn(int n, int k, SMap* incl_out) {
  SMap incl;
  SSet H = horn(n, k, &incl);
  MSSet T = m_nk(n, k);
  MSSet X{H, {}};
  for (size_t g = 0; g < H.gens.size(); ++g)
    if (H.gens[g].dim >= 1 && thin(T, incl[g])) X.marks.insert((int)g);
  if (incl_out) *incl_out = incl;
  return X;
}

MSSet m_boundary(int n, SMap* incl_out) {
  SMap incl;
  SSet B = boundary(n, &incl);
  if (incl_out) *incl_out = incl;
  return MSSet{B, {}};
}

// ---------------------------------------------------------------------------
// Join
// ---------------------------------------------------------------------------
namespace {
// Simplex of the join from one-sided or two-sided data; gen -1 = empty side.
Simplex join_embed(const MSSet& X, const MSSet& Y,
                   const std::map<std::pair<int, int>, int>& id_of,
                   const Simplex& x, const Simplex& y) {
  if (x.gen < 0) return Simplex{id_of.at({-1, y.gen}), y.word};
  if (y.gen < 0) return Simplex{id_of.at({x.gen, -1}), x.word};
  int dx = X.s.dim_of(x);
  std::vector<int> w;
  for (int j : y.word) w.push_back(j + dx + 1);
  for (int j : x.word) w.push_back(j);
  return Simplex{id_of.at({x.gen, y.gen}), w};
}
}  // namespace

Simplex MJoin::embed(const MSSet& X, const MSSet& Y, const Simplex& x,
                     const Simplex& y) const {
  return join_embed(X, Y, id_of, x, y);
}

MJoin m_join(const MSSet& X, const MSSet& Y) {
  MJoin J;
  // Collect generator keys ordered by dimension then (x,y) ids.
  struct Key {
    int dim, gx, gy;
  };
  std::vector<Key> keys;
  for (int gx = 0; gx < (int)X.s.gens.size(); ++gx)
    keys.push_back({X.s.gens[gx].dim, gx, -1});
  for (int gy = 0; gy < (int)Y.s.gens.size(); ++gy)
    keys.push_back({Y.s.gens[gy].dim, -1, gy});
  for (int gx = 0; gx < (int)X.s.gens.size(); ++gx)
    for (int gy = 0; gy < (int)Y.s.gens.size(); ++gy)
      keys.push_back({X.s.gens[gx].dim + Y.s.gens[gy].dim + 1, gx, gy});
  std::stable_sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.gx != b.gx) return a.gx < b.gx;
    return a.gy < b.gy;
  });
  for (const Key& k : keys) J.id_of[{k.gx, k.gy}] = (int)J.J.s.gens.size(),
                            J.J.s.gens.push_back(Gen{k.dim, {}});
  const Simplex none{-1, {}};
  for (const Key& k : keys) {
    int id = J.id_of.at({k.gx, k.gy});
    Gen& g = J.J.s.gens[id];
    if (g.dim == 0) continue;
    if (k.gx >= 0 && k.gy >= 0) {
      int dx = X.s.gens[k.gx].dim, dy = Y.s.gens[k.gy].dim;
      Simplex sx{k.gx, {}}, sy{k.gy, {}};
      for (int i = 0; i <= g.dim; ++i) {
        if (i <= dx) {
          Simplex fx = dx == 0 ? none : face(X.s, sx, i);
          g.faces.push_back(join_embed(X, Y, J.id_of, fx, sy));
        } else {
          Simplex fy = dy == 0 ? none : face(Y.s, sy, i - dx - 1);
          g.faces.push_back(join_embed(X, Y, J.id_of, sx, fy));
        }
      }
    } else if (k.gx >= 0) {
      for (int i = 0; i <= g.dim; ++i)
        g.faces.push_back(join_embed(X, Y, J.id_of, face(X.s, Simplex{k.gx, {}}, i), none));
    } else {
      for (int i = 0; i <= g.dim; ++i)
        g.faces.push_back(join_embed(X, Y, J.id_of, none, face(Y.s, Simplex{k.gy, {}}, i)));
    }
    // marks
    bool marked = false;
    if (k.gx >= 0 && k.gy >= 0)
      marked = X.marks.count(k.gx) || Y.marks.count(k.gy);
    else if (k.gx >= 0)
      marked = X.marks.count(k.gx) > 0;
    else
      marked = Y.marks.count(k.gy) > 0;
    if (marked && g.dim >= 1) J.J.marks.insert(id);
  }
  return J;
}

SMap m_join_map(const MSSet& X, const MSSet& Y, const MSSet& X2, const MSSet& Y2,
                const SMap& f, const SMap& g, const MJoin& src, const MJoin& dst) {
  SMap h(src.J.s.gens.size());
  const Simplex none{-1, {}};
  for (const auto& [key, id] : src.id_of) {
    auto [gx, gy] = key;
    Simplex ix = gx >= 0 ? f[gx] : none;
    Simplex iy = gy >= 0 ? g[gy] : none;
    h[id] = dst.embed(X2, Y2, ix, iy);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Products and the Gray pre-tensor
// ---------------------------------------------------------------------------
MProd m_product(const MSSet& X, const MSSet& Y) {
  MProd M;
  M.prod = product(X.s, Y.s);
  M.P.s = M.prod.P;
  for (size_t id = 0; id < M.prod.pair_of.size(); ++id) {
    if (M.P.s.gens[id].dim < 1) continue;
    const auto& [x, y] = M.prod.pair_of[id];
    if (thin(X, x) && thin(Y, y)) M.P.marks.insert((int)id);
  }
  return M;
}

bool pretensor_thin(const MSSet& X, const MSSet& Y, const Simplex& x,
                    const Simplex& y) {
  int m = X.s.dim_of(x);
  if (m < 1 || m != Y.s.dim_of(y)) return false;
  if (!thin(X, x) || !thin(Y, y)) return false;
  // Constant simplices impose no interleaving conditions; this makes the
  // pre-tensor strictly unital against the point on both sides.
  bool xconst = X.s.gens[x.gen].dim == 0;
  bool yconst = Y.s.gens[y.gen].dim == 0;
  // A face of dimension 0 counts as thin.
  auto xok = [&](int j) { return m == 1 || thin(X, face(X.s, x, j)); };
  auto yok = [&](int j) { return m == 1 || thin(Y, face(Y.s, y, j)); };
  for (int j = 0; j < m; ++j) {
    bool dx = deg_at(X.s, x, j), dy = deg_at(Y.s, y, j);
    if (dx && !dy) {
      if (!xconst && !yok(j)) return false;
    } else if (dy && !dx) {
      if (!yconst && !xok(j)) return false;
    } else if (!dx && !dy) {
      if (!xok(j) || !yok(j)) return false;
    }
  }
  return true;
}

MProd pretensor(const MSSet& X, const MSSet& Y) {
  MProd M;
  M.prod = product(X.s, Y.s);
  M.P.s = M.prod.P;
  for (size_t id = 0; id < M.prod.pair_of.size(); ++id) {
    if (M.P.s.gens[id].dim < 1) continue;
    const auto& [x, y] = M.prod.pair_of[id];
    if (pretensor_thin(X, Y, x, y)) M.P.marks.insert((int)id);
  }
  return M;
}

MProd tensor(const MSSet& K, const MSSet& L) { return pretensor(truncate(1, K), L); }

SMap m_product_map(const MSSet& X, const MSSet& Y, const MSSet& X2, const MSSet& Y2,
                   const SMap& f, const SMap& g, const MProd& src, const MProd& dst) {
  SMap h(src.P.s.gens.size());
  for (size_t id = 0; id < src.prod.pair_of.size(); ++id) {
    const auto& [x, y] = src.prod.pair_of[id];
    Simplex ix = map_apply(X2.s, f, X.s, x);
    Simplex iy = map_apply(Y2.s, g, Y.s, y);
    h[id] = dst.prod.embed(X2.s, Y2.s, ix, iy);
  }
  return h;
}

MSSet truncate(int n, const MSSet& X) {
  MSSet Y = X;
  if (n == OMEGA) return Y;
  int lo = std::max(n, 1);
  for (int g = 0; g < (int)Y.s.gens.size(); ++g)
    if (Y.s.gens[g].dim >= lo) Y.marks.insert(g);
  return Y;
}

// ---------------------------------------------------------------------------
// Marked colimits
// ---------------------------------------------------------------------------
MColimit m_colimit(MDiagram D) {
  MColimit C;
  C.dia.arrs = std::move(D.arrs);
  for (MSSet& X : D.obs) C.dia.obs.push_back(std::move(X.s));
  C.col = colimit(C.dia);
  C.X.s = C.col.X;
  C.inj = C.col.inj;
  for (size_t oi = 0; oi < D.obs.size(); ++oi)
    for (int g : D.obs[oi].marks) {
      const Simplex& img = C.inj[oi][g];
      if (!img.degenerate()) C.X.marks.insert(img.gen);
    }
  return C;
}

std::optional<SMap> m_mediating(const MColimit& C, const MSSet& Z,
                                const std::vector<SMap>& cocone, bool check_cocone) {
  auto u = mediating(C.dia, C.col, Z.s, cocone, check_cocone);
  if (!u) return std::nullopt;
  if (!mmap_valid(C.X, Z, *u)) return std::nullopt;
  return u;
}

MPushout m_pushout(const MSSet& A, const MSSet& B, const MSSet& C, const SMap& f,
                   const SMap& g) {
  MPushout P;
  MDiagram D;
  D.obs = {A, B, C};
  D.arrs = {Arr{0, 1, f}, Arr{0, 2, g}};
  P.col = m_colimit(D);
  P.P = P.col.X;
  P.from_b = P.col.inj[1];
  P.from_c = P.col.inj[2];
  return P;
}

MPushout m_collapse(const MSSet& A, const MSSet& X, const SMap& incl) {
  MSSet pt = m_delta(0);
  SMap to_pt(A.s.gens.size());
  for (size_t gi = 0; gi < A.s.gens.size(); ++gi) {
    int d = A.s.gens[gi].dim;
    std::vector<int> w(d);
    for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
    to_pt[gi] = Simplex{0, w};
  }
  return m_pushout(A, X, pt, incl, to_pt);
}

MSSet suspension(const MSSet& X) {
  MJoin J = m_join(X, m_delta(0));
  // X sits in X * [0] as the x-only generators.
  SMap incl(X.s.gens.size());
  for (int g = 0; g < (int)X.s.gens.size(); ++g)
    incl[g] = Simplex{J.id_of.at({g, -1}), {}};
  return m_collapse(X, J.J, incl).P;
}

MSSet cosuspension(const MSSet& X) {
  MJoin J = m_join(m_delta(0), X);
  SMap incl(X.s.gens.size());
  for (int g = 0; g < (int)X.s.gens.size(); ++g)
    incl[g] = Simplex{J.id_of.at({-1, g}), {}};
  return m_collapse(X, J.J, incl).P;
}

MSSet diamond0(const MSSet& X) {
  MProd T = pretensor(m_delta(1), X);
  // subcomplex {0} x X with its regular marking
  std::set<int> keep;
  for (size_t id = 0; id < T.prod.pair_of.size(); ++id) {
    const auto& [a, x] = T.prod.pair_of[id];
    if (a.gen == delta_id(1, {0})) keep.insert((int)id);
  }
  auto [S, incl] = subcomplex(T.P.s, keep);
  MSSet Sub{S, {}};
  for (size_t g = 0; g < S.gens.size(); ++g)
    if (S.gens[g].dim >= 1 && thin(T.P, incl[g])) Sub.marks.insert((int)g);
  return m_collapse(Sub, T.P, incl).P;
}

MSSet globe(int n) {
  MSSet G = m_delta(0);
  for (int i = 0; i < n; ++i) G = suspension(G);
  return G;
}

MSSet coglobe(int n) {
  MSSet G = m_delta(0);
  for (int i = 0; i < n; ++i) G = cosuspension(G);
  return G;
}

// ---------------------------------------------------------------------------
// Anodyne families
// ---------------------------------------------------------------------------
std::vector<AnodyneGen> anodyne_family(AnodyneKind kind, int nmax, int d) {
  std::vector<AnodyneGen> out;
  switch (kind) {
    case AnodyneKind::horn:
      for (int n = 1; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k) {
          AnodyneGen a;
          a.kind = kind;
          a.n = n;
          a.k = k;
          a.src = m_horn(n, k, &a.arrow);
          a.dst = m_nk(n, k);
          a.label = "horn(" + std::to_string(n) + "," + std::to_string(k) + ")";
          out.push_back(std::move(a));
        }
      break;
    case AnodyneKind::thinness:
      for (int n = 2; n <= nmax; ++n)
        for (int k = 0; k <= n; ++k) {
          AnodyneGen a;
          a.kind = kind;
          a.n = n;
          a.k = k;
          a.src = m_nk_p(n, k);
          a.dst = m_nk_pp(n, k);
          a.arrow = map_identity(a.src.s);
          a.label = "thinness(" + std::to_string(n) + "," + std::to_string(k) + ")";
          out.push_back(std::move(a));
        }
      break;
    case AnodyneKind::saturation:
      for (int n = -1; n <= nmax; ++n) {
        AnodyneGen a;
        a.kind = kind;
        a.n = n;
        if (n == -1) {
          a.src = m_eq3();
          a.dst = m_sharp(3);
          a.arrow = map_identity(a.src.s);
        } else {
          MJoin src = m_join(m_delta(n), m_eq3());
          MJoin dst = m_join(m_delta(n), m_sharp(3));
          a.src = src.J;
          a.dst = dst.J;
          a.arrow = m_join_map(m_delta(n), m_eq3(), m_delta(n), m_sharp(3),
                               map_identity(delta(n)), map_identity(delta(3)), src, dst);
        }
        a.label = "saturation(" + std::to_string(n) + ")";
        out.push_back(std::move(a));
      }
      break;
    case AnodyneKind::triviality:
      for (int n = (d == OMEGA ? nmax + 1 : d + 1); n <= nmax; ++n) {
        AnodyneGen a;
        a.kind = kind;
        a.n = n;
        a.src = m_delta(n);
        a.dst = m_delta_t(n);
        a.arrow = map_identity(a.src.s);
        a.label = "triviality(" + std::to_string(n) + ")";
        out.push_back(std::move(a));
      }
      break;
  }
  return out;
}

std::optional<SMap> m_iso_search(const MSSet& X, const MSSet& Y) {
  if (X.marks.size() != Y.marks.size()) return std::nullopt;
  return iso_search(X.s, Y.s, [&](int gi, int hj) {
    return (X.marks.count(gi) > 0) == (Y.marks.count(hj) > 0);
  });
}

}  // namespace cx
