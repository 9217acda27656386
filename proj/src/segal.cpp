#include "cx/segal.hpp"

#include <algorithm>
#include <stdexcept>

namespace cx {

namespace {

Simplex point_simplex(int gen, int d) {
  Simplex s;
  s.gen = gen;
  for (int j = d - 1; j >= 0; --j) s.word.push_back(j);
  return s;
}

void fail(const std::string& msg) { throw std::runtime_error(msg); }

}  // namespace

// ---------------------------------------------------------------------------
// Objects and maps
// ---------------------------------------------------------------------------

bool seg_valid(const SegObj& C, std::string* err) {
  auto bad = [&](const std::string& m) {
    if (err) *err = m;
    return false;
  };
  int M = C.M;
  if ((int)C.levels.size() != M + 1) return bad("level count");
  for (int l = 0; l <= M; ++l) {
    std::string e;
    if (!C.levels[l].s.validate(&e)) return bad("level " + std::to_string(l) + ": " + e);
  }
  for (const Gen& g : C.levels[0].s.gens)
    if (g.dim != 0) return bad("level 0 not discrete");
  if (!C.levels[0].marks.empty()) return bad("level 0 marked");
  if ((int)C.face.size() != M + 1 || (int)C.degen.size() != M + 1)
    return bad("structure map tables");
  for (int m = 1; m <= M; ++m) {
    if ((int)C.face[m].size() != m + 1) return bad("face arity");
    for (int i = 0; i <= m; ++i)
      if (!mmap_valid(C.levels[m], C.levels[m - 1], C.face[m][i]))
        return bad("face map invalid");
  }
  for (int m = 0; m < M; ++m) {
    if ((int)C.degen[m].size() != m + 1) return bad("degen arity");
    for (int j = 0; j <= m; ++j)
      if (!mmap_valid(C.levels[m], C.levels[m + 1], C.degen[m][j]))
        return bad("degen map invalid");
  }
  auto comp = [&](int a, int b, int c, const SMap& f, const SMap& g) {
    return map_compose(C.levels[a].s, C.levels[b].s, C.levels[c].s, f, g);
  };
  // simplicial identities
  for (int m = 2; m <= M; ++m)
    for (int j = 1; j <= m; ++j)
      for (int i = 0; i < j; ++i)
        if (comp(m, m - 1, m - 2, C.face[m][j], C.face[m - 1][i]) !=
            comp(m, m - 1, m - 2, C.face[m][i], C.face[m - 1][j - 1]))
          return bad("face identity");
  for (int m = 0; m + 2 <= M; ++m)
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i <= j; ++i)
        if (comp(m, m + 1, m + 2, C.degen[m][j], C.degen[m + 1][i]) !=
            comp(m, m + 1, m + 2, C.degen[m][i], C.degen[m + 1][j + 1]))
          return bad("degen identity");
  for (int m = 0; m < M; ++m)
    for (int j = 0; j <= m; ++j)
      for (int i = 0; i <= m + 1; ++i) {
        SMap lhs = comp(m, m + 1, m, C.degen[m][j], C.face[m + 1][i]);
        SMap rhs;
        if (i < j)
          rhs = m >= 1 ? comp(m, m - 1, m, C.face[m][i], C.degen[m - 1][j - 1]) : SMap{};
        else if (i == j || i == j + 1)
          rhs = map_identity(C.levels[m].s);
        else
          rhs = m >= 1 ? comp(m, m - 1, m, C.face[m][i - 1], C.degen[m - 1][j]) : SMap{};
        if (i == j || i == j + 1 || m >= 1) {
          if (lhs != rhs) return bad("mixed identity");
        }
      }
  for (int v : C.tC) {
    if (v < 0 || v >= (int)C.levels[1].s.gens.size() || C.levels[1].s.gens[v].dim != 0)
      return bad("tC not a vertex set");
  }
  for (const Gen& g : C.levels[0].s.gens) (void)g;
  for (int p = 0; p < (int)C.levels[0].s.gens.size(); ++p) {
    const Simplex& im = C.degen[0][0][p];
    if (!C.tC.count(im.gen)) return bad("tC misses a degenerate vertex");
  }
  return true;
}

SMap seg_structure(const SegObj& C, int n, const Mono& phi) {
  int m = (int)phi.size() - 1;
  // peel a degeneracy from the source side
  for (int j = 0; j + 1 <= m; ++j)
    if (phi[j] == phi[j + 1]) {
      Mono rest(phi.begin(), phi.end() - 1);
      for (int p = j; p < m; ++p) rest[p] = phi[p + 1];
      rest.resize(m);
      SMap inner = seg_structure(C, n, rest);
      return map_compose(C.levels[n].s, C.levels[m - 1].s, C.levels[m].s, inner,
                         C.degen[m - 1][j]);
    }
  // injective: peel a coface from the target side
  if (m < n) {
    int miss = n;
    std::set<int> img(phi.begin(), phi.end());
    for (int i = n; i >= 0; --i)
      if (!img.count(i)) {
        miss = i;
        break;
      }
    Mono rest = phi;
    for (int& v : rest)
      if (v > miss) --v;
    SMap inner = seg_structure(C, n - 1, rest);
    return map_compose(C.levels[n].s, C.levels[n - 1].s, C.levels[m].s,
                       C.face[n][miss], inner);
  }
  return map_identity(C.levels[n].s);
}

bool seg_map_valid(const SegObj& C, const SegObj& D, const SegMap& f, std::string* err) {
  auto bad = [&](const std::string& m) {
    if (err) *err = m;
    return false;
  };
  if (C.M != D.M || (int)f.f.size() != C.M + 1) return bad("level mismatch");
  for (int l = 0; l <= C.M; ++l) {
    std::string e;
    if (!mmap_valid(C.levels[l], D.levels[l], f.f[l], &e))
      return bad("level " + std::to_string(l) + ": " + e);
  }
  auto comp = [&](const SSet& a, const SSet& b, const SSet& c, const SMap& u,
                  const SMap& v) { return map_compose(a, b, c, u, v); };
  for (int m = 1; m <= C.M; ++m)
    for (int i = 0; i <= m; ++i)
      if (comp(C.levels[m].s, C.levels[m - 1].s, D.levels[m - 1].s, C.face[m][i],
               f.f[m - 1]) !=
          comp(C.levels[m].s, D.levels[m].s, D.levels[m - 1].s, f.f[m], D.face[m][i]))
        return bad("face commutation");
  for (int m = 0; m < C.M; ++m)
    for (int j = 0; j <= m; ++j)
      if (comp(C.levels[m].s, C.levels[m + 1].s, D.levels[m + 1].s, C.degen[m][j],
               f.f[m + 1]) !=
          comp(C.levels[m].s, D.levels[m].s, D.levels[m + 1].s, f.f[m], D.degen[m][j]))
        return bad("degen commutation");
  for (int v : C.tC)
    if (!D.tC.count(f.f[1][v].gen)) return bad("tC not preserved");
  return true;
}

SegMap seg_map_identity(const SegObj& C) {
  SegMap f;
  for (int l = 0; l <= C.M; ++l) f.f.push_back(map_identity(C.levels[l].s));
  return f;
}

SegMap seg_map_compose(const SegObj& C, const SegObj& D, const SegObj& E,
                       const SegMap& f, const SegMap& g) {
  SegMap h;
  for (int l = 0; l <= C.M; ++l)
    h.f.push_back(map_compose(C.levels[l].s, D.levels[l].s, E.levels[l].s, f.f[l], g.f[l]));
  return h;
}

bool seg_map_equal(const SegMap& f, const SegMap& g) { return f.f == g.f; }

bool seg_map_is_iso(const SegObj& C, const SegObj& D, const SegMap& f) {
  if (!seg_map_valid(C, D, f)) return false;
  for (int l = 0; l <= C.M; ++l) {
    const MSSet& X = C.levels[l];
    const MSSet& Y = D.levels[l];
    if (X.s.gens.size() != Y.s.gens.size()) return false;
    if (X.marks.size() != Y.marks.size()) return false;
    std::set<int> hit;
    for (size_t g = 0; g < X.s.gens.size(); ++g) {
      const Simplex& im = f.f[l][g];
      if (!im.word.empty()) return false;
      if (Y.s.gens[im.gen].dim != X.s.gens[g].dim) return false;
      if (!hit.insert(im.gen).second) return false;
    }
    for (int mrk : X.marks)
      if (!Y.marks.count(f.f[l][mrk].gen)) return false;
  }
  if (C.tC.size() != D.tC.size()) return false;
  for (int v : C.tC)
    if (!D.tC.count(f.f[1][v].gen)) return false;
  return true;
}

SegObj seg_empty(int M) {
  SegObj C;
  C.M = M;
  C.levels.assign(M + 1, MSSet{});
  C.face.assign(M + 1, {});
  C.degen.assign(M + 1, {});
  for (int m = 1; m <= M; ++m) C.face[m].assign(m + 1, SMap{});
  for (int m = 0; m < M; ++m) C.degen[m].assign(m + 1, SMap{});
  return C;
}

SegObj seg_terminal(int M) { return gen(m_delta(0), 0, M); }

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

int GenLayout::copy_of(int level, const Simplex& x) const {
  auto it = index[level].find(x);
  return it == index[level].end() ? -1 : it->second;
}

SegObj gen_shape(const MSSet& a, const SSet& S, int M, GenLayout* lay) {
  SegObj C = seg_empty(M);
  GenLayout L;
  L.at.resize(M + 1);
  L.off.resize(M + 1);
  L.index.resize(M + 1);
  for (int l = 0; l <= M; ++l) {
    MSSet& lev = C.levels[l];
    for (const Simplex& x : simplices(S, l)) {
      int off = (int)lev.s.gens.size();
      L.at[l].push_back(x);
      L.off[l].push_back(off);
      L.index[l][x] = (int)L.at[l].size() - 1;
      bool acopy = S.gens[x.gen].dim >= 1;
      if (acopy) {
        for (const Gen& g : a.s.gens) {
          Gen h = g;
          for (Simplex& fc : h.faces) fc.gen += off;
          lev.s.gens.push_back(h);
        }
        for (int mk : a.marks) lev.marks.insert(mk + off);
      } else {
        lev.s.gens.push_back(Gen{0, {}});
      }
    }
  }
  auto structure = [&](int m, const Mono& beta, int target) -> SMap {
    // beta : [target] -> [m]; the induced map levels[m] -> levels[target]
    SMap f;
    for (size_t k = 0; k < L.at[m].size(); ++k) {
      const Simplex& x = L.at[m][k];
      Simplex y = act(S, x, beta);
      int kd = L.index[target].at(y);
      int offd = L.off[target][kd];
      bool sa = S.gens[x.gen].dim >= 1;
      bool ta = S.gens[y.gen].dim >= 1;
      if (!sa) {
        f.push_back(Simplex{offd, {}});
      } else if (ta) {
        for (size_t g = 0; g < a.s.gens.size(); ++g)
          f.push_back(Simplex{(int)g + offd, {}});
      } else {
        for (size_t g = 0; g < a.s.gens.size(); ++g)
          f.push_back(point_simplex(offd, a.s.gens[g].dim));
      }
    }
    return f;
  };
  for (int m = 1; m <= M; ++m)
    for (int i = 0; i <= m; ++i)
      C.face[m][i] = structure(m, mono_delta(i, m), m - 1);
  for (int m = 0; m < M; ++m)
    for (int j = 0; j <= m; ++j)
      C.degen[m][j] = structure(m, mono_sigma(j, m), m + 1);
  for (size_t k = 0; k < L.at[1].size(); ++k)
    if (S.gens[L.at[1][k].gen].dim < 1) C.tC.insert(L.off[1][k]);
  if (lay) *lay = L;
  return C;
}

SegObj gen(const MSSet& a, int n, int M, GenLayout* lay) {
  return gen_shape(a, delta(n), M, lay);
}

SegObj gen1t(int M) {
  SegObj C = gen(m_delta(0), 1, M);
  for (size_t g = 0; g < C.levels[1].s.gens.size(); ++g)
    if (C.levels[1].s.gens[g].dim == 0) C.tC.insert((int)g);
  return C;
}

SegObj gen_marked_shape(const MSSet& K, int M) {
  GenLayout L;
  SegObj C = gen_shape(m_delta(0), K.s, M, &L);
  for (int mk : K.marks)
    if (K.s.gens[mk].dim == 1) C.tC.insert(L.off[1][L.index[1].at(Simplex{mk, {}})]);
  return C;
}

SMap delta_smap(const Mono& phi, int m, int n) {
  SSet D = delta(m);
  SMap f;
  for (const Gen& g : D.gens) (void)g;
  for (size_t id = 0; id < D.gens.size(); ++id) {
    const std::vector<int>& vs = delta_verts(m, (int)id);
    Mono img;
    for (int v : vs) img.push_back(phi[v]);
    f.push_back(delta_simplex(n, img));
  }
  return f;
}

SMap terminal_smap(const MSSet& a) {
  SMap f;
  for (const Gen& g : a.s.gens) f.push_back(point_simplex(0, g.dim));
  return f;
}

namespace {

SMap gen_level_map(const MSSet& a, const SSet& S, const GenLayout& LS, const SSet& T,
                   const GenLayout& LT, const SMap& u, const SMap& sh, int l) {
  SMap f;
  for (size_t k = 0; k < LS.at[l].size(); ++k) {
    const Simplex& x = LS.at[l][k];
    Simplex y = map_apply(T, sh, S, x);
    int kd = LT.index[l].at(y);
    int offd = LT.off[l][kd];
    bool sa = S.gens[x.gen].dim >= 1;
    bool ta = T.gens[y.gen].dim >= 1;
    if (!sa) {
      f.push_back(Simplex{offd, {}});
    } else if (ta) {
      for (size_t g = 0; g < a.s.gens.size(); ++g) {
        Simplex im = u[g];
        im.gen += offd;
        f.push_back(im);
      }
    } else {
      for (size_t g = 0; g < a.s.gens.size(); ++g)
        f.push_back(point_simplex(offd, a.s.gens[g].dim));
    }
  }
  return f;
}

}  // namespace

SegMap gen_shape_map(const MSSet& a, const SSet& S, const MSSet& b, const SSet& T,
                     const SMap& u, const SMap& sh, int M) {
  GenLayout LS, LT;
  SegObj CS = gen_shape(a, S, M, &LS);
  SegObj CT = gen_shape(b, T, M, &LT);
  (void)CS;
  (void)CT;
  SegMap F;
  for (int l = 0; l <= M; ++l)
    F.f.push_back(gen_level_map(a, S, LS, T, LT, u, sh, l));
  return F;
}

SegMap gen_map(const MSSet& a, int m, const MSSet& b, int n, const SMap& u,
               const Mono& phi, int M) {
  return gen_shape_map(a, delta(m), b, delta(n), u, delta_smap(phi, m, n), M);
}

// ---------------------------------------------------------------------------
// Colimits
// ---------------------------------------------------------------------------

SegColimit seg_colimit(const SegDiagram& D, bool validate) {
  int M = D.obs.empty() ? 3 : D.obs[0].M;
  if (validate)
    for (const SegArr& e : D.arrs) {
      std::string err;
      if (!seg_map_valid(D.obs[e.s], D.obs[e.t], e.f, &err))
        fail("seg_colimit: invalid arrow: " + err);
    }
  SegColimit out;
  out.C = seg_empty(M);
  for (int l = 0; l <= M; ++l) {
    MDiagram dl;
    for (const SegObj& o : D.obs) dl.obs.push_back(o.levels[l]);
    for (const SegArr& e : D.arrs) dl.arrs.push_back(Arr{e.s, e.t, e.f.f[l]});
    out.lcol.push_back(m_colimit(std::move(dl)));
    out.C.levels[l] = out.lcol.back().X;
  }
  out.inj.resize(D.obs.size());
  for (size_t i = 0; i < D.obs.size(); ++i) {
    out.inj[i].f.resize(M + 1);
    for (int l = 0; l <= M; ++l) out.inj[i].f[l] = out.lcol[l].inj[i];
  }
  auto mediate = [&](int src, int dst, const std::function<SMap(int)>& leg) -> SMap {
    std::vector<SMap> cocone;
    for (size_t i = 0; i < D.obs.size(); ++i)
      cocone.push_back(map_compose(D.obs[i].levels[src].s, D.obs[i].levels[dst].s,
                                   out.C.levels[dst].s, leg((int)i),
                                   out.inj[i].f[dst]));
    auto m = m_mediating(out.lcol[src], out.C.levels[dst], cocone, validate);
    if (!m) fail("seg_colimit: structure cocone does not commute");
    return *m;
  };
  for (int m = 1; m <= M; ++m)
    for (int i = 0; i <= m; ++i)
      out.C.face[m][i] = mediate(m, m - 1, [&](int k) { return D.obs[k].face[m][i]; });
  for (int m = 0; m < M; ++m)
    for (int j = 0; j <= m; ++j)
      out.C.degen[m][j] = mediate(m, m + 1, [&](int k) { return D.obs[k].degen[m][j]; });
  for (size_t i = 0; i < D.obs.size(); ++i)
    for (int v : D.obs[i].tC) out.C.tC.insert(out.inj[i].f[1][v].gen);
  for (size_t p = 0; p < out.C.levels[0].s.gens.size(); ++p)
    out.C.tC.insert(out.C.degen[0][0][p].gen);
  return out;
}

std::optional<SegMap> seg_mediating(const SegDiagram& D, const SegColimit& C,
                                    const SegObj& Z, const std::vector<SegMap>& cocone) {
  int M = C.C.M;
  SegMap out;
  out.f.resize(M + 1);
  for (int l = 0; l <= M; ++l) {
    std::vector<SMap> cl;
    for (const SegMap& c : cocone) cl.push_back(c.f[l]);
    auto m = m_mediating(C.lcol[l], Z.levels[l], cl);
    if (!m) return std::nullopt;
    out.f[l] = *m;
  }
  if (!seg_map_valid(C.C, Z, out)) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------
// Presentations
// ---------------------------------------------------------------------------

PNode pnode_plain(const MSSet& a, int n) { return PNode{PKind::plain, a, n}; }
PNode pnode_t1() { return PNode{PKind::t1, m_delta(0), 1}; }

SegObj pnode_value(const PNode& nd, int M) {
  return nd.kind == PKind::t1 ? gen1t(M) : gen(nd.a, nd.n, M);
}

SegMap parr_value(const Pres& P, const PArr& e, int M) {
  const PNode& s = P.nodes[e.src];
  const PNode& t = P.nodes[e.dst];
  return gen_map(s.a, s.n, t.a, t.n, e.u, e.phi, M);
}

PresVal pres_eval(const Pres& P, int M) {
  PresVal V;
  // evaluate each distinct node shape once
  std::vector<GenLayout> lays;
  std::vector<SSet> dshape;
  V.shape_of.resize(P.nodes.size());
  for (size_t i = 0; i < P.nodes.size(); ++i) {
    const PNode& nd = P.nodes[i];
    int si = -1;
    for (size_t j = 0; j < i; ++j)
      if (P.nodes[j].kind == nd.kind && P.nodes[j].n == nd.n && P.nodes[j].a == nd.a) {
        si = V.shape_of[j];
        break;
      }
    if (si < 0) {
      si = (int)V.shapes.size();
      dshape.push_back(delta(nd.n));
      lays.emplace_back();
      SegObj C = gen_shape(nd.a, dshape[si], M, &lays[si]);
      if (nd.kind == PKind::t1)
        for (size_t g = 0; g < C.levels[1].s.gens.size(); ++g)
          if (C.levels[1].s.gens[g].dim == 0) C.tC.insert((int)g);
      V.shapes.push_back(std::move(C));
    }
    V.shape_of[i] = si;
  }
  // evaluate each distinct arrow map once
  std::map<std::tuple<int, int, SMap, Mono>, int> amap_id;
  V.amap_of.resize(P.arrows.size());
  for (size_t e = 0; e < P.arrows.size(); ++e) {
    const PArr& a = P.arrows[e];
    int ss = V.shape_of[a.src], ts = V.shape_of[a.dst];
    auto key = std::make_tuple(ss, ts, a.u, a.phi);
    auto it = amap_id.find(key);
    if (it == amap_id.end()) {
      const PNode& s = P.nodes[a.src];
      const PNode& t = P.nodes[a.dst];
      SMap sh = delta_smap(a.phi, s.n, t.n);
      SegMap F;
      for (int l = 0; l <= M; ++l)
        F.f.push_back(gen_level_map(s.a, dshape[ss], lays[ss], dshape[ts], lays[ts],
                                    a.u, sh, l));
      it = amap_id.emplace(key, (int)V.amaps.size()).first;
      V.amaps.push_back(std::move(F));
    }
    V.amap_of[e] = it->second;
  }
  // levelwise colimits over the shared shapes and maps
  V.col.C = seg_empty(M);
  std::vector<Colimit> lc(M + 1);
  for (int l = 0; l <= M; ++l) {
    DiaRef R;
    for (size_t i = 0; i < P.nodes.size(); ++i)
      R.obs.push_back(&V.shapes[V.shape_of[i]].levels[l].s);
    for (size_t e = 0; e < P.arrows.size(); ++e)
      R.arrs.push_back({P.arrows[e].src, P.arrows[e].dst,
                        &V.amaps[V.amap_of[e]].f[l]});
    lc[l] = colimit(R);
    V.col.C.levels[l].s = lc[l].X;
    for (size_t i = 0; i < P.nodes.size(); ++i)
      for (int g : V.shapes[V.shape_of[i]].levels[l].marks) {
        const Simplex& img = lc[l].inj[i][g];
        if (!img.degenerate()) V.col.C.levels[l].marks.insert(img.gen);
      }
  }
  // structure maps, determined on generators by the injections
  auto mediate = [&](int src, int dst, const std::function<const SMap&(int)>& leg) {
    SMap u(V.col.C.levels[src].s.gens.size(), Simplex{-1, {}});
    for (size_t i = 0; i < P.nodes.size(); ++i) {
      const SegObj& sh = V.shapes[V.shape_of[i]];
      const SMap& in = lc[src].inj[i];
      const SMap& lg = leg((int)i);
      for (size_t g = 0; g < in.size(); ++g) {
        if (in[g].degenerate()) continue;
        u[in[g].gen] = map_apply(V.col.C.levels[dst].s, lc[dst].inj[i],
                                 sh.levels[dst].s, lg[g]);
      }
    }
    for (const Simplex& s : u)
      if (s.gen < 0) fail("pres_eval: structure map not determined");
    return u;
  };
  for (int m = 1; m <= M; ++m)
    for (int i = 0; i <= m; ++i)
      V.col.C.face[m][i] = mediate(m, m - 1, [&](int k) -> const SMap& {
        return V.shapes[V.shape_of[k]].face[m][i];
      });
  for (int m = 0; m < M; ++m)
    for (int j = 0; j <= m; ++j)
      V.col.C.degen[m][j] = mediate(m, m + 1, [&](int k) -> const SMap& {
        return V.shapes[V.shape_of[k]].degen[m][j];
      });
  V.col.inj.resize(P.nodes.size());
  for (size_t i = 0; i < P.nodes.size(); ++i) {
    V.col.inj[i].f.resize(M + 1);
    for (int l = 0; l <= M; ++l) V.col.inj[i].f[l] = std::move(lc[l].inj[i]);
  }
  for (size_t i = 0; i < P.nodes.size(); ++i)
    for (int v : V.shapes[V.shape_of[i]].tC)
      V.col.C.tC.insert(V.col.inj[i].f[1][v].gen);
  for (size_t p = 0; p < V.col.C.levels[0].s.gens.size(); ++p)
    V.col.C.tC.insert(V.col.C.degen[0][0][p].gen);
  return V;
}

Pres pres_gen(const MSSet& a, int n) {
  Pres P;
  P.nodes.push_back(pnode_plain(a, n));
  return P;
}

Pres pres_gen1t() {
  Pres P;
  P.nodes.push_back(pnode_t1());
  return P;
}

std::optional<SegMap> pres_map_eval(const Pres& P, const PresVal& PV, const Pres& Q,
                                    const PresVal& QV, const PresMap& f, int M) {
  std::vector<SegMap> cocone;
  for (size_t i = 0; i < P.nodes.size(); ++i) {
    const Leg& leg = f.legs[i];
    const PNode& s = P.nodes[i];
    const PNode& t = Q.nodes[leg.dst];
    SegMap base = gen_map(s.a, s.n, t.a, t.n, leg.u, leg.phi, M);
    cocone.push_back(seg_map_compose(PV.obj((int)i), QV.obj(leg.dst), QV.col.C,
                                     base, QV.col.inj[leg.dst]));
  }
  // the legs must commute with the presentation's arrows
  for (size_t e = 0; e < P.arrows.size(); ++e) {
    const PArr& a = P.arrows[e];
    SegMap lhs = seg_map_compose(PV.obj(a.src), PV.obj(a.dst), QV.col.C,
                                 PV.amaps[PV.amap_of[e]], cocone[a.dst]);
    if (!seg_map_equal(lhs, cocone[a.src])) return std::nullopt;
  }
  // mediating map, determined on generators by the injections
  SegMap out;
  out.f.resize(M + 1);
  for (int l = 0; l <= M; ++l) {
    SMap u(PV.col.C.levels[l].s.gens.size(), Simplex{-1, {}});
    for (size_t i = 0; i < P.nodes.size(); ++i) {
      const SMap& in = PV.col.inj[i].f[l];
      for (size_t g = 0; g < in.size(); ++g) {
        if (in[g].degenerate()) continue;
        const Simplex& val = cocone[i].f[l][g];
        if (u[in[g].gen].gen >= 0 && !(u[in[g].gen] == val)) return std::nullopt;
        u[in[g].gen] = val;
      }
    }
    for (const Simplex& s : u)
      if (s.gen < 0) return std::nullopt;
    out.f[l] = std::move(u);
  }
  if (!seg_map_valid(PV.col.C, QV.col.C, out)) return std::nullopt;
  return out;
}

// ---------------------------------------------------------------------------
// Wedges
// ---------------------------------------------------------------------------

Wedge wedge(const MSSet& a, const std::vector<WedgePart>& parts, int M) {
  Wedge W;
  int total = 0;
  for (const WedgePart& p : parts) total += p.ni;
  W.spine_node = 0;
  W.pres.nodes.push_back(pnode_plain(a, total));
  int off = 0;
  for (const WedgePart& p : parts) {
    W.offset.push_back(off);
    int glue = (int)W.pres.nodes.size();
    W.pres.nodes.push_back(pnode_plain(a, p.ni));
    int part = (int)W.pres.nodes.size();
    W.pres.nodes.push_back(pnode_plain(p.ai, p.ni));
    W.part_node.push_back(part);
    Mono incl;
    for (int q = 0; q <= p.ni; ++q) incl.push_back(off + q);
    W.pres.arrows.push_back(PArr{glue, W.spine_node, map_identity(a.s), incl});
    W.pres.arrows.push_back(PArr{glue, part, p.from_base, mono_id(p.ni)});
    off += p.ni;
  }
  W.val = pres_eval(W.pres, M);
  return W;
}

// ---------------------------------------------------------------------------
// Index fragments
// ---------------------------------------------------------------------------

namespace {

// strictly increasing sequences of the given length with values in [lo, hi]
void incr_seqs(int len, int lo, int hi, std::vector<Mono>& out) {
  if (len == 0) {
    out.push_back({});
    return;
  }
  std::vector<Mono> stack;
  Mono cur;
  std::function<void(int)> rec = [&](int next) {
    if ((int)cur.size() == len) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= hi - (len - 1 - (int)cur.size()); ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(lo);
}

}  // namespace

std::vector<IxObj> pair_fragment(int m, Frag f, int B) {
  std::vector<IxObj> out;
  std::set<IxObj> seen;
  auto add = [&](const IxObj& x) {
    if (seen.insert(x).second) out.push_back(x);
  };
  if (f == Frag::bounded) {
    IndexCat C = build_delta2_over(m, B);
    for (const IxObj& x : C.obs) add(x);
    return out;
  }
  if (f == Frag::reduced) {
    for (int k0 = 0; k0 <= m; ++k0) {
      std::vector<Mono> ops;
      incr_seqs(k0 + 1, 0, m, ops);
      for (const Mono& op : ops) {
        // no second component
        add(IxObj{{k0, -1}, op});
        for (int k1 = 0; k1 <= m; ++k1) {
          std::vector<Mono> secs;
          incr_seqs(k1 + 1, op.back(), m, secs);
          for (const Mono& sec : secs) {
            Mono ff = op;
            ff.insert(ff.end(), sec.begin(), sec.end());
            add(IxObj{{k0, k1}, ff});
          }
        }
      }
    }
    return out;
  }
  // minimal: the chain objects, their shared faces and the constant caps
  for (int j = 0; j <= m; ++j) {
    Mono ff;
    for (int q = 0; q <= j; ++q) ff.push_back(q);
    for (int q = j; q <= m; ++q) ff.push_back(q);
    add(IxObj{{j, m - j}, ff});
  }
  for (int j = 0; j + 1 <= m; ++j) {
    Mono ff;
    for (int q = 0; q <= m; ++q) ff.push_back(q);
    add(IxObj{{j, m - j - 1}, ff});
  }
  for (int i = 0; i <= m; ++i) add(IxObj{{0, 0}, {i, i}});
  return out;
}

std::vector<IxObj> triple_fragment(int m, Frag f, int B) {
  std::vector<IxObj> out;
  std::set<IxObj> seen;
  auto add = [&](const IxObj& x) {
    if (seen.insert(x).second) out.push_back(x);
  };
  if (f == Frag::bounded) {
    IndexCat C = build_delta3_over(m, B);
    for (const IxObj& x : C.obs) add(x);
    return out;
  }
  for (int k0 = -1; k0 <= m; ++k0) {
    std::vector<Mono> fronts;
    incr_seqs(k0 + 1, 0, m, fronts);
    for (const Mono& fr : fronts) {
      int mid_lo = fr.empty() ? 0 : fr.back();
      for (int k1 = 0; k1 <= m; ++k1) {
        std::vector<Mono> mids;
        incr_seqs(k1 + 1, mid_lo, m, mids);
        for (const Mono& mid : mids) {
          for (int k2 = -1; k2 <= m; ++k2) {
            std::vector<Mono> backs;
            incr_seqs(k2 + 1, mid.back(), m, backs);
            for (const Mono& bk : backs) {
              Mono ff = fr;
              ff.insert(ff.end(), mid.begin(), mid.end());
              ff.insert(ff.end(), bk.begin(), bk.end());
              add(IxObj{{k0, k1, k2}, ff});
            }
          }
        }
      }
    }
  }
  return out;
}

namespace {

std::vector<int> comp_sizes(const IxObj& x) {
  std::vector<int> out;
  for (int k : x.ks) out.push_back(k + 1);
  return out;
}

}  // namespace

IxObj ix_reduce(const IxObj& x, std::vector<Mono>* sigma) {
  IxObj y;
  y.ks = x.ks;
  if (sigma) sigma->clear();
  int pos = 0;
  std::vector<int> sizes = comp_sizes(x);
  int opc = x.ks.size() == 2 ? 0 : 1;
  for (size_t c = 0; c < sizes.size(); ++c) {
    Mono sg;
    Mono vals;
    for (int p = 0; p < sizes[c]; ++p) {
      int v = x.f[pos + p];
      if (vals.empty() || vals.back() != v) vals.push_back(v);
      sg.push_back((int)vals.size() - 1);
    }
    pos += sizes[c];
    y.ks[c] = (int)vals.size() - 1;
    if (sizes[c] == 0) y.ks[c] = -1;
    y.f.insert(y.f.end(), vals.begin(), vals.end());
    if (sigma) {
      // the op component is reported in natural coordinates, like ix_homs
      if ((int)c == opc && !sg.empty()) {
        Mono nat(sg.size());
        for (size_t i = 0; i < sg.size(); ++i)
          nat[i] = y.ks[c] - sg[sg.size() - 1 - i];
        sg = nat;
      }
      sigma->push_back(sg);
    }
  }
  return y;
}

IxObj ix_push(const IxObj& x, const Mono& phi) {
  IxObj y = x;
  for (int& v : y.f) v = phi[v];
  return y;
}

bool ix_constant(const IxObj& x, int* vertex) {
  for (int v : x.f)
    if (v != x.f[0]) return false;
  if (vertex) *vertex = x.f.empty() ? -1 : x.f[0];
  return true;
}

// ---------------------------------------------------------------------------
// Canonical squares
// ---------------------------------------------------------------------------

bool SegSquare::commutes() const {
  return seg_map_equal(seg_map_compose(A, B, D, f, h), seg_map_compose(A, C, D, g, k));
}

bool seg_cocartesian(const SegSquare& s) {
  if (!s.commutes()) return false;
  SegDiagram dia;
  dia.obs = {s.A, s.B, s.C};
  dia.arrs.push_back(SegArr{0, 1, s.f});
  dia.arrs.push_back(SegArr{0, 2, s.g});
  SegColimit col = seg_colimit(dia);
  std::vector<SegMap> cocone = {seg_map_compose(s.A, s.B, s.D, s.f, s.h), s.h, s.k};
  auto med = seg_mediating(dia, col, s.D, cocone);
  if (!med) return false;
  return seg_map_is_iso(col.C, s.D, *med);
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

namespace {

struct IsoState {
  const SegObj* C;
  const SegObj* D;
  int M = 0;
  // assignment per level: gen of C -> gen of D
  std::vector<std::vector<int>> to;
  std::vector<std::vector<int>> from;
  // search order: (level, gen) pairs graded by level then dimension
  std::vector<std::pair<int, int>> order;
  // degeneracy constraints hitting a given level-l generator as their core
  // (level l, core gen) -> list of (source level gen h, j)
  std::vector<std::map<int, std::vector<std::pair<int, int>>>> degcon;
  const std::vector<std::map<int, int>>* pins = nullptr;
  std::function<bool()> visit;
};

Simplex apply_partial(const std::vector<int>& asg, const Simplex& x) {
  Simplex y = x;
  y.gen = asg[x.gen];
  return y;
}

bool iso_rec(IsoState& st, size_t idx) {
  if (idx == st.order.size()) return st.visit();
  auto [l, g] = st.order[idx];
  const MSSet& X = st.C->levels[l];
  const MSSet& Y = st.D->levels[l];
  int d = X.s.gens[g].dim;
  std::vector<int> cands;
  if (st.pins && !(*st.pins)[l].empty()) {
    auto it = (*st.pins)[l].find(g);
    if (it != (*st.pins)[l].end()) cands.push_back(it->second);
  }
  if (cands.empty())
    for (size_t t = 0; t < Y.s.gens.size(); ++t)
      if (Y.s.gens[t].dim == d && st.from[l][t] < 0) cands.push_back((int)t);
  for (int t : cands) {
    if (st.from[l][t] >= 0 && st.from[l][t] != g) continue;
    if (st.to[l][g] >= 0) {
      if (st.to[l][g] != t) continue;
    }
    if (X.marks.count(g) != (bool)Y.marks.count(t)) continue;
    if (l == 1 && d == 0 && st.C->tC.count(g) != (bool)st.D->tC.count(t)) continue;
    // within-level faces
    bool ok = true;
    for (int q = 0; ok && q <= d; ++q) {
      if (d == 0) break;
      Simplex fx = X.s.gens[g].faces[q];
      if (st.to[l][fx.gen] < 0) {
        ok = false;
        break;
      }
      if (apply_partial(st.to[l], fx) != Y.s.gens[t].faces[q]) ok = false;
    }
    if (!ok) continue;
    // cross-level faces
    if (l >= 1)
      for (int i = 0; ok && i <= l; ++i) {
        Simplex fx = st.C->face[l][i][g];
        if (st.to[l - 1][fx.gen] < 0) {
          ok = false;
          break;
        }
        if (apply_partial(st.to[l - 1], fx) != st.D->face[l][i][t]) ok = false;
      }
    if (!ok) continue;
    // degeneracy constraints whose core is g
    auto it = st.degcon[l].find(g);
    if (it != st.degcon[l].end())
      for (auto [h, j] : it->second) {
        Simplex want = st.D->degen[l - 1][j][st.to[l - 1][h]];
        Simplex img = st.C->degen[l - 1][j][h];
        img.gen = t;
        if (img != want) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    st.to[l][g] = t;
    st.from[l][t] = g;
    if (iso_rec(st, idx + 1)) return true;
    st.to[l][g] = -1;
    st.from[l][t] = -1;
  }
  return false;
}

// Enumerates isos; visit() returning true stops the search.
bool seg_iso_enum(const SegObj& C, const SegObj& D,
                  const std::vector<std::map<int, int>>* pins,
                  const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
  if (C.M != D.M) return false;
  for (int l = 0; l <= C.M; ++l) {
    std::vector<size_t> cc = C.levels[l].s.counts(), dc = D.levels[l].s.counts();
    if (cc != dc) return false;
    if (C.levels[l].marks.size() != D.levels[l].marks.size()) return false;
  }
  if (C.tC.size() != D.tC.size()) return false;
  IsoState st;
  st.C = &C;
  st.D = &D;
  st.M = C.M;
  st.pins = pins;
  st.to.resize(C.M + 1);
  st.from.resize(C.M + 1);
  st.degcon.resize(C.M + 1);
  for (int l = 0; l <= C.M; ++l) {
    st.to[l].assign(C.levels[l].s.gens.size(), -1);
    st.from[l].assign(D.levels[l].s.gens.size(), -1);
  }
  for (int l = 1; l <= C.M; ++l)
    for (size_t h = 0; h < C.levels[l - 1].s.gens.size(); ++h)
      for (int j = 0; j <= l - 1; ++j) {
        const Simplex& im = C.degen[l - 1][j][h];
        st.degcon[l][im.gen].push_back({(int)h, j});
      }
  std::vector<std::pair<int, int>> order;
  for (int l = 0; l <= C.M; ++l) {
    std::vector<std::pair<int, int>> lv;
    for (size_t g = 0; g < C.levels[l].s.gens.size(); ++g)
      lv.push_back({C.levels[l].s.gens[g].dim, (int)g});
    std::sort(lv.begin(), lv.end());
    for (auto& [d, g] : lv) order.push_back({l, g});
  }
  st.order = order;
  st.visit = [&]() { return visit(st.to); };
  return iso_rec(st, 0);
}

SegMap iso_from_assignment(const SegObj& C, const std::vector<std::vector<int>>& to) {
  SegMap f;
  f.f.resize(C.M + 1);
  for (int l = 0; l <= C.M; ++l)
    for (size_t g = 0; g < C.levels[l].s.gens.size(); ++g)
      f.f[l].push_back(Simplex{to[l][g], {}});
  return f;
}

}  // namespace

std::optional<SegMap> seg_iso(const SegObj& C, const SegObj& D) {
  std::optional<SegMap> out;
  seg_iso_enum(C, D, nullptr, [&](const std::vector<std::vector<int>>& to) {
    out = iso_from_assignment(C, to);
    return true;
  });
  return out;
}

std::optional<SegMap> seg_iso_pinned(const SegObj& C, const SegObj& D,
                                     const std::vector<std::map<int, int>>& pins) {
  std::optional<SegMap> out;
  seg_iso_enum(C, D, &pins, [&](const std::vector<std::vector<int>>& to) {
    out = iso_from_assignment(C, to);
    return true;
  });
  return out;
}

bool seg_arrow_iso(const SegObj& A, const SegObj& B, const SegMap& f, const SegObj& C,
                   const SegObj& D, const SegMap& g) {
  bool found = false;
  seg_iso_enum(A, C, nullptr, [&](const std::vector<std::vector<int>>& to) {
    std::vector<std::map<int, int>> pins(B.M + 1);
    for (int l = 0; l <= A.M; ++l)
      for (size_t x = 0; x < A.levels[l].s.gens.size(); ++x) {
        const Simplex& fb = f.f[l][x];
        Simplex gc = g.f[l][to[l][x]];
        // require matching degeneracy words and pin the cores
        if (fb.word != gc.word) return false;  // prune this A-iso
        auto it = pins[l].find(fb.gen);
        if (it != pins[l].end() && it->second != gc.gen) return false;
        pins[l][fb.gen] = gc.gen;
      }
    if (seg_iso_pinned(B, D, pins)) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Derived objects
// ---------------------------------------------------------------------------

SSet eq_shape(SMap* from_d3) {
  Diagram dia;
  dia.obs = {delta(3), delta(1), delta(1), delta(0), delta(0)};
  auto edge = [&](int a, int b) {
    SMap f;
    for (size_t id = 0; id < delta(1).gens.size(); ++id) {
      const std::vector<int>& vs = delta_verts(1, (int)id);
      Mono img;
      for (int v : vs) img.push_back(v == 0 ? a : b);
      f.push_back(delta_simplex(3, img));
    }
    return f;
  };
  SMap col1;
  for (size_t id = 0; id < delta(1).gens.size(); ++id)
    col1.push_back(point_simplex(0, delta(1).gens[id].dim));
  dia.arrs.push_back(Arr{1, 0, edge(0, 2)});
  dia.arrs.push_back(Arr{2, 0, edge(1, 3)});
  dia.arrs.push_back(Arr{1, 3, col1});
  dia.arrs.push_back(Arr{2, 4, col1});
  Colimit col = colimit(dia);
  if (from_d3) *from_d3 = col.inj[0];
  return col.X;
}

SegObj e_iso(int M) { return gen_shape(m_delta(0), eq_shape(), M); }

SegObj e_isoP(int M) {
  SMap from_d3;
  SSet EQ = eq_shape(&from_d3);
  // the {1,2} edge of the quotient
  SMap edge12;
  for (size_t id = 0; id < delta(1).gens.size(); ++id) {
    const std::vector<int>& vs = delta_verts(1, (int)id);
    Mono img;
    for (int v : vs) img.push_back(v + 1);
    Simplex in3 = delta_simplex(3, img);
    edge12.push_back(map_apply(EQ, from_d3, delta(3), in3));
  }
  SegDiagram dia;
  dia.obs = {gen(m_delta(0), 1, M), gen1t(M), e_iso(M)};
  SegArr a1{0, 1, seg_map_identity(dia.obs[0])};
  SegArr a2{0, 2, gen_shape_map(m_delta(0), delta(1), m_delta(0), EQ,
                                map_identity(delta(0)), edge12, M)};
  dia.arrs = {a1, a2};
  return seg_colimit(dia).C;
}

EStar estar(const MSSet& a) {
  MProd T = tensor(m_delta(1), a);
  auto slice = [&](int v) {
    SMap f;
    for (size_t g = 0; g < a.s.gens.size(); ++g) {
      Simplex vx = point_simplex(delta_simplex(1, Mono{v}).gen, a.s.gens[g].dim);
      f.push_back(T.prod.embed(delta(1), a.s, vx, Simplex{(int)g, {}}));
    }
    return f;
  };
  MPushout col = m_collapse(a, T.P, slice(0));
  EStar out;
  out.V = col.P;
  out.from_a = map_compose(a.s, T.P.s, col.P.s, slice(1), col.from_b);
  out.cone_pt = col.from_c;
  return out;
}

// ---------------------------------------------------------------------------
// Cylinder and cone presentations
// ---------------------------------------------------------------------------

int BlockOut::find(int qnode, bool lifted, int ix, int slot) const {
  auto it = id.find({qnode, lifted ? 1 : 0, ix, slot});
  return it == id.end() ? -1 : it->second;
}

int BlockOut::find_ix(int qnode, const IxObj& x) const {
  for (size_t i = 0; i < ixs[qnode].size(); ++i)
    if (ixs[qnode][i] == x) return (int)i;
  return -1;
}

namespace {

// tensor tables [k] (x) b keyed by (input node or -1 for e, k)
struct TenCache {
  const Pres* Q = nullptr;
  MSSet e = m_delta(0);
  std::map<std::pair<int, int>, MProd> tab;
  const MSSet& base(int b) const { return b < 0 ? e : Q->nodes[b].a; }
  const MProd& ten(int b, int k) {
    auto key = std::make_pair(b, k);
    auto it = tab.find(key);
    if (it == tab.end()) it = tab.emplace(key, tensor(m_delta(k), base(b))).first;
    return it->second;
  }
};

// strip the point factor of [0] (x) b
SMap untensor0(const MProd& t0) {
  SMap f;
  for (size_t g = 0; g < t0.P.s.gens.size(); ++g)
    f.push_back(t0.prod.pair_of[g].second);
  return f;
}

// collapse onto the first vertex of dst (used where the shape map is constant
// and the base map is never consulted)
SMap vertex_collapse(const MSSet& src, const MSSet& dst) {
  int v0 = 0;
  for (size_t g = 0; g < dst.s.gens.size(); ++g)
    if (dst.s.gens[g].dim == 0) {
      v0 = (int)g;
      break;
    }
  SMap f;
  for (const Gen& g : src.s.gens) f.push_back(point_simplex(v0, g.dim));
  return f;
}

bool comps_identity(const std::vector<Mono>& comps) {
  for (const Mono& c : comps)
    for (size_t p = 0; p < c.size(); ++p)
      if (c[p] != (int)p) return false;
  return true;
}

struct BlockBuild {
  const Pres* Q = nullptr;
  bool pairs = true;
  TenCache tc;
  BlockOut out;
  std::vector<std::set<IxObj>> have;

  void add_ix(int q, const IxObj& x) {
    if (have[q].insert(x).second) out.ixs[q].push_back(x);
  }

  // an empty outer component degenerates the block: a triple with one empty
  // side is just the plain copy of the other side, and with both sides empty
  // the block is empty
  std::vector<int> slot_list(const IxObj& x) const {
    if (pairs) {
      std::vector<int> s{SlotP};
      if (x.ks[1] >= 0) {
        s.push_back(SlotL);
        s.push_back(SlotA);
      }
      return s;
    }
    if (x.ks[0] >= 0 && x.ks[2] >= 0)
      return {SlotP, SlotS0, SlotA0, SlotS2, SlotA2};
    if (x.ks[0] >= 0) return {SlotA0};
    if (x.ks[2] >= 0) return {SlotA2};
    return {};
  }

  // tk = tensor dimension of the base (-1 for the bare base), n = shape dim
  void slot_shape(const IxObj& x, int slot, int* tk, int* n) const {
    if (pairs) {
      int k0 = x.ks[0], k1 = x.ks[1];
      if (slot == SlotP) {
        *tk = k0;
        *n = k1 + 1;
      } else if (slot == SlotL) {
        *tk = k0;
        *n = k1;
      } else {
        *tk = -1;
        *n = k1;
      }
    } else {
      int k0 = x.ks[0], k1 = x.ks[1], k2 = x.ks[2];
      int A = std::max(k0, 0), C = std::max(k2, 0);
      switch (slot) {
        case SlotP:
          *tk = k1;
          *n = A + 1 + C;
          break;
        case SlotS0:
          *tk = k1;
          *n = k0;
          break;
        case SlotA0:
          *tk = -1;
          *n = k0;
          break;
        case SlotS2:
          *tk = k1;
          *n = k2;
          break;
        default:
          *tk = -1;
          *n = k2;
          break;
      }
    }
  }

  int add_node(int q, bool lifted, int ixpos, int slot) {
    int b = lifted ? -1 : q;
    PNode nd;
    if (slot == SlotT) {
      nd = pnode_t1();
    } else {
      int tk = 0, n = 0;
      slot_shape(out.ixs[q][ixpos], slot, &tk, &n);
      nd = pnode_plain(tk < 0 ? tc.base(b) : tc.ten(b, tk).P, n);
    }
    int id = (int)out.out.nodes.size();
    out.out.nodes.push_back(nd);
    out.info.push_back({q, lifted, ixpos, slot});
    out.id[{q, lifted ? 1 : 0, ixpos, slot}] = id;
    return id;
  }

  // c is the op-factor component in natural coordinates; on the tensor
  // factor it acts directly as a vertex map
  SMap ten_u(int b1, int k, int b2, int k2, const Mono& c, const SMap& ub) {
    return m_product_map(m_delta(k), tc.base(b1), m_delta(k2), tc.base(b2),
                         delta_smap(c, k, k2), ub, tc.ten(b1, k), tc.ten(b2, k2));
  }

  SMap collapse_u(int b1, int k, int b2, const SMap& ub) {
    Mono cz(k + 1, 0);
    SMap step = m_product_map(m_delta(k), tc.base(b1), m_delta(0), tc.base(b2),
                              delta_smap(cz, k, 0), ub, tc.ten(b1, k), tc.ten(b2, 0));
    return map_compose(tc.ten(b1, k).P.s, tc.ten(b2, 0).P.s, tc.base(b2).s, step,
                       untensor0(tc.ten(b2, 0)));
  }

  std::set<std::tuple<int, int, SMap, Mono>> arrow_seen;

  void arrow(int src, int dst, SMap u, Mono phi) {
    if (!arrow_seen.emplace(src, dst, u, phi).second) return;
    out.out.arrows.push_back(PArr{src, dst, std::move(u), std::move(phi)});
  }

  int nid(int q, bool l, int p, int s) const { return out.id.at({q, l ? 1 : 0, p, s}); }

  // the span P <- L -> A (pairs) resp. P <- S -> A on both sides (triples)
  void slot_arrows(int q, bool lifted, int ixpos) {
    const IxObj& x = out.ixs[q][ixpos];
    int b = lifted ? -1 : q;
    SMap idb = map_identity(tc.base(b).s);
    if (pairs) {
      int k0 = x.ks[0], k1 = x.ks[1];
      if (k1 < 0) return;
      Mono shift(k1 + 1);
      for (int p = 0; p <= k1; ++p) shift[p] = p + 1;
      arrow(nid(q, lifted, ixpos, SlotL), nid(q, lifted, ixpos, SlotP),
            map_identity(tc.ten(b, k0).P.s), shift);
      arrow(nid(q, lifted, ixpos, SlotL), nid(q, lifted, ixpos, SlotA),
            collapse_u(b, k0, b, idb), mono_id(k1));
      return;
    }
    int k0 = x.ks[0], k1 = x.ks[1], k2 = x.ks[2];
    if (k0 < 0 || k2 < 0) return;
    arrow(nid(q, lifted, ixpos, SlotS0), nid(q, lifted, ixpos, SlotP),
          map_identity(tc.ten(b, k1).P.s), mono_id(k0));
    arrow(nid(q, lifted, ixpos, SlotS0), nid(q, lifted, ixpos, SlotA0),
          collapse_u(b, k1, b, idb), mono_id(k0));
    Mono back(k2 + 1);
    for (int p = 0; p <= k2; ++p) back[p] = p + k0 + 1;
    arrow(nid(q, lifted, ixpos, SlotS2), nid(q, lifted, ixpos, SlotP),
          map_identity(tc.ten(b, k1).P.s), back);
    arrow(nid(q, lifted, ixpos, SlotS2), nid(q, lifted, ixpos, SlotA2),
          collapse_u(b, k1, b, idb), mono_id(k2));
  }

  // slot-family arrows induced by componentwise maps comps and base map ub
  void family_arrows(int q1, bool l1, int p1, int q2, bool l2, int p2,
                     const std::vector<Mono>& comps, const SMap& ub) {
    const IxObj& x = out.ixs[q1][p1];
    const IxObj& y = out.ixs[q2][p2];
    int b1 = l1 ? -1 : q1, b2 = l2 ? -1 : q2;
    if (pairs) {
      int k0 = x.ks[0], k1 = x.ks[1];
      int k0b = y.ks[0], k1b = y.ks[1];
      const Mono& c0 = comps[0];
      const Mono& c1 = comps[1];
      Mono phi{0};
      for (int p = 0; p <= k1; ++p) phi.push_back(1 + c1[p]);
      arrow(nid(q1, l1, p1, SlotP), nid(q2, l2, p2, SlotP),
            ten_u(b1, k0, b2, k0b, c0, ub), phi);
      if (k1 >= 0) {
        arrow(nid(q1, l1, p1, SlotL), nid(q2, l2, p2, SlotL),
              ten_u(b1, k0, b2, k0b, c0, ub), c1);
        arrow(nid(q1, l1, p1, SlotA), nid(q2, l2, p2, SlotA), ub, c1);
      }
      return;
    }
    int k0 = x.ks[0], k1 = x.ks[1], k2 = x.ks[2];
    int k0b = y.ks[0], k1b = y.ks[1];
    const Mono& c0 = comps[0];
    const Mono& c1 = comps[1];
    const Mono& c2 = comps[2];
    // a degenerate source block maps into the matching plain copy
    if (k0 < 0 && k2 < 0) return;
    if (k0 < 0) {
      arrow(nid(q1, l1, p1, SlotA2), nid(q2, l2, p2, SlotA2), ub, c2);
      return;
    }
    if (k2 < 0) {
      arrow(nid(q1, l1, p1, SlotA0), nid(q2, l2, p2, SlotA0), ub, c0);
      return;
    }
    Mono phi(k0 + 1 + k2 + 1);
    for (int p = 0; p <= k0; ++p) phi[p] = c0[p];
    for (int qq = 0; qq <= k2; ++qq) phi[k0 + 1 + qq] = k0b + 1 + c2[qq];
    arrow(nid(q1, l1, p1, SlotP), nid(q2, l2, p2, SlotP),
          ten_u(b1, k1, b2, k1b, c1, ub), phi);
    arrow(nid(q1, l1, p1, SlotS0), nid(q2, l2, p2, SlotS0),
          ten_u(b1, k1, b2, k1b, c1, ub), c0);
    arrow(nid(q1, l1, p1, SlotA0), nid(q2, l2, p2, SlotA0), ub, c0);
    arrow(nid(q1, l1, p1, SlotS2), nid(q2, l2, p2, SlotS2),
          ten_u(b1, k1, b2, k1b, c1, ub), c2);
    arrow(nid(q1, l1, p1, SlotA2), nid(q2, l2, p2, SlotA2), ub, c2);
  }

  IxObj cap_ix(int m, int i) const {
    (void)m;
    IxObj cap;
    if (pairs) {
      cap.ks = {0, 0};
      cap.f = {i, i};
    } else {
      cap.ks = {0, 0, 0};
      cap.f = {i, i, i};
    }
    return cap;
  }

  void build(Frag frag, int B, const Seeds& seeds) {
    size_t N = Q->nodes.size();
    out.pairs = pairs;
    out.ixs.resize(N);
    have.resize(N);
    for (const PArr& e : Q->arrows)
      if (Q->nodes[e.src].kind == PKind::t1)
        fail("block: marked node with an outgoing arrow");
    std::vector<std::vector<IxArr>> cat_arrs(N);
    for (size_t q = 0; q < N; ++q) {
      int m = Q->nodes[q].n;
      if (frag == Frag::bounded) {
        IndexCat C = pairs ? build_delta2_over(m, B) : build_delta3_over(m, B);
        for (const IxObj& x : C.obs) add_ix((int)q, x);
        cat_arrs[q] = C.arrs;
      } else {
        for (const IxObj& x :
             (pairs ? pair_fragment(m, frag, B) : triple_fragment(m, frag, B)))
          add_ix((int)q, x);
      }
      for (int i = 0; i <= m; ++i) add_ix((int)q, cap_ix(m, i));
      if (q < seeds.size())
        for (const IxObj& x : seeds[q]) add_ix((int)q, x);
    }
    // close the index sets under pushforward along the input arrows
    bool grew = true;
    while (grew) {
      grew = false;
      for (const PArr& e : Q->arrows)
        for (size_t i = 0; i < out.ixs[e.src].size(); ++i) {
          IxObj y = ix_reduce(ix_push(out.ixs[e.src][i], e.phi));
          size_t before = out.ixs[e.dst].size();
          add_ix(e.dst, y);
          if (out.ixs[e.dst].size() != before) grew = true;
        }
    }
    // nodes
    for (size_t q = 0; q < N; ++q)
      for (size_t p = 0; p < out.ixs[q].size(); ++p)
        for (int s : slot_list(out.ixs[q][p])) add_node((int)q, false, (int)p, s);
    for (size_t q = 0; q < N; ++q)
      for (size_t p = 0; p < out.ixs[q].size(); ++p)
        if (ix_constant(out.ixs[q][p]))
          for (int s : slot_list(out.ixs[q][p])) add_node((int)q, true, (int)p, s);
    for (size_t q = 0; q < N; ++q)
      if (Q->nodes[q].kind == PKind::t1)
        for (int i = 0; i <= Q->nodes[q].n; ++i)
          add_node((int)q, true, find_pos((int)q, cap_ix(Q->nodes[q].n, i)), SlotT);
    // spans inside each block
    for (size_t q = 0; q < N; ++q)
      for (size_t p = 0; p < out.ixs[q].size(); ++p) {
        slot_arrows((int)q, false, (int)p);
        if (ix_constant(out.ixs[q][p])) slot_arrows((int)q, true, (int)p);
      }
    // index category arrows
    for (size_t q = 0; q < N; ++q) {
      SMap idb = map_identity(tc.base((int)q).s);
      SMap ide = map_identity(tc.base(-1).s);
      if (frag == Frag::bounded) {
        // elementary arrows generate every morphism within the bound, and a
        // morphism between constant objects factors through constant
        // intermediates, so the same arrows serve the lifted cluster
        for (const IxArr& a : cat_arrs[q]) {
          if (a.src == a.dst && comps_identity(a.comps)) continue;
          family_arrows((int)q, false, a.src, (int)q, false, a.dst, a.comps, idb);
          if (ix_constant(out.ixs[q][a.src]) && ix_constant(out.ixs[q][a.dst]))
            family_arrows((int)q, true, a.src, (int)q, true, a.dst, a.comps, ide);
        }
      } else {
        for (size_t p1 = 0; p1 < out.ixs[q].size(); ++p1)
          for (size_t p2 = 0; p2 < out.ixs[q].size(); ++p2) {
            bool c1 = ix_constant(out.ixs[q][p1]);
            bool c2 = ix_constant(out.ixs[q][p2]);
            for (const auto& comps : ix_homs(out.ixs[q][p1], out.ixs[q][p2])) {
              if (p1 == p2 && comps_identity(comps)) continue;
              family_arrows((int)q, false, (int)p1, (int)q, false, (int)p2, comps, idb);
              if (c1 && c2)
                family_arrows((int)q, true, (int)p1, (int)q, true, (int)p2, comps, ide);
            }
          }
      }
      // collapse of the constant blocks onto the lifted copies
      SMap tb = terminal_smap(tc.base((int)q));
      for (size_t p = 0; p < out.ixs[q].size(); ++p)
        if (ix_constant(out.ixs[q][p])) {
          std::vector<Mono> idc;
          for (int k : out.ixs[q][p].ks) idc.push_back(k < 0 ? Mono{} : mono_id(k));
          family_arrows((int)q, false, (int)p, (int)q, true, (int)p, idc, tb);
        }
      // marked caps
      if (Q->nodes[q].kind == PKind::t1)
        for (int i = 0; i <= Q->nodes[q].n; ++i) {
          int p = find_pos((int)q, cap_ix(Q->nodes[q].n, i));
          arrow(nid((int)q, true, p, SlotP), nid((int)q, true, p, SlotT),
                untensor0(tc.ten(-1, 0)), mono_id(1));
        }
    }
    // transport along the input arrows
    for (const PArr& e : Q->arrows) {
      SMap ide = map_identity(tc.base(-1).s);
      for (size_t p1 = 0; p1 < out.ixs[e.src].size(); ++p1) {
        std::vector<Mono> sg;
        IxObj y = ix_reduce(ix_push(out.ixs[e.src][p1], e.phi), &sg);
        int p2 = find_pos(e.dst, y);
        family_arrows(e.src, false, (int)p1, e.dst, false, p2, sg, e.u);
        if (ix_constant(out.ixs[e.src][p1]))
          family_arrows(e.src, true, (int)p1, e.dst, true, p2, sg, ide);
      }
    }
  }

  int find_pos(int q, const IxObj& x) const {
    auto it = have[q].find(x);
    if (it == have[q].end()) fail("block: missing index object");
    for (size_t i = 0; i < out.ixs[q].size(); ++i)
      if (out.ixs[q][i] == x) return (int)i;
    fail("block: missing index object");
    return -1;
  }
};

}  // namespace

BlockOut cone_pres(const Pres& Q, Frag frag, int B, const Seeds& seeds) {
  BlockBuild bb;
  bb.Q = &Q;
  bb.tc.Q = &Q;
  bb.pairs = true;
  bb.build(frag, B, seeds);
  return std::move(bb.out);
}

BlockOut cyl_pres(const Pres& Q, Frag frag, int B, const Seeds& seeds) {
  BlockBuild bb;
  bb.Q = &Q;
  bb.tc.Q = &Q;
  bb.pairs = false;
  bb.build(frag, B, seeds);
  return std::move(bb.out);
}

PresMap cone_unit(const Pres& Q, const BlockOut& T) {
  PresMap f;
  for (size_t q = 0; q < Q.nodes.size(); ++q) {
    if (Q.nodes[q].kind != PKind::plain) fail("cone_unit: marked input node");
    int m = Q.nodes[q].n;
    IxObj x;
    x.ks = {0, m};
    x.f = Mono{0};
    for (int v = 0; v <= m; ++v) x.f.push_back(v);
    int p = T.find_ix((int)q, x);
    if (p < 0) fail("cone_unit: missing index object");
    int nd = T.find((int)q, false, p, SlotA);
    if (nd < 0) fail("cone_unit: missing slot");
    f.legs.push_back(Leg{nd, map_identity(Q.nodes[q].a.s), mono_id(m)});
  }
  return f;
}

PresMap cyl_end(const Pres& Q, const BlockOut& T, int end) {
  PresMap f;
  for (size_t q = 0; q < Q.nodes.size(); ++q) {
    if (Q.nodes[q].kind != PKind::plain) fail("cyl_end: marked input node");
    int m = Q.nodes[q].n;
    IxObj x;
    if (end == 0) {
      x.ks = {m, 0, 0};
      for (int v = 0; v <= m; ++v) x.f.push_back(v);
      x.f.push_back(m);
      x.f.push_back(m);
    } else {
      x.ks = {0, 0, m};
      x.f = {0, 0};
      for (int v = 0; v <= m; ++v) x.f.push_back(v);
    }
    int p = T.find_ix((int)q, x);
    if (p < 0) fail("cyl_end: missing index object");
    int nd = T.find((int)q, false, p, end == 0 ? SlotA0 : SlotA2);
    if (nd < 0) fail("cyl_end: missing slot");
    f.legs.push_back(Leg{nd, map_identity(Q.nodes[q].a.s), mono_id(m)});
  }
  return f;
}

PresMap cyl_to_cone_legs(const Pres& Q, const BlockOut& Cyl, const BlockOut& Cone,
                         Seeds* need) {
  if (need) need->assign(Q.nodes.size(), {});
  TenCache tc;
  tc.Q = &Q;
  PresMap F;
  F.legs.resize(Cyl.out.nodes.size());
  for (size_t nd = 0; nd < Cyl.out.nodes.size(); ++nd) {
    const BlockOut::Info& in = Cyl.info[nd];
    int q = in.qnode;
    const IxObj& x = Cyl.ixs[q][in.ix];
    if (in.slot == SlotT) {
      int v = -1;
      ix_constant(x, &v);
      int p = Cone.find_ix(q, IxObj{{0, 0}, {v, v}});
      F.legs[nd] = Leg{Cone.find(q, true, p, SlotT), map_identity(tc.base(-1).s),
                       mono_id(1)};
      continue;
    }
    int k0 = x.ks[0], k1 = x.ks[1], k2 = x.ks[2];
    int A = std::max(k0, 0), C = std::max(k2, 0);
    IxObj y0;
    y0.ks = {k1, k2};
    y0.f = Mono(x.f.begin() + (k0 + 1), x.f.end());
    std::vector<Mono> sg;
    IxObj y = ix_reduce(y0, &sg);
    int p2 = Cone.find_ix(q, y);
    if (p2 < 0) {
      if (!need) fail("cyl_to_cone_legs: missing index object");
      (*need)[q].push_back(y);
      continue;
    }
    int b = in.lifted ? -1 : q;
    SMap ub = map_identity(tc.base(b).s);
    int k1r = y.ks[0], k2r = y.ks[1];
    auto mid_u = [&]() {
      return m_product_map(m_delta(k1), tc.base(b), m_delta(k1r), tc.base(b),
                           delta_smap(sg[0], k1, k1r), ub, tc.ten(b, k1),
                           tc.ten(b, k1r));
    };
    switch (in.slot) {
      case SlotP: {
        Mono phi(A + 1 + C + 1);
        for (int p = 0; p <= A; ++p) phi[p] = 0;
        for (int qq = 0; qq <= C; ++qq)
          phi[A + 1 + qq] = k2 >= 0 ? 1 + sg[1][qq] : 0;
        F.legs[nd] = Leg{Cone.find(q, in.lifted, p2, SlotP), mid_u(), phi};
        break;
      }
      case SlotS0:
      case SlotA0: {
        const MSSet& srcb = in.slot == SlotS0 ? tc.ten(b, k1).P : tc.base(b);
        F.legs[nd] = Leg{Cone.find(q, in.lifted, p2, SlotP),
                         vertex_collapse(srcb, tc.ten(b, k1r).P), Mono(k0 + 1, 0)};
        break;
      }
      case SlotS2:
        F.legs[nd] = Leg{Cone.find(q, in.lifted, p2, SlotL), mid_u(), sg[1]};
        break;
      default:
        F.legs[nd] = Leg{Cone.find(q, in.lifted, p2, SlotA), ub, sg[1]};
        break;
    }
  }
  return F;
}

SegObj trunc_seg(int k, const SegObj& C) {
  SegObj out = C;
  int cut = k >= 2 ? k - 1 : 1;
  for (int l = 0; l <= C.M; ++l) out.levels[l] = truncate(cut, C.levels[l]);
  if (k == 1)
    for (size_t g = 0; g < out.levels[1].s.gens.size(); ++g)
      if (out.levels[1].s.gens[g].dim == 0) out.tC.insert((int)g);
  return out;
}

}  // namespace cx
