#include "cx/lifting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace cx {

namespace {

// Generators of X in increasing dimension, stable within a dimension.
std::vector<int> gens_by_dim(const SSet& X) {
  std::vector<int> order(X.gens.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return X.gens[a].dim < X.gens[b].dim; });
  return order;
}

// Backtracking over generator images.  forced pins individual generators
// (used for extension problems).  emit returns false to stop the search.
void search_maps(const MSSet& X, const MSSet& Y,
                 const std::vector<std::optional<Simplex>>& forced,
                 const std::function<bool(const SMap&)>& emit) {
  const std::vector<int> order = gens_by_dim(X.s);
  std::map<int, std::vector<Simplex>> cand;
  for (int g : order) {
    int d = X.s.gens[g].dim;
    if (!cand.count(d)) cand[d] = simplices(Y.s, d);
  }
  SMap cur(X.s.gens.size());
  bool stop = false;
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (stop) return;
    if (pos == order.size()) {
      if (!emit(cur)) stop = true;
      return;
    }
    int g = order[pos];
    const Gen& gen = X.s.gens[g];
    auto ok = [&](const Simplex& im) {
      if (X.marks.count(g) && !thin(Y, im)) return false;
      for (int i = 0; i <= gen.dim && gen.dim > 0; ++i) {
        Simplex want = map_apply(Y.s, cur, X.s, gen.faces[i]);
        if (face(Y.s, im, i) != want) return false;
      }
      return true;
    };
    if (forced.size() > (size_t)g && forced[g]) {
      if (ok(*forced[g])) {
        cur[g] = *forced[g];
        rec(pos + 1);
      }
      return;
    }
    for (const Simplex& im : cand[gen.dim]) {
      if (!ok(im)) continue;
      cur[g] = im;
      rec(pos + 1);
      if (stop) return;
    }
  };
  rec(0);
}

}  // namespace

std::vector<SMap> enumerate_maps(const MSSet& X, const MSSet& Y) {
  std::vector<SMap> out;
  search_maps(X, Y, {}, [&](const SMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

RlpReport has_rlp(const MSSet& X, const MSSet& A, const MSSet& B, const SMap& i) {
  if (!map_mono(A.s, B.s, i)) throw std::invalid_argument("has_rlp: i not mono");
  RlpReport r;
  r.attachments = enumerate_maps(A, X);
  for (size_t ui = 0; ui < r.attachments.size(); ++ui) {
    const SMap& u = r.attachments[ui];
    std::vector<std::optional<Simplex>> forced(B.s.gens.size());
    for (size_t ga = 0; ga < A.s.gens.size(); ++ga) forced[i[ga].gen] = u[ga];
    std::optional<SMap> ext;
    search_maps(B, X, forced, [&](const SMap& v) {
      ext = v;
      return false;
    });
    r.extensions.push_back(ext);
    if (!ext && r.ok) {
      r.ok = false;
      r.first_failure = (int)ui;
    }
  }
  return r;
}

bool has_rlp_brute(const MSSet& X, const MSSet& A, const MSSet& B, const SMap& i) {
  std::set<SMap> restrictions;
  for (const SMap& v : enumerate_maps(B, X)) {
    SMap u(A.s.gens.size());
    for (size_t ga = 0; ga < A.s.gens.size(); ++ga)
      u[ga] = map_apply(X.s, v, B.s, i[ga]);
    restrictions.insert(u);
  }
  for (const SMap& u : enumerate_maps(A, X))
    if (!restrictions.count(u)) return false;
  return true;
}

bool SquareSpec::commutes(std::string* err) const {
  if (!mmap_valid(A, B, f, err) || !mmap_valid(A, C, g, err) ||
      !mmap_valid(B, D, h, err) || !mmap_valid(C, D, k, err))
    return false;
  SMap hf = map_compose(A.s, B.s, D.s, f, h);
  SMap kg = map_compose(A.s, C.s, D.s, g, k);
  if (hf != kg) {
    if (err) *err = "square does not commute";
    return false;
  }
  return true;
}

bool is_cocartesian(const SquareSpec& s) {
  std::string err;
  if (!s.commutes(&err)) throw std::invalid_argument("is_cocartesian: " + err);
  MPushout po = m_pushout(s.A, s.B, s.C, s.f, s.g);
  SMap hf = map_compose(s.A.s, s.B.s, s.D.s, s.f, s.h);
  auto u = m_mediating(po.col, s.D, {hf, s.h, s.k});
  if (!u) return false;
  // u must be a marked isomorphism: mono, onto the generators, marks equal.
  if (!map_mono(po.P.s, s.D.s, *u)) return false;
  std::vector<bool> hit(s.D.s.gens.size(), false);
  for (size_t g = 0; g < po.P.s.gens.size(); ++g) {
    const Simplex& im = (*u)[g];
    if (im.degenerate()) return false;
    hit[im.gen] = true;
    bool mp = po.P.marks.count((int)g) > 0;
    bool md = s.D.marks.count(im.gen) > 0;
    if (mp != md) return false;
  }
  for (bool b : hit)
    if (!b) return false;
  return true;
}

bool is_cocartesian_brute(const SquareSpec& s, const std::vector<MSSet>& extra_probes) {
  std::string err;
  if (!s.commutes(&err)) throw std::invalid_argument("is_cocartesian_brute: " + err);
  std::vector<MSSet> probes = {m_pushout(s.A, s.B, s.C, s.f, s.g).P, s.D};
  probes.insert(probes.end(), extra_probes.begin(), extra_probes.end());
  for (const MSSet& Z : probes) {
    // commuting cocones under the span
    std::set<std::pair<SMap, SMap>> cocones;
    for (const SMap& b : enumerate_maps(s.B, Z))
      for (const SMap& c : enumerate_maps(s.C, Z))
        if (map_compose(s.A.s, s.B.s, Z.s, s.f, b) ==
            map_compose(s.A.s, s.C.s, Z.s, s.g, c))
          cocones.insert({b, c});
    std::set<std::pair<SMap, SMap>> through_d;
    size_t n_v = 0;
    for (const SMap& v : enumerate_maps(s.D, Z)) {
      ++n_v;
      through_d.insert({map_compose(s.B.s, s.D.s, Z.s, s.h, v),
                        map_compose(s.C.s, s.D.s, Z.s, s.k, v)});
    }
    if (through_d.size() != n_v) return false;  // not injective
    if (through_d != cocones) return false;     // not surjective
  }
  return true;
}

ComplicialReport bounded_complicial_check(const MSSet& X, int d, int N) {
  ComplicialReport r;
  r.d = d;
  r.N = N;
  std::vector<AnodyneGen> gens;
  for (AnodyneKind kind : {AnodyneKind::horn, AnodyneKind::thinness,
                           AnodyneKind::saturation, AnodyneKind::triviality}) {
    auto fam = anodyne_family(kind, N, d);
    gens.insert(gens.end(), fam.begin(), fam.end());
  }
  for (const AnodyneGen& a : gens) {
    bool ok = has_rlp(X, a.src, a.dst, a.arrow).ok;
    r.items.push_back({a.label, ok});
    if (!ok) r.pass = false;
  }
  return r;
}

Leibniz leibniz(const MSSet& A, const MSSet& B, const SMap& f,
                const MSSet& X, const MSSet& Y, const SMap& g, Bifun op) {
  if (!map_mono(A.s, B.s, f) || !map_mono(X.s, Y.s, g))
    throw std::invalid_argument("leibniz: inputs must be monomorphisms");
  SMap idA = map_identity(A.s), idB = map_identity(B.s);
  SMap idX = map_identity(X.s), idY = map_identity(Y.s);
  MSSet AX, BX, AY, BY;
  SMap fX, Ag, fY, Bg;
  if (op == Bifun::join) {
    MJoin jAX = m_join(A, X), jBX = m_join(B, X), jAY = m_join(A, Y),
          jBY = m_join(B, Y);
    AX = jAX.J;
    BX = jBX.J;
    AY = jAY.J;
    BY = jBY.J;
    fX = m_join_map(A, X, B, X, f, idX, jAX, jBX);
    Ag = m_join_map(A, X, A, Y, idA, g, jAX, jAY);
    fY = m_join_map(A, Y, B, Y, f, idY, jAY, jBY);
    Bg = m_join_map(B, X, B, Y, idB, g, jBX, jBY);
  } else {
    auto mk = [&](const MSSet& U, const MSSet& V) {
      switch (op) {
        case Bifun::product: return m_product(U, V);
        case Bifun::pretensor: return pretensor(U, V);
        default: return tensor(U, V);
      }
    };
    MProd pAX = mk(A, X), pBX = mk(B, X), pAY = mk(A, Y), pBY = mk(B, Y);
    AX = pAX.P;
    BX = pBX.P;
    AY = pAY.P;
    BY = pBY.P;
    fX = m_product_map(A, X, B, X, f, idX, pAX, pBX);
    Ag = m_product_map(A, X, A, Y, idA, g, pAX, pAY);
    fY = m_product_map(A, Y, B, Y, f, idY, pAY, pBY);
    Bg = m_product_map(B, X, B, Y, idB, g, pBX, pBY);
  }
  Leibniz L;
  L.src = m_pushout(AX, BX, AY, fX, Ag);
  L.dst = BY;
  SMap corner = map_compose(AX.s, BX.s, BY.s, fX, Bg);
  auto arrow = m_mediating(L.src.col, BY, {corner, Bg, fY});
  if (!arrow) throw std::runtime_error("leibniz: mediating map failed");
  L.arrow = *arrow;
  return L;
}

}  // namespace cx
