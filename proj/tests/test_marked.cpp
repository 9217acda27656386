#include <doctest.h>

#include "cx/marked.hpp"

using namespace cx;

namespace {
// Generator id of the product simplex with the given vertex maps.
int prod_gen(const MProd& M, int nx, int ny, const Mono& fx, const Mono& fy) {
  Simplex x = delta_simplex(nx, fx), y = delta_simplex(ny, fy);
  Simplex p = M.prod.embed(delta(nx), delta(ny), x, y);
  REQUIRE(!p.degenerate());
  return p.gen;
}
}  // namespace

TEST_CASE("standard marked objects") {
  CHECK(m_delta_t(1).marks == std::set<int>{delta_id(1, {0, 1})});
  CHECK(m_delta_t(0).marks.empty());

  MSSet nk = m_nk(2, 1);  // everything containing {0,1,2} cap [2]
  CHECK(nk.marks == std::set<int>{delta_id(2, {0, 1, 2})});
  MSSet nk0 = m_nk(2, 0);  // everything containing {0,1}
  CHECK(nk0.marks == std::set<int>({delta_id(2, {0, 1}), delta_id(2, {0, 1, 2})}));

  MSSet p = m_nk_p(2, 1);
  CHECK(p.marks == std::set<int>({delta_id(2, {0, 1, 2}), delta_id(2, {1, 2}),
                                  delta_id(2, {0, 1})}));
  MSSet pp = m_nk_pp(2, 1);
  // ([2]^1)'' marks every positive-dimensional simplex
  CHECK(pp.marks == m_sharp(2).marks);

  MSSet eq = m_eq3();
  CHECK(eq.marks == std::set<int>({delta_id(3, {0, 1, 2, 3}), delta_id(3, {0, 2}),
                                   delta_id(3, {1, 3})}));

  SMap incl;
  MSSet H = m_horn(3, 1, &incl);
  CHECK(H.s.count(2) == 3);
  CHECK(mmap_valid(H, m_nk(3, 1), incl));
}

TEST_CASE("mark validity and mono classification") {
  MSSet t1 = m_delta_t(1), d1 = m_delta(1);
  SMap id = map_identity(d1.s);
  CHECK(mmap_valid(d1, t1, id));
  CHECK(!mmap_valid(t1, d1, id));
  CHECK(classify_mono(d1, t1, id) == MonoClass::entire);
  CHECK(classify_mono(t1, t1, id) == MonoClass::entire);

  SMap incl;
  MSSet H = m_horn(2, 1, &incl);
  CHECK(classify_mono(H, m_nk(2, 1), incl) == MonoClass::regular);

  // flat horn into [2]^0: the 01 edge of the horn fails to be marked
  MSSet Hflat{H.s, {}};
  CHECK(classify_mono(Hflat, m_nk(2, 0), incl) == MonoClass::neither);
}

TEST_CASE("marked join") {
  // [1]_t * [0] = [2] with 01 and 012 marked
  MJoin J = m_join(m_delta_t(1), m_delta(0));
  CHECK(J.J.s.counts() == std::vector<size_t>{3, 3, 1});
  auto iso = m_iso_search(J.J, MSSet{delta(2), {delta_id(2, {0, 1}),
                                                delta_id(2, {0, 1, 2})}});
  CHECK(iso.has_value());

  // [0] * [1]_t marks 12 and 012 instead
  MJoin J2 = m_join(m_delta(0), m_delta_t(1));
  auto iso2 = m_iso_search(J2.J, MSSet{delta(2), {delta_id(2, {1, 2}),
                                                  delta_id(2, {0, 1, 2})}});
  CHECK(iso2.has_value());

  // underlying join of simplices is a simplex
  MJoin J3 = m_join(m_delta(2), m_delta(1));
  CHECK(iso_search(J3.J.s, delta(4)).has_value());

  // join with the empty object is the identity
  MJoin J4 = m_join(m_delta_t(1), m_empty());
  CHECK(m_iso_search(J4.J, m_delta_t(1)).has_value());
  MJoin J5 = m_join(m_empty(), m_delta_t(1));
  CHECK(m_iso_search(J5.J, m_delta_t(1)).has_value());
}

TEST_CASE("join associativity on underlying marked sets") {
  MSSet a = m_delta_t(1), b = m_delta(0), c = m_delta_t(0);
  MJoin ab = m_join(a, b);
  MJoin ab_c = m_join(ab.J, c);
  MJoin bc = m_join(b, c);
  MJoin a_bc = m_join(a, bc.J);
  auto iso = m_iso_search(ab_c.J, a_bc.J);
  CHECK(iso.has_value());
}

TEST_CASE("pre-tensor marking tables") {
  // flat [1] x [1]: no thin simplices at all
  MProd T = pretensor(m_delta(1), m_delta(1));
  CHECK(T.P.s.counts() == std::vector<size_t>{4, 5, 2});
  CHECK(T.P.marks.empty());

  // flat [2] x [1]: exactly one thin simplex, the 3-simplex
  // with vertex maps ((0,1,2,2),(0,0,0,1))
  MProd U = pretensor(m_delta(2), m_delta(1));
  int g = prod_gen(U, 2, 1, Mono{0, 1, 2, 2}, Mono{0, 0, 0, 1});
  CHECK(U.P.marks == std::set<int>{g});

  // [1]_t x [1]: the 02-respecting triangle ((0,0,1),(0,1,1)) becomes thin
  MProd V = pretensor(m_delta_t(1), m_delta(1));
  int h = prod_gen(V, 1, 1, Mono{0, 0, 1}, Mono{0, 1, 1});
  CHECK(V.P.marks.count(h) == 1);
  int h2 = prod_gen(V, 1, 1, Mono{0, 1, 1}, Mono{0, 0, 1});
  CHECK(V.P.marks.count(h2) == 0);
  // the marked edge paired with a degenerate edge stays thin
  CHECK(pretensor_thin(m_delta_t(1), m_delta(0),
                       Simplex{delta_id(1, {0, 1}), {}}, Simplex{0, {0}}));
}

TEST_CASE("pre-tensor units") {
  // X (x) [0] = X and [0] (x) Y = Y as marked sets
  for (const MSSet& X : {m_delta_t(2), m_nk(3, 1), m_eq3()}) {
    MProd R = pretensor(X, m_delta(0));
    auto iso = m_iso_search(R.P, X);
    CHECK(iso.has_value());
    MProd L = pretensor(m_delta(0), X);
    auto iso2 = m_iso_search(L.P, X);
    CHECK(iso2.has_value());
  }
}

TEST_CASE("tensor and truncation") {
  // [1] (x) [0] with the left factor fully truncated is [1]_t
  MProd T = tensor(m_delta(1), m_delta(0));
  CHECK(m_iso_search(T.P, m_delta_t(1)).has_value());

  // truncation laws
  MSSet X = m_nk(3, 1);
  CHECK(truncate(OMEGA, X) == X);
  CHECK(truncate(2, truncate(3, X)) == truncate(2, X));
  CHECK(truncate(3, truncate(2, X)) == truncate(2, X));
  CHECK(truncate(1, m_delta(2)) == m_sharp(2));
}

TEST_CASE("cartesian marked product") {
  MProd P = m_product(m_delta_t(1), m_delta_t(1));
  // thin cells: the two triangles (degenerate coordinates are thin),
  // the diagonal and the two marked edge factors paired with vertices
  Simplex e{delta_id(1, {0, 1}), {}};
  Simplex v0{delta_id(1, {0}), {}}, v1{delta_id(1, {1}), {}};
  const SSet D1 = delta(1);
  CHECK(P.P.marks.count(P.prod.embed(D1, D1, e, e).gen) == 1);
  CHECK(P.P.marks.count(P.prod.embed(D1, D1, e, degen(D1, v0, 0)).gen) == 1);
  CHECK(P.P.marks.size() == 7);
}

TEST_CASE("suspension and globes") {
  // Sigma [0] = [1]
  MSSet S = suspension(m_delta(0));
  CHECK(m_iso_search(S, m_delta(1)).has_value());
  // globes have two cells in every dimension below the top
  MSSet G2 = globe(2);
  CHECK(G2.s.counts() == std::vector<size_t>{2, 2, 1});
  CHECK(G2.marks.empty());
  MSSet G3 = globe(3);
  CHECK(G3.s.counts() == std::vector<size_t>{2, 2, 2, 1});
  CHECK(coglobe(2).s.counts() == std::vector<size_t>{2, 2, 1});
  CHECK(m_iso_search(globe(1), coglobe(1)).has_value());
  // Gb_2 and its co-variant collapse opposite ends of the join, so their
  // top cells have the degenerate face in different positions
  CHECK(!iso_search(G2.s, coglobe(2).s).has_value());
}

TEST_CASE("diamond") {
  // [0] <> [0] = [1]
  MSSet D = diamond0(m_delta(0));
  CHECK(m_iso_search(D, m_delta(1)).has_value());
  // [0] <> [1] is a quotient of [1] x [1] with 2 vertices in the image of {0}xX
  MSSet D2 = diamond0(m_delta(1));
  CHECK(D2.s.count(0) == 3);
  CHECK(D2.s.count(2) == 2);
}

TEST_CASE("marked colimits") {
  // glue [1]_t and [1] along a vertex; the mark survives
  MSSet pt = m_delta(0);
  SMap to1(1), to0(1);
  to1[0] = Simplex{delta_id(1, {1}), {}};
  to0[0] = Simplex{delta_id(1, {0}), {}};
  MPushout P = m_pushout(pt, m_delta_t(1), m_delta(1), to1, to0);
  CHECK(P.P.s.counts() == std::vector<size_t>{3, 2});
  CHECK(P.P.marks.size() == 1);
  CHECK(P.P.marks.count(P.from_b[delta_id(1, {0, 1})].gen) == 1);

  // collapsing the marked edge of [1]_t kills the mark
  SMap incl(1);
  incl[0] = Simplex{delta_id(1, {0, 1}), {}};
  MSSet edge{delta(1), {delta_id(1, {0, 1})}};
  SMap einc = map_identity(edge.s);
  MPushout Q = m_collapse(edge, m_delta_t(1), einc);
  CHECK(Q.P.s.counts() == std::vector<size_t>{1});
  CHECK(Q.P.marks.empty());
}

TEST_CASE("anodyne families") {
  auto horns = anodyne_family(AnodyneKind::horn, 3);
  CHECK(horns.size() == 2 + 3 + 4);
  for (const auto& a : horns) {
    CHECK(mmap_valid(a.src, a.dst, a.arrow));
    CHECK(classify_mono(a.src, a.dst, a.arrow) == MonoClass::regular);
  }
  auto thins = anodyne_family(AnodyneKind::thinness, 3);
  CHECK(thins.size() == 3 + 4);
  for (const auto& a : thins) {
    CHECK(mmap_valid(a.src, a.dst, a.arrow));
    CHECK(classify_mono(a.src, a.dst, a.arrow) == MonoClass::entire);
  }
  auto sats = anodyne_family(AnodyneKind::saturation, 1);
  CHECK(sats.size() == 3);  // n = -1, 0, 1
  for (const auto& a : sats) {
    CHECK(mmap_valid(a.src, a.dst, a.arrow));
    CHECK(classify_mono(a.src, a.dst, a.arrow) == MonoClass::entire);
  }
  auto trivs = anodyne_family(AnodyneKind::triviality, 4, 2);
  CHECK(trivs.size() == 2);  // n = 3, 4
  CHECK(anodyne_family(AnodyneKind::triviality, 4, OMEGA).empty());
}
