#include <doctest.h>

#include "cx/segal.hpp"

using namespace cx;

namespace {
std::vector<size_t> level_counts(const SegObj& C, int l) { return C.levels[l].s.counts(); }
}  // namespace

TEST_CASE("generator objects") {
  SegObj pt = gen(m_delta(0), 0);
  CHECK(seg_valid(pt));
  for (int l = 0; l <= pt.M; ++l) CHECK(pt.levels[l].s.gens.size() == 1);

  SegObj I = gen(m_delta(0), 1);
  CHECK(seg_valid(I));
  CHECK(I.levels[0].s.gens.size() == 2);
  CHECK(I.levels[1].s.gens.size() == 3);  // 00, 01, 11
  CHECK(I.levels[2].s.gens.size() == 4);
  CHECK(I.tC.size() == 2);  // degenerate vertices only

  SegObj G = gen(m_delta(1), 1);
  CHECK(seg_valid(G));
  CHECK(G.levels[0].s.gens.size() == 2);
  CHECK(level_counts(G, 1) == std::vector<size_t>{4, 1});  // Delta[1] + 2 points

  SegObj T = gen1t();
  CHECK(seg_valid(T));
  CHECK(T.tC.size() == 3);

  // a marked-edge shape gives the same object
  SegObj T2 = gen_marked_shape(m_delta_t(1), 3);
  CHECK(seg_valid(T2));
  CHECK(seg_iso(T, T2).has_value());

  // marked bases keep their marks on every copy
  SegObj Gt = gen(m_delta_t(1), 1);
  CHECK(Gt.levels[1].marks.size() == 1);
}

TEST_CASE("structure maps") {
  SegObj C = gen(m_delta(1), 2);
  CHECK(seg_valid(C));
  CHECK(seg_structure(C, 2, mono_id(2)) == map_identity(C.levels[2].s));
  // composite of a degeneracy and a face
  Mono phi = {0, 0, 2};  // [2] -> [2]
  SMap direct = seg_structure(C, 2, phi);
  SMap s0 = seg_structure(C, 1, Mono{0, 0, 1});
  SMap d1 = seg_structure(C, 2, Mono{0, 2});
  CHECK(direct == map_compose(C.levels[2].s, C.levels[1].s, C.levels[2].s, d1, s0));
}

TEST_CASE("generator maps") {
  SegObj I = gen(m_delta(0), 1);
  SegObj C2 = gen(m_delta(0), 2);
  SegMap f = gen_map(m_delta(0), 1, m_delta(0), 2, map_identity(delta(0)), Mono{0, 2});
  CHECK(seg_map_valid(I, C2, f));
  SegObj G = gen(m_delta(1), 1);
  SMap collapse = terminal_smap(m_delta(1));
  SegMap g = gen_map(m_delta(1), 1, m_delta(0), 1, collapse, mono_id(1));
  CHECK(seg_map_valid(G, I, g));
}

TEST_CASE("wedges") {
  MSSet e = m_delta(0);
  std::vector<WedgePart> parts = {{e, 1, map_identity(delta(0))},
                                  {e, 1, map_identity(delta(0))}};
  Wedge W = wedge(e, parts, 3);
  SegObj C2 = gen(e, 2);
  CHECK(seg_valid(W.val.col.C));
  CHECK(seg_iso(W.val.col.C, C2).has_value());

  // one nontrivial part
  std::vector<WedgePart> parts2 = {{e, 1, map_identity(delta(0))},
                                   {m_delta(1), 1, delta_smap(Mono{0}, 0, 1)}};
  Wedge W2 = wedge(e, parts2, 3);
  CHECK(seg_valid(W2.val.col.C));
  CHECK(W2.val.col.C.levels[0].s.gens.size() == 3);
}

TEST_CASE("colimits and mediating maps") {
  // pushout of two intervals along an endpoint = wedge
  SegObj I = gen(m_delta(0), 1);
  SegObj P = gen(m_delta(0), 0);
  SegDiagram D;
  D.obs = {P, I, I};
  D.arrs.push_back(SegArr{0, 1, gen_map(m_delta(0), 0, m_delta(0), 1,
                                        map_identity(delta(0)), Mono{1})});
  D.arrs.push_back(SegArr{0, 2, gen_map(m_delta(0), 0, m_delta(0), 1,
                                        map_identity(delta(0)), Mono{0})});
  SegColimit col = seg_colimit(D);
  CHECK(seg_valid(col.C));
  CHECK(col.C.levels[0].s.gens.size() == 3);
  CHECK(col.C.levels[1].s.gens.size() == 5);

  // square detection
  SegSquare sq;
  sq.A = P;
  sq.B = I;
  sq.C = I;
  sq.D = col.C;
  sq.f = D.arrs[0].f;
  sq.g = D.arrs[1].f;
  sq.h = col.inj[1];
  sq.k = col.inj[2];
  CHECK(seg_cocartesian(sq));
  SegSquare bad = sq;
  bad.D = trunc_seg(1, col.C);
  CHECK(!seg_cocartesian(bad));
}

TEST_CASE("presented maps") {
  MSSet e = m_delta(0);
  std::vector<WedgePart> parts = {{e, 1, map_identity(delta(0))},
                                  {e, 1, map_identity(delta(0))}};
  Wedge W = wedge(e, parts, 3);
  Pres Q = pres_gen(e, 2);
  PresVal QV = pres_eval(Q, 3);
  PresMap f;
  f.legs.resize(W.pres.nodes.size());
  f.legs[0] = Leg{0, map_identity(delta(0)), mono_id(2)};
  f.legs[1] = Leg{0, map_identity(delta(0)), Mono{0, 1}};
  f.legs[2] = Leg{0, map_identity(delta(0)), Mono{0, 1}};
  f.legs[3] = Leg{0, map_identity(delta(0)), Mono{1, 2}};
  f.legs[4] = Leg{0, map_identity(delta(0)), Mono{1, 2}};
  auto m = pres_map_eval(W.pres, W.val, Q, QV, f, 3);
  REQUIRE(m.has_value());
  CHECK(seg_map_is_iso(W.val.col.C, QV.col.C, *m));
}

TEST_CASE("distinguished small objects") {
  SegObj E = e_iso();
  CHECK(seg_valid(E));
  CHECK(E.levels[0].s.gens.size() == 2);
  SegObj EP = e_isoP();
  CHECK(seg_valid(EP));
  CHECK(EP.tC.size() == E.tC.size() + 1);
  // same underlying levels
  for (int l = 0; l <= 3; ++l)
    CHECK(EP.levels[l].s.counts() == E.levels[l].s.counts());
}

TEST_CASE("truncations") {
  SegObj I = gen(m_delta(0), 1);
  CHECK(seg_iso(trunc_seg(1, I), gen1t()).has_value());
  SegObj G = gen(m_delta(1), 1);
  CHECK(seg_iso(trunc_seg(2, G), gen(m_delta_t(1), 1)).has_value());
  SegObj T = gen1t();
  for (int k = 1; k <= 3; ++k) CHECK(seg_iso(trunc_seg(k, T), T).has_value());
  SegObj pt = gen(m_delta(0), 0);
  CHECK(seg_iso(trunc_seg(1, pt), pt).has_value());
}

namespace {

SMap vertex_of_tensor(const MProd& T, const MSSet& y, int v) {
  SMap f;
  for (size_t g = 0; g < y.s.gens.size(); ++g) {
    Simplex vx{delta_simplex(1, Mono{v}).gen, {}};
    for (int d = y.s.gens[g].dim - 1; d >= 0; --d) vx.word.push_back(d);
    f.push_back(T.prod.embed(delta(1), y.s, vx, Simplex{(int)g, {}}));
  }
  return f;
}

SegObj cone_zigzag(bool marked) {
  MSSet e = m_delta(0);
  MProd T1 = tensor(m_delta(1), e);
  SMap ide = map_identity(e.s);
  SegDiagram D;
  D.obs = {gen(e, 1), gen(e, 2), gen(e, 1), gen(T1.P, 1), gen(e, 1)};
  D.arrs.push_back(SegArr{0, 1, gen_map(e, 1, e, 2, ide, Mono{0, 1})});
  D.arrs.push_back(SegArr{2, 1, gen_map(e, 1, e, 2, ide, Mono{0, 2})});
  D.arrs.push_back(SegArr{2, 3, gen_map(e, 1, T1.P, 1, vertex_of_tensor(T1, e, 1),
                                        Mono{0, 1})});
  D.arrs.push_back(SegArr{4, 3, gen_map(e, 1, T1.P, 1, vertex_of_tensor(T1, e, 0),
                                        Mono{0, 1})});
  if (marked) {
    int c0 = (int)D.obs.size();
    D.obs.push_back(gen1t());
    D.arrs.push_back(SegArr{0, c0, gen_map(e, 1, e, 1, ide, Mono{0, 1})});
    int c1 = (int)D.obs.size();
    D.obs.push_back(gen1t());
    D.arrs.push_back(SegArr{4, c1, gen_map(e, 1, e, 1, ide, Mono{0, 1})});
  }
  return seg_colimit(D).C;
}

SegObj cyl_zigzag(bool marked) {
  MSSet e = m_delta(0);
  MProd T1 = tensor(m_delta(1), e);
  SMap ide = map_identity(e.s);
  SegDiagram D;
  D.obs = {gen(e, 1), gen(e, 2), gen(e, 1), gen(T1.P, 1),
           gen(e, 1), gen(e, 2), gen(e, 1)};
  D.arrs.push_back(SegArr{0, 1, gen_map(e, 1, e, 2, ide, Mono{0, 1})});
  D.arrs.push_back(SegArr{2, 1, gen_map(e, 1, e, 2, ide, Mono{0, 2})});
  D.arrs.push_back(SegArr{2, 3, gen_map(e, 1, T1.P, 1, vertex_of_tensor(T1, e, 1),
                                        Mono{0, 1})});
  D.arrs.push_back(SegArr{4, 3, gen_map(e, 1, T1.P, 1, vertex_of_tensor(T1, e, 0),
                                        Mono{0, 1})});
  D.arrs.push_back(SegArr{4, 5, gen_map(e, 1, e, 2, ide, Mono{0, 2})});
  D.arrs.push_back(SegArr{6, 5, gen_map(e, 1, e, 2, ide, Mono{1, 2})});
  if (marked) {
    int c0 = (int)D.obs.size();
    D.obs.push_back(gen1t());
    D.arrs.push_back(SegArr{0, c0, gen_map(e, 1, e, 1, ide, Mono{0, 1})});
    int c1 = (int)D.obs.size();
    D.obs.push_back(gen1t());
    D.arrs.push_back(SegArr{6, c1, gen_map(e, 1, e, 1, ide, Mono{0, 1})});
  }
  return seg_colimit(D).C;
}

}  // namespace

TEST_CASE("cone of the interval") {
  SegObj Z = cone_zigzag(false);
  Pres Q = pres_gen(m_delta(0), 1);
  for (Frag f : {Frag::minimal, Frag::reduced}) {
    BlockOut T = cone_pres(Q, f);
    SegObj V = pres_eval(T.out, 3).col.C;
    CHECK(seg_iso(V, Z).has_value());
  }
  BlockOut T3 = cone_pres(Q, Frag::bounded, 3);
  SegObj V3 = pres_eval(T3.out, 3).col.C;
  CHECK(seg_iso(V3, Z).has_value());
  // bound stability: the value does not change between bounds 3 and 4
  BlockOut T4 = cone_pres(Q, Frag::bounded, 4);
  CHECK(seg_iso(pres_eval(T4.out, 3).col.C, V3).has_value());
}

TEST_CASE("marked cone of the marked interval") {
  SegObj Z = cone_zigzag(true);
  BlockOut T = cone_pres(pres_gen1t(), Frag::reduced);
  SegObj V = pres_eval(T.out, 3).col.C;
  CHECK(seg_iso(V, Z).has_value());
}

TEST_CASE("cylinder of the interval") {
  SegObj Z = cyl_zigzag(false);
  Pres Q = pres_gen(m_delta(0), 1);
  BlockOut T = cyl_pres(Q, Frag::reduced);
  SegObj V = pres_eval(T.out, 3).col.C;
  CHECK(seg_iso(V, Z).has_value());
  BlockOut T3 = cyl_pres(Q, Frag::bounded, 3);
  CHECK(seg_iso(pres_eval(T3.out, 3).col.C, Z).has_value());
}

TEST_CASE("marked cylinder of the marked interval") {
  SegObj Z = cyl_zigzag(true);
  BlockOut T = cyl_pres(pres_gen1t(), Frag::reduced);
  SegObj V = pres_eval(T.out, 3).col.C;
  CHECK(seg_iso(V, Z).has_value());
}

TEST_CASE("cylinder endpoints and the projection to the cone") {
  Pres Q = pres_gen(m_delta(0), 1);
  BlockOut Cyl = cyl_pres(Q, Frag::reduced);
  PresVal CylV = pres_eval(Cyl.out, 3);
  PresVal QV = pres_eval(Q, 3);
  auto e0 = pres_map_eval(Q, QV, Cyl.out, CylV, cyl_end(Q, Cyl, 0), 3);
  auto e1 = pres_map_eval(Q, QV, Cyl.out, CylV, cyl_end(Q, Cyl, 1), 3);
  REQUIRE(e0.has_value());
  REQUIRE(e1.has_value());
  CHECK(!seg_map_equal(*e0, *e1));

  BlockOut Cone = cone_pres(Q, Frag::reduced);
  PresVal ConeV = pres_eval(Cone.out, 3);
  PresMap pr = cyl_to_cone_legs(Q, Cyl, Cone);
  auto m = pres_map_eval(Cyl.out, CylV, Cone.out, ConeV, pr, 3);
  REQUIRE(m.has_value());
  // the unit of the cone composes with nothing collapsed on the far side
  auto u = pres_map_eval(Q, QV, Cone.out, ConeV, cone_unit(Q, Cone), 3);
  REQUIRE(u.has_value());
  CHECK(seg_map_equal(*u, seg_map_compose(QV.col.C, CylV.col.C, ConeV.col.C,
                                          *e1, *m)));
}

TEST_CASE("cone of the interval-based arrow") {
  // The value glues a triangle with its first edge collapsed, the base arrow,
  // the collapsed tensor and the cone edge.
  MSSet e = m_delta(0);
  MSSet a = m_delta(1);
  SMap ide = map_identity(e.s);
  SMap ida = map_identity(a.s);
  EStar E = estar(a);
  SegDiagram D;
  D.obs = {gen(e, 1), gen(a, 2), gen(a, 1), gen(e, 1), gen(a, 1),
           gen(E.V, 1), gen(e, 1)};
  D.arrs.push_back(SegArr{2, 1, gen_map(a, 1, a, 2, ida, Mono{0, 1})});
  D.arrs.push_back(SegArr{2, 3, gen_map(a, 1, e, 1, terminal_smap(a), Mono{0, 1})});
  D.arrs.push_back(SegArr{0, 3, gen_map(e, 1, e, 1, ide, Mono{0, 1})});
  D.arrs.push_back(SegArr{4, 1, gen_map(a, 1, a, 2, ida, Mono{0, 2})});
  D.arrs.push_back(SegArr{4, 5, gen_map(a, 1, E.V, 1, E.from_a, Mono{0, 1})});
  D.arrs.push_back(SegArr{6, 5, gen_map(e, 1, E.V, 1, E.cone_pt, Mono{0, 1})});
  SegObj Z = seg_colimit(D).C;
  Pres Q = pres_gen(a, 1);
  SegObj V = pres_eval(cone_pres(Q, Frag::reduced).out, 3).col.C;
  CHECK(seg_iso(V, Z).has_value());
}

TEST_CASE("fragments agree on other bases and lengths") {
  // base the interval instead of the point
  Pres Qd = pres_gen(m_delta(1), 1);
  SegObj A = pres_eval(cone_pres(Qd, Frag::minimal).out, 3).col.C;
  SegObj B = pres_eval(cone_pres(Qd, Frag::reduced).out, 3).col.C;
  CHECK(seg_iso(A, B).has_value());
  // length 2
  Pres Q2 = pres_gen(m_delta(0), 2);
  SegObj C = pres_eval(cone_pres(Q2, Frag::minimal).out, 3).col.C;
  SegObj D = pres_eval(cone_pres(Q2, Frag::reduced).out, 3).col.C;
  CHECK(seg_iso(C, D).has_value());
  SegObj E = pres_eval(cyl_pres(Qd, Frag::bounded, 3).out, 3).col.C;
  SegObj F = pres_eval(cyl_pres(Qd, Frag::reduced).out, 3).col.C;
  CHECK(seg_iso(E, F).has_value());
}

TEST_CASE("index fragments") {
  auto min1 = pair_fragment(1, Frag::minimal);
  CHECK(min1.size() == 5);
  auto red1 = pair_fragment(1, Frag::reduced);
  for (const IxObj& x : min1)
    CHECK(std::find(red1.begin(), red1.end(), x) != red1.end());
  auto bnd1 = pair_fragment(1, Frag::bounded, 3);
  for (const IxObj& x : red1)
    CHECK(std::find(bnd1.begin(), bnd1.end(), x) != bnd1.end());

  // reduction
  IxObj x{{2, 1}, {0, 0, 1, 1, 1}};
  std::vector<Mono> sg;
  IxObj r = ix_reduce(x, &sg);
  CHECK(r.ks == std::vector<int>{1, 0});
  CHECK(r.f == Mono{0, 1, 1});
  // the op component of sigma is reported in natural coordinates
  CHECK(sg[0] == Mono{0, 1, 1});
  CHECK(sg[1] == Mono{0, 0});
  int v = -1;
  CHECK(ix_constant(IxObj{{0, 0}, {2, 2}}, &v));
  CHECK(v == 2);
  CHECK(!ix_constant(x));

  auto tri = triple_fragment(1, Frag::reduced);
  CHECK(!tri.empty());
  for (const IxObj& t : tri) {
    CHECK(t.ks.size() == 3);
    CHECK(is_monotone(t.f));
  }
}
