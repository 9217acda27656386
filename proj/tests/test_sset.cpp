#include <doctest.h>

#include "cx/sset.hpp"

using namespace cx;

TEST_CASE("monotone map calculus") {
  CHECK(mono_compose(mono_sigma(0, 1), mono_delta(0, 2)) == Mono{0, 1});
  CHECK(mono_compose(mono_sigma(0, 1), mono_delta(1, 2)) == Mono{0, 1});
  CHECK(mono_compose(mono_sigma(0, 1), mono_delta(2, 2)) == Mono{0, 0});
  // word <-> surjection round trip
  std::vector<int> w{3, 1};
  Mono s = sur_of_word(w, 5);
  CHECK(s.size() == 6);
  CHECK(word_of_sur(s) == w);
}

TEST_CASE("delta basics") {
  for (int n = 0; n <= 4; ++n) {
    SSet D = delta(n);
    CHECK(D.validate());
    CHECK(D.dim() == n);
    // binomial counts
    size_t total = 0;
    for (int d = 0; d <= n; ++d) total += D.count(d);
    CHECK(total == (size_t(1) << (n + 1)) - 1);
  }
  // face/degeneracy identities on a degenerate simplex of delta(2)
  SSet D = delta(2);
  Simplex top{delta_id(2, {0, 1, 2}), {}};
  Simplex s0 = degen(D, top, 0);
  CHECK(D.dim_of(s0) == 3);
  CHECK(face(D, s0, 0) == top);
  CHECK(face(D, s0, 1) == top);
  Simplex e01{delta_id(2, {0, 1}), {}};
  CHECK(face(D, top, 2) == e01);
  // delta_simplex round trip
  Mono f{0, 0, 1, 1, 2};
  Simplex x = delta_simplex(2, f);
  CHECK(delta_mono(2, D, x) == f);
  CHECK(x.gen == delta_id(2, {0, 1, 2}));
}

TEST_CASE("simplex enumeration") {
  SSet D = delta(1);
  CHECK(simplices(D, 0).size() == 2);
  CHECK(simplices(D, 1).size() == 3);   // two vertices degenerated + the edge
  CHECK(simplices(D, 2).size() == 4);   // 2 + 2 degeneracies of the edge
}

TEST_CASE("boundary and horn") {
  SMap incl;
  SSet B = boundary(2, &incl);
  CHECK(B.validate());
  CHECK(B.count(0) == 3);
  CHECK(B.count(1) == 3);
  CHECK(B.dim() == 1);
  CHECK(map_valid(B, delta(2), incl));

  SSet H = horn(2, 1, &incl);
  CHECK(H.count(1) == 2);
  CHECK(map_valid(H, delta(2), incl));
  SSet H31 = horn(3, 1);
  CHECK(H31.count(2) == 3);
  CHECK(H31.validate());
}

TEST_CASE("product counts") {
  Product P = product(delta(1), delta(1));
  CHECK(P.P.validate());
  CHECK(P.P.counts() == std::vector<size_t>{4, 5, 2});
  Product Q = product(delta(2), delta(1));
  CHECK(Q.P.validate());
  CHECK(Q.P.count(3) == 3);
  CHECK(Q.P.count(0) == 6);
}

TEST_CASE("colimit: pushout of two triangles along an edge") {
  SSet D2 = delta(2), D1 = delta(1);
  // glue two 2-simplices along their 01 edge
  SMap f(D1.gens.size());
  f[delta_id(1, {0})] = Simplex{delta_id(2, {0}), {}};
  f[delta_id(1, {1})] = Simplex{delta_id(2, {1}), {}};
  f[delta_id(1, {0, 1})] = Simplex{delta_id(2, {0, 1}), {}};
  REQUIRE(map_valid(D1, D2, f));
  Pushout P = pushout(D1, D2, D2, f, f);
  CHECK(P.P.validate());
  CHECK(P.P.count(0) == 4);
  CHECK(P.P.count(1) == 5);
  CHECK(P.P.count(2) == 2);
  // mediating map to delta(2) via identity cocone
  auto u = mediating(P.dia, P.col, D2,
                     {f, map_identity(D2), map_identity(D2)});
  REQUIRE(u.has_value());
  CHECK(map_valid(P.P, D2, *u));
}

TEST_CASE("collapse boundary of triangle") {
  SMap incl;
  SSet B = boundary(2, &incl);
  Pushout P = collapse(B, delta(2), incl);
  CHECK(P.P.validate());
  CHECK(P.P.count(0) == 1);
  CHECK(P.P.count(1) == 0);
  CHECK(P.P.count(2) == 1);
}

TEST_CASE("iso search") {
  // join associativity stand-in: two ways to build a square from triangles
  SSet D2 = delta(2), D1 = delta(1);
  SMap f(D1.gens.size());
  f[delta_id(1, {0})] = Simplex{delta_id(2, {0}), {}};
  f[delta_id(1, {1})] = Simplex{delta_id(2, {2}), {}};
  f[delta_id(1, {0, 1})] = Simplex{delta_id(2, {0, 2}), {}};
  REQUIRE(map_valid(D1, D2, f));
  Pushout A = pushout(D1, D2, D2, f, f);
  Product Sq = product(delta(1), delta(1));
  auto iso = iso_search(A.P, Sq.P);
  REQUIRE(iso.has_value());
  CHECK(map_valid(A.P, Sq.P, *iso));
  CHECK(map_mono(A.P, Sq.P, *iso));
  CHECK(!iso_search(delta(2), A.P).has_value());
}
