#include <doctest.h>

#include "cx/indexcat.hpp"

using namespace cx;

namespace {
Mono apply_total(const IxObj& x, const IxObj& y, const Mono& total) {
  Mono out(x.total_dim() + 1);
  for (int p = 0; p <= x.total_dim(); ++p) out[p] = y.f[total[p]];
  return out;
}
}  // namespace

TEST_CASE("distinguished presentations over [1]") {
  PinnedGraph G3 = distinguished_delta3_1();
  CHECK(G3.nodes.size() == 8);
  CHECK(G3.arrows.size() == 13);
  CHECK(G3.valid());

  PinnedGraph G2 = distinguished_delta2_1();
  CHECK(G2.nodes.size() == 6);
  CHECK(G2.arrows.size() == 9);
  CHECK(G2.valid());

  // every node is an object of the bounded category
  IndexCat C3 = build_delta3_over(1, 3);
  for (const IxObj& x : G3.nodes) CHECK(C3.find(x) >= 0);
  IndexCat C2 = build_delta2_over(1, 3);
  for (const IxObj& x : G2.nodes) CHECK(C2.find(x) >= 0);

  // the componentwise arrows of the graphs are the unique morphisms between
  // their endpoints, and their induced total maps match the pinned ones
  for (const PinnedGraph* G : {&G3, &G2}) {
    int center = 4;
    for (const PinnedArrow& a : G->arrows) {
      if (a.dst == center) {
        // the bare middle object has an empty outer factor, so it receives
        // no componentwise morphism; the pinned total is validated by valid()
        CHECK(ix_homs(G->nodes[a.src], G->nodes[a.dst]).empty());
        continue;
      }
      auto homs = ix_homs(G->nodes[a.src], G->nodes[a.dst]);
      REQUIRE(homs.size() == 1);
      CHECK(ix_total(G->nodes[a.src], G->nodes[a.dst], homs[0]) == a.total);
    }
  }

  // the bare middle object maps into the full middle object instead
  CHECK(ix_homs(G3.nodes[4], G3.nodes[1]).size() == 1);
  CHECK(ix_homs(G2.nodes[4], G2.nodes[1]).size() == 1);
}

TEST_CASE("bounded categories and elementary arrows") {
  IndexCat C = build_delta3_over(1, 2);
  CHECK(!C.obs.empty());
  CHECK(!C.arrs.empty());
  for (const IxArr& a : C.arrs) {
    const IxObj& x = C.obs[a.src];
    const IxObj& y = C.obs[a.dst];
    Mono total = ix_total(x, y, a.comps);
    CHECK(is_monotone(total));
    CHECK(apply_total(x, y, total) == x.f);
  }

  // base [0]: every structure map is constant
  IndexCat C0 = build_delta2_over(0, 2);
  for (const IxObj& x : C0.obs)
    for (int v : x.f) CHECK(v == 0);
}

TEST_CASE("degree") {
  PinnedGraph G3 = distinguished_delta3_1();
  CHECK(degree(G3.nodes[1]) == 1);  // [0]*[1]op*[0] -> [1] by s^0s^2
  CHECK(degree(G3.nodes[4]) == 1);  // the bare middle over [1]
  for (int i : {0, 2, 3, 5, 6, 7}) CHECK(degree(G3.nodes[i]) == 0);
  // a middle collapsing to one image point has degree 0
  IxObj flat{{0, 1, 0}, {0, 1, 1, 1}};
  CHECK(degree(flat) == 0);
}

TEST_CASE("regular elements") {
  auto r11 = regular_elements(1, 1);
  REQUIRE(r11.size() == 1);
  CHECK(r11[0].x.ks == std::vector<int>{0, 1, 0});
  CHECK(r11[0].x.f == Mono{0, 0, 1, 1});
  CHECK(r11[0].section == Mono{0, 3});

  auto r20 = regular_elements(2, 0);
  REQUIRE(r20.size() == 3);
  CHECK(r20[0].x.ks == std::vector<int>{0, 0, 2});
  CHECK(r20[1].x.ks == std::vector<int>{1, 0, 1});
  CHECK(r20[2].x.ks == std::vector<int>{2, 0, 0});

  for (int n = 0; n <= 2; ++n)
    for (int d = 0; d <= n; ++d)
      for (const Regular& r : regular_elements(n, d)) {
        CHECK(degree(r.x) == d);
        CHECK(is_monotone(r.section));
        for (int m = 0; m <= n; ++m) {
          CHECK(r.x.f[r.section[m]] == m);
          CHECK(r.section[m] != r.x.ks[0] + 1);
          CHECK(r.section[m] != r.x.ks[0] + d + 1);
        }
      }
}

TEST_CASE("finality of regular elements") {
  for (int d = 0; d <= 1; ++d) {
    FinalityReport rep = finality_check(1, d, 3);
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
  }
  FinalityReport r0 = finality_check(0, 0, 2);
  CHECK(r0.pass);
  FinalityReport r2 = finality_check(2, 1, 4);
  CHECK(r2.pass);
}

TEST_CASE("pair chain categories") {
  PiCat P0 = build_pi_k(1, 0, 2);
  IndexCat C2 = build_delta2_over(1, 2);
  CHECK(P0.obs.size() == C2.obs.size());

  PiCat P1 = build_pi_k(0, 1, 2);
  CHECK(!P1.obs.empty());
  for (const auto& ch : P1.obs) {
    REQUIRE(ch.size() == 2);
    // the second pair lives over the suspension of the first one's end
    int base = ch[0].ks[1] + 1;
    for (int v : ch[1].f) CHECK(v <= base);
  }
}
