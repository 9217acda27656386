#include <doctest.h>

#include "cx/lifting.hpp"

using namespace cx;

namespace {
SquareSpec truncation_square(const AnodyneGen& a, int n) {
  SquareSpec s;
  s.A = a.src;
  s.B = a.dst;
  s.C = truncate(n, a.src);
  s.D = truncate(n, a.dst);
  s.f = a.arrow;
  s.g = map_identity(s.A.s);
  s.h = map_identity(s.B.s);
  s.k = a.arrow;
  return s;
}
}  // namespace

TEST_CASE("map enumeration") {
  for (int n = 0; n <= 3; ++n)
    CHECK(enumerate_maps(m_delta(0), m_delta(n)).size() == size_t(n + 1));
  CHECK(enumerate_maps(m_delta(1), m_delta(1)).size() == 3);
  // the marked edge must land on a thin edge, leaving the two constants
  CHECK(enumerate_maps(m_delta_t(1), m_delta(1)).size() == 2);
  CHECK(enumerate_maps(m_delta_t(1), m_delta_t(1)).size() == 3);
  CHECK(enumerate_maps(m_empty(), m_delta(2)).size() == 1);
  CHECK(enumerate_maps(m_delta(0), m_empty()).empty());
  // maps from a simplex are its target's simplices of that dimension
  CHECK(enumerate_maps(m_delta(2), m_delta(1)).size() ==
        simplices(delta(1), 2).size());
}

TEST_CASE("right lifting property") {
  SMap incl;
  MSSet H = m_horn(2, 1, &incl);
  MSSet T = m_nk(2, 1);
  CHECK(has_rlp(m_delta(0), H, T, incl).ok);
  // the identity attachment of the horn has no extension into the horn
  RlpReport r = has_rlp(H, H, T, incl);
  CHECK(!r.ok);
  CHECK(r.first_failure >= 0);
  CHECK(!r.extensions[r.first_failure].has_value());
  for (int n = 1; n <= 3; ++n) {
    SMap id = map_identity(delta(n));
    CHECK(has_rlp(m_delta(0), m_delta(n), m_delta_t(n), id).ok);
  }
  // cross-check against the restriction-surjectivity oracle
  CHECK(has_rlp_brute(m_delta(0), H, T, incl));
  CHECK(!has_rlp_brute(H, H, T, incl));
  CHECK(has_rlp(m_delta_t(1), H, T, incl).ok ==
        has_rlp_brute(m_delta_t(1), H, T, incl));
}

TEST_CASE("cocartesian squares") {
  // identity legs
  SquareSpec id;
  id.A = id.B = id.C = id.D = m_nk(2, 1);
  id.f = id.g = id.h = id.k = map_identity(id.A.s);
  CHECK(is_cocartesian(id));
  CHECK(is_cocartesian_brute(id));

  // truncation square of a triviality extension
  AnodyneGen tr = anodyne_family(AnodyneKind::triviality, 3, 2)[0];
  REQUIRE(tr.n == 3);
  SquareSpec s = truncation_square(tr, 2);
  CHECK(is_cocartesian(s));
  CHECK(is_cocartesian_brute(s));

  // same square with an over-marked corner is not cocartesian
  SquareSpec bad = s;
  bad.D = truncate(1, bad.D);
  REQUIRE(bad.commutes());
  CHECK(!is_cocartesian(bad));
  CHECK(!is_cocartesian_brute(bad));
}

TEST_CASE("bounded complicial check") {
  ComplicialReport a = bounded_complicial_check(m_delta(0), 0, 2);
  CHECK(a.pass);
  ComplicialReport b = bounded_complicial_check(m_delta(1), 0, 2);
  CHECK(!b.pass);
  bool triviality_failed = false;
  for (const auto& it : b.items)
    if (!it.ok && it.label.rfind("triviality", 0) == 0) triviality_failed = true;
  CHECK(triviality_failed);
  ComplicialReport c = bounded_complicial_check(m_delta_t(1), 0, 1);
  CHECK(c.pass);
}

TEST_CASE("leibniz constructions") {
  // two point inclusions joined give the boundary of the interval
  MSSet e = m_empty(), pt = m_delta(0);
  SMap none;
  Leibniz L = leibniz(e, pt, none, e, pt, none, Bifun::join);
  CHECK(L.src.P.s.counts() == std::vector<size_t>{2});
  CHECK(L.dst.s.counts() == std::vector<size_t>{2, 1});
  CHECK(map_mono(L.src.P.s, L.dst.s, L.arrow));

  // identity in one slot makes the arrow an isomorphism
  SMap incl;
  MSSet H = m_horn(2, 1, &incl);
  Leibniz L2 = leibniz(H, H, map_identity(H.s), H, m_nk(2, 1), incl, Bifun::product);
  CHECK(L2.src.P.s.counts() == L2.dst.s.counts());
  CHECK(map_mono(L2.src.P.s, L2.dst.s, L2.arrow));

  // boundary against horn: the pushout-product stays mono for each bifunctor
  SMap binc;
  MSSet B1 = m_boundary(1, &binc);
  for (Bifun op : {Bifun::product, Bifun::join, Bifun::pretensor, Bifun::tensor}) {
    Leibniz L3 = leibniz(B1, m_delta(1), binc, H, m_nk(2, 1), incl, op);
    CHECK(map_mono(L3.src.P.s, L3.dst.s, L3.arrow));
    CHECK(mmap_valid(L3.src.P, L3.dst, L3.arrow));
  }
}
