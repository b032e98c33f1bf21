#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdlib>

#include "monodromy/bmf.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/puncture.hpp"
#include "support/gen.hpp"

using namespace monodromy;

namespace {

Perm T(int a, int b) { return Perm::transposition(4, a, b); }

}  // namespace

TEST_CASE("layout: positions and labels") {
  const PunctureLayout L(3, 3);
  CHECK(L.size() == 24);
  CHECK(L.at(1).label() == "D'6");
  CHECK(L.at(2).label() == "D''6");
  CHECK(L.at(11).label() == "D'1");
  CHECK(L.at(12).label() == "D''1");
  CHECK(L.at(13).label() == "B'1");
  CHECK(L.at(24).label() == "B''6");
  for (int pos = 1; pos <= L.size(); ++pos) CHECK(L.position(L.at(pos)) == pos);
  CHECK(L.theta({Side::D, true, 2}) == T(1, 2));
  CHECK(L.theta({Side::D, false, 2}) == T(3, 4));
  CHECK(L.theta({Side::B, true, 2}) == T(1, 3));
  CHECK(L.theta({Side::B, false, 2}) == T(2, 4));
  CHECK(L.dump().rfind("1\tD'6\t(1 2)\n", 0) == 0);
}

TEST_CASE("property: product of theta over the layout is trivial") {
  for (int b = 1; b <= 8; ++b)
    for (int d = 1; d <= 8; ++d) {
      const PunctureLayout L(b, d);
      Perm prod(4);
      for (int pos = 1; pos <= L.size(); ++pos) prod = prod * L.theta_at(pos);
      CHECK(prod.is_identity());
    }
}

TEST_CASE("arcs: text syntax and validation") {
  for (const char* s : {"p1", "q3", "a[1,4]", "s[1,1]", "u'[1,2]", "u''[1,2]", "u[1,2]"})
    CHECK(to_string(parse_arc(s)) == s);
  CHECK_THROWS_AS(parse_arc("z[1,2]"), InvalidInput);
  CHECK_THROWS_AS(parse_arc("a[1"), InvalidInput);
  const PunctureLayout L(3, 3);
  CHECK_THROWS_AS(validate_arc(L, ArcId::a(2, 1)), InvalidInput);
  CHECK_THROWS_AS(validate_arc(L, ArcId::p(7)), InvalidInput);
  CHECK_THROWS_AS(half_twist_word(L, ArcId::q(0)), InvalidInput);
  const auto [x, y] = endpoints(ArcId::p(2));
  CHECK(x.label() == "B'2");
  CHECK(y.label() == "B''2");
}

TEST_CASE("half twists: adjacent arcs are single generators") {
  for (int b = 3; b <= 5; ++b)
    for (int d = 3; d <= 5; ++d) {
      const PunctureLayout L(b, d);
      for (int i = 1; i <= 2 * b; ++i) {
        const int pos = L.position({Side::B, true, i});
        CHECK(braids_equal(half_twist_word(L, ArcId::p(i)), BraidWord::gen(L.size(), pos)));
      }
      for (int j = 1; j <= 2 * d; ++j) {
        const int pos = L.position({Side::D, true, j});
        CHECK(braids_equal(half_twist_word(L, ArcId::q(j)), BraidWord::gen(L.size(), pos)));
      }
    }
}

TEST_CASE("half twists: a[1,2] passes over B''1") {
  const PunctureLayout L(3, 3);
  const BraidWord w = half_twist_word(L, ArcId::a(1, 2));
  // B'1 at 13, B''1 at 14, B'2 at 15: the mirror over-arc is s14^-1 s13 s14.
  CHECK(braids_equal(w, parse_braid("s14^-1 s13 s14", 24)));
  CHECK(permutation(w) == Perm::transposition(24, 13, 15));
}

TEST_CASE("property: full twists are pure and half twists swap the endpoints") {
  for (int b = 3; b <= 4; ++b)
    for (int d = 3; d <= 4; ++d) {
      const PunctureLayout L(b, d);
      for (const ArcId& arc : arc_catalog(L)) {
        const BraidWord w = half_twist_word(L, arc);
        CHECK(permutation(w.pow(2)).is_identity());
        const auto [x, y] = endpoints(arc);
        CHECK(permutation(w) == Perm::transposition(L.size(), L.position(x), L.position(y)));
      }
    }
}

TEST_CASE("transported monodromies and liftability") {
  const PunctureLayout L(3, 3);
  const auto [p1, p2] = transported_monodromies(L, ArcId::p(2));
  CHECK(p1 == T(1, 3));
  CHECK(p2 == T(2, 4));
  const auto [a1, a2] = transported_monodromies(L, ArcId::a(1, 3));
  CHECK(a1 == a2);
  const auto [u1, u2] = transported_monodromies(L, ArcId::u_prime(1, 1));
  CHECK_FALSE(u1.commutes_with(u2));
  CHECK(liftability_class(L, ArcId::s(1, 1)) == 1);
  CHECK(liftability_class(L, ArcId::q(2)) == 2);
  CHECK(liftability_class(L, ArcId::u(1, 1)) == 3);
  CHECK(triple_cover_class(L, ArcId::u_prime(2, 3)) == CoverCase::i);
  CHECK(triple_cover_class(L, ArcId::p(4)) == CoverCase::ii);
  CHECK(triple_cover_class(L, ArcId::a(2, 5)) == CoverCase::ii);
}

TEST_CASE("cusp arcs stay local to their two blocks") {
  // Every cusp-cluster arc lifts like the i = j = 1 ones, whatever lies between.
  for (const PunctureLayout& L : {PunctureLayout(3, 3), PunctureLayout(4, 3), PunctureLayout(3, 5)})
    for (int i = 1; i <= L.b() * 2; ++i)
      for (int j = 1; j <= L.d() * 2; ++j) {
        CHECK(liftability_class(L, ArcId::s(i, j)) == 1);
        CHECK(liftability_class(L, ArcId::u(i, j)) == 3);
        CHECK(liftability_class(L, ArcId::u_prime(i, j)) == 3);
        CHECK(liftability_class(L, ArcId::u_double(i, j)) == 3);
      }
}

TEST_CASE("property: liftable powers commute with theta") {
  // sigma^k lifts iff it preserves theta on every free generator.
  const PunctureLayout L(3, 3);
  for (const ArcId& arc : arc_catalog(L)) {
    const BraidWord w = half_twist_word(L, arc);
    const int cls = liftability_class(L, arc);
    CHECK(is_liftable(L, w.pow(cls)));
    if (cls > 1) CHECK_FALSE(is_liftable(L, w));
    if (cls == 3) CHECK_FALSE(is_liftable(L, w.pow(2)));
  }
}

TEST_CASE("s4 to s3") {
  CHECK(s4_to_s3(Perm::from_cycles(4, {{1, 2}, {3, 4}})).is_identity());
  CHECK(s4_to_s3(T(1, 2)) == s4_to_s3(T(3, 4)));
  CHECK(s4_to_s3(T(1, 2) * T(1, 3)).order() == 3);
  CHECK(s4_to_s3(T(1, 2)).size() == 3);
}

TEST_CASE("cables") {
  CHECK(cable_generator(4, 1) == parse_braid("s2 s1 s3 s2", 4));
  CHECK(permutation(cable_generator(6, 2)) == Perm::from_cycles(6, {{3, 5}, {4, 6}}));
  CHECK(braids_equal(conjugate(parse_braid("s1", 4), cable_generator(4, 1)), parse_braid("s3", 4)));
  CHECK(cable_embed(BraidWord::identity(2)).empty());
  CHECK(cable_embed(parse_braid("s1", 2)) == parse_braid("s2 s1 s3 s2", 4));
  CHECK(cbr_project(CableWord{2, {{CableLetter::InCable, 1, 2}}}).empty());
  CHECK(cbr_project(CableWord{3, {{CableLetter::Cable, 2, 1}}}) == parse_braid("s2", 3));

  auto r = gen::rng(11);
  for (int k = 0; k < 50; ++k) {
    const int n = gen::uniform(r, 2, 5);
    const BraidWord u = gen::word(r, n, 8), v = gen::word(r, n, 8);
    CHECK(cable_embed(u * v) == cable_embed(u) * cable_embed(v));
    CableWord cw{n, {}};
    for (int l : u.letters()) cw.letters.push_back({CableLetter::Cable, std::abs(l), l > 0 ? 1 : -1});
    CHECK(braids_equal(cw.to_braid(), cable_embed(u)));
    CHECK(cbr_project(cw) == u);
  }
}

TEST_CASE("property: in-cable twists commute and are permuted by cable generators") {
  const int n = 4;
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      const BraidWord tk = BraidWord::gen(2 * n, 2 * k - 1, 2), tl = BraidWord::gen(2 * n, 2 * l - 1, 2);
      CHECK(braids_equal(tk * tl, tl * tk));
    }
  for (int j = 1; j < n; ++j) {
    const BraidWord g = cable_generator(2 * n, j);
    CHECK(braids_equal(conjugate(BraidWord::gen(2 * n, 2 * j - 1, 2), g),
                       BraidWord::gen(2 * n, 2 * j + 1, 2)));
  }
}

TEST_CASE("pq orbit: conjugators carry p_i^2 to p_{i+1}^2") {
  for (int b = 3; b <= 5; ++b)
    for (int d = 3; d <= 5; ++d) {
      const PunctureLayout L(b, d);
      for (int i = 1; i < 2 * b; ++i) {
        const BraidWord g = pq_conjugator(L, Side::B, i);
        CHECK(braids_equal(conjugate(half_twist(L, ArcId::p(i)).power(2), g),
                           half_twist(L, ArcId::p(i + 1)).power(2)));
      }
      for (int j = 1; j < 2 * d; ++j) {
        const BraidWord g = pq_conjugator(L, Side::D, j);
        CHECK(braids_equal(conjugate(half_twist(L, ArcId::q(j)).power(2), g),
                           half_twist(L, ArcId::q(j + 1)).power(2)));
      }
    }
}

TEST_CASE("property: triangle and quadrangle relations on random tuples") {
  // The acceptance suite covers every tuple; this samples larger layouts.
  auto r = gen::rng(12);
  const PunctureLayout L(7, 7);
  for (int k = 0; k < 60; ++k) {
    const ArcFamily f = std::array{ArcFamily::a, ArcFamily::b, ArcFamily::c, ArcFamily::d}[k % 4];
    const bool reversed = f == ArcFamily::b || f == ArcFamily::d;
    std::array<int, 4> ix{};
    do {
      for (auto& x : ix) x = gen::uniform(r, 1, 14);
      std::sort(ix.begin(), ix.end());
    } while (std::adjacent_find(ix.begin(), ix.end()) != ix.end());
    if (reversed) std::reverse(ix.begin(), ix.end());
    auto tw = [&](int x, int y) { return half_twist_word(L, {f, std::min(x, y), std::max(x, y)}); };
    const int i = ix[0], j = ix[1], kk = ix[2], l = ix[3];
    CHECK(braids_equal(tw(i, j) * tw(j, kk), tw(j, kk) * tw(i, kk)));
    CHECK(braids_equal(tw(i, j) * tw(j, l) * tw(i, kk), tw(j, l) * tw(i, kk) * tw(kk, l)));
  }
}
