#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "monodromy/bmf.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/triple_cover.hpp"
#include "support/cover_oracle.hpp"
#include "support/gen.hpp"

using namespace monodromy;

namespace {

bool case_two_supported(const ArcId& a) {
  switch (a.family) {
    case ArcFamily::u:
    case ArcFamily::u_prime:
    case ArcFamily::u_double: return false;
    case ArcFamily::s: return a.i == 1 && a.j == 1;
    default: return true;
  }
}

// Oracle chain for a library class: sum of the oracle classes of the basis arcs.
oracle::Bits to_oracle(const std::vector<oracle::Bits>& basis_classes, const GF2Vector& x) {
  oracle::Bits v(basis_classes.front().size(), 0);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (x.get(k)) oracle::add_to(v, basis_classes[k]);
  return v;
}

std::vector<oracle::Bits> oracle_basis(const oracle::CoverHomology& H, const HomologyBasis& basis) {
  std::vector<oracle::Bits> out;
  for (int k = 0; k < basis.size(); ++k) out.push_back(*H.arc_class(basis.arc(k)));
  return out;
}

}  // namespace

TEST_CASE("basis order and labels") {
  const HomologyBasis basis({3, 3, 3, 3});
  CHECK(basis.size() == 20);
  CHECK(basis.label(0) == "a~3");
  CHECK(basis.label(basis.p_index()) == "p~6");
  CHECK(basis.label(basis.q_index()) == "q~6");
  CHECK(basis.arc(basis.p_index() + 1) == ArcId::c(5, 6));
  CHECK(basis.arc(basis.size() - 1) == ArcId::d(2, 3));
  GF2Vector x(basis.size());
  CHECK(basis.format(x) == "0");
  x.set(0, true);
  x.set(basis.p_index(), true);
  CHECK(basis.format(x) == "a~3 + p~6");
}

TEST_CASE("oracle: dimension and Gram matrix from the lifted cover") {
  for (const auto& [b, d] : {std::pair{3, 3}, {3, 4}, {4, 3}}) {
    const SurfaceParams p{3, b, 3, d};
    const PunctureLayout L(p);
    const oracle::CoverHomology H(L);
    const HomologyBasis basis(p);
    CHECK(H.dimension() == basis.size());
    const auto classes = oracle_basis(H, basis);
    const GF2Matrix g = gram_matrix(p);
    for (int i = 0; i < basis.size(); ++i)
      for (int j = 0; j < basis.size(); ++j) CHECK(H.pairing(basis.arc(i), classes[j]) == g.at(i, j));
  }
}

TEST_CASE("oracle: class_of_arc for every supported case ii arc") {
  for (const auto& [b, d] : {std::pair{3, 3}, {3, 4}, {4, 3}}) {
    const SurfaceParams p{3, b, 3, d};
    const PunctureLayout L(p);
    const oracle::CoverHomology H(L);
    const HomologyBasis basis(p);
    const auto classes = oracle_basis(H, basis);
    for (const ArcId& arc : arc_catalog(L)) {
      if (!case_two_supported(arc)) continue;
      const auto want = H.arc_class(arc);
      REQUIRE(want.has_value());
      CHECK_MESSAGE(H.same_class(to_oracle(classes, class_of_arc(p, arc)), *want), to_string(arc));
    }
  }
}

TEST_CASE("oracle: general pairing through classes, not planar counts") {
  const SurfaceParams p{3, 3, 3, 3};
  const PunctureLayout L(p);
  const oracle::CoverHomology H(L);
  const GF2Matrix g = gram_matrix(p);
  std::vector<ArcId> arcs;
  for (const ArcId& a : arc_catalog(L))
    if (case_two_supported(a)) arcs.push_back(a);
  auto r = gen::rng(41);
  for (int k = 0; k < 150; ++k) {
    const ArcId& v = arcs[static_cast<std::size_t>(gen::uniform(r, 0, static_cast<int>(arcs.size()) - 1))];
    const ArcId& w = arcs[static_cast<std::size_t>(gen::uniform(r, 0, static_cast<int>(arcs.size()) - 1))];
    const int lib = dot(class_of_arc(p, v), g * class_of_arc(p, w));
    CHECK(lib == H.pairing(v, *H.arc_class(w)));
  }
  // Against basis arcs the planar count is the pairing.
  const HomologyBasis basis(p);
  for (const ArcId& v : arcs)
    for (int k = 0; k < basis.size(); ++k)
      CHECK(intersection_parity(L, v, basis.arc(k)) == H.pairing(basis.arc(k), *H.arc_class(v)));
  // Off the basis it is not: p2 meets c[1,3] once but the lifts pair to zero.
  CHECK(intersection_parity(L, ArcId::p(2), ArcId::c(1, 3)) == 1);
  CHECK(H.pairing(ArcId::p(2), *H.arc_class(ArcId::c(1, 3))) == 0);
}

TEST_CASE("explicit sums agree with the linear solve") {
  for (int b = 3; b <= 8; ++b)
    for (int d = 3; d <= 8; ++d) {
      const SurfaceParams p{3, b, 3, d};
      for (const ArcId& a : {ArcId::a(1, 2), ArcId::a(2, 3), ArcId::d(1, 2)})
        CHECK(*explicit_class(p, a) == solved_class(p, a));
      CHECK_FALSE(explicit_class(p, ArcId::a(1, 3)).has_value());
    }
  const SurfaceParams p{3, 3, 3, 3};
  const HomologyBasis basis(p);
  CHECK(basis.format(class_of_arc(p, ArcId::a(1, 2))) == "a~3 + a~5 + c~5 + c~3 + c~1");
}

TEST_CASE("quadratic form values") {
  for (int b = 3; b <= 8; ++b)
    for (int d = 3; d <= 8; ++d) {
      const SurfaceParams p{3, b, 3, d};
      const QuadForm qf = quad_form(p);
      const int n = HomologyBasis(p).size();
      CHECK(n == 4 * b + 4 * d - 4);
      CHECK(n == 2 - (3 * 2 - 4 * b - 4 * d));
      for (int k = 0; k < n; ++k) CHECK(eval_q(qf, GF2Vector::unit(n, k)) == 1);
      CHECK(eval_q(qf, class_of_arc(p, ArcId::a(1, 2))) == 1);
      CHECK(eval_q(qf, class_of_arc(p, ArcId::a(2, 3))) == 0);
      CHECK(eval_q(qf, class_of_arc(p, ArcId::d(1, 2))) == 1);
      CHECK(gram_matrix(p).inverse().has_value());
    }
}

TEST_CASE("property: polarization and transvections") {
  auto r = gen::rng(42);
  for (const auto& [b, d] : {std::pair{3, 3}, {4, 6}, {8, 5}}) {
    const SurfaceParams p{3, b, 3, d};
    const GF2Matrix g = gram_matrix(p);
    const QuadForm qf = quad_form(p);
    const int n = static_cast<int>(g.rows());
    auto random_vec = [&] {
      GF2Vector x(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) x.set(static_cast<std::size_t>(k), r() & 1U);
      return x;
    };
    for (int k = 0; k < 100; ++k) {
      const GF2Vector x = random_vec(), y = random_vec();
      CHECK(polar(qf, x, y) == dot(x, g * y));
      CHECK(dot(x, g * y) == (eval_q(qf, x + y) + eval_q(qf, x) + eval_q(qf, y)) % 2);
    }
    for (const ArcId& arc : gamma_generator_arcs(p)) {
      const GF2Vector w = class_of_arc(p, arc);
      const GF2Matrix t = transvection(g, w);
      CHECK(t.transpose() * g * t == g);
      CHECK(t * t == GF2Matrix::identity(static_cast<std::size_t>(n)));
      for (int k = 0; k < 20; ++k) {
        const GF2Vector z = random_vec();
        const GF2Vector tz = t * z;
        CHECK(tz == z + (dot(w, g * z) ? w : GF2Vector(static_cast<std::size_t>(n))));
        CHECK(eval_q(qf, tz) == (eval_q(qf, z) + dot(w, g * z) * (1 + eval_q(qf, w))) % 2);
      }
    }
    // q(w) = 0 and <w,z> = 1 flips q.
    const GF2Vector w = class_of_arc(p, ArcId::a(2, 3));
    REQUIRE(eval_q(qf, w) == 0);
    const GF2Matrix tw = transvection(g, w);
    int tested = 0;
    for (int k = 0; k < n; ++k) {
      const GF2Vector z = GF2Vector::unit(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
      if (dot(w, g * z) != 1) continue;
      CHECK(eval_q(qf, tw * z) == (eval_q(qf, z) + 1) % 2);
      ++tested;
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("symplectic image of generator words") {
  const SurfaceParams p{3, 3, 3, 3};
  const GF2Matrix g = gram_matrix(p);
  const GF2Matrix ta = transvection(g, class_of_arc(p, ArcId::a(1, 2)));
  const GF2Matrix tc = transvection(g, class_of_arc(p, ArcId::c(2, 3)));
  CHECK(symplectic_image(p, {{ArcId::a(1, 2), 1}, {ArcId::c(2, 3), -1}}) == ta * tc);
  CHECK(symplectic_image(p, {{ArcId::a(1, 2), 2}}) == GF2Matrix::identity(g.rows()));
  CHECK(symplectic_image(p, {{ArcId::u_prime(1, 1), 3}}) == GF2Matrix::identity(g.rows()));
  CHECK_THROWS_AS(symplectic_image(p, {{ArcId::u(1, 1), 1}}), InvalidInput);
  CHECK_THROWS_AS(symplectic_image(p, {{ArcId::a(1, 2), 0}}), InvalidInput);
  CHECK_THROWS_AS(class_of_arc(p, ArcId::u(1, 1)), InvalidInput);
  CHECK_THROWS_AS(class_of_arc(p, ArcId::s(2, 1)), InvalidInput);
}

TEST_CASE("rho: values, invariance, separation") {
  for (int b = 3; b <= 8; ++b)
    for (int d = 3; d <= 8; ++d) {
      const SurfaceParams p{3, b, 3, d};
      const HomologyBasis basis(p);
      const int n = basis.size();
      CHECK(rho(p, GF2Vector::unit(n, basis.p_index())) == 0);
      CHECK(rho(p, GF2Vector::unit(n, basis.q_index())) == 1);
      CHECK(orbits_separated(p));
    }
  const RhoTable t = rho_table({3, 3, 3, 4});
  CHECK(t.p.size() == 6);
  CHECK(t.q.size() == 8);
  CHECK(t.p.back() == 0);
  CHECK(t.q.back() == 1);
}

TEST_CASE("stable invariant and comparison") {
  CHECK(to_string(compare_surfaces({3, 4, 5, 4}, {4, 4, 4, 4})) == "Distinguished (32,96) vs (64,64)");
  CHECK(compare_surfaces({3, 4, 5, 4}, {5, 4, 3, 4}).verdict == Verdict::NotDistinguished);
  CHECK(compare_surfaces({3, 5, 3, 5}, {5, 3, 5, 3}).verdict == Verdict::NotDistinguished);
  CHECK(symmetry_orbit({3, 4, 5, 6}).size() == 4);
  CHECK(symmetry_orbit({4, 4, 4, 4}).size() == 1);
  CHECK_THROWS_AS(compare_surfaces({2, 4, 5, 4}, {4, 4, 4, 4}), InvalidInput);
  // Different strand counts are reported.
  CHECK(to_string(compare_surfaces({3, 3, 3, 3}, {3, 4, 3, 4})).find("strands 24 vs 32") !=
        std::string::npos);
  // Equal invariants on non-symmetric tuples stay inconclusive.
  bool found = false;
  for (int a = 3; a <= 8 && !found; ++a)
    for (int b = 3; b <= 8 && !found; ++b)
      for (int c = 3; c <= 8 && !found; ++c)
        for (int d = 3; d <= 8 && !found; ++d) {
          const SurfaceParams p{a, b, c, d}, q{b, a, c, d};
          if (stable_invariant(p) == stable_invariant(q) && !(p == q)) {
            const auto orbit = symmetry_orbit(p);
            if (std::find(orbit.begin(), orbit.end(), q) != orbit.end()) continue;
            CHECK(compare_surfaces(p, q).verdict == Verdict::Inconclusive);
            found = true;
          }
        }
}

TEST_CASE("property: stable invariant matches the b = d closed form") {
  for (int a = 3; a <= 8; ++a)
    for (int b = 3; b <= 8; ++b)
      for (int c = 3; c <= 8; ++c) {
        const StableInvariant s = stable_invariant({a, b, c, b});
        long x = 2L * b * std::abs(3 * a - c), y = 2L * b * std::abs(3 * c - a);
        if (x > y) std::swap(x, y);
        CHECK(s.strands == 8 * b);
        CHECK(s.pair == std::pair{x, y});
      }
}
