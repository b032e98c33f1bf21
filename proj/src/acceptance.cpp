#include "monodromy/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <random>
#include <sstream>

#include "monodromy/bmf.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/braid.hpp"
#include "monodromy/hurwitz.hpp"
#include "monodromy/puncture.hpp"
#include "monodromy/triple_cover.hpp"

namespace monodromy {

namespace {

// Outcome of one check: empty `failure` means pass.
struct Outcome {
  std::string failure;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Factorization conj_each(const Factorization& f, const BraidWord& g) {
  Factorization r = f;
  for (auto& w : r.factors) w = conjugate(w, g);
  return r;
}

const BuiltinScript& builtin(const std::vector<BuiltinScript>& all, const std::string& name) {
  for (const auto& s : all)
    if (s.name == name) return s;
  throw ConsistencyError("missing built-in script " + name);
}

// The script verifies and its end is the independently conjugated start.
std::string check_conjugation_script(const BuiltinScript& s, const BraidWord& g) {
  if (!factorwise_equal(s.end, conj_each(s.start, g)))
    return s.name + ": stored end is not the conjugate";
  if (!verify_script(s.start, s.moves, s.end)) return s.name + ": script does not verify";
  return {};
}

const BraidWord& delta4() {
  static const BraidWord d = parse_braid("s1 s2 s3 s1 s2 s1", 4);
  return d;
}

Outcome cusp_product() {
  const BraidWord expected = parse_braid("s2^3 s1 s3 s2 s1^2 s3^2", 4);
  if (!braids_equal(product(cusp_cluster_model()), expected)) return {"product differs", ""};
  return {"", "product = s2^3 s1 s3 s2 s1^2 s3^2"};
}

Outcome cusp_chains() {
  const auto all = builtin_scripts();
  const BraidWord g = parse_braid("s1^-1 s2 s1", 4);
  if (auto e = check_conjugation_script(builtin(all, "cusp-cluster/half-twist-conjugate"), g);
      !e.empty())
    return {e, ""};
  if (auto e = check_conjugation_script(builtin(all, "cusp-cluster/delta-conjugate"), delta4());
      !e.empty())
    return {e, ""};
  return {"", "2 scripts verified"};
}

Outcome tangent_cluster() {
  const Factorization f = tangent_cluster_model();
  const BraidWord expected = parse_braid("s1 s2 s3 s1 s2 s1 s1^-2 s3^-2", 4).pow(2);
  const BraidWord prod = product(f);
  if (!braids_equal(prod, expected)) return {"product differs from (D s1^-2 s3^-2)^2", ""};
  const auto all = builtin_scripts();
  if (auto e = check_conjugation_script(builtin(all, "tangent-cluster/delta-conjugate"), delta4());
      !e.empty())
    return {e, ""};
  if (!centralizes(delta4(), prod)) return {"Delta4 does not centralize the product", ""};
  if (!centralizes(parse_braid("s1", 4), prod)) return {"s1 does not centralize the product", ""};
  return {"", "product, chain, centralizers"};
}

Outcome stabilized_conjugation() {
  const auto all = builtin_scripts();
  const BuiltinScript& s = builtin(all, "tangent-cluster/stabilized-conjugation");
  if (auto e = check_conjugation_script(s, parse_braid("s1^2", 4)); !e.empty()) return {e, ""};
  // Created pairs must be full twists on a cable.
  for (const Move& m : s.moves)
    if (m.kind == Move::Kind::Create && !(braids_equal(m.word, parse_braid("s1^2", 4)) ||
                                          braids_equal(m.word, parse_braid("s1^-2", 4))))
      return {"created pair is not a full twist on strands 1,2", ""};
  // The tangent-cluster model sits on B'1 B''1 B'2 B''2, so local s1 is the
  // half-twist on p1 in every layout.
  for (int b = 3; b <= 6; ++b)
    for (int d = 3; d <= 6; ++d) {
      const PunctureLayout L(b, d);
      const BraidWord local_s1 = BraidWord::gen(L.size(), 4 * d + 1);
      if (!braids_equal(half_twist_word(L, ArcId::p(1)), local_s1))
        return {"p1 half-twist is not the embedded s1 for (b,d)=(" + std::to_string(b) + "," +
                    std::to_string(d) + ")",
                ""};
      if (!is_admissible_pair(L, {ArcId::p(1), 2}) || !is_admissible_pair(L, {ArcId::p(1), -2}))
        return {"p1 full twist not admissible", ""};
    }
  return {"", "script verified; p1 twist admissible for (b,d) in 3..6"};
}

Outcome v_cluster() {
  const BraidWord w = parse_braid("s1^-4 s3^-4", 4);
  const LinkingMatrix lm = linking_matrix(w);
  const std::size_t k = lm.components.size();
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      if (x == y) continue;
      const bool same_cable = lm.components[x][0] / 2 == lm.components[y][0] / 2;
      const int e = lm.entries[x][y];
      if (same_cable && std::abs(e) != 2) return {"within-cable entry is not +-2", ""};
      if (!same_cable && e != 0) return {"cross-cable entry is nonzero", ""};
    }
  const BraidWord root = parse_braid("s1 s2 s3 s1 s2 s1 s1^-2 s3^-2", 4);
  const int total = exponent_sum(root.pow(2));
  const int kk = total - exponent_sum(delta4().pow(2));
  if (total != 4) return {"total degree " + std::to_string(total) + ", expected 4", ""};
  if (kk != -8 || exponent_sum(w) != kk)
    return {"k+k' = " + std::to_string(kk) + ", expected -8", ""};
  return {"", std::to_string(k) + " components; k+k' = -8"};
}

Outcome count_grid() {
  int n = 0;
  for (int a = 3; a <= 6; ++a)
    for (int b = 3; b <= 6; ++b)
      for (int c = 3; c <= 6; ++c)
        for (int d = 3; d <= 6; ++d) {
          const SurfaceParams p{a, b, c, d};
          const BMFactorization f = build_bmf(p);
          const CountsReport want = formula_counts(p);
          const CountsReport got = scan_counts(f);
          const long es = exponent_sum(product(f));
          if (!(got == want) || es != 8L * (a + c) * (4 * (b + d) - 1) || es != want.exponent_sum) {
            std::ostringstream o;
            o << "mismatch at (" << a << "," << b << "," << c << "," << d << ")";
            return {o.str(), ""};
          }
          ++n;
        }
  return {"", std::to_string(n) + " tuples"};
}

// Position order: increasing index for a, c; decreasing for b, d.
Outcome triangle_quadrangle() {
  long tri = 0, quad = 0;
  for (int b = 3; b <= 6; ++b) {
    const PunctureLayout L(b, b);
    for (ArcFamily f : {ArcFamily::a, ArcFamily::b, ArcFamily::c, ArcFamily::d}) {
      const bool reversed = f == ArcFamily::b || f == ArcFamily::d;
      const int n = 2 * b;
      std::vector<std::vector<BraidWord>> tw(n + 1, std::vector<BraidWord>(n + 1));
      for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) tw[x][y] = tw[y][x] = half_twist_word(L, {f, x, y});
      // idx(k) is the k-th smallest position among 1..n.
      auto idx = [&](int k) { return reversed ? n + 1 - k : k; };
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
          for (int k = j + 1; k <= n; ++k) {
            const int I = idx(i), J = idx(j), K = idx(k);
            if (!braids_equal(tw[I][J] * tw[J][K], tw[J][K] * tw[I][K]))
              return {"triangle fails for family " + to_string(ArcId{f, I, J}), ""};
            ++tri;
            for (int l = k + 1; l <= n; ++l) {
              const int Lx = idx(l);
              if (!braids_equal(tw[I][J] * tw[J][Lx] * tw[I][K], tw[J][Lx] * tw[I][K] * tw[K][Lx]))
                return {"quadrangle fails for family " + to_string(ArcId{f, I, J}), ""};
              ++quad;
            }
          }
    }
  }
  return {"", std::to_string(tri) + " triangles, " + std::to_string(quad) + " quadrangles"};
}

bool tridiagonal(const GF2Matrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g.at(i, j) != (i + 1 == j || j + 1 == i)) return false;
  return true;
}

Outcome gf2_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int n_params = 0;
  for (int b = 3; b <= 8; ++b)
    for (int d = 3; d <= 8; ++d) {
      const SurfaceParams p{3, b, 3, d};
      const std::string at = " at (b,d)=(" + std::to_string(b) + "," + std::to_string(d) + ")";
      const HomologyBasis basis(p);
      const int n = basis.size();
      if (n != 4 * b + 4 * d - 4) return {"dimension" + at, ""};
      const GF2Matrix g = gram_matrix(p);
      if (!tridiagonal(g)) return {"Gram not tridiagonal" + at, ""};
      if (g.rank() != static_cast<std::size_t>(n)) return {"Gram singular" + at, ""};
      const QuadForm qf = quad_form(p);
      for (int k = 0; k < n; ++k)
        if (eval_q(qf, GF2Vector::unit(n, k)) != 1) return {"q != 1 on a basis vector" + at, ""};
      for (const auto& arc : {ArcId::a(1, 2), ArcId::a(2, 3), ArcId::d(1, 2)})
        if (solved_class(p, arc) != *explicit_class(p, arc))
          return {"solved class of " + to_string(arc) + " differs from the explicit sum" + at, ""};
      if (eval_q(qf, class_of_arc(p, ArcId::a(1, 2))) != 1) return {"q(a1) != 1" + at, ""};
      if (eval_q(qf, class_of_arc(p, ArcId::a(2, 3))) != 0) return {"q(a2) != 0" + at, ""};
      if (eval_q(qf, class_of_arc(p, ArcId::d(1, 2))) != 1) return {"q(d1) != 1" + at, ""};
      auto polar_ok = [&](const GF2Vector& x, const GF2Vector& y) {
        const int lhs = dot(x, g * y);
        return lhs == (eval_q(qf, x + y) + eval_q(qf, x) + eval_q(qf, y)) % 2;
      };
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!polar_ok(GF2Vector::unit(n, i), GF2Vector::unit(n, j)))
            return {"polarization fails on basis pair" + at, ""};
      std::bernoulli_distribution coin(0.5);
      for (int r = 0; r < 100; ++r) {
        GF2Vector x(n), y(n);
        for (int k = 0; k < n; ++k) {
          x.set(k, coin(rng));
          y.set(k, coin(rng));
        }
        if (!polar_ok(x, y)) return {"polarization fails on random pair" + at, ""};
      }
      ++n_params;
    }
  return {"", std::to_string(n_params) + " (b,d) pairs"};
}

Outcome rho_suite() {
  int n_params = 0;
  for (int b = 3; b <= 8; ++b)
    for (int d = 3; d <= 8; ++d) {
      const SurfaceParams p{3, b, 3, d};
      const std::string at = " at (b,d)=(" + std::to_string(b) + "," + std::to_string(d) + ")";
      const HomologyBasis basis(p);
      const int n = basis.size();
      if (rho(p, GF2Vector::unit(n, basis.p_index())) != 0) return {"rho(p~) != 0" + at, ""};
      if (rho(p, GF2Vector::unit(n, basis.q_index())) != 1) return {"rho(q~) != 1" + at, ""};
      if (!orbits_separated(p)) return {"orbits not separated" + at, ""};
      ++n_params;
    }
  return {"", std::to_string(n_params) + " (b,d) pairs"};
}

bool in_orbit(const SurfaceParams& p, const SurfaceParams& q) {
  for (const auto& x : symmetry_orbit(p))
    if (x == q) return true;
  return false;
}

Outcome compare_family() {
  long pairs = 0, not_dist = 0;
  for (int b = 3; b <= 6; ++b)
    for (int a = 3; a <= 8; ++a)
      for (int c = 3; c <= 8; ++c)
        for (int a2 = 3; a2 <= 8; ++a2) {
          const int c2 = a + c - a2;
          if (c2 < 3 || c2 > 8) continue;
          const SurfaceParams p1{a, b, c, b}, p2{a2, b, c2, b};
          const Comparison cmp = compare_surfaces(p1, p2);
          const Verdict want = in_orbit(p1, p2) ? Verdict::NotDistinguished : Verdict::Distinguished;
          if (cmp.verdict != want) {
            std::ostringstream o;
            o << to_string(cmp.verdict) << " for (" << a << "," << b << "," << c << "," << b
              << ") vs (" << a2 << "," << b << "," << c2 << "," << b << ")";
            return {o.str(), ""};
          }
          ++pairs;
          not_dist += want == Verdict::NotDistinguished;
        }
  // The factor swap relates (a,b,a,b) to (b,a,b,a).
  for (int a = 3; a <= 8; ++a)
    for (int b = 3; b <= 8; ++b)
      if (compare_surfaces({a, b, a, b}, {b, a, b, a}).verdict != Verdict::NotDistinguished)
        return {"swap case distinguished", ""};
  return {"", std::to_string(pairs) + " pairs, " + std::to_string(not_dist) +
                  " symmetric, 0 inconclusive"};
}

int expected_class(ArcFamily f) {
  switch (f) {
    case ArcFamily::p:
    case ArcFamily::q: return 2;
    case ArcFamily::u:
    case ArcFamily::u_prime:
    case ArcFamily::u_double: return 3;
    default: return 1;
  }
}

Outcome liftability_table() {
  long arcs = 0;
  for (int b = 3; b <= 6; ++b)
    for (int d = 3; d <= 6; ++d) {
      const PunctureLayout L(b, d);
      for (const ArcId& arc : arc_catalog(L)) {
        if (liftability_class(L, arc) != expected_class(arc.family))
          return {"wrong class for " + to_string(arc), ""};
        ++arcs;
      }
    }
  return {"", std::to_string(arcs) + " arcs"};
}

struct Criterion {
  int id;
  const char* name;
  double limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace

std::string to_string(const CriterionResult& r) {
  char t[32];
  std::snprintf(t, sizeof t, "%.3f", r.seconds);
  std::string s = std::string(r.pass ? "PASS" : "FAIL") + " " + (r.id < 10 ? " " : "") +
                  std::to_string(r.id) + " " + r.name + " (" + t + " s)";
  if (!r.detail.empty()) s += " " + r.detail;
  return s;
}

std::vector<CriterionResult> run_acceptance(
    std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result) {
  const std::vector<Criterion> criteria = {
      {1, "cusp-cluster product", 0.1, cusp_product},
      {2, "cusp-cluster conjugation chains", 1.0, cusp_chains},
      {3, "tangent-cluster product, chain, centralizers", 0, tangent_cluster},
      {4, "stabilized conjugation by s1^2", 0, stabilized_conjugation},
      {5, "four-strand linking and degree count", 0, v_cluster},
      {6, "count formulas on 3..6^4", 60.0, count_grid},
      {7, "triangle and quadrangle relations", 0, triangle_quadrangle},
      {8, "GF(2) form suite on 3..8^2", 0, [seed] { return gf2_suite(seed); }},
      {9, "rho invariance and separation", 0, rho_suite},
      {10, "compare on b = d family", 0, compare_family},
      {11, "liftability table", 0, liftability_table},
  };
  std::vector<CriterionResult> out;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {std::string("exception: ") + e.what(), ""};
    }
    const double secs = seconds_since(t0);
    if (o.failure.empty() && c.limit > 0 && secs >= c.limit) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "over time limit %.1f s", c.limit);
      o.failure = buf;
    }
    CriterionResult r{c.id, c.name, o.failure.empty(), o.failure.empty() ? o.detail : o.failure,
                      secs};
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace monodromy
