#include "monodromy/triple_cover.hpp"

#include <algorithm>
#include <cstdlib>

#include "monodromy/bmf.hpp"
#include "monodromy/errors.hpp"

namespace monodromy {

HomologyBasis::HomologyBasis(const SurfaceParams& p) : p_(p) {
  p.validate();
  auto add = [&](const ArcId& arc, std::string label) {
    arcs_.push_back(arc);
    labels_.push_back(std::move(label));
  };
  const int b2 = 2 * p.b, d2 = 2 * p.d;
  for (int i = 3; i <= b2 - 1; ++i) add(ArcId::a(i, i + 1), "a~" + std::to_string(i));
  add(ArcId::p(b2), "p~" + std::to_string(b2));
  for (int i = b2 - 1; i >= 1; --i) add(ArcId::c(i, i + 1), "c~" + std::to_string(i));
  add(ArcId::s(1, 1), "s~");
  for (int j = 1; j <= d2 - 1; ++j) add(ArcId::b(j, j + 1), "b~" + std::to_string(j));
  add(ArcId::q(d2), "q~" + std::to_string(d2));
  for (int j = d2 - 1; j >= 2; --j) add(ArcId::d(j, j + 1), "d~" + std::to_string(j));
  if (size() != 4 * p.b + 4 * p.d - 4) throw ConsistencyError("homology basis has the wrong size");
}

std::optional<int> HomologyBasis::index_of(const ArcId& arc) const {
  for (int k = 0; k < size(); ++k)
    if (arcs_[k] == arc) return k;
  return std::nullopt;
}

int HomologyBasis::p_index() const { return *index_of(ArcId::p(2 * p_.b)); }
int HomologyBasis::q_index() const { return *index_of(ArcId::q(2 * p_.d)); }

std::string HomologyBasis::format(const GF2Vector& x) const {
  std::string s;
  for (int k = 0; k < size(); ++k) {
    if (!x.get(k)) continue;
    if (!s.empty()) s += " + ";
    s += labels_[k];
  }
  return s.empty() ? "0" : s;
}

GF2Matrix gram_matrix(const SurfaceParams& p) {
  const int n = HomologyBasis(p).size();
  GF2Matrix g(n, n);
  for (int k = 0; k + 1 < n; ++k) {
    g.set(k, k + 1, true);
    g.set(k + 1, k, true);
  }
  return g;
}

QuadForm quad_form(const SurfaceParams& p) {
  const GF2Matrix g = gram_matrix(p);
  const std::size_t n = g.rows();
  QuadForm qf{GF2Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    qf.Q.set(i, i, true);
    for (std::size_t j = i + 1; j < n; ++j) qf.Q.set(i, j, g.at(i, j));
  }
  return qf;
}

int eval_q(const QuadForm& qf, const GF2Vector& x) { return dot(x, qf.Q * x); }

int polar(const QuadForm& qf, const GF2Vector& x, const GF2Vector& y) {
  return dot(x, (qf.Q + qf.Q.transpose()) * y);
}

namespace {

bool is_s11(const ArcId& a) { return a.family == ArcFamily::s && a.i == 1 && a.j == 1; }

bool is_case_two_family(ArcFamily f) {
  return f != ArcFamily::u && f != ArcFamily::u_prime && f != ArcFamily::u_double;
}

void require_case_two(const PunctureLayout& L, const ArcId& arc) {
  validate_arc(L, arc);
  if (!is_case_two_family(arc.family))
    throw InvalidInput(to_string(arc) + " lies in cover case i: its preimage contains no cycle");
  if (arc.family == ArcFamily::s && !is_s11(arc))
    throw InvalidInput("only s[1,1] has a planar model; got " + to_string(arc));
}

// Endpoint positions k < l and the side (+1 over, -1 under) at each position
// strictly between them.
struct Monotone {
  int k, l;
  std::vector<int> side;  // indexed by position

  bool interior(int m) const { return k < m && m < l; }
  bool end(int m) const { return m == k || m == l; }
};

Monotone monotone(const PunctureLayout& L, const ArcId& arc) {
  const auto [e1, e2] = endpoints(arc);
  const int x = L.position(e1), y = L.position(e2);
  Monotone m{std::min(x, y), std::max(x, y), std::vector<int>(L.size() + 1, 0)};
  const bool bottom = !e1.primed && !e2.primed;
  for (int pos = m.k + 1; pos < m.l; ++pos) m.side[pos] = bottom && L.at(pos).primed ? -1 : 1;
  return m;
}

int shared_endpoints(const ArcId& v1, const ArcId& v2) {
  const auto [a1, a2] = endpoints(v1);
  const auto [b1, b2] = endpoints(v2);
  return (a1 == b1) + (a1 == b2) + (a2 == b1) + (a2 == b2);
}

int monotone_parity(const Monotone& A, const Monotone& B) {
  const int lo = std::max(A.k, B.k), hi = std::min(A.l, B.l);
  int forced_prev = 0, changes = 0;
  for (int m = lo; m <= hi; ++m) {
    int forced = 0;
    if (A.end(m) && B.interior(m))
      forced = -B.side[m];
    else if (B.end(m) && A.interior(m))
      forced = A.side[m];
    else if (A.interior(m) && B.interior(m) && A.side[m] != B.side[m])
      forced = A.side[m];
    if (forced == 0) continue;
    if (forced_prev != 0 && forced != forced_prev) ++changes;
    forced_prev = forced;
  }
  return changes;
}

}  // namespace

int intersection_parity(const PunctureLayout& L, const ArcId& v1, const ArcId& v2) {
  require_case_two(L, v1);
  require_case_two(L, v2);
  if (v1 == v2) return 0;
  const int shared = shared_endpoints(v1, v2);
  if (is_s11(v1) || is_s11(v2)) {
    const ArcId& other = is_s11(v1) ? v2 : v1;
    const auto [e1, e2] = endpoints(other);
    const Puncture bp1{Side::B, true, 1}, dpp1{Side::D, false, 1};
    const bool at1 = e1 == bp1 || e1 == dpp1, at2 = e2 == bp1 || e2 == dpp1;
    return (shared + (at1 != at2 ? 1 : 0)) % 2;
  }
  return (shared + monotone_parity(monotone(L, v1), monotone(L, v2))) % 2;
}

GF2Vector solved_class(const SurfaceParams& p, const ArcId& arc) {
  const HomologyBasis basis(p);
  const PunctureLayout L(p);
  require_case_two(L, arc);
  GF2Vector rhs(basis.size());
  for (int k = 0; k < basis.size(); ++k) rhs.set(k, intersection_parity(L, arc, basis.arc(k)));
  const auto x = gram_matrix(p).solve(rhs);
  if (!x) throw ConsistencyError("intersection system has no solution");
  return *x;
}

std::optional<GF2Vector> explicit_class(const SurfaceParams& p, const ArcId& arc) {
  const HomologyBasis basis(p);
  GF2Vector x(basis.size());
  auto put = [&](const ArcId& a) { x.set(*basis.index_of(a), true); };
  const int b2 = 2 * p.b, d2 = 2 * p.d;
  if (arc == ArcId::a(1, 2)) {
    for (int i = 3; i <= b2 - 1; i += 2) put(ArcId::a(i, i + 1));
    for (int i = 1; i <= b2 - 1; i += 2) put(ArcId::c(i, i + 1));
    return x;
  }
  if (arc == ArcId::a(2, 3)) {
    for (int i = 4; i <= b2 - 2; i += 2) put(ArcId::a(i, i + 1));
    put(ArcId::p(b2));
    for (int i = 2; i <= b2 - 2; i += 2) put(ArcId::c(i, i + 1));
    put(ArcId::s(1, 1));
    for (int j = 2; j <= d2 - 2; j += 2) put(ArcId::b(j, j + 1));
    put(ArcId::q(d2));
    for (int j = 2; j <= d2 - 2; j += 2) put(ArcId::d(j, j + 1));
    return x;
  }
  if (arc == ArcId::d(1, 2)) {
    for (int j = 1; j <= d2 - 1; j += 2) put(ArcId::b(j, j + 1));
    for (int j = 3; j <= d2 - 1; j += 2) put(ArcId::d(j, j + 1));
    return x;
  }
  return std::nullopt;
}

GF2Vector class_of_arc(const SurfaceParams& p, const ArcId& arc) {
  const HomologyBasis basis(p);
  require_case_two(PunctureLayout(p), arc);
  if (const auto k = basis.index_of(arc)) return GF2Vector::unit(basis.size(), *k);
  if (auto x = explicit_class(p, arc)) return *x;
  return solved_class(p, arc);
}

GF2Matrix transvection(const GF2Matrix& gram, const GF2Vector& w) {
  // T = I + w (G w)^T, so row i is e_i plus (G w)^T when w_i = 1.
  const GF2Vector gw = gram * w;
  GF2Matrix t = GF2Matrix::identity(gram.rows());
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (w.get(i)) t.row(i) += gw;
  return t;
}

GF2Matrix symplectic_image(const SurfaceParams& p, const std::vector<GeneratorLetter>& word) {
  const GF2Matrix g = gram_matrix(p);
  const PunctureLayout L(p);
  GF2Matrix m = GF2Matrix::identity(g.rows());
  for (const auto& letter : word) {
    validate_arc(L, letter.arc);
    if (letter.power == 0) throw InvalidInput("zero power in generator word");
    if (!is_case_two_family(letter.arc.family)) {
      if (letter.power % 3 != 0)
        throw InvalidInput(to_string(letter.arc) + "^" + std::to_string(letter.power) +
                           " does not lift to the triple cover");
      continue;
    }
    if (letter.power % 2 == 0) continue;
    m = m * transvection(g, class_of_arc(p, letter.arc));
  }
  return m;
}

int rho(const SurfaceParams& p, const GF2Vector& x) {
  const HomologyBasis basis(p);
  return (x.get(basis.p_index()) + eval_q(quad_form(p), x)) % 2;
}

std::vector<ArcId> gamma_generator_arcs(const SurfaceParams& p) {
  std::vector<ArcId> arcs;
  for (int i = 1; i < 2 * p.b; ++i) arcs.push_back(ArcId::a(i, i + 1));
  for (int i = 1; i < 2 * p.b; ++i) arcs.push_back(ArcId::c(i, i + 1));
  for (int j = 1; j < 2 * p.d; ++j) arcs.push_back(ArcId::b(j, j + 1));
  for (int j = 1; j < 2 * p.d; ++j) arcs.push_back(ArcId::d(j, j + 1));
  arcs.push_back(ArcId::s(1, 1));
  return arcs;
}

bool orbits_separated(const SurfaceParams& p) {
  const HomologyBasis basis(p);
  const int n = basis.size();
  const GF2Vector pv = GF2Vector::unit(n, basis.p_index()), qv = GF2Vector::unit(n, basis.q_index());
  if (rho(p, pv) == rho(p, qv)) return false;
  const GF2Matrix g = gram_matrix(p);
  for (const auto& arc : gamma_generator_arcs(p)) {
    const GF2Matrix t = transvection(g, class_of_arc(p, arc));
    for (int k = 0; k < n; ++k) {
      const GF2Vector e = GF2Vector::unit(n, k);
      if (rho(p, t * e) != rho(p, e)) return false;
    }
  }
  return true;
}

RhoTable rho_table(const SurfaceParams& p) {
  RhoTable t;
  for (int i = 1; i <= 2 * p.b; ++i) t.p.push_back(rho(p, class_of_arc(p, ArcId::p(i))));
  for (int j = 1; j <= 2 * p.d; ++j) t.q.push_back(rho(p, class_of_arc(p, ArcId::q(j))));
  return t;
}

StableInvariant stable_invariant(const SurfaceParams& p) {
  p.validate();
  const CountsReport c = formula_counts(p);
  long x = std::labs(c.weighted_p), y = std::labs(c.weighted_q);
  if (x > y) std::swap(x, y);
  return {p.strands(), {x, y}};
}

std::string to_string(const StableInvariant& s) {
  return "(" + std::to_string(s.pair.first) + "," + std::to_string(s.pair.second) + ")";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NotDistinguished: return "NotDistinguished";
    case Verdict::Distinguished: return "Distinguished";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::vector<SurfaceParams> symmetry_orbit(const SurfaceParams& p) {
  auto role = [](const SurfaceParams& x) { return SurfaceParams{x.c, x.d, x.a, x.b}; };
  auto factor = [](const SurfaceParams& x) { return SurfaceParams{x.b, x.a, x.d, x.c}; };
  std::vector<SurfaceParams> orbit;
  for (const SurfaceParams& x : {p, role(p), factor(p), role(factor(p))})
    if (std::find(orbit.begin(), orbit.end(), x) == orbit.end()) orbit.push_back(x);
  return orbit;
}

Comparison compare_surfaces(const SurfaceParams& p1, const SurfaceParams& p2) {
  p1.validate();
  p2.validate();
  Comparison c{Verdict::Inconclusive, stable_invariant(p1), stable_invariant(p2)};
  const auto orbit = symmetry_orbit(p1);
  if (std::find(orbit.begin(), orbit.end(), p2) != orbit.end())
    c.verdict = Verdict::NotDistinguished;
  else if (!(c.first == c.second))
    c.verdict = Verdict::Distinguished;
  return c;
}

std::string to_string(const Comparison& c) {
  std::string s = to_string(c.verdict) + " " + to_string(c.first) + " vs " + to_string(c.second);
  if (c.first.strands != c.second.strands)
    s += " strands " + std::to_string(c.first.strands) + " vs " + std::to_string(c.second.strands);
  return s;
}

}  // namespace monodromy
