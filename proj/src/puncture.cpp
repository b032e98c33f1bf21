#include "monodromy/puncture.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "monodromy/errors.hpp"

namespace monodromy {

void SurfaceParams::validate() const {
  if (a < 3 || b < 3 || c < 3 || d < 3)
    throw InvalidInput("parameters must satisfy a, b, c, d >= 3");
}

std::string Puncture::label() const {
  return std::string(side == Side::D ? "D" : "B") + (primed ? "'" : "''") + std::to_string(index);
}

PunctureLayout::PunctureLayout(int b, int d) : b_(b), d_(d) {
  if (b < 1 || d < 1) throw InvalidInput("layout needs b, d >= 1");
}

int PunctureLayout::position(const Puncture& x) const {
  const int limit = x.side == Side::D ? 2 * d_ : 2 * b_;
  if (x.index < 1 || x.index > limit) throw InvalidInput("puncture index out of range: " + x.label());
  if (x.side == Side::D) return 2 * (2 * d_ - x.index) + (x.primed ? 1 : 2);
  return 4 * d_ + 2 * x.index - (x.primed ? 1 : 0);
}

Puncture PunctureLayout::at(int pos) const {
  if (pos < 1 || pos > size()) throw InvalidInput("position out of range");
  const bool primed = pos % 2 == 1;
  if (pos <= 4 * d_) return {Side::D, primed, 2 * d_ - (pos - 1) / 2};
  return {Side::B, primed, (pos - 4 * d_ + 1) / 2};
}

Perm PunctureLayout::theta(const Puncture& x) const {
  if (x.side == Side::D) return x.primed ? Perm::transposition(4, 1, 2) : Perm::transposition(4, 3, 4);
  return x.primed ? Perm::transposition(4, 1, 3) : Perm::transposition(4, 2, 4);
}

Perm PunctureLayout::theta_of(const FreeWord& w) const {
  Perm g(4);
  for (int l : w.letters()) g = g * theta_at(std::abs(l));
  return g;
}

std::string PunctureLayout::dump() const {
  std::ostringstream out;
  for (int pos = 1; pos <= size(); ++pos)
    out << pos << '\t' << at(pos).label() << '\t' << theta_at(pos).to_string() << '\n';
  return out.str();
}

namespace {

const char* family_name(ArcFamily f) {
  switch (f) {
    case ArcFamily::p: return "p";
    case ArcFamily::q: return "q";
    case ArcFamily::a: return "a";
    case ArcFamily::b: return "b";
    case ArcFamily::c: return "c";
    case ArcFamily::d: return "d";
    case ArcFamily::u_prime: return "u'";
    case ArcFamily::u_double: return "u''";
    case ArcFamily::u: return "u";
    case ArcFamily::s: return "s";
  }
  return "?";
}

int to_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw InvalidInput("bad arc '" + std::string(whole) + "'");
  return v;
}

Puncture bp(int i) { return {Side::B, true, i}; }
Puncture bpp(int i) { return {Side::B, false, i}; }
Puncture dp(int j) { return {Side::D, true, j}; }
Puncture dpp(int j) { return {Side::D, false, j}; }

// Monotone arc between positions from < to; `under` lists the final
// positions of the punctures the arc passes below.
HalfTwist monotone(int n, int from, int to, std::vector<int> under) {
  std::vector<int> g;
  for (int m = to - 1; m > from; --m) {
    const bool below = std::find(under.begin(), under.end(), m) != under.end();
    g.push_back(below ? m : -m);
  }
  return {BraidWord(n, std::move(g)), from};
}

HalfTwist between(const PunctureLayout& L, const Puncture& x, const Puncture& y, bool cusp_arc) {
  int from = L.position(x), to = L.position(y);
  if (from > to) std::swap(from, to);
  std::vector<int> under;
  if (cusp_arc) {
    // A cusp arc stays in the small disc around its two blocks, so it only
    // dips below the primed partner of its B endpoint.
    const Puncture& bend = x.side == Side::B ? x : y;
    under.push_back(L.position(Puncture{Side::B, true, bend.index}));
  } else if (!x.primed && !y.primed) {
    // Arcs joining two double-primed punctures run between the rows.
    for (int m = from + 1; m < to; ++m)
      if (L.at(m).primed) under.push_back(m);
  }
  return monotone(L.size(), from, to, std::move(under));
}

}  // namespace

std::string to_string(const ArcId& arc) {
  switch (arc.family) {
    case ArcFamily::p: return "p" + std::to_string(arc.i);
    case ArcFamily::q: return "q" + std::to_string(arc.j);
    default:
      return std::string(family_name(arc.family)) + "[" + std::to_string(arc.i) + "," +
             std::to_string(arc.j) + "]";
  }
}

ArcId parse_arc(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t.empty()) throw InvalidInput("empty arc");
  if (t[0] == 'p' && t.find('[') == std::string_view::npos) return ArcId::p(to_int(t.substr(1), text));
  if (t[0] == 'q' && t.find('[') == std::string_view::npos) return ArcId::q(to_int(t.substr(1), text));
  const auto open = t.find('[');
  const auto comma = t.find(',');
  if (open == std::string_view::npos || comma == std::string_view::npos || t.back() != ']' ||
      comma < open)
    throw InvalidInput("bad arc '" + std::string(text) + "'");
  const std::string_view name = t.substr(0, open);
  const int i = to_int(t.substr(open + 1, comma - open - 1), text);
  const int j = to_int(t.substr(comma + 1, t.size() - comma - 2), text);
  for (ArcFamily f : {ArcFamily::a, ArcFamily::b, ArcFamily::c, ArcFamily::d, ArcFamily::u_prime,
                      ArcFamily::u_double, ArcFamily::u, ArcFamily::s})
    if (name == family_name(f)) return {f, i, j};
  throw InvalidInput("unknown arc family in '" + std::string(text) + "'");
}

void validate_arc(const PunctureLayout& L, const ArcId& arc) {
  const int nb = 2 * L.b(), nd = 2 * L.d();
  bool ok = false;
  switch (arc.family) {
    case ArcFamily::p: ok = arc.i >= 1 && arc.i <= nb; break;
    case ArcFamily::q: ok = arc.j >= 1 && arc.j <= nd; break;
    case ArcFamily::a:
    case ArcFamily::c: ok = arc.i >= 1 && arc.i < arc.j && arc.j <= nb; break;
    case ArcFamily::b:
    case ArcFamily::d: ok = arc.i >= 1 && arc.i < arc.j && arc.j <= nd; break;
    default: ok = arc.i >= 1 && arc.i <= nb && arc.j >= 1 && arc.j <= nd; break;
  }
  if (!ok) throw InvalidInput("arc " + to_string(arc) + " out of range");
}

std::pair<Puncture, Puncture> endpoints(const ArcId& arc) {
  switch (arc.family) {
    case ArcFamily::p: return {bp(arc.i), bpp(arc.i)};
    case ArcFamily::q: return {dp(arc.j), dpp(arc.j)};
    case ArcFamily::a: return {bp(arc.i), bp(arc.j)};
    case ArcFamily::c: return {bpp(arc.i), bpp(arc.j)};
    case ArcFamily::b: return {dp(arc.i), dp(arc.j)};
    case ArcFamily::d: return {dpp(arc.i), dpp(arc.j)};
    case ArcFamily::u_prime: return {bp(arc.i), dp(arc.j)};
    case ArcFamily::u_double: return {bpp(arc.i), dpp(arc.j)};
    case ArcFamily::u: return {bp(arc.i), dpp(arc.j)};
    case ArcFamily::s: return {bpp(arc.i), dp(arc.j)};
  }
  throw InvalidInput("bad arc family");
}

std::vector<ArcId> arc_catalog(const PunctureLayout& L) {
  const int nb = 2 * L.b(), nd = 2 * L.d();
  std::vector<ArcId> out;
  for (int i = 1; i <= nb; ++i) out.push_back(ArcId::p(i));
  for (int j = 1; j <= nd; ++j) out.push_back(ArcId::q(j));
  for (int i = 1; i <= nb; ++i)
    for (int j = i + 1; j <= nb; ++j) {
      out.push_back(ArcId::a(i, j));
      out.push_back(ArcId::c(i, j));
    }
  for (int i = 1; i <= nd; ++i)
    for (int j = i + 1; j <= nd; ++j) {
      out.push_back(ArcId::b(i, j));
      out.push_back(ArcId::d(i, j));
    }
  for (int i = 1; i <= nb; ++i)
    for (int j = 1; j <= nd; ++j)
      for (ArcFamily f : {ArcFamily::u_prime, ArcFamily::u_double, ArcFamily::u, ArcFamily::s})
        out.push_back({f, i, j});
  return out;
}

BraidWord HalfTwist::word() const { return power(1); }

BraidWord HalfTwist::power(int e) const {
  return conj * BraidWord::gen(conj.strands(), k, e) * conj.inverse();
}

HalfTwist half_twist(const PunctureLayout& L, const ArcId& arc) {
  validate_arc(L, arc);
  if (arc.family == ArcFamily::s) {
    const BraidWord g = half_twist_word(L, ArcId::u_prime(arc.i, arc.j)) *
                        half_twist_word(L, ArcId::u_double(arc.i, arc.j));
    const HalfTwist u = half_twist(L, ArcId::u(arc.i, arc.j));
    return {g * u.conj, u.k};
  }
  const auto [x, y] = endpoints(arc);
  return between(L, x, y, arc.family == ArcFamily::u_double);
}

BraidWord half_twist_word(const PunctureLayout& L, const ArcId& arc) { return half_twist(L, arc).word(); }

std::pair<Perm, Perm> transported_monodromies(const PunctureLayout& L, const ArcId& arc) {
  const HalfTwist ht = half_twist(L, arc);
  const FreeAutomorphism phi = artin_action(ht.conj);
  const FreeWord loops[2] = {phi.image(ht.k), phi.image(ht.k + 1)};
  const auto [x, y] = endpoints(arc);
  const int px = L.position(x);
  Perm out[2];
  for (const FreeWord& w : loops) {
    // Reduced conjugate v x_m v^-1: the core letter sits in the middle.
    const int m = std::abs(w.letters()[w.length() / 2]);
    out[m == px ? 0 : 1] = L.theta_of(w);
  }
  return {out[0], out[1]};
}

int liftability_class(const PunctureLayout& L, const ArcId& arc) {
  const auto [t1, t2] = transported_monodromies(L, arc);
  if (t1 == t2) return 1;
  if (t1.commutes_with(t2)) return 2;
  return 3;
}

bool is_liftable(const PunctureLayout& L, const BraidWord& w) {
  if (w.strands() != L.size()) throw InvalidInput("braid does not match layout");
  const FreeAutomorphism phi = artin_action(w);
  for (int j = 1; j <= L.size(); ++j)
    if (L.theta_of(phi.image(j)) != L.theta_at(j)) return false;
  return true;
}

std::string to_string(CoverCase c) { return c == CoverCase::i ? "i" : "ii"; }

CoverCase triple_cover_class(const PunctureLayout& L, const ArcId& arc) {
  const auto [t1, t2] = transported_monodromies(L, arc);
  return s4_to_s3(t1) == s4_to_s3(t2) ? CoverCase::ii : CoverCase::i;
}

Perm s4_to_s3(const Perm& g) {
  if (g.size() != 4) throw InvalidInput("s4_to_s3 needs a permutation of 4 points");
  // Partition k pairs point 0 with point k+1.
  std::vector<int> img(3);
  for (int k = 0; k < 3; ++k) {
    const int x = g(0), y = g(k + 1);
    // The pair {x, y} or its complement {0, 6 - x - y} names the image.
    const int partner = x == 0 ? y : (y == 0 ? x : 6 - x - y);
    img[k] = partner - 1;
  }
  return Perm::from_images(std::move(img));
}

BraidWord cable_generator(int strands, int j) {
  if (strands % 2 != 0 || j < 1 || 2 * j + 2 > strands) throw InvalidInput("bad cable generator");
  return BraidWord(strands, {2 * j, 2 * j - 1, 2 * j + 1, 2 * j});
}

BraidWord cable_embed(const BraidWord& w) {
  const int n2 = 2 * w.strands();
  BraidWord out = BraidWord::identity(n2);
  for (int l : w.letters()) {
    const BraidWord g = cable_generator(n2, std::abs(l));
    out = out * (l > 0 ? g : g.inverse());
  }
  return out;
}

BraidWord CableWord::to_braid() const {
  BraidWord out = BraidWord::identity(2 * n);
  for (const auto& l : letters) {
    if (l.power == 0) throw InvalidInput("zero power in cable word");
    if (l.kind == CableLetter::InCable) {
      if (l.index < 1 || l.index > n) throw InvalidInput("in-cable index out of range");
      out = out * BraidWord::gen(2 * n, 2 * l.index - 1, l.power);
    } else {
      out = out * cable_generator(2 * n, l.index).pow(l.power);
    }
  }
  return out;
}

BraidWord cbr_project(const CableWord& w) {
  std::vector<int> letters;
  for (const auto& l : w.letters) {
    if (l.power == 0) throw InvalidInput("zero power in cable word");
    if (l.kind == CableLetter::InCable) {
      if (l.index < 1 || l.index > w.n) throw InvalidInput("in-cable index out of range");
      continue;
    }
    if (l.index < 1 || l.index > w.n - 1) throw InvalidInput("cable generator index out of range");
    letters.insert(letters.end(), std::abs(l.power), l.power > 0 ? l.index : -l.index);
  }
  return BraidWord(w.n, std::move(letters));
}

}  // namespace monodromy
