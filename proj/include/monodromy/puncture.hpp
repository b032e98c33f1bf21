#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monodromy/braid.hpp"
#include "monodromy/perm.hpp"

namespace monodromy {

struct SurfaceParams {
  int a = 3, b = 3, c = 3, d = 3;

  // Throws InvalidInput unless a, b, c, d >= 3.
  void validate() const;
  bool case_one() const { return c == 2 * a && d == 2 * b; }
  bool case_two() const { return a == 2 * c && b == 2 * d; }
  bool exceptional() const { return case_one() || case_two(); }
  int strands() const { return 4 * (b + d); }

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

enum class Side { D, B };

struct Puncture {
  Side side;
  bool primed;  // ' versus ''
  int index;

  std::string label() const;  // D'3, B''1
  friend bool operator==(const Puncture&, const Puncture&) = default;
};

// Punctures left to right: D'_{2d} D''_{2d} ... D'_1 D''_1 B'_1 B''_1 ... B'_{2b} B''_{2b}.
// Positions are 1-based.
class PunctureLayout {
 public:
  PunctureLayout(int b, int d);
  explicit PunctureLayout(const SurfaceParams& p) : PunctureLayout(p.b, p.d) {}

  int b() const { return b_; }
  int d() const { return d_; }
  int size() const { return 4 * (b_ + d_); }

  int position(const Puncture& x) const;
  Puncture at(int pos) const;
  // Covering monodromy: D' -> (12), B' -> (13), D'' -> (34), B'' -> (24).
  Perm theta(const Puncture& x) const;
  Perm theta_at(int pos) const { return theta(at(pos)); }
  // Image of a free word under the monodromy homomorphism.
  Perm theta_of(const FreeWord& w) const;

  std::string dump() const;

 private:
  int b_, d_;
};

enum class ArcFamily { p, q, a, b, c, d, u_prime, u_double, u, s };

// p: i. q: j. a, c: B-indices i < j. b, d: D-indices i < j.
// u', u'', u, s: B-index i, D-index j.
struct ArcId {
  ArcFamily family;
  int i = 0;
  int j = 0;

  static ArcId p(int i) { return {ArcFamily::p, i, 0}; }
  static ArcId q(int j) { return {ArcFamily::q, 0, j}; }
  static ArcId a(int i, int j) { return {ArcFamily::a, i, j}; }
  static ArcId b(int i, int j) { return {ArcFamily::b, i, j}; }
  static ArcId c(int i, int j) { return {ArcFamily::c, i, j}; }
  static ArcId d(int i, int j) { return {ArcFamily::d, i, j}; }
  static ArcId u_prime(int i, int j) { return {ArcFamily::u_prime, i, j}; }
  static ArcId u_double(int i, int j) { return {ArcFamily::u_double, i, j}; }
  static ArcId u(int i, int j) { return {ArcFamily::u, i, j}; }
  static ArcId s(int i, int j) { return {ArcFamily::s, i, j}; }

  friend bool operator==(const ArcId&, const ArcId&) = default;
};

std::string to_string(const ArcId& arc);
ArcId parse_arc(std::string_view text);
void validate_arc(const PunctureLayout& layout, const ArcId& arc);
// The two endpoints, in the order the arc is named.
std::pair<Puncture, Puncture> endpoints(const ArcId& arc);
// Every arc of every family for the layout.
std::vector<ArcId> arc_catalog(const PunctureLayout& layout);

// A half-twist written as conj * sigma_k * conj^-1.
struct HalfTwist {
  BraidWord conj;
  int k;

  BraidWord word() const;
  BraidWord power(int e) const;
};

// Monotone arcs pass over every puncture between their endpoints, except
// that arcs joining two double-primed punctures (c, d, u'') pass under the
// primed ones. Over a puncture at final position m contributes sigma_m^-1
// to the conjugator, under contributes sigma_m.
// s_{ij} is u_{ij} conjugated by sigma_{u'_{ij}} sigma_{u''_{ij}}.
HalfTwist half_twist(const PunctureLayout& layout, const ArcId& arc);
BraidWord half_twist_word(const PunctureLayout& layout, const ArcId& arc);

// theta of the loops around the two endpoints, carried along the arc.
std::pair<Perm, Perm> transported_monodromies(const PunctureLayout& layout, const ArcId& arc);
int liftability_class(const PunctureLayout& layout, const ArcId& arc);

// theta o artin_action(w) == theta on every generator.
bool is_liftable(const PunctureLayout& layout, const BraidWord& w);

enum class CoverCase { i, ii };
std::string to_string(CoverCase c);
CoverCase triple_cover_class(const PunctureLayout& layout, const ArcId& arc);

// Action of S4 on the pair partitions {12|34}, {13|24}, {14|23}.
Perm s4_to_s3(const Perm& g);

// sigma_{2j} sigma_{2j-1} sigma_{2j+1} sigma_{2j} in Br_{strands}.
BraidWord cable_generator(int strands, int j);
BraidWord cable_embed(const BraidWord& w);

// Word in the generators of the 2-cable subgroup of Br_{2n}: in-cable
// half-twists sigma_{2k-1} and cable generators.
struct CableLetter {
  enum Kind { InCable, Cable } kind;
  int index;  // k or j
  int power;  // nonzero
};
struct CableWord {
  int n;  // base strand count; the braid lives in Br_{2n}
  std::vector<CableLetter> letters;

  BraidWord to_braid() const;
};
// Drops in-cable letters and sends cable generator j to sigma_j.
BraidWord cbr_project(const CableWord& w);

}  // namespace monodromy
