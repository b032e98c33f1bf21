#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monodromy/gf2.hpp"
#include "monodromy/puncture.hpp"

namespace monodromy {

// Mod 2 first homology of the triple cover Y0 -> P^1 branched over the
// punctures with monodromy s4_to_s3 o theta. Basis, in this order:
//   a~3 .. a~{2b-1}, p~{2b}, c~{2b-1} .. c~1, s~,
//   b~1 .. b~{2d-1}, q~{2d}, d~{2d-1} .. d~2
// where a~i is the cycle over a[i,i+1] (likewise b, c, d), p~i over p_i,
// q~j over q_j and s~ over s[1,1].
class HomologyBasis {
 public:
  explicit HomologyBasis(const SurfaceParams& p);

  const SurfaceParams& params() const { return p_; }
  int size() const { return static_cast<int>(arcs_.size()); }
  const ArcId& arc(int k) const { return arcs_[k]; }
  const std::string& label(int k) const { return labels_[k]; }
  std::optional<int> index_of(const ArcId& arc) const;
  int p_index() const;  // p~{2b}
  int q_index() const;  // q~{2d}

  // Basis-label sum such as "a~3 + a~5 + c~1", "0" for zero.
  std::string format(const GF2Vector& x) const;

 private:
  SurfaceParams p_;
  std::vector<ArcId> arcs_;
  std::vector<std::string> labels_;
};

// Tridiagonal: zero diagonal, ones on both secondary diagonals.
GF2Matrix gram_matrix(const SurfaceParams& p);

struct QuadForm {
  GF2Matrix Q;  // upper triangular, Q_ii = 1, Q_ij = Gram_ij for i < j
};
QuadForm quad_form(const SurfaceParams& p);
// x^T Q x
int eval_q(const QuadForm& qf, const GF2Vector& x);
// x^T (Q + Q^T) y
int polar(const QuadForm& qf, const GF2Vector& x, const GF2Vector& y);

// Mod 2 count of meeting points of two case ii arcs in the planar model,
// shared endpoints included. Monotone arcs pass over the punctures between
// their endpoints, except that c and d arcs pass under primed punctures; at
// positions where both arcs sit on the same side their order is free, so
// crossings are counted between the positions where the order is forced.
// s[1,1] meets each monotone arc at shared endpoints and once more in the
// interior when the arc has exactly one endpoint at B'_1 or D''_1.
// Against a basis arc this is the lifted pairing <v1~, v2~>. In general it
// is not: an interior crossing whose two lifts share both sheets adds 2.
int intersection_parity(const PunctureLayout& layout, const ArcId& v1, const ArcId& v2);

// Case ii arcs only: p, q, a, b, c, d and s[1,1]. Throws InvalidInput on the
// u families (no cycle in the preimage) and on s[i,j] other than s[1,1].
// Basis arcs map to unit vectors; a[1,2], a[2,3] and d[1,2] use the explicit
// sums; all others come from solved_class.
GF2Vector class_of_arc(const SurfaceParams& p, const ArcId& arc);
// Solution of Gram x = (intersection parities with the basis arcs).
GF2Vector solved_class(const SurfaceParams& p, const ArcId& arc);
// The closed-form sums for a[1,2], a[2,3], d[1,2]; nullopt for other arcs.
std::optional<GF2Vector> explicit_class(const SurfaceParams& p, const ArcId& arc);

// z -> z + <w,z> w for the pairing given by `gram`.
GF2Matrix transvection(const GF2Matrix& gram, const GF2Vector& w);

struct GeneratorLetter {
  ArcId arc;
  int power;
};
// Letters l1 .. lk map to M(l1) ... M(lk). Half-twist powers on case ii arcs
// act by the transvection on the arc's class (odd power) or trivially (even
// power); on u, u', u'' only multiples of 3 lift, and they act trivially.
// Throws InvalidInput on a letter that does not lift.
GF2Matrix symplectic_image(const SurfaceParams& p, const std::vector<GeneratorLetter>& word);

// Coordinate at p~{2b} plus q(x).
int rho(const SurfaceParams& p, const GF2Vector& x);

// Classes whose transvections generate the group acting on H_1: a[i,i+1],
// c[i,i+1] for i < 2b, b[j,j+1], d[j,j+1] for j < 2d, and s[1,1].
std::vector<ArcId> gamma_generator_arcs(const SurfaceParams& p);

// rho separates p~{2b} from q~{2d} and is invariant under every generator
// transvection, checked on all basis vectors.
bool orbits_separated(const SurfaceParams& p);

struct RhoTable {
  std::vector<int> p;  // rho(class_of_arc(p_i)), i = 1..2b
  std::vector<int> q;  // rho(class_of_arc(q_j)), j = 1..2d
};
RhoTable rho_table(const SurfaceParams& p);

struct StableInvariant {
  int strands;
  std::pair<long, long> pair;  // sorted (|weighted_p|, |weighted_q|)

  friend bool operator==(const StableInvariant&, const StableInvariant&) = default;
};
StableInvariant stable_invariant(const SurfaceParams& p);
std::string to_string(const StableInvariant& s);  // "(32,96)"

enum class Verdict { NotDistinguished, Distinguished, Inconclusive };
std::string to_string(Verdict v);

// Parameter tuples related by (a,b,c,d) -> (c,d,a,b) and (a,b,c,d) -> (b,a,d,c).
std::vector<SurfaceParams> symmetry_orbit(const SurfaceParams& p);

struct Comparison {
  Verdict verdict;
  StableInvariant first, second;
};
// NotDistinguished on symmetric tuples, Distinguished when the stable
// invariants differ, Inconclusive otherwise.
Comparison compare_surfaces(const SurfaceParams& p1, const SurfaceParams& p2);
// "Distinguished (32,96) vs (64,64)"
std::string to_string(const Comparison& c);

}  // namespace monodromy
