#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monodromy/braid.hpp"
#include "monodromy/puncture.hpp"

namespace monodromy {

struct Factorization {
  int strands = 2;
  std::vector<BraidWord> factors;

  // Throws InvalidInput if some factor has a different strand count.
  void validate() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct Move {
  enum class Kind { Slide, SlideInv, ConjAll, Create, Cancel };
  Kind kind;
  int index = 0;   // 1-based position for Slide, SlideInv, Create, Cancel
  BraidWord word;  // ConjAll, Create

  static Move slide(int i) { return {Kind::Slide, i, {}}; }
  static Move slide_inv(int i) { return {Kind::SlideInv, i, {}}; }
  static Move conj_all(BraidWord g) { return {Kind::ConjAll, 0, std::move(g)}; }
  static Move create(int i, BraidWord beta) { return {Kind::Create, i, std::move(beta)}; }
  static Move cancel(int i) { return {Kind::Cancel, i, {}}; }

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveScript {
  std::vector<Move> moves;
  std::optional<Factorization> expected;
};

// Slide(i):    (a_i, a_{i+1}) -> (a_i a_{i+1} a_i^-1, a_i)
// SlideInv(i): (a_i, a_{i+1}) -> (a_{i+1}, a_{i+1}^-1 a_i a_{i+1})
// ConjAll(g):  every a -> g a g^-1
// Create(i,b): inserts (b, b^-1) before position i
// Cancel(i):   removes (a_i, a_{i+1}) when a_i a_{i+1} is trivial
// Words are freely reduced after each move.
Factorization apply_move(const Factorization& f, const Move& m);
Factorization apply_script(const Factorization& f, const std::vector<Move>& moves);

BraidWord product(const Factorization& f);
// Same length and braids_equal factor by factor.
bool factorwise_equal(const Factorization& f1, const Factorization& f2);
bool verify_script(const Factorization& start, const std::vector<Move>& moves,
                   const Factorization& end);

// A full or half power of the half-twist on a named arc.
struct StructuredTwist {
  ArcId arc;
  int exponent;
};
// Exponent +-2 and disjoint transported endpoint monodromies.
bool is_admissible_pair(const PunctureLayout& layout, const StructuredTwist& beta);

// braids_equal(g w, w g)
bool centralizes(const BraidWord& g, const BraidWord& w);

std::string to_string(const Move& m);
Move parse_move(std::string_view line, int strands);
// One move per line; blank lines and '#' comments are skipped.
std::string script_to_text(const std::vector<Move>& moves);
std::vector<Move> parse_script(std::string_view text, int strands);

// "strands <n>" then one braid word per line.
std::string to_text(const Factorization& f);
Factorization parse_factorization(std::string_view text);

struct SearchOptions {
  int depth_bound = 8;
  std::size_t node_bound = 200000;
  // States whose Artin images exceed this many letters are pruned; pruning
  // counts as a bound being hit.
  std::size_t letter_bound = 20000;
  // Move alphabet, in tie-break order: Slide(1..), SlideInv(1..), then
  // ConjAll by each listed conjugator.
  bool slides = true;
  std::vector<BraidWord> conjugators;
};

enum class SearchStatus {
  Found,
  // The reachable graph was explored completely without meeting the target.
  NoPath,
  // The depth or node bound stopped the search first.
  BoundExhausted,
  // Products differ and no conjugation is allowed, so no script can exist.
  ProductMismatch,
};
std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status;
  std::vector<Move> script;  // set when Found
  std::size_t nodes = 0;
  int depth = 0;
};

// Breadth-first search keyed by the Artin images of the factors. Among the
// shortest scripts the one least in move order is returned.
SearchResult orbit_search(const Factorization& from, const Factorization& to,
                          const SearchOptions& options);

// Worked equivalence chains on the local models, stored as data.
struct BuiltinScript {
  std::string name;
  Factorization start;
  std::vector<Move> moves;
  Factorization end;
};
std::vector<BuiltinScript> builtin_scripts();

// Four-factor local models in Br_4.
Factorization cusp_cluster_model();     // sigma_2^3, s, sigma_1^3, sigma_3^3
Factorization tangent_cluster_model();  // (s1^-1 s2 s1)(s2^-1 s3 s2) twice

}  // namespace monodromy
