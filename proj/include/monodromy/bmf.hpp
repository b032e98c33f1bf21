#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "monodromy/braid.hpp"
#include "monodromy/puncture.hpp"

namespace monodromy {

enum class FactorKind { Tangency, Cusp, NodePositive, NodeNegative };

std::string to_string(FactorKind k);
FactorKind parse_factor_kind(std::string_view s);
// Exponent of the half-twist: 1, 3, 2, -2.
int kind_exponent(FactorKind k);

struct FactorTag {
  FactorKind kind;
  ArcId arc;

  friend bool operator==(const FactorTag&, const FactorTag&) = default;
};

struct Factor {
  BraidWord word;
  FactorTag tag;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Half-open range [begin, end) of factor indices.
struct Block {
  std::string name;
  std::size_t begin;
  std::size_t end;

  friend bool operator==(const Block&, const Block&) = default;
};

struct BMFactorization {
  SurfaceParams params;
  std::vector<Factor> factors;
  std::vector<Block> blocks;

  friend bool operator==(const BMFactorization&, const BMFactorization&) = default;
};

// Four-factor elementary pieces.
std::vector<Factor> beta_f(const PunctureLayout& L, int i);
std::vector<Factor> beta_g(const PunctureLayout& L, int j);
std::vector<Factor> beta_fg(const PunctureLayout& L, int j);
std::vector<Factor> beta_gf(const PunctureLayout& L, int i);

BMFactorization build_bmf(const SurfaceParams& params);
BraidWord product(const BMFactorization& f);
BraidWord product(const std::vector<Factor>& factors, int strands);

struct CountsReport {
  long m = 0, k = 0, nu = 0, nu_plus = 0, nu_minus = 0;
  long t = 0, t_f = 0, t_g = 0;
  long genus_R = 0, chi = 0, K2 = 0;
  long weighted_p = 0, weighted_q = 0;
  long num_factors = 0;
  long exponent_sum = 0;

  friend bool operator==(const CountsReport&, const CountsReport&) = default;
};

CountsReport formula_counts(const SurfaceParams& p);
CountsReport scan_counts(const BMFactorization& f);
// Scan and formula must agree; throws ConsistencyError otherwise.
CountsReport counts(const BMFactorization& f);
std::string to_text(const CountsReport& c);

struct Generator {
  ArcId arc;
  int power;
  BraidWord word;
};
// Throws InvalidInput in the exceptional cases c = 2a, d = 2b or a = 2c, b = 2d.
std::vector<Generator> monodromy_group_generators(const SurfaceParams& params);

// Conjugator w with w p_i^2 w^-1 = p_{i+1}^2, built from a and c twists
// (q and b, d for side D).
BraidWord pq_conjugator(const PunctureLayout& L, Side side, int i);

// The four-strand cusp model: hur1 strands 1..4 are D'_1, B'_1, D''_1, B''_1.
// The layout block D'_1 D''_1 B'_1 B''_1 sits at positions 4d-1..4d+2 and the
// model is carried there by the single crossing sigma_{4d}^-1.
BraidWord embed_cusp_model(const PunctureLayout& L, const BraidWord& local);

std::string to_text(const BMFactorization& f);
BMFactorization parse_bmf(std::string_view text);

}  // namespace monodromy
