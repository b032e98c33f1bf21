#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "monodromy/perm.hpp"

namespace monodromy {

// A word in the Artin generators of the disk braid group Br_n.
// Letter +i stands for sigma_i, -i for its inverse (1 <= i <= n-1).
// operator== compares letters; use braids_equal for group equality.
class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);

  static BraidWord identity(int strands) { return BraidWord(strands, {}); }
  // sigma_i^power
  static BraidWord gen(int strands, int i, int power = 1);

  int strands() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  BraidWord inverse() const;
  BraidWord pow(int k) const;
  BraidWord operator*(const BraidWord& rhs) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend bool operator<(const BraidWord& a, const BraidWord& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.letters_ < b.letters_;
  }

 private:
  int n_ = 1;
  std::vector<int> letters_;
};

BraidWord compose(const BraidWord& w1, const BraidWord& w2);
// g * w * g^-1
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

// Freely reduced word in x_1..x_n; letter +j is x_j, -j its inverse.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<int>& letters);

  static FreeWord gen(int j) { return FreeWord({j}); }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  void append(int letter);
  void append(const FreeWord& w);
  void append_inverse(const FreeWord& w);
  FreeWord inverse() const;
  FreeWord operator*(const FreeWord& rhs) const;

  std::string to_string() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<int> letters_;
};

// Images of x_1..x_n under an automorphism of the free group F_n.
class FreeAutomorphism {
 public:
  explicit FreeAutomorphism(int n);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int j) const { return images_[j - 1]; }
  const std::vector<FreeWord>& images() const { return images_; }
  std::vector<FreeWord>& mutable_images() { return images_; }

  FreeWord apply(const FreeWord& w) const;
  // (this o other)(x) = this(other(x))
  FreeAutomorphism after(const FreeAutomorphism& other) const;
  bool is_identity() const;
  std::size_t total_letters() const;
  std::size_t hash() const;

  friend bool operator==(const FreeAutomorphism&, const FreeAutomorphism&) = default;

 private:
  std::vector<FreeWord> images_;
};

// Letter budget for artin_action; MONODROMY_LETTER_BUDGET overrides the
// default of 10^6.
std::size_t letter_budget();

// Convention: sigma_i sends x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i.
// artin_action(u * v) == artin_action(u).after(artin_action(v)).
// Throws ResourceError once the images exceed the budget.
FreeAutomorphism artin_action(const BraidWord& w, std::size_t budget = letter_budget());

bool braids_equal(const BraidWord& w1, const BraidWord& w2);
bool is_trivial(const BraidWord& w);

// Strand starting at position p (0-based) ends at permutation(w)(p).
Perm permutation(const BraidWord& w);
int exponent_sum(const BraidWord& w);

struct LinkingMatrix {
  // Closure components, each the sorted 0-based starting positions of its
  // strands; components ordered by smallest position.
  std::vector<std::vector<int>> components;
  std::vector<std::vector<int>> entries;
};
LinkingMatrix linking_matrix(const BraidWord& w);

// Text form: "s2 s2 s1^-1", "e" for the empty word. The parser also
// accepts "s<i>^<k>" for any nonzero k. strands <= 0 means the smallest
// strand count that fits (at least 2).
BraidWord parse_braid(std::string_view text, int strands = 0);
std::string to_string(const BraidWord& w);

}  // namespace monodromy
