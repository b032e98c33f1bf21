#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace monodromy {

// Permutation of {0..n-1}. Printed 1-based in cycle notation.
// Products act right to left: (p * q)(x) = p(q(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);

  static Perm from_images(std::vector<int> images);
  // 1-based points, e.g. transposition(4, 1, 3) is (1 3) in S4.
  static Perm transposition(int n, int a, int b);
  static Perm from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  // g * this * g^-1
  Perm conjugated_by(const Perm& g) const;

  bool is_identity() const;
  int order() const;
  bool commutes_with(const Perm& other) const { return (*this) * other == other * (*this); }
  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, 0-based
  std::string to_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

 private:
  std::vector<int> img_;
};

}  // namespace monodromy
