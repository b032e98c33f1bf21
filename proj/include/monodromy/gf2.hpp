#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace monodromy {

// Word-level kernels behind GF2Vector and GF2Matrix. The active kernel is
// chosen once: AVX2 when the CPU reports it, scalar otherwise.
namespace gf2_kernel {

using XorFn = void (*)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
// Parity of popcount(a & b).
using DotFn = int (*)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

void xor_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
int dot_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

// False when the AVX2 kernel was not compiled in or the CPU lacks AVX2.
bool avx2_available();
// Null unless avx2_available().
XorFn xor_avx2();
DotFn dot_avx2();

const char* active_name();
XorFn active_xor();
DotFn active_dot();

}  // namespace gf2_kernel

class GF2Vector {
 public:
  GF2Vector() = default;
  explicit GF2Vector(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}
  static GF2Vector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v);
  void flip(std::size_t i) { w_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  GF2Vector& operator+=(const GF2Vector& o);
  GF2Vector operator+(const GF2Vector& o) const;
  // Standard dot product, 0 or 1.
  friend int dot(const GF2Vector& a, const GF2Vector& b);

  bool is_zero() const;
  std::size_t weight() const;
  std::vector<std::size_t> support() const;
  const std::vector<std::uint64_t>& words() const { return w_; }
  std::string to_bits() const;

  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), r_(rows, GF2Vector(cols)) {}
  static GF2Matrix identity(std::size_t n);

  std::size_t rows() const { return r_.size(); }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t i, std::size_t j) const { return r_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v) { r_[i].set(j, v); }
  const GF2Vector& row(std::size_t i) const { return r_[i]; }
  GF2Vector& row(std::size_t i) { return r_[i]; }

  GF2Vector operator*(const GF2Vector& x) const;
  GF2Matrix operator*(const GF2Matrix& b) const;
  GF2Matrix operator+(const GF2Matrix& b) const;
  GF2Matrix transpose() const;

  std::size_t rank() const;
  // Some x with A x = b, if any.
  std::optional<GF2Vector> solve(const GF2Vector& b) const;
  std::optional<GF2Matrix> inverse() const;

  // One row per line as 0/1 characters.
  std::string to_string() const;

  friend bool operator==(const GF2Matrix&, const GF2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<GF2Vector> r_;
};

}  // namespace monodromy
