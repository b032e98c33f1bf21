#include "monodromy/gf2.hpp"

#include <cstdlib>
#include <cstring>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace gf2_kernel {

#ifdef MONODROMY_HAVE_AVX2_KERNEL
namespace detail {
void xor_avx2_impl(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
int dot_avx2_impl(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
}  // namespace detail
#endif

void xor_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

int dot_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::uint64_t folded = 0;
  for (std::size_t i = 0; i < words; ++i) folded ^= a[i] & b[i];
  return __builtin_parityll(folded);
}

bool avx2_available() {
#ifdef MONODROMY_HAVE_AVX2_KERNEL
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

XorFn xor_avx2() {
#ifdef MONODROMY_HAVE_AVX2_KERNEL
  if (avx2_available()) return detail::xor_avx2_impl;
#endif
  return nullptr;
}

DotFn dot_avx2() {
#ifdef MONODROMY_HAVE_AVX2_KERNEL
  if (avx2_available()) return detail::dot_avx2_impl;
#endif
  return nullptr;
}

namespace {

struct Dispatch {
  XorFn x;
  DotFn d;
  const char* name;
};

Dispatch choose() {
  // MONODROMY_GF2_KERNEL=scalar forces the portable path.
  const char* env = std::getenv("MONODROMY_GF2_KERNEL");
  const bool force_scalar = env != nullptr && std::strcmp(env, "scalar") == 0;
  if (!force_scalar && avx2_available()) return {xor_avx2(), dot_avx2(), "avx2"};
  return {xor_scalar, dot_scalar, "scalar"};
}

const Dispatch& dispatch() {
  static const Dispatch d = choose();
  return d;
}

}  // namespace

const char* active_name() { return dispatch().name; }
XorFn active_xor() { return dispatch().x; }
DotFn active_dot() { return dispatch().d; }

}  // namespace gf2_kernel

GF2Vector GF2Vector::unit(std::size_t n, std::size_t i) {
  GF2Vector v(n);
  v.set(i, true);
  return v;
}

void GF2Vector::set(std::size_t i, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (v)
    w_[i / 64] |= bit;
  else
    w_[i / 64] &= ~bit;
}

GF2Vector& GF2Vector::operator+=(const GF2Vector& o) {
  if (o.n_ != n_) throw InvalidInput("GF(2) vector length mismatch");
  gf2_kernel::active_xor()(w_.data(), o.w_.data(), w_.size());
  return *this;
}

GF2Vector GF2Vector::operator+(const GF2Vector& o) const {
  GF2Vector r = *this;
  r += o;
  return r;
}

int dot(const GF2Vector& a, const GF2Vector& b) {
  if (a.n_ != b.n_) throw InvalidInput("GF(2) vector length mismatch");
  return gf2_kernel::active_dot()(a.w_.data(), b.w_.data(), a.w_.size());
}

bool GF2Vector::is_zero() const {
  for (auto x : w_)
    if (x) return false;
  return true;
}

std::size_t GF2Vector::weight() const {
  std::size_t c = 0;
  for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
  return c;
}

std::vector<std::size_t> GF2Vector::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s.push_back(i);
  return s;
}

std::string GF2Vector::to_bits() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

GF2Vector GF2Matrix::operator*(const GF2Vector& x) const {
  if (x.size() != cols_) throw InvalidInput("GF(2) matrix-vector size mismatch");
  GF2Vector y(rows());
  for (std::size_t i = 0; i < rows(); ++i) y.set(i, dot(r_[i], x));
  return y;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& b) const {
  if (cols_ != b.rows()) throw InvalidInput("GF(2) matrix product size mismatch");
  GF2Matrix c(rows(), b.cols());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (at(i, k)) c.r_[i] += b.r_[k];
  return c;
}

GF2Matrix GF2Matrix::operator+(const GF2Matrix& b) const {
  if (rows() != b.rows() || cols_ != b.cols_) throw InvalidInput("GF(2) matrix sum size mismatch");
  GF2Matrix c = *this;
  for (std::size_t i = 0; i < rows(); ++i) c.r_[i] += b.r_[i];
  return c;
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j)) t.set(j, i, true);
  return t;
}

namespace {

// Row-reduces `a` in place, applying the same row operations to `b` if given.
// Returns the pivot column of each leading row.
std::vector<std::size_t> eliminate(std::vector<GF2Vector>& a, std::vector<GF2Vector>* b) {
  std::vector<std::size_t> pivots;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && !a[p].get(c)) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    if (b) std::swap((*b)[r], (*b)[p]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || !a[i].get(c)) continue;
      a[i] += a[r];
      if (b) (*b)[i] += (*b)[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t GF2Matrix::rank() const {
  std::vector<GF2Vector> a = r_;
  return eliminate(a, nullptr).size();
}

std::optional<GF2Vector> GF2Matrix::solve(const GF2Vector& b) const {
  if (b.size() != rows()) throw InvalidInput("GF(2) solve size mismatch");
  std::vector<GF2Vector> a = r_;
  std::vector<GF2Vector> rhs;
  for (std::size_t i = 0; i < rows(); ++i) {
    rhs.emplace_back(1);
    rhs.back().set(0, b.get(i));
  }
  const auto pivots = eliminate(a, &rhs);
  for (std::size_t i = pivots.size(); i < rows(); ++i)
    if (rhs[i].get(0)) return std::nullopt;
  GF2Vector x(cols_);
  for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], rhs[i].get(0));
  return x;
}

std::optional<GF2Matrix> GF2Matrix::inverse() const {
  if (rows() != cols_) throw InvalidInput("inverse of a non-square GF(2) matrix");
  std::vector<GF2Vector> a = r_;
  GF2Matrix inv = identity(cols_);
  if (eliminate(a, &inv.r_).size() != cols_) return std::nullopt;
  return inv;
}

std::string GF2Matrix::to_string() const {
  std::string s;
  for (const auto& r : r_) s += r.to_bits() + "\n";
  return s;
}

}  // namespace monodromy
