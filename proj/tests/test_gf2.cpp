#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "monodromy/errors.hpp"
#include "monodromy/gf2.hpp"
#include "support/gen.hpp"

using namespace monodromy;

namespace {

GF2Vector random_vector(std::mt19937_64& r, std::size_t n) {
  GF2Vector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, r() & 1U);
  return v;
}

GF2Matrix random_matrix(std::mt19937_64& r, std::size_t rows, std::size_t cols) {
  GF2Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) m.row(i) = random_vector(r, cols);
  return m;
}

// Bit-by-bit reference products.
int naive_dot(const GF2Vector& a, const GF2Vector& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s ^= a.get(i) & b.get(i);
  return s;
}

}  // namespace

TEST_CASE("kernels: scalar and AVX2 agree") {
  INFO("active kernel: " << gf2_kernel::active_name());
  const auto xa = gf2_kernel::xor_avx2();
  const auto da = gf2_kernel::dot_avx2();
  if (!gf2_kernel::avx2_available()) {
    CHECK(xa == nullptr);
    CHECK(std::string(gf2_kernel::active_name()) == "scalar");
    MESSAGE("AVX2 not available; only the scalar kernel is exercised");
    return;
  }
  REQUIRE(xa != nullptr);
  REQUIRE(da != nullptr);
  auto r = gen::rng(31);
  // Word counts straddle the 4-word vector width and its tail.
  for (std::size_t words : {0, 1, 3, 4, 5, 7, 8, 9, 16, 31, 64, 257}) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<std::uint64_t> a(words), b(words);
      for (auto& x : a) x = r();
      for (auto& x : b) x = r();
      std::vector<std::uint64_t> s = a, v = a;
      gf2_kernel::xor_scalar(s.data(), b.data(), words);
      xa(v.data(), b.data(), words);
      CHECK(s == v);
      CHECK(gf2_kernel::dot_scalar(a.data(), b.data(), words) == da(a.data(), b.data(), words));
    }
  }
}

TEST_CASE("kernel selection honours the override") {
  const char* env = std::getenv("MONODROMY_GF2_KERNEL");
  if (env != nullptr && std::strcmp(env, "scalar") == 0)
    CHECK(std::string(gf2_kernel::active_name()) == "scalar");
  else if (gf2_kernel::avx2_available())
    CHECK(std::string(gf2_kernel::active_name()) == "avx2");
}

TEST_CASE("vectors") {
  GF2Vector v(70);
  CHECK(v.is_zero());
  v.set(0, true);
  v.set(69, true);
  v.flip(3);
  CHECK(v.weight() == 3);
  CHECK(v.support() == std::vector<std::size_t>{0, 3, 69});
  CHECK(v.to_bits().substr(0, 5) == "10010");
  CHECK((v + v).is_zero());
  CHECK(dot(v, GF2Vector::unit(70, 69)) == 1);
  CHECK(dot(v, GF2Vector::unit(70, 68)) == 0);
  CHECK_THROWS_AS(v += GF2Vector(3), InvalidInput);
}

TEST_CASE("property: dot and products against bitwise references") {
  auto r = gen::rng(32);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(r, 1, 300));
    const GF2Vector a = random_vector(r, n), b = random_vector(r, n);
    CHECK(dot(a, b) == naive_dot(a, b));
    const GF2Vector c = a + b;
    for (std::size_t i = 0; i < n; ++i) CHECK(c.get(i) == (a.get(i) != b.get(i)));

    const std::size_t m = static_cast<std::size_t>(gen::uniform(r, 1, 40));
    const GF2Matrix A = random_matrix(r, m, n);
    const GF2Vector y = A * a;
    for (std::size_t i = 0; i < m; ++i) CHECK(y.get(i) == naive_dot(A.row(i), a));
    const GF2Matrix At = A.transpose();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; j += 7) CHECK(At.at(j, i) == A.at(i, j));
  }
}

TEST_CASE("property: matrix algebra") {
  auto r = gen::rng(33);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(gen::uniform(r, 1, 70));
    const GF2Matrix A = random_matrix(r, n, n), B = random_matrix(r, n, n), C = random_matrix(r, n, n);
    CHECK((A * B) * C == A * (B * C));
    CHECK(A * (B + C) == A * B + A * C);
    CHECK((A * B).transpose() == B.transpose() * A.transpose());
    CHECK(A * GF2Matrix::identity(n) == A);
    const auto inv = A.inverse();
    CHECK(inv.has_value() == (A.rank() == n));
    if (inv) {
      CHECK(A * *inv == GF2Matrix::identity(n));
      CHECK(*inv * A == GF2Matrix::identity(n));
    }
    const GF2Vector x = random_vector(r, n);
    const GF2Vector b = A * x;
    const auto s = A.solve(b);
    REQUIRE(s.has_value());
    CHECK(A * *s == b);
  }
}

TEST_CASE("rank and solve edge cases") {
  GF2Matrix z(3, 5);
  CHECK(z.rank() == 0);
  CHECK_FALSE(z.solve(GF2Vector::unit(3, 1)).has_value());
  CHECK(z.solve(GF2Vector(3)).has_value());
  CHECK_FALSE(GF2Matrix(2, 2).inverse().has_value());
  CHECK_THROWS_AS(GF2Matrix(2, 3).inverse(), InvalidInput);
  CHECK(GF2Matrix::identity(3).to_string() == "100\n010\n001\n");
}
