#include "monodromy/perm.hpp"

#include <numeric>

#include "monodromy/errors.hpp"

namespace monodromy {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm Perm::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int x : images) {
    if (x < 0 || x >= static_cast<int>(images.size()) || seen[x])
      throw InvalidInput("not a permutation");
    seen[x] = true;
  }
  Perm p;
  p.img_ = std::move(images);
  return p;
}

Perm Perm::transposition(int n, int a, int b) {
  if (a < 1 || b < 1 || a > n || b > n || a == b) throw InvalidInput("bad transposition");
  Perm p(n);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Perm Perm::from_cycles(int n, std::initializer_list<std::initializer_list<int>> cycles) {
  Perm p(n);
  for (const auto& cyc : cycles) {
    std::vector<int> c(cyc);
    for (std::size_t k = 0; k < c.size(); ++k) {
      int from = c[k], to = c[(k + 1) % c.size()];
      if (from < 1 || from > n || to < 1 || to > n) throw InvalidInput("bad cycle point");
      p.img_[from - 1] = to - 1;
    }
  }
  return from_images(p.img_);
}

Perm Perm::operator*(const Perm& rhs) const {
  if (size() != rhs.size()) throw InvalidInput("permutation size mismatch");
  Perm r(size());
  for (int x = 0; x < size(); ++x) r.img_[x] = img_[rhs.img_[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r(size());
  for (int x = 0; x < size(); ++x) r.img_[img_[x]] = x;
  return r;
}

Perm Perm::conjugated_by(const Perm& g) const { return g * (*this) * g.inverse(); }

bool Perm::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

int Perm::order() const {
  int ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<int>(c.size()));
  return ord;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(size(), false);
  for (int s = 0; s < size(); ++s) {
    if (seen[s] || img_[s] == s) continue;
    std::vector<int> c;
    for (int x = s; !seen[x]; x = img_[x]) {
      seen[x] = true;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Perm::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ' ';
      s += std::to_string(c[k] + 1);
    }
    s += ')';
  }
  return s;
}

}  // namespace monodromy
