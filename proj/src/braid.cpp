#include "monodromy/braid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "monodromy/errors.hpp"

namespace monodromy {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : n_(strands), letters_(std::move(letters)) {
  if (n_ < 1) throw InvalidInput("strand count must be positive");
  for (int l : letters_)
    if (l == 0 || std::abs(l) > n_ - 1)
      throw InvalidInput("generator s" + std::to_string(std::abs(l)) + " out of range for " +
                         std::to_string(n_) + " strands");
}

BraidWord BraidWord::gen(int strands, int i, int power) {
  std::vector<int> l(std::abs(power), power > 0 ? i : -i);
  return BraidWord(strands, std::move(l));
}

BraidWord BraidWord::inverse() const {
  std::vector<int> r(letters_.rbegin(), letters_.rend());
  for (int& l : r) l = -l;
  BraidWord w;
  w.n_ = n_;
  w.letters_ = std::move(r);
  return w;
}

BraidWord BraidWord::pow(int k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  BraidWord w;
  w.n_ = n_;
  for (int r = 0; r < std::abs(k); ++r)
    w.letters_.insert(w.letters_.end(), base.letters_.begin(), base.letters_.end());
  return w;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (n_ != rhs.n_) throw InvalidInput("strand count mismatch");
  BraidWord w = *this;
  w.letters_.insert(w.letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return w;
}

BraidWord compose(const BraidWord& w1, const BraidWord& w2) { return w1 * w2; }

BraidWord conjugate(const BraidWord& w, const BraidWord& g) { return g * w * g.inverse(); }

FreeWord::FreeWord(const std::vector<int>& letters) {
  for (int l : letters) append(l);
}

void FreeWord::append(int letter) {
  if (!letters_.empty() && letters_.back() == -letter)
    letters_.pop_back();
  else
    letters_.push_back(letter);
}

void FreeWord::append(const FreeWord& w) {
  for (int l : w.letters_) append(l);
}

void FreeWord::append_inverse(const FreeWord& w) {
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) append(-*it);
}

FreeWord FreeWord::inverse() const {
  FreeWord r;
  r.append_inverse(*this);
  return r;
}

FreeWord FreeWord::operator*(const FreeWord& rhs) const {
  FreeWord r = *this;
  r.append(rhs);
  return r;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += ' ';
    s += 'x' + std::to_string(std::abs(letters_[k]));
    if (letters_[k] < 0) s += "^-1";
  }
  return s;
}

FreeAutomorphism::FreeAutomorphism(int n) : images_(n) {
  for (int j = 1; j <= n; ++j) images_[j - 1] = FreeWord::gen(j);
}

FreeWord FreeAutomorphism::apply(const FreeWord& w) const {
  FreeWord r;
  for (int l : w.letters()) {
    if (l > 0)
      r.append(images_[l - 1]);
    else
      r.append_inverse(images_[-l - 1]);
  }
  return r;
}

FreeAutomorphism FreeAutomorphism::after(const FreeAutomorphism& other) const {
  if (rank() != other.rank()) throw InvalidInput("rank mismatch");
  FreeAutomorphism r(rank());
  for (int j = 0; j < rank(); ++j) r.images_[j] = apply(other.images_[j]);
  return r;
}

bool FreeAutomorphism::is_identity() const { return *this == FreeAutomorphism(rank()); }

std::size_t FreeAutomorphism::total_letters() const {
  std::size_t t = 0;
  for (const auto& w : images_) t += w.length();
  return t;
}

std::size_t FreeAutomorphism::hash() const {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& w : images_) {
    for (int l : w.letters()) h = (h ^ static_cast<std::size_t>(l + 1024)) * 0x100000001b3ull;
    h = (h ^ 0xffu) * 0x100000001b3ull;
  }
  return h;
}

std::size_t letter_budget() {
  if (const char* env = std::getenv("MONODROMY_LETTER_BUDGET")) {
    std::size_t v = 0;
    std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size() && v > 0) return v;
  }
  return 1000000;
}

FreeAutomorphism artin_action(const BraidWord& w, std::size_t budget) {
  FreeAutomorphism phi(w.strands());
  auto& img = phi.mutable_images();
  std::size_t total = w.strands();
  // Appending letter s replaces phi by phi o phi_s; only two images change.
  for (int l : w.letters()) {
    const int i = std::abs(l) - 1;
    FreeWord& a = img[i];
    FreeWord& b = img[i + 1];
    total -= a.length() + b.length();
    if (l > 0) {
      FreeWord na = a;
      na.append(b);
      na.append_inverse(a);
      b = std::move(a);
      a = std::move(na);
    } else {
      FreeWord nb = b.inverse();
      nb.append(a);
      nb.append(b);
      a = std::move(b);
      b = std::move(nb);
    }
    total += a.length() + b.length();
    if (total > budget)
      throw ResourceError("free-group images exceed letter budget of " + std::to_string(budget));
  }
  return phi;
}

bool braids_equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands()) throw InvalidInput("strand count mismatch");
  if (w1 == w2) return true;
  if (exponent_sum(w1) != exponent_sum(w2)) return false;
  return artin_action(w1) == artin_action(w2);
}

bool is_trivial(const BraidWord& w) { return braids_equal(w, BraidWord::identity(w.strands())); }

Perm permutation(const BraidWord& w) {
  std::vector<int> at(w.strands());
  for (int p = 0; p < w.strands(); ++p) at[p] = p;
  for (int l : w.letters()) {
    const int i = std::abs(l) - 1;
    std::swap(at[i], at[i + 1]);
  }
  std::vector<int> img(w.strands());
  for (int p = 0; p < w.strands(); ++p) img[at[p]] = p;
  return Perm::from_images(std::move(img));
}

int exponent_sum(const BraidWord& w) {
  int s = 0;
  for (int l : w.letters()) s += l > 0 ? 1 : -1;
  return s;
}

LinkingMatrix linking_matrix(const BraidWord& w) {
  const int n = w.strands();
  const Perm pi = permutation(w);
  std::vector<int> comp(n, -1);
  LinkingMatrix lm;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members;
    for (int x = s; comp[x] < 0; x = pi(x)) {
      comp[x] = static_cast<int>(lm.components.size());
      members.push_back(x);
    }
    std::sort(members.begin(), members.end());
    lm.components.push_back(std::move(members));
  }
  const std::size_t k = lm.components.size();
  std::vector<std::vector<int>> twice(k, std::vector<int>(k, 0));
  std::vector<int> at(n);
  for (int p = 0; p < n; ++p) at[p] = p;
  for (int l : w.letters()) {
    const int i = std::abs(l) - 1;
    const int c1 = comp[at[i]], c2 = comp[at[i + 1]];
    if (c1 != c2) {
      const int sgn = l > 0 ? 1 : -1;
      twice[c1][c2] += sgn;
      twice[c2][c1] += sgn;
    }
    std::swap(at[i], at[i + 1]);
  }
  lm.entries.assign(k, std::vector<int>(k, 0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (twice[a][b] % 2 != 0) throw ConsistencyError("odd crossing count between components");
      lm.entries[a][b] = twice[a][b] / 2;
    }
  return lm;
}

namespace {

int parse_int(std::string_view s, std::string_view token) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw InvalidInput("bad braid letter '" + std::string(token) + "'");
  return v;
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty()) throw InvalidInput("empty braid text (use 'e')");
  std::vector<int> letters;
  if (!(tokens.size() == 1 && tokens[0] == "e")) {
    for (const auto& t : tokens) {
      std::string_view sv(t);
      if (sv.size() < 2 || sv[0] != 's') throw InvalidInput("bad braid letter '" + t + "'");
      sv.remove_prefix(1);
      int power = 1;
      if (auto caret = sv.find('^'); caret != std::string_view::npos) {
        power = parse_int(sv.substr(caret + 1), t);
        sv = sv.substr(0, caret);
        if (power == 0) throw InvalidInput("zero exponent in '" + t + "'");
      }
      const int i = parse_int(sv, t);
      if (i < 1) throw InvalidInput("bad generator index in '" + t + "'");
      letters.insert(letters.end(), std::abs(power), power > 0 ? i : -i);
    }
  }
  if (strands <= 0) {
    int m = 1;
    for (int l : letters) m = std::max(m, std::abs(l));
    strands = m + 1;
  }
  return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < w.letters().size(); ++k) {
    const int l = w.letters()[k];
    if (k) s += ' ';
    s += 's' + std::to_string(std::abs(l));
    if (l < 0) s += "^-1";
  }
  return s;
}

}  // namespace monodromy
