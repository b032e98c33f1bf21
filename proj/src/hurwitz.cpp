#include "monodromy/hurwitz.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

BraidWord reduced(const BraidWord& w) {
  std::vector<int> out;
  out.reserve(w.length());
  for (int l : w.letters()) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(w.strands(), std::move(out));
}

void check_pair_index(const Factorization& f, int i, const char* what) {
  if (i < 1 || i + 1 > static_cast<int>(f.factors.size()))
    throw InvalidInput(std::string(what) + " index " + std::to_string(i) + " out of range for " +
                       std::to_string(f.factors.size()) + " factors");
}

BraidWord parse_word_arg(std::string_view text, int strands) {
  return parse_braid(text, strands);
}

}  // namespace

void Factorization::validate() const {
  for (const auto& w : factors)
    if (w.strands() != strands) throw InvalidInput("factor strand count differs from factorization");
}

Factorization apply_move(const Factorization& f, const Move& m) {
  Factorization g = f;
  auto& v = g.factors;
  switch (m.kind) {
    case Move::Kind::Slide: {
      check_pair_index(f, m.index, "slide");
      const BraidWord a = v[m.index - 1], b = v[m.index];
      v[m.index - 1] = reduced(conjugate(b, a));
      v[m.index] = a;
      break;
    }
    case Move::Kind::SlideInv: {
      check_pair_index(f, m.index, "slide-");
      const BraidWord a = v[m.index - 1], b = v[m.index];
      v[m.index - 1] = b;
      v[m.index] = reduced(conjugate(a, b.inverse()));
      break;
    }
    case Move::Kind::ConjAll:
      if (m.word.strands() != f.strands) throw InvalidInput("conjugator strand count mismatch");
      for (auto& w : v) w = reduced(conjugate(w, m.word));
      break;
    case Move::Kind::Create: {
      if (m.index < 1 || m.index > static_cast<int>(v.size()) + 1)
        throw InvalidInput("create index " + std::to_string(m.index) + " out of range");
      if (m.word.strands() != f.strands) throw InvalidInput("created pair strand count mismatch");
      v.insert(v.begin() + (m.index - 1), {m.word, m.word.inverse()});
      break;
    }
    case Move::Kind::Cancel:
      check_pair_index(f, m.index, "cancel");
      if (!is_trivial(v[m.index - 1] * v[m.index]))
        throw InvalidInput("cancel at " + std::to_string(m.index) + ": factors are not inverse");
      v.erase(v.begin() + (m.index - 1), v.begin() + (m.index + 1));
      break;
  }
  return g;
}

Factorization apply_script(const Factorization& f, const std::vector<Move>& moves) {
  Factorization g = f;
  for (const auto& m : moves) g = apply_move(g, m);
  return g;
}

BraidWord product(const Factorization& f) {
  f.validate();
  std::vector<int> letters;
  for (const auto& w : f.factors) letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  return BraidWord(f.strands, std::move(letters));
}

bool factorwise_equal(const Factorization& f1, const Factorization& f2) {
  if (f1.strands != f2.strands || f1.factors.size() != f2.factors.size()) return false;
  for (std::size_t k = 0; k < f1.factors.size(); ++k)
    if (!braids_equal(f1.factors[k], f2.factors[k])) return false;
  return true;
}

bool verify_script(const Factorization& start, const std::vector<Move>& moves,
                   const Factorization& end) {
  return factorwise_equal(apply_script(start, moves), end);
}

bool is_admissible_pair(const PunctureLayout& layout, const StructuredTwist& beta) {
  validate_arc(layout, beta.arc);
  if (beta.exponent != 2 && beta.exponent != -2) return false;
  return liftability_class(layout, beta.arc) == 2;
}

bool centralizes(const BraidWord& g, const BraidWord& w) { return braids_equal(g * w, w * g); }

std::string to_string(const Move& m) {
  switch (m.kind) {
    case Move::Kind::Slide: return "slide " + std::to_string(m.index);
    case Move::Kind::SlideInv: return "slide- " + std::to_string(m.index);
    case Move::Kind::ConjAll: return "conj " + to_string(m.word);
    case Move::Kind::Create: return "create " + std::to_string(m.index) + " " + to_string(m.word);
    case Move::Kind::Cancel: return "cancel " + std::to_string(m.index);
  }
  return "?";
}

Move parse_move(std::string_view line, int strands) {
  std::istringstream in{std::string(line)};
  std::string op;
  in >> op;
  auto read_index = [&]() {
    int i = 0;
    if (!(in >> i)) throw InvalidInput("move '" + std::string(line) + "' needs an index");
    if (i < 1) throw InvalidInput("move positions start at 1 in '" + std::string(line) + "'");
    return i;
  };
  auto rest = [&]() {
    std::string r;
    std::getline(in, r);
    return r;
  };
  Move m = Move::cancel(0);
  if (op == "slide") {
    m = Move::slide(read_index());
  } else if (op == "slide-") {
    m = Move::slide_inv(read_index());
  } else if (op == "conj") {
    m = Move::conj_all(parse_word_arg(rest(), strands));
  } else if (op == "create") {
    const int i = read_index();
    m = Move::create(i, parse_word_arg(rest(), strands));
  } else if (op == "cancel") {
    m = Move::cancel(read_index());
  } else {
    throw InvalidInput("unknown move '" + op + "'");
  }
  std::string junk;
  if (m.kind != Move::Kind::ConjAll && m.kind != Move::Kind::Create && (in >> junk))
    throw InvalidInput("trailing text in move '" + std::string(line) + "'");
  return m;
}

std::string script_to_text(const std::vector<Move>& moves) {
  std::string out;
  for (const auto& m : moves) out += to_string(m) + "\n";
  return out;
}

std::vector<Move> parse_script(std::string_view text, int strands) {
  std::istringstream in{std::string(text)};
  std::vector<Move> moves;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    moves.push_back(parse_move(line, strands));
  }
  return moves;
}

std::string to_text(const Factorization& f) {
  std::string out = "strands " + std::to_string(f.strands) + "\n";
  for (const auto& w : f.factors) out += to_string(w) + "\n";
  return out;
}

Factorization parse_factorization(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Factorization f;
  bool header = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!header) {
      std::istringstream h(line);
      std::string tag;
      if (!(h >> tag >> f.strands) || tag != "strands" || f.strands < 2)
        throw InvalidInput("factorization must start with 'strands <n>'");
      header = true;
      continue;
    }
    f.factors.push_back(parse_braid(line, f.strands));
  }
  if (!header) throw InvalidInput("empty factorization");
  return f;
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoPath: return "no path in explored graph";
    case SearchStatus::BoundExhausted: return "bound exhausted";
    case SearchStatus::ProductMismatch: return "product mismatch";
  }
  return "?";
}

namespace {

using Key = std::vector<FreeAutomorphism>;

Key key_of(const Factorization& f, std::size_t budget = letter_budget()) {
  Key k;
  k.reserve(f.factors.size());
  for (const auto& w : f.factors) k.push_back(artin_action(w, budget));
  return k;
}

std::optional<Key> bounded_key(const Factorization& f, std::size_t budget) {
  try {
    return key_of(f, budget);
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

std::size_t hash_of(const Key& k) {
  std::size_t h = 1469598103934665603ULL;
  for (const auto& a : k) h = (h ^ a.hash()) * 1099511628211ULL;
  return h;
}

struct Node {
  Factorization f;
  int parent;
  int move;
  int depth;
};

}  // namespace

SearchResult orbit_search(const Factorization& from, const Factorization& to,
                          const SearchOptions& options) {
  from.validate();
  to.validate();
  if (from.strands != to.strands) throw InvalidInput("factorizations have different strand counts");
  const bool slides_only = options.conjugators.empty();
  if (slides_only) {
    if (from.factors.size() != to.factors.size()) return {SearchStatus::NoPath, {}, 0, 0};
    if (!braids_equal(product(from), product(to))) return {SearchStatus::ProductMismatch, {}, 0, 0};
  }
  for (const auto& g : options.conjugators)
    if (g.strands() != from.strands) throw InvalidInput("conjugator strand count mismatch");

  const Key target = key_of(to);
  std::vector<Move> alphabet;
  const int n = static_cast<int>(from.factors.size());
  if (options.slides) {
    for (int i = 1; i < n; ++i) alphabet.push_back(Move::slide(i));
    for (int i = 1; i < n; ++i) alphabet.push_back(Move::slide_inv(i));
  }
  for (const auto& g : options.conjugators) alphabet.push_back(Move::conj_all(g));

  std::vector<Node> nodes;
  std::unordered_multimap<std::size_t, std::pair<int, Key>> seen;
  auto script_to = [&](int id) {
    std::vector<Move> s;
    for (; nodes[id].parent >= 0; id = nodes[id].parent) s.push_back(alphabet[nodes[id].move]);
    return std::vector<Move>(s.rbegin(), s.rend());
  };
  auto insert = [&](Factorization f, int parent, int move, int depth, Key key) {
    const std::size_t h = hash_of(key);
    auto range = seen.equal_range(h);
    for (auto it = range.first; it != range.second; ++it)
      if (it->second.second == key) return -1;
    nodes.push_back({std::move(f), parent, move, depth});
    const int id = static_cast<int>(nodes.size()) - 1;
    seen.emplace(h, std::make_pair(id, std::move(key)));
    return id;
  };

  Key k0 = key_of(from);
  if (k0 == target) return {SearchStatus::Found, {}, 1, 0};
  insert(from, -1, -1, 0, std::move(k0));

  std::deque<int> frontier{0};
  bool cut = false;
  int max_depth = 0;
  while (!frontier.empty()) {
    const int id = frontier.front();
    frontier.pop_front();
    if (nodes[id].depth >= options.depth_bound) {
      cut = true;
      continue;
    }
    for (int mv = 0; mv < static_cast<int>(alphabet.size()); ++mv) {
      Factorization g = apply_move(nodes[id].f, alphabet[mv]);
      std::optional<Key> k = bounded_key(g, options.letter_bound);
      if (!k) {
        cut = true;
        continue;
      }
      const bool hit = *k == target;
      const int child = insert(std::move(g), id, mv, nodes[id].depth + 1, std::move(*k));
      if (child < 0) continue;
      max_depth = std::max(max_depth, nodes[child].depth);
      if (hit) return {SearchStatus::Found, script_to(child), nodes.size(), nodes[child].depth};
      if (nodes.size() >= options.node_bound)
        return {SearchStatus::BoundExhausted, {}, nodes.size(), max_depth};
      frontier.push_back(child);
    }
  }
  return {cut ? SearchStatus::BoundExhausted : SearchStatus::NoPath, {}, nodes.size(), max_depth};
}

Factorization cusp_cluster_model() {
  return {4,
          {parse_braid("s2^3", 4), parse_braid("s1 s3 s2 s3^-1 s1^-1", 4), parse_braid("s1^3", 4),
           parse_braid("s3^3", 4)}};
}

Factorization tangent_cluster_model() {
  const BraidWord x = parse_braid("s1^-1 s2 s1", 4), y = parse_braid("s2^-1 s3 s2", 4);
  return {4, {x, y, x, y}};
}

namespace {

Factorization conj_all(const Factorization& f, const BraidWord& g) {
  return apply_move(f, Move::conj_all(g));
}

std::vector<Move> script(std::initializer_list<const char*> lines) {
  std::vector<Move> out;
  for (const char* l : lines) out.push_back(parse_move(l, 4));
  return out;
}

}  // namespace

std::vector<BuiltinScript> builtin_scripts() {
  const BraidWord delta4 = parse_braid("s1 s2 s3 s1 s2 s1", 4);
  const Factorization cusp = cusp_cluster_model();
  const Factorization tangent = tangent_cluster_model();
  std::vector<BuiltinScript> out;
  out.push_back({"cusp-cluster/half-twist-conjugate", cusp,
                 script({"slide- 2", "slide- 1", "slide- 2", "slide- 3", "slide 2", "slide 2"}),
                 conj_all(cusp, parse_braid("s1^-1 s2 s1", 4))});
  out.push_back({"cusp-cluster/delta-conjugate", cusp, script({"slide 3"}), conj_all(cusp, delta4)});
  out.push_back({"tangent-cluster/delta-conjugate", tangent,
                 script({"conj s1^2", "slide 1", "slide 3"}), conj_all(tangent, delta4)});
  // sigma_1^2 is carried to the right end, conjugating every factor, then
  // sigma_1^-2 follows it and the pair cancels.
  out.push_back({"tangent-cluster/stabilized-conjugation", tangent,
                 script({"create 1 s1^-2", "slide 2", "slide 3", "slide 4", "slide 5", "slide- 1",
                         "slide- 2", "slide- 3", "slide- 4", "cancel 5"}),
                 conj_all(tangent, parse_braid("s1^2", 4))});
  return out;
}

}  // namespace monodromy
