#include "monodromy/bmf.hpp"

#include <cstdlib>
#include <sstream>

#include "monodromy/errors.hpp"

namespace monodromy {

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::Tangency: return "tangency";
    case FactorKind::Cusp: return "cusp";
    case FactorKind::NodePositive: return "node+";
    case FactorKind::NodeNegative: return "node-";
  }
  return "?";
}

FactorKind parse_factor_kind(std::string_view s) {
  for (FactorKind k : {FactorKind::Tangency, FactorKind::Cusp, FactorKind::NodePositive,
                       FactorKind::NodeNegative})
    if (s == to_string(k)) return k;
  throw InvalidInput("unknown factor kind '" + std::string(s) + "'");
}

int kind_exponent(FactorKind k) {
  switch (k) {
    case FactorKind::Tangency: return 1;
    case FactorKind::Cusp: return 3;
    case FactorKind::NodePositive: return 2;
    case FactorKind::NodeNegative: return -2;
  }
  return 0;
}

namespace {

int sign(long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

Factor twist(const PunctureLayout& L, const ArcId& arc, FactorKind kind) {
  return {half_twist(L, arc).power(kind_exponent(kind)), {kind, arc}};
}

Factor node(const PunctureLayout& L, const ArcId& arc, int sgn) {
  return twist(L, arc, sgn > 0 ? FactorKind::NodePositive : FactorKind::NodeNegative);
}

// Tangency on `arc` conjugated by the full twist on `around`.
Factor twisted_tangency(const PunctureLayout& L, const ArcId& arc, const ArcId& around) {
  return {conjugate(half_twist_word(L, arc), half_twist(L, around).power(2)),
          {FactorKind::Tangency, arc}};
}

std::vector<Factor> tangency_cluster(const PunctureLayout& L, const ArcId& first,
                                     const ArcId& second, const ArcId& around) {
  const Factor x = twist(L, first, FactorKind::Tangency);
  const Factor y = twisted_tangency(L, second, around);
  return {x, y, x, y};
}

std::vector<Factor> cusp_cluster(const PunctureLayout& L, int i, int j) {
  return {twist(L, ArcId::u(i, j), FactorKind::Cusp), twist(L, ArcId::s(i, j), FactorKind::Tangency),
          twist(L, ArcId::u_prime(i, j), FactorKind::Cusp),
          twist(L, ArcId::u_double(i, j), FactorKind::Cusp)};
}

class Builder {
 public:
  explicit Builder(BMFactorization& f) : f_(f) {}

  void block(const std::string& name, const std::vector<Factor>& fs) {
    if (fs.empty()) return;
    const std::size_t begin = f_.factors.size();
    f_.factors.insert(f_.factors.end(), fs.begin(), fs.end());
    f_.blocks.push_back({name, begin, f_.factors.size()});
  }

 private:
  BMFactorization& f_;
};

}  // namespace

std::vector<Factor> beta_f(const PunctureLayout& L, int i) {
  return tangency_cluster(L, ArcId::a(1, i), ArcId::c(1, i), ArcId::p(1));
}

std::vector<Factor> beta_g(const PunctureLayout& L, int j) {
  return tangency_cluster(L, ArcId::b(1, j), ArcId::d(1, j), ArcId::q(1));
}

std::vector<Factor> beta_fg(const PunctureLayout& L, int j) { return cusp_cluster(L, 1, j); }

std::vector<Factor> beta_gf(const PunctureLayout& L, int i) { return cusp_cluster(L, i, 1); }

BMFactorization build_bmf(const SurfaceParams& p) {
  p.validate();
  const PunctureLayout L(p);
  BMFactorization f{p, {}, {}};
  Builder out(f);

  const long nf = 2L * p.b - p.d, np = 2L * p.a - p.c, nq = 2L * p.c - p.a, ng = 2L * p.d - p.b;

  for (int r = 0; r < 2 * p.a; ++r) {
    for (int i = 2; i <= 2 * p.b; ++i) out.block("beta_f," + std::to_string(i), beta_f(L, i));
    out.block("nodes_f", std::vector<Factor>(std::labs(nf), node(L, ArcId::p(1), sign(nf))));
    for (int j = 2 * p.d; j >= 1; --j) out.block("beta_fg," + std::to_string(j), beta_fg(L, j));
  }
  for (long r = 0; r < std::labs(np); ++r) {
    std::vector<Factor> round;
    for (int i = 1; i <= 2 * p.b; ++i) round.push_back(node(L, ArcId::p(i), sign(np)));
    out.block("p_round", round);
  }
  for (long r = 0; r < std::labs(nq); ++r) {
    std::vector<Factor> round;
    for (int j = 1; j <= 2 * p.d; ++j) round.push_back(node(L, ArcId::q(j), sign(nq)));
    out.block("q_round", round);
  }
  for (int r = 0; r < 2 * p.c; ++r) {
    for (int j = 2; j <= 2 * p.d; ++j) out.block("beta_g," + std::to_string(j), beta_g(L, j));
    out.block("nodes_g", std::vector<Factor>(std::labs(ng), node(L, ArcId::q(1), sign(ng))));
    for (int i = 2 * p.b; i >= 1; --i) out.block("beta_gf," + std::to_string(i), beta_gf(L, i));
  }
  return f;
}

BraidWord product(const std::vector<Factor>& factors, int strands) {
  std::vector<int> letters;
  for (const auto& x : factors) {
    if (x.word.strands() != strands) throw InvalidInput("strand count mismatch");
    letters.insert(letters.end(), x.word.letters().begin(), x.word.letters().end());
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord product(const BMFactorization& f) { return product(f.factors, f.params.strands()); }

CountsReport formula_counts(const SurfaceParams& p) {
  const long a = p.a, b = p.b, c = p.c, d = p.d;
  CountsReport r;
  r.m = 4 * (a * d + b * c);
  r.k = 12 * (a * d + b * c);
  r.nu = 4 * (2 * a * b + 2 * c * d - a * d - b * c);
  r.t_f = 4 * (2 * a * b - a);
  r.t_g = 4 * (2 * c * d - c);
  r.t = 2 * r.t_f + 2 * r.t_g + r.m;
  r.genus_R = 1 + 16 * (a + c) * (b + d) - 4 * (a + b + c + d) - r.k - r.nu;
  r.chi = 1 + (a - 1) * (b - 1) + (c - 1) * (d - 1) + (a + c - 1) * (b + d - 1);
  r.K2 = 8 * (a + c - 2) * (b + d - 2);
  r.weighted_p = 8 * a * b - 2 * (a * d + b * c);
  r.weighted_q = 8 * c * d - 2 * (a * d + b * c);
  // Each node block carries |count| factors of the count's sign.
  const long blocks[4][2] = {{2 * a, 2 * b - d}, {2 * b, 2 * a - c}, {2 * d, 2 * c - a}, {2 * c, 2 * d - b}};
  for (const auto& blk : blocks) {
    if (blk[1] > 0) r.nu_plus += blk[0] * blk[1];
    if (blk[1] < 0) r.nu_minus -= blk[0] * blk[1];
  }
  r.num_factors = r.t + r.k + r.nu_plus + r.nu_minus;
  r.exponent_sum = 8 * (a + c) * (4 * (b + d) - 1);
  return r;
}

CountsReport scan_counts(const BMFactorization& f) {
  const SurfaceParams& p = f.params;
  const long a = p.a, b = p.b, c = p.c, d = p.d;
  CountsReport r;
  long tangent_f = 0, tangent_g = 0;
  for (const auto& x : f.factors) {
    const ArcFamily fam = x.tag.arc.family;
    switch (x.tag.kind) {
      case FactorKind::Tangency:
        ++r.t;
        if (fam == ArcFamily::s) ++r.m;
        if (fam == ArcFamily::a || fam == ArcFamily::c) ++tangent_f;
        if (fam == ArcFamily::b || fam == ArcFamily::d) ++tangent_g;
        break;
      case FactorKind::Cusp: ++r.k; break;
      case FactorKind::NodePositive:
      case FactorKind::NodeNegative: {
        const int s = x.tag.kind == FactorKind::NodePositive ? 1 : -1;
        (s > 0 ? r.nu_plus : r.nu_minus) += 1;
        r.nu += s;
        if (fam == ArcFamily::p) r.weighted_p += s;
        if (fam == ArcFamily::q) r.weighted_q += s;
        break;
      }
    }
    r.exponent_sum += monodromy::exponent_sum(x.word);
  }
  // Each vertical tangent of the smooth curves regenerates into two tangencies.
  r.t_f = tangent_f / 2;
  r.t_g = tangent_g / 2;
  r.genus_R = 1 + 16 * (a + c) * (b + d) - 4 * (a + b + c + d) - r.k - r.nu;
  r.chi = 1 + (a - 1) * (b - 1) + (c - 1) * (d - 1) + (a + c - 1) * (b + d - 1);
  r.K2 = 8 * (a + c - 2) * (b + d - 2);
  r.num_factors = static_cast<long>(f.factors.size());
  return r;
}

CountsReport counts(const BMFactorization& f) {
  const CountsReport scan = scan_counts(f);
  const CountsReport formula = formula_counts(f.params);
  if (!(scan == formula)) throw ConsistencyError("tag scan disagrees with closed formulas");
  if (formula.exponent_sum != formula.t + 3 * formula.k + 2 * formula.nu)
    throw ConsistencyError("exponent sum identity failed");
  return formula;
}

std::string to_text(const CountsReport& c) {
  std::ostringstream o;
  o << "m=" << c.m << "\nk=" << c.k << "\nnu=" << c.nu << "\nnu_plus=" << c.nu_plus
    << "\nnu_minus=" << c.nu_minus << "\nt=" << c.t << "\nt_f=" << c.t_f << "\nt_g=" << c.t_g
    << "\ngenus_R=" << c.genus_R << "\nchi=" << c.chi << "\nK2=" << c.K2
    << "\nweighted_p=" << c.weighted_p << "\nweighted_q=" << c.weighted_q
    << "\nnum_factors=" << c.num_factors << "\nexponent_sum=" << c.exponent_sum << "\n";
  return o.str();
}

std::vector<Generator> monodromy_group_generators(const SurfaceParams& p) {
  p.validate();
  if (p.case_one()) throw InvalidInput("exceptional case (I): c = 2a and d = 2b");
  if (p.case_two()) throw InvalidInput("exceptional case (II): a = 2c and b = 2d");
  const PunctureLayout L(p);
  std::vector<Generator> g;
  auto add = [&](const ArcId& arc, int power) {
    g.push_back({arc, power, half_twist(L, arc).power(power)});
  };
  for (int i = 1; i < 2 * p.b; ++i) add(ArcId::a(i, i + 1), 1);
  for (int i = 1; i < 2 * p.b; ++i) add(ArcId::c(i, i + 1), 1);
  for (int j = 1; j < 2 * p.d; ++j) add(ArcId::b(j, j + 1), 1);
  for (int j = 1; j < 2 * p.d; ++j) add(ArcId::d(j, j + 1), 1);
  add(ArcId::p(2 * p.b), 2);
  add(ArcId::q(2 * p.d), 2);
  add(ArcId::s(1, 1), 1);
  add(ArcId::u_prime(1, 1), 3);
  add(ArcId::u_double(1, 1), 3);
  return g;
}

BraidWord pq_conjugator(const PunctureLayout& L, Side side, int i) {
  if (side == Side::B)
    return half_twist_word(L, ArcId::a(i, i + 1)) * half_twist_word(L, ArcId::c(i, i + 1)).inverse();
  return half_twist_word(L, ArcId::b(i, i + 1)).inverse() * half_twist_word(L, ArcId::d(i, i + 1));
}

BraidWord embed_cusp_model(const PunctureLayout& L, const BraidWord& local) {
  if (local.strands() != 4) throw InvalidInput("cusp model lives in Br_4");
  const int shift = 4 * L.d() - 2;
  std::vector<int> letters;
  for (int l : local.letters()) letters.push_back(l > 0 ? l + shift : l - shift);
  const BraidWord h = BraidWord::gen(L.size(), 4 * L.d(), -1);
  return conjugate(BraidWord(L.size(), std::move(letters)), h);
}

std::string to_text(const BMFactorization& f) {
  std::ostringstream o;
  o << "bmf a=" << f.params.a << " b=" << f.params.b << " c=" << f.params.c << " d=" << f.params.d
    << "\n";
  std::size_t next_block = 0;
  for (std::size_t k = 0; k < f.factors.size(); ++k) {
    if (next_block < f.blocks.size() && f.blocks[next_block].begin == k)
      o << "# begin " << f.blocks[next_block].name << "\n";
    const Factor& x = f.factors[k];
    o << to_string(x.tag.kind) << '|' << to_string(x.tag.arc) << '|' << to_string(x.word) << "\n";
    if (next_block < f.blocks.size() && f.blocks[next_block].end == k + 1) {
      o << "# end\n";
      ++next_block;
    }
  }
  return o.str();
}

BMFactorization parse_bmf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("empty factorization file");
  BMFactorization f;
  {
    std::istringstream h(line);
    std::string tag;
    h >> tag;
    if (tag != "bmf") throw InvalidInput("missing 'bmf' header");
    int* slots[4] = {&f.params.a, &f.params.b, &f.params.c, &f.params.d};
    const char names[4] = {'a', 'b', 'c', 'd'};
    for (int k = 0; k < 4; ++k) {
      std::string kv;
      if (!(h >> kv) || kv.size() < 3 || kv[0] != names[k] || kv[1] != '=')
        throw InvalidInput("bad header '" + line + "'");
      try {
        *slots[k] = std::stoi(kv.substr(2));
      } catch (const std::exception&) {
        throw InvalidInput("bad header '" + line + "'");
      }
    }
    f.params.validate();
  }
  const int n = f.params.strands();
  const PunctureLayout L(f.params);
  bool open = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# begin ", 0) == 0) {
      if (open) throw InvalidInput("nested block");
      f.blocks.push_back({line.substr(8), f.factors.size(), f.factors.size()});
      open = true;
      continue;
    }
    if (line == "# end") {
      if (!open) throw InvalidInput("'# end' without '# begin'");
      f.blocks.back().end = f.factors.size();
      open = false;
      continue;
    }
    if (line[0] == '#') continue;
    const auto bar1 = line.find('|');
    const auto bar2 = bar1 == std::string::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string::npos) throw InvalidInput("bad factor line '" + line + "'");
    const FactorKind kind = parse_factor_kind(line.substr(0, bar1));
    const ArcId arc = parse_arc(line.substr(bar1 + 1, bar2 - bar1 - 1));
    validate_arc(L, arc);
    f.factors.push_back({parse_braid(line.substr(bar2 + 1), n), {kind, arc}});
  }
  if (open) throw InvalidInput("unterminated block");
  return f;
}

}  // namespace monodromy
