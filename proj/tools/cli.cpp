#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monodromy/acceptance.hpp"
#include "monodromy/bmf.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/hurwitz.hpp"
#include "monodromy/puncture.hpp"
#include "monodromy/triple_cover.hpp"

using namespace monodromy;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kResource = 3 };

SurfaceParams params_from(const std::vector<int>& v, std::size_t offset = 0) {
  SurfaceParams p{v[offset], v[offset + 1], v[offset + 2], v[offset + 3]};
  p.validate();
  return p;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_report(const std::vector<int>& v) {
  const SurfaceParams p = params_from(v);
  std::cout << to_text(counts(build_bmf(p)));
  std::cout << "exceptional=" << (p.exceptional() ? 1 : 0) << "\n";
  return kOk;
}

int run_factorization(const std::vector<int>& v, const std::string& format) {
  const BMFactorization f = build_bmf(params_from(v));
  if (format == "text") {
    std::cout << to_text(f);
  } else {
    Factorization plain{f.params.strands(), {}};
    for (const auto& x : f.factors) plain.factors.push_back(x.word);
    std::cout << to_text(plain);
  }
  return kOk;
}

int run_verify(std::uint64_t seed) {
  bool all = true;
  run_acceptance(seed, [&](const CriterionResult& r) {
    std::cout << to_string(r) << std::endl;
    all = all && r.pass;
  });
  return all ? kOk : kFailed;
}

int run_compare(const std::vector<int>& v, const std::string& expect) {
  const Comparison c = compare_surfaces(params_from(v), params_from(v, 4));
  std::cout << to_string(c) << "\n";
  if (!expect.empty() && to_string(c.verdict) != expect) return kFailed;
  return kOk;
}

int run_orbit_search(const std::string& file1, const std::string& file2, int depth,
                     std::size_t nodes, const std::vector<std::string>& conj) {
  const Factorization from = parse_factorization(read_file(file1));
  const Factorization to = parse_factorization(read_file(file2));
  SearchOptions opt;
  opt.depth_bound = depth;
  opt.node_bound = nodes;
  for (const auto& g : conj) opt.conjugators.push_back(parse_braid(g, from.strands));
  const SearchResult r = orbit_search(from, to, opt);
  std::cerr << to_string(r.status) << " nodes=" << r.nodes << " depth=" << r.depth << "\n";
  if (r.status == SearchStatus::Found) {
    std::cout << script_to_text(r.script);
    return kOk;
  }
  std::cout << "NONE\n";
  return r.status == SearchStatus::BoundExhausted ? kResource : kFailed;
}

int run_lift_check(const std::string& arc_text, int power, int b, int d) {
  const PunctureLayout L(b, d);
  const ArcId arc = parse_arc(arc_text);
  validate_arc(L, arc);
  if (power == 0) throw InvalidInput("power must be nonzero");
  const int cls = liftability_class(L, arc);
  std::cout << "class=" << cls << "\n";
  std::cout << "case=" << to_string(triple_cover_class(L, arc)) << "\n";
  std::cout << "lifts=" << (power % cls == 0 ? "yes" : "no") << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid monodromy factorizations and their stable-equivalence invariants"};
  app.require_subcommand(1);
  std::uint64_t seed = kDefaultSeed;
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  std::vector<int> params;
  auto* report = app.add_subcommand("report", "Print the counts of the factorization");
  report->add_option("params", params, "a b c d")->expected(4)->required();

  std::string format = "text";
  auto* fact = app.add_subcommand("factorization", "Print the factorization");
  fact->add_option("params", params, "a b c d")->expected(4)->required();
  fact->add_option("--format", format, "text: tagged blocks; words: one braid per line")
      ->check(CLI::IsMember({"text", "words"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify-paper", "Run the acceptance suite");
  verify->add_option("--seed", seed, "Seed for randomized checks");

  std::string expect;
  auto* compare = app.add_subcommand("compare", "Compare two parameter tuples");
  compare->add_option("params", params, "a b c d a' b' c' d'")->expected(8)->required();
  compare->add_option("--expect", expect, "Exit 1 unless the verdict matches")
      ->check(CLI::IsMember({"Distinguished", "NotDistinguished", "Inconclusive"}));

  std::string file1, file2;
  int depth = 8;
  std::size_t nodes = 200000;
  std::vector<std::string> conj;
  auto* search = app.add_subcommand("orbit-search", "Search for a move script between factorizations");
  search->add_option("file1", file1)->required();
  search->add_option("file2", file2)->required();
  search->add_option("--depth", depth)->capture_default_str();
  search->add_option("--nodes", nodes)->capture_default_str();
  search->add_option("--conj", conj, "Braid word allowed as a simultaneous conjugator");

  std::string arc;
  int power = 1, lb = 3, ld = 3;
  auto* lift = app.add_subcommand("lift-check", "Liftability class and triple-cover case of an arc");
  lift->add_option("arc", arc, "e.g. p3, a[1,2], s[1,1]")->required();
  lift->add_option("power", power)->required();
  lift->add_option("--b", lb)->capture_default_str();
  lift->add_option("--d", ld)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*report) return run_report(params);
    if (*fact) return run_factorization(params, format);
    if (*verify) return run_verify(seed);
    if (*compare) return run_compare(params, expect);
    if (*search) return run_orbit_search(file1, file2, depth, nodes, conj);
    if (*lift) return run_lift_check(arc, power, lb, ld);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
