#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace monodromy {

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  std::string detail;  // counts or the first failure
  double seconds;
};

// "PASS  3 tangent-cluster product and chain (0.002 s) detail"
std::string to_string(const CriterionResult& r);

// Runs the eleven acceptance checks in order. `seed` drives the random
// polarization pairs; `on_result` is called as each check finishes.
std::vector<CriterionResult> run_acceptance(
    std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result = {});

inline constexpr std::uint64_t kDefaultSeed = 20240611;

}  // namespace monodromy
