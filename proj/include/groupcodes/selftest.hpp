#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "groupcodes/code.hpp"

namespace groupcodes::selftest {

struct Options {
  std::uint64_t seed = 20240611;
  /// Also run the slower brute-force cross-checks.
  bool oracle = true;
  std::size_t randomized_sums = 120;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  double budget_seconds = 0.0;
};

inline constexpr int kCriterionCount = 8;

CriterionResult run_criterion(int id, const Options& options = {});
std::vector<CriterionResult> run_all(const Options& options = {});

/// Every distance-preserving bijection of A^n, found by backtracking over the
/// images of the points of A^n in index order. Each map is returned as an
/// image table over point indices (first coordinate most significant).
std::vector<std::vector<std::size_t>> brute_force_isometries(std::size_t q, std::size_t n);

/// Index of a word of A^n, first coordinate most significant.
std::size_t point_index(const Word& w, std::size_t q);
Word point_word(std::size_t index, std::size_t q, std::size_t n);

}  // namespace groupcodes::selftest
