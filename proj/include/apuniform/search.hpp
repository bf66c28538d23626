#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apuniform/grid.hpp"

namespace apu {

struct SearchResult {
  std::string space;  // "pm1" or "ternary"
  int n = 0;
  std::int64_t best_value = 0;
  /// Assignments on {1..n} attaining best_value, lexicographic by value sequence.
  std::vector<std::vector<int>> witnesses;
  std::uint64_t nodes_explored = 0;
  bool exhaustive = false;
};

/// Backtracks over four pairwise disjoint 4x4 permutation patterns, one per plane c,
/// keeping the designs that pass validate_design. max_results = 0 means unbounded.
std::vector<GridDesign> search_grid_designs(std::size_t max_results = 0,
                                            std::uint64_t* nodes_explored = nullptr);

/// Exact minimum of ap4_sum_z over f : {1..n} -> {-1, +1}; n <= 24.
SearchResult min_ap4_pm1(int n);

/// Exact minimum of ap4_sum_z over f : {1..n} -> {-1, 0, 1}; n <= 16.
SearchResult min_ap4_ternary(int n);

/// {"space": ..., "n": ..., "min": ..., "witnesses": [[...]], "exhaustive": ...,
///  "nodes_explored": ...}
std::string search_result_to_json(const SearchResult& result);

}  // namespace apu
