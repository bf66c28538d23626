#include "apuniform/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <json.hpp>
#include <limits>

#include "apuniform/apcount.hpp"
#include "apuniform/error.hpp"
#include "apuniform/parallel.hpp"

namespace apu {
namespace {

/// Progressions (x, d != 0) on {0..n-1} grouped by the coordinates they touch: for each j,
/// the other three coordinates of every progression through j.
class ProgressionIndex {
 public:
  explicit ProgressionIndex(int n) : through_(static_cast<std::size_t>(n)) {
    for (int x = 0; x < n; ++x) {
      for (int d = -(n - 1); d <= n - 1; ++d) {
        if (d == 0 || x + 3 * d < 0 || x + 3 * d >= n) continue;
        const std::array<int, 4> pts{x, x + d, x + 2 * d, x + 3 * d};
        for (int i = 0; i < 4; ++i) {
          std::array<int, 3> others{};
          for (int k = 0, o = 0; k < 4; ++k) {
            if (k != i) others[o++] = pts[k];
          }
          through_[pts[i]].push_back(others);
        }
      }
    }
  }

  /// Sum over progressions through j of the product of the other three values.
  std::int64_t partial(const std::vector<int>& f, int j) const noexcept {
    std::int64_t total = 0;
    for (const auto& o : through_[j]) total += f[o[0]] * f[o[1]] * f[o[2]];
    return total;
  }

 private:
  std::vector<std::vector<std::array<int, 3>>> through_;
};

std::int64_t full_sum(const std::vector<int>& f) {
  return ap4_sum_z(IntSignalZ(1, f));
}

struct PartitionBest {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<std::vector<int>> witnesses;
  std::uint64_t nodes = 0;

  void offer(std::int64_t value, const std::vector<int>& f) {
    ++nodes;
    if (value < best) {
      best = value;
      witnesses.clear();
    }
    if (value == best) witnesses.push_back(f);
  }
};

SearchResult merge(std::string space, int n, std::vector<PartitionBest>& parts) {
  SearchResult result;
  result.space = std::move(space);
  result.n = n;
  result.exhaustive = true;
  result.best_value = std::numeric_limits<std::int64_t>::max();
  for (const auto& p : parts) {
    result.nodes_explored += p.nodes;
    result.best_value = std::min(result.best_value, p.best);
  }
  for (auto& p : parts) {
    if (p.best != result.best_value) continue;
    result.witnesses.insert(result.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
  }
  std::sort(result.witnesses.begin(), result.witnesses.end());
  return result;
}

/// Free coordinates are the last `free` ones; the leading ones are fixed by the partition.
int partition_split(int n, int base_log2, int max_prefix) {
  return std::min(max_prefix, std::max(0, n - base_log2));
}

}  // namespace

std::vector<GridDesign> search_grid_designs(std::size_t max_results, std::uint64_t* nodes_explored) {
  // plane[a][b] = c: the cells of plane c form a permutation pattern, and the four
  // patterns partition the 4x4 board, i.e. plane is a Latin square.
  std::array<std::array<int, 4>, 4> plane{};
  std::vector<GridDesign> found;
  std::uint64_t nodes = 0;

  auto fits = [&](int a, int b, int c) {
    for (int k = 0; k < a; ++k) {
      if (plane[k][b] == c) return false;
    }
    for (int k = 0; k < b; ++k) {
      if (plane[a][k] == c) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, int cell) -> bool {
    ++nodes;
    if (cell == 16) {
      std::vector<GridPoint> pts;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) pts.push_back({a + 1, b + 1, plane[a][b]});
      GridDesign design(std::move(pts));
      if (validate_design(design).valid) {
        found.push_back(std::move(design));
        if (max_results != 0 && found.size() >= max_results) return true;
      }
      return false;
    }
    const int a = cell / 4;
    const int b = cell % 4;
    for (int c = 1; c <= 4; ++c) {
      if (!fits(a, b, c)) continue;
      plane[a][b] = c;
      if (self(self, cell + 1)) return true;
    }
    return false;
  };
  recurse(recurse, 0);
  if (nodes_explored != nullptr) *nodes_explored = nodes;
  return found;
}

SearchResult min_ap4_pm1(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
  if (n > 24) throw Error(Errc::TooLarge, "exhaustive +-1 search is limited to n <= 24");

  const ProgressionIndex index(n);
  const int fixed = partition_split(n, 12, 6);
  const int free = n - fixed;
  std::vector<PartitionBest> parts(std::size_t{1} << fixed);

  parallel_for(parts.size(), [&](std::size_t prefix) {
    // Coordinates 0..free-1 are walked in binary reflected Gray order; the rest hold
    // the prefix bits. Bit set means -1.
    std::vector<int> f(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < fixed; ++i) {
      if (prefix & (std::size_t{1} << i)) f[free + i] = -1;
    }
    std::int64_t value = full_sum(f);
    PartitionBest& best = parts[prefix];
    best.offer(value, f);
    const std::uint64_t steps = (std::uint64_t{1} << free) - 1;
    for (std::uint64_t k = 1; k <= steps; ++k) {
      const int j = std::countr_zero(k);
      // Each non-degenerate progression through j contains f_j once: flipping negates it.
      value -= 2 * f[j] * index.partial(f, j);
      f[j] = -f[j];
      best.offer(value, f);
    }
  });
  return merge("pm1", n, parts);
}

SearchResult min_ap4_ternary(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be positive");
  if (n > 16) throw Error(Errc::TooLarge, "exhaustive ternary search is limited to n <= 16");

  const ProgressionIndex index(n);
  const int fixed = std::min(3, std::max(0, n - 8));
  const int free = n - fixed;
  std::size_t partitions = 1;
  for (int i = 0; i < fixed; ++i) partitions *= 3;
  std::vector<PartitionBest> parts(partitions);

  parallel_for(parts.size(), [&](std::size_t prefix) {
    std::vector<int> f(static_cast<std::size_t>(n), -1);
    std::size_t code = prefix;
    for (int i = 0; i < fixed; ++i) {
      f[free + i] = static_cast<int>(code % 3) - 1;
      code /= 3;
    }
    std::int64_t value = full_sum(f);
    PartitionBest& best = parts[prefix];
    best.offer(value, f);
    if (free == 0) return;

    // Loopless reflected mixed-radix Gray code (Knuth, TAOCP 7.2.1.1, Algorithm H):
    // every step moves one coordinate by +-1 between -1, 0 and 1.
    std::vector<int> focus(static_cast<std::size_t>(free) + 1);
    std::vector<int> dir(static_cast<std::size_t>(free), 1);
    std::vector<int> digit(static_cast<std::size_t>(free), 0);
    for (int i = 0; i <= free; ++i) focus[i] = i;
    for (;;) {
      const int j = focus[0];
      focus[0] = 0;
      if (j == free) break;
      digit[j] += dir[j];
      const int next = digit[j] - 1;
      // The d = 0 term f_j^4 changes too, unlike in the +-1 sweep.
      value += static_cast<std::int64_t>(next - f[j]) * index.partial(f, j) +
               (next != 0) - (f[j] != 0);
      f[j] = next;
      best.offer(value, f);
      if (digit[j] == 0 || digit[j] == 2) {
        dir[j] = -dir[j];
        focus[j] = focus[j + 1];
        focus[j + 1] = j + 1;
      }
    }
  });
  return merge("ternary", n, parts);
}

std::string search_result_to_json(const SearchResult& result) {
  nlohmann::ordered_json doc;
  doc["space"] = result.space;
  doc["n"] = result.n;
  doc["min"] = result.best_value;
  doc["witnesses"] = result.witnesses;
  doc["exhaustive"] = result.exhaustive;
  doc["nodes_explored"] = result.nodes_explored;
  return doc.dump(2) + "\n";
}

}  // namespace apu
