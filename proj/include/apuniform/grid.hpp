#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apuniform/signal.hpp"

namespace apu {

/// Point (a, b, c) of the grid {1,2,3,4}^3.
using GridPoint = std::array<int, 3>;

inline constexpr int kGridSide = 4;
inline constexpr int kGridCells = kGridSide * kGridSide * kGridSide;

/// Row-major index (a-1)*16 + (b-1)*4 + (c-1); throws Error{OutOfDomain}.
int grid_index(const GridPoint& p);
GridPoint grid_point(int index);

/// A set of grid points, kept sorted and unique.
class GridDesign {
 public:
  GridDesign() = default;
  explicit GridDesign(std::vector<GridPoint> points);

  const std::vector<GridPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(const GridPoint& p) const noexcept;

  /// Copy with `from` swapped for `to`.
  GridDesign replaced(const GridPoint& from, const GridPoint& to) const;

  /// Triples written as digit strings, e.g. "113".
  std::vector<std::string> to_strings() const;

  friend bool operator==(const GridDesign&, const GridDesign&) = default;
  friend auto operator<=>(const GridDesign&, const GridDesign&) = default;

 private:
  std::vector<GridPoint> points_;
};

enum class LineKind { AxisParallel, PlaneDiagonal, MainDiagonal };

const char* to_string(LineKind kind) noexcept;

/// Four collinear grid points, listed from one end to the other.
struct GridLine {
  std::array<GridPoint, 4> points;
  LineKind kind;
};

/// The sixteen triples of the construction: 113, 121, ..., 442.
GridDesign paper_design();

/// All 76 four-point lines of the grid, each once.
std::vector<GridLine> enumerate_lines();

struct DesignValidation {
  bool valid = false;
  /// Non-main-diagonal lines that miss the design or meet it more than once.
  std::vector<GridLine> violations;
};

DesignValidation validate_design(const GridDesign& design);

/// g on the grid, indexed by grid_index: -1 on design points, +1 elsewhere.
using GridFunction = std::array<int, kGridCells>;

/// Throws Error{InvalidDesign} when the design fails validate_design.
GridFunction grid_g(const GridDesign& design);

/// Exact sum over x in the grid and d in Z^3 of g(x)g(x+d)g(x+2d)g(x+3d), g zero off the grid.
std::int64_t grid_ap4_sum(const GridFunction& g);

/// a + 8b + 64c; throws Error{OutOfDomain} off the grid.
std::int64_t phi(const GridPoint& p);

/// Outcome of testing a linear map x -> sum_i coeff_i x_i on {1..side}^dim.
struct FreimanCheck {
  bool homomorphism = false;
  /// Two distinct difference vectors with the same image, when one exists.
  std::optional<std::pair<std::vector<int>, std::vector<int>>> collision;
};

/// phi(x) - phi(y) = phi(z) - phi(w) iff x - y = z - w, checked by scanning all pairs (x, y)
/// and requiring the image of x - y to determine x - y.
FreimanCheck freiman_check(std::span<const std::int64_t> coefficients, int side = kGridSide);

/// The check for phi itself.
FreimanCheck freiman_check();

/// Number of grid quadruples whose AP status differs from that of their phi-image (0 expected).
std::int64_t ap_transfer_mismatches();

/// f(phi(p)) = g(p), zero off the image of phi.
IntSignalZ lift_f(const GridFunction& g);

}  // namespace apu
