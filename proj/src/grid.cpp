#include "apuniform/grid.hpp"

#include <algorithm>
#include <map>

namespace apu {
namespace {

bool in_grid(const GridPoint& p) noexcept {
  return std::all_of(p.begin(), p.end(), [](int v) { return v >= 1 && v <= kGridSide; });
}

GridPoint step(const GridPoint& p, const std::array<int, 3>& d, int k) noexcept {
  return {p[0] + k * d[0], p[1] + k * d[1], p[2] + k * d[2]};
}

std::array<GridPoint, kGridCells> all_points() {
  std::array<GridPoint, kGridCells> pts{};
  for (int i = 0; i < kGridCells; ++i) pts[i] = grid_point(i);
  return pts;
}

}  // namespace

int grid_index(const GridPoint& p) {
  if (!in_grid(p)) throw Error(Errc::OutOfDomain, "point outside {1,2,3,4}^3");
  return (p[0] - 1) * 16 + (p[1] - 1) * 4 + (p[2] - 1);
}

GridPoint grid_point(int index) {
  if (index < 0 || index >= kGridCells) throw Error(Errc::OutOfDomain, "grid index out of range");
  return {index / 16 + 1, (index / 4) % 4 + 1, index % 4 + 1};
}

GridDesign::GridDesign(std::vector<GridPoint> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (!in_grid(p)) throw Error(Errc::OutOfDomain, "design point outside {1,2,3,4}^3");
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool GridDesign::contains(const GridPoint& p) const noexcept {
  return std::binary_search(points_.begin(), points_.end(), p);
}

GridDesign GridDesign::replaced(const GridPoint& from, const GridPoint& to) const {
  std::vector<GridPoint> pts = points_;
  std::replace(pts.begin(), pts.end(), from, to);
  return GridDesign(std::move(pts));
}

std::vector<std::string> GridDesign::to_strings() const {
  std::vector<std::string> out;
  out.reserve(points_.size());
  for (const auto& p : points_) {
    out.push_back(std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
  }
  return out;
}

const char* to_string(LineKind kind) noexcept {
  switch (kind) {
    case LineKind::AxisParallel: return "axis-parallel";
    case LineKind::PlaneDiagonal: return "plane-diagonal";
    case LineKind::MainDiagonal: return "main-diagonal";
  }
  return "unknown";
}

GridDesign paper_design() {
  constexpr std::array<int, 16> kTriples{113, 121, 132, 144, 212, 224, 233, 241,
                                         314, 322, 331, 343, 411, 423, 434, 442};
  std::vector<GridPoint> pts;
  for (int t : kTriples) pts.push_back({t / 100, (t / 10) % 10, t % 10});
  return GridDesign(std::move(pts));
}

std::vector<GridLine> enumerate_lines() {
  std::vector<GridLine> lines;
  for (const auto& start : all_points()) {
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dz = -1; dz <= 1; ++dz) {
          const std::array<int, 3> d{dx, dy, dz};
          // One orientation per line: first nonzero component positive.
          const auto lead = std::find_if(d.begin(), d.end(), [](int v) { return v != 0; });
          if (lead == d.end() || *lead < 0) continue;
          if (!in_grid(step(start, d, -1)) && in_grid(step(start, d, 3))) {
            GridLine line{};
            for (int k = 0; k < 4; ++k) line.points[k] = step(start, d, k);
            const auto moving = std::count_if(d.begin(), d.end(), [](int v) { return v != 0; });
            line.kind = moving == 1   ? LineKind::AxisParallel
                        : moving == 2 ? LineKind::PlaneDiagonal
                                      : LineKind::MainDiagonal;
            lines.push_back(line);
          }
        }
      }
    }
  }
  return lines;
}

DesignValidation validate_design(const GridDesign& design) {
  DesignValidation result;
  for (const auto& line : enumerate_lines()) {
    if (line.kind == LineKind::MainDiagonal) continue;
    const auto hits = std::count_if(line.points.begin(), line.points.end(),
                                    [&](const GridPoint& p) { return design.contains(p); });
    if (hits != 1) result.violations.push_back(line);
  }
  result.valid = result.violations.empty();
  return result;
}

GridFunction grid_g(const GridDesign& design) {
  if (!validate_design(design).valid) {
    throw Error(Errc::InvalidDesign, "design misses or doubles a non-main-diagonal line");
  }
  GridFunction g{};
  for (int i = 0; i < kGridCells; ++i) g[i] = design.contains(grid_point(i)) ? -1 : 1;
  return g;
}

std::int64_t grid_ap4_sum(const GridFunction& g) {
  std::int64_t total = 0;
  for (const auto& x : all_points()) {
    for (int dx = -3; dx <= 3; ++dx) {
      for (int dy = -3; dy <= 3; ++dy) {
        for (int dz = -3; dz <= 3; ++dz) {
          const std::array<int, 3> d{dx, dy, dz};
          if (!in_grid(step(x, d, 3))) continue;  // endpoints in the box imply the rest are
          std::int64_t prod = 1;
          for (int k = 0; k < 4; ++k) prod *= g[grid_index(step(x, d, k))];
          total += prod;
        }
      }
    }
  }
  return total;
}

std::int64_t phi(const GridPoint& p) {
  if (!in_grid(p)) throw Error(Errc::OutOfDomain, "phi is defined on {1,2,3,4}^3 only");
  return p[0] + 8 * p[1] + 64 * p[2];
}

FreimanCheck freiman_check(std::span<const std::int64_t> coefficients, int side) {
  const std::size_t dim = coefficients.size();
  if (dim == 0 || side < 1) throw Error(Errc::InvalidArgument, "empty Freiman domain");
  std::size_t cells = 1;
  for (std::size_t i = 0; i < dim; ++i) cells *= static_cast<std::size_t>(side);

  auto coords = [&](std::size_t index) {
    std::vector<int> c(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      c[i] = static_cast<int>(index % static_cast<std::size_t>(side)) + 1;
      index /= static_cast<std::size_t>(side);
    }
    return c;
  };

  FreimanCheck result;
  std::map<std::int64_t, std::vector<int>> seen;  // image of x - y -> x - y
  for (std::size_t xi = 0; xi < cells; ++xi) {
    const auto x = coords(xi);
    for (std::size_t yi = 0; yi < cells; ++yi) {
      const auto y = coords(yi);
      std::vector<int> diff(dim);
      std::int64_t image = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        diff[i] = x[i] - y[i];
        image += coefficients[i] * diff[i];
      }
      const auto [it, inserted] = seen.emplace(image, diff);
      if (!inserted && it->second != diff) {
        result.collision = std::make_pair(it->second, diff);
        return result;
      }
    }
  }
  result.homomorphism = true;
  return result;
}

FreimanCheck freiman_check() {
  constexpr std::array<std::int64_t, 3> kPhi{1, 8, 64};
  return freiman_check(kPhi);
}

std::int64_t ap_transfer_mismatches() {
  const auto pts = all_points();
  std::array<std::int64_t, kGridCells> image{};
  for (int i = 0; i < kGridCells; ++i) image[i] = phi(pts[i]);

  auto is_ap = [&](int x, int y, int z, int w) {
    for (int c = 0; c < 3; ++c) {
      const int dy = pts[y][c] - pts[x][c];
      if (pts[z][c] - pts[y][c] != dy || pts[w][c] - pts[z][c] != dy) return false;
    }
    return true;
  };

  std::int64_t mismatches = 0;
  for (int x = 0; x < kGridCells; ++x) {
    for (int y = 0; y < kGridCells; ++y) {
      const std::int64_t step_xy = image[y] - image[x];
      for (int z = 0; z < kGridCells; ++z) {
        const bool first_two = image[z] - image[y] == step_xy;
        for (int w = 0; w < kGridCells; ++w) {
          const bool image_ap = first_two && image[w] - image[z] == step_xy;
          if (image_ap != is_ap(x, y, z, w)) ++mismatches;
        }
      }
    }
  }
  return mismatches;
}

IntSignalZ lift_f(const GridFunction& g) {
  const std::int64_t lo = phi({1, 1, 1});
  const std::int64_t hi = phi({4, 4, 4});
  std::vector<int> values(static_cast<std::size_t>(hi - lo + 1), 0);
  for (int i = 0; i < kGridCells; ++i) values[phi(grid_point(i)) - lo] = g[i];
  return IntSignalZ(lo, std::move(values));
}

}  // namespace apu
