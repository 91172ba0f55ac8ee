#include <algorithm>
#include <functional>

#include "ssg/equilibria.hpp"
#include "ssg/error.hpp"

namespace ssg {

const char* grid8_method_name(Grid8Method m) {
  switch (m) {
    case Grid8Method::ConsecutiveFill: return "consecutive-fill";
    case Grid8Method::Triangle: return "triangle";
    case Grid8Method::AlmostTriangle: return "almost-triangle";
    case Grid8Method::Pattern: return "pattern";
    case Grid8Method::Dynamics: return "dynamics";
  }
  return "?";
}

std::vector<int> triangle_rows(int x, int y) {
  if (x < 1 || y < 0 || y > x) throw Error(ErrorCode::InvalidParameter, "triangle needs x >= 1 and 0 <= y <= x");
  std::vector<int> rows(x);
  for (int r = 0; r < x; ++r) rows[r] = x - r;
  if (y == 0) return rows;
  if (x < 4) throw Error(ErrorCode::InvalidParameter, "almost triangles need x >= 4");
  // (x,1): rows 1-2 hold x, row 3 holds x-1, rows 4..x-1 keep the triangle, row x is empty.
  rows[1] = x;
  rows[2] = x - 1;
  rows[x - 1] = 0;
  // (x,y) for 2 <= y <= x-2: one more agent at the end of row y+2.
  for (int k = 2; k <= std::min(y, x - 2); ++k) ++rows[k + 1];
  if (y >= x - 1) ++rows[x - 1];
  if (y == x) ++rows[0];
  return rows;
}

namespace {

// Placements are described in a frame with `lines` rows of length `len`;
// `transposed` maps frame (r, c) to grid (c, r).
struct Frame {
  int rows, cols;
  bool transposed;
  int frame_rows() const { return transposed ? cols : rows; }
  int frame_cols() const { return transposed ? rows : cols; }
  Vertex id(int r, int c) const { return transposed ? c * cols + r : r * cols + c; }
};

std::optional<Coloring> place(const Frame& f, const std::vector<std::pair<int, int>>& cells) {
  std::vector<Color> col(f.rows * f.cols, 1);
  for (auto [r, c] : cells) {
    if (r < 0 || c < 0 || r >= f.frame_rows() || c >= f.frame_cols()) return std::nullopt;
    col[f.id(r, c)] = 0;
  }
  return Coloring(std::move(col), 2);
}

// o cells filled line by line, each line holding `width` cells of the frame.
std::vector<std::pair<int, int>> line_fill(int width, int o) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < o; ++i) cells.emplace_back(i / width, i % width);
  return cells;
}

std::vector<std::pair<int, int>> row_shape(const std::vector<int>& rows) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (int c = 0; c < rows[r]; ++c) cells.emplace_back(r, c);
  return cells;
}

std::vector<std::pair<int, int>> staircase(const Frame& f, int o) {
  std::vector<std::pair<int, int>> all;
  for (int r = 0; r < f.frame_rows(); ++r)
    for (int c = 0; c < f.frame_cols(); ++c) all.emplace_back(r, c);
  std::stable_sort(all.begin(), all.end(),
                   [](auto a, auto b) { return a.first + a.second < b.first + b.second; });
  all.resize(o);
  return all;
}

}  // namespace

Grid8Equilibrium build_8grid_eq_detailed(int rows, int cols, int o) {
  if (rows < 1 || cols < 1 || rows * cols < 2) throw Error(ErrorCode::InvalidParameter, "empty grid");
  if (o < 1 || 2 * o > rows * cols) throw Error(ErrorCode::InvalidParameter, "need 1 <= o <= rows*cols/2");
  const Graph g = make_grid(rows, cols, GridKind::Eight);
  const int ell = std::min(rows, cols);
  // Frame whose rows run along the long side, i.e. frame lines of length ell are its columns.
  const Frame canon{rows, cols, rows > cols};
  const Frame other{rows, cols, rows <= cols};
  auto ok = [&](const std::optional<Coloring>& c) { return c && is_equilibrium_fast(g, *c, Locality::Global); };
  auto result = [](Coloring c, Grid8Method m, std::string d) { return Grid8Equilibrium{std::move(c), m, std::move(d)}; };

  // Consecutive fill along lines of length ell: in the canonical frame these are columns.
  auto column_fill = [&](const Frame& f, int width) {
    std::vector<std::pair<int, int>> cells;
    for (auto [line, pos] : line_fill(width, o)) cells.emplace_back(pos, line);
    return place(f, cells);
  };

  if (o >= 2 * ell - 1) {
    if (auto c = column_fill(canon, canon.frame_rows()); ok(c))
      return result(*c, Grid8Method::ConsecutiveFill, "lines of length " + std::to_string(ell));
    if (auto c = column_fill(other, other.frame_rows()); ok(c))
      return result(*c, Grid8Method::ConsecutiveFill, "lines of length " + std::to_string(std::max(rows, cols)));
    throw Error(ErrorCode::ConstructionFailed, "consecutive fill rejected in both orientations");
  }

  if (o >= 15) {
    int x = 5;
    while ((x + 1) * (x + 2) / 2 <= o) ++x;
    const int y = o - x * (x + 1) / 2;
    const auto shape = row_shape(triangle_rows(x, y));
    const Grid8Method m = y == 0 ? Grid8Method::Triangle : Grid8Method::AlmostTriangle;
    const std::string d = "x=" + std::to_string(x) + ", y=" + std::to_string(y);
    for (const Frame& f : {canon, other})
      if (auto c = place(f, shape); ok(c)) return result(*c, m, d);
    throw Error(ErrorCode::ConstructionFailed, "triangle placement rejected (" + d + ")");
  }

  // Small minority: pattern library, then dynamics from each pattern, then random restarts.
  std::vector<std::pair<std::string, std::optional<Coloring>>> patterns;
  for (const Frame& f : {canon, other}) {
    const std::string tag = f.transposed == canon.transposed ? "" : " (transposed)";
    patterns.emplace_back("column fill" + tag, column_fill(f, f.frame_rows()));
    for (int w = 2; w <= std::min(o, f.frame_cols()); ++w) patterns.emplace_back("block width " + std::to_string(w) + tag, place(f, line_fill(w, o)));
    patterns.emplace_back("staircase" + tag, place(f, staircase(f, o)));
  }
  for (const auto& [name, c] : patterns)
    if (ok(c)) return result(*c, Grid8Method::Pattern, name);

  const TypeVector t({o, rows * cols - o});
  for (const auto& [name, c] : patterns) {
    if (!c) continue;
    for (const Scheduler& s : {Scheduler::first(), Scheduler::best_gain()}) {
      DynamicsTrace tr = run_dynamics(g, t, *c, Locality::Global, s, 10'000);
      if (tr.outcome.kind == DynamicsOutcome::Kind::Converged)
        return result(tr.final_coloring, Grid8Method::Dynamics, s.str() + " dynamics from " + name);
    }
  }
  Rng rng(1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Coloring start = random_coloring(t, rng);
    DynamicsTrace tr = run_dynamics(g, t, start, Locality::Global, Scheduler::random(attempt + 1), 10'000);
    if (tr.outcome.kind == DynamicsOutcome::Kind::Converged)
      return result(tr.final_coloring, Grid8Method::Dynamics, "random restart " + std::to_string(attempt));
  }
  throw Error(ErrorCode::ConstructionFailed, "no equilibrium found within the attempt budget");
}

Coloring build_8grid_eq(int rows, int cols, int o) { return build_8grid_eq_detailed(rows, cols, o).coloring; }

}  // namespace ssg
