#pragma once

#include <optional>
#include <string>
#include <utility>

#include "ssg/dynamics.hpp"

namespace ssg {

struct EquilibriumVerdict {
  bool is_equilibrium = true;
  std::optional<ProfitableSwap> witness;  // lexicographically smallest (u, v)
};

// Direct check: every bichromatic pair (adjacent only, for Local) is tested
// by recounting neighbors in the swapped coloring.
EquilibriumVerdict is_equilibrium(const Graph& g, const Coloring& c, Locality locality);
bool is_equilibrium_fast(const Graph& g, const Coloring& c, Locality locality);

// Pairwise-sum test U_i + U_j >= 1 - [ij adjacent] / min(deg i, deg j) over
// every orange/blue pair. Two-color colorings only (throws WrongK).
bool check_characterization(const Graph& g, const Coloring& c);

// Colors vertices in post-order from root 0 (children ascending): the first
// t_1 vertices of that order get color 0, the next t_2 color 1, ...
Coloring build_tree_lse(const Graph& tree, const TypeVector& t);

enum class Grid8Method { ConsecutiveFill, Triangle, AlmostTriangle, Pattern, Dynamics };
const char* grid8_method_name(Grid8Method m);

struct Grid8Equilibrium {
  Coloring coloring;
  Grid8Method method = Grid8Method::ConsecutiveFill;
  std::string detail;
};

// Swap equilibrium on the rows x cols 8-grid with o orange agents (color 0).
Grid8Equilibrium build_8grid_eq_detailed(int rows, int cols, int o);
Coloring build_8grid_eq(int rows, int cols, int o);

// Row lengths (top to bottom) of the x-triangle / (x,y)-almost triangle.
std::vector<int> triangle_rows(int x, int y);

Coloring build_4grid_frame(int n);
Coloring build_cycle_worst(int n, int o);
Coloring build_path_worst(int n, int o);
Coloring build_regular_gadget_eq(int delta, int q);
Coloring build_pendant_eq(int o, int delta);
Coloring build_2xh_alternating(int h);

// Optimum-side witnesses used for lower-bound ratios.
Coloring regular_gadget_opt_witness(int delta, int q);
Coloring half_plane_witness(int rows, int cols);

struct DoubleStarResult {
  Graph graph;
  Coloring coloring;
  int private_left = 0;
  int private_right = 0;
  Rational welfare;
  Rational target;  // 1/2 + 1/(o-1)
  bool matches_target = false;
  int positive_utility_agents = 0;
};

// Searches the balanced double-star variants next to leaves_per_star for the
// minimum-welfare local equilibrium and reports it against the target welfare.
DoubleStarResult build_double_star_eq(int leaves_per_star);

}  // namespace ssg
