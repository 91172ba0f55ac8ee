#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ssg/rng.hpp"

namespace ssg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

enum class GridKind { Four, Eight };
enum class VertexClass { Corner, Border, Middle };

struct GridMeta {
  int rows = 0;
  int cols = 0;
  GridKind kind = GridKind::Four;
  friend bool operator==(const GridMeta&, const GridMeta&) = default;
};

// Immutable, connected, simple undirected graph with sorted adjacency.
class Graph {
 public:
  Graph() = default;

  // Validates simplicity, range and connectivity (throws InvalidParameter).
  static Graph from_edges(int n, std::vector<Edge> edges,
                          std::optional<GridMeta> grid = std::nullopt);

  int n() const { return n_; }
  std::int64_t m() const { return static_cast<std::int64_t>(nbrs_.size() / 2); }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }
  const std::optional<GridMeta>& grid() const { return grid_; }

  // Canonical edge list: u < v, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.nbrs_ == b.nbrs_ && a.grid_ == b.grid_;
  }

 private:
  int n_ = 0;
  std::vector<int> offsets_{0};
  std::vector<Vertex> nbrs_;
  int max_degree_ = 0;
  int min_degree_ = 0;
  std::optional<GridMeta> grid_;
};

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_grid(int rows, int cols, GridKind kind);
// q copies of K_{delta+1} minus {v0, v_delta}, joined v_delta^i -- v0^{i+1} into a ring.
// Vertex j of gadget i has id i*(delta+1)+j.
Graph make_regular_gadget(int delta, int q);
// Cycle 0..o-1, each cycle vertex carrying delta-2 pendant leaves.
Graph make_cycle_with_pendants(int o, int delta);
// Centers v1=0 and v3=2 joined through v2=1; each center gets
// leaves_per_star-1 private leaves (v1's first).
Graph make_double_star(int leaves_per_star);
// Same shape with private_left / private_right private leaves.
Graph make_double_star(int private_left, int private_right);

Graph random_tree(int n, Rng& rng);
// Random spanning tree plus each remaining pair with probability p.
Graph random_connected_graph(int n, double p, Rng& rng);

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

VertexClass vertex_class(const Graph& g, Vertex v);
int regularity_gap(const Graph& g);
bool is_tree(const Graph& g);
const char* vertex_class_name(VertexClass c);

}  // namespace ssg
