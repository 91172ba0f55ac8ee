#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ssg/graph.hpp"
#include "ssg/rational.hpp"

namespace ssg {

using Color = std::uint8_t;
inline constexpr int kMaxColors = 16;

// Counts t_1..t_k of agents per color.
class TypeVector {
 public:
  TypeVector() = default;
  explicit TypeVector(std::vector<int> counts);

  // k=2 with the minority first: (min(o, n-o), max(o, n-o)).
  static TypeVector two(int n, int o);

  int k() const { return static_cast<int>(counts_.size()); }
  int n() const { return n_; }
  int operator[](int i) const { return counts_[i]; }
  const std::vector<int>& counts() const { return counts_; }
  std::string str() const;
  friend bool operator==(const TypeVector&, const TypeVector&) = default;

 private:
  std::vector<int> counts_;
  int n_ = 0;
};

class Coloring {
 public:
  Coloring() = default;
  Coloring(std::vector<Color> colors, int k);
  // Vertices 0..t_1-1 get color 0, the next t_2 color 1, and so on.
  static Coloring blocks(const TypeVector& t);
  static Coloring parse(const std::string& text, int k_hint = 0);

  int n() const { return static_cast<int>(colors_.size()); }
  int k() const { return k_; }
  Color operator[](Vertex v) const { return colors_[v]; }
  void set(Vertex v, Color c) { colors_[v] = c; }
  const std::vector<Color>& colors() const { return colors_; }
  std::vector<int> counts() const;
  std::string str() const;
  friend bool operator==(const Coloring& a, const Coloring& b) { return a.colors_ == b.colors_; }

 private:
  std::vector<Color> colors_;
  int k_ = 0;
};

struct ColoringHash {
  std::size_t operator()(const Coloring& c) const;
};

// Uniform over colorings with type vector t.
Coloring random_coloring(const TypeVector& t, Rng& rng);

// Throws InconsistentColoring unless c has n(g) entries and per-color counts equal t.
void check_consistent(const Graph& g, const Coloring& c, const TypeVector& t);

struct PsiValue {
  std::int64_t phi = 0;
  int nonzero_count = 0;
  friend bool operator==(const PsiValue&, const PsiValue&) = default;
};

enum class Order { Less, Equal, Greater };

int same_color_neighbors(const Graph& g, const Coloring& c, Vertex v);
Rational utility(const Graph& g, const Coloring& c, Vertex v);
Rational social_welfare(const Graph& g, const Coloring& c);
std::int64_t phi(const Graph& g, const Coloring& c);
PsiValue psi(const Graph& g, const Coloring& c);
Order compare_psi(const PsiValue& a, const PsiValue& b);
const char* order_name(Order o);

// Throws SameColorSwap when u and v share a color.
Coloring apply_swap(const Coloring& c, Vertex u, Vertex v);
// (gain of the agent leaving u, gain of the agent leaving v).
std::pair<Rational, Rational> swap_gain(const Graph& g, const Coloring& c, Vertex u, Vertex v);

// Colorings with type vector t, ordered lexicographically as color vectors
// (for k=2: color-0 position sets in lexicographic order).
std::int64_t count_colorings(const TypeVector& t);  // saturates at INT64_MAX
Coloring unrank_coloring(const TypeVector& t, std::int64_t rank);
// Advances to the next coloring in that order; false after the last one.
bool next_coloring(std::vector<Color>& colors);
void for_each_coloring(const TypeVector& t, const std::function<void(const Coloring&)>& fn);

// Precomputed integer weights for fast welfare sums: welfare * scale =
// sum_v same(v) * weight(v). Falls back to Rational sums on overflow.
class WelfareKernel {
 public:
  explicit WelfareKernel(const Graph& g);
  bool exact_integer() const { return scale_ > 0; }
  std::int64_t scaled(const Coloring& c) const;
  Rational welfare(const Coloring& c) const;
  Rational unscale(std::int64_t s) const { return Rational(s, scale_); }

 private:
  const Graph* g_;
  std::int64_t scale_ = 0;
  std::vector<std::int64_t> weight_;
};

}  // namespace ssg
