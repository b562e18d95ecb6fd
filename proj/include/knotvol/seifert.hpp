#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "knotvol/diagram.hpp"

namespace knotvol {

// How a Seifert circle runs through a crossing after the oriented smoothing.
// The two slots are counterclockwise-adjacent.
struct CirclePassage {
  int circle = -1;
  int in_slot = -1;
  int out_slot = -1;
};

struct SeifertCircle {
  int id = 0;
  std::vector<Label> edges;     // in the direction inherited from the knot
  std::vector<int> crossings;   // crossing reached at the head of each edge
  int depth = 0;                // number of circles enclosing this one
  int parent = -1;              // innermost enclosing circle, -1 at top level
  int orientation = +1;         // +1 when the circle runs counterclockwise around its inside
  int inside_region = -1;
  int outside_region = -1;
};

struct SeifertDecomposition {
  std::vector<SeifertCircle> circles;
  // The two circle passages at each crossing.
  std::vector<std::array<CirclePassage, 2>> at_crossing;
  int num_regions = 0;  // complementary regions of the smoothed diagram
  int root_region = 0;  // the region chosen to contain the point at infinity

  int size() const { return static_cast<int>(circles.size()); }
};

// Oriented smoothing of every crossing. Nesting is read off the tree formed
// by the smoothed diagram's complementary regions, rooted at the region that
// contains the largest face of the diagram.
SeifertDecomposition smooth(const Diagram& d);

// (c - s + 1) / 2 for a knot diagram with c crossings and s Seifert circles.
// Throws MultiComponentError for links.
int canonical_genus(const Diagram& d);

// One half-twisted band: the crossing it comes from, the two circles it joins
// and the slot pair each circle occupies at that crossing.
struct SeifertEdge {
  int crossing = -1;
  int sign = 0;
  std::array<int, 2> circles{};
  std::array<std::array<int, 2>, 2> slots{};  // slots[k] = {a, a+1 mod 4} for circles[k]
  bool nested = false;                         // one circle encloses the other
};

// The rigid-vertex Seifert graph: one vertex per circle, one signed edge per
// crossing.
struct SeifertGraph {
  SeifertDecomposition circles;
  std::vector<SeifertEdge> edges;    // edges[c] comes from crossing c
  std::vector<int> valency;
  std::vector<std::vector<int>> incident;  // edge ids around each vertex, in circle order

  int num_vertices() const { return static_cast<int>(valency.size()); }
  int num_edges() const { return static_cast<int>(edges.size()); }
  int other_end(int edge, int vertex) const {
    const auto& e = edges[edge];
    return e.circles[0] == vertex ? e.circles[1] : e.circles[0];
  }
};

SeifertGraph seifert_graph(const Diagram& d);

// Disjoint circles are joined by bands only when their normal orientations
// differ, nested ones only when they agree.
bool band_respects_orientation(const SeifertGraph& g, const SeifertEdge& e);

// A maximal chain of bands through valency-2 circles between circles of
// valency at least 3. The two ends may be the same circle.
struct Arc {
  int id = 0;
  std::vector<int> crossings;  // band crossings, from start_vertex to end_vertex
  std::vector<int> signs;
  int start_vertex = -1;
  int end_vertex = -1;
  // Slots of crossings.front() used by start_vertex, counterclockwise.
  std::array<int, 2> start_slots{};

  int bands() const { return static_cast<int>(crossings.size()); }
  bool is_loop() const { return start_vertex == end_vertex; }
};

struct ArcDecomposition {
  std::vector<Arc> arcs;
  std::vector<int> fat_vertices;
  std::map<int, int> valency_counts;  // i -> number of fat circles meeting i bands

  int fat_count() const { return static_cast<int>(fat_vertices.size()); }  // N
  int arc_count() const { return static_cast<int>(arcs.size()); }          // A
  // Arc containing each crossing.
  std::vector<int> arc_of_crossing(int num_crossings) const;
};

// Throws NugatoryPresentError when a circle meets a single band and
// TorusTwoBridgeCase when no circle meets three or more, or when the graph is
// two circles joined by an even number of bands.
ArcDecomposition arc_decomposition(const SeifertGraph& g);

// Graphviz rendering; vertices carry valency and nesting depth, edges the
// band sign.
std::string to_dot(const SeifertGraph& g, const std::string& name = "seifert");

}  // namespace knotvol
