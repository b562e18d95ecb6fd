#include "knotvol/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "knotvol/errors.hpp"

namespace knotvol {

namespace {

int mod4(int s) { return ((s % 4) + 4) % 4; }

// The ccw-ordered slot pair {a, a+1} covering two adjacent slots.
std::array<int, 2> ccw_pair(int s, int t) {
  if (mod4(s + 1) == t) return {s, t};
  if (mod4(t + 1) == s) return {t, s};
  throw InvariantError("Seifert circle turns through non-adjacent slots");
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SeifertDecomposition smooth(const Diagram& d) {
  SeifertDecomposition out;
  const int n = d.num_crossings();
  if (n == 0) {
    SeifertCircle c;
    c.inside_region = 1;
    c.outside_region = 0;
    out.circles.push_back(c);
    out.num_regions = 2;
    return out;
  }
  out.at_crossing.resize(n);
  std::vector<std::array<bool, 2>> filled(n, {false, false});

  // At a crossing an incoming edge continues along the outgoing edge of the
  // other strand.
  const auto& labels = d.labels();
  std::vector<int> circle_of(labels.size(), -1);
  auto index = [&](Label l) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()); };
  for (std::size_t start = 0; start < labels.size(); ++start) {
    if (circle_of[start] >= 0) continue;
    SeifertCircle circle;
    circle.id = out.size();
    Label e = labels[start];
    do {
      circle_of[index(e)] = circle.id;
      circle.edges.push_back(e);
      Endpoint h = d.head(e);
      int out_slot = d.incoming(h.crossing, mod4(h.slot + 1)) ? mod4(h.slot + 3) : mod4(h.slot + 1);
      circle.crossings.push_back(h.crossing);
      int k = filled[h.crossing][0] ? 1 : 0;
      filled[h.crossing][k] = true;
      out.at_crossing[h.crossing][k] = {circle.id, h.slot, out_slot};
      e = d.label(h.crossing, out_slot);
    } while (e != labels[start]);
    out.circles.push_back(std::move(circle));
  }

  // Regions of the smoothed diagram: faces glued across each crossing through
  // the two corners between the circle passages.
  FaceStructure fs = trace_faces(d);
  UnionFind uf(fs.size());
  for (int c = 0; c < n; ++c) {
    const auto& p = out.at_crossing[c][0];
    auto pair = ccw_pair(p.in_slot, p.out_slot);
    int a = pair[0];
    uf.join(fs.face_of({c, mod4(a + 1)}), fs.face_of({c, mod4(a + 3)}));
  }
  std::vector<int> region_of_face(fs.size());
  std::vector<int> region_id(fs.size(), -1);
  int regions = 0;
  for (int f = 0; f < fs.size(); ++f) {
    int r = uf.find(f);
    if (region_id[r] < 0) region_id[r] = regions++;
    region_of_face[f] = region_id[r];
  }
  out.num_regions = regions;
  if (regions != out.size() + 1)
    throw InvariantError("smoothed diagram has " + std::to_string(regions) + " regions for " +
                         std::to_string(out.size()) + " circles");

  int largest = 0;
  for (int f = 1; f < fs.size(); ++f)
    if (fs.faces[f].size() > fs.faces[largest].size()) largest = f;
  out.root_region = region_of_face[largest];

  // Each circle separates its left region from its right region; together
  // they form a tree.
  std::vector<std::array<int, 2>> sides(out.size());
  std::vector<std::vector<int>> circles_at(regions);
  for (auto& circle : out.circles) {
    Label e = circle.edges.front();
    int left = region_of_face[fs.face_of(d.tail(e))];
    int right = region_of_face[fs.face_of(d.head(e))];
    if (left == right) throw InvariantError("Seifert circle does not separate the sphere");
    sides[circle.id] = {left, right};
    circles_at[left].push_back(circle.id);
    circles_at[right].push_back(circle.id);
  }
  std::vector<int> region_depth(regions, -1);
  std::vector<int> region_parent_circle(regions, -1);
  std::queue<int> todo;
  region_depth[out.root_region] = 0;
  todo.push(out.root_region);
  while (!todo.empty()) {
    int r = todo.front();
    todo.pop();
    for (int c : circles_at[r]) {
      auto& circle = out.circles[c];
      int far = sides[c][0] == r ? sides[c][1] : sides[c][0];
      if (region_depth[far] >= 0) continue;
      region_depth[far] = region_depth[r] + 1;
      region_parent_circle[far] = c;
      circle.outside_region = r;
      circle.inside_region = far;
      circle.depth = region_depth[r];
      circle.parent = region_parent_circle[r];
      circle.orientation = sides[c][0] == far ? +1 : -1;
      todo.push(far);
    }
  }
  for (const auto& circle : out.circles)
    if (circle.inside_region < 0) throw InvariantError("region adjacency of the smoothing is not a tree");
  return out;
}

int canonical_genus(const Diagram& d) {
  if (d.num_components() != 1)
    throw MultiComponentError("canonical genus needs a knot, got " + std::to_string(d.num_components()) + " components");
  int twice = d.num_crossings() - smooth(d).size() + 1;
  if (twice % 2 != 0 || twice < 0) throw InvariantError("c - s + 1 is not a nonnegative even number");
  return twice / 2;
}

SeifertGraph seifert_graph(const Diagram& d) {
  SeifertGraph g;
  g.circles = smooth(d);
  const int n = d.num_crossings();
  g.valency.assign(g.circles.size(), 0);
  g.incident.assign(g.circles.size(), {});
  for (int c = 0; c < n; ++c) {
    SeifertEdge e;
    e.crossing = c;
    e.sign = d.sign(c);
    for (int k = 0; k < 2; ++k) {
      const auto& p = g.circles.at_crossing[c][k];
      e.circles[k] = p.circle;
      e.slots[k] = ccw_pair(p.in_slot, p.out_slot);
    }
    if (e.circles[0] == e.circles[1]) throw InvariantError("band joins a Seifert circle to itself");
    const auto& a = g.circles.circles[e.circles[0]];
    const auto& b = g.circles.circles[e.circles[1]];
    e.nested = a.inside_region == b.outside_region || b.inside_region == a.outside_region;
    g.edges.push_back(e);
    ++g.valency[e.circles[0]];
    ++g.valency[e.circles[1]];
  }
  for (const auto& circle : g.circles.circles)
    for (int c : circle.crossings) g.incident[circle.id].push_back(c);
  return g;
}

bool band_respects_orientation(const SeifertGraph& g, const SeifertEdge& e) {
  int oa = g.circles.circles[e.circles[0]].orientation;
  int ob = g.circles.circles[e.circles[1]].orientation;
  return e.nested ? oa == ob : oa != ob;
}

std::vector<int> ArcDecomposition::arc_of_crossing(int num_crossings) const {
  std::vector<int> out(num_crossings, -1);
  for (const auto& arc : arcs)
    for (int c : arc.crossings) out[c] = arc.id;
  return out;
}

ArcDecomposition arc_decomposition(const SeifertGraph& g) {
  ArcDecomposition out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (g.valency[v] == 1)
      throw NugatoryPresentError("Seifert circle " + std::to_string(v) + " meets a single band (nugatory crossing)");
    if (g.valency[v] >= 3) {
      out.fat_vertices.push_back(v);
      ++out.valency_counts[g.valency[v]];
    }
  }
  bool two_circle_link = g.num_vertices() == 2 && g.num_edges() % 2 == 0;
  if (out.fat_vertices.empty() || two_circle_link)
    throw TorusTwoBridgeCase("no Seifert circle meets three or more bands: the diagram is a (2,2n) torus link");

  std::vector<bool> used(g.num_edges(), false);
  for (int u : out.fat_vertices) {
    for (int first : g.incident[u]) {
      if (used[first]) continue;
      Arc arc;
      arc.start_vertex = u;
      int e = first;
      int at = u;
      while (true) {
        used[e] = true;
        arc.crossings.push_back(e);
        int next = g.other_end(e, at);
        if (g.valency[next] != 2) {
          arc.end_vertex = next;
          break;
        }
        const auto& inc = g.incident[next];
        e = inc[0] == e ? inc[1] : inc[0];
        at = next;
      }
      bool flip = arc.start_vertex == arc.end_vertex ? arc.crossings.back() < arc.crossings.front()
                                                     : arc.end_vertex < arc.start_vertex;
      if (flip) {
        std::reverse(arc.crossings.begin(), arc.crossings.end());
        std::swap(arc.start_vertex, arc.end_vertex);
      }
      out.arcs.push_back(std::move(arc));
    }
  }
  std::sort(out.arcs.begin(), out.arcs.end(), [](const Arc& a, const Arc& b) {
    return *std::min_element(a.crossings.begin(), a.crossings.end()) <
           *std::min_element(b.crossings.begin(), b.crossings.end());
  });
  for (std::size_t i = 0; i < out.arcs.size(); ++i) {
    auto& arc = out.arcs[i];
    arc.id = static_cast<int>(i);
    for (int c : arc.crossings) arc.signs.push_back(g.edges[c].sign);
    const auto& e = g.edges[arc.crossings.front()];
    arc.start_slots = e.circles[0] == arc.start_vertex ? e.slots[0] : e.slots[1];
  }

  int handshake = 0;
  for (auto [i, count] : out.valency_counts) handshake += i * count;
  if (handshake != 2 * out.arc_count())
    throw InvariantError("arc count does not match half the fat-vertex valency sum");
  return out;
}

std::string to_dot(const SeifertGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  os << "  node [shape=circle];\n";
  for (const auto& c : g.circles.circles) {
    os << "  c" << c.id << " [label=\"C" << c.id << "\\nvalency " << g.valency[c.id] << "\\ndepth " << c.depth
       << "\"";
    if (g.valency[c.id] >= 3) os << ", penwidth=2";
    os << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  c" << e.circles[0] << " -- c" << e.circles[1] << " [label=\"" << (e.sign > 0 ? "+" : "-") << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace knotvol
