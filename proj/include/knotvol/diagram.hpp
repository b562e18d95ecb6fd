#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotvol {

using Label = int;

// One crossing of a planar diagram in PD form: the four incident edge labels,
// starting at the incoming under-strand and proceeding counterclockwise.
struct Crossing {
  std::array<Label, 4> slots{};

  friend bool operator==(const Crossing&, const Crossing&) = default;
  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

// A place where an edge meets a crossing.
struct Endpoint {
  int crossing = -1;
  int slot = -1;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// Leaving `crossing` along the edge at `slot`. Every edge has two darts, one
// per side; faces are cycles of darts.
using Dart = Endpoint;

// One pass of a component through a crossing.
struct Passage {
  int crossing = -1;
  int in_slot = -1;
  int out_slot = -1;
  bool over = false;
};

// An oriented knot or link diagram on the 2-sphere, stored as a validated PD
// code. Immutable once constructed; every constructor path validates labels,
// orientation, connectivity and the Euler characteristic of the face
// structure.
class Diagram {
 public:
  // The 0-crossing unknot.
  Diagram();

  // Validates and orients the given PD tuples. Throws LabelError,
  // OrientationError, DisconnectedError or RealizabilityError.
  static Diagram from_crossings(std::vector<Crossing> crossings, std::string name = {});

  std::span<const Crossing> crossings() const { return crossings_; }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }
  int num_edges() const { return 2 * num_crossings(); }
  int num_components() const { return static_cast<int>(components_.size()); }
  const std::string& name() const { return name_; }
  Diagram with_name(std::string name) const;

  Label label(int crossing, int slot) const { return crossings_[crossing].slots[slot]; }
  // Labels in increasing order.
  const std::vector<Label>& labels() const { return labels_; }
  Label max_label() const { return labels_.empty() ? 0 : labels_.back(); }

  // +1 for a right-handed crossing, -1 for a left-handed one.
  int sign(int crossing) const;
  bool incoming(int crossing, int slot) const { return incoming_[4 * crossing + slot]; }
  // The slot at which the over-strand enters (1 or 3).
  int over_in_slot(int crossing) const { return incoming(crossing, 1) ? 1 : 3; }

  Endpoint tail(Label edge) const;
  Endpoint head(Label edge) const;
  // The other end of the edge sitting at `at`.
  Endpoint opposite(Endpoint at) const;

  // Edge labels of each component in traversal order.
  const std::vector<std::vector<Label>>& components() const { return components_; }
  int component_of(Label edge) const;
  // Crossing passes of a component in traversal order; passage k is the pass
  // through the head of components()[c][k].
  std::vector<Passage> passages(int component) const;

  // Crossings sorted by smallest incident label, written "X(a,b,c,d) ...".
  std::string to_pd() const;
  // to_pd() with a "name: " prefix when the diagram is named.
  std::string to_line() const;

  // Same PD code up to the order of the crossings.
  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  int edge_index(Label edge) const;

  std::vector<Crossing> crossings_;
  std::string name_;
  std::vector<Label> labels_;
  std::vector<Endpoint> tail_;  // by edge index
  std::vector<Endpoint> head_;
  std::vector<bool> incoming_;  // by 4 * crossing + slot
  std::vector<std::vector<Label>> components_;
  std::vector<int> component_of_;  // by edge index
};

// Parses PD text: "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", square brackets, or a
// KnotInfo-style nested list "[[1,5,2,4],...]". An optional "name:" prefix
// names the diagram. Empty text (or "unknot") is the 0-crossing unknot.
Diagram parse_pd(std::string_view text);

// Reads one diagram per non-empty line; lines starting with '#' are skipped.
std::vector<Diagram> parse_pd_lines(std::string_view text);

struct FaceStructure {
  std::vector<std::vector<Dart>> faces;
  std::vector<int> face_of_dart;  // by 4 * crossing + slot

  int face_of(Dart d) const { return face_of_dart[4 * d.crossing + d.slot]; }
  int size() const { return static_cast<int>(faces.size()); }
};

// Traces the faces of the underlying 4-valent map. Each face keeps its
// boundary on the left of every dart. The 0-crossing unknot has two faces
// with empty boundary lists.
FaceStructure trace_faces(const Diagram& d);

// Face boundaries as edge-label cycles.
std::vector<std::vector<Label>> faces(const Diagram& d);

int writhe(const Diagram& d);

// Swaps over and under at every crossing.
Diagram mirror(const Diagram& d);

// Reverses the orientation of every component.
Diagram reverse(const Diagram& d);

// The tuple of `crossing` with over and under exchanged.
Crossing flipped(const Diagram& d, int crossing);

// Changes over/under at a single crossing.
Diagram flip_crossing(const Diagram& d, int crossing);

// Along every component the passes strictly alternate over and under.
bool is_alternating(const Diagram& d);

// Relabels edges 1..2c by traversal and sorts crossings, choosing the start
// edge that gives the lexicographically smallest code. Two diagrams related by
// an orientation-preserving homeomorphism of the sphere (and a relabeling)
// have identical canonical forms.
Diagram canonical(const Diagram& d);

// Replaces edge labels through `map` (labels not in the map are kept).
std::vector<Crossing> relabeled(std::span<const Crossing> crossings, const std::vector<std::pair<Label, Label>>& map);

// Builds a PD crossing from four labels listed counterclockwise, given the
// position (0..3) of the incoming under-strand in that list.
Crossing make_crossing(const std::array<Label, 4>& ccw, int under_in);

struct DeletionResult {
  Diagram diagram;
  std::vector<int> index_map;  // old crossing index -> new index, or -1
};

// Deletes crossings, joining the strands through each deleted crossing.
// Components left without crossings disappear. The result is revalidated, so
// deleting a set whose removal is not planar throws RealizabilityError.
DeletionResult delete_crossings(const Diagram& d, const std::vector<int>& doomed);

}  // namespace knotvol
