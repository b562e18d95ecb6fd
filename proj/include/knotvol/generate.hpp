#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "knotvol/diagram.hpp"

namespace knotvol {

// Assembles a diagram from crossings placed in the plane with ports
// NE, NW, SW, SE (counterclockwise) and port-to-port connections. Strands
// run straight through (NE-SW, NW-SE); orientations come from tracing, so
// the caller never supplies them.
class DiagramBuilder {
 public:
  enum Dir { NE = 0, NW = 1, SW = 2, SE = 3 };
  struct Port {
    int crossing;
    int dir;
  };

  // over_diagonal: 0 puts the NE-SW strand on top, 1 the NW-SE strand.
  int add_crossing(int over_diagonal);
  void connect(Port a, Port b);
  Diagram build(std::string name = {}) const;

 private:
  std::vector<int> over_;
  std::vector<std::pair<Port, Port>> edges_;
};

// Closure of a braid word on `strands` strands; generator +i (or -i) crosses
// positions i-1 and i positively (negatively), 1 <= i < strands.
Diagram closed_braid(int strands, const std::vector<int>& word);

// Pretzel diagram with one vertical twist column per entry. Positive entries
// give positive crossings.
Diagram pretzel(const std::vector<int>& twists);

// Reidemeister-I kink on edge `edge`; `form` (0..3) picks the loop side and
// which strand goes over.
Diagram add_kink(const Diagram& d, Label edge, int form);

// Connected sum joining edge `a` of the first diagram to edge `b` of the second.
Diagram connected_sum(const Diagram& x, Label a, const Diagram& y, Label b);

// A random knot diagram with 1..max_crossings crossings: a closed braid,
// optionally summed with a second one, decorated with kinks and random
// crossing changes.
Diagram random_knot_diagram(std::mt19937_64& rng, int max_crossings = 16);

}  // namespace knotvol
