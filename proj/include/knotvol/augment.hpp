#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotvol/diagram.hpp"
#include "knotvol/reduce.hpp"

namespace knotvol {

enum class Target { K, KPrime };

std::string to_string(Target t);

// One unknotted loop around the two strands leaving the first band of an
// arc on the side of its start circle.
struct AugmentationLoop {
  int arc = 0;
  // Loop crossings. The loop passes over the far pair (a, b) and under the
  // near pair (c, d); slot 1 of c and d holds the strand edge facing the arc.
  std::array<int, 4> crossings{};
  int n_prime = 0;  // signed full twists recovering K'
  int n = 0;        // ... recovering K
};

struct AugmentedLink {
  Diagram diagram;
  std::vector<AugmentationLoop> loops;
  bool improved = false;

  int knot_component() const;
  int loop_component(int loop) const;
  // PD text preceded by '#' lines naming each component.
  std::string annotated_pd() const;
};

// Places a loop around the first band of every arc of K0. The knot's
// crossings keep their K0 indices; each loop appends four crossings.
AugmentedLink augment(const ReductionRecord& rec);

// Deletes the two bands of every arc collapsed to two bands, moving that full
// twist into the loop's surgery coefficient.
AugmentedLink improve(const AugmentedLink& link, const ReductionRecord& rec);

struct SurgeryInstruction {
  int loop = 0;
  int component = 0;
  int arc = 0;
  int n = 0;  // coefficient 1/n; n = 0 is the trivial filling
  Target target = Target::KPrime;

  bool trivial() const { return n == 0; }
  std::string coefficient() const;
};

std::vector<SurgeryInstruction> surgery_instructions(const AugmentedLink& link, Target target);
std::vector<SurgeryInstruction> surgery_instructions(const ReductionRecord& rec, Target target);

// Inserts k crossings of sign `sign` between two edges bordering a common
// face, drawn with the right endpoints to the east and the top edge north of
// the bottom edge. An odd k reconnects the strands, which only keeps the
// orientation consistent when they run the same way.
Diagram insert_twists(const Diagram& d, Endpoint top_right, Endpoint top_left, Endpoint bottom_right,
                      Endpoint bottom_left, int k, int sign);

// Performs every loop's 1/n surgery combinatorially: 2|n| crossings of sign
// sgn(n) into the strands through the loop, then the loop is erased.
Diagram fill_loops(const AugmentedLink& link, Target target);

// fill_loops compared after canonicalization with the reduced alternating
// diagram (K') or, after twist_reduce on both sides, with the reduced input (K).
bool verify_roundtrip(const ReductionRecord& rec, const AugmentedLink& link, Target target);
bool verify_roundtrip(const ReductionRecord& rec, Target target);

}  // namespace knotvol
