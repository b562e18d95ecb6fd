#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotvol/diagram.hpp"
#include "knotvol/seifert.hpp"

namespace knotvol {

// Changes crossings to make every component alternate over/under. Of the two
// alternating assignments, the one agreeing with the input at more crossings
// is used; on a tie the edge labelled first passes over at its first
// crossing. Throws ParityError if neither assignment is consistent.
Diagram alternate(const Diagram& d);

// A simple closed curve through two faces meeting the knot in the two edges
// e1 and e2. `first` is the summand traced from e1 to e2.
struct PrimeCut {
  int face_a = -1;
  int face_b = -1;
  Label e1 = 0;
  Label e2 = 0;
};

std::optional<PrimeCut> find_prime_cut(const Diagram& d);

// One summand of the cut: the part traced from e1 to e2 (first = true) or
// from e2 to e1, closed up across the cut curve. Crossing order is kept.
struct CutSummand {
  Diagram diagram;
  std::vector<int> index_map;  // old crossing -> new index, or -1
};
CutSummand cut_summand(const Diagram& d, const PrimeCut& cut, bool first);

// Which summand prime_reduce keeps: the one of larger canonical genus, then
// the one with fewer crossings, then the first.
bool keep_first_summand(const Diagram& d, const PrimeCut& cut);

// Splits along 2-point curves until none remains.
Diagram prime_reduce(const Diagram& d);

// Exactly two Seifert circles, joined by bands of one sign.
bool detect_torus_2k(const Diagram& d);

// Crossing whose band meets a single-band Seifert circle.
std::optional<int> find_nugatory(const Diagram& d);
Diagram remove_nugatory(const Diagram& d);

struct TwistLedgerEntry {
  int arc = 0;
  int bands = 0;                 // b
  std::vector<int> crossings;    // arc crossings in the reduced diagrams, chain order
  std::vector<int> signs_k;      // signs of those crossings in K
  std::vector<int> signs_kprime; // ... and in the alternating K'
  int kept = 0;                  // r
  int epsilon = 0;               // common sign of the arc in K'
  // Signed full twists to add back: positive means right-handed twists.
  int n_prime = 0;               // toward K'
  int n = 0;                     // toward K
  bool insurance = false;
};

struct NonHyperbolicOutcome {
  enum class Kind { Unknot, Torus2k };
  Kind kind = Kind::Unknot;
  int k = 0;  // signed crossing count of the closed 2-braid
  std::string describe() const;
};

struct ReductionRecord {
  Diagram input;            // D
  Diagram alternating;      // D'
  Diagram reduced_input;    // D after the same splits and deletions as D'
  Diagram reduced;          // D' prime and nugatory-free
  Diagram k0;
  int genus = 0;
  ArcDecomposition arcs;    // of `reduced`
  std::vector<int> k0_index;  // crossing of `reduced` -> crossing of k0, or -1
  std::vector<TwistLedgerEntry> ledger;
  std::optional<int> insurance_arc;
  std::vector<std::string> provenance;

  // K and K' coincide.
  bool input_alternating() const;
};

// Collapses every arc of an alternating, prime, nugatory-free diagram that is
// not a closed 2-braid. `with_signs` is a diagram on the same projection whose
// signs feed the ledger's K-side deficits; it defaults to `d` itself.
ReductionRecord collapse_arcs(const Diagram& d);
ReductionRecord collapse_arcs(const Diagram& d, const Diagram& with_signs);

struct Reduction {
  std::optional<ReductionRecord> record;
  std::optional<NonHyperbolicOutcome> outcome;
  Diagram input;
  Diagram alternating;
  Diagram reduced;
  std::vector<std::string> provenance;
};

// alternate, then prime splits and nugatory deletions applied in lockstep to
// D and D', then the closed 2-braid check, then collapse_arcs.
Reduction reduce(const Diagram& d);

// Cancels adjacent opposite-sign crossings inside twist chains (two-edge
// Seifert circles) until none remain.
Diagram twist_reduce(const Diagram& d);

}  // namespace knotvol
