#pragma once

#include <map>
#include <string>
#include <vector>

#include "knotvol/augment.hpp"
#include "knotvol/reduce.hpp"

namespace knotvol {

// Clausen function Cl2(theta) = sum sin(k theta) / k^2, for |theta| <= pi.
double clausen2(double theta);

// Volume of the regular ideal hyperbolic tetrahedron, Cl2(pi/3).
double regular_ideal_tetrahedron_volume();

inline constexpr double kV0 = 1.0149416064096536;

struct BoundsReport {
  int g = 0;
  int N = 0;
  std::map<int, int> N_i;
  int A = 0;
  int crossings_k0 = 0;
  int crossings_l = 0;
  int crossings_l_improved = 0;

  bool bound_4g_minus_2 = false;  // N <= 4g - 2
  bool bound_6g_minus_1 = false;  // A <= 6g - 1
  bool bound_6A_plus_1 = false;   // c(L) = 4A + c(K0) <= 6A + 1
  bool bound_36g = false;         // c(L) <= 36g
  bool bound_5A_plus_2 = false;   // c(L improved) <= 5A + 2
  bool bound_30g = false;         // c(L improved) <= 30g

  double v0 = kV0;
  double volume_bound_raw = 0;     // 4 V0 c(L improved)
  double volume_bound_crude = 0;   // 4 V0 c(L)
  double volume_bound_linear = 0;  // 122 g
  double volume_bound_genus = 0;   // 120 g V0

  bool all_pass() const;
};

// Evaluates every counting inequality. Throws InconsistencyError when
// 1 - 2g differs from N - A.
BoundsReport report(const ReductionRecord& rec, const AugmentedLink& l, const AugmentedLink& l_improved);

int tetrahedron_count_bound(const Diagram& d);

struct GenusOneClass {
  enum class Kind { TwoBridge, OddPretzel, Unrecognized };
  Kind kind = Kind::Unrecognized;
  std::vector<int> twists;  // band counts per arc
  std::vector<int> signs;   // twist sign per arc
  std::string diagnostics;

  std::string describe() const;
};

// Reads the family of a canonical genus one diagram off its arcs. The diagram
// must be alternating, prime, nugatory-free and not a closed 2-braid.
GenusOneClass classify_genus_one(const Diagram& d);

}  // namespace knotvol
