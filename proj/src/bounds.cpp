#include "knotvol/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "knotvol/errors.hpp"

namespace knotvol {

namespace {

double zeta_even(int k) {
  if (k == 1) return std::numbers::pi * std::numbers::pi / 6;
  const int terms = 1000;
  double s = 0;
  for (int n = terms; n >= 1; --n) s += std::pow(n, -2.0 * k);
  return s + std::pow(terms + 0.5, 1 - 2.0 * k) / (2 * k - 1);
}

}  // namespace

double clausen2(double theta) {
  if (theta == 0) return 0;
  const double two_pi = 2 * std::numbers::pi;
  double x = std::abs(theta);
  double r2 = (x / two_pi) * (x / two_pi);
  double s = x - x * std::log(x);
  double power = x;
  for (int k = 1; k < 60; ++k) {
    power *= r2;
    double term = zeta_even(k) * power / (k * (2.0 * k + 1));
    s += term;
    if (std::abs(term) < 1e-18) break;
  }
  return theta < 0 ? -s : s;
}

double regular_ideal_tetrahedron_volume() { return clausen2(std::numbers::pi / 3); }

bool BoundsReport::all_pass() const {
  return bound_4g_minus_2 && bound_6g_minus_1 && bound_6A_plus_1 && bound_36g && bound_5A_plus_2 && bound_30g;
}

BoundsReport report(const ReductionRecord& rec, const AugmentedLink& l, const AugmentedLink& l_improved) {
  BoundsReport r;
  r.g = rec.genus;
  r.N = rec.arcs.fat_count();
  r.N_i = rec.arcs.valency_counts;
  r.A = rec.arcs.arc_count();
  r.crossings_k0 = rec.k0.num_crossings();
  r.crossings_l = l.diagram.num_crossings();
  r.crossings_l_improved = l_improved.diagram.num_crossings();

  int half_sum = 0;
  for (auto [i, n] : r.N_i) half_sum += i * n;
  if (half_sum % 2 != 0 || half_sum / 2 != r.A)
    throw InconsistencyError("A differs from half the fat-circle valency sum");
  if (1 - 2 * r.g != r.N - r.A)
    throw InconsistencyError("Euler characteristic mismatch: 1 - 2g = " + std::to_string(1 - 2 * r.g) +
                             " but N - A = " + std::to_string(r.N - r.A));
  if (r.crossings_l != 4 * r.A + r.crossings_k0)
    throw InconsistencyError("augmented link does not add four crossings per arc");

  r.bound_4g_minus_2 = r.N <= 4 * r.g - 2;
  r.bound_6g_minus_1 = r.A <= 6 * r.g - 1;
  r.bound_6A_plus_1 = r.crossings_l <= 6 * r.A + 1;
  r.bound_36g = r.crossings_l <= 36 * r.g;
  r.bound_5A_plus_2 = r.crossings_l_improved <= 5 * r.A + 2;
  r.bound_30g = r.crossings_l_improved <= 30 * r.g;

  r.v0 = kV0;
  r.volume_bound_raw = 4 * kV0 * r.crossings_l_improved;
  r.volume_bound_crude = 4 * kV0 * r.crossings_l;
  r.volume_bound_linear = 122.0 * r.g;
  r.volume_bound_genus = 120.0 * r.g * kV0;
  return r;
}

int tetrahedron_count_bound(const Diagram& d) { return 4 * d.num_crossings(); }

std::string GenusOneClass::describe() const {
  std::string name = kind == Kind::TwoBridge    ? "TwoBridge"
                     : kind == Kind::OddPretzel ? "OddPretzel"
                                                : "Unrecognized";
  name += "(";
  for (std::size_t i = 0; i < twists.size(); ++i) name += (i ? "," : "") + std::to_string(twists[i]);
  name += ")";
  return name;
}

GenusOneClass classify_genus_one(const Diagram& d) {
  if (d.num_components() != 1) throw PreconditionError("classify_genus_one: not a knot");
  if (canonical_genus(d) != 1) throw PreconditionError("classify_genus_one: canonical genus is not one");
  if (!is_alternating(d)) throw PreconditionError("classify_genus_one: diagram is not alternating");
  if (find_nugatory(d)) throw PreconditionError("classify_genus_one: nugatory crossing present");
  if (find_prime_cut(d)) throw PreconditionError("classify_genus_one: diagram is not prime");
  if (detect_torus_2k(d)) throw PreconditionError("classify_genus_one: (2,k) torus diagram");

  auto arcs = arc_decomposition(seifert_graph(d));
  GenusOneClass out;
  for (const auto& a : arcs.arcs) {
    out.twists.push_back(a.bands());
    out.signs.push_back(a.signs.front());
  }
  auto all = [&](auto pred) { return std::all_of(arcs.arcs.begin(), arcs.arcs.end(), pred); };
  if (arcs.fat_count() == 1 && arcs.arc_count() == 2 && all([](const Arc& a) { return a.is_loop(); })) {
    out.kind = all([](const Arc& a) { return a.bands() % 2 == 0; }) ? GenusOneClass::Kind::TwoBridge
                                                                     : GenusOneClass::Kind::Unrecognized;
  } else if (arcs.fat_count() == 2 && arcs.arc_count() == 3 &&
             all([](const Arc& a) { return !a.is_loop() && a.bands() % 2 == 1; })) {
    out.kind = GenusOneClass::Kind::OddPretzel;
  }
  if (out.kind == GenusOneClass::Kind::Unrecognized)
    out.diagnostics = "N=" + std::to_string(arcs.fat_count()) + " A=" + std::to_string(arcs.arc_count());
  return out;
}

}  // namespace knotvol
