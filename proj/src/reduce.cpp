#include "knotvol/reduce.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "knotvol/errors.hpp"

namespace knotvol {

namespace {

std::string plural(int n, const char* word) { return std::to_string(n) + " " + word + (n == 1 ? "" : "s"); }

void require_knot(const Diagram& d, const char* what) {
  if (d.num_components() != 1)
    throw MultiComponentError(std::string(what) + " needs a knot, got " + plural(d.num_components(), "component"));
}

// Same projection: each crossing carries the same four labels in the same
// cyclic order.
bool same_projection(const Diagram& a, const Diagram& b) {
  if (a.num_crossings() != b.num_crossings()) return false;
  for (int c = 0; c < a.num_crossings(); ++c) {
    const auto& x = a.crossings()[c].slots;
    const auto& y = b.crossings()[c].slots;
    bool ok = false;
    for (int r = 0; r < 4 && !ok; r += 1) {
      ok = true;
      for (int s = 0; s < 4; ++s) ok = ok && x[s] == y[(s + r) % 4];
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Diagram alternate(const Diagram& d) {
  require_knot(d, "alternate");
  const int n = d.num_crossings();
  if (n == 0) return d;
  auto ps = d.passages(0);
  if (ps.size() % 2 != 0) throw ParityError("odd number of crossing passes");
  std::vector<int> first(n, -1);
  for (int i = 0; i < static_cast<int>(ps.size()); ++i) {
    int c = ps[i].crossing;
    if (first[c] < 0)
      first[c] = i;
    else if ((i - first[c]) % 2 == 0)
      throw ParityError("crossing " + std::to_string(c) + " is passed twice at positions of equal parity");
  }
  int agree = 0;
  for (int c = 0; c < n; ++c) agree += ps[first[c]].over == (first[c] % 2 == 0);
  bool even_over = 2 * agree >= n;

  std::vector<Crossing> out(d.crossings().begin(), d.crossings().end());
  for (int c = 0; c < n; ++c) {
    bool want_over = (first[c] % 2 == 0) == even_over;
    if (ps[first[c]].over != want_over) out[c] = flipped(d, c);
  }
  Diagram result = Diagram::from_crossings(std::move(out), d.name());
  if (!is_alternating(result)) throw ParityError("alternating assignment failed to alternate");
  return result;
}

std::optional<PrimeCut> find_prime_cut(const Diagram& d) {
  if (d.num_crossings() < 2) return std::nullopt;
  FaceStructure fs = trace_faces(d);
  std::map<std::pair<int, int>, std::vector<Label>> shared;
  for (Label l : d.labels()) {
    int f1 = fs.face_of(d.tail(l));
    int f2 = fs.face_of(d.head(l));
    if (f1 == f2) continue;
    shared[{std::min(f1, f2), std::max(f1, f2)}].push_back(l);
  }
  for (const auto& [faces, edges] : shared)
    if (edges.size() >= 2) return PrimeCut{faces.first, faces.second, edges[0], edges[1]};
  return std::nullopt;
}

CutSummand cut_summand(const Diagram& d, const PrimeCut& cut, bool first) {
  require_knot(d, "cut_summand");
  const auto& comp = d.components()[0];
  const int m = static_cast<int>(comp.size());
  Label from = first ? cut.e1 : cut.e2;
  Label to = first ? cut.e2 : cut.e1;
  int i = static_cast<int>(std::find(comp.begin(), comp.end(), from) - comp.begin());
  int j = static_cast<int>(std::find(comp.begin(), comp.end(), to) - comp.begin());
  if (i == m || j == m || i == j) throw InvariantError("cut edges are not two distinct edges of the knot");

  std::vector<int> visits(d.num_crossings(), 0);
  for (int k = i; k != j; k = (k + 1) % m) ++visits[d.head(comp[k]).crossing];
  CutSummand out;
  out.index_map.assign(d.num_crossings(), -1);
  std::vector<Crossing> kept;
  for (int c = 0; c < d.num_crossings(); ++c) {
    if (visits[c] == 1) throw InvariantError("cut curve separates the two passes of a crossing");
    if (visits[c] != 2) continue;
    Crossing x = d.crossings()[c];
    for (auto& l : x.slots)
      if (l == to) l = from;
    out.index_map[c] = static_cast<int>(kept.size());
    kept.push_back(x);
  }
  out.diagram = Diagram::from_crossings(std::move(kept), d.name());
  return out;
}

bool keep_first_summand(const Diagram& d, const PrimeCut& cut) {
  Diagram a = cut_summand(d, cut, true).diagram;
  Diagram b = cut_summand(d, cut, false).diagram;
  int ga = canonical_genus(a), gb = canonical_genus(b);
  if (ga != gb) return ga > gb;
  return a.num_crossings() <= b.num_crossings();
}

Diagram prime_reduce(const Diagram& d) {
  Diagram cur = d;
  while (auto cut = find_prime_cut(cur)) cur = cut_summand(cur, *cut, keep_first_summand(cur, *cut)).diagram;
  return cur;
}

bool detect_torus_2k(const Diagram& d) {
  if (d.num_crossings() == 0) return false;
  auto g = seifert_graph(d);
  if (g.num_vertices() != 2) return false;
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const SeifertEdge& e) { return e.sign == g.edges[0].sign; });
}

std::optional<int> find_nugatory(const Diagram& d) {
  if (d.num_crossings() == 0) return std::nullopt;
  auto g = seifert_graph(d);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.valency[v] == 1) return g.incident[v].front();
  return std::nullopt;
}

Diagram remove_nugatory(const Diagram& d) {
  Diagram cur = d;
  while (auto c = find_nugatory(cur)) cur = delete_crossings(cur, {*c}).diagram;
  return cur;
}

std::string NonHyperbolicOutcome::describe() const {
  if (kind == Kind::Unknot) return "unknot";
  return "(2," + std::to_string(k) + ")-torus knot";
}

bool ReductionRecord::input_alternating() const {
  for (const auto& e : ledger)
    if (e.signs_k != e.signs_kprime) return false;
  return true;
}

ReductionRecord collapse_arcs(const Diagram& d) { return collapse_arcs(d, d); }

ReductionRecord collapse_arcs(const Diagram& d, const Diagram& with_signs) {
  require_knot(d, "collapse_arcs");
  if (!is_alternating(d)) throw PreconditionError("collapse_arcs: diagram is not alternating");
  if (auto c = find_nugatory(d))
    throw NugatoryPresentError("collapse_arcs: crossing " + std::to_string(*c) + " is nugatory");
  if (find_prime_cut(d)) throw PreconditionError("collapse_arcs: diagram is not prime");
  if (d.num_crossings() == 0 || detect_torus_2k(d))
    throw PreconditionError("collapse_arcs: diagram is a closed 2-braid");
  if (!same_projection(d, with_signs))
    throw PreconditionError("collapse_arcs: sign diagram does not share the projection");

  ReductionRecord rec;
  rec.input = with_signs;
  rec.alternating = d;
  rec.reduced_input = with_signs;
  rec.reduced = d;
  rec.genus = canonical_genus(d);
  auto g = seifert_graph(d);
  rec.arcs = arc_decomposition(g);

  for (const auto& arc : rec.arcs.arcs) {
    TwistLedgerEntry e;
    e.arc = arc.id;
    e.bands = arc.bands();
    e.crossings = arc.crossings;
    e.signs_kprime = arc.signs;
    for (int c : arc.crossings) e.signs_k.push_back(with_signs.sign(c));
    e.epsilon = arc.signs.front();
    for (int s : arc.signs)
      if (s != e.epsilon) throw InvariantError("arc " + std::to_string(arc.id) + " mixes band signs");
    e.kept = e.bands % 2 == 0 ? 2 : 1;
    rec.ledger.push_back(std::move(e));
  }
  bool all_single = std::all_of(rec.ledger.begin(), rec.ledger.end(), [](const auto& e) { return e.kept == 1; });
  if (all_single) {
    for (auto& e : rec.ledger)
      if (e.bands >= 3) {
        e.kept = 3;
        e.insurance = true;
        rec.insurance_arc = e.arc;
        break;
      }
  }

  std::vector<int> doomed;
  for (auto& e : rec.ledger) {
    for (int k = e.kept; k < e.bands; ++k) doomed.push_back(e.crossings[k]);
    e.n_prime = e.epsilon * (e.bands - e.kept) / 2;
    int total = std::accumulate(e.signs_k.begin(), e.signs_k.end(), 0);
    e.n = (total - e.epsilon * e.kept) / 2;
  }
  auto del = delete_crossings(d, doomed);
  rec.k0 = del.diagram;
  rec.k0_index = del.index_map;

  if (!is_alternating(rec.k0)) throw InvariantError("collapsed diagram is not alternating");
  if (canonical_genus(rec.k0) != rec.genus) throw InvariantError("collapse changed the canonical genus");
  auto k0_arcs = arc_decomposition(seifert_graph(rec.k0));
  std::vector<int> want, got;
  for (const auto& e : rec.ledger) want.push_back(e.kept);
  for (const auto& a : k0_arcs.arcs) got.push_back(a.bands());
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got || k0_arcs.fat_count() != rec.arcs.fat_count())
    throw InvariantError("collapsed diagram has a different arc structure");
  return rec;
}

Reduction reduce(const Diagram& d) {
  require_knot(d, "reduce");
  Reduction out;
  out.input = d;
  Diagram dp = alternate(d);
  Diagram dk = d;
  out.alternating = dp;
  int flips = 0;
  for (int c = 0; c < d.num_crossings(); ++c) flips += d.sign(c) != dp.sign(c);
  out.provenance.push_back("alternate: changed " + plural(flips, "crossing"));

  while (true) {
    if (auto cut = find_prime_cut(dp)) {
      bool first = keep_first_summand(dp, *cut);
      Diagram kept_p = cut_summand(dp, *cut, first).diagram;
      Diagram dropped = cut_summand(dp, *cut, !first).diagram;
      dk = cut_summand(dk, *cut, first).diagram;
      out.provenance.push_back("prime split across edges " + std::to_string(cut->e1) + " and " +
                               std::to_string(cut->e2) + ": kept " + plural(kept_p.num_crossings(), "crossing") +
                               " (genus " + std::to_string(canonical_genus(kept_p)) + "), dropped " +
                               plural(dropped.num_crossings(), "crossing") + " (genus " +
                               std::to_string(canonical_genus(dropped)) + ")");
      dp = kept_p;
      continue;
    }
    if (auto c = find_nugatory(dp)) {
      out.provenance.push_back("removed nugatory crossing " + std::to_string(*c) + " (" +
                               plural(dp.num_crossings() - 1, "crossing") + " left)");
      dp = delete_crossings(dp, {*c}).diagram;
      dk = delete_crossings(dk, {*c}).diagram;
      continue;
    }
    break;
  }
  out.reduced = dp;

  if (dp.num_crossings() == 0) {
    out.outcome = NonHyperbolicOutcome{NonHyperbolicOutcome::Kind::Unknot, 0};
  } else if (detect_torus_2k(dp)) {
    out.outcome = NonHyperbolicOutcome{NonHyperbolicOutcome::Kind::Torus2k, writhe(dp)};
  }
  if (out.outcome) {
    out.provenance.push_back("not hyperbolic: " + out.outcome->describe());
    return out;
  }

  ReductionRecord rec = collapse_arcs(dp, dk);
  rec.input = d;
  rec.alternating = out.alternating;
  rec.provenance = out.provenance;
  if (rec.insurance_arc)
    rec.provenance.push_back("insurance: arc " + std::to_string(*rec.insurance_arc + 1) + " keeps three bands");
  out.provenance = rec.provenance;
  out.record = std::move(rec);
  return out;
}

Diagram twist_reduce(const Diagram& d) {
  Diagram cur = d;
  bool changed = true;
  while (changed && cur.num_crossings() > 0) {
    changed = false;
    auto s = smooth(cur);
    for (const auto& circle : s.circles) {
      if (circle.edges.size() != 2) continue;
      int a = circle.crossings[0], b = circle.crossings[1];
      if (a == b || cur.sign(a) == cur.sign(b)) continue;
      try {
        cur = delete_crossings(cur, {a, b}).diagram;
      } catch (const RealizabilityError&) {
        continue;
      }
      changed = true;
      break;
    }
  }
  return cur;
}

}  // namespace knotvol
