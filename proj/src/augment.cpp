#include "knotvol/augment.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "knotvol/errors.hpp"

namespace knotvol {

std::string to_string(Target t) { return t == Target::K ? "K" : "K'"; }

int AugmentedLink::loop_component(int loop) const {
  // The loop passes over at its first crossing, on odd slots.
  return diagram.component_of(diagram.label(loops.at(loop).crossings[0], 1));
}

int AugmentedLink::knot_component() const {
  std::set<int> taken;
  for (int i = 0; i < static_cast<int>(loops.size()); ++i) taken.insert(loop_component(i));
  for (int c = 0; c < diagram.num_components(); ++c)
    if (!taken.count(c)) return c;
  throw InvariantError("augmented link has no knot component");
}

std::string AugmentedLink::annotated_pd() const {
  std::ostringstream os;
  std::vector<std::string> role(diagram.num_components());
  role[knot_component()] = "knot";
  for (int i = 0; i < static_cast<int>(loops.size()); ++i)
    role[loop_component(i)] = "loop:arc=" + std::to_string(loops[i].arc + 1);
  for (int c = 0; c < diagram.num_components(); ++c) {
    os << "# component " << c + 1 << " " << role[c] << ":";
    for (Label l : diagram.components()[c]) os << " " << l;
    os << "\n";
  }
  os << diagram.to_line() << "\n";
  return os.str();
}

AugmentedLink augment(const ReductionRecord& rec) {
  const Diagram& k0 = rec.k0;
  std::vector<Crossing> xs(k0.crossings().begin(), k0.crossings().end());
  Label next = k0.max_label() + 1;
  AugmentedLink link;
  for (const auto& e : rec.ledger) {
    const Arc& arc = rec.arcs.arcs.at(e.arc);
    int x1 = rec.k0_index.at(arc.crossings.front());
    if (x1 < 0) throw InvariantError("first band of an arc was collapsed away");
    int a = arc.start_slots[0], b = arc.start_slots[1];
    Label t = k0.label(x1, a), u = k0.label(x1, b);
    Label t_near = next++, t_mid = next++, u_near = next++, u_mid = next++;
    Label l_ab = next++, l_bc = next++, l_cd = next++, l_da = next++;
    xs[x1].slots[a] = t_near;
    xs[x1].slots[b] = u_near;
    // Counterclockwise lists start east; the strands run east-west with the
    // band to the east, the loop runs north-south.
    int t_in = k0.incoming(x1, a) ? 2 : 0;
    int u_in = k0.incoming(x1, b) ? 2 : 0;
    int base = static_cast<int>(xs.size());
    xs.push_back(make_crossing({t_mid, l_da, t, l_ab}, t_in));
    xs.push_back(make_crossing({u_mid, l_ab, u, l_bc}, u_in));
    xs.push_back(make_crossing({u_near, l_cd, u_mid, l_bc}, 3));
    xs.push_back(make_crossing({t_near, l_da, t_mid, l_cd}, 3));
    AugmentationLoop loop;
    loop.arc = e.arc;
    loop.crossings = {base, base + 1, base + 2, base + 3};
    loop.n_prime = e.n_prime;
    loop.n = e.n;
    link.loops.push_back(loop);
  }
  link.diagram = Diagram::from_crossings(std::move(xs), k0.name());
  return link;
}

AugmentedLink improve(const AugmentedLink& link, const ReductionRecord& rec) {
  AugmentedLink out = link;
  std::vector<int> doomed;
  for (auto& loop : out.loops) {
    const auto& e = rec.ledger.at(loop.arc);
    if (e.kept != 2) continue;
    for (int k = 0; k < 2; ++k) doomed.push_back(rec.k0_index.at(e.crossings[k]));
    loop.n_prime += e.epsilon;
    loop.n += e.epsilon;
  }
  out.improved = true;
  if (doomed.empty()) return out;
  auto del = delete_crossings(link.diagram, doomed);
  out.diagram = del.diagram;
  for (auto& loop : out.loops)
    for (auto& c : loop.crossings) c = del.index_map.at(c);
  return out;
}

std::string SurgeryInstruction::coefficient() const { return "1/" + std::to_string(n); }

std::vector<SurgeryInstruction> surgery_instructions(const AugmentedLink& link, Target target) {
  std::vector<SurgeryInstruction> out;
  for (int i = 0; i < static_cast<int>(link.loops.size()); ++i) {
    const auto& loop = link.loops[i];
    out.push_back({i, link.loop_component(i), loop.arc, target == Target::K ? loop.n : loop.n_prime, target});
  }
  return out;
}

std::vector<SurgeryInstruction> surgery_instructions(const ReductionRecord& rec, Target target) {
  return surgery_instructions(augment(rec), target);
}

Diagram insert_twists(const Diagram& d, Endpoint top_right, Endpoint top_left, Endpoint bottom_right,
                      Endpoint bottom_left, int k, int sign) {
  if (k == 0) return d;
  Label top = d.label(top_right.crossing, top_right.slot);
  Label bottom = d.label(bottom_right.crossing, bottom_right.slot);
  if (d.label(top_left.crossing, top_left.slot) != top || d.label(bottom_left.crossing, bottom_left.slot) != bottom)
    throw PreconditionError("insert_twists: endpoints do not bound the two edges");
  bool top_west = !d.incoming(top_right.crossing, top_right.slot);
  bool bottom_west = !d.incoming(bottom_right.crossing, bottom_right.slot);

  std::vector<Crossing> xs(d.crossings().begin(), d.crossings().end());
  Label next = d.max_label() + 1;
  std::vector<Label> tops{top}, bottoms{bottom};
  for (int j = 1; j <= k; ++j) {
    tops.push_back(next++);
    bottoms.push_back(next++);
  }
  xs[top_left.crossing].slots[top_left.slot] = tops[k];
  xs[bottom_left.crossing].slots[bottom_left.slot] = bottoms[k];
  for (int j = 1; j <= k; ++j) {
    // The strand arriving at the top right runs NE-SW; strands swap sides at
    // every crossing.
    bool rising_west = (j % 2 == 1) ? top_west : bottom_west;   // NE-SW strand
    bool falling_west = (j % 2 == 1) ? bottom_west : top_west;  // SE-NW strand
    int rising_in = rising_west ? 0 : 2;
    int falling_in = falling_west ? 3 : 1;
    int rx = rising_west ? -1 : 1, ry = rx;
    int fx = falling_west ? -1 : 1, fy = -fx;
    int cross = rx * fy - ry * fx;
    // Positive crossing: the over direction turns counterclockwise onto the
    // under direction.
    bool rising_over = (cross > 0) == (sign > 0);
    int under_in = rising_over ? falling_in : rising_in;
    xs.push_back(make_crossing({tops[j - 1], tops[j], bottoms[j], bottoms[j - 1]}, under_in));
  }
  return Diagram::from_crossings(std::move(xs), d.name());
}

Diagram fill_loops(const AugmentedLink& link, Target target) {
  Diagram d = link.diagram;
  std::vector<int> doomed;
  for (const auto& loop : link.loops) {
    int n = target == Target::K ? loop.n : loop.n_prime;
    int c = loop.crossings[2], dd = loop.crossings[3];
    Endpoint top_left{dd, 1}, bottom_left{c, 1};
    d = insert_twists(d, d.opposite(top_left), top_left, d.opposite(bottom_left), bottom_left, 2 * std::abs(n),
                      n > 0 ? 1 : -1);
    doomed.insert(doomed.end(), loop.crossings.begin(), loop.crossings.end());
  }
  return delete_crossings(d, doomed).diagram;
}

bool verify_roundtrip(const ReductionRecord& rec, const AugmentedLink& link, Target target) {
  Diagram filled = fill_loops(link, target);
  if (target == Target::KPrime) return canonical(filled) == canonical(rec.reduced);
  return canonical(twist_reduce(filled)) == canonical(twist_reduce(rec.reduced_input));
}

bool verify_roundtrip(const ReductionRecord& rec, Target target) {
  return verify_roundtrip(rec, augment(rec), target);
}

}  // namespace knotvol
