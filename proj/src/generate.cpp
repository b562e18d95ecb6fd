#include "knotvol/generate.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "knotvol/errors.hpp"

namespace knotvol {

int DiagramBuilder::add_crossing(int over_diagonal) {
  over_.push_back(over_diagonal);
  return static_cast<int>(over_.size()) - 1;
}

void DiagramBuilder::connect(Port a, Port b) { edges_.push_back({a, b}); }

Diagram DiagramBuilder::build(std::string name) const {
  const int n = static_cast<int>(over_.size());
  if (n == 0) return Diagram().with_name(std::move(name));
  std::vector<int> edge_at(4 * n, -1);
  auto key = [](Port p) { return 4 * p.crossing + p.dir; };
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    for (Port p : {edges_[e].first, edges_[e].second}) {
      if (edge_at[key(p)] >= 0) throw LabelError("builder port used twice");
      edge_at[key(p)] = e;
    }
  }
  if (std::count(edge_at.begin(), edge_at.end(), -1) > 0) throw LabelError("builder port left open");

  std::vector<Label> label(edges_.size(), 0);
  std::vector<bool> incoming(4 * n, false);
  Label next = 1;
  for (int start = 0; start < static_cast<int>(edges_.size()); ++start) {
    if (label[start]) continue;
    int e = start;
    Port from = edges_[e].first;
    while (!label[e]) {
      label[e] = next++;
      Port to = edges_[e].first.crossing == from.crossing && edges_[e].first.dir == from.dir ? edges_[e].second
                                                                                              : edges_[e].first;
      incoming[key(to)] = true;
      from = {to.crossing, (to.dir + 2) % 4};
      e = edge_at[key(from)];
    }
  }

  std::vector<Crossing> xs;
  for (int c = 0; c < n; ++c) {
    std::array<Label, 4> ccw;
    for (int d = 0; d < 4; ++d) ccw[d] = label[edge_at[4 * c + d]];
    int under_a = over_[c] == 0 ? NW : NE;
    int under_in = incoming[4 * c + under_a] ? under_a : (under_a + 2) % 4;
    xs.push_back(make_crossing(ccw, under_in));
  }
  return Diagram::from_crossings(std::move(xs), std::move(name));
}

Diagram closed_braid(int strands, const std::vector<int>& word) {
  DiagramBuilder b;
  std::vector<std::optional<DiagramBuilder::Port>> first(strands), top(strands);
  auto feed = [&](int pos, DiagramBuilder::Port in, DiagramBuilder::Port out) {
    if (top[pos])
      b.connect(*top[pos], in);
    else
      first[pos] = in;
    top[pos] = out;
  };
  for (int g : word) {
    int i = std::abs(g);
    if (i < 1 || i >= strands) throw std::invalid_argument("braid generator out of range");
    // A positive generator has its SW-to-NE strand on top.
    int c = b.add_crossing(g > 0 ? 0 : 1);
    feed(i - 1, {c, DiagramBuilder::SW}, {c, DiagramBuilder::NW});
    feed(i, {c, DiagramBuilder::SE}, {c, DiagramBuilder::NE});
  }
  for (int p = 0; p < strands; ++p) {
    if (!top[p]) throw DisconnectedError("braid strand " + std::to_string(p) + " meets no generator");
    b.connect(*top[p], *first[p]);
  }
  return b.build();
}

Diagram pretzel(const std::vector<int>& twists) {
  using B = DiagramBuilder;
  B b;
  struct Column {
    B::Port tl, tr, bl, br;
    std::vector<int> crossings;
  };
  std::vector<Column> cols;
  for (int p : twists) {
    if (p == 0) throw std::invalid_argument("pretzel columns need at least one crossing");
    Column col;
    for (int j = 0; j < std::abs(p); ++j) {
      int c = b.add_crossing(p > 0 ? 0 : 1);
      if (j == 0) {
        col.tl = {c, B::NW};
        col.tr = {c, B::NE};
      } else {
        b.connect({col.crossings.back(), B::SW}, {c, B::NW});
        b.connect({col.crossings.back(), B::SE}, {c, B::NE});
      }
      col.crossings.push_back(c);
    }
    col.bl = {col.crossings.back(), B::SW};
    col.br = {col.crossings.back(), B::SE};
    cols.push_back(col);
  }
  const int k = static_cast<int>(cols.size());
  for (int i = 0; i < k; ++i) {
    b.connect(cols[i].tr, cols[(i + 1) % k].tl);
    b.connect(cols[i].br, cols[(i + 1) % k].bl);
  }
  Diagram d = b.build();
  // Crossing signs depend on how the strands got oriented; flip whole columns
  // so that each column's sign follows its entry.
  std::vector<Crossing> xs(d.crossings().begin(), d.crossings().end());
  bool changed = false;
  for (int i = 0; i < k; ++i) {
    int want = twists[i] > 0 ? 1 : -1;
    for (int c : cols[i].crossings) {
      if (d.sign(c) == want) continue;
      xs[c] = flipped(d, c);
      changed = true;
    }
  }
  return changed ? Diagram::from_crossings(std::move(xs)) : d;
}

Diagram add_kink(const Diagram& d, Label edge, int form) {
  if (d.num_crossings() == 0) {
    Label l = 1, m = 2;
    std::array<Crossing, 4> forms{{{{l, m, m, l}}, {{l, l, m, m}}, {{m, l, l, m}}, {{m, m, l, l}}}};
    return Diagram::from_crossings({forms[form % 4]}, d.name());
  }
  Label loop = d.max_label() + 1;
  Label out = d.max_label() + 2;
  std::vector<Crossing> xs(d.crossings().begin(), d.crossings().end());
  Endpoint h = d.head(edge);
  xs[h.crossing].slots[h.slot] = out;
  Label in = edge;
  std::array<Crossing, 4> forms{{{{in, loop, loop, out}},
                                 {{in, out, loop, loop}},
                                 {{loop, in, out, loop}},
                                 {{loop, loop, out, in}}}};
  xs.push_back(forms[form % 4]);
  return Diagram::from_crossings(std::move(xs), d.name());
}

Diagram connected_sum(const Diagram& x, Label a, const Diagram& y, Label b) {
  if (x.num_crossings() == 0) return y;
  if (y.num_crossings() == 0) return x;
  Label shift = x.max_label();
  std::vector<Crossing> xs(x.crossings().begin(), x.crossings().end());
  std::vector<Crossing> ys(y.crossings().begin(), y.crossings().end());
  for (auto& c : ys)
    for (auto& l : c.slots) l += shift;
  Label bb = b + shift;
  Endpoint hx = x.head(a);
  Endpoint hy = y.head(b);
  xs[hx.crossing].slots[hx.slot] = bb;
  ys[hy.crossing].slots[hy.slot] = a;
  xs.insert(xs.end(), ys.begin(), ys.end());
  return Diagram::from_crossings(std::move(xs));
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// Random braid word whose closure is a knot using every generator.
Diagram random_braid_knot(std::mt19937_64& rng, int max_crossings) {
  while (true) {
    int strands = uniform(rng, 2, std::min(5, max_crossings + 1));
    int len = uniform(rng, strands - 1, max_crossings);
    std::vector<int> word;
    std::vector<bool> seen(strands, false);
    std::vector<int> perm(strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int k = 0; k < len; ++k) {
      int i = uniform(rng, 1, strands - 1);
      seen[i] = true;
      word.push_back(uniform(rng, 0, 1) ? i : -i);
      std::swap(perm[i - 1], perm[i]);
    }
    if (std::count(seen.begin() + 1, seen.end(), true) != strands - 1) continue;
    int cycle = 1;
    for (int p = perm[0]; p != 0; p = perm[p]) ++cycle;
    if (cycle != strands) continue;
    return closed_braid(strands, word);
  }
}

}  // namespace

Diagram random_knot_diagram(std::mt19937_64& rng, int max_crossings) {
  max_crossings = std::max(max_crossings, 1);
  Diagram d = random_braid_knot(rng, max_crossings);
  int room = max_crossings - d.num_crossings();
  if (room >= 2 && uniform(rng, 0, 3) == 0) {
    Diagram e = random_braid_knot(rng, room);
    const auto& la = d.labels();
    const auto& lb = e.labels();
    d = connected_sum(d, la[uniform(rng, 0, static_cast<int>(la.size()) - 1)], e,
                      lb[uniform(rng, 0, static_cast<int>(lb.size()) - 1)]);
  }
  int kinks = uniform(rng, 0, 2);
  for (int k = 0; k < kinks && d.num_crossings() < max_crossings; ++k) {
    const auto& ls = d.labels();
    d = add_kink(d, ls[uniform(rng, 0, static_cast<int>(ls.size()) - 1)], uniform(rng, 0, 3));
  }
  std::vector<Crossing> xs(d.crossings().begin(), d.crossings().end());
  for (int c = 0; c < d.num_crossings(); ++c) {
    if (uniform(rng, 0, 3) != 0) continue;
    xs[c] = flipped(d, c);
  }
  return Diagram::from_crossings(std::move(xs));
}

}  // namespace knotvol
