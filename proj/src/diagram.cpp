#include "knotvol/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "knotvol/errors.hpp"

namespace knotvol {

namespace {

int mod4(int s) { return ((s % 4) + 4) % 4; }

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

Diagram::Diagram() : components_{{}} {}

int Diagram::edge_index(Label edge) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), edge);
  if (it == labels_.end() || *it != edge) throw LabelError("unknown edge label " + std::to_string(edge));
  return static_cast<int>(it - labels_.begin());
}

Endpoint Diagram::tail(Label edge) const { return tail_[edge_index(edge)]; }
Endpoint Diagram::head(Label edge) const { return head_[edge_index(edge)]; }

Endpoint Diagram::opposite(Endpoint at) const {
  int e = edge_index(label(at.crossing, at.slot));
  return tail_[e] == at ? head_[e] : tail_[e];
}

int Diagram::component_of(Label edge) const { return component_of_[edge_index(edge)]; }

int Diagram::sign(int crossing) const { return over_in_slot(crossing) == 3 ? +1 : -1; }

Diagram Diagram::with_name(std::string name) const {
  Diagram out = *this;
  out.name_ = std::move(name);
  return out;
}

std::vector<Passage> Diagram::passages(int component) const {
  std::vector<Passage> out;
  for (Label e : components_.at(component)) {
    Endpoint h = head(e);
    out.push_back({h.crossing, h.slot, mod4(h.slot + 2), h.slot % 2 == 1});
  }
  return out;
}

Diagram Diagram::from_crossings(std::vector<Crossing> crossings, std::string name) {
  Diagram d;
  d.name_ = std::move(name);
  if (crossings.empty()) return d;
  d.crossings_ = std::move(crossings);
  d.components_.clear();
  const int n = d.num_crossings();

  std::map<Label, int> count;
  for (const auto& c : d.crossings_)
    for (Label l : c.slots) {
      if (l <= 0) throw LabelError("edge labels must be positive, got " + std::to_string(l));
      ++count[l];
    }
  for (auto [l, k] : count)
    if (k != 2)
      throw LabelError("label " + std::to_string(l) + " appears " + std::to_string(k) +
                       (k == 1 ? " time" : " times") + ", expected exactly twice");
  for (auto& [l, k] : count) d.labels_.push_back(l);

  const int m = static_cast<int>(d.labels_.size());
  std::vector<std::array<Endpoint, 2>> ends(m);
  std::vector<int> seen(m, 0);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      int e = d.edge_index(d.crossings_[c].slots[s]);
      ends[e][seen[e]++] = {c, s};
    }
  auto other = [&](int e, Endpoint at) { return ends[e][0] == at ? ends[e][1] : ends[e][0]; };

  // Trace each strand component, then orient it so under-strands enter at
  // slot 0 of their PD tuple.
  d.tail_.assign(m, {});
  d.head_.assign(m, {});
  d.component_of_.assign(m, -1);
  for (int start = 0; start < m; ++start) {
    if (d.component_of_[start] >= 0) continue;
    struct Step {
      int edge;
      Endpoint from, to;
    };
    std::vector<Step> walk;
    int e = start;
    Endpoint from = ends[start][0];
    Endpoint to = ends[start][1];
    for (int guard = 0;; ++guard) {
      if (guard > m) throw OrientationError("strand tracing did not close up");
      walk.push_back({e, from, to});
      Endpoint out{to.crossing, mod4(to.slot + 2)};
      e = d.edge_index(d.crossings_[out.crossing].slots[out.slot]);
      from = out;
      to = other(e, out);
      if (e == start && from == walk.front().from) break;
    }
    int forward = 0, backward = 0;
    for (const auto& st : walk) {
      if (st.to.slot == 0) ++forward;
      if (st.to.slot == 2) ++backward;
    }
    if (forward > 0 && backward > 0)
      throw OrientationError("inconsistent under-strand directions along the component through label " +
                             std::to_string(d.labels_[start]));
    bool reversed = backward > 0;
    if (forward == 0 && backward == 0) {
      // Over-only component: orient along increasing labels.
      auto lowest = std::min_element(walk.begin(), walk.end(), [](const Step& a, const Step& b) { return a.edge < b.edge; });
      std::size_t k = static_cast<std::size_t>(lowest - walk.begin());
      const Step& prev = walk[(k + walk.size() - 1) % walk.size()];
      reversed = d.labels_[prev.edge] == d.labels_[lowest->edge] + 1;
    }
    if (reversed) {
      std::reverse(walk.begin(), walk.end());
      for (auto& st : walk) std::swap(st.from, st.to);
    }
    std::rotate(walk.begin(),
                std::min_element(walk.begin(), walk.end(), [](const Step& a, const Step& b) { return a.edge < b.edge; }),
                walk.end());
    int comp = static_cast<int>(d.components_.size());
    d.components_.emplace_back();
    for (const auto& st : walk) {
      if (d.component_of_[st.edge] >= 0) throw OrientationError("edge traversed twice while tracing a component");
      d.component_of_[st.edge] = comp;
      d.tail_[st.edge] = st.from;
      d.head_[st.edge] = st.to;
      d.components_[comp].push_back(d.labels_[st.edge]);
    }
  }
  d.incoming_.assign(4 * n, false);
  for (int e = 0; e < m; ++e) d.incoming_[4 * d.head_[e].crossing + d.head_[e].slot] = true;

  UnionFind uf(n);
  for (int e = 0; e < m; ++e) uf.join(ends[e][0].crossing, ends[e][1].crossing);
  for (int c = 1; c < n; ++c)
    if (uf.find(c) != uf.find(0)) throw DisconnectedError("diagram is not connected");

  int f = trace_faces(d).size();
  if (n - 2 * n + f != 2)
    throw RealizabilityError("face tracing gives V - E + F = " + std::to_string(n - 2 * n + f) +
                             ", the code does not describe a diagram on the sphere");
  return d;
}

namespace {

bool pd_order(const Crossing& a, const Crossing& b) {
  Label ma = *std::min_element(a.slots.begin(), a.slots.end());
  Label mb = *std::min_element(b.slots.begin(), b.slots.end());
  return ma != mb ? ma < mb : a < b;
}

std::vector<Crossing> pd_sorted(std::vector<Crossing> v) {
  std::sort(v.begin(), v.end(), pd_order);
  return v;
}

}  // namespace

bool operator==(const Diagram& a, const Diagram& b) {
  return a.num_crossings() == b.num_crossings() && pd_sorted(a.crossings_) == pd_sorted(b.crossings_);
}

std::string Diagram::to_pd() const {
  std::vector<Crossing> sorted = pd_sorted(crossings_);
  std::ostringstream os;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& s = sorted[i].slots;
    os << (i ? " " : "") << "X(" << s[0] << ',' << s[1] << ',' << s[2] << ',' << s[3] << ')';
  }
  return os.str();
}

std::string Diagram::to_line() const {
  std::string pd = to_pd();
  if (name_.empty()) return pd;
  return pd.empty() ? name_ + ":" : name_ + ": " + pd;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  std::vector<Crossing> parse() {
    skip_space();
    if (at_end()) return {};
    if (match_word("unknot")) {
      skip_space();
      if (!at_end()) fail("trailing text after 'unknot'");
      return {};
    }
    match_word("PD");
    skip_space();
    std::vector<Crossing> out;
    // A nested list "[[a,b,c,d],...]" or "PD[X[...], ...]".
    bool wrapped = false;
    if (peek() == '[' || peek() == '(') {
      std::size_t save = pos_;
      char open = get();
      skip_space();
      if (peek() == '[' || peek() == '(' || peek() == 'X') {
        wrapped = true;
        wrapper_close_ = open == '[' ? ']' : ')';
      } else {
        pos_ = save;
      }
    }
    while (true) {
      skip_separators();
      if (at_end()) break;
      if (wrapped && peek() == wrapper_close_) {
        get();
        wrapped = false;
        skip_space();
        if (!at_end()) fail("trailing text after closing bracket");
        break;
      }
      out.push_back(parse_tuple());
    }
    if (wrapped) fail("missing closing bracket");
    return out;
  }

 private:
  Crossing parse_tuple() {
    if (peek() == 'X' || peek() == 'x') get();
    skip_space();
    char open = get();
    if (open != '(' && open != '[') fail("expected '(' or '[' to open a crossing");
    char close = open == '(' ? ')' : ']';
    Crossing c;
    for (int i = 0; i < 4; ++i) {
      skip_space();
      c.slots[i] = parse_int();
      skip_space();
      if (i < 3) {
        if (get() != ',') fail("expected ',' between labels");
      }
    }
    if (get() != close) fail("crossing must have exactly four labels");
    return c;
  }

  int parse_int() {
    std::size_t begin = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + begin + (text_[begin] == '+' ? 1 : 0), text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) fail("expected an integer label");
    return value;
  }

  bool match_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) == w) {
      std::size_t end = pos_ + w.size();
      if (end == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[end]))) {
        pos_ = end;
        return true;
      }
    }
    return false;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == ',' || text_[pos_] == ';'))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return at_end() ? '\0' : text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError("PD syntax error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  char wrapper_close_ = ']';
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Diagram parse_pd(std::string_view text) {
  std::string name;
  auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    std::string_view head = text.substr(0, colon);
    if (head.find_first_of("()[]") == std::string_view::npos) {
      name = std::string(trim(head));
      text.remove_prefix(colon + 1);
    }
  }
  return Diagram::from_crossings(PdParser(text).parse(), std::move(name));
}

std::vector<Diagram> parse_pd_lines(std::string_view text) {
  std::vector<Diagram> out;
  std::size_t lineno = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_pd(line));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Faces and elementary operations

FaceStructure trace_faces(const Diagram& d) {
  FaceStructure fs;
  const int n = d.num_crossings();
  if (n == 0) {
    fs.faces.resize(2);
    return fs;
  }
  fs.face_of_dart.assign(4 * n, -1);
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (fs.face_of_dart[4 * c + s] >= 0) continue;
      int id = fs.size();
      fs.faces.emplace_back();
      Dart dart{c, s};
      while (fs.face_of_dart[4 * dart.crossing + dart.slot] < 0) {
        fs.face_of_dart[4 * dart.crossing + dart.slot] = id;
        fs.faces[id].push_back(dart);
        Endpoint arrive = d.opposite(dart);
        dart = {arrive.crossing, mod4(arrive.slot + 3)};
      }
    }
  return fs;
}

std::vector<std::vector<Label>> faces(const Diagram& d) {
  FaceStructure fs = trace_faces(d);
  std::vector<std::vector<Label>> out;
  for (const auto& f : fs.faces) {
    std::vector<Label> cycle;
    for (Dart dart : f) cycle.push_back(d.label(dart.crossing, dart.slot));
    out.push_back(std::move(cycle));
  }
  return out;
}

int writhe(const Diagram& d) {
  int w = 0;
  for (int c = 0; c < d.num_crossings(); ++c) w += d.sign(c);
  return w;
}

Crossing flipped(const Diagram& d, int c) {
  const auto& s = d.crossings()[c].slots;
  int start = d.over_in_slot(c);
  return {{s[start], s[mod4(start + 1)], s[mod4(start + 2)], s[mod4(start + 3)]}};
}

Diagram mirror(const Diagram& d) {
  std::vector<Crossing> out;
  for (int c = 0; c < d.num_crossings(); ++c) out.push_back(flipped(d, c));
  return Diagram::from_crossings(std::move(out), d.name());
}

Diagram flip_crossing(const Diagram& d, int crossing) {
  std::vector<Crossing> out(d.crossings().begin(), d.crossings().end());
  out.at(crossing) = flipped(d, crossing);
  return Diagram::from_crossings(std::move(out), d.name());
}

Diagram reverse(const Diagram& d) {
  std::vector<Crossing> out;
  for (const auto& c : d.crossings()) out.push_back({{c.slots[2], c.slots[3], c.slots[0], c.slots[1]}});
  return Diagram::from_crossings(std::move(out), d.name());
}

bool is_alternating(const Diagram& d) {
  for (int k = 0; k < d.num_components(); ++k) {
    auto ps = d.passages(k);
    if (ps.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (ps[i].over == ps[(i + 1) % ps.size()].over) return false;
  }
  return true;
}

std::vector<Crossing> relabeled(std::span<const Crossing> crossings, const std::vector<std::pair<Label, Label>>& map) {
  std::unordered_map<Label, Label> m(map.begin(), map.end());
  std::vector<Crossing> out(crossings.begin(), crossings.end());
  for (auto& c : out)
    for (auto& l : c.slots)
      if (auto it = m.find(l); it != m.end()) l = it->second;
  return out;
}

Crossing make_crossing(const std::array<Label, 4>& ccw, int under_in) {
  return {{ccw[mod4(under_in)], ccw[mod4(under_in + 1)], ccw[mod4(under_in + 2)], ccw[mod4(under_in + 3)]}};
}

Diagram canonical(const Diagram& d) {
  const int n = d.num_crossings();
  if (n == 0) return Diagram().with_name(d.name());
  const auto& labels = d.labels();
  const int m = static_cast<int>(labels.size());
  auto index = [&](Label l) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()); };

  // Position of each edge inside its component's traversal.
  std::vector<int> pos(m);
  for (const auto& comp : d.components())
    for (std::size_t k = 0; k < comp.size(); ++k) pos[index(comp[k])] = static_cast<int>(k);

  std::vector<Crossing> best;
  std::vector<int> fresh(m);
  std::vector<int> by_new(m);
  for (int start = 0; start < m; ++start) {
    std::fill(fresh.begin(), fresh.end(), 0);
    int next = 1;
    auto label_component = [&](int e) {
      const auto& comp = d.components()[d.component_of(labels[e])];
      int k0 = pos[e];
      for (std::size_t k = 0; k < comp.size(); ++k) {
        int idx = index(comp[(k0 + k) % comp.size()]);
        fresh[idx] = next;
        by_new[next - 1] = idx;
        ++next;
      }
    };
    label_component(start);
    while (next <= m) {
      bool found = false;
      for (int k = 0; k < next - 1 && !found; ++k) {
        Endpoint h = d.head(labels[by_new[k]]);
        for (int t = 0; t < 4 && !found; ++t) {
          int idx = index(d.label(h.crossing, mod4(h.slot + t)));
          if (fresh[idx] == 0) {
            label_component(idx);
            found = true;
          }
        }
      }
      if (!found) throw InvariantError("canonical labeling: unreachable component");
    }
    std::vector<Crossing> code;
    code.reserve(n);
    for (const auto& c : d.crossings()) {
      Crossing x;
      for (int s = 0; s < 4; ++s) x.slots[s] = fresh[index(c.slots[s])];
      code.push_back(x);
    }
    std::sort(code.begin(), code.end(), pd_order);
    if (best.empty() || code < best) best = std::move(code);
  }
  return Diagram::from_crossings(std::move(best), d.name());
}

DeletionResult delete_crossings(const Diagram& d, const std::vector<int>& doomed) {
  const int n = d.num_crossings();
  std::vector<bool> gone(n, false);
  for (int c : doomed) gone.at(c) = true;

  const auto& labels = d.labels();
  auto index = [&](Label l) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()); };
  UnionFind uf(static_cast<int>(labels.size()));
  for (int c = 0; c < n; ++c) {
    if (!gone[c]) continue;
    for (int s = 0; s < 2; ++s) uf.join(index(d.label(c, s)), index(d.label(c, s + 2)));
  }
  // Smallest label in each merged class represents it.
  std::vector<Label> rep(labels.size(), 0);
  for (std::size_t e = 0; e < labels.size(); ++e) {
    int r = uf.find(static_cast<int>(e));
    if (rep[r] == 0 || labels[e] < rep[r]) rep[r] = labels[e];
  }

  DeletionResult out;
  out.index_map.assign(n, -1);
  std::vector<Crossing> kept;
  for (int c = 0; c < n; ++c) {
    if (gone[c]) continue;
    Crossing x = d.crossings()[c];
    for (auto& l : x.slots) l = rep[uf.find(index(l))];
    out.index_map[c] = static_cast<int>(kept.size());
    kept.push_back(x);
  }
  out.diagram = Diagram::from_crossings(std::move(kept), d.name());
  return out;
}

}  // namespace knotvol
