#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "knotvol/diagram.hpp"
#include "knotvol/errors.hpp"
#include "knotvol/seifert.hpp"

using namespace knotvol;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct CensusRow {
  int crossings;
  bool alternating;
  int genus;
};

std::map<std::string, CensusRow> census_table() {
  std::map<std::string, CensusRow> out;
  std::istringstream in(slurp(KNOTVOL_DATA_DIR "/census/knots_le10.tsv"));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string name, alt;
    CensusRow r{};
    row >> name >> r.crossings >> alt >> r.genus;
    r.alternating = alt == "Y";
    out[name] = r;
  }
  return out;
}

std::vector<int> sorted_valencies(const SeifertGraph& g) {
  auto v = g.valency;
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("smoothing: circle counts and genus") {
  CHECK(smooth(parse_pd(fixtures::kTrefoil)).size() == 2);
  CHECK(canonical_genus(parse_pd(fixtures::kTrefoil)) == 1);
  CHECK(smooth(parse_pd(fixtures::kFigureEight)).size() == 3);
  CHECK(canonical_genus(parse_pd(fixtures::kFigureEight)) == 1);
  CHECK(smooth(parse_pd("")).size() == 1);
  CHECK(canonical_genus(parse_pd("")) == 0);
  CHECK(canonical_genus(parse_pd(fixtures::kGranny)) == 2);
  CHECK(canonical_genus(parse_pd(fixtures::kTrefoilKink)) == 1);
}

TEST_CASE("canonical genus rejects links") {
  // Hopf link.
  Diagram hopf = parse_pd("X(1,3,2,4) X(3,1,4,2)");
  CHECK(hopf.num_components() == 2);
  CHECK_THROWS_AS(canonical_genus(hopf), MultiComponentError);
}

TEST_CASE("seifert graph: frozen examples") {
  auto t = seifert_graph(parse_pd(fixtures::kTrefoil));
  CHECK(t.num_vertices() == 2);
  CHECK(t.num_edges() == 3);
  CHECK(sorted_valencies(t) == std::vector<int>{3, 3});

  auto f = seifert_graph(parse_pd(fixtures::kFigureEight));
  CHECK(f.num_vertices() == 3);
  CHECK(f.num_edges() == 4);
  CHECK(sorted_valencies(f) == std::vector<int>{4, 2, 2});

  auto u = seifert_graph(parse_pd(""));
  CHECK(u.num_vertices() == 1);
  CHECK(u.num_edges() == 0);
}

TEST_CASE("arc decomposition: trefoil, figure-8, P(3,3,3)") {
  auto t = arc_decomposition(seifert_graph(parse_pd(fixtures::kTrefoil)));
  CHECK(t.fat_count() == 2);
  CHECK(t.valency_counts == std::map<int, int>{{3, 2}});
  CHECK(t.arc_count() == 3);
  for (const auto& a : t.arcs) CHECK(a.bands() == 1);

  auto f = arc_decomposition(seifert_graph(parse_pd(fixtures::kFigureEight)));
  CHECK(f.fat_count() == 1);
  CHECK(f.valency_counts == std::map<int, int>{{4, 1}});
  CHECK(f.arc_count() == 2);
  for (const auto& a : f.arcs) {
    CHECK(a.bands() == 2);
    CHECK(a.is_loop());
  }

  auto p = arc_decomposition(seifert_graph(parse_pd(fixtures::kPretzel333)));
  CHECK(p.fat_count() == 2);
  CHECK(p.valency_counts == std::map<int, int>{{3, 2}});
  CHECK(p.arc_count() == 3);
  for (const auto& a : p.arcs) {
    CHECK(a.bands() == 3);
    CHECK_FALSE(a.is_loop());
  }
}

TEST_CASE("arc decomposition: ids, chain order and slots") {
  Diagram d = parse_pd(fixtures::kPretzel333);
  auto g = seifert_graph(d);
  auto arcs = arc_decomposition(g);
  auto arc_of = arcs.arc_of_crossing(d.num_crossings());
  for (int c = 0; c < d.num_crossings(); ++c) CHECK(arc_of[c] >= 0);
  int last_min = -1;
  for (const auto& a : arcs.arcs) {
    int m = *std::min_element(a.crossings.begin(), a.crossings.end());
    CHECK(m > last_min);
    last_min = m;
    CHECK(a.start_vertex < a.end_vertex);
    // Consecutive bands share a valency-2 circle.
    for (std::size_t k = 0; k + 1 < a.crossings.size(); ++k) {
      const auto& e1 = g.edges[a.crossings[k]];
      const auto& e2 = g.edges[a.crossings[k + 1]];
      bool share = false;
      for (int x : e1.circles)
        for (int y : e2.circles) share |= x == y && g.valency[x] == 2;
      CHECK(share);
    }
    const auto& e = g.edges[a.crossings.front()];
    int k = e.circles[0] == a.start_vertex ? 0 : 1;
    CHECK(e.circles[k] == a.start_vertex);
    CHECK(a.start_slots == e.slots[k]);
    CHECK((a.start_slots[0] + 1) % 4 == a.start_slots[1]);
  }
}

TEST_CASE("arc decomposition: error outcomes") {
  CHECK_THROWS_AS(arc_decomposition(seifert_graph(parse_pd(fixtures::kTrefoilKink))), NugatoryPresentError);
  // (2,4) torus link: two circles, four bands.
  Diagram t24 = parse_pd("X(1,5,2,8) X(5,3,6,2) X(3,7,4,6) X(7,1,8,4)");
  CHECK_THROWS_AS(arc_decomposition(seifert_graph(t24)), TorusTwoBridgeCase);
  CHECK_THROWS_AS(arc_decomposition(seifert_graph(parse_pd(""))), TorusTwoBridgeCase);
}

TEST_CASE("census: genus, orientation compatibility, crossing-change invariance") {
  auto table = census_table();
  auto diagrams = parse_pd_lines(slurp(KNOTVOL_DATA_DIR "/census/knots_le10.pd"));
  REQUIRE(diagrams.size() == table.size());
  std::mt19937 rng(11);
  int alternating = 0;
  for (const auto& d : diagrams) {
    CAPTURE(d.name());
    const auto& row = table.at(d.name());
    auto g = seifert_graph(d);
    int twice = d.num_crossings() - g.num_vertices() + 1;
    CHECK(twice % 2 == 0);
    for (const auto& e : g.edges) {
      CHECK(e.circles[0] != e.circles[1]);
      CHECK(band_respects_orientation(g, e));
    }
    if (row.alternating) {
      ++alternating;
      CHECK(canonical_genus(d) == row.genus);
    }
    if (d.num_crossings() > 0) {
      Diagram f = flip_crossing(d, static_cast<int>(rng() % d.num_crossings()));
      auto gf = seifert_graph(f);
      CHECK(gf.valency == g.valency);
      CHECK(canonical_genus(f) == canonical_genus(d));
    }
    try {
      auto arcs = arc_decomposition(g);
      int sum = 0;
      for (auto [i, n] : arcs.valency_counts) sum += i * n;
      CHECK(sum == 2 * arcs.arc_count());
    } catch (const DiagramError&) {
    }
  }
  CHECK(alternating == 197);
}

TEST_CASE("nesting depth follows parent links") {
  for (const char* text : {fixtures::kTrefoil, fixtures::kFigureEight, fixtures::kGranny, fixtures::kPretzel333}) {
    auto s = smooth(parse_pd(text));
    for (const auto& c : s.circles) {
      if (c.parent < 0)
        CHECK(c.depth == 0);
      else
        CHECK(c.depth == s.circles[c.parent].depth + 1);
    }
  }
}

TEST_CASE("DOT export") {
  std::string dot = to_dot(seifert_graph(parse_pd(fixtures::kTrefoil)), "3_1");
  CHECK(dot.find("graph \"3_1\"") == 0);
  CHECK(dot.find("valency 3") != std::string::npos);
  CHECK(dot.find("c0 -- c1") != std::string::npos);
}
