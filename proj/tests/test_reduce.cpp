#include <fstream>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "knotvol/errors.hpp"
#include "knotvol/generate.hpp"
#include "knotvol/reduce.hpp"

using namespace knotvol;

namespace {

std::vector<Diagram> census() {
  std::ifstream in(KNOTVOL_DATA_DIR "/census/knots_le10.pd");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_pd_lines(ss.str());
}

std::vector<int> kept(const ReductionRecord& r) {
  std::vector<int> out;
  for (const auto& e : r.ledger) out.push_back(e.kept);
  return out;
}

std::vector<int> n_primes(const ReductionRecord& r) {
  std::vector<int> out;
  for (const auto& e : r.ledger) out.push_back(e.n_prime);
  return out;
}

void check_ledger(const ReductionRecord& rec) {
  for (const auto& e : rec.ledger) {
    CHECK(e.bands == e.kept + 2 * std::abs(e.n_prime));
    CHECK((e.bands - e.kept) % 2 == 0);
    CHECK(e.n_prime * e.epsilon >= 0);
    int changes = 0;
    for (std::size_t k = 0; k < e.crossings.size(); ++k) changes += (e.signs_k[k] - e.signs_kprime[k]) / 2;
    CHECK(e.n == e.n_prime + changes);
  }
  CHECK(is_alternating(rec.k0));
  CHECK(canonical_genus(rec.k0) == rec.genus);
  CHECK(canonical_genus(rec.reduced) == rec.genus);
}

}  // namespace

TEST_CASE("alternate") {
  Diagram t = parse_pd(fixtures::kTrefoil);
  CHECK(alternate(t) == t);
  CHECK(alternate(flip_crossing(t, 1)) == t);
  CHECK(alternate(parse_pd(fixtures::kFigureEight)) == parse_pd(fixtures::kFigureEight));
  int non_alternating = 0;
  for (const auto& d : census()) {
    if (d.num_crossings() == 0) continue;
    Diagram a = alternate(d);
    CHECK(is_alternating(a));
    CHECK(alternate(a) == a);
    CHECK(a.num_crossings() == d.num_crossings());
    CHECK(canonical_genus(a) == canonical_genus(d));
    if (!is_alternating(d)) {
      ++non_alternating;
    } else {
      CHECK(a == d);
    }
  }
  CHECK(non_alternating > 0);
  CHECK_THROWS_AS(alternate(parse_pd("X(1,3,2,4) X(3,1,4,2)")), MultiComponentError);
}

TEST_CASE("alternate: ties send the first edge over") {
  // Two flipped crossings out of four: both assignments agree at two.
  Diagram f = parse_pd(fixtures::kFigureEight);
  Diagram g = flip_crossing(flip_crossing(f, 0), 2);
  Diagram a = alternate(g);
  CHECK(is_alternating(a));
  CHECK(a.passages(0).front().over);
}

TEST_CASE("prime_reduce") {
  Diagram granny = parse_pd(fixtures::kGranny);
  Diagram p = prime_reduce(granny);
  CHECK(p.num_crossings() == 3);
  CHECK(canonical(p) == canonical(parse_pd(fixtures::kTrefoil)));
  CHECK(prime_reduce(parse_pd(fixtures::kTrefoil)) == parse_pd(fixtures::kTrefoil));
  CHECK(canonical(prime_reduce(parse_pd(fixtures::kTrefoilKink))) == canonical(parse_pd(fixtures::kTrefoil)));
  CHECK_FALSE(find_prime_cut(parse_pd(fixtures::kFigureEight)));
  CHECK_FALSE(find_prime_cut(parse_pd(fixtures::kPretzel333)));

  auto cut = find_prime_cut(granny);
  REQUIRE(cut);
  auto a = cut_summand(granny, *cut, true);
  auto b = cut_summand(granny, *cut, false);
  CHECK(a.diagram.num_crossings() + b.diagram.num_crossings() == 6);
  for (int c = 0; c < 6; ++c) CHECK(((a.index_map[c] >= 0) != (b.index_map[c] >= 0)));
}

TEST_CASE("prime_reduce terminates with fewer crossings each split") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Diagram d = alternate(random_knot_diagram(rng, 14));
    while (auto cut = find_prime_cut(d)) {
      Diagram next = cut_summand(d, *cut, keep_first_summand(d, *cut)).diagram;
      CHECK(next.num_crossings() < d.num_crossings());
      CHECK(canonical_genus(next) <= canonical_genus(d));
      d = next;
    }
  }
}

TEST_CASE("detect_torus_2k") {
  CHECK(detect_torus_2k(parse_pd(fixtures::kTrefoil)));
  CHECK_FALSE(detect_torus_2k(parse_pd(fixtures::kFigureEight)));
  CHECK_FALSE(detect_torus_2k(parse_pd("")));
  CHECK(detect_torus_2k(closed_braid(2, {1, 1, 1, 1, 1})));
  CHECK_FALSE(detect_torus_2k(closed_braid(2, {1, -1, 1})));
}

TEST_CASE("remove_nugatory") {
  CHECK(canonical(remove_nugatory(parse_pd(fixtures::kTrefoilKink))) == canonical(parse_pd(fixtures::kTrefoil)));
  CHECK(remove_nugatory(parse_pd(fixtures::kTrefoil)) == parse_pd(fixtures::kTrefoil));
  CHECK(remove_nugatory(parse_pd("X(1,2,2,1)")).num_crossings() == 0);
  Diagram twice = add_kink(add_kink(parse_pd(fixtures::kFigureEight), 2, 1), 5, 3);
  Diagram r = remove_nugatory(twice);
  CHECK(r.num_crossings() == 4);
  CHECK(canonical_genus(r) == canonical_genus(twice));
}

TEST_CASE("collapse_arcs: figure-8") {
  auto rec = collapse_arcs(parse_pd(fixtures::kFigureEight));
  CHECK(canonical(rec.k0) == canonical(parse_pd(fixtures::kFigureEight)));
  CHECK(kept(rec) == std::vector<int>{2, 2});
  CHECK(n_primes(rec) == std::vector<int>{0, 0});
  CHECK_FALSE(rec.insurance_arc);
  check_ledger(rec);
}

TEST_CASE("collapse_arcs: P(3,3,3) and P(5,3,3) take the insurance arc") {
  auto p = collapse_arcs(pretzel({3, 3, 3}));
  CHECK(kept(p) == std::vector<int>{3, 1, 1});
  REQUIRE(p.insurance_arc);
  CHECK(*p.insurance_arc == 0);
  CHECK(p.k0.num_crossings() == 5);
  CHECK(n_primes(p) == std::vector<int>{0, 1, 1});
  check_ledger(p);

  auto q = collapse_arcs(pretzel({5, 3, 3}));
  CHECK(kept(q) == std::vector<int>{3, 1, 1});
  CHECK(q.k0.num_crossings() == 5);
  CHECK(n_primes(q) == std::vector<int>{1, 1, 1});
  check_ledger(q);

  // Left-handed twists carry negative deficits.
  auto m = collapse_arcs(pretzel({-3, -3, -3}));
  CHECK(n_primes(m) == std::vector<int>{0, -1, -1});

  // KnotInfo's diagram of the same knot.
  auto k = collapse_arcs(parse_pd(fixtures::kPretzel333));
  CHECK(kept(k) == std::vector<int>{3, 1, 1});
}

TEST_CASE("collapse_arcs: preconditions") {
  CHECK_THROWS_AS(collapse_arcs(parse_pd(fixtures::kTrefoil)), PreconditionError);
  CHECK_THROWS_AS(collapse_arcs(parse_pd(fixtures::kTrefoilKink)), PreconditionError);
  CHECK_THROWS_AS(collapse_arcs(parse_pd(fixtures::kGranny)), PreconditionError);
  CHECK_THROWS_AS(collapse_arcs(flip_crossing(parse_pd(fixtures::kFigureEight), 0)), PreconditionError);
  CHECK_THROWS_AS(collapse_arcs(parse_pd("")), PreconditionError);
}

TEST_CASE("reduce: degenerate outcomes and provenance") {
  auto g = reduce(parse_pd(fixtures::kGranny));
  REQUIRE(g.outcome);
  CHECK(g.outcome->kind == NonHyperbolicOutcome::Kind::Torus2k);
  CHECK(std::abs(g.outcome->k) == 3);
  int splits = 0;
  for (const auto& line : g.provenance) splits += line.rfind("prime split", 0) == 0;
  CHECK(splits == 1);

  auto u = reduce(parse_pd(""));
  REQUIRE(u.outcome);
  CHECK(u.outcome->kind == NonHyperbolicOutcome::Kind::Unknot);
  CHECK(reduce(parse_pd("X(1,2,2,1)")).outcome->kind == NonHyperbolicOutcome::Kind::Unknot);
  CHECK(reduce(parse_pd(fixtures::kTrefoil)).outcome->kind == NonHyperbolicOutcome::Kind::Torus2k);

  auto f = reduce(parse_pd(fixtures::kFigureEight));
  REQUIRE(f.record);
  CHECK(f.record->input_alternating());
}

TEST_CASE("reduce: ledger invariants over census and random diagrams") {
  std::vector<Diagram> inputs = census();
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) inputs.push_back(random_knot_diagram(rng, 16));
  int records = 0;
  for (const auto& d : inputs) {
    CAPTURE(d.to_line());
    auto r = reduce(d);
    CHECK(r.record.has_value() != r.outcome.has_value());
    if (!r.record) continue;
    ++records;
    const auto& rec = *r.record;
    check_ledger(rec);
    // Insurance keeps the fat circles and adds two chain circles.
    auto k0_graph = seifert_graph(rec.k0);
    auto k0_arcs = arc_decomposition(k0_graph);
    CHECK(k0_arcs.fat_count() == rec.arcs.fat_count());
    CHECK(k0_arcs.valency_counts == rec.arcs.valency_counts);
    int chain_circles = 0;
    for (const auto& e : rec.ledger) chain_circles += e.kept - 1;
    CHECK(k0_graph.num_vertices() == rec.arcs.fat_count() + chain_circles);
    CHECK_FALSE(find_prime_cut(rec.k0));
  }
  CHECK(records > 100);
}
