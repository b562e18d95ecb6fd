#include "doctest.h"
#include "fixtures.hpp"
#include "knotvol/diagram.hpp"
#include "knotvol/errors.hpp"
#include "knotvol/generate.hpp"
#include "knotvol/seifert.hpp"

using namespace knotvol;

namespace {

// Same unoriented knot diagram up to sphere homeomorphism (either
// orientation of the knot, either orientation of the sphere).
bool same_up_to_symmetry(const Diagram& a, const Diagram& b) {
  Diagram cb = canonical(b);
  for (const Diagram& v : {a, reverse(a)})
    if (canonical(v) == cb) return true;
  return false;
}

}  // namespace

TEST_CASE("closed braids") {
  Diagram t = closed_braid(2, {1, 1, 1});
  CHECK(t.num_components() == 1);
  CHECK(writhe(t) == 3);
  CHECK(same_up_to_symmetry(t, parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")));
  CHECK(same_up_to_symmetry(closed_braid(2, {-1, -1, -1}), parse_pd(fixtures::kTrefoil)));

  Diagram f = closed_braid(3, {1, -2, 1, -2});
  CHECK(f.num_components() == 1);
  CHECK(writhe(f) == 0);
  CHECK(same_up_to_symmetry(f, parse_pd(fixtures::kFigureEight)));

  CHECK(closed_braid(2, {1, 1}).num_components() == 2);
  CHECK_THROWS_AS(closed_braid(3, {1, 1, 1}), DisconnectedError);
}

TEST_CASE("pretzel diagrams") {
  Diagram p = pretzel({3, 3, 3});
  CHECK(p.num_crossings() == 9);
  CHECK(p.num_components() == 1);
  CHECK(writhe(p) == 9);
  CHECK(is_alternating(p));
  Diagram ki = parse_pd(fixtures::kPretzel333);
  CHECK((same_up_to_symmetry(p, ki) || same_up_to_symmetry(p, mirror(ki))));
  CHECK(writhe(pretzel({-3, -3, -3})) == -9);
  Diagram q = pretzel({5, 3, 3});
  CHECK(q.num_crossings() == 11);
  CHECK(canonical_genus(q) == 1);
  // P(2,2,2) pairs up into a 3-component link.
  CHECK(pretzel({2, 2, 2}).num_components() == 3);
}

TEST_CASE("kinks and connected sums") {
  Diagram t = parse_pd(fixtures::kTrefoil);
  for (int form = 0; form < 4; ++form) {
    Diagram k = add_kink(t, 3, form);
    CHECK(k.num_crossings() == 4);
    CHECK(canonical_genus(k) == 1);
    CHECK(add_kink(Diagram(), 1, form).num_crossings() == 1);
  }
  Diagram g = connected_sum(t, 2, t, 5);
  CHECK(g.num_crossings() == 6);
  CHECK(g.num_components() == 1);
  CHECK(canonical_genus(g) == 2);
}

TEST_CASE("random knot diagrams are valid, bounded and reproducible") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 500; ++i) {
    Diagram d = random_knot_diagram(a, 16);
    CHECK(d.num_components() == 1);
    CHECK(d.num_crossings() >= 1);
    CHECK(d.num_crossings() <= 16);
    CHECK(d == random_knot_diagram(b, 16));
  }
}
