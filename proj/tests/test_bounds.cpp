#include <cmath>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "knotvol/bounds.hpp"
#include "knotvol/errors.hpp"
#include "knotvol/generate.hpp"

using namespace knotvol;

namespace {

// Cl2(pi/3) = sum sin(k pi/3) / k^2, grouped in blocks of six.
double block_series_v0(long blocks) {
  double s = 0;
  for (long m = blocks - 1; m >= 0; --m) {
    double b = 6.0 * m;
    s += 1 / ((b + 1) * (b + 1)) + 1 / ((b + 2) * (b + 2)) - 1 / ((b + 4) * (b + 4)) - 1 / ((b + 5) * (b + 5));
  }
  return std::sqrt(3.0) / 2 * s;
}

struct Artifacts {
  ReductionRecord rec;
  AugmentedLink l, li;
};

Artifacts run(const Diagram& d) {
  auto r = reduce(d);
  REQUIRE(r.record);
  Artifacts a{*r.record, augment(*r.record), {}};
  a.li = improve(a.l, a.rec);
  return a;
}

}  // namespace

TEST_CASE("V0 against an independent series") {
  double oracle = block_series_v0(2'000'000);
  CHECK(std::abs(regular_ideal_tetrahedron_volume() - oracle) < 1e-10);
  CHECK(std::abs(kV0 - oracle) < 1e-10);
  CHECK(kV0 > 1.0);
  CHECK(kV0 < 1.015);
  CHECK(120 * kV0 <= 122);
  // Cl2 is odd and vanishes at pi.
  CHECK(std::abs(clausen2(std::acos(-1.0))) < 1e-12);
  CHECK(clausen2(-1.0) == doctest::Approx(-clausen2(1.0)));
  // Maximum of Cl2 at pi/3.
  CHECK(clausen2(1.0) < kV0);
  CHECK(clausen2(1.1) < kV0);
}

TEST_CASE("report: figure-8") {
  auto a = run(parse_pd(fixtures::kFigureEight));
  auto r = report(a.rec, a.l, a.li);
  CHECK(r.g == 1);
  CHECK(r.N == 1);
  CHECK(r.A == 2);
  CHECK(r.crossings_l == 12);
  CHECK(r.crossings_l_improved == 8);
  CHECK(r.all_pass());
  CHECK(r.volume_bound_raw == doctest::Approx(32.478).epsilon(1e-4));
  CHECK(r.volume_bound_linear == 122.0);
  CHECK(r.volume_bound_genus == doctest::Approx(120 * kV0));
  CHECK(tetrahedron_count_bound(a.li.diagram) == 32);
}

TEST_CASE("report: P(3,3,3)") {
  auto a = run(pretzel({3, 3, 3}));
  auto r = report(a.rec, a.l, a.li);
  CHECK(r.g == 1);
  CHECK(r.N == 2);
  CHECK(r.A == 3);
  CHECK(r.crossings_l == 17);
  CHECK(r.crossings_l_improved == 17);
  CHECK(r.all_pass());
  CHECK(r.volume_bound_raw == doctest::Approx(69.016).epsilon(1e-4));
  CHECK(tetrahedron_count_bound(a.l.diagram) == 68);
  CHECK(tetrahedron_count_bound(parse_pd("")) == 0);
}

TEST_CASE("report: inconsistent artifacts") {
  auto a = run(parse_pd(fixtures::kFigureEight));
  a.rec.genus = 2;
  CHECK_THROWS_AS(report(a.rec, a.l, a.li), InconsistencyError);
}

TEST_CASE("classify_genus_one") {
  auto f = classify_genus_one(parse_pd(fixtures::kFigureEight));
  CHECK(f.kind == GenusOneClass::Kind::TwoBridge);
  CHECK(f.describe() == "TwoBridge(2,2)");
  auto p = classify_genus_one(pretzel({3, 3, 3}));
  CHECK(p.kind == GenusOneClass::Kind::OddPretzel);
  CHECK(p.describe() == "OddPretzel(3,3,3)");
  CHECK(classify_genus_one(pretzel({5, 3, 7})).describe() == "OddPretzel(5,3,7)");
  CHECK_THROWS_AS(classify_genus_one(parse_pd(fixtures::kTrefoil)), PreconditionError);
  CHECK_THROWS_AS(classify_genus_one(parse_pd(fixtures::kGranny)), PreconditionError);
  CHECK_THROWS_AS(classify_genus_one(flip_crossing(parse_pd(fixtures::kFigureEight), 1)), PreconditionError);
}
