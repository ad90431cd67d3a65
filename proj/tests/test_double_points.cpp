#include "dpl/double_points.hpp"
#include "dpl/error.hpp"
#include "dpl/planar_curve.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace dpl;
using oracle::q;

namespace {

PLCircleMap tent() { return PLCircleMap::make({{q("0"), q("0")}, {q("1/2"), q("3/4")}}, 0); }

std::vector<PlanePoint> polygon(std::vector<std::pair<int, int>> pts) {
  std::vector<PlanePoint> out;
  for (auto [x, y] : pts) out.push_back({Rational(x), Rational(y)});
  return out;
}

}  // namespace

TEST_CASE("d-cover double-point census") {
  for (std::int64_t d = 2; d <= 12; ++d) {
    const DoublePointCurve c = sigma(covering_map(d));
    REQUIRE(c.components.size() == static_cast<std::size_t>(d - 1));
    std::size_t invariant = 0;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
      CHECK(c.components[i].compact);
      CHECK(c.components[i].p1_degree == 1);
      CHECK(c.components[i].p2_degree == 1);
      invariant += c.tau_invariant(i);
    }
    CHECK(invariant == (d % 2 == 0 ? 1u : 0u));
    CHECK(hopf_invariant(c) == (d % 2 == 0 ? 1 : 0));
    // The component through (0, j/d) is the graph of x -> x + j/d; tau sends it to j -> d - j.
    std::set<std::size_t> seen;
    for (std::int64_t j = 1; j < d; ++j) {
      Rational y(static_cast<long>(j), static_cast<long>(d));
      y.canonicalize();
      auto cj = component_of(c, Rational(0), y);
      REQUIRE(cj);
      seen.insert(*cj);
      Rational y2(static_cast<long>(d - j), static_cast<long>(d));
      y2.canonicalize();
      CHECK(c.components[*cj].tau == *component_of(c, Rational(0), y2));
      CHECK(component_of(c, q("1/7"), q("1/7") + y - (q("1/7") + y >= 1 ? 1 : 0)) == cj);
    }
    CHECK(seen.size() == static_cast<std::size_t>(d - 1));
  }
}

TEST_CASE("tent double points form two open arcs swapped by tau") {
  // Oracle: the lift stays in [0, 3/4], so f(x) = f(y) forces y = 1 - x.
  const DoublePointCurve c = sigma(tent());
  REQUIRE(c.components.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK_FALSE(c.components[i].compact);
    CHECK(c.components[i].p1_degree == 0);
  }
  CHECK(c.components[0].tau == 1);
  CHECK(c.components[1].tau == 0);
  CHECK(hopf_invariant(c) == 0);
  const auto a = component_of(c, q("1/8"), q("7/8"));
  const auto b = component_of(c, q("7/8"), q("1/8"));
  REQUIRE(a);
  REQUIRE(b);
  CHECK(*a != *b);
  CHECK(c.components[*a].tau == *b);
  CHECK_FALSE(component_of(c, q("1/8"), q("1/2")));
  REQUIRE(c.closures.size() == 1);
  CHECK(c.closures[0].orientable);
}

TEST_CASE("projection degrees equal signed sheet counts over a vertical circle") {
  // Oracle: the curve crosses {x0} x S^1 at (x0, y) for every other point y of
  // the fiber through x0; each crossing contributes the slope sign at y.
  std::mt19937_64 rng(17);
  int compared = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const PLCircleMap f = random_map(seed, 10, 5);
    const DoublePointCurve c = sigma(f);
    Rational x0;
    for (;;) {
      x0 = Rational(static_cast<long>(rng() % 1009), 1009);
      x0.canonicalize();
      if (f.is_regular_value(f.evaluate(Angle(x0)))) break;
    }
    const Rational value = f.evaluate(Angle(x0)).value();
    std::map<std::size_t, std::int64_t> signed_count;
    std::map<std::size_t, std::int64_t> hits;
    for (auto& [y, s] : oracle::fiber(f, value)) {
      if (y == x0) continue;
      auto comp = component_of(c, x0, y);
      REQUIRE(comp);
      signed_count[*comp] += s;
      ++hits[*comp];
      CHECK(component_of(c, y, x0) == std::optional<std::size_t>(c.components[*comp].tau));
    }
    for (std::size_t i = 0; i < c.components.size(); ++i) {
      const SigmaComponent& s = c.components[i];
      CHECK(c.components[s.tau].tau == i);
      CHECK(s.p2_degree == c.components[s.tau].p1_degree);
      if (!s.compact) continue;
      CHECK(s.p1_degree == signed_count[i]);
      CHECK((hits[i] - s.p1_degree) % 2 == 0);
      ++compared;
    }
  }
  CHECK(compared > 50);
}

TEST_CASE("projection degree bound for non-negative degree") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const PLCircleMap f = random_map(seed, 12, 5);
    const DoublePointCurve c = sigma(f);
    for (const SigmaComponent& s : c.components) {
      const bool ok = (0 <= s.p1_degree && s.p1_degree < f.degree()) || (s.p1_degree == 0 && f.degree() == 0);
      CHECK(ok);
    }
  }
}

TEST_CASE("hopf invariant is the parity of compact tau-invariant components") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const DoublePointCurve c = sigma(random_map(seed, 10, 5));
    int parity = 0;
    for (std::size_t i = 0; i < c.components.size(); ++i) parity ^= c.components[i].compact && c.tau_invariant(i);
    CHECK(hopf_invariant(c) == parity);
    int bits = 0;
    for (const ControlledBit& b : controlled_hopf(c)) bits ^= b.bit;
    CHECK(bits == parity);
  }
}

TEST_CASE("quotients, lifting and proposition 4") {
  const DoublePointCurve c2 = sigma(covering_map(2));
  REQUIRE(c2.quotients.size() == 1);
  CHECK(c2.quotients[0].compact);
  CHECK_FALSE(c2.quotients[0].cover_trivial);
  CHECK_FALSE(c2.quotients[0].maps_through_arc);
  const auto bits = controlled_hopf(c2);
  REQUIRE(bits.size() == 1);
  CHECK(bits[0].bit == 1);

  const DoublePointCurve c3 = sigma(covering_map(3));
  REQUIRE(c3.quotients.size() == 1);
  CHECK(c3.quotients[0].cover_trivial);
  CHECK(controlled_hopf(c3)[0].bit == 0);

  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const DoublePointCurve c = sigma(random_map(seed, 12, 5));
    const Proposition4Report r = proposition4_check(c);
    CHECK_FALSE(r.violation);
    for (const QuotientComponent& qc : c.quotients) {
      CHECK(qc.cover_trivial == (qc.members.size() == 2));
      if (qc.compact && qc.maps_through_arc) CHECK(qc.cover_trivial);
    }
  }
}

TEST_CASE("closures of the double-point curve are orientable") {
  // Gluing at a fold point always joins an arc to itself or to its tau image
  // with opposite orientations, so the reversal count is even.
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const DoublePointCurve c = sigma(random_map(seed, 12, 5));
    for (std::size_t k = 0; k < c.closures.size(); ++k) {
      CHECK(c.closures[k].diagonal_crossings % 2 == 0);
      CHECK(closure_orientability(c, k));
    }
  }
  const DoublePointCurve two_fold = sigma(PLCircleMap::make(
      {{q("0"), q("0")}, {q("1/4"), q("7/10")}, {q("1/2"), q("3/10")}, {q("3/4"), q("11/5")}}, 2));
  for (std::size_t k = 0; k < two_fold.closures.size(); ++k) CHECK(two_fold.closures[k].orientable);
}

TEST_CASE("realizability report examples") {
  const RealizabilityReport r2 = realizability_report(sigma(covering_map(2)));
  CHECK_FALSE(r2.criterion_pass);
  CHECK(r2.witness == std::optional<std::size_t>(0));
  CHECK(r2.classical_pass);
  CHECK_FALSE(r2.agreement);

  const RealizabilityReport r3 = realizability_report(sigma(covering_map(3)));
  CHECK(r3.criterion_pass);
  CHECK(r3.classical_pass);
  CHECK(r3.agreement);
  CHECK(r3.notes.empty());

  const DoublePointCurve id = sigma(covering_map(1));
  CHECK(id.components.empty());
  const RealizabilityReport r1 = realizability_report(id);
  CHECK(r1.criterion_pass);
  CHECK_FALSE(r1.classical_pass);
  CHECK_FALSE(r1.agreement);
  CHECK_FALSE(r1.notes.empty());
}

TEST_CASE("planar polygon crossing parity") {
  const auto figure8 = polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
  CHECK(planar_curve_hopf(figure8).crossings == 1);
  CHECK(planar_curve_hopf(figure8).parity == 1);
  const auto square = polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(planar_curve_hopf(square).parity == 0);
  const auto three = polygon({{4, 2}, {-6, 0}, {4, -3}, {0, 5}, {-6, 2}, {-3, 6}});
  CHECK(oracle::polygon_crossings(three) == 3);
  CHECK(planar_curve_hopf(three).crossings == 3);
  CHECK(planar_curve_hopf(three).parity == 1);
  const auto star = polygon({{0, 10}, {6, -8}, {-10, 3}, {10, 3}, {-6, -8}});
  CHECK(planar_curve_hopf(star).crossings == oracle::polygon_crossings(star));
  CHECK(planar_curve_hopf(star).crossings == 5);

  CHECK_THROWS_AS(planar_curve_hopf(polygon({{0, 0}, {1, 1}})), Error);
  // Vertex (1,0) lies on the edge from (0,0) to (2,0).
  CHECK_THROWS_AS(planar_curve_hopf(polygon({{0, 0}, {2, 0}, {2, 1}, {1, 0}, {1, -1}})), Error);
  // Three edges through the origin.
  CHECK_THROWS_AS(planar_curve_hopf(polygon({{-1, 0}, {1, 0}, {1, 1}, {-1, -1}, {0, -1}, {0, 1}})), Error);
}
