#include <doctest.h>

#include <map>
#include <set>

#include "cubegroup/enumerator.hpp"
#include "cubegroup/errors.hpp"
#include "cubegroup/graphcore.hpp"
#include "fixtures.hpp"

using namespace cubegroup;

namespace {

std::vector<Label> terms(const Trajectory& t) { return {t.terms.begin(), t.terms.end()}; }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const CubeError& e) {
    return e.kind();
  }
  FAIL("expected a CubeError");
  return ErrorKind::InternalConsistency;
}

// a..e -> 0..4
constexpr Label a = 0, b = 1, c = 2, d = 3, e = 4;

}  // namespace

TEST_CASE("trajectory examples") {
  const auto simplex = fixtures::five_simplex();
  const auto d4 = fixtures::d4();

  auto t = trajectory(simplex, a, b);
  CHECK(terms(t) == std::vector<Label>{a, b, c, d, a, b});
  CHECK(t.kind == TrajectoryKind::FourCycle);

  t = trajectory(d4, a, b);
  CHECK(terms(t) == std::vector<Label>{a, b, a, c, a, b});
  CHECK(t.kind == TrajectoryKind::Angle);

  t = trajectory(simplex, a, c);
  CHECK(terms(t) == std::vector<Label>{a, c, a, c, a, c});
  CHECK(t.kind == TrajectoryKind::SingleEdge);
}

TEST_CASE("trajectory errors") {
  const auto d4 = fixtures::d4();
  CHECK(kind_of([&] { trajectory(d4, a, a); }) == ErrorKind::DistinctLabelsRequired);
  CHECK(kind_of([&] { trajectory(d4, a, 7); }) == ErrorKind::UnknownLabel);
}

TEST_CASE("holonomy examples") {
  CHECK(holonomy(fixtures::five_simplex(), a, b).is_identity());
  CHECK(holonomy(fixtures::d4(), b, c).is_identity());

  // b, a, c, a, b, c, ...: (s5, s6) = (b, c) differs from (b, a)
  const auto bad = fixtures::non_admissible();
  const auto unrolled = oracle::unroll(fixtures::raw(bad), b, a, 12);
  CHECK_FALSE(oracle::periodic4(unrolled));
  CHECK(terms(trajectory(bad, b, a)) == std::vector<Label>{b, a, c, a, b, c});
  CHECK(kind_of([&] { holonomy(bad, b, a); }) == ErrorKind::NotFourPeriodic);
}

TEST_CASE("admissibility examples") {
  CHECK(is_admissible(fixtures::d4()).admissible);
  CHECK(is_admissible(fixtures::five_simplex()).admissible);

  const auto report = is_admissible(fixtures::non_admissible());
  CHECK_FALSE(report.admissible);
  REQUIRE_FALSE(report.failures.empty());
  bool witness = false;
  for (const auto& f : report.failures) {
    if (f.first == b && f.second == a) {
      witness = f.kind == AdmissibilityFailureKind::NotFourPeriodic;
    }
  }
  CHECK(witness);
}

TEST_CASE("holonomy failures are reported with their composite") {
  // Find a rank-4 graph with a 4-periodic trajectory that has holonomy.
  const DecoratedGraphEnumerator population(4);
  bool found = false;
  for (std::size_t i = 0; i < population.size() && !found; ++i) {
    const auto g = population.at(i);
    const auto report = is_admissible(g);
    for (const auto& f : report.failures) {
      if (f.kind != AdmissibilityFailureKind::Holonomy) continue;
      found = true;
      REQUIRE(f.holonomy.has_value());
      CHECK_FALSE(f.holonomy->is_identity());
      CHECK(*f.holonomy == holonomy(g, f.first, f.second));
    }
  }
  CHECK(found);
}

TEST_CASE("edge partition examples") {
  using G = EdgeGroup;
  const std::vector<G> simplex{
      {TrajectoryKind::FourCycle, {a, b, c, d}},
      {TrajectoryKind::Angle, {a, e, c}},
      {TrajectoryKind::Angle, {b, e, d}},
      {TrajectoryKind::SingleEdge, {a, c}},
      {TrajectoryKind::SingleEdge, {b, d}},
  };
  CHECK(edge_partition(fixtures::five_simplex()) == simplex);

  const std::vector<G> d4{{TrajectoryKind::Angle, {b, a, c}}, {TrajectoryKind::SingleEdge, {b, c}}};
  CHECK(edge_partition(fixtures::d4()) == d4);

  const std::vector<G> square{{TrajectoryKind::SingleEdge, {a, b}}};
  CHECK(edge_partition(DecoratedGraph::trivial({"a", "b"})) == square);

  CHECK(kind_of([] { edge_partition(fixtures::non_admissible()); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("presentation relators") {
  const std::vector<Word> d4{{a, a}, {b, b}, {c, c}, {a, b, a, c}, {b, c, b, c}};
  CHECK(presentation_relators(fixtures::d4()) == d4);

  const auto simplex = presentation_relators(fixtures::five_simplex());
  CHECK(std::find(simplex.begin(), simplex.end(), Word{a, b, c, d}) != simplex.end());

  CHECK(presentation_relators(DecoratedGraph::trivial({"a"})) == std::vector<Word>{{a, a}});
  CHECK(kind_of([] { presentation_relators(fixtures::non_admissible()); }) ==
        ErrorKind::NotAdmissible);
}

TEST_CASE("canonical cyclic words") {
  CHECK(canonical_cyclic_word({c, a, b, a}) == Word{a, b, a, c});
  CHECK(canonical_cyclic_word({a, c, a, b}) == Word{a, b, a, c});
  CHECK(canonical_cyclic_word({d, c, b, a}) == Word{a, b, c, d});
}

TEST_CASE("graphcore properties over every graph of rank <= 4") {
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    const DecoratedGraphEnumerator population(rank);
    for (std::size_t i = 0; i < population.size(); ++i) {
      const auto g = population.at(i);
      const auto js = fixtures::raw(g);
      const bool admissible = is_admissible(g).admissible;
      REQUIRE(admissible == oracle::admissible(js));

      for (Label x = 0; x < rank; ++x) {
        for (Label y = 0; y < rank; ++y) {
          if (x == y) continue;
          const auto t = trajectory(g, x, y);
          REQUIRE(t.periodic() == oracle::periodic4(oracle::unroll(js, x, y, 40)));
          // reversal closure
          const auto r = trajectory(g, y, x);
          REQUIRE(r.periodic() == t.periodic());
          REQUIRE(r.kind == t.kind);
          if (admissible) {
            REQUIRE(t.terms[4] == x);
            REQUIRE(t.terms[5] == y);
            REQUIRE(holonomy(g, x, y).is_identity());
          }
        }
      }

      if (!admissible) continue;
      std::map<std::pair<Label, Label>, int> cover;
      for (const auto& group : edge_partition(g)) {
        const auto edges = group.edges();
        const std::size_t expected =
            group.kind == TrajectoryKind::FourCycle ? 4 : group.kind == TrajectoryKind::Angle ? 2 : 1;
        REQUIRE(edges.size() == expected);
        for (const auto& edge : edges) ++cover[edge];
      }
      REQUIRE(cover.size() == rank * (rank - 1) / 2);
      for (const auto& [edge, count] : cover) REQUIRE(count == 1);
    }
  }
}
