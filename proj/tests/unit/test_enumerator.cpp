#include <doctest.h>

#include <algorithm>
#include <set>

#include "cubegroup/enumerator.hpp"
#include "cubegroup/errors.hpp"
#include "cubegroup/graphcore.hpp"
#include "fixtures.hpp"

using namespace cubegroup;

TEST_CASE("involution counts match brute force") {
  for (std::size_t m = 0; m <= 7; ++m) {
    CHECK(involution_count(m) == oracle::count_involutions(m));
  }
  CHECK(involution_count(4) == 10);
}

TEST_CASE("population sizes") {
  CHECK(enumerate_decorated_graphs(1).size() == 1);
  CHECK(enumerate_decorated_graphs(2).size() == 1);
  // I(2) = 2 choices per generator
  CHECK(oracle::count_involutions(2) == 2);
  CHECK(enumerate_decorated_graphs(3).size() == 8);
  for (std::size_t rank = 1; rank <= 5; ++rank) {
    std::size_t expected = 1;
    for (std::size_t s = 0; s < rank; ++s) expected *= oracle::count_involutions(rank - 1);
    CHECK(enumerate_decorated_graphs(rank).size() == expected);
  }
}

TEST_CASE("enumeration is exhaustive, duplicate-free and lexicographic") {
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    const DecoratedGraphEnumerator population(rank);
    std::vector<std::vector<Permutation>> seen;
    for (std::size_t i = 0; i < population.size(); ++i) seen.push_back(population.at(i).involutions());
    CHECK(std::is_sorted(seen.begin(), seen.end()));
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    for (const auto& js : seen)
      for (Label s = 0; s < rank; ++s) CHECK(js[s](s) == s);
  }
  std::size_t visited = 0;
  enumerate_decorated_graphs(3).for_each([&](std::size_t, const DecoratedGraph&) { ++visited; });
  CHECK(visited == 8);
}

TEST_CASE("rank cap") {
  CHECK_THROWS_AS(DecoratedGraphEnumerator(0), CubeError);
  CHECK_THROWS_AS(DecoratedGraphEnumerator(6), CubeError);
  try {
    sweep(6);
  } catch (const CubeError& e) {
    CHECK(e.kind() == ErrorKind::RankCapExceeded);
  }
}

TEST_CASE("sweep reports") {
  const auto r1 = sweep(1);
  CHECK(r1.total_graphs == 1);
  CHECK(r1.admissible_count == 1);
  CHECK(r1.verified_count == 1);
  CHECK(r1.passed());

  const auto r2 = sweep(2);
  CHECK(r2.admissible_count == 1);
  CHECK(r2.verified_count == 1);

  // admissible counts frozen from an independent unrolling oracle
  std::size_t oracle_count = 0;
  const DecoratedGraphEnumerator population(3);
  for (std::size_t i = 0; i < population.size(); ++i)
    oracle_count += oracle::admissible(fixtures::raw(population.at(i))) ? 1 : 0;
  CHECK(oracle_count == 4);
  SweepOptions planar;
  planar.all_planar_orderings = true;
  const auto r3 = sweep(3, planar);
  CHECK(r3.total_graphs == 8);
  CHECK(r3.admissible_count == 4);
  CHECK(r3.passed());

  // the d4 graph and the all-identity graph are both members
  bool saw_d4 = false, saw_trivial = false;
  for (std::size_t i = 0; i < population.size(); ++i) {
    const auto g = population.at(i);
    saw_d4 = saw_d4 || g == fixtures::d4();
    saw_trivial = saw_trivial || g == DecoratedGraph::trivial({"a", "b", "c"});
  }
  CHECK(saw_d4);
  CHECK(saw_trivial);
}

TEST_CASE("parallel sweeps and index ranges reduce deterministically") {
  SweepOptions serial;
  SweepOptions parallel;
  parallel.jobs = 3;
  const auto x = sweep(4, serial);
  const auto y = sweep(4, parallel);
  CHECK(x.total_graphs == 256);
  CHECK(x.admissible_count == 22);
  CHECK(x.passed());
  CHECK(y.total_graphs == x.total_graphs);
  CHECK(y.admissible_count == x.admissible_count);
  CHECK(y.verified_count == x.verified_count);

  SweepOptions first_half, second_half;
  first_half.count = 100;
  second_half.first = 100;
  const auto p = sweep(4, first_half);
  const auto q = sweep(4, second_half);
  CHECK(p.total_graphs == 100);
  CHECK(p.total_graphs + q.total_graphs == 256);
  CHECK(p.admissible_count + q.admissible_count == 22);
}
