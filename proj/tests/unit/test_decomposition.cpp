#include <doctest.h>

#include <set>

#include "cubegroup/decomposition.hpp"
#include "cubegroup/enumerator.hpp"
#include "cubegroup/errors.hpp"
#include "fixtures.hpp"

using namespace cubegroup;

namespace {

constexpr Label a = 0, b = 1, c = 2, d = 3, e = 4, f = 5, g_ = 6, h = 7;

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const CubeError& err) {
    return err.kind();
  }
  FAIL("expected a CubeError");
  return ErrorKind::InternalConsistency;
}

OrbitTree leaf(Label s) { return {{s}, {}}; }

}  // namespace

TEST_CASE("permutation image of words") {
  const auto d4 = fixtures::d4();
  CHECK(perm_image(d4, {a}) == Permutation({0, 2, 1}));
  CHECK(perm_image(d4, {}).is_identity());
  // aba = c in the group; both images are j_c = id
  const auto group = generate_group(d4);
  REQUIRE(group.evaluate({a, b, a}) == group.evaluate({c}));
  CHECK(perm_image(d4, {a, b, a}) == perm_image(d4, {c}));
  CHECK(perm_image(d4, {c}).is_identity());
  CHECK(kind_of([&] { perm_image(d4, {5}); }) == ErrorKind::UnknownLabel);
}

TEST_CASE("orbit examples") {
  CHECK(orbits(fixtures::d4()).blocks == std::vector<std::vector<Label>>{{a}, {b, c}});
  CHECK(orbits(DecoratedGraph::trivial({"a", "b", "c"})).blocks ==
        std::vector<std::vector<Label>>{{a}, {b}, {c}});
  const auto simplex = orbits(fixtures::five_simplex());
  CHECK(simplex.blocks == oracle::orbits(fixtures::raw(fixtures::five_simplex())));
  CHECK(simplex.blocks == std::vector<std::vector<Label>>{{a, c}, {b, d}, {e}});
}

TEST_CASE("orbit trees") {
  const OrbitTree d4_tree{{a, b, c}, {leaf(a), {{b, c}, {leaf(b), leaf(c)}}}};
  CHECK(orbit_tree(fixtures::d4()) == d4_tree);
  CHECK(orbit_tree(DecoratedGraph::trivial({"a"})) == leaf(a));

  const auto simplex = orbit_tree(fixtures::five_simplex());
  CHECK(simplex.children.size() >= 2);
  CHECK(simplex.children.size() == oracle::orbits(fixtures::raw(fixtures::five_simplex())).size());

  CHECK(kind_of([] { orbit_tree(fixtures::non_admissible()); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("decomposition orderings") {
  CHECK(decomposition_ordering(orbit_tree(fixtures::d4())) == std::vector<Label>{a, b, c});
  CHECK(decomposition_ordering(leaf(d)) == std::vector<Label>{d});

  // The rank-8 orbit tree with T1 = {a,b,e,f}, T2 = {c,d,g,h}.
  const OrbitTree rank8{
      {a, b, c, d, e, f, g_, h},
      {{{a, b, e, f}, {{{a, e}, {leaf(a), leaf(e)}}, {{b, f}, {leaf(b), leaf(f)}}}},
       {{c, d, g_, h}, {{{c, g_}, {leaf(c), leaf(g_)}}, {{d, h}, {leaf(d), leaf(h)}}}}}};
  CHECK(decomposition_ordering(rank8) == std::vector<Label>{a, e, b, f, c, g_, d, h});

  // reversing every node's children
  const ChildOrder reversed = [](const OrbitTree& node) {
    std::vector<std::size_t> p(node.children.size());
    std::iota(p.rbegin(), p.rend(), std::size_t{0});
    return p;
  };
  CHECK(decomposition_ordering(rank8, reversed) == std::vector<Label>{h, d, g_, c, f, b, e, a});

  // 2 * (2*2) * (2*2) * ... : 2^7 planar drawings, all distinct
  CHECK(planar_orderings(rank8).size() == 128);
  CHECK(planar_orderings(orbit_tree(fixtures::d4())).size() == 4);

  const ChildOrder broken = [](const OrbitTree&) { return std::vector<std::size_t>{0, 0}; };
  CHECK(kind_of([&] { decomposition_ordering(orbit_tree(fixtures::d4()), broken); }) ==
        ErrorKind::Usage);
}

TEST_CASE("normal form of d4 under a, b, c") {
  const auto group = generate_group(fixtures::d4());
  const auto nf = normal_form(group, {a, b, c});
  // products 1, a, b, c, ab, ac, bc, abc (leftmost factor applied last)
  auto product = [&](Word w) { return group.evaluate(Word(w.rbegin(), w.rend())); };
  const std::vector<Word> listed{{}, {a}, {b}, {c}, {a, b}, {a, c}, {b, c}, {a, b, c}};
  std::set<std::size_t> elements;
  for (const auto& w : listed) elements.insert(product(w));
  CHECK(elements.size() == 8);
  CHECK(nf.element_of[0b000] == product({}));
  CHECK(nf.element_of[0b001] == product({a}));
  CHECK(nf.element_of[0b011] == product({a, b}));
  CHECK(nf.element_of[0b111] == product({a, b, c}));
  for (std::uint32_t m = 0; m < 8; ++m) CHECK(nf.exponents_of[nf.element_of[m]] == m);

  // bac = a
  CHECK(exponent_string(nf.exponents_of[product({b, a, c})], 3) == "100");
}

TEST_CASE("ordering b, a, c is not a decomposition of d4") {
  const auto group = generate_group(fixtures::d4());
  try {
    normal_form(group, {b, a, c});
    FAIL("expected NotADecomposition");
  } catch (const NotADecomposition& err) {
    // ba (exponents 110) collides with ac (exponents 011)
    const std::set<std::uint32_t> pair{err.first(), err.second()};
    CHECK(pair == std::set<std::uint32_t>{0b011, 0b110});
    auto product = [&](Word w) { return group.evaluate(Word(w.rbegin(), w.rend())); };
    CHECK(err.element() == product({b, a}));
    CHECK(err.element() == product({a, c}));
  }
  CHECK(kind_of([&] { normal_form(group, {a, b}); }) == ErrorKind::Usage);
  CHECK(kind_of([&] { normal_form(group, {a, a, b}); }) == ErrorKind::Usage);
}

TEST_CASE("rank-1 normal form") {
  const auto group = generate_group(DecoratedGraph::trivial({"a"}));
  const auto nf = normal_form(group, {a});
  CHECK(nf.element_of == std::vector<std::size_t>{0, 1});
}

TEST_CASE("two-orbit check") {
  CHECK(two_orbit_check(fixtures::d4()));
  CHECK(two_orbit_check(fixtures::five_simplex()));
  // the only rank-2 decorated graph
  const DecoratedGraphEnumerator rank2(2);
  REQUIRE(rank2.size() == 1);
  CHECK(rank2.at(0) == DecoratedGraph::trivial({"a", "b"}));
  CHECK(two_orbit_check(rank2.at(0)));
  CHECK(kind_of([] { two_orbit_check(DecoratedGraph::trivial({"a"})); }) == ErrorKind::RankTooSmall);
}

TEST_CASE("decomposition properties over all admissible graphs of rank <= 4") {
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    const DecoratedGraphEnumerator population(rank);
    for (std::size_t i = 0; i < population.size(); ++i) {
      const auto graph = population.at(i);
      if (!is_admissible(graph).admissible) continue;
      const auto group = generate_group(graph);
      const auto partition = orbits(graph);
      REQUIRE(partition.blocks == oracle::orbits(fixtures::raw(graph)));
      if (rank >= 2) REQUIRE(two_orbit_check(graph));

      // perm_image is the perm part of the element's matrix
      for (const auto& element : group.elements()) {
        REQUIRE(perm_image(graph, element.witness) == element.matrix.perm());
      }

      // every block is invariant under every j_t
      for (const auto& block : partition.blocks) {
        const auto mask = mask_of(block);
        for (const auto& j : graph.involutions())
          for (Label s : block) REQUIRE(((mask >> j(s)) & 1U) == 1U);
      }

      // invariant subsets T: G = G_T G_{S-T} uniquely, G_T ∩ G_{S-T} = {1}
      const auto full = graph.full_mask();
      const std::size_t blocks = partition.block_count();
      for (std::uint32_t pick = 1; pick + 1 < (1U << blocks); ++pick) {
        LabelMask t = 0;
        for (std::size_t k = 0; k < blocks; ++k)
          if ((pick >> k) & 1U) t |= mask_of(partition.blocks[k]);
        const auto gt = standard_subgroup(group, t);
        const auto gu = standard_subgroup(group, full & ~t);
        std::set<std::size_t> in_t(gt.members.begin(), gt.members.end());
        std::size_t shared = 0;
        for (auto x : gu.members) shared += in_t.count(x);
        REQUIRE(shared == 1);
        std::set<std::size_t> products;
        for (auto x : gt.members)
          for (auto y : gu.members) products.insert(group.multiply(x, y));
        REQUIRE(products.size() == group.order());
        REQUIRE(gt.members.size() * gu.members.size() == group.order());
      }

      // normal form for every planar drawing of the orbit tree
      const auto tree = orbit_tree(graph);
      for (const auto& ordering : planar_orderings(tree)) {
        REQUIRE_NOTHROW(normal_form(group, ordering));
      }
    }
  }
}
