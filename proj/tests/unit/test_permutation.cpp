#include <doctest.h>

#include <random>

#include "cubegroup/errors.hpp"
#include "cubegroup/permutation.hpp"

using namespace cubegroup;

namespace {

SignedPermutation random_signed(std::mt19937& rng, std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>(i);
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<std::int8_t> signs(n);
  for (auto& s : signs) s = (rng() & 1U) ? 1 : -1;
  return SignedPermutation(Permutation(images), signs);
}

}  // namespace

TEST_CASE("permutation construction rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), CubeError);
  CHECK_THROWS_AS(Permutation({0, 3}), CubeError);
  CHECK(Permutation({1, 0, 2}).is_involution());
  CHECK_FALSE(Permutation({1, 2, 0}).is_involution());
}

TEST_CASE("cycles are listed from their least point") {
  const Permutation p({2, 3, 0, 1, 4});
  const auto cycles = p.cycles();
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0] == std::vector<std::size_t>{0, 2});
  CHECK(cycles[1] == std::vector<std::size_t>{1, 3});
  CHECK(Permutation::identity(4).cycles().empty());
}

TEST_CASE("compose applies the right operand first") {
  const Permutation a({1, 0, 2});  // (0 1)
  const Permutation b({0, 2, 1});  // (1 2)
  const auto ab = compose(a, b);
  CHECK(ab(1) == 2);  // b: 1 -> 2, a fixes 2
  CHECK(ab(2) == 0);  // b: 2 -> 1, a: 1 -> 0
}

TEST_CASE("signed composition: identity law and mismatch") {
  std::mt19937 rng(7);
  const auto x = random_signed(rng, 5);
  CHECK(compose(SignedPermutation::identity(5), x) == x);
  CHECK(compose(x, SignedPermutation::identity(5)) == x);
  CHECK_THROWS_AS(compose(x, SignedPermutation::identity(4)), CubeError);
  try {
    compose(x, SignedPermutation::identity(4));
  } catch (const CubeError& e) {
    CHECK(e.kind() == ErrorKind::LabelSetMismatch);
  }
}

TEST_CASE("signed composition matches dense matrix multiplication") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const auto x = random_signed(rng, n);
    const auto y = random_signed(rng, n);
    const auto mx = x.matrix();
    const auto my = y.matrix();
    std::vector<std::vector<int>> product(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) product[i][j] += mx[i][k] * my[k][j];
    REQUIRE(compose(x, y).matrix() == product);
  }
}

TEST_CASE("signed composition is associative and transposes invert") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 7;
    const auto x = random_signed(rng, n);
    const auto y = random_signed(rng, n);
    const auto z = random_signed(rng, n);
    REQUIRE(compose(compose(x, y), z) == compose(x, compose(y, z)));
    REQUIRE(compose(x, transpose(x)).is_identity());
    REQUIRE(compose(transpose(x), x).is_identity());
  }
}
