#pragma once

#include <string>
#include <vector>

#include "cubegroup/decorated_graph.hpp"
#include "cubegroup/io.hpp"
#include "oracles.hpp"

namespace fixtures {

inline constexpr const char* kD4 =
    "gens: a b c\n"
    "a: (b c)\n";

inline constexpr const char* kFiveSimplex =
    "gens: a b c d e\n"
    "a: (b d)\n"
    "b: (a c)\n"
    "c: (b d)\n"
    "d: (a c)\n"
    "e: (a c)(b d)\n";

inline constexpr const char* kNonAdmissible =
    "gens: a b c\n"
    "a: (b c)\n"
    "b: (a c)\n";

inline constexpr const char* kD4Perm =
    "a = (1 3)\n"
    "b = (1 2)(3 4)\n"
    "c = (1 4)(2 3)\n";

inline cubegroup::DecoratedGraph d4() { return cubegroup::parse_decorated_graph(kD4); }
inline cubegroup::DecoratedGraph five_simplex() {
  return cubegroup::parse_decorated_graph(kFiveSimplex);
}
inline cubegroup::DecoratedGraph non_admissible() {
  return cubegroup::parse_decorated_graph(kNonAdmissible);
}

inline oracle::Involutions raw(const cubegroup::DecoratedGraph& g) {
  oracle::Involutions js;
  for (const auto& j : g.involutions()) {
    std::vector<std::size_t> row;
    for (auto x : j.images()) row.push_back(x);
    js.push_back(row);
  }
  return js;
}

}  // namespace fixtures
