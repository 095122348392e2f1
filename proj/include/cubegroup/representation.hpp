#pragma once

#include <cstdint>
#include <vector>

#include "cubegroup/decorated_graph.hpp"
#include "cubegroup/group.hpp"

namespace cubegroup {

/// Integer vector in Z^S, one coordinate per label.
struct CubeVector {
  std::vector<std::int64_t> coords;

  friend bool operator==(const CubeVector&, const CubeVector&) = default;
};

/// v_T: +1 on S - T, -1 on T. Throws UnknownLabel if T leaves S.
CubeVector embed_vertex(std::size_t rank, LabelMask subset);

CubeVector apply(const SignedPermutation& m, const CubeVector& v);

/// Number of positions i in 0..k-1 where s_{i+1} = (j_{s_i} ∘ ... ∘ j_{s_1})(t);
/// at i = 0 the composite is empty and the condition reads s_1 = t.
/// Only the parity is independent of the word chosen for an element.
struct SignCount {
  Word word;
  Label target = 0;
  std::size_t count = 0;

  int sign() const noexcept { return count % 2 == 0 ? 1 : -1; }
};

SignCount sign_count(const DecoratedGraph& graph, const Word& word, Label target);

/// ρ_g(e_t) = (-1)^{n(g,t)} e_{j_g(t)}, computed from sign counts and the
/// permutation representation alone.
SignedPermutation rho_via_formula(const DecoratedGraph& graph, const Word& word);

/// Orbit blocks of S, after checking that every generator matrix keeps
/// each block's coordinates among themselves. Throws NotAdmissible, or
/// InternalConsistency if a block is not invariant.
std::vector<std::vector<Label>> invariant_coordinate_subspaces(const DecoratedGraph& graph);

/// At least two invariant coordinate blocks. Throws RankTooSmall or
/// NotAdmissible.
bool is_reducible(const DecoratedGraph& graph);

}  // namespace cubegroup
