#include "cubegroup/representation.hpp"

#include "cubegroup/decomposition.hpp"
#include "cubegroup/graphcore.hpp"

namespace cubegroup {

CubeVector embed_vertex(std::size_t rank, LabelMask subset) {
  if (rank > kMaxRank || (rank < 32 && (subset >> rank) != 0)) {
    throw CubeError(ErrorKind::UnknownLabel, "vertex subset exceeds the label set");
  }
  CubeVector v{std::vector<std::int64_t>(rank, 1)};
  for (Label s : mask_members(subset)) v.coords[s] = -1;
  return v;
}

CubeVector apply(const SignedPermutation& m, const CubeVector& v) {
  if (m.size() != v.coords.size()) {
    throw CubeError(ErrorKind::LabelSetMismatch, "matrix and vector sizes differ");
  }
  CubeVector out{std::vector<std::int64_t>(v.coords.size(), 0)};
  for (std::size_t t = 0; t < v.coords.size(); ++t) {
    out.coords[m.perm()(t)] += m.sign(t) * v.coords[t];
  }
  return out;
}

SignCount sign_count(const DecoratedGraph& graph, const Word& word, Label target) {
  if (target >= graph.rank()) {
    throw CubeError(ErrorKind::UnknownLabel,
                    "label index " + std::to_string(target) + " out of range");
  }
  SignCount result{word, target, 0};
  Label current = target;  // (j_{s_i} ∘ ... ∘ j_{s_1})(t)
  for (Label s : word) {
    if (s >= graph.rank()) {
      throw CubeError(ErrorKind::UnknownLabel,
                      "label index " + std::to_string(s) + " out of range");
    }
    if (s == current) ++result.count;
    current = graph.involution(s)(current);
  }
  return result;
}

SignedPermutation rho_via_formula(const DecoratedGraph& graph, const Word& word) {
  auto perm = perm_image(graph, word);
  std::vector<std::int8_t> signs(graph.rank());
  for (Label t = 0; t < graph.rank(); ++t) {
    signs[t] = static_cast<std::int8_t>(sign_count(graph, word, t).sign());
  }
  return SignedPermutation(std::move(perm), std::move(signs));
}

std::vector<std::vector<Label>> invariant_coordinate_subspaces(const DecoratedGraph& graph) {
  require_admissible(graph);
  auto blocks = orbits(graph).blocks;
  for (const auto& block : blocks) {
    const auto mask = mask_of(block);
    for (Label s = 0; s < graph.rank(); ++s) {
      const auto rho = generator_rho(graph, s);
      for (Label t : block) {
        if (((mask >> rho.perm()(t)) & 1U) == 0) {
          throw CubeError(ErrorKind::InternalConsistency,
                          "rho_" + graph.name(s) + " moves e_" + graph.name(t) +
                              " out of its orbit block");
        }
      }
    }
  }
  return blocks;
}

bool is_reducible(const DecoratedGraph& graph) {
  if (graph.rank() < 2) {
    throw CubeError(ErrorKind::RankTooSmall, "reducibility needs rank >= 2");
  }
  return invariant_coordinate_subspaces(graph).size() >= 2;
}

}  // namespace cubegroup
