#include "cubegroup/group.hpp"

#include <bit>

namespace cubegroup {

SignedPermutation generator_rho(const DecoratedGraph& graph, Label s) {
  if (s >= graph.rank()) {
    throw CubeError(ErrorKind::UnknownLabel,
                    "label index " + std::to_string(s) + " out of range");
  }
  std::vector<std::int8_t> signs(graph.rank(), 1);
  signs[s] = -1;
  return SignedPermutation(graph.involution(s), std::move(signs));
}

SignedPermutation rho_of_word(const DecoratedGraph& graph, const Word& word) {
  auto result = SignedPermutation::identity(graph.rank());
  for (Label s : word) result = compose(generator_rho(graph, s), result);
  return result;
}

std::optional<std::size_t> CubeGroup::find(const SignedPermutation& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CubeGroup::evaluate(const Word& word) const {
  // s_k ... s_1 = ((1 s_k) s_{k-1}) ... s_1
  std::size_t x = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it >= rank()) {
      throw CubeError(ErrorKind::UnknownLabel,
                      "label index " + std::to_string(*it) + " out of range");
    }
    x = right_neighbor_[x][*it];
  }
  return x;
}

std::size_t CubeGroup::multiply(std::size_t a, std::size_t b) const {
  auto product = find(compose(element(a).matrix, element(b).matrix));
  if (!product) {
    throw CubeError(ErrorKind::InternalConsistency, "group is not closed under products");
  }
  return *product;
}

CubeGroup generate_group(const DecoratedGraph& graph) {
  require_admissible(graph);
  const auto n = graph.rank();
  std::vector<SignedPermutation> gens;
  for (Label s = 0; s < n; ++s) gens.push_back(generator_rho(graph, s));

  const std::size_t expected = std::size_t{1} << n;
  auto closure = close_under_right_multiplication(
      SignedPermutation::identity(n), std::span<const SignedPermutation>(gens),
      [](const SignedPermutation& x, const SignedPermutation& y) { return compose(x, y); },
      expected);
  if (!closure.complete || closure.elements.size() != expected) {
    throw CubeError(ErrorKind::ClosureSizeMismatch,
                    "closure of the generator matrices has " +
                        (closure.complete ? std::to_string(closure.elements.size())
                                          : "more than " + std::to_string(expected)) +
                        " elements, expected " + std::to_string(expected));
  }

  CubeGroup group(graph);
  group.cayley_ = closure.cayley_graph();
  group.cube_ = is_hypercube(group.cayley_);
  if (!group.cube_.is_cube) {
    throw CubeError(ErrorKind::InternalConsistency,
                    "Cayley graph failed the cube check: " + group.cube_.reason);
  }

  // The edge labeled s at the identity fixes which coordinate s owns.
  std::vector<std::size_t> coordinate_of(n, 0);
  for (std::size_t e = 0; e < group.cayley_.edges.size(); ++e) {
    const auto& edge = group.cayley_.edges[e];
    if (edge.u == 0) coordinate_of[edge.label] = group.cube_.edge_class[e];
  }
  group.subset_.assign(expected, 0);
  group.by_subset_.assign(expected, expected);
  for (std::size_t x = 0; x < expected; ++x) {
    LabelMask t = 0;
    for (Label s = 0; s < n; ++s) {
      if ((group.cube_.coordinates[x] >> coordinate_of[s]) & 1U) t |= LabelMask{1} << s;
    }
    group.subset_[x] = t;
    if (group.by_subset_[t] != expected) {
      throw CubeError(ErrorKind::InternalConsistency, "vertex indexing is not injective");
    }
    group.by_subset_[t] = x;
  }

  group.elements_.reserve(expected);
  for (std::size_t x = 0; x < expected; ++x) {
    group.elements_.push_back({closure.elements[x], closure.witnesses[x]});
  }
  group.index_ = std::move(closure.index);
  group.right_neighbor_ = std::move(closure.right_neighbor);
  return group;
}

StandardSubgroup standard_subgroup(const CubeGroup& group, LabelMask subset) {
  if (subset == 0) throw CubeError(ErrorKind::Usage, "generator subset must be nonempty");
  if ((subset & ~group.graph().full_mask()) != 0) {
    throw CubeError(ErrorKind::UnknownLabel, "subset exceeds the label set");
  }
  const auto members = mask_members(subset);
  std::vector<SignedPermutation> gens;
  std::vector<std::string> names;
  for (Label t : members) {
    gens.push_back(generator_rho(group.graph(), t));
    names.push_back(group.graph().name(t));
  }
  auto closure = close_under_right_multiplication(
      SignedPermutation::identity(group.rank()), std::span<const SignedPermutation>(gens),
      [](const SignedPermutation& x, const SignedPermutation& y) { return compose(x, y); },
      group.order());

  std::string subset_text;
  for (const auto& name : names) subset_text += (subset_text.empty() ? "" : " ") + name;
  const std::size_t expected = std::size_t{1} << members.size();
  if (closure.elements.size() != expected) {
    throw CubeError(ErrorKind::NotStandard,
                    "<" + subset_text + "> has order " +
                        std::to_string(closure.elements.size()) + ", expected " +
                        std::to_string(expected));
  }
  auto cayley = closure.cayley_graph();
  const auto cube = is_hypercube(cayley);
  if (!cube.is_cube) {
    throw CubeError(ErrorKind::NotStandard,
                    "Cayley graph of <" + subset_text + "> is not a cube: " + cube.reason);
  }
  auto graph = detail::read_decorated_graph(names, closure.right_neighbor);
  for (auto& edge : cayley.edges) edge.label = members[edge.label];

  StandardSubgroup result{subset, {}, std::move(cayley), std::move(graph)};
  for (const auto& m : closure.elements) {
    auto idx = group.find(m);
    if (!idx) throw CubeError(ErrorKind::InternalConsistency, "subgroup element outside G");
    result.members.push_back(*idx);
  }
  return result;
}

namespace detail {

DecoratedGraph read_decorated_graph(std::vector<std::string> labels,
                                    const std::vector<std::vector<std::size_t>>& right_neighbor) {
  const auto n = labels.size();
  const auto& at_identity = right_neighbor.at(0);
  std::vector<std::vector<std::uint32_t>> images(n, std::vector<std::uint32_t>(n));
  for (Label s = 0; s < n; ++s) {
    images[s][s] = static_cast<std::uint32_t>(s);
    const auto vertex_s = at_identity[s];
    for (Label u = 0; u < n; ++u) {
      if (u == s) continue;
      const auto vertex_u = at_identity[u];
      std::optional<Label> image;
      for (Label x = 0; x < n; ++x) {
        const auto w = right_neighbor[vertex_u][x];
        if (w == 0) continue;
        for (Label v = 0; v < n; ++v) {
          if (right_neighbor[vertex_s][v] != w) continue;
          if (image && *image != v) {
            throw CubeError(ErrorKind::IllDefinedInvolution,
                            "edges " + labels[u] + " and " + labels[s] +
                                " at the identity span more than one square");
          }
          image = v;
        }
      }
      if (!image) {
        throw CubeError(ErrorKind::IllDefinedInvolution,
                        "edges " + labels[u] + " and " + labels[s] +
                            " at the identity span no square");
      }
      images[s][u] = static_cast<std::uint32_t>(*image);
    }
  }
  try {
    std::vector<Permutation> involutions;
    for (auto& row : images) involutions.emplace_back(std::move(row));
    DecoratedGraph graph(labels, std::move(involutions));
    const auto report = is_admissible(graph);
    if (!report.admissible) {
      throw CubeError(ErrorKind::IllDefinedInvolution,
                      "the extracted decorated graph is not admissible");
    }
    return graph;
  } catch (const CubeError& e) {
    if (e.kind() == ErrorKind::IllDefinedInvolution) throw;
    throw CubeError(ErrorKind::IllDefinedInvolution, e.what());
  }
}

}  // namespace detail

}  // namespace cubegroup
