#include "cubegroup/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cubegroup/graphcore.hpp"

namespace cubegroup {

Permutation perm_image(const DecoratedGraph& graph, const Word& word) {
  auto result = Permutation::identity(graph.rank());
  for (Label s : word) {
    if (s >= graph.rank()) {
      throw CubeError(ErrorKind::UnknownLabel,
                      "label index " + std::to_string(s) + " out of range");
    }
    result = compose(graph.involution(s), result);
  }
  return result;
}

OrbitPartition orbits(const DecoratedGraph& graph) {
  const auto n = graph.rank();
  std::vector<std::size_t> block_of(n, n);
  OrbitPartition partition;
  for (Label start = 0; start < n; ++start) {
    if (block_of[start] != n) continue;
    std::vector<Label> block{start};
    block_of[start] = partition.blocks.size();
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (const auto& j : graph.involutions()) {
        const auto image = j(block[i]);
        if (block_of[image] == n) {
          block_of[image] = partition.blocks.size();
          block.push_back(image);
        }
      }
    }
    std::sort(block.begin(), block.end());
    partition.blocks.push_back(std::move(block));
  }
  return partition;
}

namespace {

OrbitTree build_node(const DecoratedGraph& root, std::vector<Label> labels) {
  OrbitTree node{std::move(labels), {}};
  if (node.labels.size() < 2) return node;
  const auto restricted = root.restrict_to(mask_of(node.labels));
  const auto parts = orbits(restricted);
  if (parts.block_count() < 2) {
    throw CubeError(ErrorKind::InternalConsistency,
                    "a node with " + std::to_string(node.labels.size()) +
                        " labels is a single orbit");
  }
  for (const auto& block : parts.blocks) {
    std::vector<Label> child;
    for (Label local : block) child.push_back(node.labels[local]);
    node.children.push_back(build_node(root, std::move(child)));
  }
  return node;
}

void collect_leaves(const OrbitTree& node, const ChildOrder& order,
                    std::vector<Label>& out) {
  if (node.is_leaf()) {
    out.insert(out.end(), node.labels.begin(), node.labels.end());
    return;
  }
  std::vector<std::size_t> perm;
  if (order) {
    perm = order(node);
  } else {
    perm.resize(node.children.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
  }
  auto sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted.size() != node.children.size() || sorted[i] != i) {
      throw CubeError(ErrorKind::Usage, "child order is not a permutation of the children");
    }
  }
  for (auto i : perm) collect_leaves(node.children[i], order, out);
}

std::vector<std::vector<Label>> planar_leaf_orders(const OrbitTree& node) {
  if (node.is_leaf()) return {node.labels};
  std::vector<std::vector<std::vector<Label>>> per_child;
  for (const auto& child : node.children) per_child.push_back(planar_leaf_orders(child));
  std::vector<std::size_t> perm(node.children.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<Label>> result;
  do {
    std::vector<std::vector<Label>> partial{{}};
    for (auto i : perm) {
      std::vector<std::vector<Label>> next;
      for (const auto& prefix : partial) {
        for (const auto& suffix : per_child[i]) {
          auto combined = prefix;
          combined.insert(combined.end(), suffix.begin(), suffix.end());
          next.push_back(std::move(combined));
        }
      }
      partial = std::move(next);
    }
    result.insert(result.end(), partial.begin(), partial.end());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace

OrbitTree orbit_tree(const DecoratedGraph& graph) {
  require_admissible(graph);
  std::vector<Label> all(graph.rank());
  std::iota(all.begin(), all.end(), Label{0});
  return build_node(graph, std::move(all));
}

std::vector<Label> decomposition_ordering(const OrbitTree& tree) {
  return decomposition_ordering(tree, ChildOrder{});
}

std::vector<Label> decomposition_ordering(const OrbitTree& tree, const ChildOrder& order) {
  std::vector<Label> out;
  collect_leaves(tree, order, out);
  return out;
}

std::vector<std::vector<Label>> planar_orderings(const OrbitTree& tree) {
  auto all = planar_leaf_orders(tree);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::string exponent_string(std::uint32_t exponents, std::size_t length) {
  std::string s(length, '0');
  for (std::size_t i = 0; i < length; ++i) {
    if ((exponents >> i) & 1U) s[i] = '1';
  }
  return s;
}

NormalForm normal_form(const CubeGroup& group, const std::vector<Label>& ordering) {
  const auto n = group.rank();
  std::vector<bool> used(n, false);
  for (Label s : ordering) {
    if (s >= n || used[s]) {
      throw CubeError(ErrorKind::Usage, "ordering is not a permutation of the generators");
    }
    used[s] = true;
  }
  if (ordering.size() != n) {
    throw CubeError(ErrorKind::Usage, "ordering is not a permutation of the generators");
  }
  const std::size_t order = group.order();
  NormalForm nf;
  nf.ordering = ordering;
  nf.element_of.assign(order, 0);
  nf.exponents_of.assign(order, 0);
  std::vector<bool> hit(order, false);
  for (std::uint32_t m = 0; m < order; ++m) {
    // s_1^{m_1} ... s_n^{m_n}: right-multiply left to right.
    std::size_t x = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if ((m >> i) & 1U) x = group.right_neighbor(x, ordering[i]);
    }
    if (hit[x]) {
      const auto& names = group.graph().labels();
      std::string ord;
      for (auto s : ordering) ord += (ord.empty() ? "" : " ") + names[s];
      throw NotADecomposition(
          nf.exponents_of[x], m, x,
          "exponents " + exponent_string(nf.exponents_of[x], n) + " and " +
              exponent_string(m, n) + " give the same element under ordering " + ord);
    }
    hit[x] = true;
    nf.element_of[m] = x;
    nf.exponents_of[x] = m;
  }
  return nf;
}

bool two_orbit_check(const DecoratedGraph& graph) {
  if (graph.rank() < 2) {
    throw CubeError(ErrorKind::RankTooSmall, "the two-orbit check needs rank >= 2");
  }
  return orbits(graph).block_count() >= 2;
}

}  // namespace cubegroup
