#pragma once

#include <functional>
#include <vector>

#include "cubegroup/decorated_graph.hpp"
#include "cubegroup/errors.hpp"
#include "cubegroup/group.hpp"

namespace cubegroup {

/// j_{s_k} ∘ ... ∘ j_{s_1} for a word in application order: the image of the
/// element under the permutation representation G -> Aut(S).
Permutation perm_image(const DecoratedGraph& graph, const Word& word);

/// Orbits of S under the group generated by the j_s, each block sorted,
/// blocks ordered by least label.
struct OrbitPartition {
  std::vector<std::vector<Label>> blocks;

  std::size_t block_count() const noexcept { return blocks.size(); }
  friend bool operator==(const OrbitPartition&, const OrbitPartition&) = default;
};

OrbitPartition orbits(const DecoratedGraph& graph);

/// Nested orbit decomposition. Labels are indices into the root label set.
struct OrbitTree {
  std::vector<Label> labels;
  std::vector<OrbitTree> children;

  bool is_leaf() const noexcept { return children.empty(); }
  friend bool operator==(const OrbitTree&, const OrbitTree&) = default;
};

/// Children of a node T are the orbits of Γ restricted to T, recursively
/// down to singletons. Throws NotAdmissible, or InternalConsistency if a
/// node with two or more labels turns out to be a single orbit.
OrbitTree orbit_tree(const DecoratedGraph& graph);

/// Chooses the left-to-right order of a node's children; returns a
/// permutation of 0..node.children.size()-1.
using ChildOrder = std::function<std::vector<std::size_t>(const OrbitTree& node)>;

/// Leaves read left to right.
std::vector<Label> decomposition_ordering(const OrbitTree& tree);
std::vector<Label> decomposition_ordering(const OrbitTree& tree, const ChildOrder& order);

/// Leaf orders of every planar drawing of the tree, deduplicated, sorted.
std::vector<std::vector<Label>> planar_orderings(const OrbitTree& tree);

/// Bit i of a mask is the exponent m_{i+1} of the i-th generator of the
/// ordering in s_1^{m_1} s_2^{m_2} ... s_n^{m_n}.
struct NormalForm {
  std::vector<Label> ordering;
  /// element index for each exponent mask
  std::vector<std::size_t> element_of;
  /// exponent mask for each element index
  std::vector<std::uint32_t> exponents_of;
};

class NotADecomposition : public CubeError {
 public:
  NotADecomposition(std::uint32_t first, std::uint32_t second, std::size_t element,
                    const std::string& message)
      : CubeError(ErrorKind::NotADecomposition, message),
        first_(first),
        second_(second),
        element_(element) {}

  std::uint32_t first() const noexcept { return first_; }
  std::uint32_t second() const noexcept { return second_; }
  std::size_t element() const noexcept { return element_; }

 private:
  std::uint32_t first_;
  std::uint32_t second_;
  std::size_t element_;
};

/// Builds the table of all 2^n products. Throws NotADecomposition with the
/// first colliding pair of exponent masks, or Usage if `ordering` is not a
/// permutation of S.
NormalForm normal_form(const CubeGroup& group, const std::vector<Label>& ordering);

/// "101" style rendering: character i is m_{i+1}.
std::string exponent_string(std::uint32_t exponents, std::size_t length);

/// At least two orbits on S. Throws RankTooSmall for rank < 2.
bool two_orbit_check(const DecoratedGraph& graph);

}  // namespace cubegroup
