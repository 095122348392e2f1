#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubegroup/closure.hpp"
#include "cubegroup/decorated_graph.hpp"
#include "cubegroup/errors.hpp"
#include "cubegroup/graphcore.hpp"
#include "cubegroup/hypercube.hpp"

namespace cubegroup {

/// ρ_s: e_s -> -e_s, e_t -> e_{j_s(t)} for t != s. Throws UnknownLabel.
SignedPermutation generator_rho(const DecoratedGraph& graph, Label s);

/// ρ of a word in application order: ρ_{s_k} ∘ ... ∘ ρ_{s_1}.
SignedPermutation rho_of_word(const DecoratedGraph& graph, const Word& word);

struct GroupElement {
  SignedPermutation matrix;
  /// A shortest word reaching this element, application order.
  Word witness;
};

/// The cube group presented by an admissible decorated graph, realized by
/// its geometric representation. Element 0 is the identity.
class CubeGroup {
 public:
  const DecoratedGraph& graph() const noexcept { return graph_; }
  std::size_t rank() const noexcept { return graph_.rank(); }
  std::size_t order() const noexcept { return elements_.size(); }

  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_.at(i); }

  /// Vertex index T(g): the generators whose cube coordinate is 1 at g.
  LabelMask subset_of(std::size_t i) const { return subset_.at(i); }
  std::size_t element_of_subset(LabelMask t) const { return by_subset_.at(t); }

  std::optional<std::size_t> find(const SignedPermutation& m) const;
  /// Index of the element a word evaluates to.
  std::size_t evaluate(const Word& word) const;
  /// Index of elements[a] * elements[b].
  std::size_t multiply(std::size_t a, std::size_t b) const;
  /// Index of elements[x] * s.
  std::size_t right_neighbor(std::size_t x, Label s) const {
    return right_neighbor_.at(x).at(s);
  }

  /// Cayley graph with edges {x, x*s} labeled s.
  const LabeledGraph& cayley() const noexcept { return cayley_; }
  const HypercubeRecognition& cube() const noexcept { return cube_; }

 private:
  friend CubeGroup generate_group(const DecoratedGraph& graph);

  explicit CubeGroup(DecoratedGraph graph) : graph_(std::move(graph)) {}

  DecoratedGraph graph_;
  std::vector<GroupElement> elements_;
  std::map<SignedPermutation, std::size_t> index_;
  std::vector<std::vector<std::size_t>> right_neighbor_;
  std::vector<LabelMask> subset_;
  std::vector<std::size_t> by_subset_;
  LabeledGraph cayley_;
  HypercubeRecognition cube_;
};

/// Throws NotAdmissible, or ClosureSizeMismatch / InternalConsistency if
/// the closure is not a cube group of order 2^n (never for admissible input).
CubeGroup generate_group(const DecoratedGraph& graph);

/// A standard subgroup G_T: ⟨T⟩ with its own Cayley graph a |T|-cube.
struct StandardSubgroup {
  LabelMask generators = 0;
  /// Indices into the parent group, in BFS order over T.
  std::vector<std::size_t> members;
  LabeledGraph cayley;
  /// The decorated graph of (G_T, T), labels in label order.
  DecoratedGraph graph;
};

/// Throws NotStandard (with the order or failed cube check in the message)
/// or UnknownLabel / Usage for an empty or out-of-range T.
StandardSubgroup standard_subgroup(const CubeGroup& group, LabelMask subset);

/// Reads the decorated graph off the Cayley graph of a concrete group given
/// by involutive generators and a multiplication. For each ordered pair
/// (u, s) the square spanned at the identity by the edges u and s closes at
/// w = u x = s v, and j_s(u) = v.
///
/// Throws NotInvolution, NotACubeGroup, or IllDefinedInvolution.
template <class Element, class Multiply>
DecoratedGraph decorated_graph_from_group(std::vector<std::string> labels,
                                          std::span<const Element> gens,
                                          const Element& identity,
                                          Multiply multiply);

namespace detail {
DecoratedGraph read_decorated_graph(std::vector<std::string> labels,
                                    const std::vector<std::vector<std::size_t>>& right_neighbor);
}  // namespace detail

template <class Element, class Multiply>
DecoratedGraph decorated_graph_from_group(std::vector<std::string> labels,
                                          std::span<const Element> gens,
                                          const Element& identity,
                                          Multiply multiply) {
  if (labels.size() != gens.size()) {
    throw CubeError(ErrorKind::LabelSetMismatch,
                    "expected one label per generator");
  }
  if (gens.size() > kMaxRank) {
    throw CubeError(ErrorKind::RankCapExceeded, "too many generators");
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k] == identity) {
      throw CubeError(ErrorKind::NotInvolution,
                      "generator '" + labels[k] + "' is the identity");
    }
    if (!(multiply(gens[k], gens[k]) == identity)) {
      throw CubeError(ErrorKind::NotInvolution,
                      "generator '" + labels[k] + "' does not square to 1");
    }
  }
  const std::size_t expected = std::size_t{1} << gens.size();
  auto closure = close_under_right_multiplication(identity, gens, multiply, expected);
  if (!closure.complete || closure.elements.size() != expected) {
    throw CubeError(ErrorKind::NotACubeGroup,
                    "group order is " +
                        (closure.complete ? std::to_string(closure.elements.size())
                                          : "more than " + std::to_string(expected)) +
                        ", expected 2^" + std::to_string(gens.size()) + " = " +
                        std::to_string(expected));
  }
  const auto cayley = closure.cayley_graph();
  const auto cube = is_hypercube(cayley);
  if (!cube.is_cube) {
    throw CubeError(ErrorKind::NotACubeGroup, "Cayley graph is not a cube: " + cube.reason);
  }
  return detail::read_decorated_graph(std::move(labels), closure.right_neighbor);
}

}  // namespace cubegroup
