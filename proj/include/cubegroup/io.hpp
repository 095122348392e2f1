#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cubegroup/decomposition.hpp"
#include "cubegroup/decorated_graph.hpp"
#include "cubegroup/enumerator.hpp"
#include "cubegroup/graphcore.hpp"
#include "cubegroup/group.hpp"

namespace cubegroup {

inline constexpr int kJsonFormatVersion = 1;

/// Decorated graph document:
///
///     # comment
///     gens: a b c d e
///     a: (b d)
///     e: (a c)(b d)
///     c: id
///
/// The header comes first. Generators without a line get the identity.
/// Throws ParseError (kinds ParseError, SelfCycle, NonDisjointCycles,
/// UnknownLabel, DuplicateLabel) with line and column.
DecoratedGraph parse_decorated_graph(std::string_view document);

/// Canonical form: header, then one line per generator in label order,
/// cycles sorted by their first label and written (min max), or `id`.
std::string serialize_decorated_graph(const DecoratedGraph& graph);

/// Involutive generators of a permutation group on 1, 2, 3, ...
struct PermGroupInput {
  std::vector<std::string> labels;
  /// Points shifted to 0-based; all share the largest degree mentioned.
  std::vector<Permutation> generators;
};

/// Lines `<label> = <cycles>` such as `b = (1 2)(3 4)`; `id` is accepted.
PermGroupInput parse_perm_group(std::string_view document);

/// Reverse construction for a permutation group. Throws NotInvolution,
/// NotACubeGroup or IllDefinedInvolution.
DecoratedGraph decorated_graph_from_perm_group(const PermGroupInput& input);

/// Whitespace-separated generator names, in the order given.
std::vector<std::string> split_words(std::string_view text);

std::string format_word(const DecoratedGraph& graph, const Word& word,
                        std::string_view separator = " ");
std::string format_involution(const DecoratedGraph& graph, const Permutation& perm);
std::string format_subset(const DecoratedGraph& graph, LabelMask subset);
std::string format_labels(const DecoratedGraph& graph, const std::vector<Label>& labels,
                          std::string_view separator = " ");
std::string format_edge_group(const DecoratedGraph& graph, const EdgeGroup& group);
/// One line per basis vector: `e_t -> -e_u`.
std::string format_signed_permutation(const DecoratedGraph& graph, const SignedPermutation& m);

/// Undirected DOT graph: vertices named by their subset T, edges labeled.
void write_cayley_dot(std::ostream& out, const CubeGroup& group);

nlohmann::json to_json(const DecoratedGraph& graph, const AdmissibilityReport& report);
nlohmann::json to_json(const DecoratedGraph& graph, const OrbitPartition& partition);
nlohmann::json to_json(const DecoratedGraph& graph, const OrbitTree& tree);
nlohmann::json to_json(const SweepReport& report);

}  // namespace cubegroup
