#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubegroup/permutation.hpp"

namespace cubegroup {

/// Undirected graph on vertices 0..vertex_count-1 whose edges each carry
/// one generator label.
struct LabeledGraph {
  struct Edge {
    std::size_t u;
    std::size_t v;
    Label label;
  };

  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  /// No loops, no parallel edges, endpoints in range.
  bool is_simple() const;
};

struct HypercubeRecognition {
  bool is_cube = false;
  std::size_t dimension = 0;
  /// Parallel class of each edge, numbered by first appearance.
  std::vector<std::size_t> edge_class;
  /// Bit c of coordinates[v] flips across edges of class c; vertex 0 is 0.
  std::vector<std::uint32_t> coordinates;
  /// Why recognition failed; empty on success.
  std::string reason;
};

/// Recognizes the 1-skeleton of a cube. Edges are grouped into parallel
/// classes by closing "opposite sides of a common 4-cycle"; each class must
/// be a perfect matching, and the induced coordinates must be a bijection
/// onto {0,1}^n under which adjacency is exactly Hamming distance one.
/// Labels are ignored.
HypercubeRecognition is_hypercube(const LabeledGraph& graph);

}  // namespace cubegroup
