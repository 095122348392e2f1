#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cubegroup/hypercube.hpp"
#include "cubegroup/permutation.hpp"

namespace cubegroup {

/// Breadth-first closure of a generating set under right multiplication,
/// starting from the identity. Elements appear in BFS order with generators
/// tried in label order, so element 0 is the identity and witness words are
/// shortest and reproducible.
template <class Element>
struct Closure {
  std::vector<Element> elements;
  /// witnesses[i] in application order; right-multiplying by s prepends s.
  std::vector<Word> witnesses;
  /// right_neighbor[i][k] = index of elements[i] * gens[k]
  std::vector<std::vector<std::size_t>> right_neighbor;
  std::map<Element, std::size_t> index;
  /// false when the closure was cut off at the element limit
  bool complete = true;

  std::optional<std::size_t> find(const Element& x) const {
    auto it = index.find(x);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  /// Edges {x, x*s} labeled by s; a generator equal to the identity
  /// produces a loop and coinciding generators produce parallel edges,
  /// both of which is_hypercube rejects.
  LabeledGraph cayley_graph() const {
    LabeledGraph graph;
    graph.vertex_count = elements.size();
    for (std::size_t x = 0; x < right_neighbor.size(); ++x) {
      for (std::size_t k = 0; k < right_neighbor[x].size(); ++k) {
        const auto y = right_neighbor[x][k];
        if (y >= x) graph.edges.push_back({x, y, k});
      }
    }
    return graph;
  }
};

/// Stops (complete = false) once more than `limit` elements are found.
template <class Element, class Multiply>
Closure<Element> close_under_right_multiplication(const Element& identity,
                                                  std::span<const Element> gens,
                                                  Multiply multiply,
                                                  std::size_t limit) {
  Closure<Element> c;
  c.elements.push_back(identity);
  c.witnesses.emplace_back();
  c.index.emplace(identity, 0);
  for (std::size_t x = 0; x < c.elements.size(); ++x) {
    std::vector<std::size_t> row(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element y = multiply(c.elements[x], gens[k]);
      auto [it, inserted] = c.index.emplace(y, c.elements.size());
      if (inserted) {
        if (c.elements.size() >= limit) {
          c.complete = false;
          c.right_neighbor.clear();
          return c;
        }
        Word w;
        w.reserve(c.witnesses[x].size() + 1);
        w.push_back(k);
        w.insert(w.end(), c.witnesses[x].begin(), c.witnesses[x].end());
        c.elements.push_back(std::move(y));
        c.witnesses.push_back(std::move(w));
      }
      row[k] = it->second;
    }
    c.right_neighbor.push_back(std::move(row));
  }
  return c;
}

}  // namespace cubegroup
