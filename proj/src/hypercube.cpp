#include "cubegroup/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace cubegroup {

bool LabeledGraph::is_simple() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    if (e.u == e.v || e.u >= vertex_count || e.v >= vertex_count) return false;
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
  }
  return true;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

HypercubeRecognition reject(std::string reason) {
  HypercubeRecognition r;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

HypercubeRecognition is_hypercube(const LabeledGraph& graph) {
  const auto nv = graph.vertex_count;
  if (nv == 0) return reject("empty graph");
  if (!std::has_single_bit(nv)) {
    return reject(std::to_string(nv) + " vertices is not a power of two");
  }
  const auto dim = static_cast<std::size_t>(std::countr_zero(nv));
  if (dim > kMaxRank) return reject("dimension exceeds the rank cap");
  if (graph.edges.size() != dim * nv / 2) {
    return reject(std::to_string(graph.edges.size()) + " edges, expected " +
                  std::to_string(dim * nv / 2));
  }
  if (!graph.is_simple()) return reject("graph is not simple");

  // adjacency[v] = (neighbor, edge id), sorted by neighbor
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency(nv);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    adjacency[graph.edges[e].u].emplace_back(graph.edges[e].v, e);
    adjacency[graph.edges[e].v].emplace_back(graph.edges[e].u, e);
  }
  for (auto& list : adjacency) {
    if (list.size() != dim) return reject("graph is not regular of degree " + std::to_string(dim));
    std::sort(list.begin(), list.end());
  }
  auto edge_between = [&](std::size_t a, std::size_t b) -> std::ptrdiff_t {
    const auto& list = adjacency[a];
    auto it = std::lower_bound(list.begin(), list.end(),
                               std::pair<std::size_t, std::size_t>{b, 0});
    if (it == list.end() || it->first != b) return -1;
    return static_cast<std::ptrdiff_t>(it->second);
  };

  // Opposite edges of every 4-cycle v-u-x-w are parallel.
  DisjointSets classes(graph.edges.size());
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& nbrs = adjacency[v];
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t k = i + 1; k < nbrs.size(); ++k) {
        const auto [u, vu] = nbrs[i];
        const auto [w, vw] = nbrs[k];
        for (const auto& [x, ux] : adjacency[u]) {
          if (x == v) continue;
          const auto wx = edge_between(w, x);
          if (wx < 0) continue;
          classes.unite(vu, static_cast<std::size_t>(wx));
          classes.unite(vw, ux);
        }
      }
    }
  }

  HypercubeRecognition result;
  result.dimension = dim;
  result.edge_class.assign(graph.edges.size(), 0);
  std::map<std::size_t, std::size_t> class_id;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    auto [it, inserted] = class_id.emplace(classes.find(e), class_id.size());
    result.edge_class[e] = it->second;
  }
  if (class_id.size() != dim) {
    return reject(std::to_string(class_id.size()) + " parallel classes, expected " +
                  std::to_string(dim));
  }
  std::vector<std::vector<bool>> covered(dim, std::vector<bool>(nv, false));
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    auto& cover = covered[result.edge_class[e]];
    const auto& edge = graph.edges[e];
    if (cover[edge.u] || cover[edge.v]) {
      return reject("parallel class " + std::to_string(result.edge_class[e]) +
                    " is not a matching");
    }
    cover[edge.u] = cover[edge.v] = true;
  }
  for (std::size_t c = 0; c < dim; ++c) {
    if (std::find(covered[c].begin(), covered[c].end(), false) != covered[c].end()) {
      return reject("parallel class " + std::to_string(c) + " is not perfect");
    }
  }

  result.coordinates.assign(nv, 0);
  std::vector<bool> visited(nv, false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  visited[0] = true;
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (const auto& [w, e] : adjacency[v]) {
      const auto coord = result.coordinates[v] ^ (std::uint32_t{1} << result.edge_class[e]);
      if (!visited[w]) {
        visited[w] = true;
        result.coordinates[w] = coord;
        frontier.push(w);
      } else if (result.coordinates[w] != coord) {
        return reject("inconsistent coordinates at vertex " + std::to_string(w));
      }
    }
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end()) {
    return reject("graph is not connected");
  }

  std::vector<std::ptrdiff_t> vertex_at(nv, -1);
  for (std::size_t v = 0; v < nv; ++v) {
    auto& slot = vertex_at[result.coordinates[v]];
    if (slot >= 0) return reject("coordinates are not injective");
    slot = static_cast<std::ptrdiff_t>(v);
  }
  for (std::size_t v = 0; v < nv; ++v) {
    for (std::size_t c = 0; c < dim; ++c) {
      const auto w = static_cast<std::size_t>(
          vertex_at[result.coordinates[v] ^ (std::uint32_t{1} << c)]);
      if (edge_between(v, w) < 0) {
        return reject("Hamming neighbors " + std::to_string(v) + " and " +
                      std::to_string(w) + " are not adjacent");
      }
    }
  }
  result.is_cube = true;
  return result;
}

}  // namespace cubegroup
