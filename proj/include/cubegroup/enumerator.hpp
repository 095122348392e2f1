#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cubegroup/decorated_graph.hpp"

namespace cubegroup {

/// Largest rank the exhaustive enumerator accepts.
inline constexpr std::size_t kEnumerationRankCap = 5;

/// Number of involutions of an m-element set: I(m) = I(m-1) + (m-1) I(m-2).
std::size_t involution_count(std::size_t m);

/// All involutions of {0..n-1} fixing `fixed`, lexicographic by image list.
std::vector<Permutation> involutions_fixing(std::size_t n, Label fixed);

/// Every decorated graph on labels a, b, c, ... of the given rank, indexed
/// in lexicographic order of (j_a, j_b, ...). Random access by index makes
/// a sweep resumable at any graph.
class DecoratedGraphEnumerator {
 public:
  /// Throws RankCapExceeded unless 1 <= rank <= kEnumerationRankCap.
  explicit DecoratedGraphEnumerator(std::size_t rank);

  std::size_t rank() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return size_; }
  DecoratedGraph at(std::size_t index) const;

  template <class Visitor>
  void for_each(Visitor&& visit) const {
    for (std::size_t i = 0; i < size_; ++i) visit(i, at(i));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Permutation>> choices_;
  std::size_t size_ = 1;
};

DecoratedGraphEnumerator enumerate_decorated_graphs(std::size_t rank);

struct SweepOptions {
  /// worker threads; 0 means one
  std::size_t jobs = 1;
  /// also check normal forms for every planar drawing of the orbit tree
  bool all_planar_orderings = false;
  /// formula/matrix agreement is checked on every word up to this length
  std::size_t formula_word_length = 4;
  /// re-extract Γ from the generated group and compare
  bool round_trip = true;
  /// graph index range [first, first + count), clamped to the population
  std::size_t first = 0;
  std::size_t count = static_cast<std::size_t>(-1);
};

struct SweepFailure {
  std::size_t graph_index;
  std::string check;
  std::string detail;
};

struct SweepReport {
  std::size_t rank = 0;
  std::size_t total_graphs = 0;
  std::size_t admissible_count = 0;
  std::size_t verified_count = 0;
  std::vector<SweepFailure> failures;

  bool passed() const noexcept {
    return failures.empty() && verified_count == admissible_count;
  }
};

/// Runs the verification battery on one admissible graph and returns the
/// names and details of the checks that failed.
std::vector<SweepFailure> verify_graph(const DecoratedGraph& graph, const SweepOptions& options,
                                       std::size_t graph_index = 0);

/// Enumerates the population, keeps the admissible graphs, and verifies each.
/// Throws RankCapExceeded; downstream failures are recorded in the report.
SweepReport sweep(std::size_t rank, const SweepOptions& options = {});

}  // namespace cubegroup
