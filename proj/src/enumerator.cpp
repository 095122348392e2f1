#include "cubegroup/enumerator.hpp"

#include <algorithm>
#include <thread>

#include "cubegroup/decomposition.hpp"
#include "cubegroup/errors.hpp"
#include "cubegroup/graphcore.hpp"
#include "cubegroup/group.hpp"
#include "cubegroup/representation.hpp"

namespace cubegroup {

std::size_t involution_count(std::size_t m) {
  std::size_t prev = 1, curr = 1;  // I(0), I(1)
  if (m == 0) return 1;
  for (std::size_t k = 2; k <= m; ++k) {
    const auto next = curr + (k - 1) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

namespace {

void extend_matchings(std::vector<std::uint32_t>& images, std::vector<bool>& placed,
                      std::vector<Permutation>& out) {
  auto it = std::find(placed.begin(), placed.end(), false);
  if (it == placed.end()) {
    out.emplace_back(images);
    return;
  }
  const auto x = static_cast<std::size_t>(it - placed.begin());
  placed[x] = true;
  images[x] = static_cast<std::uint32_t>(x);
  extend_matchings(images, placed, out);
  for (std::size_t y = x + 1; y < placed.size(); ++y) {
    if (placed[y]) continue;
    placed[y] = true;
    images[x] = static_cast<std::uint32_t>(y);
    images[y] = static_cast<std::uint32_t>(x);
    extend_matchings(images, placed, out);
    images[y] = static_cast<std::uint32_t>(y);
    placed[y] = false;
  }
  images[x] = static_cast<std::uint32_t>(x);
  placed[x] = false;
}

}  // namespace

std::vector<Permutation> involutions_fixing(std::size_t n, Label fixed) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> placed(n, false);
  placed.at(fixed) = true;
  std::vector<Permutation> out;
  extend_matchings(images, placed, out);
  std::sort(out.begin(), out.end());
  return out;
}

DecoratedGraphEnumerator::DecoratedGraphEnumerator(std::size_t rank) {
  if (rank < 1 || rank > kEnumerationRankCap) {
    throw CubeError(ErrorKind::RankCapExceeded,
                    "enumeration rank must be between 1 and " +
                        std::to_string(kEnumerationRankCap) + ", got " + std::to_string(rank));
  }
  for (std::size_t s = 0; s < rank; ++s) {
    labels_.push_back(std::string(1, static_cast<char>('a' + s)));
    choices_.push_back(involutions_fixing(rank, s));
    size_ *= choices_.back().size();
  }
}

DecoratedGraph DecoratedGraphEnumerator::at(std::size_t index) const {
  if (index >= size_) {
    throw CubeError(ErrorKind::Usage, "graph index " + std::to_string(index) + " out of range");
  }
  // Mixed radix with j_a most significant.
  std::vector<Permutation> involutions(rank());
  for (std::size_t s = rank(); s-- > 0;) {
    const auto base = choices_[s].size();
    involutions[s] = choices_[s][index % base];
    index /= base;
  }
  return DecoratedGraph(labels_, std::move(involutions));
}

DecoratedGraphEnumerator enumerate_decorated_graphs(std::size_t rank) {
  return DecoratedGraphEnumerator(rank);
}

namespace {

std::string word_text(const DecoratedGraph& graph, const Word& word) {
  std::string out;
  for (auto s : word) out += (out.empty() ? "" : " ") + graph.name(s);
  return out.empty() ? "(empty)" : out;
}

// Depth-first over all words up to max_length, carrying the matrix product.
void check_formula_words(const DecoratedGraph& graph, Word& word,
                         const SignedPermutation& product, std::size_t max_length,
                         std::vector<std::string>& mismatches) {
  if (!mismatches.empty()) return;
  if (!(rho_via_formula(graph, word) == product)) {
    mismatches.push_back(word_text(graph, word));
    return;
  }
  if (word.size() == max_length) return;
  for (Label s = 0; s < graph.rank(); ++s) {
    word.push_back(s);
    check_formula_words(graph, word, compose(generator_rho(graph, s), product), max_length,
                        mismatches);
    word.pop_back();
  }
}

}  // namespace

std::vector<SweepFailure> verify_graph(const DecoratedGraph& graph, const SweepOptions& options,
                                       std::size_t graph_index) {
  std::vector<SweepFailure> failures;
  auto fail = [&](std::string check, std::string detail) {
    failures.push_back({graph_index, std::move(check), std::move(detail)});
  };
  const auto n = graph.rank();

  std::optional<CubeGroup> group;
  try {
    group.emplace(generate_group(graph));
  } catch (const CubeError& e) {
    fail("generate_group", e.what());
    return failures;
  }
  if (group->order() != (std::size_t{1} << n)) {
    fail("order", "order " + std::to_string(group->order()));
  }
  if (!is_hypercube(group->cayley()).is_cube) fail("hypercube", group->cube().reason);

  try {
    if (n >= 2) {
      if (!two_orbit_check(graph)) fail("two_orbits", "S is a single orbit");
      if (!is_reducible(graph)) fail("reducible", "no proper invariant coordinate block");
    }
    const auto tree = orbit_tree(graph);
    std::vector<std::vector<Label>> orderings;
    if (options.all_planar_orderings) {
      orderings = planar_orderings(tree);
    } else {
      orderings.push_back(decomposition_ordering(tree));
    }
    for (const auto& ordering : orderings) {
      try {
        normal_form(*group, ordering);
      } catch (const NotADecomposition& e) {
        fail("normal_form", e.what());
      }
    }
  } catch (const CubeError& e) {
    fail("decomposition", e.what());
  }

  std::vector<std::string> mismatches;
  Word word;
  check_formula_words(graph, word, SignedPermutation::identity(n), options.formula_word_length,
                      mismatches);
  for (const auto& w : mismatches) fail("rho_formula", "word " + w);

  if (options.round_trip) {
    std::vector<SignedPermutation> gens;
    for (Label s = 0; s < n; ++s) gens.push_back(generator_rho(graph, s));
    try {
      auto back = decorated_graph_from_group(
          graph.labels(), std::span<const SignedPermutation>(gens),
          SignedPermutation::identity(n),
          [](const SignedPermutation& x, const SignedPermutation& y) { return compose(x, y); });
      if (!(back == graph)) fail("round_trip", "extracted decorated graph differs");
    } catch (const CubeError& e) {
      fail("round_trip", e.what());
    }
  }
  return failures;
}

SweepReport sweep(std::size_t rank, const SweepOptions& options) {
  const DecoratedGraphEnumerator population(rank);
  const auto first = std::min(options.first, population.size());
  const auto last = first + std::min(options.count, population.size() - first);

  struct Partial {
    std::size_t total = 0;
    std::size_t admissible = 0;
    std::size_t verified = 0;
    std::vector<SweepFailure> failures;
  };
  const auto jobs = std::max<std::size_t>(1, options.jobs);
  std::vector<Partial> partials(jobs);
  // TODO: the static stride leaves workers idle when admissible graphs cluster; a shared counter would balance better.
  auto work = [&](std::size_t worker) {
    auto& p = partials[worker];
    for (std::size_t i = first + worker; i < last; i += jobs) {
      const auto graph = population.at(i);
      ++p.total;
      if (!is_admissible(graph).admissible) continue;
      ++p.admissible;
      auto failures = verify_graph(graph, options, i);
      if (failures.empty()) {
        ++p.verified;
      } else {
        p.failures.insert(p.failures.end(), failures.begin(), failures.end());
      }
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }

  SweepReport report;
  report.rank = rank;
  for (auto& p : partials) {
    report.total_graphs += p.total;
    report.admissible_count += p.admissible;
    report.verified_count += p.verified;
    report.failures.insert(report.failures.end(), p.failures.begin(), p.failures.end());
  }
  std::stable_sort(report.failures.begin(), report.failures.end(),
                   [](const SweepFailure& a, const SweepFailure& b) {
                     return a.graph_index < b.graph_index;
                   });
  return report;
}

}  // namespace cubegroup
