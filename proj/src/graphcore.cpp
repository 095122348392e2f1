#include "cubegroup/graphcore.hpp"

#include <algorithm>
#include <set>

#include "cubegroup/errors.hpp"

namespace cubegroup {

std::string_view to_string(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::FourCycle: return "FourCycle";
    case TrajectoryKind::Angle: return "Angle";
    case TrajectoryKind::SingleEdge: return "SingleEdge";
    case TrajectoryKind::NotPeriodic: return "NotPeriodic";
  }
  return "Unknown";
}

namespace {

void check_label(const DecoratedGraph& graph, Label s) {
  if (s >= graph.rank()) {
    throw CubeError(ErrorKind::UnknownLabel,
                    "label index " + std::to_string(s) + " out of range");
  }
}

TrajectoryKind classify_period(const std::array<Label, 6>& t) {
  std::set<Label> distinct(t.begin(), t.begin() + 4);
  switch (distinct.size()) {
    case 2: return TrajectoryKind::SingleEdge;
    case 3: return TrajectoryKind::Angle;
    default: return TrajectoryKind::FourCycle;
  }
}

std::string seed_text(const DecoratedGraph& graph, Label a, Label b) {
  return "(" + graph.name(a) + ", " + graph.name(b) + ")";
}

}  // namespace

Trajectory trajectory(const DecoratedGraph& graph, Label s1, Label s2) {
  check_label(graph, s1);
  check_label(graph, s2);
  if (s1 == s2) {
    throw CubeError(ErrorKind::DistinctLabelsRequired,
                    "trajectory seeds must differ, got " +
                        seed_text(graph, s1, s2));
  }
  Trajectory result;
  result.terms[0] = s1;
  result.terms[1] = s2;
  for (std::size_t i = 2; i < 6; ++i) {
    result.terms[i] = graph.involution(result.terms[i - 1])(result.terms[i - 2]);
  }
  const bool periodic = result.terms[4] == s1 && result.terms[5] == s2;
  result.kind = periodic ? classify_period(result.terms)
                         : TrajectoryKind::NotPeriodic;
  return result;
}

Permutation holonomy(const DecoratedGraph& graph, Label s1, Label s2) {
  const auto traj = trajectory(graph, s1, s2);
  if (!traj.periodic()) {
    throw CubeError(ErrorKind::NotFourPeriodic,
                    "trajectory seeded at " + seed_text(graph, s1, s2) +
                        " is not 4-periodic");
  }
  auto composite = Permutation::identity(graph.rank());
  for (std::size_t i = 0; i < 4; ++i) {
    composite = compose(graph.involution(traj.terms[i]), composite);
  }
  return composite;
}

AdmissibilityReport is_admissible(const DecoratedGraph& graph) {
  AdmissibilityReport report;
  for (Label a = 0; a < graph.rank(); ++a) {
    for (Label b = 0; b < graph.rank(); ++b) {
      if (a == b) continue;
      const auto traj = trajectory(graph, a, b);
      if (!traj.periodic()) {
        report.failures.push_back(
            {a, b, AdmissibilityFailureKind::NotFourPeriodic, std::nullopt});
        continue;
      }
      auto h = holonomy(graph, a, b);
      if (!h.is_identity()) {
        report.failures.push_back(
            {a, b, AdmissibilityFailureKind::Holonomy, std::move(h)});
      }
    }
  }
  report.admissible = report.failures.empty();
  return report;
}

void require_admissible(const DecoratedGraph& graph) {
  const auto report = is_admissible(graph);
  if (report.admissible) return;
  const auto& f = report.failures.front();
  throw CubeError(ErrorKind::NotAdmissible,
                  "seed " + seed_text(graph, f.first, f.second) +
                      (f.kind == AdmissibilityFailureKind::NotFourPeriodic
                           ? " is not 4-periodic"
                           : " has holonomy"));
}

std::vector<std::pair<Label, Label>> EdgeGroup::edges() const {
  std::vector<std::pair<Label, Label>> result;
  auto add = [&](Label u, Label v) { result.emplace_back(std::min(u, v), std::max(u, v)); };
  switch (kind) {
    case TrajectoryKind::FourCycle:
      for (std::size_t i = 0; i < 4; ++i) add(labels[i], labels[(i + 1) % 4]);
      break;
    case TrajectoryKind::Angle:
      add(labels[0], labels[1]);
      add(labels[1], labels[2]);
      break;
    case TrajectoryKind::SingleEdge:
      add(labels[0], labels[1]);
      break;
    case TrajectoryKind::NotPeriodic:
      break;
  }
  std::sort(result.begin(), result.end());
  return result;
}

Word canonical_cyclic_word(const Word& word) {
  Word best = word;
  Word reversed(word.rbegin(), word.rend());
  for (const Word* base : std::array<const Word*, 2>{&word, &reversed}) {
    Word candidate = *base;
    for (std::size_t r = 0; r < candidate.size(); ++r) {
      std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
      best = std::min(best, candidate);
    }
  }
  return best;
}

std::vector<EdgeGroup> edge_partition(const DecoratedGraph& graph) {
  std::set<EdgeGroup> groups;
  for (Label a = 0; a < graph.rank(); ++a) {
    for (Label b = a + 1; b < graph.rank(); ++b) {
      const auto traj = trajectory(graph, a, b);
      if (!traj.periodic()) {
        throw CubeError(ErrorKind::NotAdmissible,
                        "trajectory seeded at " + seed_text(graph, a, b) +
                            " is not 4-periodic");
      }
      const auto& t = traj.terms;
      EdgeGroup group{traj.kind, {}};
      switch (traj.kind) {
        case TrajectoryKind::FourCycle:
          group.labels = canonical_cyclic_word(traj.period());
          break;
        case TrajectoryKind::Angle: {
          // u,s,v,s has apex s; u,v,u,w has apex u.
          Label apex = t[0] == t[2] ? t[0] : t[1];
          Label u = t[0] == t[2] ? t[1] : t[0];
          Label v = t[0] == t[2] ? t[3] : t[2];
          group.labels = {std::min(u, v), apex, std::max(u, v)};
          break;
        }
        default:
          group.labels = {a, b};
          break;
      }
      groups.insert(std::move(group));
    }
  }
  std::vector<EdgeGroup> result(groups.begin(), groups.end());
  std::stable_sort(result.begin(), result.end(),
                   [](const EdgeGroup& x, const EdgeGroup& y) {
                     return static_cast<int>(x.kind) < static_cast<int>(y.kind);
                   });
  return result;
}

std::vector<Word> presentation_relators(const DecoratedGraph& graph) {
  require_admissible(graph);
  std::vector<Word> relators;
  for (Label s = 0; s < graph.rank(); ++s) relators.push_back({s, s});
  std::set<Word> seen;
  for (Label a = 0; a < graph.rank(); ++a) {
    for (Label b = 0; b < graph.rank(); ++b) {
      if (a == b) continue;
      seen.insert(canonical_cyclic_word(trajectory(graph, a, b).period()));
    }
  }
  relators.insert(relators.end(), seen.begin(), seen.end());
  return relators;
}

}  // namespace cubegroup
