#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cubegroup/decorated_graph.hpp"

namespace cubegroup {

enum class TrajectoryKind { FourCycle, Angle, SingleEdge, NotPeriodic };

std::string_view to_string(TrajectoryKind kind);

/// The sequence s_{n+1} = j_{s_n}(s_{n-1}) seeded by two distinct labels.
/// Only the first six terms are kept: the recurrence is a map on
/// consecutive pairs, so (s5, s6) = (s1, s2) decides 4-periodicity.
struct Trajectory {
  std::array<Label, 6> terms{};
  TrajectoryKind kind = TrajectoryKind::NotPeriodic;

  Label first() const { return terms[0]; }
  Label second() const { return terms[1]; }
  bool periodic() const { return kind != TrajectoryKind::NotPeriodic; }
  /// s1 s2 s3 s4, the relator this trajectory contributes.
  Word period() const { return {terms[0], terms[1], terms[2], terms[3]}; }
};

/// Throws DistinctLabelsRequired or UnknownLabel.
Trajectory trajectory(const DecoratedGraph& graph, Label s1, Label s2);

/// j_{s4} ∘ j_{s3} ∘ j_{s2} ∘ j_{s1} along the trajectory seeded at (s1, s2).
/// Throws NotFourPeriodic when that trajectory is not 4-periodic.
Permutation holonomy(const DecoratedGraph& graph, Label s1, Label s2);

enum class AdmissibilityFailureKind { NotFourPeriodic, Holonomy };

struct AdmissibilityFailure {
  Label first;
  Label second;
  AdmissibilityFailureKind kind;
  std::optional<Permutation> holonomy;  // set for Holonomy failures
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<AdmissibilityFailure> failures;
};

/// Checks every ordered seed pair, in label order. Failures are data.
AdmissibilityReport is_admissible(const DecoratedGraph& graph);

/// One block of the edge partition of K_S.
/// FourCycle: labels in cyclic order (rotation/reflection least in label
/// order). Angle: {u, apex, v} with u < v. SingleEdge: {u, v} with u < v.
struct EdgeGroup {
  TrajectoryKind kind;
  std::vector<Label> labels;

  std::vector<std::pair<Label, Label>> edges() const;
  friend bool operator==(const EdgeGroup&, const EdgeGroup&) = default;
  friend auto operator<=>(const EdgeGroup&, const EdgeGroup&) = default;
};

/// Four-cycles first, then angles, then single edges; each kind sorted.
/// Throws NotAdmissible if some trajectory is not 4-periodic.
std::vector<EdgeGroup> edge_partition(const DecoratedGraph& graph);

/// s^2 for every s, then one relator s1 s2 s3 s4 per class of trajectories
/// under rotation and reversal, each the least of its eight readings.
/// Throws NotAdmissible.
std::vector<Word> presentation_relators(const DecoratedGraph& graph);

/// Least rotation or reversal of a cyclic word, compared by label index.
Word canonical_cyclic_word(const Word& word);

void require_admissible(const DecoratedGraph& graph);

}  // namespace cubegroup
