#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubegroup/permutation.hpp"

namespace cubegroup {

/// A label set S with one involution j_s of S per generator, each fixing
/// its own generator. Immutable after construction.
class DecoratedGraph {
 public:
  /// Validates: labels nonempty, whitespace-free, unique; rank <= kMaxRank;
  /// one involution per label, each an involution of S with j_s(s) = s.
  DecoratedGraph(std::vector<std::string> labels,
                 std::vector<Permutation> involutions);

  /// Every involution is the identity (the right-angled case).
  static DecoratedGraph trivial(std::vector<std::string> labels);

  std::size_t rank() const noexcept { return labels_.size(); }
  LabelMask full_mask() const noexcept;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name(Label s) const { return labels_.at(s); }

  std::optional<Label> find(std::string_view name) const;
  /// Throws UnknownLabel.
  Label index_of(std::string_view name) const;
  /// Throws UnknownLabel for any unknown letter.
  Word parse_word(const std::vector<std::string>& names) const;

  const Permutation& involution(Label s) const { return involutions_.at(s); }
  const std::vector<Permutation>& involutions() const noexcept {
    return involutions_;
  }

  /// Γ restricted to an invariant subset T, relabeled 0..|T|-1 in label
  /// order. Throws InvalidInvolution if some j_t does not preserve T.
  DecoratedGraph restrict_to(LabelMask subset) const;

  friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Permutation> involutions_;
};

/// Labels of a mask, ascending.
std::vector<Label> mask_members(LabelMask mask);
LabelMask mask_of(const std::vector<Label>& members);

}  // namespace cubegroup
