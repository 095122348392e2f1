#include "cubegroup/decorated_graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <set>

#include "cubegroup/errors.hpp"

namespace cubegroup {

DecoratedGraph::DecoratedGraph(std::vector<std::string> labels,
                               std::vector<Permutation> involutions)
    : labels_(std::move(labels)), involutions_(std::move(involutions)) {
  if (labels_.size() > kMaxRank) {
    throw CubeError(ErrorKind::RankCapExceeded,
                    "rank " + std::to_string(labels_.size()) +
                        " exceeds the cap of " + std::to_string(kMaxRank));
  }
  std::set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty() ||
        std::any_of(label.begin(), label.end(), [](unsigned char c) {
          return std::isspace(c) != 0;
        })) {
      throw CubeError(ErrorKind::ParseError,
                      "generator label '" + label +
                          "' must be nonempty and contain no whitespace");
    }
    if (!seen.insert(label).second) {
      throw CubeError(ErrorKind::DuplicateLabel, "label '" + label + "'");
    }
  }
  if (involutions_.size() != labels_.size()) {
    throw CubeError(ErrorKind::LabelSetMismatch,
                    "expected one involution per generator");
  }
  for (Label s = 0; s < labels_.size(); ++s) {
    const auto& j = involutions_[s];
    if (j.size() != labels_.size()) {
      throw CubeError(ErrorKind::LabelSetMismatch,
                      "involution of '" + labels_[s] +
                          "' acts on the wrong number of labels");
    }
    if (!j.is_involution()) {
      throw CubeError(ErrorKind::InvalidInvolution,
                      "j_" + labels_[s] + " is not an involution");
    }
    if (j(s) != s) {
      throw CubeError(ErrorKind::SelfCycle,
                      "j_" + labels_[s] + " moves its own generator");
    }
  }
}

DecoratedGraph DecoratedGraph::trivial(std::vector<std::string> labels) {
  const auto n = labels.size();
  return DecoratedGraph(std::move(labels),
                        std::vector<Permutation>(n, Permutation::identity(n)));
}

LabelMask DecoratedGraph::full_mask() const noexcept {
  return rank() == 32 ? ~LabelMask{0}
                      : static_cast<LabelMask>((LabelMask{1} << rank()) - 1);
}

std::optional<Label> DecoratedGraph::find(std::string_view name) const {
  for (Label s = 0; s < labels_.size(); ++s) {
    if (labels_[s] == name) return s;
  }
  return std::nullopt;
}

Label DecoratedGraph::index_of(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw CubeError(ErrorKind::UnknownLabel, "'" + std::string(name) + "'");
}

Word DecoratedGraph::parse_word(const std::vector<std::string>& names) const {
  Word word;
  word.reserve(names.size());
  for (const auto& name : names) word.push_back(index_of(name));
  return word;
}

DecoratedGraph DecoratedGraph::restrict_to(LabelMask subset) const {
  const auto members = mask_members(subset);
  std::vector<std::uint32_t> position(rank(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= rank()) {
      throw CubeError(ErrorKind::UnknownLabel, "subset exceeds the label set");
    }
    position[members[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<std::string> labels;
  std::vector<Permutation> involutions;
  for (Label t : members) {
    labels.push_back(labels_[t]);
    std::vector<std::uint32_t> images;
    for (Label u : members) {
      const auto image = involutions_[t](u);
      if (((subset >> image) & 1U) == 0) {
        throw CubeError(ErrorKind::InvalidInvolution,
                        "j_" + labels_[t] + " does not preserve the subset");
      }
      images.push_back(position[image]);
    }
    involutions.emplace_back(std::move(images));
  }
  return DecoratedGraph(std::move(labels), std::move(involutions));
}

std::vector<Label> mask_members(LabelMask mask) {
  std::vector<Label> members;
  while (mask != 0) {
    members.push_back(static_cast<Label>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return members;
}

LabelMask mask_of(const std::vector<Label>& members) {
  LabelMask mask = 0;
  for (auto s : members) mask |= LabelMask{1} << s;
  return mask;
}

}  // namespace cubegroup
