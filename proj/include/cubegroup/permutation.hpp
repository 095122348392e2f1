#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cubegroup {

/// Index of a generator within its label set. Labels are always handled by
/// position; names only matter at the I/O boundary.
using Label = std::size_t;

/// Generator word in application order: word[0] acts first. The word
/// [s1, s2, ..., sk] is the group element written s_k ... s_2 s_1.
using Word = std::vector<Label>;

/// Subset of a label set, bit s set when label s is a member.
using LabelMask = std::uint32_t;

inline constexpr std::size_t kMaxRank = 20;

/// Bijection of {0, ..., n-1}.
class Permutation {
 public:
  Permutation() = default;

  /// Throws LabelSetMismatch when `images` is not a bijection of its own
  /// index range.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  bool is_involution() const noexcept;
  Permutation inverse() const;

  /// Disjoint cycles of length >= 2, each rotated to start at its least
  /// point, sorted by that point.
  std::vector<std::vector<std::size_t>> cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// outer ∘ inner: apply `inner` first.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Signed permutation matrix acting on the basis {e_0, ..., e_{n-1}}:
/// e_t maps to sign(t) * e_{perm(t)}.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(Permutation perm, std::vector<std::int8_t> signs);

  static SignedPermutation identity(std::size_t n);

  std::size_t size() const noexcept { return perm_.size(); }
  const Permutation& perm() const noexcept { return perm_; }
  int sign(std::size_t t) const { return signs_[t]; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  bool is_identity() const noexcept;

  /// Dense integer matrix, row-major; column t holds the image of e_t.
  std::vector<std::vector<int>> matrix() const;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;

 private:
  Permutation perm_;
  std::vector<std::int8_t> signs_;
};

/// x ∘ y: the matrix product x·y. Throws LabelSetMismatch on size mismatch.
SignedPermutation compose(const SignedPermutation& x,
                          const SignedPermutation& y);

SignedPermutation transpose(const SignedPermutation& x);

}  // namespace cubegroup
