#include "cubegroup/permutation.hpp"

#include <algorithm>
#include <string>

#include "cubegroup/errors.hpp"

namespace cubegroup {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw CubeError(ErrorKind::LabelSetMismatch,
                      "image list is not a bijection of " +
                          std::to_string(images_.size()) + " points");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t a,
                                       std::size_t b) {
  auto p = identity(n);
  std::swap(p.images_.at(a), p.images_.at(b));
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_involution() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[images_[i]] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    p.images_[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return p;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> result;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t x = start; !done[x]; x = images_[x]) {
      done[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    throw CubeError(ErrorKind::LabelSetMismatch,
                    "cannot compose permutations of different degree");
  }
  std::vector<std::uint32_t> images(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    images[i] = static_cast<std::uint32_t>(outer(inner(i)));
  }
  return Permutation(std::move(images));
}

SignedPermutation::SignedPermutation(Permutation perm,
                                     std::vector<std::int8_t> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (signs_.size() != perm_.size()) {
    throw CubeError(ErrorKind::LabelSetMismatch,
                    "sign vector length differs from permutation degree");
  }
  for (auto s : signs_) {
    if (s != 1 && s != -1) {
      throw CubeError(ErrorKind::LabelSetMismatch, "signs must be +1 or -1");
    }
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  return SignedPermutation(Permutation::identity(n),
                           std::vector<std::int8_t>(n, 1));
}

bool SignedPermutation::is_identity() const noexcept {
  return perm_.is_identity() &&
         std::all_of(signs_.begin(), signs_.end(),
                     [](std::int8_t s) { return s == 1; });
}

std::vector<std::vector<int>> SignedPermutation::matrix() const {
  const auto n = size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t t = 0; t < n; ++t) m[perm_(t)][t] = signs_[t];
  return m;
}

SignedPermutation compose(const SignedPermutation& x,
                          const SignedPermutation& y) {
  if (x.size() != y.size()) {
    throw CubeError(ErrorKind::LabelSetMismatch,
                    "cannot compose signed permutations of different rank");
  }
  // e_t -> y.sign(t) e_{y(t)} -> y.sign(t) x.sign(y(t)) e_{x(y(t))}
  const auto n = x.size();
  std::vector<std::int8_t> signs(n);
  for (std::size_t t = 0; t < n; ++t) {
    signs[t] = static_cast<std::int8_t>(y.sign(t) * x.sign(y.perm()(t)));
  }
  return SignedPermutation(compose(x.perm(), y.perm()), std::move(signs));
}

SignedPermutation transpose(const SignedPermutation& x) {
  // Column t of x has its entry in row perm(t); transposing moves it to
  // column perm(t), row t.
  const auto inv = x.perm().inverse();
  std::vector<std::int8_t> signs(x.size());
  for (std::size_t t = 0; t < x.size(); ++t) {
    signs[x.perm()(t)] = static_cast<std::int8_t>(x.sign(t));
  }
  return SignedPermutation(inv, std::move(signs));
}

}  // namespace cubegroup
