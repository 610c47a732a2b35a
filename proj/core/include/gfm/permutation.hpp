#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gfm {

/// Permutation of {1, ..., size}, stored in one-line image notation.
///
/// Products follow the left-to-right convention: (eta * rho)(j) = rho(eta(j)),
/// i.e. eta is applied first. With this convention the moduli action is a
/// right action, act(eta * rho, L) = act(rho, act(eta, L)).
class Permutation {
 public:
  static Permutation identity(std::size_t size);
  /// Validates that `images` (1-based) is a bijection of {1, ..., size}.
  static Permutation from_images(std::vector<int> images);
  /// The transposition (i j), 1-based.
  static Permutation transposition(std::size_t size, int i, int j);
  /// The cycle (1 2 ... size): j -> j+1, size -> 1.
  static Permutation long_cycle(std::size_t size);
  /// Product of disjoint or overlapping cycles given 1-based, applied left to right.
  static Permutation from_cycles(std::size_t size, const std::vector<std::vector<int>>& cycles);

  std::size_t size() const noexcept { return images_.size(); }
  /// Image of the 1-based point j.
  int operator()(int j) const { return images_.at(static_cast<std::size_t>(j - 1)); }
  const std::vector<int>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// "[2,1,3,4]".
  std::string to_string() const;

  friend Permutation operator*(const Permutation& first, const Permutation& second);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

/// n!, saturating at UINT64_MAX.
std::uint64_t factorial(unsigned n);

/// Every permutation of {1, ..., size} in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t size);

}  // namespace gfm
