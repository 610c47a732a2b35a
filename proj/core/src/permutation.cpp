#include "gfm/permutation.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gfm {

Permutation Permutation::identity(std::size_t size) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size() || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("not a permutation in one-line notation");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t size, int i, int j) {
  return from_cycles(size, {{i, j}});
}

Permutation Permutation::long_cycle(std::size_t size) {
  std::vector<int> images(size);
  for (std::size_t j = 0; j < size; ++j) images[j] = static_cast<int>((j + 1) % size) + 1;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t size, const std::vector<std::vector<int>>& cycles) {
  Permutation result = identity(size);
  for (const auto& cycle : cycles) {
    std::vector<int> images = identity(size).images_;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || to < 1 || static_cast<std::size_t>(from) > size || static_cast<std::size_t>(to) > size)
        throw std::invalid_argument("cycle entry out of range");
      images[static_cast<std::size_t>(from - 1)] = to;
    }
    result = result * from_images(std::move(images));
  }
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (images_[j] != static_cast<int>(j) + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t j = 0; j < images_.size(); ++j)
    out[static_cast<std::size_t>(images_[j] - 1)] = static_cast<int>(j) + 1;
  return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t j = 0; j < images_.size(); ++j) {
    if (j) out += ",";
    out += std::to_string(images_[j]);
  }
  return out + "]";
}

Permutation operator*(const Permutation& first, const Permutation& second) {
  if (first.size() != second.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> out(first.size());
  for (std::size_t j = 0; j < first.size(); ++j) out[j] = second(first.images_[j]);
  return Permutation(std::move(out));
}

std::uint64_t factorial(unsigned n) {
  std::uint64_t result = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / i) return std::numeric_limits<std::uint64_t>::max();
    result *= i;
  }
  return result;
}

std::vector<Permutation> all_permutations(std::size_t size) {
  std::vector<Permutation> out;
  std::vector<int> images = Permutation::identity(size).images();
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace gfm
