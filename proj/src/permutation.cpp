#include "qgr/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "qgr/error.hpp"

namespace qgr {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      throw Error("permutation image table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  return Permutation(degree);
}

Permutation Permutation::transposition(std::size_t degree, std::uint32_t i,
                                       std::uint32_t j) {
  Permutation p(degree);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k)
      p.images_[c[k]] = c[(k + 1) % c.size()];
  // re-validate through the checking constructor
  return Permutation(std::move(p.images_));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw DegreeMismatch("cannot compose permutations of different degree");
  std::vector<std::uint32_t> out(degree());
  for (std::size_t i = 0; i < degree(); ++i) out[i] = images_[rhs.images_[i]];
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> out(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) out[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(out);
  return p;
}

bool Permutation::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::order() const {
  std::size_t ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, c.size());
  return ord;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree(), false);
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<std::uint32_t> c;
    std::uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      c.push_back(j);
      j = images_[j];
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = p.degree();
  for (auto v : p.images())
    h ^= v + 0x9e3779b9 + (h << 6) + (h >> 2);
  return h;
}

}  // namespace qgr
