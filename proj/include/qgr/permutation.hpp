#pragma once

#include <cstdint>
#include <vector>

namespace qgr {

/// Permutation of {0, ..., degree-1}, stored as the image table:
/// entry i is the image of i. Composition applies the right factor
/// first: (a * b)(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);           // identity
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  static Permutation transposition(std::size_t degree, std::uint32_t i,
                                   std::uint32_t j);
  /// Build from disjoint-cycle notation, e.g. {{0,1,2}} on degree n.
  static Permutation from_cycles(
      std::size_t degree,
      const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;  // apply rhs first
  Permutation inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  /// Non-trivial cycles (length >= 2), each starting at its smallest
  /// point, sorted by that point.
  std::vector<std::vector<std::uint32_t>> cycles() const;

  bool operator==(const Permutation& rhs) const = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace qgr
