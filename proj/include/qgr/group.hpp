#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qgr/permutation.hpp"

namespace qgr {

/// One letter of a word: a generator label with exponent +1 or -1.
struct WordLetter {
  std::string label;
  int exponent = 1;
  bool operator==(const WordLetter&) const = default;
};

/// A word over generator labels. Exponents are restricted to +-1;
/// higher powers are written as repeated letters.
struct Word {
  std::vector<WordLetter> letters;

  bool empty() const { return letters.empty(); }
  Word inverse() const;
  Word concat(const Word& rhs) const;
  std::string str() const;  // "a b c'" form
  bool operator==(const Word&) const = default;
};

/// Parse a space-separated word; a trailing ' marks an inverse
/// letter ("a b c'" = a * b * c^-1).
Word parse_word(const std::string& text);

/// An absolute presentation: relation words equal the identity,
/// irrelation words must not.
struct Presentation {
  std::vector<std::string> generator_labels;
  std::vector<Word> relations;
  std::vector<Word> irrelations;

  /// Throws UnknownLabel/Error if a word uses an undeclared label or
  /// a relation/irrelation is empty.
  void validate() const;
};

using Assignment = std::map<std::string, std::size_t>;  // label -> element

/// Finite permutation group with a full multiplication table.
/// Element 0 is the identity; elements carry canonical names, which
/// are shortest products of generator labels in discovery order.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 4096;

  /// Breadth-first product closure of the given generators.
  /// Throws ClosureExceeded if more than max_order elements appear and
  /// DegreeMismatch if the generators act on different point counts.
  static FiniteGroup closure(const std::vector<Permutation>& generators,
                             const std::vector<std::string>& labels,
                             std::size_t max_order = kDefaultMaxOrder);
  static FiniteGroup closure(const std::vector<Permutation>& generators,
                             std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  std::size_t identity() const { return 0; }

  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  /// Element index by canonical name; throws UnknownLabel if absent.
  std::size_t index_of(const std::string& name) const;

  const std::vector<std::size_t>& generator_indices() const {
    return generator_indices_;
  }
  const std::vector<std::string>& generator_labels() const {
    return generator_labels_;
  }

  /// label -> generator element index, for all declared generators.
  Assignment generator_assignment() const;

  /// Left-translation permutation of degree |G|: i -> g*i.
  Permutation regular_permutation(std::size_t g) const;

  /// Order of an element under the multiplication table.
  std::size_t element_order(std::size_t g) const;

  /// True iff the index set is closed under mul and inverse.
  bool is_subgroup(const std::vector<std::size_t>& indices) const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> generator_indices_;
  std::vector<std::string> generator_labels_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> name_index_;
};

/// Left-to-right product of the word under the assignment.
/// Throws UnassignedLabel if a letter has no assigned element.
std::size_t evaluate_word(const FiniteGroup& g, const Word& word,
                          const Assignment& assignment);

struct PresentationReport {
  std::vector<bool> relations_ok;    // word == identity
  std::vector<bool> irrelations_ok;  // word != identity
  bool all_ok() const;
};

PresentationReport verify_presentation(const FiniteGroup& g,
                                       const Presentation& pres,
                                       const Assignment& assignment);

}  // namespace qgr
