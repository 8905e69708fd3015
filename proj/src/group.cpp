#include "qgr/group.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "qgr/error.hpp"

namespace qgr {

Word Word::inverse() const {
  Word out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back({it->label, -it->exponent});
  return out;
}

Word Word::concat(const Word& rhs) const {
  Word out = *this;
  out.letters.insert(out.letters.end(), rhs.letters.begin(),
                     rhs.letters.end());
  return out;
}

std::string Word::str() const {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += l.label;
    if (l.exponent < 0) out += '\'';
  }
  return out;
}

Word parse_word(const std::string& text) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int exp = 1;
    if (tok.size() > 1 && tok.back() == '\'') {
      exp = -1;
      tok.pop_back();
    }
    if (tok.empty()) throw ParseError("empty letter in word: '" + text + "'");
    w.letters.push_back({tok, exp});
  }
  return w;
}

void Presentation::validate() const {
  auto known = [&](const std::string& l) {
    return std::find(generator_labels.begin(), generator_labels.end(), l) !=
           generator_labels.end();
  };
  auto check = [&](const std::vector<Word>& words, const char* what) {
    for (const auto& w : words) {
      if (w.empty())
        throw Error(std::string("empty ") + what + " word in presentation");
      for (const auto& l : w.letters)
        if (!known(l.label))
          throw UnknownLabel("word uses undeclared generator '" + l.label +
                             "'");
    }
  };
  check(relations, "relation");
  check(irrelations, "irrelation");
}

FiniteGroup FiniteGroup::closure(const std::vector<Permutation>& generators,
                                 std::size_t max_order) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < generators.size(); ++i)
    labels.push_back("g" + std::to_string(i));
  return closure(generators, labels, max_order);
}

FiniteGroup FiniteGroup::closure(const std::vector<Permutation>& generators,
                                 const std::vector<std::string>& labels,
                                 std::size_t max_order) {
  if (generators.empty()) throw Error("closure needs at least one generator");
  if (labels.size() != generators.size())
    throw Error("one label per generator required");
  FiniteGroup g;
  g.degree_ = generators[0].degree();
  for (const auto& p : generators)
    if (p.degree() != g.degree_)
      throw DegreeMismatch("generators act on different point counts");

  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  g.elements_.push_back(Permutation::identity(g.degree_));
  g.names_.push_back("e");
  index.emplace(g.elements_[0], 0);

  // BFS by right multiplication; names grow as words left to right.
  for (std::size_t i = 0; i < g.elements_.size(); ++i) {
    for (std::size_t j = 0; j < generators.size(); ++j) {
      Permutation next = g.elements_[i] * generators[j];
      if (index.contains(next)) continue;
      if (g.elements_.size() >= max_order)
        throw ClosureExceeded("generated set exceeds max_order = " +
                              std::to_string(max_order));
      index.emplace(next, g.elements_.size());
      g.names_.push_back(i == 0 ? labels[j] : g.names_[i] + " " + labels[j]);
      g.elements_.push_back(std::move(next));
    }
  }

  const std::size_t n = g.elements_.size();
  g.table_.assign(n, std::vector<std::uint32_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g.table_[a][b] =
          static_cast<std::uint32_t>(index.at(g.elements_[a] * g.elements_[b]));

  g.inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    g.inverse_[a] = index.at(g.elements_[a].inverse());

  g.generator_labels_ = labels;
  for (const auto& p : generators) g.generator_indices_.push_back(index.at(p));
  for (std::size_t i = 0; i < n; ++i) g.name_index_.emplace(g.names_[i], i);
  return g;
}

std::size_t FiniteGroup::index_of(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end())
    throw UnknownLabel("no element named '" + name + "'");
  return it->second;
}

Assignment FiniteGroup::generator_assignment() const {
  Assignment a;
  for (std::size_t j = 0; j < generator_labels_.size(); ++j)
    a[generator_labels_[j]] = generator_indices_[j];
  return a;
}

Permutation FiniteGroup::regular_permutation(std::size_t g) const {
  std::vector<std::uint32_t> images(order());
  for (std::size_t i = 0; i < order(); ++i) images[i] = table_[g][i];
  return Permutation(std::move(images));
}

std::size_t FiniteGroup::element_order(std::size_t g) const {
  std::size_t k = 1, cur = g;
  while (cur != identity()) {
    cur = mul(cur, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_subgroup(const std::vector<std::size_t>& indices) const {
  std::vector<bool> in(order(), false);
  for (auto i : indices) {
    if (i >= order()) return false;
    in[i] = true;
  }
  if (!in[identity()]) return false;
  for (auto a : indices)
    for (auto b : indices)
      if (!in[mul(a, b)]) return false;
  for (auto a : indices)
    if (!in[inverse(a)]) return false;
  return true;
}

std::size_t evaluate_word(const FiniteGroup& g, const Word& word,
                          const Assignment& assignment) {
  std::size_t acc = g.identity();
  for (const auto& l : word.letters) {
    auto it = assignment.find(l.label);
    if (it == assignment.end())
      throw UnassignedLabel("label '" + l.label + "' has no assigned element");
    std::size_t e = it->second;
    if (l.exponent < 0) e = g.inverse(e);
    acc = g.mul(acc, e);
  }
  return acc;
}

bool PresentationReport::all_ok() const {
  auto all = [](const std::vector<bool>& v) {
    return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
  };
  return all(relations_ok) && all(irrelations_ok);
}

PresentationReport verify_presentation(const FiniteGroup& g,
                                       const Presentation& pres,
                                       const Assignment& assignment) {
  PresentationReport rep;
  for (const auto& w : pres.relations)
    rep.relations_ok.push_back(evaluate_word(g, w, assignment) ==
                               g.identity());
  for (const auto& w : pres.irrelations)
    rep.irrelations_ok.push_back(evaluate_word(g, w, assignment) !=
                                 g.identity());
  return rep;
}

}  // namespace qgr
