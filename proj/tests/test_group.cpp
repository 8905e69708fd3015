#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "qgr/error.hpp"
#include "qgr/group.hpp"
#include "qgr/rng.hpp"

using namespace qgr;

namespace {

// Exhaustive group-axiom oracle on the multiplication table.
void check_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  const std::size_t e = g.identity();
  for (std::size_t a = 0; a < n; ++a) {
    CHECK(g.mul(e, a) == a);
    CHECK(g.mul(a, e) == a);
    CHECK(g.mul(a, g.inverse(a)) == e);
    CHECK(g.mul(g.inverse(a), a) == e);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
}

}  // namespace

TEST_CASE("permutation basics") {
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
  const Permutation p({1, 2, 0});
  CHECK(p.order() == 3);
  CHECK((p * p * p).is_identity());
  CHECK(p.inverse() * p == Permutation::identity(3));

  // composition applies the right factor first
  const Permutation s = Permutation::transposition(3, 0, 1);
  const Permutation q = p * s;  // first swap 0,1 then rotate
  CHECK(q(0) == 2);
  CHECK(q(1) == 1);

  const Permutation c = Permutation::from_cycles(5, {{0, 1}, {2, 3, 4}});
  CHECK(c.order() == 6);
  CHECK(c.cycles().size() == 2);
}

TEST_CASE("closure of a transposition is C2") {
  auto g = FiniteGroup::closure({Permutation({1, 0})});
  CHECK(g.order() == 2);
  check_group_axioms(g);
}

TEST_CASE("closure of 4-cycle and reflection is D4") {
  const Permutation rot({1, 2, 3, 0});
  const Permutation refl({0, 3, 2, 1});
  auto g = FiniteGroup::closure({rot, refl});
  CHECK(g.order() == 8);
  check_group_axioms(g);
}

TEST_CASE("closure of D4 generators plus independent swap has order 16") {
  auto g = fixtures::c2xd4();
  CHECK(g->order() == 16);
  CHECK(g->degree() == 6);
  check_group_axioms(*g);
}

TEST_CASE("closure guards") {
  CHECK_THROWS_AS(
      FiniteGroup::closure({Permutation({1, 2, 3, 0})}, /*max_order=*/3),
      ClosureExceeded);
  CHECK_THROWS_AS(
      FiniteGroup::closure({Permutation({1, 0}), Permutation({1, 2, 0})}),
      DegreeMismatch);
}

TEST_CASE("word parsing and inverse letters") {
  const Word w = parse_word("a b c'");
  REQUIRE(w.letters.size() == 3);
  CHECK(w.letters[2].exponent == -1);
  CHECK(w.str() == "a b c'");
  CHECK(w.inverse().str() == "c b' a'");
  CHECK(parse_word("").empty());
}

TEST_CASE("evaluate_word") {
  auto g = fixtures::c2xd4();
  const auto assign = g->generator_assignment();

  CHECK(evaluate_word(*g, Word{}, assign) == g->identity());
  CHECK(evaluate_word(*g, parse_word("a a"), assign) == g->identity());
  CHECK(evaluate_word(*g, parse_word("a b a b"), assign) == g->identity());
  CHECK(evaluate_word(*g, parse_word("c c c c"), assign) == g->identity());
  CHECK(evaluate_word(*g, parse_word("c c'"), assign) == g->identity());
  CHECK(evaluate_word(*g, parse_word("c"), assign) != g->identity());
  CHECK_THROWS_AS(evaluate_word(*g, parse_word("z"), assign), UnassignedLabel);
}

TEST_CASE("word concatenation multiplies evaluations") {
  auto g = fixtures::c2xd4();
  const auto assign = g->generator_assignment();
  Rng rng(7);
  const std::vector<std::string> letters = {"a", "b", "c", "a'", "b'", "c'"};
  for (int trial = 0; trial < 50; ++trial) {
    Word w1, w2;
    for (std::size_t i = 0; i < rng.integer(6); ++i)
      w1 = w1.concat(parse_word(letters[rng.integer(letters.size())]));
    for (std::size_t i = 0; i < rng.integer(6); ++i)
      w2 = w2.concat(parse_word(letters[rng.integer(letters.size())]));
    const std::size_t lhs = evaluate_word(*g, w1.concat(w2), assign);
    const std::size_t rhs =
        g->mul(evaluate_word(*g, w1, assign), evaluate_word(*g, w2, assign));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("regular representation is a faithful homomorphism") {
  SUBCASE("C2") {
    auto g = FiniteGroup::closure({Permutation({1, 0})});
    CHECK(g.regular_permutation(g.identity()).is_identity());
    CHECK(g.regular_permutation(1) == Permutation({1, 0}));
  }
  SUBCASE("C3 left translations are distinct") {
    auto g = FiniteGroup::closure({Permutation({1, 2, 0})});
    std::set<std::vector<std::uint32_t>> images;
    for (std::size_t e = 0; e < g.order(); ++e)
      images.insert(g.regular_permutation(e).images());
    CHECK(images.size() == 3);
  }
  SUBCASE("C2xD4: homomorphism and injectivity over all pairs") {
    auto g = fixtures::c2xd4();
    std::set<std::vector<std::uint32_t>> images;
    for (std::size_t e = 0; e < g->order(); ++e)
      images.insert(g->regular_permutation(e).images());
    CHECK(images.size() == g->order());
    for (std::size_t x = 0; x < g->order(); ++x)
      for (std::size_t y = 0; y < g->order(); ++y)
        REQUIRE(g->regular_permutation(g->mul(x, y)) ==
                g->regular_permutation(x) * g->regular_permutation(y));
  }
}

TEST_CASE("verify_presentation on C8") {
  auto g = FiniteGroup::closure(
      {Permutation({1, 2, 3, 4, 5, 6, 7, 0})}, {"g"});
  CHECK(g.order() == 8);

  Presentation p;
  p.generator_labels = {"g"};
  p.relations = {parse_word("g g g g g g g g")};
  p.irrelations = {parse_word("g g g g")};
  p.validate();

  const auto ok = verify_presentation(g, p, g.generator_assignment());
  CHECK(ok.relations_ok == std::vector<bool>{true});
  CHECK(ok.irrelations_ok == std::vector<bool>{true});
  CHECK(ok.all_ok());

  // assigning g to the identity satisfies the relation but not the
  // irrelation
  Assignment degenerate{{"g", g.identity()}};
  const auto bad = verify_presentation(g, p, degenerate);
  CHECK(bad.relations_ok == std::vector<bool>{true});
  CHECK(bad.irrelations_ok == std::vector<bool>{false});
  CHECK_FALSE(bad.all_ok());
}

TEST_CASE("verify_presentation on C2xD4") {
  auto g = fixtures::c2xd4();
  const auto pres = fixtures::c2xd4_presentation();
  pres.validate();
  const auto rep = verify_presentation(*g, pres, g->generator_assignment());
  CHECK(rep.relations_ok == std::vector<bool>(6, true));
  CHECK(rep.irrelations_ok == std::vector<bool>(4, true));
}

TEST_CASE("element names resolve back to indices") {
  auto g = fixtures::c2xd4();
  for (std::size_t e = 0; e < g->order(); ++e)
    CHECK(g->index_of(g->name(e)) == e);
  CHECK(g->name(g->identity()) == "e");
  CHECK_THROWS_AS(g->index_of("nope"), UnknownLabel);

  // canonical names evaluate to their own element
  const auto assign = g->generator_assignment();
  for (std::size_t e = 1; e < g->order(); ++e)
    CHECK(evaluate_word(*g, parse_word(g->name(e)), assign) == e);
}

TEST_CASE("element orders and subgroup check") {
  auto g = fixtures::c2xd4();
  const auto assign = g->generator_assignment();
  const std::size_t c = assign.at("c");
  CHECK(g->element_order(c) == 4);
  CHECK(g->element_order(g->identity()) == 1);

  const std::size_t c2 = g->mul(c, c);
  CHECK(g->is_subgroup({g->identity(), c2}));
  CHECK_FALSE(g->is_subgroup({g->identity(), c}));
  CHECK_FALSE(g->is_subgroup({c2}));
}
