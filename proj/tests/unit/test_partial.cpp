#include "doctest.h"

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/error.hpp"
#include "comlang/expr.hpp"
#include "comlang/partial.hpp"
#include "comlang/verify/fixtures.hpp"
#include "comlang/verify/random.hpp"

using namespace comlang;
using namespace comlang::verify;

namespace {
const Alphabet kAB("ab");
const Alphabet kABC("abc");
const Alphabet kABCD("abcd");

Dfa words(const Alphabet& sigma, std::initializer_list<const char*> ws) {
  std::vector<Word> list;
  for (const char* w : ws) list.push_back(Word::parse(sigma, w));
  return from_words(sigma, list);
}
}  // namespace

TEST_CASE("Partition") {
  Partition p = Partition::parse(kABC, "ca|b");
  CHECK(p.block_count() == 2);
  CHECK(p.block(0) == std::vector<Letter>{0, 2});
  CHECK(p.block_of(1) == 1);
  CHECK(p.str() == "ac|b");
  CHECK_THROWS_AS(Partition::parse(kABC, "ab"), Error);
  CHECK_THROWS_AS(Partition::parse(kABC, "ab|bc"), Error);
  CHECK_THROWS_AS(Partition::parse(kABC, "ab||c"), Error);
  CHECK(Partition::singletons(kABC).block_count() == 3);
}

TEST_CASE("is_closed_under") {
  Partition abcd = Partition::parse(kABCD, "ab|cd");
  // acbd -> acdb swaps b and d, so the five-word set is not closed
  Dfa five = words(kABCD, {"abcd", "acbd", "cabd", "cadb", "cdab"});
  CHECK_FALSE(is_closed_under(five, abcd));
  Dfa u = words(kABCD, {"abcd", "acbd", "acdb", "cabd", "cadb", "cdab"});
  CHECK(is_closed_under(u, abcd));
  CHECK_FALSE(closure_witness(u, abcd).has_value());
  Dfa v = words(kABCD, {"abc", "bac", "cba"});
  CHECK_FALSE(is_closed_under(v, abcd));
  CHECK(closure_witness(v, abcd).has_value());

  Rng rng(1);
  Dfa d = random_dfa(rng, kABC, 5);
  CHECK(is_closed_under(d, Partition::single_block(kABC)));
  CHECK_THROWS_AS(is_closed_under(d, abcd), Error);
}

TEST_CASE("canonical automaton of the four-state example") {
  Dfa d = fixtures::partial_four_state();
  Partition part = Partition::parse(kABC, "ac|b");
  auto c = canonical_automaton(d, part);
  CHECK(c.product.state_count() == 8);
  CHECK(equivalent(c.product, d));
  CHECK(c.factors[1].automaton.state_count() == 2);
  Dfa pb = canonical_projection(d, part, 1);
  CHECK(pb.state_count() == 2);
  CHECK(equivalent(pb, projection(d, part.block(1))));
  for (std::size_t n = 0; n < c.product.state_count(); ++n) {
    auto t = c.tuple_at(n);
    CHECK(c.tuple_number(t) == n);
    CHECK(classify(state_language(c, t), part).l1);
  }
  CHECK_THROWS_AS(c.tuple_number({7, 7}), Error);
}

TEST_CASE("canonical automaton when already minimal") {
  Dfa d = eval("(a|b|c)*a c* b (a|b|c)*", kABC);
  auto c = canonical_automaton(d, Partition::parse(kABC, "ab|c"));
  CHECK(isomorphic(c.product, minimize(d)));
}

TEST_CASE("singleton partition reproduces the commutative automaton") {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 10; ++i) {
    Dfa d = random_commutative(rng, kABC, {2, 3});
    auto c = canonical_automaton(d, Partition::singletons(kABC));
    CHECK(c.product == build_commutative_automaton(d));
  }
}

TEST_CASE("single block partition projects to the minimal automaton") {
  Rng rng(2);
  Dfa d = random_dfa(rng, kABC, 5);
  Dfa p = canonical_projection(d, Partition::single_block(kABC), 0);
  CHECK(isomorphic(p, minimize(d)));
}

TEST_CASE("canonical_projection requires closure") {
  Dfa v = words(kABCD, {"abc", "bac", "cba"});
  CHECK_THROWS_AS(canonical_projection(v, Partition::parse(kABCD, "ab|cd"), 0), Error);
}

TEST_CASE("classify fixtures") {
  Partition part = Partition::singletons(kAB);
  auto r5 = classify(eval(fixtures::kL3L4NotL2, kAB), part);
  CHECK(r5.l3);
  CHECK(r5.l4);
  CHECK_FALSE(r5.l2);

  auto r34 = classify(eval(fixtures::kL3NotL4, kAB), part);
  CHECK(r34.l3);
  CHECK_FALSE(r34.l4);

  auto r1 = classify(eval(fixtures::kL1NotL4, kAB), part);
  CHECK(r1.l1);
  CHECK_FALSE(r1.l4);

  auto r12 = classify(eval(fixtures::kTwelveStates, kAB), part);
  CHECK(r12.l4);
  CHECK_FALSE(r12.l3);

  auto r2 = classify(eval(fixtures::kL2NotL1, kAB), part);
  CHECK(r2.l2);
  CHECK_FALSE(r2.l1);

  auto open = classify(eval("ab", kAB), part);
  CHECK_FALSE(open.closed);
  CHECK_FALSE(open.witnesses.empty());
}

TEST_CASE("state languages of the commutative twelve-state automaton") {
  Partition part = Partition::singletons(kAB);
  auto c = canonical_automaton(eval(fixtures::kTwelveStates, kAB), part);
  for (std::size_t n = 0; n < c.product.state_count(); ++n) {
    CHECK(classify(state_language(c, c.tuple_at(n)), part).l1);
  }
  auto all = canonical_automaton(Dfa::trivial(kAB, true), part);
  CHECK(state_language(all, {0, 0}) == Dfa::trivial(kAB, true));
}
