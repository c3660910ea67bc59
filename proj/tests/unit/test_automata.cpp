#include "doctest.h"

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/error.hpp"
#include "comlang/expr.hpp"
#include "comlang/verify/fixtures.hpp"
#include "comlang/verify/oracles.hpp"
#include "comlang/verify/random.hpp"

using namespace comlang;
using namespace comlang::verify;

namespace {
const Alphabet kAB("ab");

// some u in L(d) gives w by inserting a's only
bool by_inserting_a(const Dfa& d, const Word& w) {
  for (const auto& u : words_up_to(d.alphabet(), w.size())) {
    if (accepts(d, u) && is_subsequence(u, w) && u.parikh(2)[1] == w.parikh(2)[1]) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("minimize: four-state commutative automaton collapses to three states") {
  Dfa right = fixtures::count_language_commutative();
  Dfa left = fixtures::count_language_minimal();
  Dfa m = minimize(right);
  CHECK(m.state_count() == 3);
  CHECK(isomorphic(m, left));
  CHECK(equivalent(left, right));
  CHECK_FALSE(isomorphic(left, right));
}

TEST_CASE("minimize: sigma star is already minimal") {
  Dfa all = Dfa::trivial(kAB, true);
  CHECK(minimize(all) == all);
}

TEST_CASE("minimize: Hopcroft agrees with Moore on random automata") {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 50; ++i) {
    Dfa d = random_dfa(rng, kAB, 10);
    Dfa h = minimize(d);
    CHECK(h == moore_minimize(d));
    CHECK(minimize(h) == h);
    CHECK(equivalent(d, h));
  }
}

TEST_CASE("determinize: a-loop closure nfa of the count language") {
  Dfa left = fixtures::count_language_minimal();
  Nfa n = Nfa::from_dfa(left);
  for (State q = 0; q < left.state_count(); ++q) n.add_edge(q, 0, q);
  Dfa up = determinize(n);
  CHECK(up.state_count() == 3);
  for (const auto& w : words_up_to(kAB, 6)) {
    CHECK(accepts(up, w) == by_inserting_a(left, w));
  }
}

TEST_CASE("determinize: deterministic nfa keeps its structure") {
  Dfa left = fixtures::count_language_minimal();
  CHECK(canonical_form(determinize(Nfa::from_dfa(left))) == canonical_form(left));
}

TEST_CASE("determinize: random nfa against direct simulation") {
  Rng rng(kDefaultSeed + 1);
  for (int i = 0; i < 20; ++i) {
    Nfa n = random_nfa(rng, kAB, 4, 8, 2);
    Dfa d = determinize(n);
    for (const auto& w : words_up_to(kAB, 8)) {
      REQUIRE(accepts(d, w) == nfa_accepts(n, w));
    }
  }
}

TEST_CASE("determinize: guard raises StateBlowup with the limit") {
  Rng rng(3);
  Nfa n = random_nfa(rng, kAB, 10, 30, 0);
  try {
    determinize(n, DeterminizeOptions{1});
    FAIL("expected StateBlowup");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StateBlowup);
    CHECK(e.value() == 1);
  }
}

TEST_CASE("equivalent and isomorphic") {
  Dfa d = fixtures::count_language_minimal();
  CHECK_FALSE(equivalent(d, complement(d)));
  CHECK(distinguishing_word(d, d) == std::nullopt);
  auto w = distinguishing_word(d, complement(d));
  REQUIRE(w.has_value());
  CHECK(w->empty());
  CHECK_THROWS_AS(equivalent(d, Dfa::trivial(Alphabet("abc"), true)), Error);

  // relabel states 1 and 2
  Dfa swapped(kAB, 3, 0, {0, 1}, {2, 1, 1, 1, 2, 1});
  CHECK(equivalent(d, swapped));
  CHECK(isomorphic(d, swapped));

  Dfa twelve = eval(fixtures::kTwelveStates, kAB);
  CHECK(isomorphic(twelve, minimize(twelve)));
}

TEST_CASE("boolean_product") {
  Dfa x = eval("a&b*", kAB);
  Dfa y = eval("a*&b", kAB);
  CHECK(equivalent(minimize(boolean_product(x, y, BoolOp::Intersection)), eval("a&b", kAB)));
  CHECK(equivalent(boolean_product(x, Dfa::trivial(kAB, false), BoolOp::Union), x));
  CHECK(is_empty(boolean_product(x, x, BoolOp::Difference)));
  Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    Dfa a = random_dfa(rng, kAB, 4);
    Dfa b = random_dfa(rng, kAB, 5);
    CHECK(boolean_product(a, b, BoolOp::Union).state_count() <= 20);
  }
}

TEST_CASE("complement and quotients") {
  Dfa d = eval(fixtures::kTwelveStates, kAB);
  CHECK(complement(complement(d)) == d);
  CHECK(equivalent(left_quotient(d, Word{}), d));
  Dfa q = minimize(left_quotient(d, Word::parse(kAB, "a")));
  CHECK(equivalent(q, eval("a(aa)*&(bb)* | aa(aaa)*&b(bb)*", kAB)));
  CHECK(has_product_form(q));
  CHECK(profile(q).index == profile(d).index);
  CHECK_THROWS_AS(Word::parse(kAB, "c"), Error);
  for (const auto& w : words_up_to(kAB, 6)) {
    CHECK(accepts(complement(d), w) != accepts(d, w));
  }
}

TEST_CASE("accepts") {
  Dfa left = fixtures::count_language_minimal();
  CHECK(accepts(left, "ab"));
  CHECK_FALSE(accepts(left, "a"));
  CHECK(accepts(left, "") == left.is_final(left.start()));
  CHECK_THROWS_AS(accepts(left, "x"), Error);
}

TEST_CASE("Dfa rejects out of range transitions") {
  CHECK_THROWS_AS(Dfa(kAB, 1, 0, {}, {0, 1}), Error);
  CHECK_THROWS_AS(Dfa(kAB, 1, 1, {}, {0, 0}), Error);
}
