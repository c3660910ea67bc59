#include "doctest.h"

#include <cstdint>
#include <limits>

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/error.hpp"
#include "comlang/group.hpp"
#include "comlang/shuffle.hpp"
#include "comlang/verify/fixtures.hpp"
#include "comlang/verify/random.hpp"

using namespace comlang;
using namespace comlang::verify;

namespace {
const Alphabet kAB("ab");
using V = std::vector<std::size_t>;
}

TEST_CASE("is_permutation_automaton") {
  CHECK(is_permutation_automaton(Dfa::trivial(kAB, true)));
  auto [u, v] = gen_coprime_pair(2, 3, kAB);
  CHECK(is_permutation_automaton(u));
  CHECK(is_permutation_automaton(v));
  CHECK_FALSE(is_permutation_automaton(fixtures::count_language_minimal()));
}

TEST_CASE("group_shuffle_bound") {
  auto b = group_shuffle_bound(V{2, 2}, V{3, 3});
  CHECK(b.bound == 36);
  CHECK(b.index == V{5, 5});
  CHECK(b.period == V{1, 1});
  CHECK(group_shuffle_bound(V{1, 1, 1}, V{1, 1, 1}).bound == 1);
  CHECK(group_shuffle_bound(V{4, 2}, V{6, 3}).bound == 78);
  CHECK_THROWS_AS(group_shuffle_bound(V{2}, V{3, 3}), Error);
}

TEST_CASE("bound for (4,2),(6,3) is reached by the coprime-style pair") {
  std::vector<UnaryLang> u{UnaryLang::arithmetic(0, 3, 4), UnaryLang::arithmetic(1, 1, 2)};
  std::vector<UnaryLang> v{UnaryLang::arithmetic(0, 5, 6), UnaryLang::arithmetic(1, 2, 3)};
  Dfa s = shuffle_commutative(shuffle_unary_family(kAB, u), shuffle_unary_family(kAB, v));
  CHECK(s.state_count() <= 78);
}

TEST_CASE("gen_sharp_group_pair") {
  auto [u, v] = gen_sharp_group_pair(2, 3, kAB);
  CHECK(shuffle_commutative(u, v).state_count() == 36);
  Alphabet a("a");
  auto [x, y] = gen_sharp_group_pair(2, 3, a);
  CHECK(shuffle_commutative(x, y).state_count() == 6);
  auto [p, q] = gen_sharp_group_pair(3, 5, a);
  CHECK(shuffle_commutative(p, q).state_count() == 15);
  CHECK(group_shuffle_bound(V{3}, V{5}).bound == 15);
  CHECK_THROWS_AS(gen_sharp_group_pair(3, 3, a), Error);
  CHECK_THROWS_AS(gen_sharp_group_pair(4, 3, a), Error);
}

TEST_CASE("gen_threshold_language") {
  Dfa t = gen_threshold_language(V{2, 3}, kAB);
  CHECK(t.state_count() == 12);
  auto p = profile(t);
  CHECK(p.index == V{2, 3});
  CHECK(p.period == V{1, 1});
  CHECK(accepts(t, "babbab"));
  CHECK_FALSE(accepts(t, "abbb"));
  CHECK(gen_threshold_language(V{0, 0}, kAB) == Dfa::trivial(kAB, true));
  CHECK(gen_threshold_language(V{4}, Alphabet("a")).state_count() == 5);
  CHECK_THROWS_AS(gen_threshold_language(V{1}, kAB), Error);
}

TEST_CASE("general_group_bound") {
  CHECK(general_group_bound(4, 9, 2) == 1296);
  CHECK(general_group_bound(1, 1, 5) == 1);
  CHECK(general_group_bound(1000, 1000, 10) == std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS(general_group_bound(0, 1, 1), Error);
}

TEST_CASE("random group pairs stay inside both bounds") {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 30; ++i) {
    Dfa u = random_group_language(rng, kAB);
    Dfa v = random_group_language(rng, kAB);
    auto pu = profile(u);
    auto pv = profile(v);
    auto g = group_shuffle_bound(pu.period, pv.period);
    std::size_t measured = shuffle_commutative(u, v).state_count();
    CHECK(measured <= g.bound);
    CHECK(g.bound <= general_group_bound(u.state_count(), v.state_count(), 2));
  }
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(17));
  CHECK_FALSE(is_prime(221));
}
