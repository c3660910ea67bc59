#include "doctest.h"

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/error.hpp"
#include "comlang/expr.hpp"
#include "comlang/shuffle.hpp"
#include "comlang/verify/fixtures.hpp"
#include "comlang/verify/oracles.hpp"
#include "comlang/verify/random.hpp"

using namespace comlang;
using namespace comlang::verify;

namespace {
const Alphabet kAB("ab");
}

TEST_CASE("shuffle_nfa") {
  Dfa l = eval(fixtures::kTwelveStates, kAB);
  CHECK(equivalent(shuffle_nfa(l, eval("_", kAB)), l));
  Dfa ab = shuffle_nfa(eval("a", kAB), eval("b", kAB));
  CHECK(equivalent(ab, eval("ab|ba", kAB)));

  Rng rng(kDefaultSeed);
  for (int i = 0; i < 10; ++i) {
    Dfa u = random_dfa(rng, kAB, 3);
    Dfa v = random_dfa(rng, kAB, 3);
    Dfa s = shuffle_nfa(u, v);
    for (const auto& w : words_up_to(kAB, 6)) REQUIRE(accepts(s, w) == brute_in_shuffle(u, v, w));
  }
}

TEST_CASE("shuffle_commutative agrees with the generic route") {
  Dfa u = eval("(aa)*&(bb)*", kAB);
  Dfa v = eval("(aaaa)*&b*", kAB);
  CHECK(shuffle_commutative(u, v) == shuffle_nfa(u, v));
  Dfa all = Dfa::trivial(kAB, true);
  CHECK(shuffle_commutative(all, all) == all);
  CHECK_THROWS_AS(shuffle_commutative(eval("ab", kAB), all), Error);

  Rng rng(7);
  for (int i = 0; i < 30; ++i) {
    Dfa x = random_commutative(rng, kAB);
    Dfa y = random_commutative(rng, kAB);
    CHECK(shuffle_commutative(x, y) == shuffle_nfa(x, y));
  }
}

TEST_CASE("coprime generators") {
  auto [u2, v2] = gen_coprime_pair(2, 3, kAB);
  CHECK(u2.state_count() == 4);
  CHECK(v2.state_count() == 9);
  Dfa s2 = shuffle_commutative(u2, v2);
  CHECK(s2.state_count() == 36);
  CHECK(has_product_form(s2));
  Dfa meet = minimize(boolean_product(u2, v2, BoolOp::Intersection));
  CHECK(meet.state_count() == 36);
  CHECK(has_product_form(meet));

  Alphabet a("a");
  auto [u1, v1] = gen_coprime_pair(2, 3, a);
  CHECK(u1.state_count() == 2);
  CHECK(v1.state_count() == 3);
  CHECK(shuffle_commutative(u1, v1).state_count() == 6);
  CHECK(minimize(boolean_product(u1, v1, BoolOp::Intersection)).state_count() == 6);

  CHECK_THROWS_AS(gen_coprime_pair(2, 4, kAB), Error);
  CHECK_THROWS_AS(gen_coprime_pair(1, 3, kAB), Error);
}

TEST_CASE("verify_bound") {
  auto [u, v] = gen_coprime_pair(2, 3, kAB);
  auto r = verify_bound(BoundOp::Shuffle, u, &v);
  CHECK(r.measured == 36);
  CHECK(r.bound == 72);
  CHECK(r.slack == 36);

  Alphabet a("a");
  auto [x, y] = gen_coprime_pair(2, 3, a);
  auto unary = verify_bound(BoundOp::Shuffle, x, &y);
  CHECK(unary.bound == 6);
  CHECK(unary.measured <= unary.bound);

  Dfa ex3 = eval(fixtures::kPeriodFourTwo, kAB);
  for (BoundOp op : {BoundOp::UpwardClosure, BoundOp::DownwardClosure, BoundOp::UpwardInterior,
                     BoundOp::DownwardInterior}) {
    auto c = verify_bound(op, ex3);
    CHECK(c.bound == 8);
    CHECK(c.measured <= 8);
  }
  Dfa frag = fixtures::count_language_minimal();
  CHECK_THROWS_AS(verify_bound(BoundOp::Shuffle, frag, &u), Error);
  CHECK_THROWS_AS(verify_bound(BoundOp::UpwardClosure, eval("ab", kAB)), Error);
  CHECK(parse_bound_op("up-int") == BoundOp::UpwardInterior);
  CHECK(to_string(BoundOp::ShuffleIndexPeriod) == "shuffle-index-period");
  CHECK_FALSE(parse_bound_op("concat").has_value());
}

TEST_CASE("closures") {
  Dfa four = eval(fixtures::kFourAs, kAB);
  Dfa up = upward_closure(four);
  CHECK(up.state_count() == 5);
  CHECK(equivalent(up, eval("aaaaa*&b*", kAB)));
  Dfa down = downward_closure(four);
  CHECK(down.state_count() == 6);
  CHECK(equivalent(down, eval("(_|a|aa|aaa|aaaa)&b*", kAB)));
  Dfa all = Dfa::trivial(kAB, true);
  CHECK(equivalent(upward_closure(all), all));
  CHECK(equivalent(downward_interior(all), all));
  CHECK(equivalent(upward_interior(up), up));
  for (Dfa r : {upward_interior(four), downward_interior(four)}) CHECK(r.state_count() <= 6);
}

TEST_CASE("interiors are closed subsets") {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 50; ++i) {
    Dfa d = random_commutative(rng, kAB, {2, 3});
    Dfa ui = upward_interior(d);
    Dfa di = downward_interior(d);
    CHECK(subset_of(ui, d));
    CHECK(subset_of(di, d));
    CHECK(equivalent(upward_closure(ui), ui));
    CHECK(equivalent(downward_closure(di), di));
  }
}

TEST_CASE("gen_remark5 sizes") {
  auto [u, v] = gen_remark5(13, 17);
  CHECK(u.state_count() == 210);
  CHECK(v.state_count() == 342);
  CHECK(std::size_t{14 * 15 * 18 * 19} < std::size_t{2 * 221 * 224});
  CHECK_THROWS_AS(gen_remark5(11, 13), Error);
  CHECK_THROWS_AS(gen_remark5(13, 26), Error);
}
