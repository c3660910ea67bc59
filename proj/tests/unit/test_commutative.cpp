#include "doctest.h"

#include <numeric>

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
const Alphabet kABC("abc");

Dfa weighted_mod(std::size_t p, const Alphabet& sigma) {
  std::vector<RhoBound> bounds(sigma.size(), RhoBound{0, p});
  return from_parikh_oracle(
      sigma,
      [p](std::span<const std::size_t> t) {
        std::size_t s = 0;
        for (std::size_t j = 0; j < t.size(); ++j) s += (j + 1) * t[j];
        return s % p == 0;
      },
      bounds);
}
}  // namespace

TEST_CASE("is_commutative") {
  CHECK(is_commutative(fixtures::count_language_minimal()));
  CHECK(is_commutative(Dfa::trivial(kAB, true)));
  CHECK_FALSE(is_commutative(eval("ab", kAB)));
  CHECK_THROWS_AS(profile(eval("ab", kAB)), Error);
}

TEST_CASE("profile") {
  auto p = profile(eval(fixtures::kPeriodFourTwo, kAB));
  CHECK(p.index == std::vector<std::size_t>{0, 0});
  CHECK(p.period == std::vector<std::size_t>{4, 2});

  auto all = profile(Dfa::trivial(kABC, true));
  CHECK(all.index == std::vector<std::size_t>{0, 0, 0});
  CHECK(all.period == std::vector<std::size_t>{1, 1, 1});
  CHECK(all.final_parikh == std::vector<ParikhTuple>{{0, 0, 0}});

  Rng rng(kDefaultSeed);
  for (int i = 0; i < 30; ++i) {
    Dfa d = random_commutative(rng, kAB);
    auto pr = profile(d);
    for (Letter j = 0; j < 2; ++j) {
      RhoBound b = quotient_index_period(d, j);
      CHECK(pr.index[j] == b.index);
      CHECK(pr.period[j] == b.period);
    }
  }
}

TEST_CASE("build_commutative_automaton") {
  Dfa c = build_commutative_automaton(fixtures::count_language_minimal());
  CHECK(c.state_count() == 4);
  CHECK(isomorphic(c, fixtures::count_language_commutative()));
  auto p = profile(fixtures::count_language_minimal());
  CHECK(p.final_parikh == std::vector<ParikhTuple>{{0, 0}, {0, 1}, {1, 1}});

  Dfa l5 = weighted_mod(5, kAB);
  CHECK(l5.state_count() == 5);
  CHECK(build_commutative_automaton(l5).state_count() == 25);
  CHECK(build_commutative_automaton(Dfa::trivial(kAB, true)).state_count() == 1);
}

TEST_CASE("product form") {
  auto r = product_form(eval(fixtures::kTwelveStates, kAB));
  CHECK(r.product_form);
  CHECK(r.sc == 12);
  auto fig = product_form(fixtures::count_language_minimal());
  CHECK_FALSE(fig.product_form);
  CHECK(fig.sc == 3);
  CHECK(fig.c_states == 4);
  CHECK_FALSE(has_product_form(eval("_", kAB)));
}

TEST_CASE("nerode_char_check") {
  Dfa d = fixtures::count_language_minimal();
  auto r = nerode_char_check(d, Word::parse(kAB, "a"), Word::parse(kAB, "b"));
  CHECK_FALSE(r.lhs);
  CHECK_FALSE(r.rhs);
  Word u = Word::parse(kAB, "abba");
  auto same = nerode_char_check(d, u, u);
  CHECK(same.lhs);
  CHECK(same.rhs);

  Dfa twelve = eval(fixtures::kTwelveStates, kAB);
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    std::vector<Letter> x(rng.between(0, 7)), y(rng.between(0, 7));
    for (auto& l : x) l = static_cast<Letter>(rng.between(0, 1));
    for (auto& l : y) l = static_cast<Letter>(rng.between(0, 1));
    auto c = nerode_char_check(twelve, Word(x), Word(y));
    CHECK(c.lhs == c.rhs);
  }
}

TEST_CASE("projection") {
  Dfa l = eval("aa*&bb*&cc* | bb*&a* | b*", kABC);
  std::vector<Letter> ab{0, 1};
  Dfa pi = projection(l, ab);
  CHECK(pi.alphabet() == kAB);
  CHECK(equivalent(pi, fixtures::count_language_minimal()));

  std::vector<Letter> all{0, 1, 2};
  CHECK(equivalent(projection(l, all), l));

  Dfa lang = eval("a*&bbbbb*", kAB);
  std::vector<Letter> b{1};
  Dfa pb = projection(lang, b);
  CHECK(pb.state_count() == 5);
  CHECK(equivalent(pb, eval("bbbbb*", Alphabet("b"))));
  CHECK_THROWS_AS(projection(lang, std::vector<Letter>{}), Error);
}

TEST_CASE("decompose and recompose") {
  auto dec = decompose(eval(fixtures::kTwelveStates, kAB));
  CHECK(dec.terms.size() == 5);
  auto all = decompose(Dfa::trivial(kAB, true));
  REQUIRE(all.terms.size() == 1);
  CHECK(all.terms[0].parts[0] == UnaryLang::all(0));
  CHECK(all.terms[0].parts[1] == UnaryLang::all(1));

  Rng rng(kDefaultSeed);
  for (int i = 0; i < 40; ++i) {
    Dfa d = random_commutative(rng, kABC, {2, 3});
    CHECK(recompose(decompose(d)) == minimize(d));
  }
}

TEST_CASE("from_parikh_oracle") {
  Dfa all = from_parikh_oracle(kAB, [](auto) { return true; },
                               std::vector<RhoBound>{{0, 1}, {0, 1}});
  CHECK(all == Dfa::trivial(kAB, true));

  Dfa d = eval(fixtures::kTwelveStates, kAB);
  auto p = profile(d);
  std::vector<RhoBound> bounds;
  for (std::size_t j = 0; j < 2; ++j) bounds.push_back({p.index[j], p.period[j]});
  Dfa back = from_parikh_oracle(
      kAB, [&](std::span<const std::size_t> t) { return accepts(d, Word::from_parikh(t)); },
      bounds);
  CHECK(back == d);
}

TEST_CASE("UnaryLang") {
  UnaryLang u(0, 3, 4, {1, 5});
  CHECK(u.contains(1));
  CHECK(u.contains(5));
  CHECK(u.contains(9));
  CHECK_FALSE(u.contains(2));
  // {a^1} is finite
  CHECK_FALSE(UnaryLang::single(0, 1).is_infinite());
  // (aa)^* written with a redundant period
  CHECK(UnaryLang(0, 0, 4, {0, 2}) == UnaryLang::arithmetic(0, 0, 2));
}

TEST_CASE("shuffle_unary_family") {
  Alphabet a("a");
  std::vector<UnaryLang> one{UnaryLang::single(0, 1)};
  CHECK(shuffle_unary_family(a, one).state_count() == 3);

  std::vector<UnaryLang> two{UnaryLang::arithmetic(0, 1, 2), UnaryLang::arithmetic(1, 2, 3)};
  Dfa d = shuffle_unary_family(kAB, two);
  CHECK(d.state_count() == 6);
  CHECK(has_product_form(d));

  std::vector<UnaryLang> wrong{UnaryLang::all(1)};
  CHECK_THROWS_AS(shuffle_unary_family(a, wrong), Error);
}

TEST_CASE("finite_projection_count") {
  CHECK(finite_projection_count(eval("_", kAB)) == 2);
  Dfa aa = eval("aa*", kAB);
  CHECK(finite_projection_count(aa) == 1);
  CHECK_FALSE(has_product_form(aa));
  CHECK(finite_projection_count(Dfa::trivial(kAB, true)) == 0);
}

TEST_CASE("profile tuple numbering") {
  auto p = profile(eval(fixtures::kPeriodFourTwo, kAB));
  CHECK(p.product_size() == 8);
  for (std::size_t n = 0; n < p.product_size(); ++n) CHECK(p.tuple_number(p.tuple_at(n)) == n);
  CHECK(p.tuple_at(1) == ParikhTuple{1, 0});
  CHECK(p.class_of(0, 9) == 1);
}
