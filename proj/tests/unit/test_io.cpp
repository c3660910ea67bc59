#include "doctest.h"

#include <algorithm>
#include <string>

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/error.hpp"
#include "comlang/expr.hpp"
#include "comlang/io.hpp"
#include "comlang/partial.hpp"
#include "comlang/verify/fixtures.hpp"
#include "comlang/verify/random.hpp"

using namespace comlang;
using namespace comlang::verify;

namespace {
const Alphabet kAB("ab");

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}
}  // namespace

TEST_CASE("dfa json is bit exact") {
  Dfa d = fixtures::count_language_minimal();
  CHECK(to_json(d).dump() ==
        R"({"alphabet":"ab","states":3,"start":0,"finals":[0,2],"delta":[{"a":1,"b":2},{"a":1,"b":2},{"a":2,"b":2}]})");
  CHECK(dfa_from_json(to_json(d)) == d);
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    Dfa r = random_dfa(rng, Alphabet("abc"), 6);
    CHECK(dfa_from_json(parse_json(to_json(r).dump())) == r);
  }
}

TEST_CASE("nfa json with epsilon edges") {
  Nfa n(kAB, 2);
  n.add_start(0);
  n.add_final(1);
  n.add_edge(0, std::nullopt, 1);
  n.add_edge(1, 0, 1);
  Json j = to_json(n);
  CHECK(j["delta"][0].contains(""));
  Nfa back = nfa_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(equivalent(automaton_from_json(j), eval("a*", kAB)));
}

TEST_CASE("malformed automata are rejected") {
  CHECK_THROWS_AS(parse_json("{"), Error);
  CHECK_THROWS_AS(
      dfa_from_json(parse_json(R"({"alphabet":"a","states":1,"start":0,"finals":[],"delta":[{"a":3}]})")),
      Error);
  CHECK_THROWS_AS(
      dfa_from_json(parse_json(R"({"alphabet":"a","states":1,"start":0,"finals":[]})")), Error);
  CHECK_THROWS_AS(
      dfa_from_json(parse_json(R"({"alphabet":"a","states":1,"start":0,"finals":[],"delta":[{}]})")),
      Error);
}

TEST_CASE("profile json") {
  Json j = to_json(profile(fixtures::count_language_minimal()));
  CHECK(j.dump() == R"({"index":[1,1],"period":[1,1],"finals":[[0,0],[0,1],[1,1]]})");
}

TEST_CASE("dot export") {
  std::string fig = to_dot(fixtures::count_language_minimal());
  CHECK(count(fig, "shape=doublecircle") == 2);
  CHECK(count(fig, "shape=circle") == 1);
  CHECK(fig.find("2 -> 2 [label=\"a,b\"]") != std::string::npos);

  std::string all = to_dot(Dfa::trivial(kAB, true));
  CHECK(count(all, "shape=doublecircle") == 1);
  CHECK(count(all, " -> 0 [label=\"a,b\"]") == 1);

  std::string twelve = to_dot(eval(fixtures::kTwelveStates, kAB));
  CHECK(count(twelve, "shape=doublecircle") == 5);
  CHECK(count(twelve, "shape=circle") == 7);
}

TEST_CASE("classification report formats") {
  auto r = classify(eval(fixtures::kL3L4NotL2, kAB), Partition::singletons(kAB));
  Json j = to_json(r);
  CHECK(j["l3"] == true);
  CHECK(j["l4"] == true);
  CHECK(j["l2"] == false);
  CHECK(j["partition"] == "a|b");
  std::string md = to_markdown(r);
  CHECK(md.find("| L4 | yes |") != std::string::npos);
  CHECK(md.find("| L2 | no |") != std::string::npos);
}
