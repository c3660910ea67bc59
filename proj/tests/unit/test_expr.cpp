#include "doctest.h"

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/error.hpp"
#include "comlang/expr.hpp"
#include "comlang/verify/fixtures.hpp"

using namespace comlang;
using K = Expr::Kind;

namespace {
const Alphabet kAB("ab");
Expr L(char c) { return Expr::make_letter(kAB.index_of(c)); }
}

TEST_CASE("parse: twelve-state source") {
  Expr e = parse_expr(verify::fixtures::kTwelveStates, kAB);
  Expr aa = Expr::binary(K::Concat, L('a'), L('a'));
  Expr bb = Expr::binary(K::Concat, L('b'), L('b'));
  Expr aaa = Expr::binary(K::Concat, aa, L('a'));
  Expr left = Expr::binary(K::Shuffle, Expr::unary(K::Star, aa), Expr::unary(K::Star, bb));
  Expr right = Expr::binary(K::Shuffle, Expr::unary(K::Star, aaa),
                            Expr::binary(K::Concat, L('b'), Expr::unary(K::Star, bb)));
  CHECK(e == Expr::binary(K::Union, left, right));
}

TEST_CASE("parse: atoms and precedence") {
  CHECK(parse_expr("_", kAB) == Expr::epsilon());
  CHECK(parse_expr("0", kAB) == Expr::empty());
  Expr e = parse_expr("a&b^a.b|b.a", kAB);
  Expr want = Expr::binary(
      K::Union,
      Expr::binary(K::Intersect, Expr::binary(K::Shuffle, L('a'), L('b')),
                   Expr::binary(K::Concat, L('a'), L('b'))),
      Expr::binary(K::Concat, L('b'), L('a')));
  CHECK(e == want);
  CHECK(equivalent(eval(e, kAB), eval("((a&b)^(a.b))|(b.a)", kAB)));
  CHECK(parse_expr("!a*", kAB) == Expr::unary(K::Complement, Expr::unary(K::Star, L('a'))));
  CHECK(parse_expr("a|b|a", kAB) ==
        Expr::binary(K::Union, Expr::binary(K::Union, L('a'), L('b')), L('a')));
}

TEST_CASE("parse errors") {
  try {
    parse_expr("a|", kAB);
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.value() == 2);
  }
  CHECK_THROWS_AS(parse_expr("(ab", kAB), Error);
  CHECK_THROWS_AS(parse_expr("a)", kAB), Error);
  try {
    parse_expr("ac", kAB);
    FAIL("expected UndeclaredLetter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UndeclaredLetter);
  }
}

TEST_CASE("print round trip") {
  for (const char* src : {verify::fixtures::kTwelveStates, verify::fixtures::kL2NotL1,
                          "!(!a)", "(a|b)*", "a.(b&a)*", "_|0", "(a^b)&!b", "(ab)*"}) {
    Expr e = parse_expr(src, kAB);
    CHECK(parse_expr(print_expr(e, kAB), kAB) == e);
  }
}

TEST_CASE("eval") {
  Dfa twelve = eval(verify::fixtures::kTwelveStates, kAB);
  CHECK(twelve.state_count() == 12);
  CHECK(has_product_form(twelve));
  CHECK(eval("0", kAB) == Dfa::trivial(kAB, false));
  CHECK(eval("!(!a)", kAB) == eval("a", kAB));
  CHECK(eval("_*", kAB) == eval("_", kAB));
  CHECK(eval("(a|b)*", kAB) == Dfa::trivial(kAB, true));
  CHECK(eval("a&b", kAB) == eval("ab|ba", kAB));
}
