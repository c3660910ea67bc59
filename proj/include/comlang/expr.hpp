#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "comlang/automata.hpp"

namespace comlang {

/// Abstract syntax of the language expressions accepted by `parse_expr`.
struct Expr {
  enum class Kind { Letter, Epsilon, Empty, Union, Concat, Star, Shuffle, Intersect, Complement };

  Kind kind = Kind::Empty;
  Letter letter = 0;  // Kind::Letter only
  std::vector<Expr> children;

  static Expr make_letter(Letter l);
  static Expr epsilon();
  static Expr empty();
  static Expr unary(Kind kind, Expr child);
  static Expr binary(Kind kind, Expr lhs, Expr rhs);

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Grammar, loosest first: `|` union, `^` intersection, `&` shuffle,
/// concatenation (juxtaposition or `.`), prefix `!` complement, postfix `*`.
/// Atoms: letters, `_` (epsilon), `0` (empty), parentheses. Infix operators
/// associate to the left; whitespace is ignored. Throws SyntaxError (value =
/// byte offset) and UndeclaredLetter.
Expr parse_expr(std::string_view src, const Alphabet& sigma);

/// Minimal parenthesization; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e, const Alphabet& sigma);

/// Minimal DFA of the denoted language.
Dfa eval(const Expr& e, const Alphabet& sigma, const DeterminizeOptions& options = {});
Dfa eval(std::string_view src, const Alphabet& sigma, const DeterminizeOptions& options = {});

}  // namespace comlang
