#include "comlang/expr.hpp"

#include "comlang/error.hpp"
#include "comlang/shuffle.hpp"

namespace comlang {

Expr Expr::make_letter(Letter l) {
  Expr e;
  e.kind = Kind::Letter;
  e.letter = l;
  return e;
}

Expr Expr::epsilon() {
  Expr e;
  e.kind = Kind::Epsilon;
  return e;
}

Expr Expr::empty() { return Expr{}; }

Expr Expr::unary(Kind kind, Expr child) {
  Expr e;
  e.kind = kind;
  e.children.push_back(std::move(child));
  return e;
}

Expr Expr::binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

namespace {

using Kind = Expr::Kind;

class Parser {
 public:
  Parser(std::string_view src, const Alphabet& sigma) : src_(src), sigma_(sigma) {}

  Expr run() {
    Expr e = parse_union();
    skip();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n'))
      ++pos_;
  }

  char peek() {
    skip();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool starts_operand(char c) const {
    return (c >= 'a' && c <= 'z') || c == '_' || c == '0' || c == '(' || c == '!';
  }

  Expr parse_union() {
    Expr e = parse_intersect();
    while (peek() == '|') {
      ++pos_;
      e = Expr::binary(Kind::Union, std::move(e), parse_intersect());
    }
    return e;
  }

  Expr parse_intersect() {
    Expr e = parse_shuffle();
    while (peek() == '^') {
      ++pos_;
      e = Expr::binary(Kind::Intersect, std::move(e), parse_shuffle());
    }
    return e;
  }

  Expr parse_shuffle() {
    Expr e = parse_concat();
    while (peek() == '&') {
      ++pos_;
      e = Expr::binary(Kind::Shuffle, std::move(e), parse_concat());
    }
    return e;
  }

  Expr parse_concat() {
    Expr e = parse_prefix();
    for (;;) {
      char c = peek();
      if (c == '.') {
        ++pos_;
      } else if (!starts_operand(c)) {
        break;
      }
      e = Expr::binary(Kind::Concat, std::move(e), parse_prefix());
    }
    return e;
  }

  Expr parse_prefix() {
    if (peek() == '!') {
      ++pos_;
      return Expr::unary(Kind::Complement, parse_prefix());
    }
    Expr e = parse_atom();
    while (peek() == '*') {
      ++pos_;
      e = Expr::unary(Kind::Star, std::move(e));
    }
    return e;
  }

  Expr parse_atom() {
    char c = peek();
    if (c == '\0') fail("unexpected end of input");
    if (c == '(') {
      ++pos_;
      Expr e = parse_union();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (c == '_') {
      ++pos_;
      return Expr::epsilon();
    }
    if (c == '0') {
      ++pos_;
      return Expr::empty();
    }
    if (c >= 'a' && c <= 'z') {
      auto l = sigma_.find(c);
      if (!l) {
        throw Error(ErrorKind::UndeclaredLetter,
                    std::string("letter '") + c + "' is not in the declared alphabet '" +
                        sigma_.symbols() + "'",
                    pos_);
      }
      ++pos_;
      return Expr::make_letter(*l);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  const Alphabet& sigma_;
  std::size_t pos_ = 0;
};

int level(Kind k) {
  switch (k) {
    case Kind::Union: return 1;
    case Kind::Intersect: return 2;
    case Kind::Shuffle: return 3;
    case Kind::Concat: return 4;
    case Kind::Complement: return 5;
    case Kind::Star: return 6;
    default: return 7;
  }
}

void print_into(const Expr& e, const Alphabet& sigma, int min_level, std::string& out) {
  const int lv = level(e.kind);
  const bool parens = lv < min_level;
  if (parens) out.push_back('(');
  switch (e.kind) {
    case Kind::Letter: out.push_back(sigma.symbol(e.letter)); break;
    case Kind::Epsilon: out.push_back('_'); break;
    case Kind::Empty: out.push_back('0'); break;
    case Kind::Complement:
      out.push_back('!');
      print_into(e.children[0], sigma, 5, out);
      break;
    case Kind::Star:
      print_into(e.children[0], sigma, 6, out);
      out.push_back('*');
      break;
    default: {
      static constexpr char ops[] = {' ', '|', '^', '&', '\0'};
      print_into(e.children[0], sigma, lv, out);
      if (ops[lv] != '\0') out.push_back(ops[lv]);
      print_into(e.children[1], sigma, lv + 1, out);
    }
  }
  if (parens) out.push_back(')');
}

// Copies `d` into `n`, returning the offset of its state 0.
State embed(Nfa& n, const Dfa& d) {
  State base = static_cast<State>(n.state_count());
  for (std::size_t i = 0; i < d.state_count(); ++i) n.add_state();
  for (State q = 0; q < d.state_count(); ++q) {
    for (Letter a = 0; a < d.letter_count(); ++a) n.add_edge(base + q, a, base + d.next(q, a));
  }
  return base;
}

Dfa concat(const Dfa& a, const Dfa& b, const DeterminizeOptions& options) {
  Nfa n(a.alphabet(), 0);
  State oa = embed(n, a);
  State ob = embed(n, b);
  n.add_start(oa + a.start());
  for (State f : a.finals()) n.add_edge(oa + f, std::nullopt, ob + b.start());
  for (State f : b.finals()) n.add_final(ob + f);
  return minimize(determinize(n, options));
}

Dfa star(const Dfa& a, const DeterminizeOptions& options) {
  Nfa n(a.alphabet(), 1);
  State oa = embed(n, a);
  n.add_start(0);
  n.add_final(0);
  n.add_edge(0, std::nullopt, oa + a.start());
  for (State f : a.finals()) n.add_edge(oa + f, std::nullopt, 0);
  return minimize(determinize(n, options));
}

Dfa alternative(const Dfa& a, const Dfa& b, const DeterminizeOptions& options) {
  Nfa n(a.alphabet(), 1);
  State oa = embed(n, a);
  State ob = embed(n, b);
  n.add_start(0);
  n.add_edge(0, std::nullopt, oa + a.start());
  n.add_edge(0, std::nullopt, ob + b.start());
  for (State f : a.finals()) n.add_final(oa + f);
  for (State f : b.finals()) n.add_final(ob + f);
  return minimize(determinize(n, options));
}

Dfa word_dfa(const Alphabet& sigma, std::vector<Letter> w) {
  const Word words[] = {Word(std::move(w))};
  return minimize(from_words(sigma, words));
}

}  // namespace

Expr parse_expr(std::string_view src, const Alphabet& sigma) { return Parser(src, sigma).run(); }

std::string print_expr(const Expr& e, const Alphabet& sigma) {
  std::string out;
  print_into(e, sigma, 1, out);
  return out;
}

Dfa eval(const Expr& e, const Alphabet& sigma, const DeterminizeOptions& options) {
  switch (e.kind) {
    case Kind::Letter: return word_dfa(sigma, {e.letter});
    case Kind::Epsilon: return word_dfa(sigma, {});
    case Kind::Empty: return Dfa::trivial(sigma, false);
    case Kind::Complement: return minimize(complement(eval(e.children[0], sigma, options)));
    case Kind::Star: return star(eval(e.children[0], sigma, options), options);
    default: break;
  }
  Dfa a = eval(e.children[0], sigma, options);
  Dfa b = eval(e.children[1], sigma, options);
  switch (e.kind) {
    case Kind::Union: return alternative(a, b, options);
    case Kind::Concat: return concat(a, b, options);
    case Kind::Shuffle: return shuffle_nfa(a, b, options);
    case Kind::Intersect: return minimize(boolean_product(a, b, BoolOp::Intersection));
    default: break;
  }
  throw Error(ErrorKind::InvalidFormat, "malformed expression node");
}

Dfa eval(std::string_view src, const Alphabet& sigma, const DeterminizeOptions& options) {
  return eval(parse_expr(src, sigma), sigma, options);
}

}  // namespace comlang
