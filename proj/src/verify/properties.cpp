#include <algorithm>
#include <map>
#include <set>

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/expr.hpp"
#include "comlang/group.hpp"
#include "comlang/partial.hpp"
#include "comlang/shuffle.hpp"
#include "comlang/verify/checks.hpp"
#include "comlang/verify/fixtures.hpp"
#include "comlang/verify/oracles.hpp"
#include "comlang/verify/random.hpp"
#include "tally.hpp"

namespace comlang::verify {
namespace {

const Alphabet kAB("ab");
const Alphabet kABC("abc");

Word lift_word(const Word& w, const std::vector<Letter>& block) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) out.push_back(block[l]);
  return Word(std::move(out));
}

Dfa quotient_by(const Dfa& d, const Word& u) { return minimize(left_quotient(d, u)); }

CheckOutcome minimize_laws(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  auto words = words_up_to(kAB, 6);
  std::size_t bad = 0;
  for (int i = 0; i < 100; ++i) {
    Dfa d = random_dfa(rng, kAB, rng.between(1, 10));
    Dfa m = minimize(d);
    if (minimize(m) != m || !equivalent(d, m)) ++bad;
    Dfa c = complement(d);
    for (const auto& w : words) {
      if (accepts(c, w) == accepts(d, w)) {
        ++bad;
        break;
      }
    }
    Dfa e = random_dfa(rng, kAB, rng.between(1, 6));
    for (BoolOp op : {BoolOp::Union, BoolOp::Intersection, BoolOp::Difference}) {
      if (boolean_product(d, e, op).state_count() > d.state_count() * e.state_count()) ++bad;
    }
  }
  t.eq("violations", bad, std::size_t{0});
  return t.done();
}

CheckOutcome determinize_oracle(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  auto words = words_up_to(kAB, 8);
  std::size_t bad = 0;
  for (int i = 0; i < 60; ++i) {
    Nfa n = random_nfa(rng, kAB, 4, 8, 2);
    Dfa d = determinize(n);
    for (const auto& w : words) {
      if (accepts(d, w) != nfa_accepts(n, w)) {
        ++bad;
        break;
      }
    }
  }
  t.eq("disagreements", bad, std::size_t{0});
  return t.done();
}

CheckOutcome commutative_automaton_laws(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  std::size_t bad = 0;
  for (int i = 0; i < 100; ++i) {
    Dfa d = random_commutative(rng, i % 4 ? kAB : kABC, {3, 3});
    Dfa m = minimize(d);
    auto p = profile(m);
    Dfa c = build_commutative_automaton(p);
    if (!equivalent(c, m)) ++bad;
    if (c.state_count() != p.product_size() || c.state_count() < m.state_count()) ++bad;
    if ((c.state_count() == m.state_count()) != has_product_form(m)) ++bad;
    if (has_product_form(m) != isomorphic(m, c)) ++bad;
    for (Letter j = 0; j < m.letter_count(); ++j) {
      RhoBound q = quotient_index_period(m, j);
      if (q.index != p.index[j] || q.period != p.period[j]) ++bad;
    }
    // the empty language has one state and only finite projections
    if (has_product_form(m) && !is_empty(m) && finite_projection_count(m) > 1) ++bad;
  }
  t.eq("violations", bad, std::size_t{0});
  return t.done();
}

CheckOutcome nerode_implication(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  auto words = words_up_to(kAB, 3);
  std::size_t bad = 0;
  for (int i = 0; i < 20; ++i) {
    Dfa d = random_commutative(rng, kAB);
    for (const auto& u : words) {
      for (const auto& v : words) {
        auto r = nerode_char_check(d, u, v);
        if (r.rhs && !r.lhs) ++bad;
      }
    }
  }
  t.eq("rhs without lhs", bad, std::size_t{0});
  return t.done();
}

CheckOutcome projection_rho(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  std::size_t bad = 0, hits = 0;
  for (int i = 0; i < 100; ++i) {
    Dfa d = random_commutative(rng, kAB, {2, 3});
    if (!equivalent(d, shuffle_of_block_projections(d, Partition::singletons(kAB)))) continue;
    ++hits;
    auto p = profile(d);
    for (Letter j = 0; j < 2; ++j) {
      const Letter keep[] = {j};
      Dfa pj = projection(d, keep);
      auto q = profile(pj);
      if (pj.state_count() != p.size(j) || q.index[0] != p.index[j] ||
          q.period[0] != p.period[j]) {
        ++bad;
      }
    }
  }
  t.eq("violations", bad, std::size_t{0});
  t.note("instances equal to the shuffle of their projections: " + std::to_string(hits));
  return t.done();
}

CheckOutcome product_form_closure(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  auto words = words_up_to(kAB, 4);
  std::size_t bad = 0;
  for (int i = 0; i < 30; ++i) {
    Dfa d = random_product_form(rng, kAB);
    if (!has_product_form(d)) ++bad;
    if (!has_product_form(complement(d))) ++bad;
    for (const auto& u : words) {
      if (!has_product_form(quotient_by(d, u))) ++bad;
    }
  }
  Dfa meet = minimize(boolean_product(eval("a&b*", kAB), eval("a*&b", kAB), BoolOp::Intersection));
  t.need(equivalent(meet, eval("a&b", kAB)), "intersection must be a&b");
  t.need(!has_product_form(meet), "a&b must not be product-form");
  Dfa ternary = eval("aa*&bb*&cc* | bb*&a* | b*", kABC);
  const Letter ab[] = {0, 1};
  Dfa proj = projection(ternary, ab);
  t.note(std::string("ternary language product-form: ") +
         (has_product_form(ternary) ? "yes" : "no"));
  t.need(!has_product_form(proj), "its {a,b} projection must not be product-form");
  t.need(equivalent(proj, eval("bb*&a* | b*", kAB)), "projection must be the count language");
  t.eq("violations", bad, std::size_t{0});
  return t.done();
}

CheckOutcome unary_times_free(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  std::size_t bad = 0;
  for (int i = 0; i < 40; ++i) {
    std::vector<std::size_t> residues;
    std::size_t index = rng.between(0, 3), period = rng.between(1, 4);
    for (std::size_t m = 0; m < index + period; ++m) {
      if (rng.chance(0.5)) residues.push_back(m);
    }
    UnaryLang l(0, index, period, residues);
    std::vector<UnaryLang> parts{l, UnaryLang::all(1)};
    if (!has_product_form(shuffle_unary_family(kAB, parts))) ++bad;
  }
  t.eq("not product-form", bad, std::size_t{0});
  return t.done();
}

CheckOutcome shuffle_laws(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  auto words = words_up_to(kAB, 6);
  std::size_t bad = 0;
  for (int i = 0; i < 30; ++i) {
    Dfa u = random_commutative(rng, kAB, {2, 3});
    Dfa v = random_commutative(rng, kAB, {2, 3});
    Dfa w = random_commutative(rng, kAB, {2, 2});
    Dfa uv = shuffle_commutative(u, v);
    if (!equivalent(uv, shuffle_commutative(v, u))) ++bad;
    if (!equivalent(shuffle_commutative(uv, w), shuffle_commutative(u, shuffle_commutative(v, w))))
      ++bad;
    auto pu = profile(u), pv = profile(v), ps = profile(uv);
    auto limit = shuffle_rho_bounds(pu, pv);
    for (std::size_t j = 0; j < 2; ++j) {
      if (ps.index[j] > limit[j].index || limit[j].period % ps.period[j] != 0) ++bad;
    }
    // random, possibly non-commutative operands against the brute-force split
    Dfa x = random_dfa(rng, kAB, 3), y = random_dfa(rng, kAB, 3);
    Dfa xy = shuffle_nfa(x, y);
    for (const auto& word : words) {
      if (accepts(xy, word) != brute_in_shuffle(x, y, word)) {
        ++bad;
        break;
      }
    }
  }
  t.eq("violations", bad, std::size_t{0});
  return t.done();
}

CheckOutcome closure_laws(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  auto words = words_up_to(kAB, 5);
  std::size_t bad = 0;
  for (int i = 0; i < 50; ++i) {
    Dfa d = i % 2 ? random_commutative(rng, kAB) : random_dfa(rng, kAB, 4);
    Dfa e = random_dfa(rng, kAB, 3);
    Dfa up = upward_closure(d), down = downward_closure(d);
    if (upward_closure(up) != up || downward_closure(down) != down) ++bad;
    if (!subset_of(d, up) || !subset_of(d, down)) ++bad;
    Dfa de = minimize(boolean_product(d, e, BoolOp::Union));
    if (!subset_of(up, upward_closure(de)) || !subset_of(down, downward_closure(de))) ++bad;
    Dfa dint = downward_interior(d), uint_ = upward_interior(d);
    if (dint != minimize(complement(upward_closure(complement(d))))) ++bad;
    if (!subset_of(dint, d) || !subset_of(uint_, d)) ++bad;
    if (downward_closure(dint) != dint || upward_closure(uint_) != uint_) ++bad;
    for (const auto& w : words) {
      bool brute = false;
      for (const auto& u : words) {
        if (u.size() <= w.size() && accepts(d, u) && is_subsequence(u, w)) {
          brute = true;
          break;
        }
      }
      if (brute != accepts(up, w)) {
        ++bad;
        break;
      }
    }
  }
  t.eq("violations", bad, std::size_t{0});
  return t.done();
}

CheckOutcome bound_slack(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  std::size_t bad = 0;
  std::int64_t min_slack = INT64_MAX;
  for (int i = 0; i < 25; ++i) {
    Dfa u = random_product_form(rng, kAB, {2, 3});
    Dfa v = random_product_form(rng, kAB, {2, 3});
    Dfa c = random_commutative(rng, kAB);
    const Letter keep[] = {static_cast<Letter>(i % 2)};
    std::vector<BoundReport> reports{
        verify_bound(BoundOp::Shuffle, u, &v),
        verify_bound(BoundOp::ShuffleIndexPeriod, c, &u),
        verify_bound(BoundOp::UpwardClosure, c),
        verify_bound(BoundOp::DownwardClosure, c),
        verify_bound(BoundOp::UpwardInterior, c),
        verify_bound(BoundOp::DownwardInterior, c),
        verify_bound(BoundOp::Projection, c, nullptr, keep),
        verify_bound(BoundOp::Union, c, &v),
        verify_bound(BoundOp::Intersection, c, &u),
    };
    for (const auto& r : reports) {
      if (r.slack < 0) ++bad;
      min_slack = std::min(min_slack, r.slack);
    }
  }
  t.eq("negative slack", bad, std::size_t{0});
  t.note("min slack " + std::to_string(min_slack));
  return t.done();
}

CheckOutcome canonical_laws(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  std::size_t bad = 0;
  const char* shapes[] = {"ab|c", "a|bc", "a|b|c", "abc"};
  for (int i = 0; i < 80; ++i) {
    Partition part = Partition::parse(kABC, shapes[i % 4]);
    Dfa d = i % 2 ? random_dfa(rng, kABC, 4) : random_closed(rng, part);
    auto c = canonical_automaton(d, part);
    if (!subset_of(d, c.product)) ++bad;
    if (!is_closed_under(c.product, part)) ++bad;
    bool closed = is_closed_under(d, part);
    if (equivalent(c.product, d) != closed) ++bad;
    if (!closed) continue;
    for (std::size_t b = 0; b < part.block_count(); ++b) {
      if (!equivalent(canonical_projection(d, part, b), projection(d, part.block(b)))) ++bad;
    }
    auto r = classify(d, part);
    if ((r.l1 && !r.l2) || (r.l2 && !r.l3)) ++bad;
    if (r.l2 != equivalent(d, shuffle_of_block_projections(d, part))) ++bad;
    if (!isomorphic(minimize(d), minimize(c.product)) ||
        r.l4 != (minimize(d).state_count() == c.product.state_count())) {
      ++bad;
    }
    for (std::size_t s = 0; s < c.product.state_count() && s < 6; ++s) {
      Dfa sl = state_language(c, c.tuple_at(s));
      if (!classify(sl, part).l1) ++bad;
    }
  }
  t.eq("violations", bad, std::size_t{0});
  return t.done();
}

// Characterization of L4 through projected Nerode classes, on all
// pairs of words up to length 5.
CheckOutcome l4_nerode(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  auto words = words_up_to(kABC, 5);
  std::size_t bad = 0;
  const char* shapes[] = {"ab|c", "a|bc", "a|b|c"};
  for (int i = 0; i < 30; ++i) {
    Partition part = Partition::parse(kABC, shapes[i % 3]);
    Dfa d = minimize(random_closed(rng, part, 2));
    auto r = classify(d, part);
    std::map<State, std::vector<State>> by_state;
    std::map<std::vector<State>, State> by_proj;
    bool agree = true;
    for (const auto& w : words) {
      State s = d.run(d.start(), w.letters());
      std::vector<State> key;
      for (std::size_t b = 0; b < part.block_count(); ++b) {
        std::vector<Letter> pw;
        for (Letter l : w.letters()) {
          if (part.block_of(l) == b) pw.push_back(l);
        }
        key.push_back(d.run(d.start(), pw));
      }
      auto [x, fx] = by_state.emplace(s, key);
      auto [y, fy] = by_proj.emplace(key, s);
      if ((!fx && x->second != key) || (!fy && y->second != s)) agree = false;
    }
    if (agree != r.l4) ++bad;
  }
  t.eq("disagreements", bad, std::size_t{0});
  return t.done();
}

CheckOutcome l2_sampled(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  auto words = words_up_to(kABC, 5);
  std::size_t bad = 0;
  Partition part = Partition::parse(kABC, "ab|c");
  for (int i = 0; i < 30; ++i) {
    Dfa d = random_closed(rng, part);
    auto r = classify(d, part);
    std::vector<Dfa> proj;
    for (std::size_t b = 0; b < 2; ++b) proj.push_back(projection(d, part.block(b)));
    bool all = true;
    for (const auto& w : words) {
      bool rhs = true;
      for (std::size_t b = 0; b < 2; ++b) {
        std::vector<Letter> pw;
        for (Letter l : w.letters()) {
          if (part.block_of(l) == b) {
            const auto& blk = part.block(b);
            pw.push_back(static_cast<Letter>(std::find(blk.begin(), blk.end(), l) - blk.begin()));
          }
        }
        rhs = rhs && accepts(proj[b], Word(pw));
      }
      if (rhs != accepts(d, w)) all = false;
    }
    // sampling can miss a counterexample, never invent one
    if (r.l2 && !all) ++bad;
  }
  t.eq("violations", bad, std::size_t{0});
  return t.done();
}

CheckOutcome block_refinement(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  std::size_t bad = 0;
  Partition part = Partition::parse(kABC, "ab|c");
  for (int i = 0; i < 30; ++i) {
    Dfa d = random_closed(rng, part);
    for (std::size_t b = 0; b < 2; ++b) {
      Dfa p = projection(d, part.block(b));
      Alphabet sub = kABC.restrict_to(part.block(b));
      auto local = words_up_to(sub, 4);
      std::map<State, State> class_map;
      for (const auto& u : local) {
        Word lifted = lift_word(u, part.block(b));
        State s = d.run(d.start(), lifted.letters());
        State ps = p.run(p.start(), u.letters());
        auto [it, fresh] = class_map.emplace(s, ps);
        if (!fresh && it->second != ps) ++bad;
      }
    }
  }
  t.eq("violations", bad, std::size_t{0});
  return t.done();
}

CheckOutcome group_laws(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  std::size_t bad = 0;
  for (int i = 0; i < 30; ++i) {
    Dfa x = random_group_language(rng, kAB), y = random_group_language(rng, kAB);
    if (!is_permutation_automaton(boolean_product(x, y, BoolOp::Intersection))) ++bad;
    auto px = profile(x), py = profile(y);
    Dfa s = shuffle_commutative(x, y);
    auto ps = profile(s);
    auto b = group_shuffle_bound(px.period, py.period);
    for (std::size_t j = 0; j < 2; ++j) {
      if (px.index[j] != 0 || ps.index[j] > b.index[j]) ++bad;
      if (ps.period[j] > b.period[j] && b.period[j] % ps.period[j] != 0) ++bad;
    }
    if (s.state_count() > b.bound) ++bad;
  }
  for (std::size_t p : {2, 3, 5}) {
    for (std::size_t q : {3, 5, 7}) {
      if (p == q) continue;
      for (const char* letters : {"a", "ab"}) {
        Alphabet sigma(letters);
        auto [u, v] = gen_sharp_group_pair(p, q, sigma);
        std::vector<std::size_t> pv(sigma.size(), p), qv(sigma.size(), q);
        if (shuffle_commutative(u, v).state_count() != group_shuffle_bound(pv, qv).bound) ++bad;
      }
    }
  }
  const std::size_t need[] = {2, 1, 1};
  Dfa th = gen_threshold_language(need, kABC);
  for (const auto& w : words_up_to(kABC, 6)) {
    auto c = w.parikh(3);
    if (accepts(th, w) != (c[0] >= 2 && c[1] >= 1 && c[2] >= 1)) ++bad;
  }
  t.eq("violations", bad, std::size_t{0});
  return t.done();
}

// Product-form status from the letter-count Nerode condition, with words
// long enough to reach every tuple of C.
CheckOutcome nerode_long(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  auto words = words_up_to(kAB, 12);
  std::size_t bad = 0;
  for (int i = 0; i < 300; ++i) {
    Dfa m = minimize(random_commutative(rng, kAB));
    auto p = profile(m);
    std::map<State, std::vector<std::size_t>> by_state;
    std::map<std::vector<std::size_t>, State> by_class;
    bool agree = true;
    for (const auto& w : words) {
      State s = m.run(m.start(), w.letters());
      auto counts = w.parikh(2);
      std::vector<std::size_t> cls{p.class_of(0, counts[0]), p.class_of(1, counts[1])};
      auto [x, fx] = by_state.emplace(s, cls);
      auto [y, fy] = by_class.emplace(cls, s);
      if ((!fx && x->second != cls) || (!fy && y->second != s)) agree = false;
    }
    if (agree != has_product_form(m)) ++bad;
  }
  t.eq("disagreements", bad, std::size_t{0});
  return t.done();
}

Expr random_expr(Rng& rng, int depth) {
  using K = Expr::Kind;
  if (depth == 0 || rng.chance(0.25)) {
    std::size_t r = rng.between(0, 5);
    if (r == 4) return Expr::epsilon();
    if (r == 5) return Expr::empty();
    return Expr::make_letter(static_cast<Letter>(r % 2));
  }
  static constexpr K binaries[] = {K::Union, K::Concat, K::Shuffle, K::Intersect};
  std::size_t r = rng.between(0, 5);
  if (r == 4) return Expr::unary(K::Star, random_expr(rng, depth - 1));
  if (r == 5) return Expr::unary(K::Complement, random_expr(rng, depth - 1));
  return Expr::binary(binaries[r], random_expr(rng, depth - 1), random_expr(rng, depth - 1));
}

CheckOutcome expr_laws(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  std::size_t bad = 0;
  for (int i = 0; i < 60; ++i) {
    Expr e = random_expr(rng, 3);
    if (parse_expr(print_expr(e, kAB), kAB) != e) ++bad;
    Expr f = random_expr(rng, 2);
    using K = Expr::Kind;
    Dfa de = eval(e, kAB), df = eval(f, kAB);
    if (eval(Expr::binary(K::Shuffle, e, f), kAB) != eval(Expr::binary(K::Shuffle, f, e), kAB)) ++bad;
    if (eval(Expr::binary(K::Union, e, e), kAB) != de) ++bad;
    if (eval(Expr::binary(K::Intersect, e, e), kAB) != de) ++bad;
    Dfa lhs = eval(Expr::unary(K::Complement, Expr::binary(K::Union, e, f)), kAB);
    Dfa rhs = eval(Expr::binary(K::Intersect, Expr::unary(K::Complement, e),
                                Expr::unary(K::Complement, f)),
                   kAB);
    if (lhs != rhs) ++bad;
    (void)df;
  }
  t.need(eval("a&b^a.b|b.a", kAB) == eval("((a&b)^(a.b))|(b.a)", kAB), "precedence example");
  t.eq("violations", bad, std::size_t{0});
  return t.done();
}

}  // namespace

std::vector<NamedCheck> property_checks() {
  return {
      {"P.minimize", "minimize idempotent, equivalent; complement flips; product size", 30,
       false, minimize_laws},
      {"P.determinize", "subset construction against direct NFA simulation", 30, false,
       determinize_oracle},
      {"P.commutative", "C recognizes L, |C| >= sc, routes agree, quotient index/period", 60,
       false, commutative_automaton_laws},
      {"P.nerode", "letter-count classes equal implies same state", 30, false,
       nerode_implication},
      {"P.projection-rho", "rho equals projection automaton when L is the shuffle of them", 30,
       false, projection_rho},
      {"P.product-form-closure", "complement and quotients keep product form; non-closure", 60,
       false, product_form_closure},
      {"P.unary-free", "unary language shuffled with the other letters is product-form", 30,
       false, unary_times_free},
      {"P.shuffle", "shuffle commutes, associates, shape bound; generic route vs splits", 60,
       false, shuffle_laws},
      {"P.closures", "closures idempotent, monotone, duality, interiors", 60, false,
       closure_laws},
      {"P.bounds", "BoundReport slack is never negative", 60, false, bound_slack},
      {"P.canonical", "canonical automaton contains L, closed, projections, classes", 120,
       false, canonical_laws},
      {"P.l4-nerode", "L4 iff projected classes determine the state", 60, false, l4_nerode},
      {"P.l2-sampled", "L2 implies membership by projections on sampled words", 30, false,
       l2_sampled},
      {"P.block-refinement", "block words: L-classes refine projection classes", 30, false,
       block_refinement},
      {"P.nerode-long", "letter-count Nerode condition with words up to length 12", 120, false,
       nerode_long},
      {"P.group", "group shuffle shape, sharp pairs, threshold membership", 60, false,
       group_laws},
      {"P.expr", "print/parse round trip and algebraic laws", 60, false, expr_laws},
  };
}

}  // namespace comlang::verify
