#include <map>
#include <sstream>

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/error.hpp"
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

namespace fx = fixtures;

const Alphabet kAB("ab");

std::string str(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

CheckOutcome count_language(const CheckContext&) {
  Tally t;
  Dfa m = eval(fx::kCountLanguage, kAB);
  Dfa c = build_commutative_automaton(m);
  t.eq("sc", m.state_count(), std::size_t{3});
  t.eq("C states", c.state_count(), std::size_t{4});
  t.need(!has_product_form(m), "product form must be false");
  t.need(isomorphic(m, fx::count_language_minimal()), "minimal DFA differs from the drawn one");
  t.need(equivalent(c, fx::count_language_commutative()), "C differs from the drawn one");
  t.need(isomorphic(minimize(fx::count_language_commutative()), m),
         "minimizing the commutative automaton must give the 3-state one");
  return t.done();
}

CheckOutcome lp(const CheckContext&) {
  Tally t;
  const std::size_t p = 5;
  auto oracle = [p](std::span<const std::size_t> m) { return (m[0] + 2 * m[1]) % p == 0; };
  const RhoBound bounds[] = {{0, p}, {0, p}};
  Dfa d = from_parikh_oracle(kAB, oracle, bounds);
  t.eq("sc", d.state_count(), p);
  t.eq("C states", build_commutative_automaton(d).state_count(), p * p);
  return t.done();
}

CheckOutcome example2(const CheckContext&) {
  Tally t;
  Dfa m = eval(fx::kTwelveStates, kAB);
  t.eq("sc", m.state_count(), std::size_t{12});
  t.need(isomorphic(m, build_commutative_automaton(m)), "A_L and C_L must be isomorphic");
  t.eq("finals", m.final_count(), std::size_t{5});
  auto r = classify(m, Partition::singletons(kAB));
  t.need(r.l4, "L4 expected");
  t.need(!r.l3, "L3 not expected");
  return t.done();
}

CheckOutcome example3(const CheckContext&) {
  Tally t;
  Dfa m = eval(fx::kPeriodFourTwo, kAB);
  auto p = profile(m);
  t.need(p.index == std::vector<std::size_t>{0, 0}, "index " + str(p.index));
  t.need(p.period == std::vector<std::size_t>{4, 2}, "period " + str(p.period));
  const Letter only_a[] = {0};
  const Letter only_b[] = {1};
  t.need(equivalent(projection(m, only_a), eval("(aa)*", Alphabet("a"))), "pi_a(L) != (aa)*");
  t.need(equivalent(projection(m, only_b), eval("b*", Alphabet("b"))), "pi_b(L) != b*");
  return t.done();
}

CheckOutcome coprime_shuffle(const CheckContext&) {
  Tally t;
  const std::size_t p = 2, q = 3;
  for (const char* letters : {"a", "ab"}) {
    Alphabet sigma(letters);
    const std::size_t k = sigma.size();
    auto [u, v] = gen_coprime_pair(p, q, sigma);
    std::size_t pk = 1, qk = 1;
    for (std::size_t i = 0; i < k; ++i) pk *= p, qk *= q;
    const std::string tag = "k=" + std::to_string(k) + " ";
    t.eq(tag + "sc(U)", u.state_count(), pk);
    t.eq(tag + "sc(V)", v.state_count(), qk);
    Dfa s = shuffle_commutative(u, v);
    t.eq(tag + "sc(U&V)", s.state_count(), pk * qk);
    t.need(equivalent(s, shuffle_nfa(u, v)), tag + "shuffle routes disagree");
    t.need(has_product_form(s), tag + "shuffle must be product-form");
    const std::uint64_t two_nm = 2ull * pk * qk;
    t.need(s.state_count() < two_nm, tag + "measured must be below 2nm");
    BoundReport r = verify_bound(BoundOp::Shuffle, u, &v);
    t.need(r.slack >= 0, tag + "slack " + std::to_string(r.slack) + " against " + r.formula);
    t.note(tag + "measured " + std::to_string(s.state_count()) + ", 2nm " +
           std::to_string(two_nm) + ", " + r.formula + " " + std::to_string(r.bound));
  }
  return t.done();
}

CheckOutcome excess_pair(const CheckContext&) {
  Tally t;
  const std::size_t p = 13, q = 17;
  auto [u, v] = gen_remark5(p, q);
  t.eq("sc(U)", u.state_count(), std::size_t{210});
  t.eq("sc(V)", v.state_count(), std::size_t{342});
  t.need(has_product_form(u) && has_product_form(v), "U and V must be product-form");
  Dfa s = shuffle_commutative(u, v);
  t.eq("sc(U&V)", s.state_count(), std::size_t{99'008});
  t.need(s.state_count() > 71'820, "shuffle must exceed nm = 71820");
  t.need((1 + p) * (2 + p) * (1 + q) * (2 + q) < 2 * p * q * (p * q + 3),
         "family inequality must hold");
  return t.done();
}

void closure_bounds(Tally& t, const std::string& tag, const Dfa& d, std::size_t limit) {
  for (BoundOp op : {BoundOp::UpwardClosure, BoundOp::DownwardClosure, BoundOp::UpwardInterior,
                     BoundOp::DownwardInterior}) {
    BoundReport r = verify_bound(op, d);
    t.need(r.measured <= limit, tag + " " + r.operation + " sc " + std::to_string(r.measured) +
                                    " > " + std::to_string(limit));
    t.need(r.slack >= 0, tag + " " + r.operation + " negative slack");
  }
}

CheckOutcome closures(const CheckContext&) {
  Tally t;
  Dfa l = eval(fx::kFourAs, kAB);
  t.eq("sc(L)", l.state_count(), std::size_t{6});
  t.eq("sc(up L)", upward_closure(l).state_count(), std::size_t{5});
  t.eq("sc(down L)", downward_closure(l).state_count(), std::size_t{6});
  closure_bounds(t, "a^4&b*", l, 6);
  closure_bounds(t, "example", eval(fx::kPeriodFourTwo, kAB), 8);
  return t.done();
}

CheckOutcome partial(const CheckContext& ctx) {
  Tally t;
  Dfa d = fx::partial_four_state();
  Partition acb = Partition::parse(d.alphabet(), "ac|b");
  auto c = canonical_automaton(d, acb);
  t.eq("canonical states", c.product.state_count(), std::size_t{8});
  t.need(equivalent(c.product, d), "canonical automaton must recognize L");
  t.need(is_closed_under(d, acb), "fixture must be closed under ac|b");

  Rng rng(ctx.seed);
  const Alphabet abc("abc");
  Partition part = Partition::parse(abc, "ab|c");
  std::size_t counterexamples = 0, closed = 0;
  for (int i = 0; i < 200; ++i) {
    Dfa r = random_dfa(rng, abc, 4);
    bool is_closed = is_closed_under(r, part);
    closed += is_closed;
    if (equivalent(canonical_automaton(r, part).product, r) != is_closed) ++counterexamples;
  }
  t.eq("counterexamples", counterexamples, std::size_t{0});
  t.note("closed " + std::to_string(closed) + "/200");
  return t.done();
}

void expect_classes(Tally& t, const char* src, bool l1, bool l2, bool l3, bool l4) {
  auto r = classify(eval(src, kAB), Partition::singletons(kAB));
  std::ostringstream got;
  got << r.l1 << r.l2 << r.l3 << r.l4;
  std::ostringstream want;
  want << l1 << l2 << l3 << l4;
  t.need(r.closed && got.str() == want.str(),
         std::string(src) + ": L1..L4 " + got.str() + " expected " + want.str());
}

CheckOutcome classifier(const CheckContext& ctx) {
  Tally t;
  expect_classes(t, fx::kL3L4NotL2, false, false, true, true);
  expect_classes(t, fx::kL3NotL4, false, false, true, false);
  expect_classes(t, fx::kL1NotL4, true, true, true, false);
  expect_classes(t, fx::kTwelveStates, false, false, false, true);
  expect_classes(t, fx::kL2NotL1, false, true, true, false);
  Rng rng(ctx.seed);
  std::size_t bad = 0;
  std::size_t counts[4] = {0, 0, 0, 0};
  for (int i = 0; i < 500; ++i) {
    Dfa d = random_commutative(rng, kAB);
    auto r = classify(d, Partition::singletons(kAB));
    if ((r.l1 && !r.l2) || (r.l2 && !r.l3) || !r.closed) ++bad;
    counts[0] += r.l1, counts[1] += r.l2, counts[2] += r.l3, counts[3] += r.l4;
  }
  t.eq("inclusion violations", bad, std::size_t{0});
  t.note("L1..L4 counts " + std::to_string(counts[0]) + "/" + std::to_string(counts[1]) + "/" +
         std::to_string(counts[2]) + "/" + std::to_string(counts[3]));
  return t.done();
}

CheckOutcome group(const CheckContext& ctx) {
  Tally t;
  auto [u, v] = gen_sharp_group_pair(2, 3, kAB);
  const std::size_t p2[] = {2, 2}, q3[] = {3, 3};
  auto b = group_shuffle_bound(p2, q3);
  t.eq("group bound", b.bound, std::uint64_t{36});
  t.eq("sharp shuffle sc", shuffle_commutative(u, v).state_count(), std::size_t{36});
  const std::size_t n23[] = {2, 3};
  Dfa th = gen_threshold_language(n23, kAB);
  t.eq("threshold sc", th.state_count(), std::size_t{12});
  t.need(profile(th).period == std::vector<std::size_t>{1, 1}, "threshold period must be (1,1)");

  Rng rng(ctx.seed);
  std::size_t bad = 0;
  double worst = 0;
  for (int i = 0; i < 30; ++i) {
    Dfa x = random_group_language(rng, kAB);
    Dfa y = random_group_language(rng, kAB);
    auto px = profile(x), py = profile(y);
    auto gb = group_shuffle_bound(px.period, py.period);
    std::uint64_t general = general_group_bound(x.state_count(), y.state_count(), 2);
    std::size_t measured = shuffle_commutative(x, y).state_count();
    if (!is_permutation_automaton(x) || !is_permutation_automaton(y)) ++bad;
    if (measured > gb.bound || gb.bound > general) ++bad;
    worst = std::max(worst, static_cast<double>(measured) / static_cast<double>(gb.bound));
  }
  t.eq("random pair violations", bad, std::size_t{0});
  std::ostringstream o;
  o << "max measured/gcd-lcm bound " << worst;
  t.note(o.str());
  return t.done();
}

CheckOutcome oracles(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  std::size_t shuffle_bad = 0, min_bad = 0, dec_bad = 0;
  for (int i = 0; i < 300; ++i) {
    Dfa u = random_commutative(rng, kAB);
    Dfa v = random_commutative(rng, kAB);
    if (!equivalent(shuffle_commutative(u, v), shuffle_nfa(u, v))) ++shuffle_bad;
  }
  const Alphabet abc("abc");
  for (int i = 0; i < 300; ++i) {
    const Alphabet& sigma = i % 2 ? abc : kAB;
    Dfa d = random_dfa(rng, sigma, rng.between(1, 12));
    if (!isomorphic(minimize(d), moore_minimize(d)) || minimize(d) != moore_minimize(d)) ++min_bad;
  }
  for (int i = 0; i < 300; ++i) {
    Dfa d = random_commutative(rng, i % 3 ? kAB : abc, {2, 3});
    if (!equivalent(recompose(decompose(d)), d)) ++dec_bad;
  }
  t.eq("shuffle route mismatches", shuffle_bad, std::size_t{0});
  t.eq("Hopcroft/Moore mismatches", min_bad, std::size_t{0});
  t.eq("decompose round-trip failures", dec_bad, std::size_t{0});
  return t.done();
}

// Product-form status from the Nerode condition: u ~ v iff the letter
// counts are pairwise equivalent, over all pairs of words up to length 5.
bool nerode_route(const Dfa& d, const std::vector<Word>& words) {
  Dfa m = minimize(d);
  auto p = profile(m);
  const std::size_t k = p.letter_count();
  std::map<State, std::vector<std::size_t>> by_state;
  std::map<std::vector<std::size_t>, State> by_class;
  for (const auto& w : words) {
    State s = m.run(m.start(), w.letters());
    auto counts = w.parikh(k);
    std::vector<std::size_t> cls(k);
    for (std::size_t j = 0; j < k; ++j) cls[j] = p.class_of(j, counts[j]);
    auto [a, fresh_a] = by_state.emplace(s, cls);
    if (!fresh_a && a->second != cls) return false;
    auto [b, fresh_b] = by_class.emplace(cls, s);
    if (!fresh_b && b->second != s) return false;
  }
  return true;
}

CheckOutcome product_form_routes(const CheckContext& ctx) {
  Tally t;
  Rng rng(ctx.seed);
  auto words = words_up_to(kAB, 5);
  std::size_t disagreements = 0, product = 0;
  std::string first;
  for (int i = 0; i < 300; ++i) {
    Dfa d = random_commutative(rng, kAB);
    Dfa m = minimize(d);
    Dfa c = build_commutative_automaton(m);
    bool iso = isomorphic(m, c);
    bool counting = has_product_form(m);
    bool nerode = nerode_route(m, words);
    bool moore = moore_minimize(c).state_count() == c.state_count();
    product += iso;
    if (iso != counting || iso != nerode || iso != moore) {
      ++disagreements;
      if (first.empty()) {
        std::ostringstream o;
        o << "instance " << i << ": iso " << iso << " counting " << counting << " nerode "
          << nerode << " moore " << moore << " sc " << m.state_count() << " |C| "
          << c.state_count();
        first = o.str();
      }
    }
  }
  t.eq("route disagreements", disagreements, std::size_t{0});
  if (!first.empty()) t.note(first);
  t.note("product-form " + std::to_string(product) + "/300");
  return t.done();
}

}  // namespace

std::vector<NamedCheck> acceptance_checks() {
  return {
      {"1", "count language: sc 3, C 4, not product-form", 1, false, count_language},
      {"2", "weighted count mod 5: sc 5, C 25", 1, false, lp},
      {"3", "twelve-state language: isomorphic to C, 5 finals, L4 not L3", 1, false, example2},
      {"4", "index (0,0), period (4,2), projections", 1, false, example3},
      {"5", "coprime pair shuffle is sharp and below 2nm", 5, false, coprime_shuffle},
      {"6", "p=13, q=17 shuffle exceeds nm", 120, true, excess_pair},
      {"7", "closure and interior bounds", 1, false, closures},
      {"8", "canonical automaton; L = L(C) iff closed", 30, false, partial},
      {"9", "classifier fixtures and L1 => L2 => L3", 60, false, classifier},
      {"10", "group shuffle bound, threshold language", 30, false, group},
      {"11", "shuffle routes, minimizers, decompose round-trip", 120, false, oracles},
      {"12", "product-form routes agree", 120, false, product_form_routes},
  };
}

}  // namespace comlang::verify
