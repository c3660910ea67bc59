#include "comlang/commutative.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "comlang/automata.hpp"
#include "comlang/error.hpp"

namespace comlang {
namespace {

bool commutes_on(const Dfa& m) {
  const std::size_t k = m.letter_count();
  for (State q = 0; q < m.state_count(); ++q) {
    for (Letter x = 0; x < k; ++x) {
      for (Letter y = x + 1; y < k; ++y) {
        if (m.next(m.next(q, x), y) != m.next(m.next(q, y), x)) return false;
      }
    }
  }
  return true;
}

Dfa require_commutative_minimal(const Dfa& d) {
  Dfa m = minimize(d);
  if (!commutes_on(m)) {
    throw Error(ErrorKind::NotCommutative, "the language is not commutative");
  }
  return m;
}

CommutativeProfile profile_of_minimal(const Dfa& m) {
  const std::size_t k = m.letter_count();
  CommutativeProfile p;
  p.alphabet = m.alphabet();
  p.rho.resize(k);
  p.index.resize(k);
  p.period.resize(k);
  for (Letter j = 0; j < k; ++j) {
    std::unordered_map<State, std::size_t> position;
    State q = m.start();
    auto& walk = p.rho[j];
    while (!position.contains(q)) {
      position.emplace(q, walk.size());
      walk.push_back(q);
      q = m.next(q, j);
    }
    p.index[j] = position.at(q);
    p.period[j] = walk.size() - p.index[j];
  }

  // Enumerate tuples lexicographically, simulating a_1^{m_1} ... a_k^{m_k}
  // one letter block at a time.
  ParikhTuple tuple(k, 0);
  auto visit = [&](auto&& self, std::size_t j, State q) -> void {
    if (j == k) {
      if (m.is_final(q)) p.final_parikh.push_back(tuple);
      return;
    }
    State cur = q;
    for (std::size_t c = 0; c < p.size(j); ++c) {
      tuple[j] = c;
      self(self, j + 1, cur);
      cur = m.next(cur, static_cast<Letter>(j));
    }
    tuple[j] = 0;
  };
  visit(visit, 0, m.start());
  return p;
}

}  // namespace

std::size_t CommutativeProfile::product_size() const {
  std::size_t total = 1;
  for (std::size_t j = 0; j < letter_count(); ++j) total *= size(j);
  return total;
}

std::size_t CommutativeProfile::class_of(std::size_t j, std::size_t m) const {
  if (m < size(j)) return m;
  return index[j] + (m - index[j]) % period[j];
}

std::size_t CommutativeProfile::tuple_number(std::span<const std::size_t> tuple) const {
  std::size_t number = 0;
  std::size_t stride = 1;
  for (std::size_t j = 0; j < letter_count(); ++j) {
    number += tuple[j] * stride;
    stride *= size(j);
  }
  return number;
}

ParikhTuple CommutativeProfile::tuple_at(std::size_t number) const {
  ParikhTuple tuple(letter_count());
  for (std::size_t j = 0; j < letter_count(); ++j) {
    tuple[j] = number % size(j);
    number /= size(j);
  }
  return tuple;
}

UnaryLang::UnaryLang(Letter letter, std::size_t index, std::size_t period,
                     std::vector<std::size_t> residues)
    : letter_(letter), index_(index), period_(period) {
  if (period == 0) {
    throw Error(ErrorKind::PreconditionViolation, "unary period must be positive");
  }
  std::vector<char> accept(index + period, 0);
  for (std::size_t r : residues) {
    if (r >= index + period) {
      throw Error(ErrorKind::PreconditionViolation,
                  "unary residue " + std::to_string(r) + " outside index + period");
    }
    accept[r] = 1;
  }
  auto at = [&](std::size_t m) {
    return accept[m < index + period ? m : index + (m - index) % period];
  };
  // Smallest divisor of the period that still describes the cycle.
  std::size_t best = period;
  for (std::size_t cand = 1; cand < period; ++cand) {
    if (period % cand != 0) continue;
    bool ok = true;
    for (std::size_t r = 0; r < period && ok; ++r) {
      ok = at(index + r) == at(index + r % cand);
    }
    if (ok) {
      best = cand;
      break;
    }
  }
  std::size_t idx = index;
  while (idx > 0 && at(idx - 1) == at(idx - 1 + best)) --idx;
  index_ = idx;
  period_ = best;
  for (std::size_t m = 0; m < idx + best; ++m) {
    if (at(m)) residues_.push_back(m);
  }
}

UnaryLang UnaryLang::arithmetic(Letter letter, std::size_t offset, std::size_t period) {
  return UnaryLang(letter, offset, period, {offset});
}

UnaryLang UnaryLang::single(Letter letter, std::size_t n) {
  return UnaryLang(letter, n + 1, 1, {n});
}

UnaryLang UnaryLang::all(Letter letter) { return UnaryLang(letter, 0, 1, {0}); }

bool UnaryLang::contains(std::size_t m) const {
  std::size_t pos = m < size() ? m : index_ + (m - index_) % period_;
  return std::binary_search(residues_.begin(), residues_.end(), pos);
}

bool UnaryLang::is_infinite() const {
  return std::any_of(residues_.begin(), residues_.end(),
                     [&](std::size_t r) { return r >= index_; });
}

bool is_commutative(const Dfa& d) { return commutes_on(minimize(d)); }

CommutativeProfile profile(const Dfa& d) {
  return profile_of_minimal(require_commutative_minimal(d));
}

Dfa build_commutative_automaton(const CommutativeProfile& p) {
  const std::size_t k = p.letter_count();
  const std::size_t total = p.product_size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t j = 1; j < k; ++j) stride[j] = stride[j - 1] * p.size(j - 1);

  std::vector<State> delta(total * k);
  ParikhTuple tuple(k, 0);
  for (std::size_t s = 0; s < total; ++s) {
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t t = tuple[j] + 1 < p.size(j) ? s + stride[j]
                                               : s - (tuple[j] - p.index[j]) * stride[j];
      delta[s * k + j] = static_cast<State>(t);
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (++tuple[j] < p.size(j)) break;
      tuple[j] = 0;
    }
  }
  std::vector<State> finals;
  for (const auto& f : p.final_parikh) finals.push_back(static_cast<State>(p.tuple_number(f)));
  std::sort(finals.begin(), finals.end());
  return Dfa(p.alphabet, total, 0, std::move(finals), std::move(delta));
}

Dfa build_commutative_automaton(const Dfa& d) {
  return build_commutative_automaton(profile(d));
}

ProductFormReport product_form(const Dfa& d) {
  Dfa m = require_commutative_minimal(d);
  CommutativeProfile p = profile_of_minimal(m);
  std::size_t c = p.product_size();
  return ProductFormReport{m.state_count() == c, m.state_count(), c};
}

bool has_product_form(const Dfa& d) { return product_form(d).product_form; }

NerodeCheck nerode_char_check(const Dfa& d, const Word& u, const Word& v) {
  Dfa m = require_commutative_minimal(d);
  const std::size_t k = m.letter_count();
  for (const Word* w : {&u, &v}) {
    for (Letter a : w->letters()) {
      if (a >= k) throw Error(ErrorKind::LetterNotInAlphabet, "word letter out of range");
    }
  }
  CommutativeProfile p = profile_of_minimal(m);
  NerodeCheck out{};
  out.lhs = m.run(m.start(), u.letters()) == m.run(m.start(), v.letters());
  auto cu = u.parikh(k);
  auto cv = v.parikh(k);
  out.rhs = true;
  for (std::size_t j = 0; j < k; ++j) {
    if (p.rho[j][p.class_of(j, cu[j])] != p.rho[j][p.class_of(j, cv[j])]) out.rhs = false;
  }
  return out;
}

Dfa projection(const Dfa& d, std::span<const Letter> keep, std::size_t state_guard) {
  if (keep.empty()) {
    throw Error(ErrorKind::EmptyProjectionAlphabet, "projection alphabet is empty");
  }
  const std::size_t k = d.letter_count();
  for (Letter a : keep) {
    if (a >= k) throw Error(ErrorKind::LetterNotInAlphabet, "projection letter out of range");
  }
  Alphabet sub = d.alphabet().restrict_to(keep);
  std::vector<std::optional<Letter>> image(k);
  for (Letter a = 0; a < k; ++a) image[a] = sub.find(d.alphabet().symbol(a));

  Nfa n(sub, d.state_count());
  for (State q = 0; q < d.state_count(); ++q) {
    for (Letter a = 0; a < k; ++a) n.add_edge(q, image[a], d.next(q, a));
    if (d.is_final(q)) n.add_final(q);
  }
  n.add_start(d.start());
  return minimize(determinize(n, DeterminizeOptions{state_guard}));
}

ShuffleDecomposition decompose(const Dfa& d) {
  CommutativeProfile p = profile(d);
  ShuffleDecomposition dec{p.alphabet, {}};
  for (const auto& f : p.final_parikh) {
    ShuffleTerm term{f, {}};
    for (std::size_t j = 0; j < p.letter_count(); ++j) {
      term.parts.emplace_back(static_cast<Letter>(j), p.index[j], p.period[j],
                              std::vector<std::size_t>{f[j]});
    }
    dec.terms.push_back(std::move(term));
  }
  return dec;
}

Dfa recompose(const ShuffleDecomposition& dec) {
  Dfa acc = Dfa::trivial(dec.alphabet, false);
  for (const auto& term : dec.terms) {
    acc = minimize(boolean_product(acc, shuffle_unary_family(dec.alphabet, term.parts),
                                   BoolOp::Union));
  }
  return acc;
}

Dfa from_parikh_oracle(const Alphabet& sigma, const ParikhOracle& oracle,
                       std::span<const RhoBound> bounds) {
  const std::size_t k = sigma.size();
  if (bounds.size() != k) {
    throw Error(ErrorKind::LengthMismatch, "one (index, period) bound per letter is required");
  }
  CommutativeProfile shape;
  shape.alphabet = sigma;
  shape.rho.resize(k);
  for (const auto& b : bounds) {
    if (b.period == 0) throw Error(ErrorKind::PreconditionViolation, "period must be positive");
    shape.index.push_back(b.index);
    shape.period.push_back(b.period);
  }
  const std::size_t total = shape.product_size();
  ParikhTuple tuple(k, 0);
  for (std::size_t s = 0; s < total; ++s) {
    if (oracle(tuple)) shape.final_parikh.push_back(tuple);
    for (std::size_t j = 0; j < k; ++j) {
      if (++tuple[j] < shape.size(j)) break;
      tuple[j] = 0;
    }
  }
  return minimize(build_commutative_automaton(shape));
}

Dfa shuffle_unary_family(const Alphabet& sigma, std::span<const UnaryLang> langs) {
  if (langs.size() != sigma.size()) {
    throw Error(ErrorKind::PreconditionViolation, "one unary language per letter is required");
  }
  std::vector<RhoBound> bounds;
  for (std::size_t j = 0; j < langs.size(); ++j) {
    if (langs[j].letter() != j) {
      throw Error(ErrorKind::PreconditionViolation, "unary languages must follow alphabet order");
    }
    bounds.push_back({langs[j].index(), langs[j].period()});
  }
  std::vector<UnaryLang> parts(langs.begin(), langs.end());
  return from_parikh_oracle(
      sigma,
      [parts](std::span<const std::size_t> m) {
        for (std::size_t j = 0; j < parts.size(); ++j) {
          if (!parts[j].contains(m[j])) return false;
        }
        return true;
      },
      bounds);
}

std::size_t finite_projection_count(const Dfa& d) {
  std::size_t count = 0;
  for (Letter j = 0; j < d.letter_count(); ++j) {
    const Letter keep[] = {j};
    Dfa unary = projection(d, keep);
    std::unordered_map<State, std::size_t> position;
    std::vector<State> walk;
    State q = unary.start();
    while (!position.contains(q)) {
      position.emplace(q, walk.size());
      walk.push_back(q);
      q = unary.next(q, 0);
    }
    bool cycle_accepts = false;
    for (std::size_t i = position.at(q); i < walk.size(); ++i) {
      if (unary.is_final(walk[i])) cycle_accepts = true;
    }
    if (!cycle_accepts) ++count;
  }
  return count;
}

}  // namespace comlang
