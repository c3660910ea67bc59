#include "comlang/automata.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>

#include "comlang/error.hpp"

namespace comlang {
namespace {

struct SubsetHash {
  std::size_t operator()(const std::vector<State>& v) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (State s : v) {
      h ^= s;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

void require_same_alphabet(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorKind::AlphabetMismatch,
                "alphabets differ: \"" + a.alphabet().symbols() + "\" vs \"" +
                    b.alphabet().symbols() + "\"");
  }
}

// Refinable partition of {0..n-1} with marking, the building block of the
// Valmari-Lehtinen variant of Hopcroft's algorithm.
class RefinablePartition {
 public:
  explicit RefinablePartition(std::size_t n)
      : elems_(n), loc_(n), set_of_(n, 0), first_(n + 1), past_(n + 1),
        marked_(n + 1, 0) {
    for (std::size_t i = 0; i < n; ++i) elems_[i] = loc_[i] = i;
    if (n > 0) {
      first_[0] = 0;
      past_[0] = n;
      sets_ = 1;
    }
  }

  std::size_t sets() const noexcept { return sets_; }
  std::size_t first(std::size_t s) const { return first_[s]; }
  std::size_t past(std::size_t s) const { return past_[s]; }
  std::size_t elem(std::size_t i) const { return elems_[i]; }
  std::size_t set_of(std::size_t e) const { return set_of_[e]; }

  /// Appends a new set holding [first, past) of the element order; used to
  /// seed the transition partition by label.
  void define_sets(const std::vector<std::size_t>& order,
                   const std::vector<std::size_t>& boundaries) {
    elems_ = order;
    for (std::size_t i = 0; i < elems_.size(); ++i) loc_[elems_[i]] = i;
    sets_ = 0;
    for (std::size_t b = 0; b + 1 < boundaries.size(); ++b) {
      if (boundaries[b] == boundaries[b + 1]) continue;
      first_[sets_] = boundaries[b];
      past_[sets_] = boundaries[b + 1];
      for (std::size_t i = boundaries[b]; i < boundaries[b + 1]; ++i) {
        set_of_[elems_[i]] = sets_;
      }
      ++sets_;
    }
  }

  void mark(std::size_t e) {
    std::size_t s = set_of_[e];
    std::size_t i = loc_[e];
    std::size_t j = first_[s] + marked_[s];
    elems_[i] = elems_[j];
    loc_[elems_[i]] = i;
    elems_[j] = e;
    loc_[e] = j;
    if (marked_[s]++ == 0) touched_.push_back(s);
  }

  void split() {
    while (!touched_.empty()) {
      std::size_t s = touched_.back();
      touched_.pop_back();
      std::size_t j = first_[s] + marked_[s];
      if (j == past_[s]) {
        marked_[s] = 0;
        continue;
      }
      std::size_t z = sets_;
      // The smaller half becomes the new set.
      if (marked_[s] <= past_[s] - j) {
        first_[z] = first_[s];
        past_[z] = first_[s] = j;
      } else {
        past_[z] = past_[s];
        first_[z] = past_[s] = j;
      }
      for (std::size_t i = first_[z]; i < past_[z]; ++i) set_of_[elems_[i]] = z;
      marked_[s] = marked_[z] = 0;
      ++sets_;
    }
  }

 private:
  std::vector<std::size_t> elems_, loc_, set_of_, first_, past_, marked_;
  std::vector<std::size_t> touched_;
  std::size_t sets_ = 0;
};

}  // namespace

Dfa canonical_form(const Dfa& d) {
  const std::size_t k = d.letter_count();
  constexpr State kUnseen = static_cast<State>(-1);
  std::vector<State> number(d.state_count(), kUnseen);
  std::vector<State> order;
  order.reserve(d.state_count());
  number[d.start()] = 0;
  order.push_back(d.start());
  for (std::size_t head = 0; head < order.size(); ++head) {
    State q = order[head];
    for (Letter a = 0; a < k; ++a) {
      State t = d.next(q, a);
      if (number[t] == kUnseen) {
        number[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<State> delta(order.size() * k);
  std::vector<State> finals;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter a = 0; a < k; ++a) delta[i * k + a] = number[d.next(order[i], a)];
    if (d.is_final(order[i])) finals.push_back(static_cast<State>(i));
  }
  return Dfa(d.alphabet(), order.size(), 0, std::move(finals), std::move(delta));
}

Dfa determinize(const Nfa& n, const DeterminizeOptions& options) {
  const std::size_t k = n.alphabet().size();
  const std::size_t ns = n.state_count();

  // Per-state, per-letter successor lists and epsilon lists.
  std::vector<std::vector<State>> by_letter(ns * k);
  std::vector<std::vector<State>> eps(ns);
  for (State q = 0; q < ns; ++q) {
    for (const auto& e : n.edges(q)) {
      if (e.label) {
        by_letter[q * k + *e.label].push_back(e.target);
      } else {
        eps[q].push_back(e.target);
      }
    }
  }

  std::vector<std::uint32_t> stamp(ns, 0);
  std::uint32_t epoch = 0;
  std::vector<State> stack;
  auto close = [&](std::vector<State>& set) {
    ++epoch;
    stack.clear();
    for (State q : set) {
      if (stamp[q] != epoch) {
        stamp[q] = epoch;
        stack.push_back(q);
      }
    }
    set.clear();
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      set.push_back(q);
      for (State t : eps[q]) {
        if (stamp[t] != epoch) {
          stamp[t] = epoch;
          stack.push_back(t);
        }
      }
    }
    std::sort(set.begin(), set.end());
  };

  std::unordered_map<std::vector<State>, State, SubsetHash> index;
  std::vector<std::vector<State>> subsets;
  std::vector<State> delta;
  std::vector<State> finals;

  auto intern = [&](std::vector<State> set) -> State {
    auto it = index.find(set);
    if (it != index.end()) return it->second;
    if (subsets.size() >= options.state_guard) {
      throw Error(ErrorKind::StateBlowup,
                  "determinization exceeded the state guard of " +
                      std::to_string(options.state_guard),
                  options.state_guard);
    }
    State id = static_cast<State>(subsets.size());
    index.emplace(set, id);
    subsets.push_back(std::move(set));
    return id;
  };

  std::vector<State> initial = n.starts();
  close(initial);
  intern(std::move(initial));

  std::vector<State> target;
  for (std::size_t cur = 0; cur < subsets.size(); ++cur) {
    bool is_final = false;
    for (State q : subsets[cur]) {
      if (n.is_final(q)) {
        is_final = true;
        break;
      }
    }
    if (is_final) finals.push_back(static_cast<State>(cur));
    for (Letter a = 0; a < k; ++a) {
      target.clear();
      for (State q : subsets[cur]) {
        const auto& succ = by_letter[q * k + a];
        target.insert(target.end(), succ.begin(), succ.end());
      }
      close(target);
      State id = intern(target);
      delta.push_back(id);
    }
  }
  return Dfa(n.alphabet(), subsets.size(), 0, std::move(finals), std::move(delta));
}

Dfa minimize(const Dfa& input) {
  const Dfa d = canonical_form(input);
  const std::size_t n = d.state_count();
  const std::size_t k = d.letter_count();
  const std::size_t m = n * k;
  const auto delta = d.transitions();

  RefinablePartition blocks(n);
  for (State q = 0; q < n; ++q) {
    if (d.is_final(q)) blocks.mark(q);
  }
  blocks.split();

  // Transitions t = q * k + a, grouped by label.
  RefinablePartition cords(m);
  {
    std::vector<std::size_t> order;
    order.reserve(m);
    std::vector<std::size_t> bounds{0};
    for (Letter a = 0; a < k; ++a) {
      for (State q = 0; q < n; ++q) order.push_back(static_cast<std::size_t>(q) * k + a);
      bounds.push_back(order.size());
    }
    cords.define_sets(order, bounds);
  }

  // Incoming transitions per state (CSR layout).
  std::vector<std::size_t> in_first(n + 1, 0);
  for (std::size_t t = 0; t < m; ++t) ++in_first[delta[t] + 1];
  for (std::size_t q = 0; q < n; ++q) in_first[q + 1] += in_first[q];
  std::vector<std::size_t> in_list(m);
  {
    std::vector<std::size_t> fill(in_first.begin(), in_first.end() - 1);
    for (std::size_t t = 0; t < m; ++t) in_list[fill[delta[t]]++] = t;
  }

  std::size_t b = 1;
  std::size_t c = 0;
  while (c < cords.sets()) {
    for (std::size_t i = cords.first(c); i < cords.past(c); ++i) {
      blocks.mark(cords.elem(i) / k);
    }
    blocks.split();
    ++c;
    while (b < blocks.sets()) {
      for (std::size_t i = blocks.first(b); i < blocks.past(b); ++i) {
        std::size_t q = blocks.elem(i);
        for (std::size_t j = in_first[q]; j < in_first[q + 1]; ++j) {
          cords.mark(in_list[j]);
        }
      }
      cords.split();
      ++b;
    }
  }

  const std::size_t count = blocks.sets();
  std::vector<State> qdelta(count * k);
  std::vector<State> finals;
  for (std::size_t s = 0; s < count; ++s) {
    std::size_t rep = blocks.elem(blocks.first(s));
    for (Letter a = 0; a < k; ++a) {
      qdelta[s * k + a] = static_cast<State>(blocks.set_of(d.next(static_cast<State>(rep), a)));
    }
    if (d.is_final(static_cast<State>(rep))) finals.push_back(static_cast<State>(s));
  }
  Dfa quotient(d.alphabet(), count, static_cast<State>(blocks.set_of(d.start())),
               std::move(finals), std::move(qdelta));
  return canonical_form(quotient);
}

std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b) {
  require_same_alphabet(a, b);
  const std::size_t k = a.letter_count();
  struct Visit {
    std::uint64_t parent;
    Letter letter;
  };
  auto key = [&](State p, State q) {
    return (static_cast<std::uint64_t>(p) << 32) | q;
  };
  std::unordered_map<std::uint64_t, Visit> seen;
  std::deque<std::uint64_t> queue;
  const std::uint64_t root = key(a.start(), b.start());
  seen.emplace(root, Visit{root, 0});
  queue.push_back(root);
  while (!queue.empty()) {
    std::uint64_t cur = queue.front();
    queue.pop_front();
    State p = static_cast<State>(cur >> 32);
    State q = static_cast<State>(cur & 0xffffffffu);
    if (a.is_final(p) != b.is_final(q)) {
      std::vector<Letter> rev;
      while (cur != root) {
        const Visit& v = seen.at(cur);
        rev.push_back(v.letter);
        cur = v.parent;
      }
      std::reverse(rev.begin(), rev.end());
      return Word(std::move(rev));
    }
    for (Letter x = 0; x < k; ++x) {
      std::uint64_t nxt = key(a.next(p, x), b.next(q, x));
      if (seen.emplace(nxt, Visit{cur, x}).second) queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

bool equivalent(const Dfa& a, const Dfa& b) {
  return !distinguishing_word(a, b).has_value();
}

bool is_empty(const Dfa& d) {
  const Dfa r = canonical_form(d);
  return r.final_count() == 0;
}

bool subset_of(const Dfa& a, const Dfa& b) {
  return is_empty(boolean_product(a, b, BoolOp::Difference));
}

bool isomorphic(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) return false;
  return canonical_form(a) == canonical_form(b);
}

Dfa boolean_product(const Dfa& a, const Dfa& b, BoolOp op) {
  require_same_alphabet(a, b);
  const std::size_t k = a.letter_count();
  std::unordered_map<std::uint64_t, State> number;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
    auto [it, fresh] = number.emplace(key, static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(a.start(), b.start());
  std::vector<State> delta;
  std::vector<State> finals;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    bool fa = a.is_final(p);
    bool fb = b.is_final(q);
    bool f = false;
    switch (op) {
      case BoolOp::Union: f = fa || fb; break;
      case BoolOp::Intersection: f = fa && fb; break;
      case BoolOp::Difference: f = fa && !fb; break;
    }
    if (f) finals.push_back(static_cast<State>(i));
    for (Letter x = 0; x < k; ++x) delta.push_back(intern(a.next(p, x), b.next(q, x)));
  }
  return Dfa(a.alphabet(), pairs.size(), 0, std::move(finals), std::move(delta));
}

Dfa complement(const Dfa& d) {
  std::vector<State> finals;
  for (State q = 0; q < d.state_count(); ++q) {
    if (!d.is_final(q)) finals.push_back(q);
  }
  std::vector<State> delta(d.transitions().begin(), d.transitions().end());
  return Dfa(d.alphabet(), d.state_count(), d.start(), std::move(finals), std::move(delta));
}

Dfa left_quotient(const Dfa& d, const Word& u) {
  for (Letter a : u.letters()) {
    if (a >= d.letter_count()) {
      throw Error(ErrorKind::LetterNotInAlphabet, "quotient word letter out of range");
    }
  }
  State s = d.run(d.start(), u.letters());
  std::vector<State> delta(d.transitions().begin(), d.transitions().end());
  return canonical_form(Dfa(d.alphabet(), d.state_count(), s, d.finals(), std::move(delta)));
}

bool accepts(const Dfa& d, const Word& w) {
  State q = d.start();
  for (Letter a : w.letters()) {
    if (a >= d.letter_count()) {
      throw Error(ErrorKind::LetterNotInAlphabet, "word letter out of range");
    }
    q = d.next(q, a);
  }
  return d.is_final(q);
}

bool accepts(const Dfa& d, std::string_view w) {
  return accepts(d, Word::parse(d.alphabet(), w));
}

Dfa from_words(const Alphabet& sigma, std::span<const Word> words) {
  const std::size_t k = sigma.size();
  constexpr State kNone = static_cast<State>(-1);
  std::vector<State> trie(k, kNone);
  std::vector<char> accepting(1, 0);
  for (const Word& w : words) {
    State q = 0;
    for (Letter a : w.letters()) {
      if (a >= k) throw Error(ErrorKind::LetterNotInAlphabet, "word letter out of range");
      if (trie[q * k + a] == kNone) {
        State fresh = static_cast<State>(accepting.size());
        accepting.push_back(0);
        trie.resize(trie.size() + k, kNone);
        trie[q * k + a] = fresh;
      }
      q = trie[q * k + a];
    }
    accepting[q] = 1;
  }
  const State sink = static_cast<State>(accepting.size());
  std::vector<State> delta(trie);
  delta.resize(delta.size() + k, sink);
  for (State& t : delta) {
    if (t == kNone) t = sink;
  }
  std::vector<State> finals;
  for (State q = 0; q < accepting.size(); ++q) {
    if (accepting[q]) finals.push_back(q);
  }
  return Dfa(sigma, accepting.size() + 1, 0, std::move(finals), std::move(delta));
}

std::vector<std::optional<Word>> access_words(const Dfa& d) {
  const std::size_t k = d.letter_count();
  std::vector<std::optional<Word>> out(d.state_count());
  std::deque<State> queue{d.start()};
  out[d.start()] = Word{};
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < k; ++a) {
      State t = d.next(q, a);
      if (!out[t]) {
        out[t] = *out[q] + Word(std::vector<Letter>{a});
        queue.push_back(t);
      }
    }
  }
  return out;
}

}  // namespace comlang
