#include "comlang/verify/oracles.hpp"

#include <map>
#include <set>

#include "comlang/automata.hpp"

namespace comlang::verify {

Dfa moore_minimize(const Dfa& input) {
  const Dfa d = canonical_form(input);
  const std::size_t n = d.state_count();
  const std::size_t k = d.letter_count();
  std::vector<std::size_t> cls(n);
  for (State q = 0; q < n; ++q) cls[q] = d.is_final(q) ? 1 : 0;
  std::size_t count = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> next(n);
    for (State q = 0; q < n; ++q) {
      std::vector<std::size_t> sig{cls[q]};
      for (Letter a = 0; a < k; ++a) sig.push_back(cls[d.next(q, a)]);
      next[q] = ids.emplace(sig, ids.size()).first->second;
    }
    cls = next;
    if (ids.size() == count) break;
    count = ids.size();
  }
  std::vector<State> delta(count * k);
  std::vector<State> finals;
  std::vector<char> done(count, 0);
  for (State q = 0; q < n; ++q) {
    if (done[cls[q]]) continue;
    done[cls[q]] = 1;
    for (Letter a = 0; a < k; ++a) delta[cls[q] * k + a] = static_cast<State>(cls[d.next(q, a)]);
    if (d.is_final(q)) finals.push_back(static_cast<State>(cls[q]));
  }
  return canonical_form(
      Dfa(d.alphabet(), count, static_cast<State>(cls[d.start()]), finals, delta));
}

std::vector<Word> words_up_to(const Alphabet& sigma, std::size_t max_len) {
  std::vector<Word> out{Word()};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter a = 0; a < sigma.size(); ++a) out.push_back(out[i] + Word({a}));
    }
    begin = end;
  }
  return out;
}

namespace {

void close(const Nfa& n, std::set<State>& s) {
  std::vector<State> stack(s.begin(), s.end());
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (const auto& e : n.edges(q)) {
      if (!e.label && s.insert(e.target).second) stack.push_back(e.target);
    }
  }
}

}  // namespace

bool nfa_accepts(const Nfa& n, const Word& w) {
  auto starts = n.starts();
  std::set<State> cur(starts.begin(), starts.end());
  close(n, cur);
  for (Letter a : w.letters()) {
    std::set<State> nxt;
    for (State q : cur) {
      for (const auto& e : n.edges(q)) {
        if (e.label && *e.label == a) nxt.insert(e.target);
      }
    }
    close(n, nxt);
    cur = std::move(nxt);
  }
  for (State q : cur) {
    if (n.is_final(q)) return true;
  }
  return false;
}

bool brute_in_shuffle(const Dfa& u, const Dfa& v, const Word& w) {
  auto letters = w.letters();
  const std::size_t len = letters.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    State p = u.start();
    State q = v.start();
    for (std::size_t i = 0; i < len; ++i) {
      if (mask >> i & 1) {
        p = u.next(p, letters[i]);
      } else {
        q = v.next(q, letters[i]);
      }
    }
    if (u.is_final(p) && v.is_final(q)) return true;
  }
  return false;
}

bool is_subsequence(const Word& u, const Word& w) {
  std::size_t i = 0;
  for (Letter a : w.letters()) {
    if (i < u.size() && u.letters()[i] == a) ++i;
  }
  return i == u.size();
}

RhoBound quotient_index_period(const Dfa& d, Letter j) {
  auto power = [j](std::size_t m) { return Word(std::vector<Letter>(m, j)); };
  for (std::size_t total = 1;; ++total) {
    for (std::size_t i = 0; i < total; ++i) {
      std::size_t p = total - i;
      if (equivalent(left_quotient(d, power(i)), left_quotient(d, power(i + p)))) {
        return {i, p};
      }
    }
  }
}

std::size_t nerode_signature_count(const Dfa& d, std::size_t prefix_len, std::size_t suffix_len) {
  auto prefixes = words_up_to(d.alphabet(), prefix_len);
  auto suffixes = words_up_to(d.alphabet(), suffix_len);
  std::set<std::vector<bool>> sigs;
  for (const auto& u : prefixes) {
    std::vector<bool> sig;
    for (const auto& x : suffixes) sig.push_back(accepts(d, u + x));
    sigs.insert(std::move(sig));
  }
  return sigs.size();
}

}  // namespace comlang::verify
