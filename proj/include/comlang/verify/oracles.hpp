#pragma once

// Slow, independent reference implementations used to cross-check the
// library. None of these are used by the library itself.

#include <cstddef>
#include <vector>

#include "comlang/commutative.hpp"
#include "comlang/dfa.hpp"

namespace comlang::verify {

/// Moore partition refinement (round-based signature splitting), followed by
/// breadth-first renumbering.
Dfa moore_minimize(const Dfa& d);

/// All words of length <= max_len, shortlex order.
std::vector<Word> words_up_to(const Alphabet& sigma, std::size_t max_len);

/// Direct NFA simulation with epsilon closure.
bool nfa_accepts(const Nfa& n, const Word& w);

/// w in L(u) shuffle L(v), by trying every split of the positions of w.
bool brute_in_shuffle(const Dfa& u, const Dfa& v, const Word& w);

/// u is a scattered subword of w.
bool is_subsequence(const Word& u, const Word& w);

/// Smallest (i, p) with a_j^i and a_j^{i+p} giving equivalent left quotients,
/// searched by increasing i + p.
RhoBound quotient_index_period(const Dfa& d, Letter j);

/// Distinct membership signatures over suffixes of length <= suffix_len
/// among prefixes of length <= prefix_len. A lower bound on sc that is exact
/// once both lengths are large enough.
std::size_t nerode_signature_count(const Dfa& d, std::size_t prefix_len, std::size_t suffix_len);

}  // namespace comlang::verify
