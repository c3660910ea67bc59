#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "comlang/dfa.hpp"

namespace comlang {

inline constexpr std::size_t kDefaultStateGuard = 1'000'000;

struct DeterminizeOptions {
  /// Maximum number of subset-states; exceeding it raises StateBlowup.
  std::size_t state_guard = kDefaultStateGuard;
};

/// Subset construction over the epsilon-closed start set.
Dfa determinize(const Nfa& n, const DeterminizeOptions& options = {});

/// Minimal DFA, numbered breadth-first from the start with letters explored
/// in alphabet order. Equal languages give identical results.
Dfa minimize(const Dfa& d);

/// Reachable part, renumbered breadth-first from the start.
Dfa canonical_form(const Dfa& d);

/// Throws AlphabetMismatch.
bool equivalent(const Dfa& a, const Dfa& b);
/// Shortest word in the symmetric difference of L(a) and L(b), if any.
std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b);
/// L(a) subset of L(b).
bool subset_of(const Dfa& a, const Dfa& b);
bool is_empty(const Dfa& d);

/// Start- and final-preserving bijection between the reachable parts.
bool isomorphic(const Dfa& a, const Dfa& b);

enum class BoolOp { Union, Intersection, Difference };

/// Product on reachable pairs; not minimized.
Dfa boolean_product(const Dfa& a, const Dfa& b, BoolOp op);

Dfa complement(const Dfa& d);
/// u^{-1} L: start moved to delta(q0, u), unreachable states pruned.
Dfa left_quotient(const Dfa& d, const Word& u);

bool accepts(const Dfa& d, const Word& w);
/// Parses `w` against the DFA's alphabet; throws LetterNotInAlphabet.
bool accepts(const Dfa& d, std::string_view w);

/// Prefix-tree automaton for a finite language, completed with a sink.
Dfa from_words(const Alphabet& sigma, std::span<const Word> words);

/// Word reaching each state breadth-first (shortest, then alphabet order);
/// nullopt for unreachable states.
std::vector<std::optional<Word>> access_words(const Dfa& d);

}  // namespace comlang
