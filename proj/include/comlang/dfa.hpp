#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "comlang/alphabet.hpp"

namespace comlang {

/// Complete deterministic automaton. The transition table is total; the
/// object is immutable once constructed.
class Dfa {
 public:
  Dfa() = default;
  /// `delta` is row-major: delta[q * |alphabet| + letter]. Throws
  /// InvalidAutomaton when any index is out of range.
  Dfa(Alphabet alphabet, std::size_t state_count, State start,
      std::vector<State> finals, std::vector<State> delta);

  /// The one-state automaton for the empty language (accept = false) or
  /// for the full language Sigma^* (accept = true).
  static Dfa trivial(Alphabet alphabet, bool accept);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t letter_count() const noexcept { return alphabet_.size(); }
  std::size_t state_count() const noexcept { return state_count_; }
  State start() const noexcept { return start_; }

  State next(State q, Letter a) const {
    return delta_[static_cast<std::size_t>(q) * alphabet_.size() + a];
  }
  State run(State q, std::span<const Letter> word) const {
    for (Letter a : word) q = next(q, a);
    return q;
  }
  bool is_final(State q) const { return final_flags_[q] != 0; }
  /// Sorted ascending.
  std::vector<State> finals() const;
  std::size_t final_count() const noexcept;
  std::span<const State> transitions() const noexcept { return delta_; }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  std::size_t state_count_ = 0;
  State start_ = 0;
  std::vector<char> final_flags_;
  std::vector<State> delta_;
};

/// Nondeterministic automaton with epsilon edges; an intermediate for
/// closures, projections and the generic shuffle.
class Nfa {
 public:
  struct Edge {
    std::optional<Letter> label;  // nullopt = epsilon
    State target;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Nfa() = default;
  Nfa(Alphabet alphabet, std::size_t state_count);
  /// Same states, starts, finals and transitions as `d`.
  static Nfa from_dfa(const Dfa& d);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return edges_.size(); }

  State add_state();
  void add_edge(State from, std::optional<Letter> label, State to);
  void add_start(State q);
  void add_final(State q);

  /// Sorted, duplicate-free.
  std::vector<State> starts() const;
  std::vector<State> finals() const;
  bool is_final(State q) const { return final_flags_.at(q) != 0; }
  bool is_start(State q) const { return start_flags_.at(q) != 0; }
  std::span<const Edge> edges(State q) const { return edges_.at(q); }

 private:
  void check_state(State q) const;

  Alphabet alphabet_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<char> start_flags_;
  std::vector<char> final_flags_;
};

}  // namespace comlang
