#include "comlang/dfa.hpp"

#include <algorithm>
#include <string>

#include "comlang/error.hpp"

namespace comlang {

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, State start,
         std::vector<State> finals, std::vector<State> delta)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      start_(start),
      final_flags_(state_count, 0),
      delta_(std::move(delta)) {
  if (alphabet_.size() == 0) {
    throw Error(ErrorKind::InvalidAutomaton, "alphabet must be nonempty");
  }
  if (state_count_ == 0) {
    throw Error(ErrorKind::InvalidAutomaton, "a DFA needs at least one state");
  }
  if (start_ >= state_count_) {
    throw Error(ErrorKind::InvalidAutomaton, "start state out of range");
  }
  if (delta_.size() != state_count_ * alphabet_.size()) {
    throw Error(ErrorKind::InvalidAutomaton,
                "transition table must have states * letters entries");
  }
  for (State t : delta_) {
    if (t >= state_count_) {
      throw Error(ErrorKind::InvalidAutomaton,
                  "transition target " + std::to_string(t) + " out of range");
    }
  }
  for (State f : finals) {
    if (f >= state_count_) {
      throw Error(ErrorKind::InvalidAutomaton,
                  "final state " + std::to_string(f) + " out of range");
    }
    final_flags_[f] = 1;
  }
}

Dfa Dfa::trivial(Alphabet alphabet, bool accept) {
  std::vector<State> delta(alphabet.size(), 0);
  std::vector<State> finals;
  if (accept) finals.push_back(0);
  return Dfa(std::move(alphabet), 1, 0, std::move(finals), std::move(delta));
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (State q = 0; q < state_count_; ++q) {
    if (final_flags_[q]) out.push_back(q);
  }
  return out;
}

std::size_t Dfa::final_count() const noexcept {
  return static_cast<std::size_t>(
      std::count(final_flags_.begin(), final_flags_.end(), 1));
}

Nfa::Nfa(Alphabet alphabet, std::size_t state_count)
    : alphabet_(std::move(alphabet)),
      edges_(state_count),
      start_flags_(state_count, 0),
      final_flags_(state_count, 0) {}

Nfa Nfa::from_dfa(const Dfa& d) {
  Nfa n(d.alphabet(), d.state_count());
  for (State q = 0; q < d.state_count(); ++q) {
    for (Letter a = 0; a < d.letter_count(); ++a) n.add_edge(q, a, d.next(q, a));
    if (d.is_final(q)) n.add_final(q);
  }
  n.add_start(d.start());
  return n;
}

void Nfa::check_state(State q) const {
  if (q >= edges_.size()) {
    throw Error(ErrorKind::InvalidAutomaton,
                "NFA state " + std::to_string(q) + " out of range");
  }
}

State Nfa::add_state() {
  edges_.emplace_back();
  start_flags_.push_back(0);
  final_flags_.push_back(0);
  return static_cast<State>(edges_.size() - 1);
}

void Nfa::add_edge(State from, std::optional<Letter> label, State to) {
  check_state(from);
  check_state(to);
  if (label && *label >= alphabet_.size()) {
    throw Error(ErrorKind::LetterNotInAlphabet, "NFA edge label out of range");
  }
  edges_[from].push_back(Edge{label, to});
}

void Nfa::add_start(State q) {
  check_state(q);
  start_flags_[q] = 1;
}

void Nfa::add_final(State q) {
  check_state(q);
  final_flags_[q] = 1;
}

std::vector<State> Nfa::starts() const {
  std::vector<State> out;
  for (State q = 0; q < start_flags_.size(); ++q) {
    if (start_flags_[q]) out.push_back(q);
  }
  return out;
}

std::vector<State> Nfa::finals() const {
  std::vector<State> out;
  for (State q = 0; q < final_flags_.size(); ++q) {
    if (final_flags_[q]) out.push_back(q);
  }
  return out;
}

}  // namespace comlang
