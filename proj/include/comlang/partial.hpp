#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "comlang/dfa.hpp"

namespace comlang {

/// Ordered partition of the alphabet into blocks; letters in different
/// blocks commute.
class Partition {
 public:
  /// Throws PartitionAlphabetMismatch unless the blocks are nonempty,
  /// disjoint and cover the alphabet.
  Partition(const Alphabet& sigma, std::vector<std::vector<Letter>> blocks);
  /// Blocks of letters joined by '|', e.g. "ac|b".
  static Partition parse(const Alphabet& sigma, std::string_view text);
  /// Every letter its own block (the commutative case).
  static Partition singletons(const Alphabet& sigma);
  static Partition single_block(const Alphabet& sigma);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<Letter>& block(std::size_t i) const { return blocks_.at(i); }
  std::size_t block_of(Letter a) const { return block_of_.at(a); }
  std::string str() const;

 private:
  Alphabet alphabet_;
  std::vector<std::vector<Letter>> blocks_;
  std::vector<std::size_t> block_of_;
};

using BlockTuple = std::vector<std::size_t>;

/// One coordinate of the canonical automaton: the minimal-DFA states reached
/// by words over the block, with the block's own transitions.
struct FactorAutomaton {
  Alphabet alphabet;
  /// members[s] = minimal-DFA state of local state s, breadth-first order.
  std::vector<State> members;
  /// Over `alphabet`; start 0, finals are the block projection of F.
  Dfa automaton;
};

struct CanonicalAutomaton {
  Partition partition;
  /// State set S_1 x ... x S_k, every tuple reachable; coordinate 0 varies
  /// fastest in the numbering.
  Dfa product;
  std::vector<FactorAutomaton> factors;
  /// Final tuples (local indices), lexicographically sorted.
  std::vector<BlockTuple> finals;
  /// finals_per_block[i] = projection of `finals` onto coordinate i, sorted.
  std::vector<std::vector<std::size_t>> finals_per_block;

  std::size_t tuple_number(const BlockTuple& t) const;
  BlockTuple tuple_at(std::size_t number) const;
};

struct BlockReport {
  std::size_t size_si;
  std::size_t sc_projection;
};

struct ClassificationReport {
  std::string partition;
  bool closed = false;
  bool recognizes_l = false;
  bool l1 = false;
  bool l2 = false;
  bool l3 = false;
  bool l4 = false;
  std::size_t sc = 0;
  std::size_t canonical_states = 0;
  std::size_t canonical_finals = 0;
  std::vector<BlockReport> blocks;
  /// Named reasons and witness words for failed checks.
  std::vector<std::pair<std::string, std::string>> witnesses;
};

/// Decided on the minimal DFA. Throws PartitionAlphabetMismatch.
bool is_closed_under(const Dfa& d, const Partition& part);

/// A word u x y v with exactly one of u x y v, u y x v in L, if any.
std::optional<Word> closure_witness(const Dfa& d, const Partition& part);

/// Defined for every regular L; recognizes L exactly when L is closed
/// under the partition. Throws PartitionAlphabetMismatch.
CanonicalAutomaton canonical_automaton(const Dfa& d, const Partition& part);

/// The factor automaton for block i. Throws NotClosedUnderPartition.
Dfa canonical_projection(const Dfa& d, const Partition& part, std::size_t block);

/// Shuffle of the block projections pi_{Sigma_i}(L), over the full alphabet.
Dfa shuffle_of_block_projections(const Dfa& d, const Partition& part);

ClassificationReport classify(const Dfa& d, const Partition& part);

/// Words driving the canonical automaton to `tuple`, minimized. Throws
/// UnreachableState for tuples outside S_1 x ... x S_k.
Dfa state_language(const CanonicalAutomaton& c, const BlockTuple& tuple);

}  // namespace comlang
