#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "comlang/dfa.hpp"

namespace comlang {

using ParikhTuple = std::vector<std::size_t>;

/// Unary rho structure of every letter in the minimal DFA, together with the
/// final tuples of the minimal commutative automaton C_L.
struct CommutativeProfile {
  Alphabet alphabet;
  /// rho[j][m] = state of the minimal DFA reached by a_j^m, for
  /// m < index[j] + period[j].
  std::vector<std::vector<State>> rho;
  std::vector<std::size_t> index;
  std::vector<std::size_t> period;
  /// Tuples (m_1..m_k) with m_j < index[j] + period[j] whose representative
  /// word a_1^{m_1} ... a_k^{m_k} is accepted; lexicographically sorted.
  std::vector<ParikhTuple> final_parikh;

  std::size_t letter_count() const noexcept { return index.size(); }
  std::size_t size(std::size_t j) const { return index[j] + period[j]; }
  /// Product of index[j] + period[j]: the state count of C_L.
  std::size_t product_size() const;
  /// Position on letter j's rho after m occurrences.
  std::size_t class_of(std::size_t j, std::size_t m) const;
  /// Mixed-radix number of a tuple; coordinate 0 varies fastest.
  std::size_t tuple_number(std::span<const std::size_t> tuple) const;
  ParikhTuple tuple_at(std::size_t number) const;

  friend bool operator==(const CommutativeProfile&, const CommutativeProfile&) = default;
};

/// A unary language over one letter given by its rho: a^m is accepted iff
/// the position of m (m itself below index + period, otherwise
/// index + (m - index) mod period) is in `residues`.
class UnaryLang {
 public:
  /// Canonicalizes (index, period) to the minimal pair describing the set.
  UnaryLang(Letter letter, std::size_t index, std::size_t period,
            std::vector<std::size_t> residues);

  /// a^{offset} (a^{period})^*
  static UnaryLang arithmetic(Letter letter, std::size_t offset, std::size_t period);
  /// {a^n}
  static UnaryLang single(Letter letter, std::size_t n);
  /// a^*
  static UnaryLang all(Letter letter);

  Letter letter() const noexcept { return letter_; }
  std::size_t index() const noexcept { return index_; }
  std::size_t period() const noexcept { return period_; }
  std::size_t size() const noexcept { return index_ + period_; }
  const std::vector<std::size_t>& residues() const noexcept { return residues_; }

  bool contains(std::size_t m) const;
  bool is_infinite() const;

  friend bool operator==(const UnaryLang&, const UnaryLang&) = default;

 private:
  Letter letter_;
  std::size_t index_;
  std::size_t period_;
  std::vector<std::size_t> residues_;
};

/// One term of L = union over final tuples of the shuffle of unary parts.
struct ShuffleTerm {
  ParikhTuple final_tuple;
  std::vector<UnaryLang> parts;  // one per letter
};

struct ShuffleDecomposition {
  Alphabet alphabet;
  std::vector<ShuffleTerm> terms;
};

struct ProductFormReport {
  bool product_form;
  std::size_t sc;
  std::size_t c_states;
};

struct NerodeCheck {
  bool lhs;  // u and v reach the same state of the minimal DFA
  bool rhs;  // a^{|u|_a} and a^{|v|_a} agree for every letter a
};

/// Per-letter (index, period) of a rho automaton.
struct RhoBound {
  std::size_t index;
  std::size_t period;
  std::size_t size() const noexcept { return index + period; }
};

using ParikhOracle = std::function<bool(std::span<const std::size_t>)>;

bool is_commutative(const Dfa& d);

/// Throws NotCommutative.
CommutativeProfile profile(const Dfa& d);

/// Materializes C_L with states numbered by `tuple_number`. Throws
/// NotCommutative.
Dfa build_commutative_automaton(const Dfa& d);
Dfa build_commutative_automaton(const CommutativeProfile& p);

/// sc(L) = prod (i_j + p_j). Throws NotCommutative.
ProductFormReport product_form(const Dfa& d);
bool has_product_form(const Dfa& d);

/// Throws NotCommutative and LetterNotInAlphabet.
NerodeCheck nerode_char_check(const Dfa& d, const Word& u, const Word& v);

/// pi_keep(L) over the sub-alphabet `keep` (alphabet order kept). Throws
/// EmptyProjectionAlphabet.
Dfa projection(const Dfa& d, std::span<const Letter> keep,
               std::size_t state_guard = 1'000'000);

/// Throws NotCommutative.
ShuffleDecomposition decompose(const Dfa& d);
/// Union over terms of the shuffle of their unary parts, minimized.
Dfa recompose(const ShuffleDecomposition& dec);

/// Product rho automaton over `bounds` with finals chosen by `oracle` on
/// the coordinate tuple, minimized. The oracle is trusted to be periodic
/// within the declared bounds.
Dfa from_parikh_oracle(const Alphabet& sigma, const ParikhOracle& oracle,
                       std::span<const RhoBound> bounds);

/// Shuffle of one unary language per letter (langs[j].letter() == j).
/// Throws PreconditionViolation when the list does not match the alphabet.
Dfa shuffle_unary_family(const Alphabet& sigma, std::span<const UnaryLang> langs);

/// Number of letters x with pi_{x}(L) finite.
std::size_t finite_projection_count(const Dfa& d);

}  // namespace comlang
