#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "comlang/dfa.hpp"

namespace comlang {

using PeriodVector = std::vector<std::size_t>;

struct GroupShuffleBound {
  std::uint64_t bound;
  /// Predicted shape of the shuffle: lcm - 1 and gcd per letter.
  std::vector<std::size_t> index;
  std::vector<std::size_t> period;
};

/// Every letter permutes the states of the minimal DFA.
bool is_permutation_automaton(const Dfa& d);

/// prod (gcd(p_j, q_j) + lcm(p_j, q_j) - 1). Throws LengthMismatch.
GroupShuffleBound group_shuffle_bound(std::span<const std::size_t> p,
                                      std::span<const std::size_t> q);

/// U = shuffle_j a_j^{p-1}(a_j^p)^*, V likewise with q. Throws
/// NotDistinctPrimes.
std::pair<Dfa, Dfa> gen_sharp_group_pair(std::size_t p, std::size_t q, const Alphabet& sigma);

/// {w : |w|_{a_j} >= n_j for every j}. Throws LengthMismatch when n does not
/// match the alphabet.
Dfa gen_threshold_language(std::span<const std::size_t> n, const Alphabet& sigma);

/// (nm)^k, saturating at UINT64_MAX. Throws PreconditionViolation for n or
/// m below 1.
std::uint64_t general_group_bound(std::size_t n, std::size_t m, std::size_t k);

bool is_prime(std::size_t n);

}  // namespace comlang
