#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "comlang/commutative.hpp"
#include "comlang/dfa.hpp"
#include "comlang/partial.hpp"

namespace comlang::verify {

/// Reduction by modulo keeps sequences identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + engine_() % (hi - lo + 1); }
  bool chance(double p) { return static_cast<double>(engine_() % 1'000'000) < p * 1'000'000; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

inline constexpr std::uint64_t kDefaultSeed = 20211104;

Dfa random_dfa(Rng& rng, const Alphabet& sigma, std::size_t states, double final_density = 0.5);
Nfa random_nfa(Rng& rng, const Alphabet& sigma, std::size_t states, std::size_t edges,
               std::size_t epsilons);

struct CommutativeShape {
  std::size_t max_index = 3;
  std::size_t max_period = 4;
};

/// Realized through a Parikh oracle over per-letter (index, period) drawn
/// up to the shape limits, with a random final density.
Dfa random_commutative(Rng& rng, const Alphabet& sigma, CommutativeShape shape = {});

/// Infinite unary language on `letter`.
UnaryLang random_infinite_unary(Rng& rng, Letter letter, CommutativeShape shape = {});

/// Shuffle of infinite unary languages, hence product-form.
Dfa random_product_form(Rng& rng, const Alphabet& sigma, CommutativeShape shape = {});

/// Commutative group language: random finals on a product of cycles.
Dfa random_group_language(Rng& rng, const Alphabet& sigma, std::size_t max_period = 6);

/// Closed under `part` by construction: a random automaton per block, run
/// independently, with random final tuples.
Dfa random_closed(Rng& rng, const Partition& part, std::size_t max_block_states = 3);

}  // namespace comlang::verify
