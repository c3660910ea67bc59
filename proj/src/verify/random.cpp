#include "comlang/verify/random.hpp"

#include <algorithm>

#include "comlang/automata.hpp"

namespace comlang::verify {

Dfa random_dfa(Rng& rng, const Alphabet& sigma, std::size_t states, double final_density) {
  std::vector<State> delta(states * sigma.size());
  for (auto& t : delta) t = static_cast<State>(rng.between(0, states - 1));
  std::vector<State> finals;
  for (State q = 0; q < states; ++q) {
    if (rng.chance(final_density)) finals.push_back(q);
  }
  return Dfa(sigma, states, 0, finals, delta);
}

Nfa random_nfa(Rng& rng, const Alphabet& sigma, std::size_t states, std::size_t edges,
               std::size_t epsilons) {
  Nfa n(sigma, states);
  n.add_start(0);
  if (rng.chance(0.3)) n.add_start(static_cast<State>(rng.between(0, states - 1)));
  for (State q = 0; q < states; ++q) {
    if (rng.chance(0.4)) n.add_final(q);
  }
  for (std::size_t i = 0; i < edges; ++i) {
    n.add_edge(static_cast<State>(rng.between(0, states - 1)),
               static_cast<Letter>(rng.between(0, sigma.size() - 1)),
               static_cast<State>(rng.between(0, states - 1)));
  }
  for (std::size_t i = 0; i < epsilons; ++i) {
    n.add_edge(static_cast<State>(rng.between(0, states - 1)), std::nullopt,
               static_cast<State>(rng.between(0, states - 1)));
  }
  return n;
}

Dfa random_commutative(Rng& rng, const Alphabet& sigma, CommutativeShape shape) {
  std::vector<RhoBound> bounds;
  std::size_t total = 1;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    bounds.push_back({rng.between(0, shape.max_index), rng.between(1, shape.max_period)});
    total *= bounds.back().size();
  }
  static constexpr double densities[] = {0.1, 0.3, 0.5, 0.7, 0.9};
  double density = densities[rng.between(0, 4)];
  std::vector<char> table(total);
  for (auto& t : table) t = rng.chance(density);
  auto oracle = [&](std::span<const std::size_t> m) {
    std::size_t n = 0;
    for (std::size_t j = bounds.size(); j-- > 0;) n = n * bounds[j].size() + m[j];
    return table[n] != 0;
  };
  return from_parikh_oracle(sigma, oracle, bounds);
}

UnaryLang random_infinite_unary(Rng& rng, Letter letter, CommutativeShape shape) {
  std::size_t index = rng.between(0, shape.max_index);
  std::size_t period = rng.between(1, shape.max_period);
  std::vector<std::size_t> residues;
  for (std::size_t m = 0; m < index + period; ++m) {
    if (rng.chance(0.5)) residues.push_back(m);
  }
  std::size_t cyclic = index + rng.between(0, period - 1);
  if (std::find(residues.begin(), residues.end(), cyclic) == residues.end()) {
    residues.push_back(cyclic);
  }
  std::sort(residues.begin(), residues.end());
  return UnaryLang(letter, index, period, residues);
}

Dfa random_product_form(Rng& rng, const Alphabet& sigma, CommutativeShape shape) {
  std::vector<UnaryLang> parts;
  for (Letter j = 0; j < sigma.size(); ++j) parts.push_back(random_infinite_unary(rng, j, shape));
  return shuffle_unary_family(sigma, parts);
}

Dfa random_group_language(Rng& rng, const Alphabet& sigma, std::size_t max_period) {
  std::vector<RhoBound> bounds;
  std::size_t total = 1;
  for (std::size_t j = 0; j < sigma.size(); ++j) {
    bounds.push_back({0, rng.between(1, max_period)});
    total *= bounds.back().size();
  }
  std::vector<char> table(total);
  for (auto& t : table) t = rng.chance(0.4);
  table[rng.between(0, total - 1)] = 1;
  auto oracle = [&](std::span<const std::size_t> m) {
    std::size_t n = 0;
    for (std::size_t j = bounds.size(); j-- > 0;) n = n * bounds[j].size() + m[j];
    return table[n] != 0;
  };
  return from_parikh_oracle(sigma, oracle, bounds);
}

Dfa random_closed(Rng& rng, const Partition& part, std::size_t max_block_states) {
  const Alphabet& sigma = part.alphabet();
  const std::size_t k = part.block_count();
  std::vector<std::size_t> sizes(k);
  std::vector<std::size_t> stride(k);
  std::vector<std::vector<State>> local(k);
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    sizes[i] = rng.between(1, max_block_states);
    stride[i] = total;
    total *= sizes[i];
    local[i].resize(sizes[i] * sigma.size());
    for (auto& t : local[i]) t = static_cast<State>(rng.between(0, sizes[i] - 1));
  }
  std::vector<State> delta(total * sigma.size());
  for (std::size_t t = 0; t < total; ++t) {
    for (Letter x = 0; x < sigma.size(); ++x) {
      std::size_t i = part.block_of(x);
      std::size_t c = (t / stride[i]) % sizes[i];
      std::size_t nc = local[i][c * sigma.size() + x];
      delta[t * sigma.size() + x] = static_cast<State>(t + (nc - c) * stride[i]);
    }
  }
  std::vector<State> finals;
  for (State t = 0; t < total; ++t) {
    if (rng.chance(0.35)) finals.push_back(t);
  }
  return minimize(Dfa(sigma, total, 0, finals, delta));
}

}  // namespace comlang::verify
