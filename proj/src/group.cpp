#include "comlang/group.hpp"

#include <numeric>

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/error.hpp"

namespace comlang {

bool is_permutation_automaton(const Dfa& d) {
  const Dfa m = minimize(d);
  std::vector<char> hit(m.state_count());
  for (Letter a = 0; a < m.letter_count(); ++a) {
    std::fill(hit.begin(), hit.end(), 0);
    for (State q = 0; q < m.state_count(); ++q) {
      State r = m.next(q, a);
      if (hit[r]) return false;
      hit[r] = 1;
    }
  }
  return true;
}

GroupShuffleBound group_shuffle_bound(std::span<const std::size_t> p,
                                      std::span<const std::size_t> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::LengthMismatch, "period vectors have lengths " +
                                               std::to_string(p.size()) + " and " +
                                               std::to_string(q.size()));
  }
  GroupShuffleBound out{1, {}, {}};
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] == 0 || q[j] == 0) {
      throw Error(ErrorKind::PreconditionViolation, "periods must be positive");
    }
    std::size_t g = std::gcd(p[j], q[j]);
    std::size_t l = std::lcm(p[j], q[j]);
    out.bound *= g + l - 1;
    out.index.push_back(l - 1);
    out.period.push_back(g);
  }
  return out;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<Dfa, Dfa> gen_sharp_group_pair(std::size_t p, std::size_t q, const Alphabet& sigma) {
  if (!is_prime(p) || !is_prime(q) || p == q) {
    throw Error(ErrorKind::NotDistinctPrimes,
                std::to_string(p) + " and " + std::to_string(q) + " are not distinct primes");
  }
  std::vector<UnaryLang> us;
  std::vector<UnaryLang> vs;
  for (Letter j = 0; j < sigma.size(); ++j) {
    us.push_back(UnaryLang::arithmetic(j, p - 1, p));
    vs.push_back(UnaryLang::arithmetic(j, q - 1, q));
  }
  return {shuffle_unary_family(sigma, us), shuffle_unary_family(sigma, vs)};
}

Dfa gen_threshold_language(std::span<const std::size_t> n, const Alphabet& sigma) {
  if (n.size() != sigma.size()) {
    throw Error(ErrorKind::LengthMismatch, "threshold vector length differs from the alphabet");
  }
  std::vector<std::size_t> need(n.begin(), n.end());
  std::vector<RhoBound> bounds;
  for (std::size_t v : need) bounds.push_back({v, 1});
  auto oracle = [need](std::span<const std::size_t> m) {
    for (std::size_t j = 0; j < need.size(); ++j) {
      if (m[j] < need[j]) return false;
    }
    return true;
  };
  return from_parikh_oracle(sigma, oracle, bounds);
}

std::uint64_t general_group_bound(std::size_t n, std::size_t m, std::size_t k) {
  if (n < 1 || m < 1) {
    throw Error(ErrorKind::PreconditionViolation, "state counts must be at least 1");
  }
  std::uint64_t base = static_cast<std::uint64_t>(n) * m;
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

}  // namespace comlang
