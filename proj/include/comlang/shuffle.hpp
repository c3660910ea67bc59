#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"

namespace comlang {

/// Generic shuffle: pair automaton where each letter advances either side,
/// determinized and minimized. Works for arbitrary regular inputs.
Dfa shuffle_nfa(const Dfa& a, const Dfa& b, const DeterminizeOptions& options = {});

/// Shuffle of two commutative languages through their Parikh images. The
/// result is materialized over the per-letter rho bounds
/// (i + j + lcm(p, q) - 1, lcm(p, q)) and minimized. Throws NotCommutative.
Dfa shuffle_commutative(const Dfa& a, const Dfa& b);

/// Per-letter rho bounds used by `shuffle_commutative`.
std::vector<RhoBound> shuffle_rho_bounds(const CommutativeProfile& u,
                                         const CommutativeProfile& v);

Dfa upward_closure(const Dfa& d, const DeterminizeOptions& options = {});
Dfa downward_closure(const Dfa& d, const DeterminizeOptions& options = {});
/// Largest upward-closed subset: complement of the downward closure of the
/// complement.
Dfa upward_interior(const Dfa& d, const DeterminizeOptions& options = {});
/// Largest downward-closed subset: complement of the upward closure of the
/// complement.
Dfa downward_interior(const Dfa& d, const DeterminizeOptions& options = {});

enum class BoundOp {
  Shuffle,              // <= 2nm for |Sigma| > 1, nm for unary; product-form inputs
  ShuffleIndexPeriod,   // <= prod (i + j + 2 lcm(p, q) - 1)
  UpwardClosure,        // <= prod (i + p)
  DownwardClosure,
  UpwardInterior,
  DownwardInterior,
  Projection,           // <= n
  Union,                // <= nm
  Intersection,
};

std::string_view to_string(BoundOp op);
std::optional<BoundOp> parse_bound_op(std::string_view name);

struct BoundReport {
  std::string operation;
  std::size_t n = 0;
  std::optional<std::size_t> m;
  CommutativeProfile profile_a;
  std::optional<CommutativeProfile> profile_b;
  std::size_t measured = 0;
  std::uint64_t bound = 0;
  std::int64_t slack = 0;
  std::string formula;
};

/// Runs the operation, measures the state complexity of the result and
/// evaluates the applicable bound. Throws HypothesisViolation when an input
/// is not commutative, or not product-form where the bound requires it.
BoundReport verify_bound(BoundOp op, const Dfa& a, const Dfa* b = nullptr,
                         std::span<const Letter> keep = {});

/// U = shuffle_j a_j^{p-1}(a_j^p)^*, V likewise with q. Throws NotCoprime,
/// or PreconditionViolation for p or q below 2.
std::pair<Dfa, Dfa> gen_coprime_pair(std::size_t p, std::size_t q, const Alphabet& sigma);

/// The binary family whose shuffle needs more than nm states. Requires
/// coprime p, q > 11; throws PreconditionViolation otherwise.
std::pair<Dfa, Dfa> gen_remark5(std::size_t p, std::size_t q);

std::size_t gcd(std::size_t a, std::size_t b);
std::size_t lcm(std::size_t a, std::size_t b);

}  // namespace comlang
