#include "comlang/shuffle.hpp"

#include <numeric>
#include <unordered_map>

#include "comlang/error.hpp"

namespace comlang {
namespace {

Nfa with_self_loops(const Dfa& d) {
  Nfa n = Nfa::from_dfa(d);
  for (State q = 0; q < d.state_count(); ++q) {
    for (Letter a = 0; a < d.letter_count(); ++a) n.add_edge(q, a, q);
  }
  return n;
}

Nfa with_skips(const Dfa& d) {
  Nfa n = Nfa::from_dfa(d);
  for (State q = 0; q < d.state_count(); ++q) {
    for (Letter a = 0; a < d.letter_count(); ++a) n.add_edge(q, std::nullopt, d.next(q, a));
  }
  return n;
}

CommutativeProfile require_profile(const Dfa& d, const char* which) {
  try {
    return profile(d);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotCommutative) throw;
    throw Error(ErrorKind::HypothesisViolation,
                std::string(which) + " input is not commutative");
  }
}

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
  if (x != 0 && y > UINT64_MAX / x) return UINT64_MAX;
  return x * y;
}

}  // namespace

std::size_t gcd(std::size_t a, std::size_t b) { return std::gcd(a, b); }
std::size_t lcm(std::size_t a, std::size_t b) { return std::lcm(a, b); }

Dfa shuffle_nfa(const Dfa& a, const Dfa& b, const DeterminizeOptions& options) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorKind::AlphabetMismatch, "shuffle operands use different alphabets");
  }
  const std::size_t k = a.letter_count();
  std::unordered_map<std::uint64_t, State> number;
  std::vector<std::pair<State, State>> pairs;
  auto intern = [&](State p, State q) {
    std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
    auto [it, fresh] = number.emplace(key, static_cast<State>(pairs.size()));
    if (fresh) pairs.emplace_back(p, q);
    return it->second;
  };
  intern(a.start(), b.start());
  struct Pending {
    State from;
    Letter label;
    State to;
  };
  std::vector<Pending> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [p, q] = pairs[i];
    for (Letter x = 0; x < k; ++x) {
      edges.push_back({static_cast<State>(i), x, intern(a.next(p, x), q)});
      edges.push_back({static_cast<State>(i), x, intern(p, b.next(q, x))});
    }
  }
  Nfa n(a.alphabet(), pairs.size());
  for (const auto& e : edges) n.add_edge(e.from, e.label, e.to);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (a.is_final(pairs[i].first) && b.is_final(pairs[i].second)) n.add_final(static_cast<State>(i));
  }
  n.add_start(0);
  return minimize(determinize(n, options));
}

std::vector<RhoBound> shuffle_rho_bounds(const CommutativeProfile& u,
                                         const CommutativeProfile& v) {
  std::vector<RhoBound> out;
  for (std::size_t j = 0; j < u.letter_count(); ++j) {
    std::size_t l = lcm(u.period[j], v.period[j]);
    out.push_back({u.index[j] + v.index[j] + l - 1, l});
  }
  return out;
}

Dfa shuffle_commutative(const Dfa& a, const Dfa& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw Error(ErrorKind::AlphabetMismatch, "shuffle operands use different alphabets");
  }
  const CommutativeProfile pu = profile(a);
  const CommutativeProfile pv = profile(b);
  const std::size_t k = pu.letter_count();
  const std::vector<RhoBound> bounds = shuffle_rho_bounds(pu, pv);

  // reach[j][m] marks every (class in U, class in V) pair obtainable from a
  // split x + y = m of the count of letter j.
  std::vector<std::vector<std::vector<char>>> reach(k);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t nu = pu.size(j);
    const std::size_t nv = pv.size(j);
    reach[j].assign(bounds[j].size(), std::vector<char>(nu * nv, 0));
    for (std::size_t m = 0; m < bounds[j].size(); ++m) {
      for (std::size_t x = 0; x <= m; ++x) {
        reach[j][m][pu.class_of(j, x) * nv + pv.class_of(j, m - x)] = 1;
      }
    }
  }

  std::vector<std::vector<std::size_t>> final_pairs;  // per (f, g): pair code per letter
  for (const auto& f : pu.final_parikh) {
    for (const auto& g : pv.final_parikh) {
      std::vector<std::size_t> code(k);
      for (std::size_t j = 0; j < k; ++j) code[j] = f[j] * pv.size(j) + g[j];
      final_pairs.push_back(std::move(code));
    }
  }

  auto oracle = [&](std::span<const std::size_t> m) {
    for (const auto& code : final_pairs) {
      bool all = true;
      for (std::size_t j = 0; j < k && all; ++j) all = reach[j][m[j]][code[j]] != 0;
      if (all) return true;
    }
    return false;
  };
  return from_parikh_oracle(pu.alphabet, oracle, bounds);
}

Dfa upward_closure(const Dfa& d, const DeterminizeOptions& options) {
  return minimize(determinize(with_self_loops(d), options));
}

Dfa downward_closure(const Dfa& d, const DeterminizeOptions& options) {
  return minimize(determinize(with_skips(d), options));
}

Dfa upward_interior(const Dfa& d, const DeterminizeOptions& options) {
  return minimize(complement(downward_closure(complement(d), options)));
}

Dfa downward_interior(const Dfa& d, const DeterminizeOptions& options) {
  return minimize(complement(upward_closure(complement(d), options)));
}

std::string_view to_string(BoundOp op) {
  switch (op) {
    case BoundOp::Shuffle: return "shuffle";
    case BoundOp::ShuffleIndexPeriod: return "shuffle-index-period";
    case BoundOp::UpwardClosure: return "up";
    case BoundOp::DownwardClosure: return "down";
    case BoundOp::UpwardInterior: return "up-int";
    case BoundOp::DownwardInterior: return "down-int";
    case BoundOp::Projection: return "projection";
    case BoundOp::Union: return "union";
    case BoundOp::Intersection: return "intersection";
  }
  return "unknown";
}

std::optional<BoundOp> parse_bound_op(std::string_view name) {
  for (BoundOp op : {BoundOp::Shuffle, BoundOp::ShuffleIndexPeriod, BoundOp::UpwardClosure,
                     BoundOp::DownwardClosure, BoundOp::UpwardInterior,
                     BoundOp::DownwardInterior, BoundOp::Projection, BoundOp::Union,
                     BoundOp::Intersection}) {
    if (to_string(op) == name) return op;
  }
  return std::nullopt;
}

BoundReport verify_bound(BoundOp op, const Dfa& a, const Dfa* b, std::span<const Letter> keep) {
  const bool binary = op == BoundOp::Shuffle || op == BoundOp::ShuffleIndexPeriod ||
                      op == BoundOp::Union || op == BoundOp::Intersection;
  if (binary && b == nullptr) {
    throw Error(ErrorKind::PreconditionViolation,
                std::string(to_string(op)) + " needs two operands");
  }
  BoundReport r;
  r.operation = std::string(to_string(op));
  r.profile_a = require_profile(a, "first");
  r.n = minimize(a).state_count();
  if (binary) {
    if (!(a.alphabet() == b->alphabet())) {
      throw Error(ErrorKind::AlphabetMismatch, "operands use different alphabets");
    }
    r.profile_b = require_profile(*b, "second");
    r.m = minimize(*b).state_count();
  }
  const std::size_t k = a.letter_count();

  Dfa result;
  switch (op) {
    case BoundOp::Shuffle: {
      if (r.n != r.profile_a.product_size() || *r.m != r.profile_b->product_size()) {
        throw Error(ErrorKind::HypothesisViolation,
                    "the 2nm shuffle bound needs product-form inputs");
      }
      result = shuffle_commutative(a, *b);
      if (k > 1) {
        r.bound = 2ull * r.n * *r.m;
        r.formula = "2nm";
      } else {
        r.bound = static_cast<std::uint64_t>(r.n) * *r.m;
        r.formula = "nm";
      }
      break;
    }
    case BoundOp::ShuffleIndexPeriod: {
      result = shuffle_commutative(a, *b);
      std::uint64_t bound = 1;
      for (std::size_t j = 0; j < k; ++j) {
        std::size_t l = lcm(r.profile_a.period[j], r.profile_b->period[j]);
        bound = saturating_mul(bound, r.profile_a.index[j] + r.profile_b->index[j] + 2 * l - 1);
      }
      r.bound = bound;
      r.formula = "prod(i_j+j_j+2lcm(p_j,q_j)-1)";
      break;
    }
    case BoundOp::UpwardClosure:
    case BoundOp::DownwardClosure:
    case BoundOp::UpwardInterior:
    case BoundOp::DownwardInterior: {
      if (op == BoundOp::UpwardClosure) result = upward_closure(a);
      if (op == BoundOp::DownwardClosure) result = downward_closure(a);
      if (op == BoundOp::UpwardInterior) result = upward_interior(a);
      if (op == BoundOp::DownwardInterior) result = downward_interior(a);
      r.bound = r.profile_a.product_size();
      r.formula = "prod(i_j+p_j)";
      break;
    }
    case BoundOp::Projection: {
      result = projection(a, keep);
      r.bound = r.n;
      r.formula = "n";
      break;
    }
    case BoundOp::Union:
    case BoundOp::Intersection: {
      result = minimize(boolean_product(
          a, *b, op == BoundOp::Union ? BoolOp::Union : BoolOp::Intersection));
      r.bound = static_cast<std::uint64_t>(r.n) * *r.m;
      r.formula = "nm";
      break;
    }
  }
  r.measured = minimize(result).state_count();
  r.slack = static_cast<std::int64_t>(r.bound) - static_cast<std::int64_t>(r.measured);
  return r;
}

std::pair<Dfa, Dfa> gen_coprime_pair(std::size_t p, std::size_t q, const Alphabet& sigma) {
  if (p < 2 || q < 2) {
    throw Error(ErrorKind::PreconditionViolation, "p and q must be at least 2");
  }
  if (gcd(p, q) != 1) {
    throw Error(ErrorKind::NotCoprime,
                std::to_string(p) + " and " + std::to_string(q) + " are not coprime");
  }
  std::vector<UnaryLang> us;
  std::vector<UnaryLang> vs;
  for (Letter j = 0; j < sigma.size(); ++j) {
    us.push_back(UnaryLang::arithmetic(j, p - 1, p));
    vs.push_back(UnaryLang::arithmetic(j, q - 1, q));
  }
  return {shuffle_unary_family(sigma, us), shuffle_unary_family(sigma, vs)};
}

std::pair<Dfa, Dfa> gen_remark5(std::size_t p, std::size_t q) {
  if (p <= 11 || q <= 11 || gcd(p, q) != 1) {
    throw Error(ErrorKind::PreconditionViolation,
                "the family needs coprime p and q, both greater than 11");
  }
  const Alphabet ab("ab");
  auto term = [&](UnaryLang x, UnaryLang y) {
    std::vector<UnaryLang> parts{std::move(x), std::move(y)};
    return shuffle_unary_family(ab, parts);
  };
  auto join = [](const Dfa& x, const Dfa& y) {
    return minimize(boolean_product(x, y, BoolOp::Union));
  };
  // U = a & b^{p-1}(b^p)^*  |  a^{p-1}(a^p)^* & b b^{p-1}(b^p)^*
  Dfa u = join(term(UnaryLang::single(0, 1), UnaryLang::arithmetic(1, p - 1, p)),
               term(UnaryLang::arithmetic(0, p - 1, p), UnaryLang::arithmetic(1, p, p)));
  // V = b^{q-1}(b^q)^*  |  a^{q-1}(a^q)^* & bb b^{q-1}(b^q)^*
  Dfa v = join(term(UnaryLang::single(0, 0), UnaryLang::arithmetic(1, q - 1, q)),
               term(UnaryLang::arithmetic(0, q - 1, q), UnaryLang::arithmetic(1, q + 1, q)));
  return {u, v};
}

}  // namespace comlang
