#include "comlang/partial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "comlang/automata.hpp"
#include "comlang/commutative.hpp"
#include "comlang/error.hpp"

namespace comlang {
namespace {

void check_alphabet(const Dfa& d, const Partition& part) {
  if (!(d.alphabet() == part.alphabet())) {
    throw Error(ErrorKind::PartitionAlphabetMismatch,
                "partition over '" + part.alphabet().symbols() + "' used with automaton over '" +
                    d.alphabet().symbols() + "'");
  }
}

Dfa with_start(const Dfa& d, State s) {
  std::vector<State> delta(d.transitions().begin(), d.transitions().end());
  return Dfa(d.alphabet(), d.state_count(), s, d.finals(), std::move(delta));
}

// Language over the full alphabet of words whose block-i projection lies in
// L(proj); foreign letters loop.
Dfa inverse_projection(const Dfa& proj, const Partition& part, std::size_t block) {
  const Alphabet& sigma = part.alphabet();
  const std::vector<Letter>& letters = part.block(block);
  std::vector<State> delta(proj.state_count() * sigma.size());
  for (State q = 0; q < proj.state_count(); ++q) {
    for (Letter x = 0; x < sigma.size(); ++x) delta[q * sigma.size() + x] = q;
    for (std::size_t l = 0; l < letters.size(); ++l) {
      delta[q * sigma.size() + letters[l]] = proj.next(q, static_cast<Letter>(l));
    }
  }
  return Dfa(sigma, proj.state_count(), proj.start(), proj.finals(), std::move(delta));
}

std::string word_text(const Word& w, const Alphabet& sigma) {
  return w.empty() ? std::string("_") : w.str(sigma);
}

// Word over the full alphabet from a word over block i's sub-alphabet.
Word lift(const Word& w, const std::vector<Letter>& block) {
  std::vector<Letter> out;
  for (Letter l : w.letters()) out.push_back(block[l]);
  return Word(std::move(out));
}

}  // namespace

Partition::Partition(const Alphabet& sigma, std::vector<std::vector<Letter>> blocks)
    : alphabet_(sigma), blocks_(std::move(blocks)), block_of_(sigma.size(), SIZE_MAX) {
  if (blocks_.empty()) throw Error(ErrorKind::PartitionAlphabetMismatch, "partition has no blocks");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& b = blocks_[i];
    if (b.empty()) throw Error(ErrorKind::PartitionAlphabetMismatch, "empty partition block");
    std::sort(b.begin(), b.end());
    for (Letter l : b) {
      if (l >= sigma.size()) {
        throw Error(ErrorKind::PartitionAlphabetMismatch, "partition letter out of range");
      }
      if (block_of_[l] != SIZE_MAX) {
        throw Error(ErrorKind::PartitionAlphabetMismatch,
                    std::string("letter '") + sigma.symbol(l) + "' appears in two blocks");
      }
      block_of_[l] = i;
    }
  }
  for (Letter l = 0; l < sigma.size(); ++l) {
    if (block_of_[l] == SIZE_MAX) {
      throw Error(ErrorKind::PartitionAlphabetMismatch,
                  std::string("letter '") + sigma.symbol(l) + "' is in no block");
    }
  }
}

Partition Partition::parse(const Alphabet& sigma, std::string_view text) {
  std::vector<std::vector<Letter>> blocks(1);
  for (char c : text) {
    if (c == ' ') continue;
    if (c == '|') {
      blocks.emplace_back();
      continue;
    }
    auto l = sigma.find(c);
    if (!l) {
      throw Error(ErrorKind::PartitionAlphabetMismatch,
                  std::string("partition letter '") + c + "' is not in the alphabet");
    }
    blocks.back().push_back(*l);
  }
  return Partition(sigma, std::move(blocks));
}

Partition Partition::singletons(const Alphabet& sigma) {
  std::vector<std::vector<Letter>> blocks;
  for (Letter l = 0; l < sigma.size(); ++l) blocks.push_back({l});
  return Partition(sigma, std::move(blocks));
}

Partition Partition::single_block(const Alphabet& sigma) {
  std::vector<Letter> all(sigma.size());
  std::iota(all.begin(), all.end(), Letter{0});
  return Partition(sigma, {all});
}

std::string Partition::str() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out.push_back('|');
    for (Letter l : blocks_[i]) out.push_back(alphabet_.symbol(l));
  }
  return out;
}

std::size_t CanonicalAutomaton::tuple_number(const BlockTuple& t) const {
  if (t.size() != factors.size()) {
    throw Error(ErrorKind::UnreachableState, "tuple length differs from the block count");
  }
  std::size_t n = 0;
  for (std::size_t i = factors.size(); i-- > 0;) {
    if (t[i] >= factors[i].members.size()) {
      throw Error(ErrorKind::UnreachableState,
                  "coordinate " + std::to_string(i) + " outside S_" + std::to_string(i + 1));
    }
    n = n * factors[i].members.size() + t[i];
  }
  return n;
}

BlockTuple CanonicalAutomaton::tuple_at(std::size_t number) const {
  BlockTuple t(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    t[i] = number % factors[i].members.size();
    number /= factors[i].members.size();
  }
  return t;
}

bool is_closed_under(const Dfa& d, const Partition& part) {
  return !closure_witness(d, part).has_value();
}

std::optional<Word> closure_witness(const Dfa& d, const Partition& part) {
  check_alphabet(d, part);
  const Dfa m = minimize(d);
  const std::size_t k = m.letter_count();
  auto access = access_words(m);
  for (State q = 0; q < m.state_count(); ++q) {
    for (Letter x = 0; x < k; ++x) {
      for (Letter y = x + 1; y < k; ++y) {
        if (part.block_of(x) == part.block_of(y)) continue;
        State r1 = m.next(m.next(q, x), y);
        State r2 = m.next(m.next(q, y), x);
        if (r1 == r2) continue;
        auto suffix = distinguishing_word(with_start(m, r1), with_start(m, r2));
        return *access[q] + Word({x, y}) + *suffix;
      }
    }
  }
  return std::nullopt;
}

CanonicalAutomaton canonical_automaton(const Dfa& d, const Partition& part) {
  check_alphabet(d, part);
  const Dfa m = minimize(d);
  const std::size_t n = m.state_count();
  const std::size_t k = part.block_count();
  const std::size_t sigma = m.letter_count();

  CanonicalAutomaton c{part, {}, {}, {}, {}};
  std::vector<std::vector<std::uint32_t>> local(k, std::vector<std::uint32_t>(n, UINT32_MAX));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& letters = part.block(i);
    std::vector<State> members{m.start()};
    local[i][m.start()] = 0;
    for (std::size_t h = 0; h < members.size(); ++h) {
      for (Letter x : letters) {
        State r = m.next(members[h], x);
        if (local[i][r] == UINT32_MAX) {
          local[i][r] = static_cast<std::uint32_t>(members.size());
          members.push_back(r);
        }
      }
    }
    std::vector<State> delta(members.size() * letters.size());
    for (std::size_t h = 0; h < members.size(); ++h) {
      for (std::size_t l = 0; l < letters.size(); ++l) {
        delta[h * letters.size() + l] = local[i][m.next(members[h], letters[l])];
      }
    }
    Alphabet sub = m.alphabet().restrict_to(letters);
    // finals filled in once F is known
    c.factors.push_back({sub, members, Dfa(sub, members.size(), 0, {}, std::move(delta))});
  }

  std::size_t total = 1;
  std::vector<std::size_t> stride(k);
  for (std::size_t i = 0; i < k; ++i) {
    stride[i] = total;
    std::size_t size = c.factors[i].members.size();
    if (total > kDefaultStateGuard / size) {
      throw Error(ErrorKind::StateBlowup, "canonical automaton exceeds the state guard",
                  kDefaultStateGuard);
    }
    total *= size;
  }

  // step[t * sigma + x]: tuple number after letter x from tuple t
  std::vector<State> step(total * sigma);
  for (std::size_t t = 0; t < total; ++t) {
    for (Letter x = 0; x < sigma; ++x) {
      std::size_t i = part.block_of(x);
      std::size_t coord = (t / stride[i]) % c.factors[i].members.size();
      std::size_t next = local[i][m.next(c.factors[i].members[coord], x)];
      step[t * sigma + x] = static_cast<State>(t + (next - coord) * stride[i]);
    }
  }

  // F from the tracking product (q, tuple): q follows the minimal DFA.
  std::vector<char> seen(n * total, 0);
  std::vector<char> is_final_tuple(total, 0);
  std::vector<std::uint64_t> queue{static_cast<std::uint64_t>(m.start()) * total};
  seen[queue[0]] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    State q = static_cast<State>(queue[h] / total);
    std::size_t t = queue[h] % total;
    if (m.is_final(q)) is_final_tuple[t] = 1;
    for (Letter x = 0; x < sigma; ++x) {
      std::uint64_t nxt = static_cast<std::uint64_t>(m.next(q, x)) * total + step[t * sigma + x];
      if (!seen[nxt]) {
        seen[nxt] = 1;
        queue.push_back(nxt);
      }
    }
  }

  std::vector<State> finals;
  for (std::size_t t = 0; t < total; ++t) {
    if (is_final_tuple[t]) {
      finals.push_back(static_cast<State>(t));
      c.finals.push_back(c.tuple_at(t));
    }
  }
  std::sort(c.finals.begin(), c.finals.end());
  c.product = Dfa(m.alphabet(), total, 0, finals, std::move(step));

  c.finals_per_block.assign(k, {});
  for (std::size_t i = 0; i < k; ++i) {
    auto& fi = c.finals_per_block[i];
    for (const auto& t : c.finals) fi.push_back(t[i]);
    std::sort(fi.begin(), fi.end());
    fi.erase(std::unique(fi.begin(), fi.end()), fi.end());
    auto& f = c.factors[i];
    std::vector<State> delta(f.automaton.transitions().begin(), f.automaton.transitions().end());
    std::vector<State> local_finals(fi.begin(), fi.end());
    f.automaton = Dfa(f.alphabet, f.members.size(), 0, std::move(local_finals), std::move(delta));
  }
  return c;
}

Dfa canonical_projection(const Dfa& d, const Partition& part, std::size_t block) {
  if (block >= part.block_count()) {
    throw Error(ErrorKind::PreconditionViolation, "block index out of range");
  }
  if (!is_closed_under(d, part)) {
    throw Error(ErrorKind::NotClosedUnderPartition,
                "language is not closed under " + part.str());
  }
  return canonical_automaton(d, part).factors[block].automaton;
}

Dfa shuffle_of_block_projections(const Dfa& d, const Partition& part) {
  check_alphabet(d, part);
  // Blocks have disjoint alphabets, so the shuffle of the projections is the
  // intersection of their inverse images.
  Dfa out = Dfa::trivial(d.alphabet(), true);
  for (std::size_t i = 0; i < part.block_count(); ++i) {
    Dfa proj = projection(d, part.block(i));
    out = minimize(boolean_product(out, inverse_projection(proj, part, i), BoolOp::Intersection));
  }
  return out;
}

ClassificationReport classify(const Dfa& d, const Partition& part) {
  check_alphabet(d, part);
  const Alphabet& sigma = d.alphabet();
  ClassificationReport r;
  r.partition = part.str();
  const Dfa m = minimize(d);
  r.sc = m.state_count();

  const CanonicalAutomaton c = canonical_automaton(m, part);
  r.canonical_states = c.product.state_count();
  r.canonical_finals = c.finals.size();
  std::vector<Dfa> projections;
  for (std::size_t i = 0; i < part.block_count(); ++i) {
    projections.push_back(projection(m, part.block(i)));
    r.blocks.push_back({c.factors[i].members.size(), projections.back().state_count()});
  }

  auto witness = closure_witness(m, part);
  r.closed = !witness.has_value();
  r.recognizes_l = equivalent(c.product, m);
  if (!r.closed) {
    r.witnesses.emplace_back("notClosed", word_text(*witness, sigma));
    if (auto w = distinguishing_word(c.product, m)) {
      r.witnesses.emplace_back("canonicalDiffers", word_text(*w, sigma));
    }
    return r;
  }
  if (!r.recognizes_l) {
    throw std::logic_error("canonical automaton of a closed language must recognize it");
  }

  r.l1 = c.finals.size() == 1;
  if (!r.l1) {
    r.witnesses.emplace_back("l1", std::to_string(c.finals.size()) + " final tuples");
  }

  std::size_t grid = 1;
  for (const auto& fi : c.finals_per_block) grid *= fi.size();
  r.l2 = grid == c.finals.size();
  auto diff = distinguishing_word(m, shuffle_of_block_projections(m, part));
  if (r.l2 != !diff.has_value()) {
    throw std::logic_error("final-grid and shuffle-of-projections routes disagree on L2");
  }
  if (!r.l2) r.witnesses.emplace_back("l2", word_text(*diff, sigma));

  // Block representatives: breadth-first access words inside each factor.
  std::vector<std::vector<Word>> reps;
  for (std::size_t i = 0; i < part.block_count(); ++i) {
    std::vector<Word> words;
    for (const auto& w : access_words(c.factors[i].automaton)) {
      words.push_back(lift(*w, part.block(i)));
    }
    reps.push_back(std::move(words));
  }

  r.l3 = true;
  for (std::size_t i = 0; i < part.block_count(); ++i) {
    if (r.blocks[i].size_si == r.blocks[i].sc_projection) continue;
    r.l3 = false;
    const Dfa& p = projections[i];
    std::map<State, std::size_t> first;
    for (std::size_t s = 0; s < reps[i].size(); ++s) {
      std::vector<Letter> local;
      for (Letter l : reps[i][s].letters()) {
        local.push_back(static_cast<Letter>(
            std::find(part.block(i).begin(), part.block(i).end(), l) - part.block(i).begin()));
      }
      auto [it, fresh] = first.emplace(p.run(p.start(), local), s);
      if (!fresh) {
        r.witnesses.emplace_back("l3", word_text(reps[i][it->second], sigma) + " ~ " +
                                           word_text(reps[i][s], sigma));
        break;
      }
    }
  }

  r.l4 = r.sc == r.canonical_states;
  if (!r.l4) {
    std::map<State, std::size_t> first;
    for (std::size_t t = 0; t < r.canonical_states; ++t) {
      BlockTuple tuple = c.tuple_at(t);
      Word w;
      for (std::size_t i = 0; i < tuple.size(); ++i) w = w + reps[i][tuple[i]];
      auto [it, fresh] = first.emplace(m.run(m.start(), w.letters()), t);
      if (!fresh) {
        BlockTuple other = c.tuple_at(it->second);
        Word v;
        for (std::size_t i = 0; i < other.size(); ++i) v = v + reps[i][other[i]];
        r.witnesses.emplace_back("l4", word_text(v, sigma) + " ~ " + word_text(w, sigma));
        break;
      }
    }
  }
  return r;
}

Dfa state_language(const CanonicalAutomaton& c, const BlockTuple& tuple) {
  std::size_t number = c.tuple_number(tuple);
  std::vector<State> delta(c.product.transitions().begin(), c.product.transitions().end());
  return minimize(Dfa(c.product.alphabet(), c.product.state_count(), c.product.start(),
                      {static_cast<State>(number)}, std::move(delta)));
}

}  // namespace comlang
