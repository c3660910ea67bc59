#include "comlang/alphabet.hpp"

#include <algorithm>

#include "comlang/error.hpp"

namespace comlang {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::StateBlowup: return "StateBlowup";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::LetterNotInAlphabet: return "LetterNotInAlphabet";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::EmptyProjectionAlphabet: return "EmptyProjectionAlphabet";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::PartitionAlphabetMismatch: return "PartitionAlphabetMismatch";
    case ErrorKind::NotClosedUnderPartition: return "NotClosedUnderPartition";
    case ErrorKind::UnreachableState: return "UnreachableState";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotDistinctPrimes: return "NotDistinctPrimes";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredLetter: return "UndeclaredLetter";
    case ErrorKind::InvalidAutomaton: return "InvalidAutomaton";
    case ErrorKind::InvalidFormat: return "InvalidFormat";
  }
  return "Unknown";
}

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
  if (letters_.empty()) {
    throw Error(ErrorKind::InvalidAutomaton, "alphabet must be nonempty");
  }
  std::string sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::InvalidAutomaton,
                "alphabet has duplicate letters: " + letters_);
  }
}

std::optional<Letter> Alphabet::find(char c) const noexcept {
  auto pos = letters_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

Letter Alphabet::index_of(char c) const {
  if (auto l = find(c)) return *l;
  throw Error(ErrorKind::LetterNotInAlphabet,
              std::string("letter '") + c + "' is not in alphabet \"" +
                  letters_ + "\"");
}

Alphabet Alphabet::restrict_to(std::span<const Letter> keep) const {
  std::vector<Letter> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::string out;
  for (Letter l : sorted) out.push_back(symbol(l));
  return Alphabet(out);
}

Word Word::parse(const Alphabet& sigma, std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char c : text) letters.push_back(sigma.index_of(c));
  return Word(std::move(letters));
}

Word Word::from_parikh(std::span<const std::size_t> counts) {
  std::vector<Letter> letters;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    letters.insert(letters.end(), counts[j], static_cast<Letter>(j));
  }
  return Word(std::move(letters));
}

std::vector<std::size_t> Word::parikh(std::size_t k) const {
  std::vector<std::size_t> counts(k, 0);
  for (Letter l : letters_) ++counts.at(l);
  return counts;
}

std::string Word::str(const Alphabet& sigma) const {
  std::string out;
  for (Letter l : letters_) out.push_back(sigma.symbol(l));
  return out;
}

Word Word::operator+(const Word& rhs) const {
  std::vector<Letter> letters = letters_;
  letters.insert(letters.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(letters));
}

}  // namespace comlang
