#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace comlang {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// Ordered set of single-character letters. The order fixes the coordinate
/// order of every Parikh, index and period vector over this alphabet.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::string_view letters);

  std::size_t size() const noexcept { return letters_.size(); }
  char symbol(Letter l) const { return letters_.at(l); }
  const std::string& symbols() const noexcept { return letters_; }

  std::optional<Letter> find(char c) const noexcept;
  /// Throws LetterNotInAlphabet.
  Letter index_of(char c) const;
  bool contains(char c) const noexcept { return find(c).has_value(); }

  /// Sub-alphabet in this alphabet's order.
  Alphabet restrict_to(std::span<const Letter> keep) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string letters_;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  /// Throws LetterNotInAlphabet for symbols outside `sigma`.
  static Word parse(const Alphabet& sigma, std::string_view text);
  /// a_1^{counts[0]} a_2^{counts[1]} ... in alphabet order.
  static Word from_parikh(std::span<const std::size_t> counts);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  std::vector<std::size_t> parikh(std::size_t k) const;
  std::string str(const Alphabet& sigma) const;

  Word operator+(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace comlang
