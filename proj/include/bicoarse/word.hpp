#pragma once

// Free-group words over a ranked alphabet. Lowercase letters are the
// generators, uppercase letters their inverses; the identity prints as "1".

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "bicoarse/error.hpp"

namespace bicoarse {

class Alphabet {
 public:
  static constexpr int kMaxRank = 26;

  explicit Alphabet(int rank = 2);

  int rank() const noexcept { return rank_; }
  bool operator==(const Alphabet&) const = default;

 private:
  int rank_;
};

// A generator or its inverse. Ordered a < A < b < B < ...
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(int generator, int sign)
      : code_(static_cast<std::int8_t>(sign > 0 ? generator + 1 : -(generator + 1))) {}

  static Letter from_char(char c, const Alphabet& alphabet, std::size_t position = 0);

  constexpr int generator() const noexcept { return (code_ > 0 ? code_ : -code_) - 1; }
  constexpr int sign() const noexcept { return code_ > 0 ? 1 : -1; }
  constexpr Letter inverse() const noexcept { return Letter(generator(), -sign()); }
  constexpr bool is_inverse_of(Letter other) const noexcept { return code_ == -other.code_; }
  char to_char() const noexcept;

  constexpr int order_key() const noexcept { return 2 * generator() + (sign() < 0 ? 1 : 0); }
  constexpr bool operator==(const Letter&) const = default;
  constexpr std::strong_ordering operator<=>(const Letter& other) const noexcept {
    return order_key() <=> other.order_key();
  }

 private:
  std::int8_t code_ = 1;
};

// A possibly unreduced word. Ordered shortlex.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter front() const { return letters_.front(); }
  Letter back() const { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  // Highest generator index used, or -1 for the empty word.
  int max_generator() const noexcept;

  Word slice(std::size_t pos, std::size_t len) const;

  bool operator==(const Word&) const = default;
  std::strong_ordering operator<=>(const Word& other) const noexcept;

 private:
  std::vector<Letter> letters_;
};

// A freely reduced word; the only way to build one is through reduce() or
// the checked factory below, so the invariant always holds.
class ReducedWord {
 public:
  ReducedWord() = default;

  // Throws Error(InvalidInput) if the letters are not freely reduced.
  static ReducedWord from_reduced(std::vector<Letter> letters);

  const Word& word() const noexcept { return word_; }
  operator const Word&() const noexcept { return word_; }  // NOLINT(google-explicit-constructor)

  std::size_t size() const noexcept { return word_.size(); }
  bool empty() const noexcept { return word_.empty(); }
  Letter operator[](std::size_t i) const { return word_[i]; }
  auto begin() const noexcept { return word_.begin(); }
  auto end() const noexcept { return word_.end(); }

  bool operator==(const ReducedWord&) const = default;
  std::strong_ordering operator<=>(const ReducedWord& other) const noexcept {
    return word_ <=> other.word_;
  }

 private:
  friend ReducedWord reduce(const Word& w);
  explicit ReducedWord(Word w) : word_(std::move(w)) {}
  Word word_;
};

struct Syllable {
  int generator;
  long exponent;
  bool operator==(const Syllable&) const = default;
};

// w = conjugator · core · conjugator⁻¹ with core cyclically reduced.
struct CyclicDecomposition {
  ReducedWord conjugator;
  ReducedWord core;
};

// Lowercase = generator, uppercase = inverse. "" and "1" both denote the identity.
Word parse(std::string_view text, const Alphabet& alphabet);
ReducedWord parse_reduced(std::string_view text, const Alphabet& alphabet);
std::string to_string(const Word& w);

ReducedWord reduce(const Word& w);
bool is_reduced(const Word& w) noexcept;
Word invert(const Word& w);
ReducedWord invert(const ReducedWord& w);
Word concat(const Word& u, const Word& v);
// Reduced product u·v; only the junction is cancelled.
ReducedWord multiply(const ReducedWord& u, const ReducedWord& v);
ReducedWord multiply(std::initializer_list<ReducedWord> factors);
ReducedWord commutator(const ReducedWord& g, const ReducedWord& h);

bool is_cyclically_reduced(const ReducedWord& w) noexcept;
CyclicDecomposition cyclic_decomposition(const ReducedWord& w);
ReducedWord power(const ReducedWord& w, long n);

// C_w(g): start positions of (possibly overlapping) copies of w in g.
std::size_t occurrences(const Word& g, const Word& w);
// c_w(g): maximal number of pairwise disjoint copies of w in g.
std::size_t non_overlapping_occurrences(const Word& g, const Word& w);
// Start positions of every occurrence of w in g, ascending.
std::vector<std::size_t> occurrence_positions(const Word& g, const Word& w);

// Subwords of one another, or a nonempty prefix of one equals a suffix of the other.
bool overlaps(const Word& w1, const Word& w2);
// Has a nonempty proper border.
bool is_self_overlapping(const Word& w);
// Longest proper border length for every prefix (classic failure function).
std::vector<std::size_t> border_array(const Word& w);

std::vector<Syllable> syllables(const Word& w);
Word from_syllables(const std::vector<Syllable>& syllables);
long exponent_sum(const Word& w, int generator) noexcept;

// All reduced words of length <= radius, shortlex order.
std::vector<ReducedWord> ball(const Alphabet& alphabet, std::size_t radius);
std::size_t ball_size(const Alphabet& alphabet, std::size_t radius) noexcept;

}  // namespace bicoarse

template <>
struct std::hash<bicoarse::Word> {
  std::size_t operator()(const bicoarse::Word& w) const noexcept;
};

template <>
struct std::hash<bicoarse::ReducedWord> {
  std::size_t operator()(const bicoarse::ReducedWord& w) const noexcept {
    return std::hash<bicoarse::Word>{}(w.word());
  }
};
