#pragma once

// Hartnick–Schweitzer quasimorphisms of free groups: maps whose composition
// with every real quasimorphism is again a quasimorphism. Three families:
// replacement (swap two non-overlapping pieces), wobbling (permute the
// exponents of a fixed base word) and local substitution (a sliding-window
// rule).

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bicoarse/word.hpp"

namespace bicoarse {

// Pairwise non-overlapping, individually non-self-overlapping pieces.
class PieceSet {
 public:
  // Throws Error(InvalidPieceSet) naming the first offending piece or pair.
  explicit PieceSet(std::vector<ReducedWord> pieces);

  const std::vector<ReducedWord>& pieces() const noexcept { return pieces_; }

 private:
  std::vector<ReducedWord> pieces_;
};

struct Factor {
  ReducedWord word;
  std::optional<std::size_t> piece;  // index into the piece set, if the factor is a piece
  bool operator==(const Factor&) const = default;
};

// Minimal factorization of v into pieces and piece-free words.
std::vector<Factor> decompose(const ReducedWord& v, const PieceSet& pieces);

class ReplacementRule {
 public:
  // w1, w2 must share their first letter and their last letter, and
  // {w1, w1⁻¹, w2, w2⁻¹} must form a valid PieceSet.
  ReplacementRule(ReducedWord w1, ReducedWord w2);

  const ReducedWord& w1() const noexcept { return w1_; }
  const ReducedWord& w2() const noexcept { return w2_; }
  const PieceSet& pieces() const noexcept { return pieces_; }

 private:
  ReducedWord w1_;
  ReducedWord w2_;
  PieceSet pieces_;
};

ReducedWord replacement_apply(const ReplacementRule& rule, const ReducedWord& g);

// w = u_0 v^{k_1} u_1 ⋯ v^{k_n} u_n: no u_i contains v or v⁻¹, k_i ≠ 0 and
// the inner u_i are nonempty.
struct PowerDecomposition {
  std::vector<ReducedWord> gaps;  // n + 1 entries
  std::vector<long> exponents;    // n entries

  bool operator==(const PowerDecomposition&) const = default;
};

// v must be nonempty, cyclically reduced and not self-overlapping.
void validate_base(const ReducedWord& v);
PowerDecomposition power_decompose(const ReducedWord& w, const ReducedWord& v);
Word reassemble(const PowerDecomposition& d, const ReducedWord& v);

class Wobble {
 public:
  // sigma lists σ on its finite support; it must permute that support.
  Wobble(ReducedWord v, std::map<long, long> sigma);

  const ReducedWord& base() const noexcept { return v_; }
  const std::map<long, long>& sigma() const noexcept { return sigma_; }
  long apply(long k) const;  // σ± on nonzero exponents
  Wobble inverse() const;

 private:
  ReducedWord v_;
  std::map<long, long> sigma_;
};

struct WobbleResult {
  Word raw;
  ReducedWord reduced;
};

WobbleResult wobbling_apply_raw(const Wobble& wob, const ReducedWord& g);
ReducedWord wobbling_apply(const Wobble& wob, const ReducedWord& g);

class LocalRule {
 public:
  // Windows missing from the table map to the identity. Throws
  // Error(AsymmetricRule) unless r(u⁻¹) = r(u)⁻¹ for every window u.
  LocalRule(std::size_t k, std::map<Word, ReducedWord> table);

  std::size_t window() const noexcept { return k_; }
  const ReducedWord& operator()(const Word& window) const;

 private:
  std::size_t k_;
  std::map<Word, ReducedWord> table_;
};

// r(x_1..x_k) r(x_2..x_{k+1}) ⋯ r(x_{n-k+1}..x_n), reduced; identity if n < k.
ReducedWord local_apply(const LocalRule& rule, const ReducedWord& g);

using WordMap = std::function<ReducedWord(const ReducedWord&)>;

// |f(w1 w2) · (f(w1) f(w2))⁻¹|_x, the quantity bounded by the HS criterion
// when w1 w2 is a reduced concatenation.
std::size_t hs_criterion_norm(const WordMap& f, const ReducedWord& w1, const ReducedWord& w2);

}  // namespace bicoarse
