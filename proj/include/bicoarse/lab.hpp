#pragma once

// Probes around the strip K = φ⁻¹([0, 1)) of the homomorphism φ: F_2 → ℝ
// with φ(a) = −1, φ(b) = β: the words u_n = a^⌊nβ⌋ bⁿ, their commutation
// defects, and searches for words that almost commute with them.
//
// β is an exact rational standing in for an irrational slope; finite
// computations agree with the irrational ones as long as ⌊nβ⌋ does.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicoarse/rational.hpp"
#include "bicoarse/word.hpp"

namespace bicoarse {

class Slope {
 public:
  // Stored in lowest terms. Throws Error(InvalidInput) unless p/q > 1.
  Slope(std::int64_t p, std::int64_t q);
  static Slope parse(std::string_view text);

  std::int64_t numerator() const noexcept { return p_; }
  std::int64_t denominator() const noexcept { return q_; }
  Rational value() const { return Rational(p_) / q_; }
  std::int64_t floor_times(std::int64_t n) const;  // ⌊n p / q⌋
  std::string to_string() const;

 private:
  std::int64_t p_;
  std::int64_t q_;
};

inline const Slope kDefaultSlope{8, 5};

ReducedWord u_word(std::int64_t n, const Slope& slope);
Rational phi(const ReducedWord& w, const Slope& slope);
bool in_strip(const ReducedWord& w, const Slope& slope);

// d_x(uW, Wu).
std::size_t commutation_defect(const ReducedWord& u, const ReducedWord& w);

struct PowerDistance {
  long k;
  std::size_t distance;
};

// argmin over |k| <= k_max of d_x(W, u^k); ties go to the smallest |k|, then k > 0.
PowerDistance distance_to_powers(const ReducedWord& w, const ReducedWord& u, long k_max);

struct SearchRecord {
  ReducedWord word;
  std::size_t defect;
  PowerDistance nearest_power;
};

struct SearchOptions {
  std::size_t defect_bound = 0;
  std::size_t length_cap = 6;
  // Used only when length_cap exceeds kExhaustiveCap.
  std::size_t beam_width = 2000;
};

inline constexpr std::size_t kExhaustiveCap = 12;

struct SearchResult {
  std::vector<SearchRecord> records;  // shortlex order
  bool exhaustive = true;
  std::size_t beam_width = 0;
};

// Reduced W over {a, b} with |W| <= cap and d_x(uW, Wu) <= D.
SearchResult almost_commuting_search(const ReducedWord& u, const SearchOptions& options);

}  // namespace bicoarse
