#pragma once

// Real-valued quasimorphisms on free groups, evaluated exactly.
//
//   Brooks            φ_w(g) = C_w(g) − C_{w⁻¹}(g)   (overlapping counts)
//   BrooksNonOverlap  same with maximal disjoint counts c_w
//   Rolli             Σ α(k_i) over the syllables s_i^{k_i} of g, α odd
//   ExponentHom       Σ coeff_s · (exponent sum of s in g)
//
// Defects over a finite ball are lower bounds for the true defect.

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "bicoarse/rational.hpp"
#include "bicoarse/word.hpp"

namespace bicoarse {

struct Brooks {
  ReducedWord pattern;
};

struct BrooksNonOverlap {
  ReducedWord pattern;
};

struct Rolli {
  // Positive exponents only; α(−k) = −α(k) and α vanishes off the support.
  std::map<long, Rational> alpha;

  Rational operator()(long k) const;
};

struct ExponentHom {
  std::vector<Rational> coefficients;  // one per generator
};

class Quasimorphism {
 public:
  using Variant = std::variant<Brooks, BrooksNonOverlap, Rolli, ExponentHom>;

  static Quasimorphism brooks(ReducedWord pattern);
  static Quasimorphism brooks_non_overlap(ReducedWord pattern);
  // Entries may use either sign of k; they must agree with oddness.
  static Quasimorphism rolli(const std::map<long, Rational>& table);
  static Quasimorphism exponent_hom(std::vector<Rational> coefficients);

  const Variant& variant() const noexcept { return v_; }
  // Smallest alphabet on which the quasimorphism is meaningful.
  int min_rank() const noexcept;

 private:
  explicit Quasimorphism(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

Rational evaluate(const Quasimorphism& q, const ReducedWord& g);

struct DefectEstimate {
  Rational value;
  std::size_t radius = 0;
  ReducedWord g;
  ReducedWord h;
};

inline constexpr std::size_t kMaxBallSize = 5000;

// max |φ(gh) − φ(g) − φ(h)| over the reduced ball; shortlex-least witness.
// Throws Error(BallTooLarge) above kMaxBallSize elements.
DefectEstimate defect_on_ball(const Quasimorphism& q, std::size_t radius, const Alphabet& alphabet = Alphabet(2));

struct Homogenization {
  Rational estimate;     // φ(gⁿ)/n
  Rational error_bound;  // D/n
};

// With no defect supplied, D is the radius-4 ball defect.
Homogenization homogenize(const Quasimorphism& q, const ReducedWord& g, long n,
                          std::optional<Rational> defect = std::nullopt);

// ρ(r) = max |φ(g) − φ(h)| over ball pairs with d_x(g, h) <= r, r = 0..radius.
std::vector<Rational> controlledness_modulus(const Quasimorphism& q, std::size_t radius,
                                             const Alphabet& alphabet = Alphabet(2));

}  // namespace bicoarse
