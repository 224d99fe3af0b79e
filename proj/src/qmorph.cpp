#include "bicoarse/qmorph.hpp"

#include <algorithm>

#include "bicoarse/cancel.hpp"

namespace bicoarse {

Rational Rolli::operator()(long k) const {
  if (k == 0) return 0;
  auto it = alpha.find(k > 0 ? k : -k);
  if (it == alpha.end()) return 0;
  return k > 0 ? it->second : Rational(-it->second);
}

namespace {

void require_pattern(const ReducedWord& pattern) {
  if (pattern.empty()) throw Error(ErrorKind::EmptyPattern, "Brooks pattern must be nonempty");
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Quasimorphism Quasimorphism::brooks(ReducedWord pattern) {
  require_pattern(pattern);
  return Quasimorphism(Brooks{std::move(pattern)});
}

Quasimorphism Quasimorphism::brooks_non_overlap(ReducedWord pattern) {
  require_pattern(pattern);
  return Quasimorphism(BrooksNonOverlap{std::move(pattern)});
}

Quasimorphism Quasimorphism::rolli(const std::map<long, Rational>& table) {
  Rolli r;
  for (const auto& [k, value] : table) {
    if (k == 0) {
      if (value != 0) throw Error(ErrorKind::InvalidInput, "Rolli table must vanish at 0");
      continue;
    }
    const long key = k > 0 ? k : -k;
    const Rational positive = k > 0 ? value : Rational(-value);
    auto [it, inserted] = r.alpha.emplace(key, positive);
    if (!inserted && it->second != positive) {
      throw Error(ErrorKind::InvalidInput, "Rolli table is not odd at k = " + std::to_string(key));
    }
  }
  return Quasimorphism(std::move(r));
}

Quasimorphism Quasimorphism::exponent_hom(std::vector<Rational> coefficients) {
  if (coefficients.empty() || coefficients.size() > static_cast<std::size_t>(Alphabet::kMaxRank)) {
    throw Error(ErrorKind::InvalidInput, "homomorphism needs 1..26 coefficients");
  }
  return Quasimorphism(ExponentHom{std::move(coefficients)});
}

int Quasimorphism::min_rank() const noexcept {
  return std::visit(Overloaded{
                        [](const Brooks& b) { return b.pattern.word().max_generator() + 1; },
                        [](const BrooksNonOverlap& b) { return b.pattern.word().max_generator() + 1; },
                        [](const Rolli&) { return 1; },
                        [](const ExponentHom& h) { return static_cast<int>(h.coefficients.size()); },
                    },
                    v_);
}

Rational evaluate(const Quasimorphism& q, const ReducedWord& g) {
  return std::visit(
      Overloaded{
          [&](const Brooks& b) {
            return Rational(static_cast<long>(occurrences(g, b.pattern))) -
                   static_cast<long>(occurrences(g, invert(b.pattern.word())));
          },
          [&](const BrooksNonOverlap& b) {
            return Rational(static_cast<long>(non_overlapping_occurrences(g, b.pattern))) -
                   static_cast<long>(non_overlapping_occurrences(g, invert(b.pattern.word())));
          },
          [&](const Rolli& r) {
            Rational sum = 0;
            for (const Syllable& s : syllables(g)) sum += r(s.exponent);
            return sum;
          },
          [&](const ExponentHom& h) {
            Rational sum = 0;
            for (std::size_t s = 0; s < h.coefficients.size(); ++s) {
              sum += h.coefficients[s] * exponent_sum(g, static_cast<int>(s));
            }
            return sum;
          },
      },
      q.variant());
}

namespace {

std::vector<ReducedWord> checked_ball(const Alphabet& alphabet, std::size_t radius) {
  if (ball_size(alphabet, radius) > kMaxBallSize) {
    throw Error(ErrorKind::BallTooLarge, "ball of radius " + std::to_string(radius) + " has more than " +
                                             std::to_string(kMaxBallSize) + " elements");
  }
  return ball(alphabet, radius);
}

}  // namespace

DefectEstimate defect_on_ball(const Quasimorphism& q, std::size_t radius, const Alphabet& alphabet) {
  const auto elements = checked_ball(alphabet, radius);
  std::vector<Rational> values;
  values.reserve(elements.size());
  for (const auto& g : elements) values.push_back(evaluate(q, g));

  DefectEstimate best{0, radius, {}, {}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const Rational dev = abs(evaluate(q, multiply(elements[i], elements[j])) - values[i] - values[j]);
      if (dev > best.value) best = DefectEstimate{dev, radius, elements[i], elements[j]};
    }
  }
  return best;
}

Homogenization homogenize(const Quasimorphism& q, const ReducedWord& g, long n, std::optional<Rational> defect) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "homogenization needs n >= 1");
  const Rational estimate = evaluate(q, power(g, n)) / n;
  if (std::holds_alternative<ExponentHom>(q.variant())) return {estimate, 0};
  const Rational d = defect ? *defect : defect_on_ball(q, 4, Alphabet(std::max(2, q.min_rank()))).value;
  return {estimate, d / n};
}

std::vector<Rational> controlledness_modulus(const Quasimorphism& q, std::size_t radius, const Alphabet& alphabet) {
  const auto elements = checked_ball(alphabet, radius);
  std::vector<Rational> values;
  values.reserve(elements.size());
  for (const auto& g : elements) values.push_back(evaluate(q, g));

  std::vector<Rational> by_distance(2 * radius + 1, Rational(0));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      const std::size_t d = cancellation_distance(elements[i], elements[j]);
      const Rational gap = bicoarse::abs(Rational(values[i] - values[j]));
      if (gap > by_distance[d]) by_distance[d] = gap;
    }
  }
  std::vector<Rational> rho(radius + 1, Rational(0));
  for (std::size_t r = 1; r <= radius; ++r) rho[r] = std::max(rho[r - 1], by_distance[r]);
  return rho;
}

}  // namespace bicoarse
