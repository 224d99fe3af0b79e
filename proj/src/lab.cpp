#include "bicoarse/lab.hpp"

#include <algorithm>
#include <numeric>

#include "bicoarse/cancel.hpp"

namespace bicoarse {

Slope::Slope(std::int64_t p, std::int64_t q) {
  if (q == 0) throw Error(ErrorKind::InvalidInput, "slope denominator is zero");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
  if (p_ <= q_) throw Error(ErrorKind::InvalidInput, "slope must exceed 1, got " + to_string());
}

Slope Slope::parse(std::string_view text) {
  const Rational r = parse_rational(text);
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (num > BigInt(INT64_MAX) || den > BigInt(INT64_MAX)) throw Error(ErrorKind::InvalidInput, "slope too large");
  return Slope(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::int64_t Slope::floor_times(std::int64_t n) const {
  const __int128 prod = static_cast<__int128>(n) * p_;
  __int128 f = prod / q_;
  if (prod % q_ != 0 && prod < 0) --f;
  return static_cast<std::int64_t>(f);
}

std::string Slope::to_string() const {
  return std::to_string(p_) + "/" + std::to_string(q_);
}

ReducedWord u_word(std::int64_t n, const Slope& slope) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "u_n needs n >= 1");
  std::vector<Letter> letters(static_cast<std::size_t>(slope.floor_times(n)), Letter(0, 1));
  letters.insert(letters.end(), static_cast<std::size_t>(n), Letter(1, 1));
  return ReducedWord::from_reduced(std::move(letters));
}

Rational phi(const ReducedWord& w, const Slope& slope) {
  if (w.word().max_generator() > 1) throw Error(ErrorKind::RankExceeded, "phi is defined on F_2");
  return Rational(-exponent_sum(w, 0)) + slope.value() * exponent_sum(w, 1);
}

bool in_strip(const ReducedWord& w, const Slope& slope) {
  const Rational v = phi(w, slope);
  return v >= 0 && v < 1;
}

std::size_t commutation_defect(const ReducedWord& u, const ReducedWord& w) {
  return cancellation_distance(multiply(u, w), multiply(w, u));
}

PowerDistance distance_to_powers(const ReducedWord& w, const ReducedWord& u, long k_max) {
  PowerDistance best{0, cancellation_distance(w, ReducedWord{})};
  for (long m = 1; m <= k_max; ++m) {
    for (long k : {m, -m}) {
      const std::size_t d = cancellation_distance(w, power(u, k));
      if (d < best.distance) best = {k, d};
    }
  }
  return best;
}

SearchResult almost_commuting_search(const ReducedWord& u, const SearchOptions& options) {
  const std::vector<Letter> letters{Letter(0, 1), Letter(0, -1), Letter(1, 1), Letter(1, -1)};
  const long k_max = static_cast<long>(options.length_cap / std::max<std::size_t>(u.size(), 1)) + 1;

  auto defect_of = [&](const ReducedWord& w) -> std::optional<std::size_t> {
    if (options.defect_bound == 0) {
      return multiply(u, w) == multiply(w, u) ? std::optional<std::size_t>(0) : std::nullopt;
    }
    return commutation_defect(u, w);
  };

  SearchResult result;
  result.exhaustive = options.length_cap <= kExhaustiveCap;
  result.beam_width = result.exhaustive ? 0 : options.beam_width;

  std::vector<std::pair<std::size_t, ReducedWord>> frontier{{0, ReducedWord{}}};
  result.records.push_back({ReducedWord{}, 0, distance_to_powers(ReducedWord{}, u, k_max)});
  for (std::size_t length = 1; length <= options.length_cap; ++length) {
    std::vector<std::pair<std::size_t, ReducedWord>> next;
    for (const auto& [unused, base] : frontier) {
      for (Letter x : letters) {
        if (!base.empty() && base[base.size() - 1].is_inverse_of(x)) continue;
        std::vector<Letter> extended(base.begin(), base.end());
        extended.push_back(x);
        ReducedWord w = ReducedWord::from_reduced(std::move(extended));
        const auto d = defect_of(w);
        if (d && *d <= options.defect_bound) result.records.push_back({w, *d, distance_to_powers(w, u, k_max)});
        next.emplace_back(d ? *d : options.defect_bound + 1, std::move(w));
      }
    }
    if (length > kExhaustiveCap && next.size() > options.beam_width) {
      std::stable_sort(next.begin(), next.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
      next.resize(options.beam_width);
    }
    std::sort(next.begin(), next.end(), [](const auto& l, const auto& r) { return l.second < r.second; });
    frontier = std::move(next);
  }
  std::sort(result.records.begin(), result.records.end(),
            [](const SearchRecord& l, const SearchRecord& r) { return l.word < r.word; });
  return result;
}

}  // namespace bicoarse
