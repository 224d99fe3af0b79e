#pragma once

// Shared test fixtures: deterministic random words and small brute-force
// oracles that deliberately avoid the library's own algorithms.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bicoarse/word.hpp"

namespace testkit {

using namespace bicoarse;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234ULL);
  return engine;
}

inline std::size_t uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng());
}

inline Letter random_letter(int rank) {
  return Letter(static_cast<int>(uniform(0, static_cast<std::size_t>(rank - 1))), uniform(0, 1) ? 1 : -1);
}

// Arbitrary (possibly unreduced) letter sequence.
inline Word random_word(std::size_t length, int rank = 2) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(random_letter(rank));
  return Word(std::move(out));
}

// Reduced word of exactly the given length.
inline ReducedWord random_reduced(std::size_t length, int rank = 2) {
  std::vector<Letter> out;
  while (out.size() < length) {
    const Letter x = random_letter(rank);
    if (!out.empty() && out.back().is_inverse_of(x)) continue;
    out.push_back(x);
  }
  return ReducedWord::from_reduced(std::move(out));
}

inline ReducedWord random_reduced_upto(std::size_t max_length, int rank = 2) {
  return random_reduced(uniform(0, max_length), rank);
}

inline ReducedWord rw(const std::string& text, int rank = 2) { return parse_reduced(text, Alphabet(rank)); }
inline Word ww(const std::string& text, int rank = 2) { return parse(text, Alphabet(rank)); }

// Reduction by repeated scanning for adjacent inverse pairs (quadratic, no stack).
inline std::vector<Letter> naive_reduce(std::vector<Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].is_inverse_of(w[i + 1])) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + 2));
        changed = true;
        break;
      }
    }
  }
  return w;
}

// Every reduced rank-r word of length <= n, built by plain extension.
inline std::vector<ReducedWord> all_reduced(std::size_t n, int rank = 2) {
  std::vector<std::vector<Letter>> layer{{}};
  std::vector<ReducedWord> out{ReducedWord{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (int g = 0; g < rank; ++g) {
        for (int s : {1, -1}) {
          const Letter x(g, s);
          if (!w.empty() && w.back().is_inverse_of(x)) continue;
          auto e = w;
          e.push_back(x);
          out.push_back(ReducedWord::from_reduced(e));
          next.push_back(std::move(e));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace testkit
