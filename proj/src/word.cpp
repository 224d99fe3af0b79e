#include "bicoarse/word.hpp"

#include <algorithm>
#include <cassert>

namespace bicoarse {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidCharacter: return "InvalidCharacter";
    case ErrorKind::RankExceeded: return "RankExceeded";
    case ErrorKind::EmptyPattern: return "EmptyPattern";
    case ErrorKind::EmptyWord: return "EmptyWord";
    case ErrorKind::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorKind::Unreached: return "Unreached";
    case ErrorKind::BallTooLarge: return "BallTooLarge";
    case ErrorKind::InvalidPieceSet: return "InvalidPieceSet";
    case ErrorKind::InvalidBase: return "InvalidBase";
    case ErrorKind::AsymmetricRule: return "AsymmetricRule";
    case ErrorKind::InvalidRule: return "InvalidRule";
    case ErrorKind::InfeasibleN: return "InfeasibleN";
    case ErrorKind::QContainsQ: return "QContainsQ";
    case ErrorKind::NonPrimeInput: return "NonPrimeInput";
    case ErrorKind::SampleNotClosed: return "SampleNotClosed";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Alphabet::Alphabet(int rank) : rank_(rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw Error(ErrorKind::RankExceeded, "alphabet rank must be in [1, 26], got " + std::to_string(rank));
  }
}

Letter Letter::from_char(char c, const Alphabet& alphabet, std::size_t position) {
  int generator;
  int sign;
  if (c >= 'a' && c <= 'z') {
    generator = c - 'a';
    sign = 1;
  } else if (c >= 'A' && c <= 'Z') {
    generator = c - 'A';
    sign = -1;
  } else {
    throw InvalidCharacterError(position, c);
  }
  if (generator >= alphabet.rank()) throw InvalidCharacterError(position, c);
  return Letter(generator, sign);
}

char Letter::to_char() const noexcept {
  return static_cast<char>((sign() > 0 ? 'a' : 'A') + generator());
}

int Word::max_generator() const noexcept {
  int m = -1;
  for (Letter x : letters_) m = std::max(m, x.generator());
  return m;
}

Word Word::slice(std::size_t pos, std::size_t len) const {
  assert(pos + len <= letters_.size());
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::strong_ordering Word::operator<=>(const Word& other) const noexcept {
  if (auto c = letters_.size() <=> other.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(letters_.begin(), letters_.end(), other.letters_.begin(),
                                                other.letters_.end());
}

ReducedWord ReducedWord::from_reduced(std::vector<Letter> letters) {
  Word w(std::move(letters));
  if (!is_reduced(w)) throw Error(ErrorKind::InvalidInput, "word " + to_string(w) + " is not reduced");
  return ReducedWord(std::move(w));
}

Word parse(std::string_view text, const Alphabet& alphabet) {
  if (text == "1") return {};
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) letters.push_back(Letter::from_char(text[i], alphabet, i));
  return Word(std::move(letters));
}

ReducedWord parse_reduced(std::string_view text, const Alphabet& alphabet) {
  return reduce(parse(text, alphabet));
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(x.to_char());
  return out;
}

ReducedWord reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && stack.back().is_inverse_of(x)) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return ReducedWord(Word(std::move(stack)));
}

bool is_reduced(const Word& w) noexcept {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1].is_inverse_of(w[i])) return false;
  }
  return true;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

ReducedWord invert(const ReducedWord& w) {
  return ReducedWord::from_reduced(invert(w.word()).letters());
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return Word(std::move(out));
}

ReducedWord multiply(const ReducedWord& u, const ReducedWord& v) {
  std::size_t k = 0;
  while (k < u.size() && k < v.size() && u[u.size() - 1 - k].is_inverse_of(v[k])) ++k;
  std::vector<Letter> out;
  out.reserve(u.size() + v.size() - 2 * k);
  out.insert(out.end(), u.begin(), u.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return reduce(Word(std::move(out)));
}

ReducedWord multiply(std::initializer_list<ReducedWord> factors) {
  ReducedWord acc;
  for (const ReducedWord& f : factors) acc = multiply(acc, f);
  return acc;
}

ReducedWord commutator(const ReducedWord& g, const ReducedWord& h) {
  return multiply({g, h, invert(g), invert(h)});
}

bool is_cyclically_reduced(const ReducedWord& w) noexcept {
  return w.size() < 2 || !w[0].is_inverse_of(w[w.size() - 1]);
}

CyclicDecomposition cyclic_decomposition(const ReducedWord& w) {
  std::size_t c = 0;
  while (2 * c + 1 < w.size() && w[c].is_inverse_of(w[w.size() - 1 - c])) ++c;
  const Word& word = w.word();
  return {ReducedWord::from_reduced(word.slice(0, c).letters()),
          ReducedWord::from_reduced(word.slice(c, w.size() - 2 * c).letters())};
}

ReducedWord power(const ReducedWord& w, long n) {
  if (n == 0 || w.empty()) return {};
  if (n < 0) return power(invert(w), -n);
  auto [conjugator, core] = cyclic_decomposition(w);
  std::vector<Letter> out;
  out.reserve(2 * conjugator.size() + static_cast<std::size_t>(n) * core.size());
  out.insert(out.end(), conjugator.begin(), conjugator.end());
  for (long i = 0; i < n; ++i) out.insert(out.end(), core.begin(), core.end());
  Word tail = invert(conjugator.word());
  out.insert(out.end(), tail.begin(), tail.end());
  return ReducedWord::from_reduced(std::move(out));
}

std::vector<std::size_t> occurrence_positions(const Word& g, const Word& w) {
  if (w.empty()) throw Error(ErrorKind::EmptyPattern, "pattern must be nonempty");
  std::vector<std::size_t> out;
  if (w.size() > g.size()) return out;
  // Knuth-Morris-Pratt over the failure function of w.
  const auto fail = border_array(w);
  std::size_t matched = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    while (matched > 0 && g[i] != w[matched]) matched = fail[matched - 1];
    if (g[i] == w[matched]) ++matched;
    if (matched == w.size()) {
      out.push_back(i + 1 - w.size());
      matched = fail[matched - 1];
    }
  }
  return out;
}

std::size_t occurrences(const Word& g, const Word& w) {
  return occurrence_positions(g, w).size();
}

std::size_t non_overlapping_occurrences(const Word& g, const Word& w) {
  std::size_t count = 0;
  std::size_t next_free = 0;
  for (std::size_t start : occurrence_positions(g, w)) {
    if (start >= next_free) {
      ++count;
      next_free = start + w.size();
    }
  }
  return count;
}

std::vector<std::size_t> border_array(const Word& w) {
  std::vector<std::size_t> fail(w.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

bool is_self_overlapping(const Word& w) {
  if (w.empty()) throw Error(ErrorKind::EmptyWord, "word must be nonempty");
  return border_array(w).back() > 0;
}

namespace {

bool is_subword(const Word& small, const Word& big) {
  return small.size() <= big.size() && !occurrence_positions(big, small).empty();
}

// Some nonempty prefix of `head` equals a suffix of `tail`.
bool prefix_meets_suffix(const Word& head, const Word& tail) {
  const std::size_t limit = std::min(head.size(), tail.size());
  for (std::size_t len = 1; len <= limit; ++len) {
    if (std::equal(head.begin(), head.begin() + static_cast<std::ptrdiff_t>(len),
                   tail.end() - static_cast<std::ptrdiff_t>(len))) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool overlaps(const Word& w1, const Word& w2) {
  if (w1.empty() || w2.empty()) throw Error(ErrorKind::EmptyWord, "overlap test needs nonempty words");
  return is_subword(w1, w2) || is_subword(w2, w1) || prefix_meets_suffix(w1, w2) ||
         prefix_meets_suffix(w2, w1);
}

std::vector<Syllable> syllables(const Word& w) {
  std::vector<Syllable> out;
  for (Letter x : w) {
    if (!out.empty() && out.back().generator == x.generator()) {
      out.back().exponent += x.sign();
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back({x.generator(), x.sign()});
    }
  }
  return out;
}

Word from_syllables(const std::vector<Syllable>& syllables) {
  std::vector<Letter> out;
  for (const Syllable& s : syllables) {
    const Letter x(s.generator, s.exponent > 0 ? 1 : -1);
    for (long i = 0; i < (s.exponent > 0 ? s.exponent : -s.exponent); ++i) out.push_back(x);
  }
  return Word(std::move(out));
}

long exponent_sum(const Word& w, int generator) noexcept {
  long sum = 0;
  for (Letter x : w) {
    if (x.generator() == generator) sum += x.sign();
  }
  return sum;
}

std::size_t ball_size(const Alphabet& alphabet, std::size_t radius) noexcept {
  const std::size_t letters = 2 * static_cast<std::size_t>(alphabet.rank());
  std::size_t total = 1;
  std::size_t sphere = letters;
  for (std::size_t r = 1; r <= radius; ++r) {
    total += sphere;
    sphere *= letters - 1;
  }
  return total;
}

std::vector<ReducedWord> ball(const Alphabet& alphabet, std::size_t radius) {
  std::vector<Letter> all;
  for (int g = 0; g < alphabet.rank(); ++g) {
    all.emplace_back(g, 1);
    all.emplace_back(g, -1);
  }
  std::vector<ReducedWord> out;
  out.reserve(ball_size(alphabet, radius));
  out.emplace_back();
  std::size_t sphere_begin = 0;
  for (std::size_t r = 1; r <= radius; ++r) {
    const std::size_t sphere_end = out.size();
    for (std::size_t i = sphere_begin; i < sphere_end; ++i) {
      for (Letter x : all) {
        const ReducedWord& base = out[i];
        if (!base.empty() && base[base.size() - 1].is_inverse_of(x)) continue;
        std::vector<Letter> letters(base.begin(), base.end());
        letters.push_back(x);
        out.push_back(ReducedWord::from_reduced(std::move(letters)));
      }
    }
    sphere_begin = sphere_end;
  }
  return out;
}

}  // namespace bicoarse

std::size_t std::hash<bicoarse::Word>::operator()(const bicoarse::Word& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (bicoarse::Letter x : w) {
    h ^= static_cast<std::size_t>(x.order_key() + 1);
    h *= 1099511628211ULL;
  }
  return h ^ w.size();
}
