#include "bicoarse/zmetric.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <boost/dynamic_bitset.hpp>

#include "bicoarse/error.hpp"

namespace bicoarse {

ZGenSet::ZGenSet(Kind kind, std::vector<std::int64_t> members, std::string label)
    : kind_(kind), members_(std::move(members)), label_(std::move(label)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.front() <= 0) {
    throw Error(ErrorKind::InvalidInput, "generating set members must be positive");
  }
}

ZGenSet ZGenSet::explicit_list(std::vector<std::int64_t> members) {
  return ZGenSet(Kind::Explicit, std::move(members), "list");
}

ZGenSet ZGenSet::factorials(int max_n) {
  if (max_n < 1 || max_n > 20) throw Error(ErrorKind::InvalidInput, "factorials need 1 <= maxN <= 20");
  std::vector<std::int64_t> out;
  std::int64_t f = 1;
  for (int i = 1; i <= max_n; ++i) {
    f *= i;
    out.push_back(f);
  }
  return ZGenSet(Kind::Factorials, std::move(out), "factorials:" + std::to_string(max_n));
}

ZGenSet ZGenSet::powers_of(std::int64_t base, int max_exp) {
  if (base < 2 || max_exp < 0) throw Error(ErrorKind::InvalidInput, "powers need base >= 2, maxExp >= 0");
  std::vector<std::int64_t> out;
  std::int64_t p = 1;
  for (int i = 0; i <= max_exp; ++i) {
    out.push_back(p);
    if (i < max_exp && p > INT64_MAX / base) throw Error(ErrorKind::InvalidInput, "power exceeds 64 bits");
    p *= base;
  }
  return ZGenSet(Kind::PowersOf, std::move(out), "powers:" + std::to_string(base) + ":" + std::to_string(max_exp));
}

ZGenSet ZGenSet::primes(std::int64_t limit) {
  if (limit < 2 || limit > 100'000'000) throw Error(ErrorKind::InvalidInput, "prime limit must be in [2, 1e8]");
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::int64_t> out;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return ZGenSet(Kind::Primes, std::move(out), "primes:" + std::to_string(limit));
}

ZGenSet ZGenSet::excluding(std::set<std::int64_t> values) const {
  ZGenSet out = *this;
  for (std::int64_t v : values) {
    out.excluded_.insert(v);
    out.members_.erase(std::remove(out.members_.begin(), out.members_.end(), v), out.members_.end());
  }
  return out;
}

bool ZGenSet::contains(std::int64_t s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

std::string ZGenSet::describe() const {
  std::string out = label_;
  if (kind_ == Kind::Explicit) {
    out += ":";
    for (std::size_t i = 0; i < members_.size(); ++i) out += (i ? "," : "") + std::to_string(members_[i]);
  }
  for (std::int64_t v : excluded_) out += " \\ " + std::to_string(v);
  return out;
}

namespace {

class SignedSumSearch {
 public:
  explicit SignedSumSearch(const ZGenSet& s)
      : descending_(s.members().rbegin(), s.members().rend()), lookup_(s.members().begin(), s.members().end()) {}

  // Can target be written with at most `terms` generators of index >= from?
  bool reachable(std::int64_t target, std::size_t terms, std::size_t from = 0) const {
    if (target == 0) return true;
    if (terms == 0 || from >= descending_.size()) return false;
    const std::int64_t magnitude = target > 0 ? target : -target;
    if (terms == 1) return magnitude <= descending_[from] && lookup_.count(magnitude) > 0;
    for (std::size_t i = from; i < descending_.size(); ++i) {
      const std::int64_t s = descending_[i];
      // Every remaining term is at most s.
      if (static_cast<__int128>(terms) * s < magnitude) break;
      const std::int64_t toward = target > 0 ? s : -s;
      if (reachable(target - toward, terms - 1, i)) return true;
      if (reachable(target + toward, terms - 1, i)) return true;
    }
    return false;
  }

 private:
  std::vector<std::int64_t> descending_;
  std::unordered_set<std::int64_t> lookup_;
};

}  // namespace

std::optional<std::size_t> z_word_length(std::int64_t k, const ZGenSet& s, std::size_t cap) {
  const SignedSumSearch search(s);
  for (std::size_t m = 0; m <= cap; ++m) {
    if (search.reachable(k, m)) return m;
  }
  return std::nullopt;
}

FactorialLengthReport factorial_length_check(int n) {
  if (n < 2 || n > 7) throw Error(ErrorKind::InfeasibleN, "factorial check supports 2 <= n <= 7");
  const ZGenSet all = ZGenSet::factorials(n + 2);
  const std::int64_t element = all.members()[static_cast<std::size_t>(n - 1)];
  const ZGenSet without = all.excluding({element});
  const auto length = z_word_length(element, without, static_cast<std::size_t>(n + 1));
  return {n, element, length, length && *length == static_cast<std::size_t>(n)};
}

WindowReport window_diameter(const ZGenSet& s, std::int64_t n, std::size_t m) {
  if (s.members().empty()) throw Error(ErrorKind::InvalidInput, "generating set is empty");
  if (n < 1) throw Error(ErrorKind::InvalidInput, "window needs N >= 1");
  const std::int64_t max_s = s.members().back();
  const __int128 reach = static_cast<__int128>(std::max<std::size_t>(m, 1)) * max_s;
  const __int128 radius = std::max<__int128>(reach, n);
  if (radius > (static_cast<__int128>(1) << 30)) {
    throw Error(ErrorKind::InvalidInput, "window search range exceeds 2^30");
  }
  const std::size_t offset = static_cast<std::size_t>(radius);
  const std::size_t width = 2 * offset + 1;

  std::vector<int> length(static_cast<std::size_t>(n) + 1, -1);
  boost::dynamic_bitset<> layer(width);
  layer.set(offset);
  for (std::size_t j = 1; j <= m; ++j) {
    boost::dynamic_bitset<> next = layer;
    for (std::int64_t g : s.members()) {
      next |= layer << static_cast<std::size_t>(g);
      next |= layer >> static_cast<std::size_t>(g);
    }
    layer = std::move(next);
    for (std::int64_t k = 1; k <= n; ++k) {
      if (length[static_cast<std::size_t>(k)] < 0 && layer.test(offset + static_cast<std::size_t>(k))) {
        length[static_cast<std::size_t>(k)] = static_cast<int>(j);
      }
    }
  }

  WindowReport report{true, {}, std::vector<std::size_t>(m + 1, 0)};
  for (std::int64_t k = 1; k <= n; ++k) {
    const int len = length[static_cast<std::size_t>(k)];
    if (len < 0) {
      report.ok = false;
      report.failures.push_back(k);
    } else {
      ++report.histogram[static_cast<std::size_t>(len)];
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Number theory for the profinite witness.

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin witnesses for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t valuation(BigInt x, std::uint64_t p) {
  if (x == 0) throw Error(ErrorKind::InvalidInput, "valuation of zero");
  if (x < 0) x = -x;
  if (p == 2) return static_cast<std::uint64_t>(boost::multiprecision::lsb(x));
  // Divide out p^(2^i) for decreasing i.
  std::vector<BigInt> squares{BigInt(p)};
  while (x % squares.back() == 0) squares.push_back(squares.back() * squares.back());
  std::uint64_t v = 0;
  for (std::size_t i = squares.size(); i-- > 0;) {
    if (x % squares[i] == 0) {
      x /= squares[i];
      v += std::uint64_t{1} << i;
    }
  }
  return v;
}

namespace {

// q, or 4 when q = 2: the modulus past which q-adic lifting is regular.
std::uint64_t lifting_base(std::uint64_t q) { return q == 2 ? 4 : q; }

std::uint64_t small_order(std::uint64_t x, std::uint64_t m) {
  if (m == 1) return 1;
  x %= m;
  std::uint64_t y = x;
  for (std::uint64_t o = 1; o <= m; ++o) {
    if (y == 1) return o;
    y = mulmod(y, x, m);
  }
  throw Error(ErrorKind::InvalidInput, "element is not a unit");
}

std::uint64_t residue(const BigInt& x, std::uint64_t m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

BigInt order_mod_prime_power(const BigInt& x, std::uint64_t q, std::uint64_t l) {
  if (x % q == 0) throw Error(ErrorKind::InvalidInput, "element shares a factor with the modulus");
  if (l == 0) return 1;
  const std::uint64_t base = lifting_base(q);
  const std::uint64_t base_exp = q == 2 ? 2 : 1;
  if (l <= base_exp) {
    const std::uint64_t modulus = q == 2 ? (std::uint64_t{1} << l) : q;
    return small_order(residue(x, modulus), modulus);
  }
  const std::uint64_t o = small_order(residue(x, base), base);
  const std::uint64_t v = valuation(boost::multiprecision::pow(x, static_cast<unsigned>(o)) - 1, q);
  BigInt result = o;
  if (l > v) result *= boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(l - v));
  return result;
}

std::uint64_t valuation_of_power_minus_one(const BigInt& x, const BigInt& a, std::uint64_t q) {
  if (a < 1) throw Error(ErrorKind::InvalidInput, "exponent must be positive");
  if (x % q == 0) return 0;
  const std::uint64_t base = lifting_base(q);
  const std::uint64_t o = small_order(residue(x, base), base);
  if (a % o != 0) {
    // x^a is not 1 modulo the base; reduce the exponent by the unit group order.
    const std::uint64_t units = q == 2 ? 2 : q - 1;
    const std::uint64_t r = powmod(residue(x, base), residue(a, units), base);
    return valuation(BigInt(r) - 1, q);
  }
  const std::uint64_t v0 = valuation(boost::multiprecision::pow(x, static_cast<unsigned>(o)) - 1, q);
  return v0 + valuation(BigInt(a / o), q);
}

namespace {

double log2_of(const BigInt& x) {
  if (x <= 0) return 0;
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 1000) return std::log2(static_cast<double>(x));
  const BigInt top = x >> (bits - 60);
  return std::log2(static_cast<double>(top)) + static_cast<double>(bits - 60);
}

std::uint64_t minimal_modulus_exponent(const BigInt& k, std::uint64_t q) {
  const double estimate = log2_of(k) / std::log2(static_cast<double>(q));
  std::uint64_t l = estimate > 3 ? static_cast<std::uint64_t>(estimate) - 2 : 0;
  BigInt power = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(l));
  while (power < k) {
    power *= q;
    ++l;
  }
  return l;
}

}  // namespace

ProfiniteWitness profinite_witness(const std::vector<std::uint64_t>& primes, std::uint64_t q, std::size_t steps) {
  if (primes.empty()) throw Error(ErrorKind::InvalidInput, "Q must contain at least one prime");
  if (steps < 1) throw Error(ErrorKind::InvalidInput, "steps must be >= 1");
  if (!is_prime(q)) throw Error(ErrorKind::NonPrimeInput, std::to_string(q) + " is not prime");
  if (q > 65521) throw Error(ErrorKind::InvalidInput, "q must be below 2^16");
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw Error(ErrorKind::NonPrimeInput, std::to_string(p) + " is not prime");
    if (p == q) throw Error(ErrorKind::QContainsQ, "q = " + std::to_string(q) + " belongs to Q");
  }
  if (std::set<std::uint64_t>(primes.begin(), primes.end()).size() != primes.size()) {
    throw Error(ErrorKind::InvalidInput, "Q lists a prime twice");
  }

  ProfiniteWitness w;
  w.primes = primes;
  w.q = q;
  BigInt product = 1;
  for (std::size_t n = 1; n <= steps; ++n) {
    // Once Q is exhausted the full product is reused.
    if (n <= primes.size()) product *= primes[n - 1];
    w.products.push_back(product);

    std::map<std::uint64_t, BigInt> factors = n == 1 ? std::map<std::uint64_t, BigInt>{} : w.factorizations.back();
    BigInt a;
    if (n == 1) {
      a = order_mod_prime_power(product, q, 1);
    } else {
      const auto& previous = w.values.back();
      if (!previous) {
        throw Error(ErrorKind::InvalidInput,
                    "k_" + std::to_string(n - 1) + " is too large to choose the next modulus exactly");
      }
      const std::uint64_t l = minimal_modulus_exponent(*previous, q);
      w.moduli.push_back(l);
      a = order_mod_prime_power(product, q, l);
    }
    w.exponents.push_back(a);
    for (std::size_t i = 0; i < std::min(n, primes.size()); ++i) factors[primes[i]] += a;

    double bits = 0;
    for (const auto& [p, e] : factors) bits += static_cast<double>(e) * std::log2(static_cast<double>(p));
    std::optional<BigInt> value;
    if (bits <= static_cast<double>(kMaterializeBits)) {
      BigInt v = 1;
      for (const auto& [p, e] : factors) v *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
      value = std::move(v);
    }
    w.factorizations.push_back(std::move(factors));
    w.values.push_back(std::move(value));
  }
  return w;
}

namespace {

constexpr double kModpowBits = 4096;

BigInt residue_from_factors(const std::map<std::uint64_t, BigInt>& factors, const BigInt& modulus,
                            const BigInt& group_order) {
  BigInt r = 1;
  for (const auto& [p, e] : factors) {
    const BigInt step = boost::multiprecision::powm(BigInt(p), BigInt(e % group_order), modulus);
    r = BigInt(r * step) % modulus;
  }
  return r;
}

}  // namespace

std::vector<WitnessCheck> verify_witness(const ProfiniteWitness& w) {
  std::vector<WitnessCheck> checks;
  const std::size_t m = w.exponents.size();
  auto add = [&](std::string name, std::string route, bool ok) { checks.push_back({std::move(name), std::move(route), ok}); };

  bool primes_ok = is_prime(w.q);
  for (std::uint64_t p : w.primes) primes_ok = primes_ok && is_prime(p) && p != w.q;
  add("Q prime, q prime, q not in Q", "direct", primes_ok);

  // Factorizations follow the recurrence.
  for (std::size_t n = 0; n < m; ++n) {
    std::map<std::uint64_t, BigInt> expected = n == 0 ? std::map<std::uint64_t, BigInt>{} : w.factorizations[n - 1];
    BigInt rest = w.products[n];
    for (std::uint64_t p : w.primes) {
      if (rest % p == 0) {
        expected[p] += w.exponents[n];
        rest /= p;
      }
    }
    add("k_" + std::to_string(n + 1) + " factorization", "direct", rest == 1 && expected == w.factorizations[n]);
    if (n > 0 && w.values[n] && w.values[n - 1]) {
      const bool ok = *w.values[n] ==
                      *w.values[n - 1] * boost::multiprecision::pow(w.products[n], static_cast<unsigned>(w.exponents[n]));
      add("k_" + std::to_string(n + 1) + " = k_" + std::to_string(n) + " * P^a", "direct", ok);
    }
  }

  // Moduli are minimal with k_j <= q^{l_j}.
  for (std::size_t j = 0; j < w.moduli.size(); ++j) {
    if (!w.values[j]) continue;
    const BigInt upper = boost::multiprecision::pow(BigInt(w.q), static_cast<unsigned>(w.moduli[j]));
    const bool ok = *w.values[j] <= upper && (w.moduli[j] == 0 || *w.values[j] > upper / w.q);
    add("l_" + std::to_string(j + 1) + " minimal", "direct", ok);
  }

  // Congruence stability and non-constancy.
  for (std::size_t j = 0; j < w.moduli.size(); ++j) {
    const std::uint64_t l = w.moduli[j];
    const double modulus_bits = static_cast<double>(l) * std::log2(static_cast<double>(w.q));
    for (std::size_t n = j + 1; n < m; ++n) {
      const std::string name = "k_" + std::to_string(n + 1) + " = k_" + std::to_string(j + 1) + " mod q^" +
                               std::to_string(l);
      if (w.values[n] && w.values[j]) {
        const BigInt modulus = boost::multiprecision::pow(BigInt(w.q), static_cast<unsigned>(l));
        add(name, "direct", (*w.values[n] - *w.values[j]) % modulus == 0);
      } else if (modulus_bits <= kModpowBits) {
        const BigInt modulus = boost::multiprecision::pow(BigInt(w.q), static_cast<unsigned>(l));
        const BigInt group_order = modulus / w.q * (w.q - 1);
        add(name, "modpow",
            residue_from_factors(w.factorizations[n], modulus, group_order) ==
                residue_from_factors(w.factorizations[j], modulus, group_order));
      } else {
        // k_n / k_j = Π_{j<i<=n} P_i^{a_i}; each factor is 1 mod q^l.
        bool ok = true;
        for (std::size_t i = j + 1; i <= n; ++i) {
          ok = ok && valuation_of_power_minus_one(w.products[i], w.exponents[i], w.q) >= l;
        }
        add(name, "valuation", ok);
      }
    }
    // k_n and k_{n-1} differ modulo q^{l_j} for n <= j.
    for (std::size_t n = 1; n <= j; ++n) {
      const std::uint64_t v = valuation_of_power_minus_one(w.products[n], w.exponents[n], w.q);
      add("k_" + std::to_string(n + 1) + " != k_" + std::to_string(n) + " mod q^" + std::to_string(l), "valuation",
          v < l);
    }
  }

  // p-adic valuations grow once p enters the product.
  for (std::size_t t = 0; t < w.primes.size(); ++t) {
    const std::uint64_t p = w.primes[t];
    for (std::size_t n = std::max<std::size_t>(t, 1); n < m; ++n) {
      const std::string name = "v_" + std::to_string(p) + "(k_" + std::to_string(n + 1) + ") > v_" +
                               std::to_string(p) + "(k_" + std::to_string(n) + ")";
      if (w.values[n] && w.values[n - 1]) {
        add(name, "direct", valuation(*w.values[n], p) > valuation(*w.values[n - 1], p));
      } else {
        auto get = [&](std::size_t i) {
          auto it = w.factorizations[i].find(p);
          return it == w.factorizations[i].end() ? BigInt(0) : it->second;
        };
        add(name, "valuation", get(n) > get(n - 1));
      }
    }
  }
  return checks;
}

}  // namespace bicoarse
