#include <doctest.h>

#include <unordered_set>

#include "bicoarse/serialize.hpp"
#include "bicoarse/zmetric.hpp"
#include "support.hpp"

using namespace bicoarse;
using namespace testkit;

namespace {

// Nonzero digits of the non-adjacent form.
std::size_t naf_weight(std::int64_t k) {
  std::size_t w = 0;
  while (k != 0) {
    if (k & 1) {
      const std::int64_t digit = 2 - (k & 3);  // ±1
      k -= digit;
      ++w;
    }
    k /= 2;
  }
  return w;
}

// Splits the sum into two halves of at most cap/2 terms each.
std::optional<std::size_t> meet_in_middle(std::int64_t k, const std::vector<std::int64_t>& s, std::size_t cap) {
  std::vector<std::unordered_set<std::int64_t>> exact{{0}};
  const std::size_t half = (cap + 1) / 2;
  for (std::size_t j = 1; j <= half; ++j) {
    std::unordered_set<std::int64_t> next;
    for (auto x : exact.back()) {
      for (auto g : s) {
        next.insert(x + g);
        next.insert(x - g);
      }
    }
    exact.push_back(std::move(next));
  }
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i <= half; ++i) {
    for (std::size_t j = 0; j <= half && i + j <= cap; ++j) {
      for (auto x : exact[i]) {
        if (exact[j].count(k - x) && (!best || i + j < *best)) best = i + j;
      }
    }
  }
  return best;
}

BigInt brute_order(std::uint64_t x, std::uint64_t m) {
  std::uint64_t y = x % m;
  BigInt o = 1;
  while (y != 1) {
    y = y * (x % m) % m;
    ++o;
  }
  return o;
}

std::uint64_t brute_valuation(BigInt v, std::uint64_t p) {
  std::uint64_t e = 0;
  while (v != 0 && v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace

TEST_CASE("generating sets") {
  CHECK(ZGenSet::factorials(5).members() == std::vector<std::int64_t>{1, 2, 6, 24, 120});
  CHECK(ZGenSet::powers_of(2, 4).members() == std::vector<std::int64_t>{1, 2, 4, 8, 16});
  CHECK(ZGenSet::primes(20).members() == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(ZGenSet::explicit_list({5, 1, 5}).members() == std::vector<std::int64_t>{1, 5});
  CHECK(ZGenSet::factorials(5).excluding({24}).members() == std::vector<std::int64_t>{1, 2, 6, 120});
  CHECK_THROWS_AS(ZGenSet::explicit_list({0, 1}), Error);
  CHECK_THROWS_AS(ZGenSet::factorials(21), Error);
}

TEST_CASE("z word length basics") {
  const auto f = ZGenSet::factorials(6);
  CHECK(z_word_length(0, f, 3) == std::optional<std::size_t>(0));
  for (auto s : f.members()) CHECK(z_word_length(s, f, 3) == std::optional<std::size_t>(1));
  CHECK_FALSE(z_word_length(5, ZGenSet::explicit_list({1}), 4).has_value());
  CHECK(z_word_length(5, ZGenSet::explicit_list({1}), 5) == std::optional<std::size_t>(5));
  for (std::int64_t k = -100; k <= 100; ++k) {
    CHECK(z_word_length(k, ZGenSet::powers_of(2, 8), 8) == std::optional<std::size_t>(naf_weight(k < 0 ? -k : k)));
  }
}

TEST_CASE("factorial lemma") {
  for (int n = 2; n <= 6; ++n) {
    const auto rep = factorial_length_check(n);
    CHECK(rep.ok);
    CHECK(rep.length == std::optional<std::size_t>(static_cast<std::size_t>(n)));
  }
  CHECK_THROWS_AS(factorial_length_check(1), Error);
  CHECK_THROWS_AS(factorial_length_check(8), Error);
}

TEST_CASE("z word length matches meet-in-the-middle, symmetric and triangular") {
  for (int i = 0; i < 150; ++i) {
    std::vector<std::int64_t> members;
    const std::size_t count = uniform(1, 4);
    for (std::size_t j = 0; j < count; ++j) members.push_back(static_cast<std::int64_t>(uniform(1, 40)));
    const auto s = ZGenSet::explicit_list(members);
    const std::int64_t k = static_cast<std::int64_t>(uniform(0, 300)) - 150;
    const std::int64_t j = static_cast<std::int64_t>(uniform(0, 300)) - 150;
    const auto len = z_word_length(k, s, 6);
    CHECK(len == meet_in_middle(k, s.members(), 6));
    CHECK(len == z_word_length(-k, s, 6));
    const auto lj = z_word_length(j, s, 12);
    const auto lk = z_word_length(k, s, 12);
    const auto diff = z_word_length(k - j, s, 12);
    if (lj && lk && diff) CHECK((*lk > *lj ? *lk - *lj : *lj - *lk) <= *diff);
  }
}

TEST_CASE("window diameters") {
  const auto primes = window_diameter(ZGenSet::primes(10100), 10000, 4);
  CHECK(primes.ok);
  CHECK(primes.failures.empty());
  const auto ones = window_diameter(ZGenSet::explicit_list({1}), 5, 4);
  CHECK_FALSE(ones.ok);
  CHECK(ones.failures == std::vector<std::int64_t>{5});
  CHECK(ones.histogram == std::vector<std::size_t>{0, 1, 1, 1, 1});
  const auto twos = window_diameter(ZGenSet::powers_of(2, 8), 100, 7);
  CHECK(twos.ok);
  for (std::int64_t k = 1; k <= 100; ++k) {
    CHECK(twos.histogram.at(naf_weight(k)) > 0);
  }
  std::size_t total = 0;
  for (auto c : twos.histogram) total += c;
  CHECK(total == 100);
}

TEST_CASE("primality, orders and valuations") {
  std::vector<bool> sieve(2000, true);
  sieve[0] = sieve[1] = false;
  for (std::size_t i = 2; i < sieve.size(); ++i) {
    if (!sieve[i]) continue;
    for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
  }
  for (std::uint64_t n = 0; n < sieve.size(); ++n) CHECK(is_prime(n) == sieve[n]);
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(4294967297ULL));
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL}) {
    std::uint64_t m = q;
    for (std::uint64_t l = 1; m <= 100000; ++l, m *= q) {
      for (std::uint64_t x = 2; x < 60; ++x) {
        if (x % q == 0) continue;
        CHECK(order_mod_prime_power(BigInt(x), q, l) == brute_order(x, m));
      }
    }
    for (std::uint64_t x = 2; x < 30; ++x) {
      if (x % q == 0) continue;
      for (std::uint64_t a = 1; a <= 24; ++a) {
        const BigInt direct = boost::multiprecision::pow(BigInt(x), static_cast<unsigned>(a)) - 1;
        CHECK(valuation_of_power_minus_one(BigInt(x), BigInt(a), q) == brute_valuation(direct, q));
      }
    }
  }
  CHECK(valuation(BigInt(48), 2) == 4);
  CHECK(valuation(BigInt(162), 3) == 4);
}

TEST_CASE("profinite witness small cases") {
  const auto w1 = profinite_witness({2}, 3, 1);
  REQUIRE(w1.values.size() == 1);
  CHECK(*w1.values[0] == 4);
  const auto w2 = profinite_witness({7}, 2, 1);
  CHECK(*w2.values[0] == 7);
  CHECK_THROWS_AS(profinite_witness({2, 5}, 5, 2), Error);
  CHECK_THROWS_AS(profinite_witness({4}, 5, 2), Error);
  CHECK_THROWS_AS(profinite_witness({2}, 9, 2), Error);
  try {
    (void)profinite_witness({2, 3}, 3, 2);
    FAIL("expected QContainsQ");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::QContainsQ);
  }
}

TEST_CASE("profinite witness invariants re-derived from held values") {
  const auto w = profinite_witness({2, 3}, 5, 3);
  REQUIRE(w.values.size() == 3);
  CHECK(*w.values[0] == 16);
  CHECK(*w.values[1] == 124416);
  CHECK(w.moduli[0] == 2);
  CHECK(w.moduli[1] == 8);
  for (std::size_t j = 0; j < w.moduli.size(); ++j) {
    const BigInt m = boost::multiprecision::pow(BigInt(5), static_cast<unsigned>(w.moduli[j]));
    CHECK(*w.values[j] <= m);
    CHECK(*w.values[j] > m / 5);
    for (std::size_t n = j; n < w.values.size(); ++n) CHECK(*w.values[n] % m == *w.values[j] % m);
  }
  for (std::uint64_t p : {2ULL, 3ULL}) {
    for (std::size_t n = 1; n < w.values.size(); ++n) {
      CHECK(brute_valuation(*w.values[n], p) > brute_valuation(*w.values[n - 1], p));
    }
  }
  for (const auto& c : verify_witness(w)) CHECK_MESSAGE(c.ok, c.name);
}

TEST_CASE("four-step witness verifies through every route") {
  const auto w = profinite_witness({2, 3}, 5, 4);
  CHECK_FALSE(w.values[3].has_value());
  const auto checks = verify_witness(w);
  std::set<std::string> routes;
  for (const auto& c : checks) {
    CHECK_MESSAGE(c.ok, c.name);
    routes.insert(c.route);
  }
  CHECK(routes == std::set<std::string>{"direct", "modpow", "valuation"});
  const Json j = to_json(w);
  CHECK(j["steps"][1]["k"] == "124416");
  CHECK(j["steps"][3]["k"].is_null());
}

TEST_CASE("a corrupted witness fails verification") {
  auto w = profinite_witness({2, 3}, 5, 3);
  w.factorizations[2][2] += 1;
  bool any_failed = false;
  for (const auto& c : verify_witness(w)) any_failed = any_failed || !c.ok;
  CHECK(any_failed);
}
