#pragma once

// Word metrics on ℤ for sparse generating sets, and the witness sequence
// showing that pro-Q completions of ℤ contain non-integer limits.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bicoarse/rational.hpp"

namespace bicoarse {

class ZGenSet {
 public:
  enum class Kind { Explicit, Factorials, PowersOf, Primes };

  static ZGenSet explicit_list(std::vector<std::int64_t> members);
  static ZGenSet factorials(int max_n);                      // 1!, 2!, ..., max_n!
  static ZGenSet powers_of(std::int64_t base, int max_exp);  // base^0 .. base^max_exp
  static ZGenSet primes(std::int64_t limit);                 // primes <= limit

  ZGenSet excluding(std::set<std::int64_t> values) const;

  Kind kind() const noexcept { return kind_; }
  // Positive, distinct, ascending, exclusions removed.
  const std::vector<std::int64_t>& members() const noexcept { return members_; }
  bool contains(std::int64_t s) const;
  std::string describe() const;

 private:
  ZGenSet(Kind kind, std::vector<std::int64_t> members, std::string label);

  Kind kind_;
  std::vector<std::int64_t> members_;
  std::string label_;
  std::set<std::int64_t> excluded_;
};

// Minimal m with k a signed sum of m members, by iterative deepening; nullopt
// if it exceeds cap.
std::optional<std::size_t> z_word_length(std::int64_t k, const ZGenSet& s, std::size_t cap);

struct FactorialLengthReport {
  int n;
  std::int64_t element;  // n!
  std::optional<std::size_t> length;
  bool ok;
};

// |n!| with respect to {1!, ..., (n+2)!} without n!, searched up to n + 1.
// Throws Error(InfeasibleN) outside 2 <= n <= 7.
FactorialLengthReport factorial_length_check(int n);

struct WindowReport {
  bool ok;
  std::vector<std::int64_t> failures;  // k in [1, N] with |k|_S > m
  std::vector<std::size_t> histogram;  // histogram[j] = #{k in [1, N] : |k|_S = j}, j <= m
};

// Checks |k|_S <= m for 1 <= k <= N with sumset layers over the finite set S.
WindowReport window_diameter(const ZGenSet& s, std::int64_t n, std::size_t m);

bool is_prime(std::uint64_t n) noexcept;

// Multiplicative order of x modulo q^l, for x coprime to the prime q. Lifts
// the order modulo q (or 4 when q = 2) by the q-adic valuation of x^o − 1.
BigInt order_mod_prime_power(const BigInt& x, std::uint64_t q, std::uint64_t l);
// v_q(x^a − 1) for x coprime to q and a >= 1.
std::uint64_t valuation_of_power_minus_one(const BigInt& x, const BigInt& a, std::uint64_t q);
std::uint64_t valuation(BigInt x, std::uint64_t p);

struct ProfiniteWitness {
  std::vector<std::uint64_t> primes;  // Q in the order used
  std::uint64_t q = 0;
  std::vector<BigInt> products;        // P_n = p_1 ⋯ p_min(n,|Q|)
  std::vector<BigInt> exponents;       // a_n
  std::vector<std::uint64_t> moduli;   // l_n with k_n <= q^{l_n}, n < steps
  std::vector<std::map<std::uint64_t, BigInt>> factorizations;  // k_n = Π p^e
  std::vector<std::optional<BigInt>> values;  // k_n when small enough to hold
};

inline constexpr std::uint64_t kMaterializeBits = 1u << 20;

// k_1 = p_1^{ord_q(p_1)}, k_n = k_{n−1} · P_n^{a_n} with a_n = ord_{q^{l_{n−1}}}(P_n)
// and l_{n−1} minimal with q^{l_{n−1}} >= k_{n−1}. Throws Error(QContainsQ),
// Error(NonPrimeInput), or Error(InvalidInput) when k_{n−1} is too large to
// hold exactly.
ProfiniteWitness profinite_witness(const std::vector<std::uint64_t>& primes, std::uint64_t q, std::size_t steps);

struct WitnessCheck {
  std::string name;
  std::string route;  // "direct", "modpow" or "valuation"
  bool ok;
};

// Re-derives every invariant from the stored factorizations: congruence
// stability k_n ≡ k_j (mod q^{l_j}), growth of p-adic valuations, and the
// recurrence itself where values are held.
std::vector<WitnessCheck> verify_witness(const ProfiniteWitness& w);

}  // namespace bicoarse
