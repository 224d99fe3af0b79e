#pragma once

// Cancellation length |w|_x: the fewest letters to delete from w so that the
// rest freely reduces to the identity. On reduced words it is the word length
// for the normal generating set of conjugates of the generators, so
// d_x(u, v) = |u⁻¹v|_x is a bi-invariant metric on the free group.

#include <cstddef>
#include <utility>
#include <vector>

#include "bicoarse/word.hpp"

namespace bicoarse {

struct CancellationCertificate {
  std::vector<std::size_t> deleted;                          // ascending
  std::vector<std::pair<std::size_t, std::size_t>> matching;  // i < j, sorted by i

  bool operator==(const CancellationCertificate&) const = default;
};

// O(n^3) interval dynamic program over maximum non-crossing inverse-pair
// matchings; |w|_x = |w| - 2 * M(w). Unreduced input is measured as given.
std::size_t cancellation_length(const Word& w);

std::size_t cancellation_distance(const ReducedWord& w1, const ReducedWord& w2);

// Backtracks the DP, trying matching partners in increasing position before
// falling back to deleting the leftmost letter of the interval.
CancellationCertificate certificate(const Word& w);

// Partition, non-crossing and inverse-pair checks. Returns an empty string
// when the certificate is valid, otherwise a description of the first defect.
std::string verify_certificate(const Word& w, const CancellationCertificate& cert);

inline constexpr std::size_t kDefaultOracleBound = 16;

// Reads BICOARSE_ORACLE_BOUND, falling back to kDefaultOracleBound.
std::size_t oracle_bound_from_env();

// Independent exhaustive search over deletion subsets. Throws
// Error(OracleBoundExceeded) when |w| exceeds the bound.
std::size_t cancellation_length_oracle(const Word& w, std::size_t bound = kDefaultOracleBound);

struct CommutatorEntry {
  long n;
  long m;
  std::size_t norm;
};

// |[a^n, b^m]|_x for 1 <= n <= m <= n_max (the diagonal is included and
// reported as computed).
std::vector<CommutatorEntry> commutator_norm_table(long n_max);

}  // namespace bicoarse
