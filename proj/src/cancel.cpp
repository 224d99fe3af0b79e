#include "bicoarse/cancel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace bicoarse {

namespace {

// M(i, j) over half-open intervals [i, j), stored row-major in (n+1)^2 cells.
class MatchingTable {
 public:
  explicit MatchingTable(const Word& w) : w_(w), n_(w.size()), cells_((n_ + 1) * (n_ + 1), 0) {
    // partners_[i]: positions k > i with w[k] = w[i]⁻¹, ascending.
    partners_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t k = i + 1; k < n_; ++k) {
        if (w_[k].is_inverse_of(w_[i])) partners_[i].push_back(k);
      }
    }
    for (std::size_t i = n_; i-- > 0;) {
      for (std::size_t j = i + 1; j <= n_; ++j) {
        std::uint32_t best = at(i + 1, j);
        for (std::size_t k : partners_[i]) {
          if (k >= j) break;
          best = std::max(best, 1 + at(i + 1, k) + at(k + 1, j));
        }
        cell(i, j) = best;
      }
    }
  }

  std::uint32_t at(std::size_t i, std::size_t j) const { return i >= j ? 0 : cells_[i * (n_ + 1) + j]; }
  const std::vector<std::size_t>& partners(std::size_t i) const { return partners_[i]; }
  std::size_t size() const { return n_; }

 private:
  std::uint32_t& cell(std::size_t i, std::size_t j) { return cells_[i * (n_ + 1) + j]; }

  const Word& w_;
  std::size_t n_;
  std::vector<std::uint32_t> cells_;
  std::vector<std::vector<std::size_t>> partners_;
};

}  // namespace

std::size_t cancellation_length(const Word& w) {
  if (w.empty()) return 0;
  MatchingTable table(w);
  return w.size() - 2 * table.at(0, w.size());
}

std::size_t cancellation_distance(const ReducedWord& w1, const ReducedWord& w2) {
  return cancellation_length(multiply(invert(w1), w2));
}

CancellationCertificate certificate(const Word& w) {
  CancellationCertificate cert;
  if (w.empty()) return cert;
  MatchingTable table(w);
  std::vector<std::pair<std::size_t, std::size_t>> pending{{0, w.size()}};
  while (!pending.empty()) {
    auto [i, j] = pending.back();
    pending.pop_back();
    if (i >= j) continue;
    const std::uint32_t target = table.at(i, j);
    bool matched = false;
    for (std::size_t k : table.partners(i)) {
      if (k >= j) break;
      if (1 + table.at(i + 1, k) + table.at(k + 1, j) == target) {
        cert.matching.emplace_back(i, k);
        pending.emplace_back(k + 1, j);
        pending.emplace_back(i + 1, k);
        matched = true;
        break;
      }
    }
    if (!matched) {
      cert.deleted.push_back(i);
      pending.emplace_back(i + 1, j);
    }
  }
  std::sort(cert.deleted.begin(), cert.deleted.end());
  std::sort(cert.matching.begin(), cert.matching.end());
  return cert;
}

std::string verify_certificate(const Word& w, const CancellationCertificate& cert) {
  std::vector<int> seen(w.size(), 0);
  for (std::size_t p : cert.deleted) {
    if (p >= w.size()) return "deleted position " + std::to_string(p) + " out of range";
    ++seen[p];
  }
  for (auto [i, j] : cert.matching) {
    if (i >= j || j >= w.size()) return "bad pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
    if (!w[i].is_inverse_of(w[j])) {
      return "pair (" + std::to_string(i) + "," + std::to_string(j) + ") is not an inverse pair";
    }
    ++seen[i];
    ++seen[j];
  }
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (seen[p] != 1) return "position " + std::to_string(p) + " covered " + std::to_string(seen[p]) + " times";
  }
  for (std::size_t a = 0; a < cert.matching.size(); ++a) {
    for (std::size_t b = 0; b < cert.matching.size(); ++b) {
      auto [i, j] = cert.matching[a];
      auto [k, l] = cert.matching[b];
      if (i < k && k < j && j < l) {
        return "pairs (" + std::to_string(i) + "," + std::to_string(j) + ") and (" + std::to_string(k) + "," +
               std::to_string(l) + ") cross";
      }
    }
  }
  if (w.size() != cert.deleted.size() + 2 * cert.matching.size()) return "size mismatch";
  return {};
}

std::size_t oracle_bound_from_env() {
  if (const char* env = std::getenv("BICOARSE_ORACLE_BOUND")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultOracleBound;
}

namespace {

// Branch and bound over keep/delete decisions, carrying the free-reduction
// stack of the kept letters.
class DeletionSearch {
 public:
  explicit DeletionSearch(const Word& w) : w_(w), best_(w.size()) {}

  std::size_t run() {
    std::vector<Letter> stack;
    visit(0, 0, stack);
    return best_;
  }

 private:
  // The kept letters still on the stack must be cancelled, innermost first,
  // by later letters.
  bool can_clear(std::size_t pos, const std::vector<Letter>& stack) const {
    std::size_t need = stack.size();
    for (std::size_t p = pos; p < w_.size() && need > 0; ++p) {
      if (w_[p].is_inverse_of(stack[need - 1])) --need;
    }
    return need == 0;
  }

  void visit(std::size_t pos, std::size_t deleted, std::vector<Letter>& stack) {
    const std::size_t remaining = w_.size() - pos;
    if (stack.size() > remaining) return;
    // Future deletions have the parity of remaining - |stack|.
    if (deleted + (remaining - stack.size()) % 2 >= best_) return;
    if (!can_clear(pos, stack)) return;
    if (pos == w_.size()) {
      best_ = deleted;
      return;
    }
    const Letter x = w_[pos];
    if (!stack.empty() && stack.back().is_inverse_of(x)) {
      stack.pop_back();
      visit(pos + 1, deleted, stack);
      stack.push_back(x.inverse());
    } else {
      stack.push_back(x);
      visit(pos + 1, deleted, stack);
      stack.pop_back();
    }
    visit(pos + 1, deleted + 1, stack);
  }

  const Word& w_;
  std::size_t best_;
};

}  // namespace

std::size_t cancellation_length_oracle(const Word& w, std::size_t bound) {
  if (w.size() > bound) {
    throw Error(ErrorKind::OracleBoundExceeded,
                "oracle bound " + std::to_string(bound) + " exceeded by word of length " + std::to_string(w.size()));
  }
  return DeletionSearch(w).run();
}

std::vector<CommutatorEntry> commutator_norm_table(long n_max) {
  if (n_max < 2) throw Error(ErrorKind::InvalidInput, "commutator table needs n_max >= 2");
  const Letter a(0, 1);
  const Letter b(1, 1);
  std::vector<CommutatorEntry> out;
  for (long n = 1; n <= n_max; ++n) {
    for (long m = n; m <= n_max; ++m) {
      const ReducedWord an = power(ReducedWord::from_reduced({a}), n);
      const ReducedWord bm = power(ReducedWord::from_reduced({b}), m);
      out.push_back({n, m, cancellation_length(commutator(an, bm))});
    }
  }
  return out;
}

}  // namespace bicoarse
