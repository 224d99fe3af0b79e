#pragma once

// Move calculus on reduced words. A cancellation move deletes one letter and
// reduces; an addition move is the inverse. The move-graph distance equals
// the cancellation distance, and every geodesic can be reordered so that all
// cancellations come first, so distances are found by intersecting two
// cancellation-only (length-decreasing) searches.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "bicoarse/word.hpp"

namespace bicoarse {

enum class MoveKind { Cancellation, Addition };

struct Move {
  MoveKind kind = MoveKind::Cancellation;
  // Cancellation: index of the removed letter in the source word.
  std::size_t index = 0;
  // Addition: source = p·s, target = reduce(p · conjugator · letter · conjugator⁻¹ · s)
  // with |p| = split.
  std::size_t split = 0;
  ReducedWord conjugator;
  Letter letter;

  bool operator==(const Move&) const = default;
};

struct MoveSequence {
  ReducedWord start;
  std::vector<Move> moves;
};

// Applies a single move; throws Error(InvalidInput) when the move does not fit.
ReducedWord apply_move(const ReducedWord& source, const Move& move);
// Every intermediate word, beginning with seq.start.
std::vector<ReducedWord> replay(const MoveSequence& seq);

ReducedWord remove_letter(const ReducedWord& w, std::size_t index);
std::set<ReducedWord> cancellation_neighbors(const ReducedWord& w);

// nullopt when the distance exceeds cap.
std::optional<std::size_t> move_distance(const ReducedWord& w1, const ReducedWord& w2, std::size_t cap);

// All cancellations first, then additions realized as reversed cancellations
// towards w2. Meeting point: shortest, then shortlex least. Throws
// Error(Unreached) when the distance exceeds cap.
MoveSequence geodesic_moves(const ReducedWord& w1, const ReducedWord& w2, std::size_t cap = 64);

}  // namespace bicoarse
