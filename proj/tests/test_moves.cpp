#include <doctest.h>

#include <deque>
#include <unordered_map>

#include "bicoarse/cancel.hpp"
#include "bicoarse/moves.hpp"
#include "support.hpp"

using namespace bicoarse;
using namespace testkit;

namespace {

std::set<std::vector<Letter>> down(const std::vector<Letter>& w) {
  std::set<std::vector<Letter>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto v = w;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(naive_reduce(v));
  }
  return out;
}

// Move graph restricted to reduced words of length <= L, edges in both
// directions, searched without the cancellations-first shortcut.
class MoveGraph {
 public:
  explicit MoveGraph(std::size_t limit) {
    for (const auto& w : all_reduced(limit)) {
      for (const auto& v : down(w.word().letters())) {
        adj_[w.word().letters()].push_back(v);
        adj_[v].push_back(w.word().letters());
      }
    }
  }

  std::size_t distance(const ReducedWord& a, const ReducedWord& b) const {
    std::map<std::vector<Letter>, std::size_t> seen{{a.word().letters(), 0}};
    std::deque<std::vector<Letter>> queue{a.word().letters()};
    while (!queue.empty()) {
      const auto cur = queue.front();
      queue.pop_front();
      if (cur == b.word().letters()) return seen[cur];
      const auto it = adj_.find(cur);
      if (it == adj_.end()) continue;
      for (const auto& nb : it->second) {
        if (seen.emplace(nb, seen[cur] + 1).second) queue.push_back(nb);
      }
    }
    return SIZE_MAX;
  }

 private:
  std::map<std::vector<Letter>, std::vector<std::vector<Letter>>> adj_;
};

}  // namespace

TEST_CASE("cancellation neighbors") {
  const auto nb = cancellation_neighbors(rw("abAB"));
  CHECK(nb == std::set<ReducedWord>{rw("bAB"), rw("B"), rw("a"), rw("abA")});
  CHECK(cancellation_neighbors(rw("ab")) == std::set<ReducedWord>{rw("a"), rw("b")});
  CHECK(cancellation_neighbors(rw("")).empty());
  for (int i = 0; i < 300; ++i) {
    const ReducedWord w = random_reduced_upto(10);
    std::set<ReducedWord> oracle;
    for (const auto& v : down(w.word().letters())) oracle.insert(ReducedWord::from_reduced(v));
    const auto got = cancellation_neighbors(w);
    CHECK(got == oracle);
    for (const auto& v : got) {
      CHECK(v.size() + 1 <= w.size());
      CHECK(v.size() % 2 == (w.size() + 1) % 2);
    }
  }
}

TEST_CASE("move distance examples") {
  CHECK(move_distance(rw("abAB"), rw(""), 8) == std::optional<std::size_t>(2));
  CHECK(move_distance(rw("abAAB"), rw("abAAB"), 0) == std::optional<std::size_t>(0));
  CHECK_FALSE(move_distance(rw("abAAB"), rw(""), 2).has_value());
  CHECK_THROWS_AS(geodesic_moves(rw("abAAB"), rw(""), 2), Error);
}

TEST_CASE("move distance equals the cancellation metric") {
  for (int i = 0; i < 400; ++i) {
    const ReducedWord a = random_reduced_upto(8);
    const ReducedWord b = random_reduced_upto(8);
    CHECK(move_distance(a, b, 64) == std::optional<std::size_t>(cancellation_distance(a, b)));
  }
}

TEST_CASE("geodesics replay, have normal form and the right length") {
  CHECK(geodesic_moves(rw("ab"), rw("ab")).moves.empty());
  const auto down3 = geodesic_moves(rw("abAAB"), rw(""));
  CHECK(down3.moves.size() == 3);
  for (const auto& m : down3.moves) CHECK(m.kind == MoveKind::Cancellation);
  const auto swap = geodesic_moves(rw("ab"), rw("ba"));
  REQUIRE(swap.moves.size() == 2);
  CHECK(swap.moves[0].kind == MoveKind::Cancellation);
  CHECK(swap.moves[1].kind == MoveKind::Addition);
  for (int i = 0; i < 300; ++i) {
    const ReducedWord a = random_reduced_upto(8);
    const ReducedWord b = random_reduced_upto(8);
    const MoveSequence seq = geodesic_moves(a, b);
    const auto path = replay(seq);
    CHECK(path.front() == a);
    CHECK(path.back() == b);
    CHECK(seq.moves.size() == cancellation_distance(a, b));
    bool seen_addition = false;
    for (std::size_t k = 0; k < seq.moves.size(); ++k) {
      const Move& m = seq.moves[k];
      if (m.kind == MoveKind::Addition) {
        seen_addition = true;
        // an addition is undone by some cancellation on its target
        CHECK(cancellation_neighbors(path[k + 1]).count(path[k]) == 1);
      } else {
        CHECK_FALSE(seen_addition);
        CHECK(path[k + 1].size() < path[k].size());
      }
    }
  }
}

TEST_CASE("cancellations-first distance matches an unrestricted move search") {
  const MoveGraph graph(8);
  for (int i = 0; i < 300; ++i) {
    const ReducedWord a = random_reduced_upto(4);
    const ReducedWord b = random_reduced_upto(4);
    CHECK(graph.distance(a, b) == *move_distance(a, b, 64));
  }
}

TEST_CASE("apply_move rejects moves that do not fit") {
  Move m;
  m.kind = MoveKind::Cancellation;
  m.index = 5;
  CHECK_THROWS_AS(apply_move(rw("ab"), m), Error);
  CHECK(remove_letter(rw("abA"), 1) == rw(""));
}
