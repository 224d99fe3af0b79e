#include "bicoarse/moves.hpp"

#include <algorithm>
#include <map>

namespace bicoarse {

ReducedWord remove_letter(const ReducedWord& w, std::size_t index) {
  if (index >= w.size()) throw Error(ErrorKind::InvalidInput, "cancellation index out of range");
  std::vector<Letter> letters;
  letters.reserve(w.size() - 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != index) letters.push_back(w[i]);
  }
  return reduce(Word(std::move(letters)));
}

std::set<ReducedWord> cancellation_neighbors(const ReducedWord& w) {
  std::set<ReducedWord> out;
  for (std::size_t i = 0; i < w.size(); ++i) out.insert(remove_letter(w, i));
  return out;
}

ReducedWord apply_move(const ReducedWord& source, const Move& move) {
  if (move.kind == MoveKind::Cancellation) return remove_letter(source, move.index);
  if (move.split > source.size()) throw Error(ErrorKind::InvalidInput, "addition split out of range");
  const Word& s = source.word();
  Word inserted = concat(concat(move.conjugator.word(), Word{move.letter}), invert(move.conjugator.word()));
  Word full = concat(concat(s.slice(0, move.split), inserted), s.slice(move.split, s.size() - move.split));
  return reduce(full);
}

std::vector<ReducedWord> replay(const MoveSequence& seq) {
  std::vector<ReducedWord> chain{seq.start};
  for (const Move& m : seq.moves) chain.push_back(apply_move(chain.back(), m));
  return chain;
}

namespace {

struct Visit {
  std::size_t depth;
  ReducedWord parent;
  std::size_t index;  // letter removed from parent
};

// Breadth-first search along cancellation moves only. Word length strictly
// decreases along every edge, so the search terminates without a visited
// check on longer words.
std::map<ReducedWord, Visit> downward_search(const ReducedWord& root, std::size_t cap) {
  std::map<ReducedWord, Visit> seen;
  seen.emplace(root, Visit{0, root, 0});
  std::vector<ReducedWord> frontier{root};
  for (std::size_t depth = 1; depth <= cap && !frontier.empty(); ++depth) {
    std::vector<ReducedWord> next;
    for (const ReducedWord& w : frontier) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        ReducedWord z = remove_letter(w, i);
        if (seen.emplace(z, Visit{depth, w, i}).second) next.push_back(std::move(z));
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  return seen;
}

struct Meeting {
  std::size_t distance;
  ReducedWord point;
};

std::optional<Meeting> meet(const std::map<ReducedWord, Visit>& from1, const std::map<ReducedWord, Visit>& from2,
                            std::size_t cap) {
  std::optional<Meeting> best;
  // std::map iterates shortlex, so the first minimum found is the tie-break winner.
  for (const auto& [z, v1] : from1) {
    auto it = from2.find(z);
    if (it == from2.end()) continue;
    const std::size_t d = v1.depth + it->second.depth;
    if (d <= cap && (!best || d < best->distance)) best = Meeting{d, z};
  }
  return best;
}

// Cancellation moves from root down to target, in order.
std::vector<std::pair<ReducedWord, std::size_t>> path_down(const std::map<ReducedWord, Visit>& tree,
                                                           const ReducedWord& target) {
  std::vector<std::pair<ReducedWord, std::size_t>> steps;  // (source word, removed index)
  ReducedWord cur = target;
  while (tree.at(cur).depth > 0) {
    const Visit& v = tree.at(cur);
    steps.emplace_back(v.parent, v.index);
    cur = v.parent;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

// Addition taking reduce(y minus letter i) back to y.
Move reverse_cancellation(const ReducedWord& y, std::size_t i) {
  std::size_t c = 0;
  while (c < i && i + 1 + c < y.size() && y[i - 1 - c].is_inverse_of(y[i + 1 + c])) ++c;
  Move m;
  m.kind = MoveKind::Addition;
  m.split = i - c;
  m.conjugator = ReducedWord::from_reduced(y.word().slice(i - c, c).letters());
  m.letter = y[i];
  return m;
}

}  // namespace

std::optional<std::size_t> move_distance(const ReducedWord& w1, const ReducedWord& w2, std::size_t cap) {
  if (w1 == w2) return 0;
  auto m = meet(downward_search(w1, cap), downward_search(w2, cap), cap);
  if (!m) return std::nullopt;
  return m->distance;
}

MoveSequence geodesic_moves(const ReducedWord& w1, const ReducedWord& w2, std::size_t cap) {
  MoveSequence seq{w1, {}};
  if (w1 == w2) return seq;
  const auto tree1 = downward_search(w1, cap);
  const auto tree2 = downward_search(w2, cap);
  auto m = meet(tree1, tree2, cap);
  if (!m) throw Error(ErrorKind::Unreached, "move distance exceeds cap " + std::to_string(cap));
  for (const auto& [source, index] : path_down(tree1, m->point)) {
    Move mv;
    mv.kind = MoveKind::Cancellation;
    mv.index = index;
    seq.moves.push_back(mv);
  }
  auto back = path_down(tree2, m->point);
  for (auto it = back.rbegin(); it != back.rend(); ++it) seq.moves.push_back(reverse_cancellation(it->first, it->second));
  return seq;
}

}  // namespace bicoarse
