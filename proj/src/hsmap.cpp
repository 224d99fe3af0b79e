#include "bicoarse/hsmap.hpp"

#include <algorithm>

#include "bicoarse/cancel.hpp"

namespace bicoarse {

PieceSet::PieceSet(std::vector<ReducedWord> pieces) : pieces_(std::move(pieces)) {
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].empty()) throw Error(ErrorKind::InvalidPieceSet, "piece " + std::to_string(i) + " is empty");
    if (is_self_overlapping(pieces_[i])) {
      throw Error(ErrorKind::InvalidPieceSet, "piece " + to_string(pieces_[i]) + " is self-overlapping");
    }
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces_.size(); ++j) {
      if (overlaps(pieces_[i], pieces_[j])) {
        throw Error(ErrorKind::InvalidPieceSet,
                    "pieces " + to_string(pieces_[i]) + " and " + to_string(pieces_[j]) + " overlap");
      }
    }
  }
}

std::vector<Factor> decompose(const ReducedWord& v, const PieceSet& pieces) {
  // Occurrences of distinct pieces are disjoint under the PieceSet invariants.
  std::vector<std::pair<std::size_t, std::size_t>> hits;  // (start, piece)
  for (std::size_t p = 0; p < pieces.pieces().size(); ++p) {
    for (std::size_t start : occurrence_positions(v, pieces.pieces()[p])) hits.emplace_back(start, p);
  }
  std::sort(hits.begin(), hits.end());

  std::vector<Factor> out;
  const Word& w = v.word();
  std::size_t cursor = 0;
  for (auto [start, p] : hits) {
    if (start > cursor) out.push_back({ReducedWord::from_reduced(w.slice(cursor, start - cursor).letters()), {}});
    out.push_back({pieces.pieces()[p], p});
    cursor = start + pieces.pieces()[p].size();
  }
  if (cursor < w.size()) out.push_back({ReducedWord::from_reduced(w.slice(cursor, w.size() - cursor).letters()), {}});
  return out;
}

namespace {

PieceSet replacement_pieces(const ReducedWord& w1, const ReducedWord& w2) {
  if (w1.empty() || w2.empty()) throw Error(ErrorKind::InvalidPieceSet, "replacement words must be nonempty");
  if (w1[0] != w2[0] || w1[w1.size() - 1] != w2[w2.size() - 1]) {
    throw Error(ErrorKind::InvalidPieceSet,
                to_string(w1) + " and " + to_string(w2) + " must share their first and their last letter");
  }
  return PieceSet({w1, invert(w1), w2, invert(w2)});
}

}  // namespace

ReplacementRule::ReplacementRule(ReducedWord w1, ReducedWord w2)
    : w1_(std::move(w1)), w2_(std::move(w2)), pieces_(replacement_pieces(w1_, w2_)) {}

ReducedWord replacement_apply(const ReplacementRule& rule, const ReducedWord& g) {
  // Piece order is w1, w1⁻¹, w2, w2⁻¹; swapping pairs 0 <-> 2 and 1 <-> 3.
  static constexpr std::size_t kSwap[] = {2, 3, 0, 1};
  std::vector<Letter> out;
  for (const Factor& f : decompose(g, rule.pieces())) {
    const ReducedWord& image = f.piece ? rule.pieces().pieces()[kSwap[*f.piece]] : f.word;
    out.insert(out.end(), image.begin(), image.end());
  }
  return reduce(Word(std::move(out)));
}

void validate_base(const ReducedWord& v) {
  if (v.empty()) throw Error(ErrorKind::InvalidBase, "wobbling base must be nonempty");
  if (!is_cyclically_reduced(v)) throw Error(ErrorKind::InvalidBase, to_string(v) + " is not cyclically reduced");
  if (is_self_overlapping(v)) throw Error(ErrorKind::InvalidBase, to_string(v) + " is self-overlapping");
}

namespace {

bool matches_at(const Word& w, std::size_t pos, const Word& pattern) {
  return pos + pattern.size() <= w.size() &&
         std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(pos));
}

}  // namespace

PowerDecomposition power_decompose(const ReducedWord& w, const ReducedWord& v) {
  validate_base(v);
  const Word vinv = invert(v.word());
  PowerDecomposition d;
  std::vector<Letter> gap;
  std::size_t i = 0;
  while (i < w.size()) {
    const Word* block = nullptr;
    long sign = 0;
    if (matches_at(w, i, v)) {
      block = &v.word();
      sign = 1;
    } else if (matches_at(w, i, vinv)) {
      block = &vinv;
      sign = -1;
    }
    if (!block) {
      gap.push_back(w[i++]);
      continue;
    }
    long count = 0;
    while (matches_at(w, i, *block)) {
      ++count;
      i += block->size();
    }
    d.gaps.push_back(ReducedWord::from_reduced(std::move(gap)));
    gap.clear();
    d.exponents.push_back(sign * count);
  }
  d.gaps.push_back(ReducedWord::from_reduced(std::move(gap)));
  return d;
}

Word reassemble(const PowerDecomposition& d, const ReducedWord& v) {
  std::vector<Letter> out(d.gaps.front().begin(), d.gaps.front().end());
  for (std::size_t i = 0; i < d.exponents.size(); ++i) {
    const ReducedWord block = power(v, d.exponents[i]);
    out.insert(out.end(), block.begin(), block.end());
    out.insert(out.end(), d.gaps[i + 1].begin(), d.gaps[i + 1].end());
  }
  return Word(std::move(out));
}

Wobble::Wobble(ReducedWord v, std::map<long, long> sigma) : v_(std::move(v)), sigma_(std::move(sigma)) {
  validate_base(v_);
  std::vector<long> images;
  for (auto it = sigma_.begin(); it != sigma_.end();) {
    if (it->first < 1 || it->second < 1) throw Error(ErrorKind::InvalidRule, "sigma acts on positive integers");
    if (it->first == it->second) {
      it = sigma_.erase(it);
      continue;
    }
    images.push_back(it->second);
    ++it;
  }
  std::sort(images.begin(), images.end());
  std::vector<long> support;
  for (const auto& [k, image] : sigma_) support.push_back(k);
  if (images != support) throw Error(ErrorKind::InvalidRule, "sigma does not permute its support");
}

long Wobble::apply(long k) const {
  if (k == 0) return 0;
  const long magnitude = k > 0 ? k : -k;
  auto it = sigma_.find(magnitude);
  const long image = it == sigma_.end() ? magnitude : it->second;
  return k > 0 ? image : -image;
}

Wobble Wobble::inverse() const {
  std::map<long, long> inv;
  for (const auto& [k, image] : sigma_) inv.emplace(image, k);
  return Wobble(v_, std::move(inv));
}

WobbleResult wobbling_apply_raw(const Wobble& wob, const ReducedWord& g) {
  PowerDecomposition d = power_decompose(g, wob.base());
  for (long& k : d.exponents) k = wob.apply(k);
  Word raw = reassemble(d, wob.base());
  ReducedWord reduced = reduce(raw);
  return {std::move(raw), std::move(reduced)};
}

ReducedWord wobbling_apply(const Wobble& wob, const ReducedWord& g) {
  return wobbling_apply_raw(wob, g).reduced;
}

LocalRule::LocalRule(std::size_t k, std::map<Word, ReducedWord> table) : k_(k), table_(std::move(table)) {
  if (k_ == 0) throw Error(ErrorKind::InvalidRule, "window length must be positive");
  for (auto it = table_.begin(); it != table_.end();) {
    if (it->first.size() != k_) {
      throw Error(ErrorKind::InvalidRule, "window " + to_string(it->first) + " has length != " + std::to_string(k_));
    }
    it = it->second.empty() ? table_.erase(it) : std::next(it);
  }
  for (const auto& [u, image] : table_) {
    if ((*this)(invert(u)) != invert(image)) {
      throw Error(ErrorKind::AsymmetricRule, "r(" + to_string(invert(u)) + ") must equal r(" + to_string(u) + ")^-1 = " +
                                                 to_string(invert(image)));
    }
  }
}

const ReducedWord& LocalRule::operator()(const Word& window) const {
  static const ReducedWord kIdentity;
  auto it = table_.find(window);
  return it == table_.end() ? kIdentity : it->second;
}

ReducedWord local_apply(const LocalRule& rule, const ReducedWord& g) {
  const std::size_t k = rule.window();
  if (g.size() < k) return {};
  std::vector<Letter> out;
  for (std::size_t i = 0; i + k <= g.size(); ++i) {
    const ReducedWord& image = rule(g.word().slice(i, k));
    out.insert(out.end(), image.begin(), image.end());
  }
  return reduce(Word(std::move(out)));
}

std::size_t hs_criterion_norm(const WordMap& f, const ReducedWord& w1, const ReducedWord& w2) {
  const ReducedWord joint = f(multiply(w1, w2));
  const ReducedWord split = multiply(f(w1), f(w2));
  return cancellation_length(multiply(joint, invert(split)));
}

}  // namespace bicoarse
