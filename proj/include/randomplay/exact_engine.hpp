#pragma once

#include <unordered_map>

#include "randomplay/board.hpp"
#include "randomplay/rational.hpp"

namespace randomplay {

/// Exact expected game length and next-player win probability of a position.
struct Evaluation {
  Rational expected_turns;
  Rational win_prob;
};

/// Pure memo table keyed on the canonical partition form. Not synchronized:
/// confine a cache to one evaluation at a time. Entries are pure values, so
/// read-only sharing (e.g. by the level-parallel scans in analysis) is safe
/// once no writer is active.
class EvalCache {
 public:
  const Evaluation* find(const ChompBoard& board) const {
    auto it = map_.find(board);
    return it == map_.end() ? nullptr : &it->second;
  }

  void insert(const ChompBoard& board, Evaluation value) {
    map_.emplace(board, std::move(value));
  }

  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<ChompBoard, Evaluation, ChompBoardHash> map_;
};

/// Evaluates a board by dynamic programming over the game DAG: reachable
/// uncached positions are discovered with an explicit frontier (no
/// call-stack recursion, so deep thin boards are fine) and combined in
/// increasing cell count. Both quantities are computed together: they share
/// the successor walk.
///
///   E[B] = 0 if B empty, else 1 + (1/|B|) * sum over moves of E[D]
///   P[B] = 1 if B empty, else (1/|B|) * sum over moves of (1 - P[D])
Evaluation evaluate(const ChompBoard& board, EvalCache& cache);

Rational expected_turns_exact(const ChompBoard& board, EvalCache& cache);
Rational win_prob_exact(const ChompBoard& board, EvalCache& cache);

/// Win probability from the starting position with a fresh cache: the same
/// quantity as win_prob_exact, named for the player who moves first.
Rational player1_win_prob(const ChompBoard& board);

/// Single-step combination assuming every successor is already cached; reads
/// the cache without writing. Throws std::logic_error on a cache miss.
/// This is the kernel the level-parallel scans run concurrently.
Evaluation combine_from_successors(const ChompBoard& board, const EvalCache& cache);

}  // namespace randomplay
