#include "randomplay/exact_engine.hpp"

#include <map>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace randomplay {

namespace {

const Evaluation kTerminal{Rational(0), Rational(1)};

}  // namespace

Evaluation combine_from_successors(const ChompBoard& board, const EvalCache& cache) {
  if (board.empty()) return kTerminal;
  Rational expected_sum(0);
  Rational win_sum(0);
  for (const ChompBoard& next : board.successors()) {
    const Evaluation* ev = cache.find(next);
    if (!ev) throw std::logic_error("combine_from_successors: successor not cached");
    expected_sum += ev->expected_turns;
    win_sum += 1 - ev->win_prob;
  }
  const Rational moves(static_cast<long>(board.cell_count()));
  return Evaluation{1 + expected_sum / moves, win_sum / moves};
}

Evaluation evaluate(const ChompBoard& board, EvalCache& cache) {
  if (const Evaluation* hit = cache.find(board)) return *hit;

  // Discover the uncached positions reachable from `board` with an explicit
  // frontier (depth is bounded only by memory, not the call stack), bucketed
  // by cell count.
  std::unordered_set<ChompBoard, ChompBoardHash> seen{board};
  std::vector<ChompBoard> frontier{board};
  std::map<std::int64_t, std::vector<ChompBoard>> levels;
  while (!frontier.empty()) {
    ChompBoard current = std::move(frontier.back());
    frontier.pop_back();
    const std::int64_t cells = current.cell_count();
    if (cells > 0) {
      for (ChompBoard& next : current.successors())
        if (!cache.find(next) && seen.insert(next).second)
          frontier.push_back(std::move(next));
    }
    levels[cells].push_back(std::move(current));
  }

  // Topological evaluation: smaller boards first, so every successor is
  // already cached when its parents combine.
  for (auto& [cells, boards] : levels)
    for (const ChompBoard& current : boards)
      cache.insert(current, combine_from_successors(current, cache));
  return *cache.find(board);
}

Rational expected_turns_exact(const ChompBoard& board, EvalCache& cache) {
  return evaluate(board, cache).expected_turns;
}

Rational win_prob_exact(const ChompBoard& board, EvalCache& cache) {
  return evaluate(board, cache).win_prob;
}

Rational player1_win_prob(const ChompBoard& board) {
  EvalCache cache;
  return win_prob_exact(board, cache);
}

}  // namespace randomplay
