#include "randomplay/exact_engine.hpp"

#include <stdexcept>

#include "doctest.h"

#include "oracles.hpp"
#include "randomplay/analysis.hpp"
#include "randomplay/closed_form.hpp"

using namespace randomplay;

TEST_CASE("expected turns base cases and small boards") {
  EvalCache cache;
  CHECK(expected_turns_exact(ChompBoard{}, cache) == Rational(0));
  CHECK(expected_turns_exact(ChompBoard({1}), cache) == Rational(1));
  // 2x2 board: frozen from the tree-walk oracle, and H_2 * H_2.
  CHECK(oracles::naive_expected_turns(ChompBoard({2, 2})) == make_rational(9, 4));
  CHECK(expected_turns_exact(ChompBoard({2, 2}), cache) == make_rational(9, 4));
  CHECK(harmonic(2) * harmonic(2) == make_rational(9, 4));
}

TEST_CASE("win probability base cases and small boards") {
  EvalCache cache;
  CHECK(win_prob_exact(ChompBoard{}, cache) == Rational(1));
  CHECK(win_prob_exact(ChompBoard({1}), cache) == Rational(0));
  CHECK(oracles::naive_win_prob(ChompBoard({2, 1})) == make_rational(1, 3));
  CHECK(win_prob_exact(ChompBoard({2, 1}), cache) == make_rational(1, 3));
}

TEST_CASE("player1_win_prob named convenience") {
  CHECK(player1_win_prob(ChompBoard({1, 1})) == make_rational(1, 2));
  CHECK(player1_win_prob(ChompBoard({2})) == make_rational(1, 2));
  CHECK(player1_win_prob(ChompBoard{}) == Rational(1));
}

TEST_CASE("engine agrees with the unmemoized tree walk") {
  EvalCache cache;
  for (std::int64_t n = 0; n <= 7; ++n) {
    for (const ChompBoard& board : enumerate_boards(n)) {
      CHECK(expected_turns_exact(board, cache) == oracles::naive_expected_turns(board));
      CHECK(win_prob_exact(board, cache) == oracles::naive_win_prob(board));
    }
  }
}

TEST_CASE("recurrence invariants on all boards up to 9 cells") {
  EvalCache cache;
  for (std::int64_t n = 1; n <= 9; ++n) {
    for (const ChompBoard& board : enumerate_boards(n)) {
      const Evaluation eval = evaluate(board, cache);
      // Restated probability recurrence: both sides recomputed.
      Rational sum(0);
      for (const ChompBoard& next : board.successors())
        sum += win_prob_exact(next, cache);
      const Rational cells(static_cast<long>(board.cell_count()));
      CHECK(eval.win_prob == 1 - sum / cells);
      CHECK(eval.win_prob >= 0);
      CHECK(eval.win_prob <= 1);
      CHECK(eval.expected_turns >= 0);
      CHECK(eval.expected_turns <= cells);
    }
  }
}

TEST_CASE("cell-sum formula matches the engine exhaustively") {
  EvalCache cache;
  for (std::int64_t n = 0; n <= 12; ++n)
    for (const ChompBoard& board : enumerate_boards(n))
      CHECK(expected_turns_exact(board, cache) == expected_turns_formula(board));
}

TEST_CASE("two-row closed form matches the engine") {
  EvalCache cache;
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      std::vector<std::int64_t> rows{n};
      if (k > 0) rows.push_back(k);
      CHECK(win_prob_exact(ChompBoard(rows), cache) == win_prob_two_row(n, k));
    }
  }
}

TEST_CASE("deep thin boards evaluate without call-stack recursion") {
  EvalCache cache;
  CHECK(expected_turns_exact(ChompBoard({300}), cache) == harmonic(300));
  CHECK(win_prob_exact(ChompBoard({300}), cache) == make_rational(1, 2));
  std::vector<std::int64_t> two_hundred_ones(200, 1);
  CHECK(expected_turns_exact(ChompBoard(two_hundred_ones), cache) ==
        expected_turns_formula(ChompBoard(two_hundred_ones)));
}

TEST_CASE("cache transparency") {
  const ChompBoard board({4, 3, 1});
  EvalCache fresh;
  const Evaluation cold = evaluate(board, fresh);

  EvalCache warm;
  warm_cache_levelwise(warm, 10, 2);
  const std::size_t before = warm.size();
  const Evaluation warmed = evaluate(board, warm);
  CHECK(cold.expected_turns == warmed.expected_turns);
  CHECK(cold.win_prob == warmed.win_prob);
  CHECK(warm.size() == before);  // fully cached, nothing recomputed
}

TEST_CASE("combine_from_successors requires cached children") {
  EvalCache cache;
  CHECK_THROWS_AS(combine_from_successors(ChompBoard({2, 1}), cache), std::logic_error);
  evaluate(ChompBoard({2, 1}), cache);
  CHECK(combine_from_successors(ChompBoard({2, 1}), cache).win_prob ==
        make_rational(1, 3));
}
