#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "json.hpp"

#include "randomplay/board.hpp"
#include "randomplay/counter_rng.hpp"
#include "randomplay/nim.hpp"

namespace randomplay {

enum class GameKind { chomp, nim };

enum class Winner { first, second };

struct GameResult {
  std::int64_t turns = 0;
  Winner winner = Winner::first;
};

/// Plays one full random-play game of Chomp: each turn a uniformly random
/// cell index is mapped through the row-major cell order and chomped. The
/// player who takes the top-left cell (the last move) loses. Requires a
/// non-empty board.
GameResult play_one_game(const ChompBoard& board, PhiloxStream& rng);

/// Optional pile-selection hook: picks a non-empty pile index given the
/// current pile sizes. When unset, moves are uniform over all (pile, amount)
/// pairs, which selects pile j with probability s_j / N.
using PileSelector =
    std::function<std::size_t(const std::vector<std::int64_t>& piles, PhiloxStream& rng)>;

/// Plays one full random-play game of nim. With a selector, the pile comes
/// from the hook and the amount is uniform on [1, pile size]. The winner
/// follows the position's convention: under misere the player who takes the
/// last token loses; under normal they win. Requires a non-empty position.
GameResult play_one_game(const NimPosition& pos, PhiloxStream& rng,
                         const PileSelector& selector = {});

struct SimConfig {
  GameKind game = GameKind::chomp;
  ChompBoard board;    // used when game == chomp
  NimPosition piles;   // used when game == nim (carries the convention)
  std::int64_t num_games = 1;
  std::uint64_t seed = 0;
};

struct SimReport {
  double mean_turns = 0.0;
  double stderr_turns = 0.0;
  double first_player_win_rate = 0.0;
  double stderr_win = 0.0;
  std::int64_t num_games = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> turn_histogram;  // sorted by turns
};

/// Serial reference runner: one game after another, game g drawing from the
/// counter-based stream (seed, g).
SimReport run_simulation_serial(const SimConfig& config);

/// OpenMP runner. Per-game randomness comes from the same (seed, game index)
/// streams and all accumulators are integers, so the merged report is
/// byte-identical to the serial reference for every thread count.
/// threads <= 0 uses the OpenMP default.
SimReport run_simulation(const SimConfig& config, int threads = 0);

/// Compact JSON with alphabetical keys; the bytes are the reproducibility
/// contract checked by the tests.
nlohmann::json report_to_json(const SimReport& report);

}  // namespace randomplay
