#include "randomplay/montecarlo.hpp"

#include <omp.h>

#include <cmath>
#include <map>
#include <stdexcept>

namespace randomplay {

GameResult play_one_game(const ChompBoard& board, PhiloxStream& rng) {
  if (board.empty())
    throw std::invalid_argument("play_one_game: chomp needs a non-empty board");
  std::vector<std::int64_t> rows = board.rows();
  std::int64_t remaining = board.cell_count();
  std::int64_t turns = 0;
  while (remaining > 0) {
    std::int64_t index =
        static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(remaining)));
    Cell cell{1, 1};
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (index < rows[r]) {
        cell = Cell{static_cast<std::int64_t>(r + 1), index + 1};
        break;
      }
      index -= rows[r];
    }
    remaining -= chomp_in_place(rows, cell);
    ++turns;
  }
  // The last move took the top-left cell and lost; moves alternate starting
  // with player one.
  const Winner winner = (turns % 2 == 0) ? Winner::first : Winner::second;
  return GameResult{turns, winner};
}

GameResult play_one_game(const NimPosition& pos, PhiloxStream& rng,
                         const PileSelector& selector) {
  if (pos.empty())
    throw std::invalid_argument("play_one_game: nim needs a non-empty position");
  std::vector<std::int64_t> piles = pos.piles();
  std::int64_t remaining = pos.total_tokens();
  std::int64_t turns = 0;
  while (remaining > 0) {
    std::size_t pile = 0;
    std::int64_t amount = 0;
    if (selector) {
      pile = selector(piles, rng);
      if (pile >= piles.size() || piles[pile] < 1)
        throw std::invalid_argument("play_one_game: selector picked an empty pile");
      amount = 1 + static_cast<std::int64_t>(
                       rng.uniform_below(static_cast<std::uint64_t>(piles[pile])));
    } else {
      // Uniform over all N moves: token index -> (pile, amount).
      std::int64_t index =
          static_cast<std::int64_t>(rng.uniform_below(static_cast<std::uint64_t>(remaining)));
      while (index >= piles[pile]) index -= piles[pile++];
      amount = index + 1;
    }
    piles[pile] -= amount;
    remaining -= amount;
    ++turns;
  }
  const bool last_mover_first = (turns % 2 == 1);
  const bool last_mover_wins = pos.convention() == PlayConvention::normal;
  const Winner winner =
      (last_mover_first == last_mover_wins) ? Winner::first : Winner::second;
  return GameResult{turns, winner};
}

namespace {

// Integer accumulators only: merging is commutative and exact, so the final
// report cannot depend on scheduling.
struct Accumulator {
  std::uint64_t turns_sum = 0;
  unsigned __int128 turns_sq_sum = 0;
  std::uint64_t first_wins = 0;
  std::map<std::int64_t, std::int64_t> histogram;

  void add(const GameResult& result) {
    turns_sum += static_cast<std::uint64_t>(result.turns);
    turns_sq_sum += static_cast<unsigned __int128>(result.turns) *
                    static_cast<unsigned __int128>(result.turns);
    if (result.winner == Winner::first) ++first_wins;
    ++histogram[result.turns];
  }

  void merge(const Accumulator& other) {
    turns_sum += other.turns_sum;
    turns_sq_sum += other.turns_sq_sum;
    first_wins += other.first_wins;
    for (const auto& [turns, count] : other.histogram) histogram[turns] += count;
  }
};

void validate(const SimConfig& config) {
  if (config.num_games < 1)
    throw std::invalid_argument("run_simulation: num_games must be >= 1");
  if (config.game == GameKind::chomp && config.board.empty())
    throw std::invalid_argument("run_simulation: chomp needs a non-empty board");
  if (config.game == GameKind::nim && config.piles.empty())
    throw std::invalid_argument("run_simulation: nim needs a non-empty position");
}

GameResult play_game_at(const SimConfig& config, std::int64_t game_index) {
  PhiloxStream rng(config.seed, static_cast<std::uint64_t>(game_index));
  return config.game == GameKind::chomp ? play_one_game(config.board, rng)
                                        : play_one_game(config.piles, rng);
}

SimReport build_report(const SimConfig& config, const Accumulator& acc) {
  SimReport report;
  report.num_games = config.num_games;
  report.seed = config.seed;
  const long double n = static_cast<long double>(config.num_games);
  const long double sum = static_cast<long double>(acc.turns_sum);
  const long double sq_sum = static_cast<long double>(acc.turns_sq_sum);
  report.mean_turns = static_cast<double>(sum / n);
  const long double win_rate = static_cast<long double>(acc.first_wins) / n;
  report.first_player_win_rate = static_cast<double>(win_rate);
  if (config.num_games > 1) {
    long double variance = (sq_sum - sum * sum / n) / (n - 1);
    if (variance < 0) variance = 0;  // guard rounding in the exact-mean case
    report.stderr_turns = static_cast<double>(std::sqrt(variance / n));
    long double win_variance = win_rate * (1 - win_rate) * n / (n - 1);
    report.stderr_win = static_cast<double>(std::sqrt(win_variance / n));
  }
  for (const auto& [turns, count] : acc.histogram)
    report.turn_histogram.emplace_back(turns, count);
  return report;
}

}  // namespace

SimReport run_simulation_serial(const SimConfig& config) {
  validate(config);
  Accumulator acc;
  for (std::int64_t g = 0; g < config.num_games; ++g) acc.add(play_game_at(config, g));
  return build_report(config, acc);
}

SimReport run_simulation(const SimConfig& config, int threads) {
  validate(config);
  if (threads <= 0) threads = omp_get_max_threads();
  Accumulator total;
#pragma omp parallel num_threads(threads)
  {
    Accumulator local;
#pragma omp for schedule(static) nowait
    for (std::int64_t g = 0; g < config.num_games; ++g) local.add(play_game_at(config, g));
#pragma omp critical
    total.merge(local);
  }
  return build_report(config, total);
}

nlohmann::json report_to_json(const SimReport& report) {
  nlohmann::json histogram = nlohmann::json::array();
  for (const auto& [turns, count] : report.turn_histogram)
    histogram.push_back({turns, count});
  return {{"num_games", report.num_games},
          {"seed", report.seed},
          {"mean_turns", report.mean_turns},
          {"stderr_turns", report.stderr_turns},
          {"first_player_win_rate", report.first_player_win_rate},
          {"stderr_win", report.stderr_win},
          {"turn_histogram", std::move(histogram)}};
}

}  // namespace randomplay
