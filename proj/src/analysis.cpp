#include "randomplay/analysis.hpp"

#include <omp.h>

#include <algorithm>

#include "randomplay/closed_form.hpp"

namespace randomplay {

std::vector<ChompBoard> enumerate_boards(std::int64_t n_cells) {
  std::vector<ChompBoard> out;
  if (n_cells < 0) throw std::invalid_argument("enumerate_boards: negative cell count");
  if (n_cells == 0) {
    out.push_back(ChompBoard{});
    return out;
  }
  std::vector<std::int64_t> parts{n_cells};
  for (;;) {
    out.push_back(ChompBoard(parts));
    // Next partition in reverse-lexicographic order: strip trailing ones,
    // decrement the last remaining part, refill greedily.
    std::int64_t rem = 0;
    while (!parts.empty() && parts.back() == 1) {
      ++rem;
      parts.pop_back();
    }
    if (parts.empty()) break;
    parts.back() -= 1;
    ++rem;
    while (rem > 0) {
      const std::int64_t part = std::min(parts.back(), rem);
      parts.push_back(part);
      rem -= part;
    }
  }
  return out;
}

void warm_cache_levelwise(EvalCache& cache, std::int64_t max_cells, int threads) {
  if (threads <= 0) threads = omp_get_max_threads();
  for (std::int64_t n = 0; n <= max_cells; ++n) {
    const std::vector<ChompBoard> level = enumerate_boards(n);
    std::vector<Evaluation> results(level.size());
    std::vector<char> needed(level.size(), 0);
    for (std::size_t i = 0; i < level.size(); ++i) needed[i] = cache.find(level[i]) == nullptr;
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (needed[i]) results[i] = combine_from_successors(level[i], cache);
    }
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (needed[i]) cache.insert(level[i], std::move(results[i]));
    }
  }
}

namespace {

bool qualifies(const ChompBoard& board) {
  return board.row_count() >= 2 && board.col_count() >= 2;
}

ScanRecord make_record(const ChompBoard& board, const Rational& win_prob) {
  ScanRecord record;
  record.board = board;
  record.cells = board.cell_count();
  record.rows = board.row_count();
  record.cols = board.col_count();
  record.win_prob = win_prob;
  record.gap = make_rational(1, 2) - win_prob;
  return record;
}

}  // namespace

Conjecture1Result scan_conjecture1(std::int64_t max_cells, int threads) {
  if (max_cells < 1) throw std::invalid_argument("scan_conjecture1: max_cells must be >= 1");
  EvalCache cache;
  warm_cache_levelwise(cache, max_cells, threads);

  Conjecture1Result result;
  for (std::int64_t n = 2; n <= max_cells; ++n) {
    for (const ChompBoard& board : enumerate_boards(n)) {
      if (!qualifies(board)) continue;
      ScanRecord record = make_record(board, cache.find(board)->win_prob);
      if (record.gap <= 0 && result.holds) {
        result.holds = false;
        result.counterexample = board;
      }
      result.records.push_back(std::move(record));
    }
  }
  return result;
}

std::vector<EnvelopeRecord> envelope(std::int64_t max_cells, int threads) {
  if (max_cells < 1) throw std::invalid_argument("envelope: max_cells must be >= 1");
  EvalCache cache;
  warm_cache_levelwise(cache, max_cells, threads);

  std::vector<EnvelopeRecord> out;
  for (std::int64_t n = 2; n <= max_cells; ++n) {
    std::optional<EnvelopeRecord> record;
    for (const ChompBoard& board : enumerate_boards(n)) {
      if (!qualifies(board)) continue;
      const Rational gap = make_rational(1, 2) - cache.find(board)->win_prob;
      if (!record) {
        record = EnvelopeRecord{n, gap, gap, board, board};
        continue;
      }
      if (gap < record->min_gap) {
        record->min_gap = gap;
        record->argmin_board = board;
      }
      if (gap > record->max_gap) {
        record->max_gap = gap;
        record->argmax_board = board;
      }
    }
    if (record) out.push_back(std::move(*record));
  }
  return out;
}

ExtremalResult verify_extremal(std::int64_t max_cells, int threads) {
  if (max_cells < 1) throw std::invalid_argument("verify_extremal: max_cells must be >= 1");
  if (threads <= 0) threads = omp_get_max_threads();

  ExtremalResult result;
  for (std::int64_t n = 1; n <= max_cells; ++n) {
    const std::vector<ChompBoard> boards = enumerate_boards(n);
    std::vector<Rational> expected(boards.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (std::size_t i = 0; i < boards.size(); ++i)
      expected[i] = expected_turns_formula(boards[i]);

    std::size_t min_index = 0;
    std::size_t max_index = 0;
    for (std::size_t i = 1; i < boards.size(); ++i) {
      if (expected[i] < expected[min_index]) min_index = i;
      if (expected[i] > expected[max_index]) max_index = i;
    }

    ExtremalRecord record{n, expected[min_index], expected[max_index],
                          boards[min_index], boards[max_index], true};
    const Rational h = harmonic(n);
    const Rational h_squared = h * h;
    std::string failure;
    if (expected_turns_formula(extremal_min_board(n)) != record.min_expected ||
        record.min_expected != h) {
      failure = "single-row board does not attain the minimum H_N at N=" + std::to_string(n);
    } else if (expected_turns_formula(extremal_max_board(n)) != record.max_expected) {
      failure = "extremal_max_board does not attain the maximum at N=" + std::to_string(n);
    } else if (record.min_expected < h || record.max_expected > h_squared) {
      failure = "expected length escapes [H_N, H_N^2] at N=" + std::to_string(n);
    }
    if (!failure.empty()) {
      record.holds = false;
      if (result.holds) {
        result.holds = false;
        result.failure = failure;
      }
    }
    result.records.push_back(std::move(record));
  }
  return result;
}

RankCheck rank_property_check(const ChompBoard& board) {
  std::int64_t rank = 0;
  for (std::int64_t row = 1; row <= board.row_count(); ++row) {
    for (std::int64_t col = 1; col <= board.rows()[row - 1]; ++col) {
      ++rank;
      if (rank < row * col) return RankCheck{false, Cell{row, col}};
    }
  }
  return RankCheck{true, std::nullopt};
}

nlohmann::json scan_record_to_json(const ScanRecord& record) {
  return {{"board", record.board.to_string()},
          {"cells", record.cells},
          {"rows", record.rows},
          {"cols", record.cols},
          {"win_prob", to_fraction_string(record.win_prob)},
          {"gap", to_fraction_string(record.gap)}};
}

nlohmann::json envelope_record_to_json(const EnvelopeRecord& record) {
  return {{"n_cells", record.n_cells},
          {"min_gap", to_fraction_string(record.min_gap)},
          {"max_gap", to_fraction_string(record.max_gap)},
          {"argmin_board", record.argmin_board.to_string()},
          {"argmax_board", record.argmax_board.to_string()}};
}

nlohmann::json extremal_record_to_json(const ExtremalRecord& record) {
  return {{"n_cells", record.n_cells},
          {"min_expected", to_fraction_string(record.min_expected)},
          {"max_expected", to_fraction_string(record.max_expected)},
          {"min_board", record.min_board.to_string()},
          {"max_board", record.max_board.to_string()},
          {"holds", record.holds}};
}

namespace {

std::string quoted(const std::string& text) { return "\"" + text + "\""; }

}  // namespace

std::string scan_record_to_csv(const ScanRecord& record) {
  return quoted(record.board.to_string()) + "," + std::to_string(record.cells) + "," +
         std::to_string(record.rows) + "," + std::to_string(record.cols) + "," +
         to_fraction_string(record.win_prob) + "," + to_fraction_string(record.gap);
}

std::string envelope_record_to_csv(const EnvelopeRecord& record) {
  return std::to_string(record.n_cells) + "," + to_fraction_string(record.min_gap) + "," +
         to_fraction_string(record.max_gap) + "," + quoted(record.argmin_board.to_string()) +
         "," + quoted(record.argmax_board.to_string());
}

std::string extremal_record_to_csv(const ExtremalRecord& record) {
  return std::to_string(record.n_cells) + "," + to_fraction_string(record.min_expected) +
         "," + to_fraction_string(record.max_expected) + "," +
         quoted(record.min_board.to_string()) + "," + quoted(record.max_board.to_string()) +
         "," + (record.holds ? "true" : "false");
}

}  // namespace randomplay
