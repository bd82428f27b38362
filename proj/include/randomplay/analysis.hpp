#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "randomplay/board.hpp"
#include "randomplay/exact_engine.hpp"
#include "randomplay/rational.hpp"

namespace randomplay {

/// All partitions of n_cells as boards, reverse-lexicographic order
/// ([n], [n-1,1], ..., [1,1,...,1]), each exactly once. n_cells = 0 yields
/// just the empty board.
std::vector<ChompBoard> enumerate_boards(std::int64_t n_cells);

/// Fills the cache with every board of at most max_cells cells, one cell
/// count at a time. Boards within a level only depend on smaller boards, so
/// the level is evaluated in parallel against the read-only cache and
/// inserted serially afterwards: the parallel counterpart of the engine's
/// work-stack evaluator.
void warm_cache_levelwise(EvalCache& cache, std::int64_t max_cells, int threads = 0);

struct ScanRecord {
  ChompBoard board;
  std::int64_t cells = 0;
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  Rational win_prob;
  Rational gap;  // 1/2 - win_prob
};

struct Conjecture1Result {
  std::vector<ScanRecord> records;
  bool holds = true;
  std::optional<ChompBoard> counterexample;
};

/// Exact win probability for every board with 2..max_cells cells, more than
/// one row and more than one column. Holds iff every gap is strictly
/// positive. Evidence at the scanned scale, not a proof.
Conjecture1Result scan_conjecture1(std::int64_t max_cells, int threads = 0);

struct EnvelopeRecord {
  std::int64_t n_cells = 0;
  Rational min_gap;
  Rational max_gap;
  ChompBoard argmin_board;
  ChompBoard argmax_board;
};

/// Per cell count, the extreme gaps among boards with more than one row and
/// more than one column (cell counts with no qualifying boards are omitted).
/// Ties keep the first board in enumeration order. Advisory output only.
std::vector<EnvelopeRecord> envelope(std::int64_t max_cells, int threads = 0);

struct ExtremalRecord {
  std::int64_t n_cells = 0;
  Rational min_expected;
  Rational max_expected;
  ChompBoard min_board;   // witness from the enumeration
  ChompBoard max_board;
  bool holds = true;
};

struct ExtremalResult {
  std::vector<ExtremalRecord> records;
  bool holds = true;
  std::string failure;  // human-readable description of the first violation
};

/// For each N <= max_cells checks, by exhaustive enumeration over the
/// expected-length formula, that the single-row board attains the minimum
/// H_N, that extremal_max_board(N) attains the maximum, and that every
/// board lies within [H_N, H_N^2].
ExtremalResult verify_extremal(std::int64_t max_cells, int threads = 0);

struct RankCheck {
  bool holds = true;
  std::optional<Cell> counterexample;
};

/// Asserts rank(x,y) >= x*y for every cell, where rank is the cell's
/// 1-based position in row-major (lexicographic) order.
RankCheck rank_property_check(const ChompBoard& board);

// Report rows. JSON-lines use one object per record; rationals are
// "num/den" strings. CSV quotes board literals since they contain commas.
nlohmann::json scan_record_to_json(const ScanRecord& record);
nlohmann::json envelope_record_to_json(const EnvelopeRecord& record);
nlohmann::json extremal_record_to_json(const ExtremalRecord& record);

inline constexpr const char* kScanCsvHeader = "board,cells,rows,cols,win_prob,gap";
inline constexpr const char* kEnvelopeCsvHeader =
    "n_cells,min_gap,max_gap,argmin_board,argmax_board";
inline constexpr const char* kExtremalCsvHeader =
    "n_cells,min_expected,max_expected,min_board,max_board,holds";

std::string scan_record_to_csv(const ScanRecord& record);
std::string envelope_record_to_csv(const EnvelopeRecord& record);
std::string extremal_record_to_csv(const ExtremalRecord& record);

}  // namespace randomplay
