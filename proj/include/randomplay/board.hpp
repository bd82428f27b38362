#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace randomplay {

/// A cell of a Chomp board, 1-indexed: row from the top, column from the left.
struct Cell {
  std::int64_t row = 1;
  std::int64_t col = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A Chomp position in partition form: weakly decreasing positive row
/// lengths. The empty board is a valid position (the game has ended).
/// Boards are immutable values; all operations are pure.
class ChompBoard {
 public:
  ChompBoard() = default;

  /// Validates the staircase shape: r_1 >= r_2 >= ... >= r_m >= 1.
  /// Throws std::invalid_argument naming the offending row otherwise.
  explicit ChompBoard(std::vector<std::int64_t> rows);

  /// Parses "r1,r2,...,rm". The empty string is the empty board.
  static ChompBoard parse(std::string_view text);

  const std::vector<std::int64_t>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  std::int64_t row_count() const { return static_cast<std::int64_t>(rows_.size()); }
  std::int64_t col_count() const { return rows_.empty() ? 0 : rows_.front(); }
  std::int64_t cell_count() const;

  bool contains(Cell cell) const;

  /// The i-th cell in row-major order, 0-based. Requires 0 <= i < cell_count.
  Cell cell_at(std::int64_t index) const;

  /// The board after chomping `cell`. Requires contains(cell).
  ChompBoard chomp(Cell cell) const;

  /// One successor per cell, in row-major cell order. Requires non-empty.
  /// The order is fixed so seeded simulations are bit-reproducible.
  std::vector<ChompBoard> successors() const;

  /// "r1,r2,...,rm"; the empty board renders as "".
  std::string to_string() const;

  friend bool operator==(const ChompBoard&, const ChompBoard&) = default;

 private:
  struct unchecked_t {};
  ChompBoard(unchecked_t, std::vector<std::int64_t> rows) : rows_(std::move(rows)) {}

  std::vector<std::int64_t> rows_;
};

/// In-place chomp on a bare row vector; returns the number of cells removed.
/// Shared by ChompBoard::chomp and the simulator's per-game scratch state.
std::int64_t chomp_in_place(std::vector<std::int64_t>& rows, Cell cell);

struct ChompBoardHash {
  std::size_t operator()(const ChompBoard& b) const noexcept;
};

}  // namespace randomplay
