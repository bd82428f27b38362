#include "randomplay/board.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace randomplay {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

ChompBoard::ChompBoard(std::vector<std::int64_t> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1)
      throw std::invalid_argument("board: row " + std::to_string(i + 1) +
                                  " must be a positive integer");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::invalid_argument("board: row " + std::to_string(i + 1) +
                                  " exceeds row " + std::to_string(i) +
                                  " (rows must be non-increasing)");
  }
}

ChompBoard ChompBoard::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) return ChompBoard{};

  std::vector<std::int64_t> rows;
  std::size_t index = 1;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token =
        trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("board: row " + std::to_string(index) +
                                  " is not a positive decimal integer");
    rows.push_back(value);
    ++index;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ChompBoard(std::move(rows));
}

std::int64_t ChompBoard::cell_count() const {
  return std::accumulate(rows_.begin(), rows_.end(), std::int64_t{0});
}

bool ChompBoard::contains(Cell cell) const {
  if (cell.row < 1 || cell.col < 1) return false;
  return cell.row <= row_count() && cell.col <= rows_[cell.row - 1];
}

Cell ChompBoard::cell_at(std::int64_t index) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (index < rows_[r]) return Cell{static_cast<std::int64_t>(r + 1), index + 1};
    index -= rows_[r];
  }
  throw std::out_of_range("board: cell index past the last cell");
}

std::int64_t chomp_in_place(std::vector<std::int64_t>& rows, Cell cell) {
  std::int64_t removed = 0;
  const std::int64_t keep = cell.col - 1;
  for (std::size_t r = cell.row - 1; r < rows.size(); ++r) {
    if (rows[r] <= keep) break;  // staircase: later rows are no longer
    removed += rows[r] - keep;
    rows[r] = keep;
  }
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return removed;
}

ChompBoard ChompBoard::chomp(Cell cell) const {
  if (!contains(cell))
    throw std::invalid_argument("chomp: cell (" + std::to_string(cell.row) + "," +
                                std::to_string(cell.col) + ") is not on the board");
  std::vector<std::int64_t> rows = rows_;
  chomp_in_place(rows, cell);
  return ChompBoard(unchecked_t{}, std::move(rows));
}

std::vector<ChompBoard> ChompBoard::successors() const {
  if (empty()) throw std::invalid_argument("successors: empty board has no moves");
  std::vector<ChompBoard> result;
  result.reserve(cell_count());
  for (std::int64_t r = 1; r <= row_count(); ++r)
    for (std::int64_t c = 1; c <= rows_[r - 1]; ++c) result.push_back(chomp(Cell{r, c}));
  return result;
}

std::string ChompBoard::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out;
}

std::size_t ChompBoardHash::operator()(const ChompBoard& b) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::int64_t r : b.rows()) {
    h ^= static_cast<std::size_t>(r) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace randomplay
