#include "randomplay/nim.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "randomplay/closed_form.hpp"

namespace randomplay {

PlayConvention parse_convention(std::string_view text) {
  if (text == "misere") return PlayConvention::misere;
  if (text == "normal") return PlayConvention::normal;
  throw std::invalid_argument("convention: expected 'misere' or 'normal'");
}

std::string to_string(PlayConvention convention) {
  return convention == PlayConvention::misere ? "misere" : "normal";
}

NimPosition::NimPosition(std::vector<std::int64_t> piles, PlayConvention convention)
    : piles_(std::move(piles)), convention_(convention) {
  for (std::size_t i = 0; i < piles_.size(); ++i)
    if (piles_[i] < 1)
      throw std::invalid_argument("piles: pile " + std::to_string(i + 1) +
                                  " must be a positive integer");
  std::sort(piles_.begin(), piles_.end(), std::greater<>());
}

NimPosition NimPosition::parse(std::string_view text, PlayConvention convention) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) return NimPosition(convention);

  std::vector<std::int64_t> piles;
  std::size_t index = 1;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view token =
        trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw std::invalid_argument("piles: pile " + std::to_string(index) +
                                  " is not a positive decimal integer");
    piles.push_back(value);
    ++index;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return NimPosition(std::move(piles), convention);
}

std::int64_t NimPosition::total_tokens() const {
  return std::accumulate(piles_.begin(), piles_.end(), std::int64_t{0});
}

std::vector<NimPosition> NimPosition::successors() const {
  if (empty()) throw std::invalid_argument("successors: empty position has no moves");
  std::vector<NimPosition> result;
  result.reserve(total_tokens());
  for (std::size_t i = 0; i < piles_.size(); ++i) {
    for (std::int64_t take = 1; take <= piles_[i]; ++take) {
      std::vector<std::int64_t> next = piles_;
      next[i] -= take;
      if (next[i] == 0) next.erase(next.begin() + i);
      result.push_back(NimPosition(std::move(next), convention_));
    }
  }
  return result;
}

std::string NimPosition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < piles_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(piles_[i]);
  }
  return out;
}

std::size_t PilesHash::operator()(const std::vector<std::int64_t>& piles) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::int64_t x : piles)
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

const NimEvalCache::Entry* NimEvalCache::find(const std::vector<std::int64_t>& piles) const {
  auto it = map_.find(piles);
  return it == map_.end() ? nullptr : &it->second;
}

void NimEvalCache::insert(const std::vector<std::int64_t>& piles, Entry value) {
  map_.emplace(piles, std::move(value));
}

namespace {

// Memoized DP shared by the expectation and parity queries: discover the
// uncached positions with an explicit frontier, then combine in increasing
// token count so successors are always ready. A position with T turns has
// an even total iff its successor's total is odd, hence
// parity_even = (1/N) sum over moves of (1 - parity_even(successor)).
NimEvalCache::Entry evaluate_nim(const NimPosition& pos, NimEvalCache& cache) {
  if (const auto* hit = cache.find(pos.piles())) return *hit;

  std::unordered_set<std::vector<std::int64_t>, PilesHash> seen{pos.piles()};
  std::vector<NimPosition> frontier{pos};
  std::map<std::int64_t, std::vector<NimPosition>> levels;
  while (!frontier.empty()) {
    NimPosition current = std::move(frontier.back());
    frontier.pop_back();
    const std::int64_t tokens = current.total_tokens();
    if (tokens > 0) {
      for (NimPosition& next : current.successors())
        if (!cache.find(next.piles()) && seen.insert(next.piles()).second)
          frontier.push_back(std::move(next));
    }
    levels[tokens].push_back(std::move(current));
  }

  for (auto& [tokens, positions] : levels) {
    for (const NimPosition& current : positions) {
      if (current.empty()) {
        cache.insert(current.piles(), {Rational(0), Rational(1)});
        continue;
      }
      Rational expected_sum(0);
      Rational parity_sum(0);
      for (const NimPosition& next : current.successors()) {
        const auto* entry = cache.find(next.piles());
        expected_sum += entry->expected_turns;
        parity_sum += 1 - entry->parity_even;
      }
      const Rational moves(static_cast<long>(current.total_tokens()));
      cache.insert(current.piles(), {1 + expected_sum / moves, parity_sum / moves});
    }
  }
  return *cache.find(pos.piles());
}

}  // namespace

Rational nim_expected_turns_exact(const NimPosition& pos, NimEvalCache& cache) {
  return evaluate_nim(pos, cache).expected_turns;
}

Rational nim_turn_parity_exact(const NimPosition& pos, NimEvalCache& cache) {
  return evaluate_nim(pos, cache).parity_even;
}

Rational nim_expected_turns_formula(const NimPosition& pos) {
  Rational sum(0);
  for (std::int64_t s : pos.piles()) sum += harmonic(s);
  return sum;
}

Rational nim_first_player_win_prob(const NimPosition& pos) {
  for (std::int64_t s : pos.piles())
    if (s > 1) return make_rational(1, 2);
  // All piles have size 1 (or none): T = k surely.
  const bool turns_even = pos.pile_count() % 2 == 0;
  const bool first_wins =
      pos.convention() == PlayConvention::misere ? turns_even : !turns_even;
  return Rational(first_wins ? 1 : 0);
}

}  // namespace randomplay
