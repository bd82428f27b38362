#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "randomplay/rational.hpp"

namespace randomplay {

/// Misere: whoever takes the last token loses. Normal: that player wins.
enum class PlayConvention { misere, normal };

PlayConvention parse_convention(std::string_view text);
std::string to_string(PlayConvention convention);

/// A nim position: a multiset of positive pile sizes, canonically sorted
/// descending, plus the play convention. The convention only enters the
/// winner mapping; game dynamics ignore it.
class NimPosition {
 public:
  explicit NimPosition(PlayConvention convention = PlayConvention::misere)
      : convention_(convention) {}

  /// Canonicalizes (sorts descending); throws std::invalid_argument on a
  /// pile size < 1.
  explicit NimPosition(std::vector<std::int64_t> piles,
                       PlayConvention convention = PlayConvention::misere);

  /// Parses "s1,s2,...,sk" (order-insensitive). Empty string: no piles.
  static NimPosition parse(std::string_view text,
                           PlayConvention convention = PlayConvention::misere);

  const std::vector<std::int64_t>& piles() const { return piles_; }
  PlayConvention convention() const { return convention_; }
  bool empty() const { return piles_.empty(); }
  std::int64_t pile_count() const { return static_cast<std::int64_t>(piles_.size()); }
  std::int64_t total_tokens() const;

  /// One successor per legal move: (pile, amount) pairs in pile order, then
  /// ascending amount, each re-canonicalized. Exactly total_tokens()
  /// entries; duplicates preserved with multiplicity. Requires non-empty.
  std::vector<NimPosition> successors() const;

  std::string to_string() const;

  friend bool operator==(const NimPosition&, const NimPosition&) = default;

 private:
  std::vector<std::int64_t> piles_;
  PlayConvention convention_;
};

/// Memo table for the nim DP, keyed on the canonical pile multiset (the
/// convention does not affect turn counts). Same confinement contract as the
/// Chomp EvalCache: one evaluation at a time.
struct PilesHash {
  std::size_t operator()(const std::vector<std::int64_t>& piles) const noexcept;
};

class NimEvalCache {
 public:
  struct Entry {
    Rational expected_turns;
    Rational parity_even;  // probability the total number of turns is even
  };

  const Entry* find(const std::vector<std::int64_t>& piles) const;
  void insert(const std::vector<std::int64_t>& piles, Entry value);
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::vector<std::int64_t>, Entry, PilesHash> map_;
};

/// Expected number of moves under uniform-over-moves random play, by
/// memoized DP with an explicit work stack.
Rational nim_expected_turns_exact(const NimPosition& pos, NimEvalCache& cache);

/// Closed form: sum of H_{s_i} over piles.
Rational nim_expected_turns_formula(const NimPosition& pos);

/// Exact probability that the total number of turns is even, by the same
/// DP; the oracle behind the win-probability mapping.
Rational nim_turn_parity_exact(const NimPosition& pos, NimEvalCache& cache);

/// First-player win probability by the closed-form case split: if every
/// pile has size 1 the game lasts exactly k turns, so the winner is fixed by
/// the parity of k (misere: first player wins iff k is even; normal:
/// reversed); if any pile exceeds 1, each player wins with probability 1/2.
/// The empty position uses the k = 0 parity: under misere the player to
/// move wins (1), under normal loses (0); an encoding convention, since
/// the game defines winners only at its end.
Rational nim_first_player_win_prob(const NimPosition& pos);

}  // namespace randomplay
