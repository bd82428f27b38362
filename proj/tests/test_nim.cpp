#include "randomplay/nim.hpp"

#include <stdexcept>

#include "doctest.h"

#include "oracles.hpp"
#include "randomplay/analysis.hpp"
#include "randomplay/closed_form.hpp"
#include "randomplay/exact_engine.hpp"

using namespace randomplay;

namespace {

// All pile multisets with the given total: partitions of the total.
std::vector<NimPosition> positions_with_total(std::int64_t total) {
  std::vector<NimPosition> out;
  for (const ChompBoard& partition : enumerate_boards(total))
    out.push_back(NimPosition(partition.rows()));
  return out;
}

}  // namespace

TEST_CASE("positions canonicalize and parse") {
  CHECK(NimPosition({1, 3, 2}) == NimPosition({3, 2, 1}));
  CHECK(NimPosition::parse("1,3,2") == NimPosition({3, 2, 1}));
  CHECK(NimPosition::parse("") == NimPosition{});
  CHECK(NimPosition::parse("2,1", PlayConvention::normal).convention() ==
        PlayConvention::normal);
  CHECK_THROWS_AS(NimPosition::parse("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(NimPosition::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_convention("other"), std::invalid_argument);
}

TEST_CASE("successors are one per move with multiplicity") {
  CHECK(NimPosition({1}).successors() == std::vector<NimPosition>{NimPosition{}});
  CHECK(NimPosition({2}).successors() ==
        std::vector<NimPosition>{NimPosition({1}), NimPosition{}});
  const auto twin = NimPosition({1, 1}).successors();
  REQUIRE(twin.size() == 2);
  CHECK(twin[0] == NimPosition({1}));
  CHECK(twin[1] == NimPosition({1}));
  CHECK_THROWS_AS(NimPosition{}.successors(), std::invalid_argument);
  for (const NimPosition& pos : positions_with_total(8))
    CHECK(static_cast<std::int64_t>(pos.successors().size()) == pos.total_tokens());
}

TEST_CASE("expected turns: DP, formula, tree-walk oracle") {
  NimEvalCache cache;
  CHECK(nim_expected_turns_exact(NimPosition{}, cache) == Rational(0));
  CHECK(nim_expected_turns_exact(NimPosition({1, 1, 1}), cache) == Rational(3));
  CHECK(nim_expected_turns_exact(NimPosition({2}), cache) == make_rational(3, 2));
  CHECK(oracles::naive_nim_expected_turns(NimPosition({2})) == make_rational(3, 2));

  CHECK(nim_expected_turns_formula(NimPosition({3})) == make_rational(11, 6));
  CHECK(nim_expected_turns_formula(NimPosition({1, 1})) == Rational(2));
  CHECK(nim_expected_turns_formula(NimPosition({2, 3})) == make_rational(10, 3));

  for (std::int64_t total = 0; total <= 10; ++total) {
    for (const NimPosition& pos : positions_with_total(total)) {
      const Rational dp = nim_expected_turns_exact(pos, cache);
      CHECK(dp == nim_expected_turns_formula(pos));
      if (total <= 7) CHECK(dp == oracles::naive_nim_expected_turns(pos));
    }
  }
}

TEST_CASE("turn parity DP") {
  NimEvalCache cache;
  CHECK(nim_turn_parity_exact(NimPosition({1}), cache) == Rational(0));
  CHECK(nim_turn_parity_exact(NimPosition({2}), cache) == make_rational(1, 2));
  CHECK(nim_turn_parity_exact(NimPosition({1, 1}), cache) == Rational(1));
  CHECK(oracles::naive_nim_parity_even(NimPosition({2, 1})) ==
        nim_turn_parity_exact(NimPosition({2, 1}), cache));

  // Some pile above 1 mixes the parity to exactly 1/2; all-ones positions
  // are deterministic with T = k.
  for (std::int64_t total = 1; total <= 10; ++total) {
    for (const NimPosition& pos : positions_with_total(total)) {
      const Rational parity = nim_turn_parity_exact(pos, cache);
      if (pos.piles().front() > 1) {
        CHECK(parity == make_rational(1, 2));
      } else {
        CHECK(parity == Rational(pos.pile_count() % 2 == 0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("independent piles decompose the expectation") {
  NimEvalCache cache;
  for (std::int64_t total = 1; total <= 10; ++total) {
    for (const NimPosition& pos : positions_with_total(total)) {
      Rational sum(0);
      for (std::int64_t pile : pos.piles())
        sum += nim_expected_turns_exact(NimPosition({pile}), cache);
      CHECK(nim_expected_turns_exact(pos, cache) == sum);
    }
  }
}

TEST_CASE("one-pile nim is one-row chomp") {
  NimEvalCache nim_cache;
  EvalCache chomp_cache;
  for (std::int64_t s = 1; s <= 15; ++s) {
    CHECK(nim_expected_turns_exact(NimPosition({s}), nim_cache) ==
          expected_turns_exact(ChompBoard({s}), chomp_cache));
  }
}

TEST_CASE("first-player win probability case split") {
  CHECK(nim_first_player_win_prob(NimPosition({1, 1}, PlayConvention::misere)) ==
        Rational(1));
  CHECK(nim_first_player_win_prob(NimPosition({1, 1}, PlayConvention::normal)) ==
        Rational(0));
  CHECK(nim_first_player_win_prob(NimPosition({2}, PlayConvention::misere)) ==
        make_rational(1, 2));
  CHECK(nim_first_player_win_prob(NimPosition({2}, PlayConvention::normal)) ==
        make_rational(1, 2));
  CHECK(nim_first_player_win_prob(NimPosition({3, 1, 1}, PlayConvention::misere)) ==
        make_rational(1, 2));
  CHECK(nim_first_player_win_prob(NimPosition({1, 1, 1}, PlayConvention::misere)) ==
        Rational(0));
  CHECK(nim_first_player_win_prob(NimPosition({1, 1, 1}, PlayConvention::normal)) ==
        Rational(1));
  // Empty position: under misere the player to move wins.
  CHECK(nim_first_player_win_prob(NimPosition(PlayConvention::misere)) == Rational(1));
  CHECK(nim_first_player_win_prob(NimPosition(PlayConvention::normal)) == Rational(0));
}

TEST_CASE("closed form matches the parity DP under both conventions") {
  NimEvalCache cache;
  for (std::int64_t total = 0; total <= 10; ++total) {
    for (const NimPosition& base : positions_with_total(total)) {
      const Rational parity = nim_turn_parity_exact(base, cache);
      const NimPosition misere(base.piles(), PlayConvention::misere);
      const NimPosition normal(base.piles(), PlayConvention::normal);
      CHECK(nim_first_player_win_prob(misere) == parity);
      CHECK(nim_first_player_win_prob(normal) == 1 - parity);
    }
  }
}
