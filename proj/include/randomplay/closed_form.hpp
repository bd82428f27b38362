#pragma once

#include <cstdint>
#include <vector>

#include "randomplay/board.hpp"
#include "randomplay/rational.hpp"

namespace randomplay {

/// One entry of the paired integer sequences driving the two-row win
/// probability formula. Base case (alpha_1, beta_1) = (1, -1); for k >= 1:
///   alpha_{k+1} = (4k^2 + k) alpha_k + beta_k
///   beta_{k+1}  = -k(k+1) alpha_k + (4k^2 - k - 1) beta_k
struct AlphaBeta {
  std::int64_t k = 0;
  Integer alpha;
  Integer beta;
};

/// Entries for k = 1..k_max, computed by the integer recurrence.
std::vector<AlphaBeta> alpha_beta(std::int64_t k_max);

/// H_t = sum_{r=1..t} 1/r, exact; H_0 = 0.
Rational harmonic(std::int64_t t);

Integer factorial(std::uint64_t n);

/// Expected game length under random play: sum over cells (x,y) of 1/(xy).
/// For an m x n rectangle this equals harmonic(m) * harmonic(n).
Rational expected_turns_formula(const ChompBoard& board);

/// Next-player win probability for a two-row board with n cells in the first
/// row and k in the second (k <= n):
///   k = 0:        1, 0, 1/2 for n = 0, 1, >= 2
///   (n,k)=(1,1):  1/2
///   otherwise:    1/2 - (n alpha_k + beta_k)
///                       / ((2(k-1))! (n+k)(n+k-1)(n+k-2))
Rational win_prob_two_row(std::int64_t n, std::int64_t k);

/// C(x,y) = (x alpha_y + beta_y) / ((2(y-1))! (x+y)(x+y-1)(x+y-2)), the
/// deficit 1/2 - P for two-row boards; C(1,1) = 0. Defined for rational
/// x > 1 (or exactly (1,1)); `seq` must be the entry at index y.
Rational gap_term(const Rational& x, std::int64_t y, const AlphaBeta& seq);

/// g(n,k), the closed form for sum_{j=k..n-1} C(j,k); requires k >= 2,
/// n >= 1:
///   (n-k) [alpha_k (k^2 + 3k(n-1) - 2n + 2) + beta_k (3k + n - 3)]
///   / (4 (k-1)(2k-1) (2(k-1))! (n+k-1)(n+k-2))
Rational gap_partial_sum(std::int64_t n, std::int64_t k, const AlphaBeta& seq);

/// Compares `value` against coeff * sqrt(k) in exact integer arithmetic
/// (squared form, signs handled explicitly). Requires coeff >= 0, k >= 0.
/// Returns -1, 0, or +1.
int compare_to_sqrt_multiple(const Rational& value, const Rational& coeff,
                             std::int64_t k);

/// Probability sandwich for two-row boards, with D = (n+k)(n+k-1)(n+k-2) and
/// n >= k >= 1, (n,k) != (1,1):
///   lower: P(n,k) >= 1/2 - 2 n k^{3/2} / D
///   upper: P(n,k) <= 1/2 - (n+1-k) sqrt(k) / D
/// Both evaluated exactly via compare_to_sqrt_multiple; sqrt(k) is irrational
/// for non-square k, so no rational "bound value" is exposed. Note the upper
/// bound is a k >= 2 statement: at k = 1 the deficit 1/2 - P(n,1) equals
/// 1/(n(n+1)) < (n)sqrt(1)/D = 1/(n^2-1), so bound_holds_upper(n, 1) is
/// false for every n >= 2.
bool bound_holds_lower(std::int64_t n, std::int64_t k);
bool bound_holds_upper(std::int64_t n, std::int64_t k);

/// The n-cell board minimizing expected game length: a single row.
ChompBoard extremal_min_board(std::int64_t n_cells);

/// An n-cell board maximizing expected game length: the staircase of all
/// cells with x*y <= tau, where tau is largest with that region fitting in
/// n_cells, topped up with cells of product tau+1 in row-major order. Every
/// completion choice has the same expected length; row-major keeps it
/// deterministic.
ChompBoard extremal_max_board(std::int64_t n_cells);

/// Number of lattice points (x,y), x,y >= 1, with x*y <= t: the divisor
/// summatory function sum_{m<=t} d(m).
std::int64_t hyperbolic_region_size(std::int64_t t);

}  // namespace randomplay
