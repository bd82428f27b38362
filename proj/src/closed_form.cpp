#include "randomplay/closed_form.hpp"

#include <stdexcept>
#include <utility>

namespace randomplay {

std::vector<AlphaBeta> alpha_beta(std::int64_t k_max) {
  if (k_max < 1) throw std::invalid_argument("alpha_beta: k_max must be >= 1");
  std::vector<AlphaBeta> out;
  out.reserve(k_max);
  Integer alpha = 1;
  Integer beta = -1;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    out.push_back(AlphaBeta{k, alpha, beta});
    const Integer kk(static_cast<long>(k));
    Integer next_alpha = (4 * kk * kk + kk) * alpha + beta;
    Integer next_beta = -kk * (kk + 1) * alpha + (4 * kk * kk - kk - 1) * beta;
    alpha = std::move(next_alpha);
    beta = std::move(next_beta);
  }
  return out;
}

Rational harmonic(std::int64_t t) {
  if (t < 0) throw std::invalid_argument("harmonic: negative index");
  Rational sum(0);
  for (std::int64_t r = 1; r <= t; ++r) sum += make_rational(1, static_cast<long>(r));
  return sum;
}

Integer factorial(std::uint64_t n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Rational expected_turns_formula(const ChompBoard& board) {
  Rational sum(0);
  const auto& rows = board.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    // Row x contributes sum_{y=1..r_x} 1/(xy) = H_{r_x} / x.
    sum += harmonic(rows[i]) / Rational(static_cast<long>(i + 1));
  }
  return sum;
}

Rational win_prob_two_row(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n)
    throw std::invalid_argument("win_prob_two_row: need 0 <= k <= n");
  if (k == 0) {
    if (n == 0) return Rational(1);
    if (n == 1) return Rational(0);
    return make_rational(1, 2);
  }
  if (n == 1 && k == 1) return make_rational(1, 2);

  const AlphaBeta seq = alpha_beta(k).back();
  const Integer num = Integer(static_cast<long>(n)) * seq.alpha + seq.beta;
  const Integer den = factorial(2 * (k - 1)) * Integer(static_cast<long>(n + k)) *
                      Integer(static_cast<long>(n + k - 1)) *
                      Integer(static_cast<long>(n + k - 2));
  return make_rational(1, 2) - make_rational(num, den);
}

Rational gap_term(const Rational& x, std::int64_t y, const AlphaBeta& seq) {
  if (seq.k != y) throw std::invalid_argument("gap_term: sequence entry is not index y");
  const Rational one(1);
  if (y == 1 && x == one) return Rational(0);
  if (x <= one) throw std::invalid_argument("gap_term: requires x > 1 (or exactly (1,1))");

  const Rational yy(static_cast<long>(y));
  const Rational numerator = x * Rational(seq.alpha) + Rational(seq.beta);
  const Rational cubic = (x + yy) * (x + yy - 1) * (x + yy - 2);
  return numerator / (Rational(factorial(2 * (y - 1))) * cubic);
}

Rational gap_partial_sum(std::int64_t n, std::int64_t k, const AlphaBeta& seq) {
  if (k < 2) throw std::invalid_argument("gap_partial_sum: requires k >= 2");
  if (n < 1) throw std::invalid_argument("gap_partial_sum: requires n >= 1");
  if (seq.k != k) throw std::invalid_argument("gap_partial_sum: sequence entry is not index k");

  const Integer nn(static_cast<long>(n));
  const Integer kk(static_cast<long>(k));
  const Integer numerator =
      (nn - kk) * (seq.alpha * (kk * kk + 3 * kk * (nn - 1) - 2 * nn + 2) +
                   seq.beta * (3 * kk + nn - 3));
  const Integer denominator = 4 * (kk - 1) * (2 * kk - 1) * factorial(2 * (k - 1)) *
                              (nn + kk - 1) * (nn + kk - 2);
  return make_rational(numerator, denominator);
}

int compare_to_sqrt_multiple(const Rational& value, const Rational& coeff,
                             std::int64_t k) {
  if (coeff < 0) throw std::invalid_argument("compare_to_sqrt_multiple: coeff must be >= 0");
  if (k < 0) throw std::invalid_argument("compare_to_sqrt_multiple: k must be >= 0");
  if (value < 0) return -1;
  if (coeff == 0 || k == 0) return value == 0 ? 0 : 1;
  // Both sides nonnegative: compare value^2 against coeff^2 * k.
  const Rational lhs = value * value;
  const Rational rhs = coeff * coeff * Rational(static_cast<long>(k));
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

namespace {

std::pair<Rational, Integer> two_row_gap_and_cubic(std::int64_t n, std::int64_t k) {
  if (k < 1 || n < k || (n == 1 && k == 1))
    throw std::invalid_argument("bound predicates: need n >= k >= 1 and (n,k) != (1,1)");
  const Rational gap = make_rational(1, 2) - win_prob_two_row(n, k);
  const Integer cubic = Integer(static_cast<long>(n + k)) *
                        Integer(static_cast<long>(n + k - 1)) *
                        Integer(static_cast<long>(n + k - 2));
  return {gap, cubic};
}

}  // namespace

bool bound_holds_lower(std::int64_t n, std::int64_t k) {
  // P >= 1/2 - 2nk^{3/2}/D  <=>  gap <= (2nk/D) sqrt(k)
  auto [gap, cubic] = two_row_gap_and_cubic(n, k);
  const Rational coeff =
      make_rational(2 * Integer(static_cast<long>(n)) * Integer(static_cast<long>(k)), cubic);
  return compare_to_sqrt_multiple(gap, coeff, k) <= 0;
}

bool bound_holds_upper(std::int64_t n, std::int64_t k) {
  // P <= 1/2 - (n+1-k) sqrt(k)/D  <=>  gap >= ((n+1-k)/D) sqrt(k)
  auto [gap, cubic] = two_row_gap_and_cubic(n, k);
  const Rational coeff = make_rational(Integer(static_cast<long>(n + 1 - k)), cubic);
  return compare_to_sqrt_multiple(gap, coeff, k) >= 0;
}

ChompBoard extremal_min_board(std::int64_t n_cells) {
  if (n_cells < 0) throw std::invalid_argument("extremal_min_board: negative cell count");
  if (n_cells == 0) return ChompBoard{};
  return ChompBoard({n_cells});
}

std::int64_t hyperbolic_region_size(std::int64_t t) {
  std::int64_t count = 0;
  for (std::int64_t x = 1; x <= t; ++x) count += t / x;
  return count;
}

namespace {

std::int64_t divisor_count(std::int64_t m) {
  std::int64_t count = 0;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    count += (d * d == m) ? 1 : 2;
  }
  return count;
}

}  // namespace

ChompBoard extremal_max_board(std::int64_t n_cells) {
  if (n_cells < 0) throw std::invalid_argument("extremal_max_board: negative cell count");
  if (n_cells == 0) return ChompBoard{};

  // Largest tau with |{xy <= tau}| <= n_cells, growing the region size
  // incrementally by d(tau+1).
  std::int64_t tau = 0;
  std::int64_t count = 0;
  std::int64_t next_count = 1;
  while (next_count <= n_cells) {
    ++tau;
    count = next_count;
    next_count = count + divisor_count(tau + 1);
  }

  std::vector<std::int64_t> rows;
  rows.reserve(tau + 1);
  for (std::int64_t x = 1; x <= tau; ++x) rows.push_back(tau / x);

  // Top up with cells of product tau+1, i.e. one per divisor, in row order.
  for (std::int64_t x = 1; x <= tau + 1 && count < n_cells; ++x) {
    if ((tau + 1) % x != 0) continue;
    if (x == tau + 1)
      rows.push_back(1);
    else
      rows[x - 1] += 1;
    ++count;
  }
  return ChompBoard(std::move(rows));
}

}  // namespace randomplay
