#pragma once

/**
 * @file kernels.hpp
 * @brief Data-parallel inner loops (OpenMP) and their serial references.
 *
 * Every kernel in `kernels` has a same-signature twin in `reference` that is a
 * plain loop. The parallel versions reduce integers only, so their results are
 * identical to the references for every worker count.
 */

#include <cstdint>
#include <span>
#include <vector>

#include "modhyp/arith.hpp"
#include "modhyp/poly.hpp"

namespace modhyp {

struct DoubleSumValue {
  std::uint64_t total = 0;          ///< sum over x of |inner(x)|
  std::vector<std::int64_t> inner;  ///< inner(x) = sum over y in S of (y + x / p), one per x in I
};

namespace kernels {

/// Number of OpenMP threads used when `workers` is 0.
int default_workers() noexcept;

/// sum_{x=0}^{p-1} (f(x) / p)
std::int64_t poly_symbol_sum(const PolyModP& f, int workers = 0);

/// #{c : L/4 < c < p - L/4, ((l - 4c)/p) = ((l + 4c)/p) = -1 for 1 <= l <= L}
std::uint64_t run_count(PrimeModulus p, std::uint64_t L, int workers = 0);

/// Double sum over the interval [lo, hi] of |sum_{y in S} ((y + x)/p)|.
DoubleSumValue double_sum(PrimeModulus p, std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> S,
                          int workers = 0);

}  // namespace kernels

namespace reference {

std::int64_t poly_symbol_sum(const PolyModP& f);
std::uint64_t run_count(PrimeModulus p, std::uint64_t L);
DoubleSumValue double_sum(PrimeModulus p, std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> S);

}  // namespace reference

/// True when c satisfies the run condition for 1 <= l <= L (range on c not checked).
bool run_condition_holds(std::uint64_t p, std::uint64_t c, std::uint64_t L) noexcept;

}  // namespace modhyp
