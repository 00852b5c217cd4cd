#pragma once

/**
 * @file distance_sets.hpp
 * @brief The sets of allowed offsets ("distances"): primes, squarefree and
 * smooth numbers, multiplicative closures, products of two distinct primes.
 *
 * Conventions: 1 is squarefree and y-smooth, 1 is not prime, and 1 belongs to
 * a multiplicative closure only when it is one of the generators (it never is,
 * since generators must be >= 2).
 */

#include <cstdint>
#include <string>
#include <vector>

#include "modhyp/errors.hpp"

namespace modhyp {

enum class SetKind { all, primes, squarefree, smooth, mult_closure, semiprime_distinct, explicit_list };

class DistanceSetSpec {
 public:
  static DistanceSetSpec all() { return DistanceSetSpec(SetKind::all); }
  static DistanceSetSpec primes() { return DistanceSetSpec(SetKind::primes); }
  static DistanceSetSpec squarefree() { return DistanceSetSpec(SetKind::squarefree); }
  static DistanceSetSpec semiprime_distinct() { return DistanceSetSpec(SetKind::semiprime_distinct); }
  static DistanceSetSpec smooth(std::uint64_t bound);
  static DistanceSetSpec mult_closure(std::vector<std::uint64_t> generators);
  static DistanceSetSpec explicit_list(std::vector<std::uint64_t> values);

  /// Parses "all", "primes", "squarefree", "smooth:Y", "multclosed:a,b,...",
  /// "semiprime2", "explicit:a,b,...". Throws Error{bad_set_spec}.
  static DistanceSetSpec parse(const std::string& text);

  /// Inverse of parse.
  std::string to_string() const;

  SetKind kind() const noexcept { return kind_; }
  std::uint64_t smooth_bound() const noexcept { return bound_; }
  /// Generators (mult_closure) or the sorted values (explicit_list).
  const std::vector<std::uint64_t>& values() const noexcept { return values_; }

  friend bool operator==(const DistanceSetSpec&, const DistanceSetSpec&) = default;

 private:
  explicit DistanceSetSpec(SetKind kind) : kind_(kind) {}

  SetKind kind_;
  std::uint64_t bound_ = 0;
  std::vector<std::uint64_t> values_;
};

struct DensityReport {
  std::uint64_t X = 0;
  std::uint64_t count = 0;         ///< members in [1, X]
  std::uint64_t ratio_num = 0;     ///< count / X in lowest terms
  std::uint64_t ratio_den = 1;
  std::uint64_t dyadic_count = 0;  ///< members in [X, 2X]

  double ratio() const noexcept { return static_cast<double>(ratio_num) / static_cast<double>(ratio_den); }
};

/// Upper limit on hi - lo + 1 for one members() call; beyond it Error{budget_exceeded}.
inline constexpr std::uint64_t kDefaultSieveBudget = std::uint64_t{1} << 27;

/// Members of the set in [lo, hi], ascending.
std::vector<std::uint64_t> members(const DistanceSetSpec& spec, std::uint64_t lo, std::uint64_t hi,
                                   std::uint64_t budget = kDefaultSieveBudget);

bool is_member(const DistanceSetSpec& spec, std::uint64_t n);

DensityReport density_report(const DistanceSetSpec& spec, std::uint64_t X,
                             std::uint64_t budget = kDefaultSieveBudget);

}  // namespace modhyp
