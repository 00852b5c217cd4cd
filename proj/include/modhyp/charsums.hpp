#pragma once

/**
 * @file charsums.hpp
 * @brief Exact values of the quadratic character sums that control pairs on the hyperbola.
 *
 * Covered objects:
 *  - complete sums sum_x (f(x)/p) with the Weil bound (m - 1) sqrt(p),
 *  - the count of c whose run of 2L symbols (l -+ 4c / p) is all -1,
 *  - the weights w(n) = #{(h, z1) : h z1 n = 4c}, their second moment W, and the
 *    triple sum S = sum (z0 - 4c (h z1)^-1 / p),
 *  - the double sum sum_{x in I} |sum_{y in S} (y + x / p)|,
 *  - the exponent conditions (Karatsuba and Chang) for that double sum.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modhyp/hyperbola.hpp"
#include "modhyp/kernels.hpp"
#include "modhyp/poly.hpp"

namespace modhyp {

struct CharSumResult {
  std::int64_t value = 0;
  int distinct_roots_m = 0;
  double weil_bound = 0.0;  ///< (m - 1) sqrt(p)
  bool weil_applicable = false;

  bool within_bound() const noexcept;
};

/// True when f = const * g^2 for some g in F_p[x]. Requires 1 <= deg f < p.
bool is_constant_times_square(const PolyModP& f);

/// Number of distinct roots of f over the algebraic closure of F_p: deg(f / gcd(f, f')).
int distinct_root_count(const PolyModP& f);

/// Requires deg f >= 1 and deg f < p; throws Error{precondition} otherwise.
CharSumResult complete_char_sum(const PolyModP& f, int workers = 0);

/// Requires p = 1 (mod 4) and 0 <= L < p/2.
std::uint64_t sigma_count(PrimeModulus p, std::uint64_t L, int workers = 0);

/// The sets A (h values), Z0, Z1 attached to one hyperbola. Elements are reduced mod p.
struct TripleSumConfig {
  HyperbolaParams params;
  std::vector<std::uint64_t> A;
  std::vector<std::uint64_t> Z0;
  std::vector<std::uint64_t> Z1;

  /// Throws Error{precondition} if some element is 0 mod p.
  void validate() const;
};

/// n -> w(n) for the n with w(n) > 0.
std::map<std::uint64_t, std::uint64_t> weight_w(const TripleSumConfig& config);

/// #{(h1, h2, z1, z2) : h1 z1 = h2 z2 (mod p)}, counted directly over quadruples.
std::uint64_t second_moment_W(const TripleSumConfig& config);

std::int64_t triple_sum_S(const TripleSumConfig& config);

/// d_3(n): ordered factorizations n = a b c into positive integers.
std::uint64_t divisor_triples(std::uint64_t n);

struct DoubleSumReport {
  std::uint64_t value = 0;
  std::vector<std::int64_t> inner;
  std::uint64_t interval_size = 0;
  std::uint64_t set_size = 0;
  std::uint64_t trivial_bound = 0;  ///< |I| * |S|
};

/// I = [lo, hi] inside [1, p]; S inside [1, p].
DoubleSumReport double_sum(PrimeModulus p, std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& S,
                           int workers = 0);

using Rational = boost::multiprecision::cpp_rational;

/// Parses "11/34", "0.000001", "1e-6", or sums of those joined by '+'.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

enum class ExponentRule { karatsuba, chang };

struct ExponentCheck {
  bool holds = false;
  bool range_ok = false;  ///< alpha, beta > eps (karatsuba) or eps < beta <= 1/k (chang)
  Rational lhs;           ///< weighted combination of alpha and beta
  Rational rhs;           ///< threshold it must strictly exceed
};

/// alpha, beta in (0, 1), eps >= 0, k >= 1 (ignored by karatsuba).
ExponentCheck exponent_condition(const Rational& alpha, const Rational& beta, unsigned k, const Rational& eps,
                                 ExponentRule rule);

}  // namespace modhyp
