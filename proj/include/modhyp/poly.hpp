#pragma once

/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over F_p, just enough for squarefree
 * decomposition: derivative, division with remainder, gcd.
 */

#include <cstdint>
#include <utility>
#include <vector>

#include "modhyp/arith.hpp"

namespace modhyp {

/// Coefficients low to high, trimmed so the leading coefficient is nonzero.
/// The zero polynomial has no coefficients.
class PolyModP {
 public:
  PolyModP(PrimeModulus p, std::vector<std::int64_t> coefficients);
  PolyModP(PrimeModulus p, std::vector<std::uint64_t> reduced, std::in_place_t);

  PrimeModulus modulus() const noexcept { return p_; }
  const std::vector<std::uint64_t>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }

  std::uint64_t operator()(std::uint64_t x) const noexcept;

  PolyModP derivative() const;
  PolyModP monic() const;

  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  friend bool operator==(const PolyModP& a, const PolyModP& b) = default;

 private:
  void trim();

  PrimeModulus p_;
  std::vector<std::uint64_t> c_;
};

/// Quotient and remainder; throws Error{precondition} on division by zero.
std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);

/// Monic gcd (zero when both inputs are zero).
PolyModP gcd(PolyModP a, PolyModP b);

/// Yun's squarefree decomposition: f = lc * prod a_i^i with a_i monic, squarefree, coprime.
/// Entry i-1 holds a_i. Requires deg f < p.
std::vector<PolyModP> squarefree_decomposition(const PolyModP& f);

}  // namespace modhyp
