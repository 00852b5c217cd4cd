#pragma once

/**
 * @file hyperbola.hpp
 * @brief The modular hyperbola xy = c (mod p), boxes on it, and the offset criterion.
 *
 * Two points (x, y) and (x + h, y + k) lie on the hyperbola exactly when
 * k x^2 + h k x + h c = 0 (mod p). Completing the square turns this into
 * (2kx + hk)^2 = hk(hk - 4c), so the number of such x is 1 + (hk(hk - 4c) / p).
 */

#include <cstdint>
#include <vector>

#include "modhyp/arith.hpp"

namespace modhyp {

/// The pair (p, c) with c invertible mod p.
class HyperbolaParams {
 public:
  HyperbolaParams(PrimeModulus p, std::int64_t c);

  PrimeModulus p() const noexcept { return p_; }
  Residue c() const noexcept { return c_; }
  std::uint64_t modulus() const noexcept { return p_.value(); }

  friend bool operator==(const HyperbolaParams&, const HyperbolaParams&) = default;

 private:
  PrimeModulus p_;
  Residue c_;
};

struct HyperbolaPoint {
  Residue x;
  Residue y;

  friend auto operator<=>(const HyperbolaPoint&, const HyperbolaPoint&) = default;
};

/// B_{X,Y}(H): offsets 0..H inclusive on both axes, wrapping mod p.
struct Box {
  Residue X;
  Residue Y;
  std::uint64_t H = 0;
};

/// A verified pair of hyperbola points at offset (h, k).
struct PairWitness {
  Residue h;
  Residue k;
  HyperbolaPoint first;
  HyperbolaPoint second;

  friend bool operator==(const PairWitness&, const PairWitness&) = default;
};

bool on_hyperbola(const HyperbolaParams& params, const HyperbolaPoint& point) noexcept;

/// Checks every PairWitness invariant against params.
bool is_valid_witness(const HyperbolaParams& params, const PairWitness& w) noexcept;

/// All p-1 points ordered by x.
std::vector<HyperbolaPoint> enumerate_points(const HyperbolaParams& params);

/// (hk(hk - 4c) / p). Throws Error{precondition} when h or k is 0 mod p.
int criterion(const HyperbolaParams& params, std::uint64_t h, std::uint64_t k);

/// Unchecked criterion for hot loops; h, k must already be nonzero residues.
inline int criterion_unchecked(std::uint64_t p, std::uint64_t c4, std::uint64_t h, std::uint64_t k) noexcept {
  const std::uint64_t hk = mul_mod(h, k, p);
  return jacobi(mul_mod(hk, sub_mod(hk, c4, p), p), p);
}

/// Reconstructs the pairs at offset (h, k), ordered by first.x. Length is max(0, 1 + criterion).
std::vector<PairWitness> recover_pairs(const HyperbolaParams& params, std::uint64_t h, std::uint64_t k);

/// Number of hyperbola points in the box.
std::uint64_t box_count(const HyperbolaParams& params, const Box& box);

/// Whether some box of this side holds two or more points.
/// Decided through offsets h in [1, side] and signed k in [1, side] or [p - side, p - 1].
bool box_pair_exists(const HyperbolaParams& params, std::uint64_t side);

}  // namespace modhyp
