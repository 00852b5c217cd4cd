#pragma once

/**
 * @file arith.hpp
 * @brief Exact modular arithmetic over odd prime moduli.
 *
 * Everything here works on 64-bit residues with 128-bit intermediates, so
 * moduli up to 2^62 are safe. Functions are pure and thread-safe.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <vector>

#include "modhyp/errors.hpp"

namespace modhyp {

/// Largest modulus accepted by PrimeModulus.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// An odd prime p < 2^62. Construction validates primality.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  operator std::uint64_t() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint64_t p_;
};

/// An element of [0, p-1]. The modulus it belongs to is carried by context.
struct Residue {
  std::uint64_t value = 0;

  friend auto operator<=>(Residue, Residue) = default;
};

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Reduce any integer into [0, p-1].
template <std::integral T>
constexpr std::uint64_t reduce(T a, std::uint64_t p) noexcept {
  if constexpr (std::is_signed_v<T>) {
    const auto m = static_cast<std::int64_t>(p);
    std::int64_t r = static_cast<std::int64_t>(a) % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
  } else {
    return static_cast<std::uint64_t>(a) % p;
  }
}

inline Residue make_residue(std::int64_t a, PrimeModulus p) noexcept { return {reduce(a, p.value())}; }

/// Jacobi symbol (a/n) for odd n, binary algorithm.
int jacobi(std::uint64_t a, std::uint64_t n) noexcept;

/// Legendre symbol (a/p) in {-1, 0, 1}. Accepts any integer; it is reduced first.
template <std::integral T>
int legendre(T a, PrimeModulus p) noexcept {
  return jacobi(reduce(a, p.value()), p.value());
}

/// Multiplicative inverse in (0, p). Throws Error{not_invertible} when p | n.
std::uint64_t inverse_mod(std::uint64_t n, std::uint64_t p);

template <std::integral T>
Residue mod_inverse(T n, PrimeModulus p) {
  return {inverse_mod(reduce(n, p.value()), p.value())};
}

/// All s in [0, p-1] with s^2 = a (mod p), ascending. Tonelli-Shanks.
std::vector<Residue> sqrt_mod(std::uint64_t a, PrimeModulus p);

template <std::signed_integral T>
std::vector<Residue> sqrt_mod(T a, PrimeModulus p) {
  return sqrt_mod(reduce(a, p.value()), p);
}

/// Smallest n >= 2 with (n/p) = -1.
std::uint64_t least_nonresidue(PrimeModulus p) noexcept;

/// Primes <= n, ascending (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Primes in [lo, hi], ascending (segmented sieve).
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Floor of the square root of n.
std::uint64_t isqrt(std::uint64_t n) noexcept;

}  // namespace modhyp
