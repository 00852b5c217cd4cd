#pragma once

// Brute-force references used only by tests. Nothing here calls into the library's
// arithmetic; everything is plain enumeration with small moduli.

#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t mod(std::int64_t a, std::uint64_t p) {
  const auto m = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((a % m) + m) % m);
}

/// Residue table built by squaring 1..p-1.
inline std::vector<char> square_table(std::uint64_t p) {
  std::vector<char> sq(p, 0);
  for (std::uint64_t x = 1; x < p; ++x) sq[x * x % p] = 1;
  return sq;
}

inline int legendre(std::int64_t a, std::uint64_t p, const std::vector<char>& sq) {
  const std::uint64_t r = mod(a, p);
  if (r == 0) return 0;
  return sq[r] ? 1 : -1;
}

inline int legendre(std::int64_t a, std::uint64_t p) { return legendre(a, p, square_table(p)); }

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t r = 1; r < p; ++r) {
    if (a % p * r % p == 1) return r;
  }
  return 0;
}

/// y(x) = c x^-1 for x in [0, p-1] (y(0) unused).
inline std::vector<std::uint64_t> hyperbola_y(std::uint64_t p, std::uint64_t c) {
  std::vector<std::uint64_t> inv(p, 0);
  for (std::uint64_t a = 1; a < p; ++a) {
    for (std::uint64_t b = 1; b < p; ++b) {
      if (a * b % p == 1) {
        inv[a] = b;
        break;
      }
    }
  }
  std::vector<std::uint64_t> y(p, 0);
  for (std::uint64_t x = 1; x < p; ++x) y[x] = c * inv[x] % p;
  return y;
}

/// counts[h * p + k] = #{x : (x, y(x)) and (x + h, y(x) + k) both on the hyperbola}.
inline std::vector<std::uint32_t> pair_counts(std::uint64_t p, const std::vector<std::uint64_t>& y) {
  std::vector<std::uint32_t> counts(p * p, 0);
  for (std::uint64_t x = 1; x < p; ++x) {
    for (std::uint64_t x2 = 1; x2 < p; ++x2) {
      if (x2 == x) continue;
      const std::uint64_t h = (x2 + p - x) % p;
      const std::uint64_t k = (y[x2] + p - y[x]) % p;
      ++counts[h * p + k];
    }
  }
  return counts;
}

/// Points of xy = c inside the box with corner (X, Y) and offsets 0..H.
inline std::uint64_t box_points(std::uint64_t p, const std::vector<std::uint64_t>& y, std::uint64_t X, std::uint64_t Y,
                                std::uint64_t H) {
  std::uint64_t n = 0;
  for (std::uint64_t x = 1; x < p; ++x) {
    const std::uint64_t i = (x + p - X) % p;
    const std::uint64_t j = (y[x] + p - Y) % p;
    if (i <= H && j <= H) ++n;
  }
  return n;
}

/// Whether any of the p^2 boxes of this side holds two points.
inline bool any_box_with_pair(std::uint64_t p, const std::vector<std::uint64_t>& y, std::uint64_t H) {
  for (std::uint64_t X = 0; X < p; ++X) {
    for (std::uint64_t Y = 0; Y < p; ++Y) {
      if (box_points(p, y, X, Y, H) >= 2) return true;
    }
  }
  return false;
}

inline bool run_condition(std::uint64_t p, std::uint64_t c, std::uint64_t L, const std::vector<char>& sq) {
  for (std::uint64_t l = 1; l <= L; ++l) {
    const auto li = static_cast<std::int64_t>(l);
    const auto c4 = static_cast<std::int64_t>(4 * c);
    if (legendre(li - c4, p, sq) != -1 || legendre(li + c4, p, sq) != -1) return false;
  }
  return true;
}

/// Trial-division factorization into primes with multiplicity.
inline std::vector<std::uint64_t> factor(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      f.push_back(d);
      n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace oracle
