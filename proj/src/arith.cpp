#include "modhyp/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <utility>

namespace modhyp {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) noexcept {
  a %= n;
  if (a == 0) return true;
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < r; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % q == 0) return n == q;
  }
  if (n < 41 * 41) return true;

  std::uint64_t d = n - 1;
  int r = std::countr_zero(d);
  d >>= r;
  // Witness set of Jim Sinclair; deterministic below 2^64.
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    if (!strong_probable_prime(n, a, d, r)) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p <= 2 || p >= kMaxModulus || !is_prime(p)) {
    throw Error(ErrorKind::invalid_prime, "modulus " + std::to_string(p) + " is not an odd prime below 2^62");
  }
}

int jacobi(std::uint64_t a, std::uint64_t n) noexcept {
  a %= n;
  int t = 1;
  while (a != 0) {
    const int z = std::countr_zero(a);
    a >>= z;
    const std::uint64_t r8 = n & 7;
    if ((z & 1) && (r8 == 3 || r8 == 5)) t = -t;
    if ((a & 3) == 3 && (n & 3) == 3) t = -t;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? t : 0;
}

std::uint64_t inverse_mod(std::uint64_t n, std::uint64_t p) {
  n %= p;
  if (n == 0) throw Error(ErrorKind::not_invertible, "0 is not invertible modulo " + std::to_string(p));
  // extended Euclid on signed 128-bit to keep the coefficients exact
  __int128 old_r = p, r = n, old_s = 0, s = 1;
  while (r != 0) {
    const __int128 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  __int128 inv = old_s % static_cast<__int128>(p);
  if (inv < 0) inv += p;
  return static_cast<std::uint64_t>(inv);
}

std::uint64_t least_nonresidue(PrimeModulus p) noexcept {
  std::uint64_t n = 2;
  while (jacobi(n, p.value()) != -1) ++n;
  return n;
}

std::vector<Residue> sqrt_mod(std::uint64_t a, PrimeModulus pm) {
  const std::uint64_t p = pm.value();
  a %= p;
  if (a == 0) return {Residue{0}};
  if (jacobi(a, p) != 1) return {};

  std::uint64_t root = 0;
  if ((p & 3) == 3) {
    root = pow_mod(a, (p + 1) / 4, p);
  } else {
    std::uint64_t q = p - 1;
    int s = std::countr_zero(q);
    q >>= s;
    std::uint64_t c = pow_mod(least_nonresidue(pm), q, p);
    std::uint64_t t = pow_mod(a, q, p);
    root = pow_mod(a, (q + 1) / 2, p);
    int m = s;
    while (t != 1) {
      int i = 0;
      for (std::uint64_t t2 = t; t2 != 1; t2 = mul_mod(t2, t2, p)) ++i;
      std::uint64_t b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      root = mul_mod(root, b, p);
    }
  }
  std::uint64_t other = p - root;
  if (other < root) std::swap(root, other);
  return {Residue{root}, Residue{other}};
}

std::uint64_t isqrt(std::uint64_t n) noexcept {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(n + 1, false);
  for (std::uint64_t i = 2; i * i <= n; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!composite[i]) primes.push_back(i);
  }
  return primes;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  lo = std::max<std::uint64_t>(lo, 2);
  if (lo > hi) return out;
  const auto base = primes_up_to(isqrt(hi));
  constexpr std::uint64_t kSegment = std::uint64_t{1} << 20;
  std::vector<bool> composite;
  for (std::uint64_t seg_lo = lo; seg_lo <= hi;) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + (kSegment - 1));
    composite.assign(seg_hi - seg_lo + 1, false);
    for (std::uint64_t q : base) {
      if (q * q > seg_hi) break;
      std::uint64_t start = std::max(q * q, (seg_lo + q - 1) / q * q);
      for (std::uint64_t j = start; j <= seg_hi; j += q) composite[j - seg_lo] = true;
    }
    for (std::uint64_t i = seg_lo; i <= seg_hi; ++i) {
      if (!composite[i - seg_lo]) out.push_back(i);
    }
    if (seg_hi == hi) break;
    seg_lo = seg_hi + 1;
  }
  return out;
}

}  // namespace modhyp
