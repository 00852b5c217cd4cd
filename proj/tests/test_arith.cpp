#include "doctest.h"

#include <random>

#include "modhyp/arith.hpp"
#include "oracles.hpp"

using namespace modhyp;

TEST_CASE("legendre examples") {
  const PrimeModulus p7(7);
  CHECK(legendre(4, p7) == 1);
  CHECK(legendre(14, p7) == 0);
  CHECK(legendre(3, p7) == -1);
  CHECK(legendre(-3, p7) == legendre(4, p7));
  CHECK(legendre(std::int64_t{-7}, p7) == 0);
}

TEST_CASE("legendre matches squaring table for every p <= 1000") {
  for (std::uint64_t p = 3; p <= 1000; ++p) {
    if (!oracle::is_prime_trial(p)) continue;
    const PrimeModulus pm(p);
    const auto sq = oracle::square_table(p);
    for (std::uint64_t a = 0; a < p; ++a) {
      REQUIRE(legendre(a, pm) == oracle::legendre(static_cast<std::int64_t>(a), p, sq));
    }
  }
}

TEST_CASE("legendre agrees with Euler's criterion at large p") {
  const PrimeModulus p(1000000007);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t a = rng() % p.value();
    const std::uint64_t e = pow_mod(a, (p.value() - 1) / 2, p.value());
    const int expected = a == 0 ? 0 : (e == 1 ? 1 : -1);
    REQUIRE(legendre(a, p) == expected);
  }
}

TEST_CASE("primality") {
  CHECK_THROWS_AS(PrimeModulus(2), Error);
  CHECK_THROWS_AS(PrimeModulus(9), Error);
  CHECK_THROWS_AS(PrimeModulus(1), Error);
  CHECK_NOTHROW(PrimeModulus(3));
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime_trial(n));
  // strong pseudoprimes to several small bases
  CHECK_FALSE(is_prime(3215031751ull));
  CHECK_FALSE(is_prime(3825123056546413051ull));
  CHECK(is_prime(18446744073709551557ull));
  CHECK(is_prime((std::uint64_t{1} << 61) - 1));
  try {
    PrimeModulus bad(15);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_prime);
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, PrimeModulus(7)).value == 5);
  CHECK(mod_inverse(1, PrimeModulus(13)).value == 1);
  CHECK(mod_inverse(2, PrimeModulus(13)).value == 7);
  CHECK(mod_inverse(-1, PrimeModulus(13)).value == 12);
  CHECK_THROWS_AS(mod_inverse(14, PrimeModulus(7)), Error);

  std::mt19937_64 rng(11);
  const PrimeModulus big((std::uint64_t{1} << 61) - 1);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n = 1 + rng() % (big.value() - 1);
    const auto r = mod_inverse(n, big);
    REQUIRE(mul_mod(n, r.value, big.value()) == 1);
    REQUIRE(mod_inverse(r.value, big).value == n);
  }
}

TEST_CASE("sqrt_mod examples") {
  const PrimeModulus p7(7);
  CHECK(sqrt_mod(2, p7) == std::vector<Residue>{{3}, {4}});
  CHECK(sqrt_mod(0, p7) == std::vector<Residue>{{0}});
  CHECK(sqrt_mod(3, p7).empty());
}

TEST_CASE("sqrt_mod cardinality and correctness") {
  for (std::uint64_t p : {3ull, 5ull, 13ull, 17ull, 41ull, 97ull, 193ull, 257ull, 65537ull}) {
    const PrimeModulus pm(p);
    const std::uint64_t step = p > 1000 ? 97 : 1;
    for (std::uint64_t a = 0; a < p; a += step) {
      const auto roots = sqrt_mod(a, pm);
      REQUIRE(static_cast<int>(roots.size()) == 1 + legendre(a, pm));
      for (auto s : roots) REQUIRE(mul_mod(s.value, s.value, p) == a);
    }
  }
  // p = 1 (mod 2^k) exercises the Tonelli-Shanks loop
  const PrimeModulus fermat_like(998244353);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t a = rng() % fermat_like.value();
    const auto roots = sqrt_mod(a, fermat_like);
    REQUIRE(static_cast<int>(roots.size()) == 1 + legendre(a, fermat_like));
    for (auto s : roots) REQUIRE(mul_mod(s.value, s.value, fermat_like.value()) == a);
  }
}

TEST_CASE("least_nonresidue") {
  CHECK(least_nonresidue(PrimeModulus(7)) == 3);
  CHECK(least_nonresidue(PrimeModulus(13)) == 2);
  CHECK(least_nonresidue(PrimeModulus(5)) == 2);
  for (auto p : primes_up_to(20000)) {
    if (p == 2) continue;
    const auto n = least_nonresidue(PrimeModulus(p));
    REQUIRE(oracle::is_prime_trial(n));
    for (std::uint64_t m = 2; m < n; ++m) REQUIRE(legendre(m, PrimeModulus(p)) == 1);
  }
}

TEST_CASE("prime sieves") {
  CHECK(primes_up_to(10) == std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(primes_up_to(1).empty());
  CHECK(primes_up_to(0).empty());
  CHECK(primes_up_to(30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  const auto all = primes_up_to(3000000);
  const auto seg = primes_in_range(1000, 3000000);
  std::vector<std::uint64_t> tail;
  for (auto p : all) {
    if (p >= 1000) tail.push_back(p);
  }
  CHECK(seg == tail);
  CHECK(primes_in_range(24, 28).empty());
  CHECK(primes_in_range(0, 3) == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("isqrt") {
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const auto r = isqrt(n);
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
  CHECK(isqrt(~std::uint64_t{0}) == 4294967295ull);
}
