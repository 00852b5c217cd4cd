#include "modhyp/kernels.hpp"

#include <cstdlib>

#include <omp.h>

namespace modhyp {

bool run_condition_holds(std::uint64_t p, std::uint64_t c, std::uint64_t L) noexcept {
  const std::uint64_t c4 = mul_mod(4, c % p, p);
  for (std::uint64_t l = 1; l <= L; ++l) {
    const std::uint64_t lr = l % p;
    if (jacobi(sub_mod(lr, c4, p), p) != -1) return false;
    if (jacobi(add_mod(lr, c4, p), p) != -1) return false;
  }
  return true;
}

namespace kernels {

int default_workers() noexcept { return omp_get_max_threads(); }

namespace {

int resolve(int workers) noexcept { return workers > 0 ? workers : default_workers(); }

}  // namespace

std::int64_t poly_symbol_sum(const PolyModP& f, int workers) {
  const auto p = static_cast<std::int64_t>(f.modulus().value());
  std::int64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total) num_threads(resolve(workers))
  for (std::int64_t x = 0; x < p; ++x) {
    total += jacobi(f(static_cast<std::uint64_t>(x)), static_cast<std::uint64_t>(p));
  }
  return total;
}

std::uint64_t run_count(PrimeModulus pm, std::uint64_t L, int workers) {
  const std::uint64_t p = pm.value();
  // L/4 < c < p - L/4  <=>  L < 4c < 4p - L
  const auto first = static_cast<std::int64_t>(L / 4 + 1);
  const auto last = static_cast<std::int64_t>((4 * p - L - 1) / 4);
  std::uint64_t count = 0;
#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : count) num_threads(resolve(workers))
  for (std::int64_t c = first; c <= last; ++c) {
    if (run_condition_holds(p, static_cast<std::uint64_t>(c), L)) ++count;
  }
  return count;
}

DoubleSumValue double_sum(PrimeModulus pm, std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> S,
                          int workers) {
  const std::uint64_t p = pm.value();
  DoubleSumValue out;
  if (lo > hi) return out;
  const auto n = static_cast<std::int64_t>(hi - lo + 1);
  out.inner.assign(static_cast<std::size_t>(n), 0);
  std::uint64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total) num_threads(resolve(workers))
  for (std::int64_t i = 0; i < n; ++i) {
    const std::uint64_t x = (lo + static_cast<std::uint64_t>(i)) % p;
    std::int64_t inner = 0;
    for (std::uint64_t y : S) inner += jacobi(add_mod(y % p, x, p), p);
    out.inner[static_cast<std::size_t>(i)] = inner;
    total += static_cast<std::uint64_t>(std::llabs(inner));
  }
  out.total = total;
  return out;
}

}  // namespace kernels

namespace reference {

std::int64_t poly_symbol_sum(const PolyModP& f) {
  const std::uint64_t p = f.modulus().value();
  std::int64_t total = 0;
  for (std::uint64_t x = 0; x < p; ++x) total += jacobi(f(x), p);
  return total;
}

std::uint64_t run_count(PrimeModulus pm, std::uint64_t L) {
  const std::uint64_t p = pm.value();
  std::uint64_t count = 0;
  for (std::uint64_t c = 1; c < p; ++c) {
    if (4 * c > L && 4 * c < 4 * p - L && run_condition_holds(p, c, L)) ++count;
  }
  return count;
}

DoubleSumValue double_sum(PrimeModulus pm, std::uint64_t lo, std::uint64_t hi, std::span<const std::uint64_t> S) {
  DoubleSumValue out;
  for (std::uint64_t x = lo; x <= hi && lo <= hi; ++x) {
    std::int64_t inner = 0;
    for (std::uint64_t y : S) inner += legendre(y + x, pm);
    out.inner.push_back(inner);
    out.total += static_cast<std::uint64_t>(inner < 0 ? -inner : inner);
  }
  return out;
}

}  // namespace reference

}  // namespace modhyp
