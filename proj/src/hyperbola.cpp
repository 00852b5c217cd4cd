#include "modhyp/hyperbola.hpp"

#include <algorithm>
#include <string>

namespace modhyp {

HyperbolaParams::HyperbolaParams(PrimeModulus p, std::int64_t c) : p_(p), c_(make_residue(c, p)) {
  if (c_.value == 0) {
    throw Error(ErrorKind::invalid_residue,
                "c = " + std::to_string(c) + " is divisible by p = " + std::to_string(p.value()));
  }
}

bool on_hyperbola(const HyperbolaParams& params, const HyperbolaPoint& point) noexcept {
  const std::uint64_t p = params.modulus();
  return point.x.value < p && point.y.value < p && mul_mod(point.x.value, point.y.value, p) == params.c().value;
}

bool is_valid_witness(const HyperbolaParams& params, const PairWitness& w) noexcept {
  const std::uint64_t p = params.modulus();
  if (w.h.value == 0 || w.k.value == 0 || w.h.value >= p || w.k.value >= p) return false;
  return on_hyperbola(params, w.first) && on_hyperbola(params, w.second) &&
         w.second.x.value == add_mod(w.first.x.value, w.h.value, p) &&
         w.second.y.value == add_mod(w.first.y.value, w.k.value, p);
}

std::vector<HyperbolaPoint> enumerate_points(const HyperbolaParams& params) {
  const std::uint64_t p = params.modulus();
  const std::uint64_t c = params.c().value;
  std::vector<HyperbolaPoint> points;
  points.reserve(p - 1);
  for (std::uint64_t x = 1; x < p; ++x) {
    points.push_back({Residue{x}, Residue{mul_mod(c, inverse_mod(x, p), p)}});
  }
  return points;
}

namespace {

void require_offsets(const HyperbolaParams& params, std::uint64_t h, std::uint64_t k) {
  const std::uint64_t p = params.modulus();
  if (h % p == 0 || k % p == 0) {
    throw Error(ErrorKind::precondition, "offsets h and k must be nonzero mod p");
  }
}

}  // namespace

int criterion(const HyperbolaParams& params, std::uint64_t h, std::uint64_t k) {
  require_offsets(params, h, k);
  const std::uint64_t p = params.modulus();
  return criterion_unchecked(p, mul_mod(4, params.c().value, p), h % p, k % p);
}

std::vector<PairWitness> recover_pairs(const HyperbolaParams& params, std::uint64_t h, std::uint64_t k) {
  require_offsets(params, h, k);
  const std::uint64_t p = params.modulus();
  const std::uint64_t c = params.c().value;
  h %= p;
  k %= p;

  const std::uint64_t hk = mul_mod(h, k, p);
  // (2kx + hk)^2 = h^2 k^2 - 4hkc
  const std::uint64_t disc = mul_mod(hk, sub_mod(hk, mul_mod(4, c, p), p), p);
  const std::uint64_t inv_2k = inverse_mod(mul_mod(2, k, p), p);

  std::vector<PairWitness> pairs;
  for (Residue s : sqrt_mod(disc, params.p())) {
    const std::uint64_t x = mul_mod(sub_mod(s.value, hk, p), inv_2k, p);
    const std::uint64_t x2 = add_mod(x, h, p);
    PairWitness w{Residue{h}, Residue{k},
                  {Residue{x}, Residue{mul_mod(c, inverse_mod(x, p), p)}},
                  {Residue{x2}, Residue{mul_mod(c, inverse_mod(x2, p), p)}}};
    if (!is_valid_witness(params, w)) {
      throw Error(ErrorKind::verification, "recovered pair failed to verify");
    }
    pairs.push_back(w);
  }
  std::sort(pairs.begin(), pairs.end(), [](const PairWitness& a, const PairWitness& b) { return a.first < b.first; });
  return pairs;
}

std::uint64_t box_count(const HyperbolaParams& params, const Box& box) {
  const std::uint64_t p = params.modulus();
  if (box.H >= p - 1) return p - 1;
  const std::uint64_t c = params.c().value;
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i <= box.H; ++i) {
    const std::uint64_t x = (box.X.value + i) % p;
    if (x == 0) continue;
    const std::uint64_t y = mul_mod(c, inverse_mod(x, p), p);
    if (sub_mod(y, box.Y.value % p, p) <= box.H) ++count;
  }
  return count;
}

bool box_pair_exists(const HyperbolaParams& params, std::uint64_t side) {
  const std::uint64_t p = params.modulus();
  if (side >= p) throw Error(ErrorKind::precondition, "box side must be below p");
  const std::uint64_t c4 = mul_mod(4, params.c().value, p);
  for (std::uint64_t h = 1; h <= side; ++h) {
    for (std::uint64_t k = 1; k <= side; ++k) {
      if (criterion_unchecked(p, c4, h, k) >= 0) return true;
      if (criterion_unchecked(p, c4, h, p - k) >= 0) return true;
    }
  }
  return false;
}

}  // namespace modhyp
