#include "modhyp/poly.hpp"

#include <algorithm>

namespace modhyp {

PolyModP::PolyModP(PrimeModulus p, std::vector<std::int64_t> coefficients) : p_(p) {
  c_.reserve(coefficients.size());
  for (auto v : coefficients) c_.push_back(reduce(v, p.value()));
  trim();
}

PolyModP::PolyModP(PrimeModulus p, std::vector<std::uint64_t> reduced, std::in_place_t) : p_(p), c_(std::move(reduced)) {
  for (auto& v : c_) v %= p.value();
  trim();
}

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t PolyModP::operator()(std::uint64_t x) const noexcept {
  const std::uint64_t p = p_.value();
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = add_mod(mul_mod(acc, x, p), *it, p);
  return acc;
}

PolyModP PolyModP::derivative() const {
  const std::uint64_t p = p_.value();
  std::vector<std::uint64_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mul_mod(i % p, c_[i], p));
  return {p_, std::move(d), std::in_place};
}

PolyModP PolyModP::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t p = p_.value();
  const std::uint64_t inv = inverse_mod(leading(), p);
  std::vector<std::uint64_t> m(c_);
  for (auto& v : m) v = mul_mod(v, inv, p);
  return {p_, std::move(m), std::in_place};
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  const std::uint64_t p = a.p_.value();
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] = sub_mod(r[i], b.c_[i], p);
  return {a.p_, std::move(r), std::in_place};
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  if (a.is_zero() || b.is_zero()) return {a.p_, std::vector<std::uint64_t>{}, std::in_place};
  const std::uint64_t p = a.p_.value();
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a.c_[i], b.c_[j], p), p);
  }
  return {a.p_, std::move(r), std::in_place};
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b) {
  if (b.is_zero()) throw Error(ErrorKind::precondition, "polynomial division by zero");
  const std::uint64_t p = a.modulus().value();
  std::vector<std::uint64_t> rem = a.coefficients();
  const auto& d = b.coefficients();
  if (rem.size() < d.size()) return {PolyModP(a.modulus(), {}, std::in_place), a};

  const std::uint64_t inv_lead = inverse_mod(b.leading(), p);
  std::vector<std::uint64_t> quot(rem.size() - d.size() + 1, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const std::uint64_t q = mul_mod(rem[i + d.size() - 1], inv_lead, p);
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) rem[i + j] = sub_mod(rem[i + j], mul_mod(q, d[j], p), p);
  }
  return {PolyModP(a.modulus(), std::move(quot), std::in_place), PolyModP(a.modulus(), std::move(rem), std::in_place)};
}

PolyModP gcd(PolyModP a, PolyModP b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<PolyModP> squarefree_decomposition(const PolyModP& f) {
  if (f.degree() < 1) throw Error(ErrorKind::precondition, "squarefree decomposition needs degree >= 1");
  if (static_cast<std::uint64_t>(f.degree()) >= f.modulus().value()) {
    throw Error(ErrorKind::precondition, "squarefree decomposition needs deg f < p");
  }
  std::vector<PolyModP> factors;

  PolyModP fm = f.monic();
  PolyModP a0 = gcd(fm, fm.derivative());
  PolyModP b = divmod(fm, a0).first;
  PolyModP c = divmod(fm.derivative(), a0).first;
  PolyModP d = c - b.derivative();
  while (b.degree() > 0) {
    PolyModP a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    factors.push_back(std::move(a));
  }
  return factors;
}

}  // namespace modhyp
