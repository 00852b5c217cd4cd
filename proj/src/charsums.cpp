#include "modhyp/charsums.hpp"

#include <cctype>
#include <cmath>
#include <unordered_set>

namespace modhyp {

bool CharSumResult::within_bound() const noexcept {
  return static_cast<double>(value < 0 ? -value : value) <= weil_bound + 1e-9;
}

bool is_constant_times_square(const PolyModP& f) {
  const auto factors = squarefree_decomposition(f);
  for (std::size_t i = 0; i < factors.size(); i += 2) {
    // factors[i] has multiplicity i + 1, odd here
    if (factors[i].degree() > 0) return false;
  }
  return true;
}

int distinct_root_count(const PolyModP& f) {
  if (f.degree() < 1) return 0;
  const PolyModP g = gcd(f, f.derivative());
  return divmod(f, g).first.degree();
}

CharSumResult complete_char_sum(const PolyModP& f, int workers) {
  if (f.degree() < 1) throw Error(ErrorKind::precondition, "character sum needs a polynomial of degree >= 1");
  if (static_cast<std::uint64_t>(f.degree()) >= f.modulus().value()) {
    throw Error(ErrorKind::precondition, "character sum needs deg f < p");
  }
  CharSumResult r;
  r.value = kernels::poly_symbol_sum(f, workers);
  r.distinct_roots_m = distinct_root_count(f);
  r.weil_bound = (r.distinct_roots_m - 1) * std::sqrt(static_cast<double>(f.modulus().value()));
  r.weil_applicable = !is_constant_times_square(f);
  return r;
}

std::uint64_t sigma_count(PrimeModulus p, std::uint64_t L, int workers) {
  if (p.value() % 4 != 1) throw Error(ErrorKind::precondition, "run count needs p = 1 (mod 4)");
  if (2 * L >= p.value()) throw Error(ErrorKind::precondition, "run count needs L < p/2");
  return kernels::run_count(p, L, workers);
}

void TripleSumConfig::validate() const {
  const std::uint64_t p = params.modulus();
  for (const auto* set : {&A, &Z0, &Z1}) {
    for (auto v : *set) {
      if (v % p == 0) throw Error(ErrorKind::precondition, "triple-sum sets must avoid 0 mod p");
    }
  }
}

std::map<std::uint64_t, std::uint64_t> weight_w(const TripleSumConfig& config) {
  config.validate();
  const std::uint64_t p = config.params.modulus();
  const std::uint64_t c4 = mul_mod(4, config.params.c().value, p);
  std::map<std::uint64_t, std::uint64_t> w;
  for (auto h : config.A) {
    for (auto z1 : config.Z1) {
      // h z1 n = 4c  =>  n = 4c (h z1)^-1
      const std::uint64_t n = mul_mod(c4, inverse_mod(mul_mod(h % p, z1 % p, p), p), p);
      ++w[n];
    }
  }
  return w;
}

std::uint64_t second_moment_W(const TripleSumConfig& config) {
  config.validate();
  const std::uint64_t p = config.params.modulus();
  std::unordered_multiset<std::uint64_t> z1_set;
  for (auto z : config.Z1) z1_set.insert(z % p);
  std::uint64_t count = 0;
  for (auto h1 : config.A) {
    for (auto h2 : config.A) {
      const std::uint64_t ratio = mul_mod(h1 % p, inverse_mod(h2 % p, p), p);
      for (auto z1 : config.Z1) count += z1_set.count(mul_mod(ratio, z1 % p, p));
    }
  }
  return count;
}

std::int64_t triple_sum_S(const TripleSumConfig& config) {
  config.validate();
  const PrimeModulus pm = config.params.p();
  const std::uint64_t p = pm.value();
  const std::uint64_t c4 = mul_mod(4, config.params.c().value, p);
  std::int64_t total = 0;
  for (auto h : config.A) {
    for (auto z1 : config.Z1) {
      const std::uint64_t shift = mul_mod(c4, inverse_mod(mul_mod(h % p, z1 % p, p), p), p);
      for (auto z0 : config.Z0) total += jacobi(sub_mod(z0 % p, shift, p), p);
    }
  }
  return total;
}

std::uint64_t divisor_triples(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= n; ++a) {
    if (n % a) continue;
    const std::uint64_t m = n / a;
    for (std::uint64_t b = 1; b * b <= m; ++b) {
      if (m % b) continue;
      count += (b * b == m) ? 1 : 2;
    }
  }
  return count;
}

DoubleSumReport double_sum(PrimeModulus p, std::uint64_t lo, std::uint64_t hi, const std::vector<std::uint64_t>& S,
                           int workers) {
  if (lo < 1 || hi > p.value() || lo > hi) throw Error(ErrorKind::precondition, "interval must lie inside [1, p]");
  for (auto y : S) {
    if (y < 1 || y > p.value()) throw Error(ErrorKind::precondition, "set S must lie inside [1, p]");
  }
  auto v = kernels::double_sum(p, lo, hi, S, workers);
  DoubleSumReport r;
  r.value = v.total;
  r.inner = std::move(v.inner);
  r.interval_size = hi - lo + 1;
  r.set_size = S.size();
  r.trivial_bound = r.interval_size * r.set_size;
  return r;
}

namespace {

Rational parse_term(const std::string& term, const std::string& whole) {
  auto fail = [&] { return Error(ErrorKind::precondition, "malformed rational '" + whole + "'"); };
  if (term.empty()) throw fail();
  using boost::multiprecision::cpp_int;

  if (const auto slash = term.find('/'); slash != std::string::npos) {
    const Rational num = parse_term(term.substr(0, slash), whole);
    const Rational den = parse_term(term.substr(slash + 1), whole);
    if (den == 0) throw fail();
    return num / den;
  }

  std::size_t i = 0;
  bool negative = false;
  if (term[i] == '-' || term[i] == '+') negative = term[i++] == '-';
  cpp_int mantissa = 0;
  long long frac_digits = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < term.size(); ++i) {
    const char ch = term[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa = mantissa * 10 + (ch - '0');
      if (seen_point) ++frac_digits;
      seen_digit = true;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw fail();
  long long exponent = 0;
  if (i < term.size()) {
    if (term[i] != 'e' && term[i] != 'E') throw fail();
    try {
      std::size_t used = 0;
      exponent = std::stoll(term.substr(i + 1), &used);
      if (used != term.size() - i - 1) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
  }
  exponent -= frac_digits;
  if (exponent > 4000 || exponent < -4000) throw fail();
  Rational value(mantissa);
  const cpp_int scale = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  value = exponent < 0 ? value / Rational(scale) : value * Rational(scale);
  return negative ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  Rational total = 0;
  std::size_t start = 0;
  while (true) {
    // a '+' directly after an exponent marker belongs to the number
    std::size_t plus = compact.find('+', start + 1);
    while (plus != std::string::npos && (compact[plus - 1] == 'e' || compact[plus - 1] == 'E')) {
      plus = compact.find('+', plus + 1);
    }
    total += parse_term(compact.substr(start, plus - start), text);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return total;
}

std::string format_rational(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

ExponentCheck exponent_condition(const Rational& alpha, const Rational& beta, unsigned k, const Rational& eps,
                                 ExponentRule rule) {
  if (alpha <= 0 || alpha >= 1 || beta <= 0 || beta >= 1) {
    throw Error(ErrorKind::precondition, "alpha and beta must lie in (0, 1)");
  }
  if (eps < 0) throw Error(ErrorKind::precondition, "epsilon must be nonnegative");
  ExponentCheck r;
  if (rule == ExponentRule::karatsuba) {
    r.range_ok = alpha > eps && beta > eps;
    r.lhs = alpha + 2 * beta;
    r.rhs = 1 + eps;
  } else {
    if (k == 0) throw Error(ErrorKind::precondition, "k must be a positive integer");
    const Rational kk(k);
    r.range_ok = eps < beta && beta <= 1 / kk;
    r.lhs = (1 - Rational(2) / (3 * kk)) * alpha + Rational(2, 3) * (1 + 2 / kk) * beta;
    r.rhs = Rational(1, 2) + 1 / (3 * kk) + eps;
  }
  r.holds = r.range_ok && r.lhs > r.rhs;
  return r;
}

}  // namespace modhyp
