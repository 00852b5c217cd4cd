#include "modhyp/distance_sets.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "modhyp/arith.hpp"

namespace modhyp {

DistanceSetSpec DistanceSetSpec::smooth(std::uint64_t bound) {
  if (bound < 2) throw Error(ErrorKind::bad_set_spec, "smooth bound must be at least 2");
  DistanceSetSpec s(SetKind::smooth);
  s.bound_ = bound;
  return s;
}

DistanceSetSpec DistanceSetSpec::mult_closure(std::vector<std::uint64_t> generators) {
  if (generators.empty()) throw Error(ErrorKind::bad_set_spec, "multiplicative closure needs generators");
  for (auto g : generators) {
    if (g < 2) throw Error(ErrorKind::bad_set_spec, "closure generators must be at least 2");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  DistanceSetSpec s(SetKind::mult_closure);
  s.values_ = std::move(generators);
  return s;
}

DistanceSetSpec DistanceSetSpec::explicit_list(std::vector<std::uint64_t> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 1) throw Error(ErrorKind::bad_set_spec, "explicit set entries must be positive");
    if (i > 0 && values[i] <= values[i - 1]) {
      throw Error(ErrorKind::bad_set_spec, "explicit set must be strictly increasing");
    }
  }
  DistanceSetSpec s(SetKind::explicit_list);
  s.values_ = std::move(values);
  return s;
}

namespace {

std::uint64_t parse_uint(std::string_view text, const std::string& whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::bad_set_spec, "malformed set spec '" + whole + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_list(std::string_view text, const std::string& whole) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_uint(text.substr(start, comma - start), whole));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace

DistanceSetSpec DistanceSetSpec::parse(const std::string& text) {
  if (text == "all") return all();
  if (text == "primes") return primes();
  if (text == "squarefree") return squarefree();
  if (text == "semiprime2") return semiprime_distinct();

  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::bad_set_spec, "unknown set spec '" + text + "'");
  const std::string_view head(text.data(), colon);
  const std::string_view tail(text.data() + colon + 1, text.size() - colon - 1);
  if (head == "smooth") return smooth(parse_uint(tail, text));
  if (head == "multclosed") return mult_closure(parse_list(tail, text));
  if (head == "explicit") return explicit_list(parse_list(tail, text));
  throw Error(ErrorKind::bad_set_spec, "unknown set spec '" + text + "'");
}

std::string DistanceSetSpec::to_string() const {
  switch (kind_) {
    case SetKind::all: return "all";
    case SetKind::primes: return "primes";
    case SetKind::squarefree: return "squarefree";
    case SetKind::semiprime_distinct: return "semiprime2";
    case SetKind::smooth: return "smooth:" + std::to_string(bound_);
    case SetKind::mult_closure: return "multclosed:" + join(values_);
    case SetKind::explicit_list: return "explicit:" + join(values_);
  }
  return {};
}

namespace {

struct FactorShape {
  unsigned big_omega = 0;  // prime factors with multiplicity
  bool squarefree = true;
  std::uint64_t largest = 1;
};

FactorShape factor_shape(std::uint64_t n) {
  FactorShape s;
  auto take = [&](std::uint64_t q) {
    unsigned e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e) {
      s.big_omega += e;
      if (e > 1) s.squarefree = false;
      s.largest = q;
    }
  };
  take(2);
  for (std::uint64_t q = 3; q <= n / q; q += 2) take(q);
  if (n > 1) {
    ++s.big_omega;
    s.largest = std::max(s.largest, n);
  }
  return s;
}

bool shape_matches(const DistanceSetSpec& spec, const FactorShape& s) {
  switch (spec.kind()) {
    case SetKind::squarefree: return s.squarefree;
    case SetKind::smooth: return s.largest <= spec.smooth_bound();
    case SetKind::semiprime_distinct: return s.big_omega == 2 && s.squarefree;
    case SetKind::primes: return s.big_omega == 1;
    default: return false;
  }
}

// Factor shapes for every n in [lo, hi] by sieving with primes up to sqrt(hi).
void sieve_shapes(const DistanceSetSpec& spec, std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
  const auto base = primes_up_to(isqrt(hi));
  constexpr std::uint64_t kSegment = std::uint64_t{1} << 18;
  std::vector<std::uint64_t> rem;
  std::vector<FactorShape> shapes;
  for (std::uint64_t seg_lo = lo;;) {
    const std::uint64_t seg_hi = std::min(hi, seg_lo + (kSegment - 1));
    const std::size_t len = seg_hi - seg_lo + 1;
    rem.resize(len);
    std::iota(rem.begin(), rem.end(), seg_lo);
    shapes.assign(len, FactorShape{});
    for (std::uint64_t q : base) {
      for (std::uint64_t m = (seg_lo + q - 1) / q * q; m <= seg_hi; m += q) {
        const std::size_t i = m - seg_lo;
        unsigned e = 0;
        while (rem[i] % q == 0) {
          rem[i] /= q;
          ++e;
        }
        shapes[i].big_omega += e;
        if (e > 1) shapes[i].squarefree = false;
        shapes[i].largest = q;
      }
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (rem[i] > 1) {
        ++shapes[i].big_omega;
        shapes[i].largest = std::max(shapes[i].largest, rem[i]);
      }
      if (shape_matches(spec, shapes[i])) out.push_back(seg_lo + i);
    }
    if (seg_hi == hi) break;
    seg_lo = seg_hi + 1;
  }
}

// Products of one or more generators in [lo, hi], ascending, via a min-heap of partial products.
void closure_members(const std::vector<std::uint64_t>& gens, std::uint64_t lo, std::uint64_t hi,
                     std::vector<std::uint64_t>& out) {
  std::priority_queue<std::uint64_t, std::vector<std::uint64_t>, std::greater<>> heap;
  for (auto g : gens) {
    if (g <= hi) heap.push(g);
  }
  std::uint64_t last = 0;
  while (!heap.empty()) {
    const std::uint64_t v = heap.top();
    heap.pop();
    if (v == last) continue;
    last = v;
    if (v >= lo) out.push_back(v);
    for (auto g : gens) {
      if (v > hi / g) break;
      heap.push(v * g);
    }
  }
}

bool closure_contains(const std::vector<std::uint64_t>& gens, std::uint64_t n,
                      std::unordered_map<std::uint64_t, bool>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  bool found = false;
  for (auto g : gens) {
    if (g > n) break;
    if (n % g != 0) continue;
    if (n == g || closure_contains(gens, n / g, memo)) {
      found = true;
      break;
    }
  }
  memo[n] = found;
  return found;
}

}  // namespace

std::vector<std::uint64_t> members(const DistanceSetSpec& spec, std::uint64_t lo, std::uint64_t hi,
                                   std::uint64_t budget) {
  if (lo < 1 || lo > hi) throw Error(ErrorKind::precondition, "members needs 1 <= lo <= hi");
  std::vector<std::uint64_t> out;
  switch (spec.kind()) {
    case SetKind::mult_closure:
      closure_members(spec.values(), lo, hi, out);
      return out;
    case SetKind::explicit_list: {
      const auto& v = spec.values();
      auto first = std::lower_bound(v.begin(), v.end(), lo);
      auto last = std::upper_bound(v.begin(), v.end(), hi);
      return {first, last};
    }
    default: break;
  }
  if (hi - lo >= budget) {
    throw Error(ErrorKind::budget_exceeded,
                "range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] exceeds the sieve budget");
  }
  switch (spec.kind()) {
    case SetKind::all:
      out.resize(hi - lo + 1);
      std::iota(out.begin(), out.end(), lo);
      break;
    case SetKind::primes: out = primes_in_range(lo, hi); break;
    default: sieve_shapes(spec, lo, hi, out); break;
  }
  return out;
}

bool is_member(const DistanceSetSpec& spec, std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::precondition, "membership is defined for n >= 1");
  switch (spec.kind()) {
    case SetKind::all: return true;
    case SetKind::primes: return is_prime(n);
    case SetKind::explicit_list: return std::binary_search(spec.values().begin(), spec.values().end(), n);
    case SetKind::mult_closure: {
      std::unordered_map<std::uint64_t, bool> memo;
      return closure_contains(spec.values(), n, memo);
    }
    default: return shape_matches(spec, factor_shape(n));
  }
}

DensityReport density_report(const DistanceSetSpec& spec, std::uint64_t X, std::uint64_t budget) {
  if (X < 1) throw Error(ErrorKind::precondition, "density needs X >= 1");
  DensityReport r;
  r.X = X;
  r.count = members(spec, 1, X, budget).size();
  r.dyadic_count = members(spec, X, 2 * X, budget).size();
  const std::uint64_t g = std::gcd(r.count, X);
  r.ratio_num = r.count / g;
  r.ratio_den = X / g;
  return r;
}

}  // namespace modhyp
