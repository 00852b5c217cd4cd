#include "modhyp/search.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <unordered_set>

#include <omp.h>

#include "modhyp/kernels.hpp"

namespace modhyp {

PairConstraint PairConstraint::unrestricted(const HyperbolaParams& params) {
  return {DistanceSetSpec::all(), DistanceSetSpec::all(), params.modulus() - 1, params.modulus() - 1};
}

namespace {

using Clock = std::chrono::steady_clock;

bool contains(const std::vector<std::uint64_t>& sorted, std::uint64_t v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void record_hit(SearchReport& report, std::uint64_t h, std::uint64_t k, int symbol) {
  const auto pairs = recover_pairs(report.params, h, k);
  if (pairs.empty() || !is_valid_witness(report.params, pairs.front())) {
    throw Error(ErrorKind::verification, "criterion accepted an offset with no recoverable pair");
  }
  if (!is_member(report.constraint.h_set, h) || !is_member(report.constraint.k_set, k)) {
    throw Error(ErrorKind::verification, "witness offset outside its distance set");
  }
  report.found = pairs.front();
  report.symbol = symbol;
}

}  // namespace

SearchReport minimal_positive_offset(const HyperbolaParams& params, const PairConstraint& constraint) {
  const auto start = Clock::now();
  SearchReport report{params, constraint, std::nullopt, std::nullopt, -1, 0, {}};
  const std::uint64_t p = params.modulus();
  const std::uint64_t c4 = mul_mod(4, params.c().value, p);
  const std::uint64_t limit = std::min({constraint.h_max, constraint.k_max, p - 1});

  std::uint64_t done = 0;  // every H <= done has been ruled out
  std::uint64_t bound = std::min<std::uint64_t>(limit, 64);
  while (done < limit) {
    const auto hs = members(constraint.h_set, 1, bound);
    const auto ks = members(constraint.k_set, 1, bound);
    for (std::uint64_t H = done + 1; H <= bound; ++H) {
      const bool h_has = contains(hs, H);
      const bool k_has = contains(ks, H);
      if (!h_has && !k_has) continue;
      // pairs with max(h, k) = H, in (h, k) order
      if (k_has) {
        for (auto h : hs) {
          if (h >= H) break;
          ++report.tested_pairs;
          if (int s = criterion_unchecked(p, c4, h, H); s >= 0) {
            record_hit(report, h, H, s);
            report.minimal_H = H;
            report.elapsed = Clock::now() - start;
            return report;
          }
        }
      }
      if (h_has) {
        for (auto k : ks) {
          if (k > H) break;
          ++report.tested_pairs;
          if (int s = criterion_unchecked(p, c4, H, k); s >= 0) {
            record_hit(report, H, k, s);
            report.minimal_H = H;
            report.elapsed = Clock::now() - start;
            return report;
          }
        }
      }
    }
    done = bound;
    bound = std::min(limit, bound * 2);
  }
  report.elapsed = Clock::now() - start;
  return report;
}

SearchReport restricted_pair_search(const HyperbolaParams& params, const PairConstraint& constraint) {
  const auto start = Clock::now();
  SearchReport report{params, constraint, std::nullopt, std::nullopt, -1, 0, {}};
  const std::uint64_t p = params.modulus();
  const std::uint64_t c4 = mul_mod(4, params.c().value, p);
  const std::uint64_t h_max = std::min(constraint.h_max, p - 1);
  const std::uint64_t k_max = std::min(constraint.k_max, p - 1);
  if (h_max == 0 || k_max == 0) {
    report.elapsed = Clock::now() - start;
    return report;
  }
  const auto hs = members(constraint.h_set, 1, h_max);
  if (!hs.empty()) {
    constexpr std::uint64_t kWindow = std::uint64_t{1} << 16;
    for (std::uint64_t lo = 1; lo <= k_max;) {
      const std::uint64_t hi = std::min(k_max, lo + (kWindow - 1));
      for (auto k : members(constraint.k_set, lo, hi)) {
        for (auto h : hs) {
          ++report.tested_pairs;
          if (int s = criterion_unchecked(p, c4, h, k); s >= 0) {
            record_hit(report, h, k, s);
            report.elapsed = Clock::now() - start;
            return report;
          }
        }
      }
      if (hi == k_max) break;
      lo = hi + 1;
    }
  }
  report.elapsed = Clock::now() - start;
  return report;
}

ParameterSchedule smooth_schedule(std::uint64_t p, double eps) {
  const double logp = std::log(static_cast<double>(p));
  const double grow = std::pow(logp, 0.5 + eps);
  ParameterSchedule s;
  s.H = std::pow(static_cast<double>(p), 0.25) * std::exp(0.5 * grow);
  s.T = std::exp(0.25 * grow) * std::pow(logp, 0.5 - eps);
  s.K = s.H * s.T;
  return s;
}

ParameterSchedule squarefree_schedule(std::uint64_t p, double eps) {
  ParameterSchedule s = smooth_schedule(p, eps);
  s.K = 2 * s.H * s.T;
  return s;
}

std::uint64_t almost_dense_bound(std::uint64_t p, double eps) {
  return static_cast<std::uint64_t>(std::ceil(std::pow(static_cast<double>(p), 11.0 / 34.0 + eps)));
}

SearchReport widening_search(const HyperbolaParams& params, const DistanceSetSpec& h_set,
                             const DistanceSetSpec& k_set, std::uint64_t start_bound) {
  const std::uint64_t top = params.modulus() - 1;
  std::uint64_t bound = std::clamp<std::uint64_t>(start_bound, 1, top);
  std::uint64_t tested = 0;
  std::chrono::nanoseconds elapsed{0};
  while (true) {
    SearchReport r = restricted_pair_search(params, {h_set, k_set, bound, bound});
    tested += r.tested_pairs;
    elapsed += r.elapsed;
    if (r.found || bound == top) {
      r.tested_pairs = tested;
      r.elapsed = elapsed;
      return r;
    }
    bound = bound > top / 2 ? top : bound * 2;
  }
}

namespace {

void require_theorem1_inputs(PrimeModulus p, std::uint64_t L) {
  if (p.value() % 4 != 1) throw Error(ErrorKind::precondition, "run search needs p = 1 (mod 4)");
  if (2 * L >= p.value()) throw Error(ErrorKind::precondition, "run search needs L < p/2");
}

}  // namespace

std::optional<Theorem1Witness> theorem1_witness_search(PrimeModulus p, std::uint64_t L) {
  require_theorem1_inputs(p, L);
  const std::uint64_t pv = p.value();
  for (std::uint64_t c = L / 4 + 1; 4 * c < 4 * pv - L; ++c) {
    if (run_condition_holds(pv, c, L)) {
      Theorem1Witness w{p, L, Residue{c}, false};
      w.verified = verify_theorem1_claim(w);
      return w;
    }
  }
  return std::nullopt;
}

bool verify_theorem1_claim(const Theorem1Witness& witness) {
  require_theorem1_inputs(witness.p, witness.L);
  const std::uint64_t p = witness.p.value();
  const std::uint64_t c = witness.c.value;
  if (c == 0 || c >= p || 4 * c <= witness.L || 4 * c >= 4 * p - witness.L ||
      !run_condition_holds(p, c, witness.L)) {
    throw Error(ErrorKind::precondition, "c = " + std::to_string(c) + " is not a run witness");
  }
  return !box_pair_exists(HyperbolaParams(witness.p, static_cast<std::int64_t>(c)), isqrt(witness.L));
}

CSelection CSelection::parse(const std::string& text) {
  CSelection sel;
  auto number = [&](std::string_view s, auto& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorKind::invalid_residue, "malformed c selection '" + text + "'");
    }
  };
  if (text == "all") {
    sel.mode = Mode::all;
  } else if (text.rfind("sample:", 0) == 0) {
    sel.mode = Mode::sample;
    number(std::string_view(text).substr(7), sel.count);
  } else {
    sel.mode = Mode::single;
    number(std::string_view(text), sel.value);
  }
  return sel;
}

std::string CSelection::to_string() const {
  switch (mode) {
    case Mode::all: return "all";
    case Mode::sample: return "sample:" + std::to_string(count);
    case Mode::single: break;
  }
  return std::to_string(value);
}

std::vector<std::int64_t> select_c(const CSelection& sel, std::uint64_t p, std::uint64_t seed) {
  std::vector<std::int64_t> out;
  if (sel.mode == CSelection::Mode::single) {
    out.push_back(sel.value);
    return out;
  }
  if (sel.mode == CSelection::Mode::all || sel.count >= p - 1) {
    for (std::uint64_t c = 1; c < p; ++c) out.push_back(static_cast<std::int64_t>(c));
    return out;
  }
  std::mt19937_64 rng(seed ^ (p * 0x9E3779B97F4A7C15ull));
  std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
  std::unordered_set<std::uint64_t> seen;
  while (seen.size() < sel.count) seen.insert(dist(rng));
  for (auto c : seen) out.push_back(static_cast<std::int64_t>(c));
  std::sort(out.begin(), out.end());
  return out;
}

ScanRow scan_row(std::uint64_t p, ScanTask task, const ScanOptions& options) {
  ScanRow row;
  row.p = p;
  try {
    const PrimeModulus pm(p);
    switch (task) {
      case ScanTask::least_nonresidue:
        row.least_nonresidue = least_nonresidue(pm);
        break;
      case ScanTask::theorem1:
        row.witness = theorem1_witness_search(pm, options.L);
        break;
      case ScanTask::minimal_offset:
        for (auto c : select_c(options.c, p, options.seed)) {
          const HyperbolaParams params(pm, c);
          row.reports.push_back(minimal_positive_offset(params, {options.h_set, options.k_set, p - 1, p - 1}));
        }
        break;
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

namespace {

bool row_wanted(std::uint64_t p, ScanTask task) {
  if (p < 3) return false;
  return task != ScanTask::theorem1 || p % 4 == 1;
}

std::vector<std::uint64_t> scan_primes_list(std::uint64_t lo, std::uint64_t hi, ScanTask task) {
  std::vector<std::uint64_t> primes;
  if (lo > hi) return primes;
  for (auto p : primes_in_range(lo, hi)) {
    if (row_wanted(p, task)) primes.push_back(p);
  }
  return primes;
}

}  // namespace

void scan_primes(std::uint64_t lo, std::uint64_t hi, ScanTask task, const ScanOptions& options,
                 const std::function<void(const ScanRow&)>& sink) {
  const auto primes = scan_primes_list(lo, hi, task);
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
  constexpr std::size_t kChunk = 4096;
  std::vector<ScanRow> rows;
  for (std::size_t begin = 0; begin < primes.size(); begin += kChunk) {
    const std::size_t end = std::min(primes.size(), begin + kChunk);
    rows.assign(end - begin, ScanRow{});
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (std::size_t i = begin; i < end; ++i) rows[i - begin] = scan_row(primes[i], task, options);
    for (const auto& row : rows) sink(row);
  }
}

namespace reference {

std::vector<ScanRow> scan_primes(std::uint64_t lo, std::uint64_t hi, ScanTask task, const ScanOptions& options) {
  std::vector<ScanRow> rows;
  for (std::uint64_t p = lo; p <= hi && lo <= hi; ++p) {
    if (is_prime(p) && row_wanted(p, task)) rows.push_back(scan_row(p, task, options));
  }
  return rows;
}

}  // namespace reference

}  // namespace modhyp
