#pragma once

/**
 * @file search.hpp
 * @brief Offset searches on the hyperbola and prime-range scans.
 *
 * Positive-offset searches look for h in h_set, k in k_set with
 * (hk(hk - 4c)/p) in {0, 1}; every reported pair is reconstructed and re-verified.
 * The run search looks for c with ((l - 4c)/p) = ((l + 4c)/p) = -1 for all
 * 1 <= l <= L, which rules out two points in any box of side floor(sqrt(L)).
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modhyp/distance_sets.hpp"
#include "modhyp/hyperbola.hpp"

namespace modhyp {

struct PairConstraint {
  DistanceSetSpec h_set = DistanceSetSpec::all();
  DistanceSetSpec k_set = DistanceSetSpec::all();
  std::uint64_t h_max = 0;  ///< clamped to p - 1 at use
  std::uint64_t k_max = 0;

  /// Both sets unrestricted up to p - 1.
  static PairConstraint unrestricted(const HyperbolaParams& params);
};

struct SearchReport {
  HyperbolaParams params;
  PairConstraint constraint;
  std::optional<PairWitness> found;
  std::optional<std::uint64_t> minimal_H;
  int symbol = -1;  ///< criterion value at the found offset
  std::uint64_t tested_pairs = 0;
  std::chrono::nanoseconds elapsed{0};
};

/// Least H with a pair h in h_set, k in k_set, h, k <= H. Ties: smallest h, then smallest k.
SearchReport minimal_positive_offset(const HyperbolaParams& params, const PairConstraint& constraint);

/// First pair scanning k ascending (outer) then h ascending; h <= h_max, k <= k_max.
SearchReport restricted_pair_search(const HyperbolaParams& params, const PairConstraint& constraint);

/// Offset bounds at a theoretical threshold: H, T and K.
struct ParameterSchedule {
  double H = 0;
  double T = 0;
  double K = 0;
};

/// H = p^{1/4} exp(0.5 (log p)^{1/2+eps}), T = exp(0.25 (log p)^{1/2+eps}) (log p)^{1/2-eps}, K = H T.
ParameterSchedule smooth_schedule(std::uint64_t p, double eps);
/// Same H and T with K = 2 H T.
ParameterSchedule squarefree_schedule(std::uint64_t p, double eps);
/// ceil(p^{11/34 + eps}).
std::uint64_t almost_dense_bound(std::uint64_t p, double eps);

/// Restricted search from a starting bound, doubling both bounds until a pair
/// is found or p - 1 is reached. The report's constraint records the final bounds.
SearchReport widening_search(const HyperbolaParams& params, const DistanceSetSpec& h_set,
                             const DistanceSetSpec& k_set, std::uint64_t start_bound);

struct Theorem1Witness {
  PrimeModulus p;
  std::uint64_t L = 0;
  Residue c;
  bool verified = false;
};

/// Smallest c in (L/4, p - L/4) whose run condition holds, with `verified` filled in.
/// Requires p = 1 (mod 4) and L < p/2.
std::optional<Theorem1Witness> theorem1_witness_search(PrimeModulus p, std::uint64_t L);

/// True when no box of side floor(sqrt(L)) holds two points of xy = c.
/// Throws Error{precondition} if the witness does not satisfy the run condition.
bool verify_theorem1_claim(const Theorem1Witness& witness);

/// How c is chosen per prime.
struct CSelection {
  enum class Mode { single, all, sample };
  Mode mode = Mode::single;
  std::int64_t value = 1;  ///< single
  std::uint64_t count = 0; ///< sample

  static CSelection parse(const std::string& text);
  std::string to_string() const;
  friend bool operator==(const CSelection&, const CSelection&) = default;
};

/// The c values for one prime, ascending. Sampled values are distinct and depend only on (p, seed).
std::vector<std::int64_t> select_c(const CSelection& sel, std::uint64_t p, std::uint64_t seed);

enum class ScanTask { minimal_offset, theorem1, least_nonresidue };

struct ScanOptions {
  std::uint64_t L = 0;
  CSelection c;
  DistanceSetSpec h_set = DistanceSetSpec::all();
  DistanceSetSpec k_set = DistanceSetSpec::all();
  std::uint64_t seed = 0;
  int workers = 0;  ///< 0: OpenMP default
};

struct ScanRow {
  std::uint64_t p = 0;
  std::vector<SearchReport> reports;        ///< minimal_offset, one per c
  std::optional<Theorem1Witness> witness;   ///< theorem1
  std::uint64_t least_nonresidue = 0;       ///< least_nonresidue
  std::string error;                        ///< nonempty when this row failed
};

/// Rows in ascending p, handed to `sink` in order. Theorem1 rows cover p = 1 (mod 4) only.
void scan_primes(std::uint64_t lo, std::uint64_t hi, ScanTask task, const ScanOptions& options,
                 const std::function<void(const ScanRow&)>& sink);

/// Computes one row; exposed for the serial reference and for tests.
ScanRow scan_row(std::uint64_t p, ScanTask task, const ScanOptions& options);

namespace reference {

std::vector<ScanRow> scan_primes(std::uint64_t lo, std::uint64_t hi, ScanTask task, const ScanOptions& options);

}  // namespace reference

}  // namespace modhyp
