#pragma once

#include "padicexp/theorem.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace padicexp {

/// Grid scan configuration. The grid is every (p, c, d) with p in `primes`,
/// 1 <= c <= c_max, 1 <= d <= d_max satisfying the standing hypotheses
/// gcd(c,d) = gcd(c,p) = gcd(d,p) = 1.
struct ScanOptions {
  std::vector<Int> primes;
  Int c_max = 100;
  Int d_max = 100;

  /// Also run the round-trip / identity / digit checks on -c for every grid
  /// instance. Classification and bound checks stay positive-only.
  bool include_negative = false;

  /// When > 0, cross-validate that many leading digits of every instance
  /// against the single-modulus oracle.
  std::size_t oracle_digits = 0;

  /// Compare each minimal period length (d > 1) with the brute-force
  /// multiplicative order of p mod d; mismatches are warnings, not failures.
  bool check_period_order = true;

  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 0;
};

struct ScanViolation {
  Int prime;
  Int c;
  Int d;
  BoundCheck check;
};

struct PeriodOrderWarning {
  Int prime;
  Int c;
  Int d;
  std::size_t period_length = 0;
  std::size_t multiplicative_order = 0;
};

/// Aggregate scan outcome. Merging two reports is commutative (sums, maxima,
/// list concatenation) and the final lists are sorted, so the result is
/// independent of how instances were distributed over workers.
struct ScanReport {
  std::uint64_t instances = 0;

  std::uint64_t case1 = 0;
  std::uint64_t case21 = 0;
  std::uint64_t case22 = 0;
  std::uint64_t boundary = 0;
  std::uint64_t trivial = 0;

  /// Hard bound violations (the envelope that must hold; expected empty).
  std::vector<ScanViolation> violations;

  std::uint64_t strict_warning_count = 0;
  std::vector<ScanViolation> strict_warning_samples;  // capped

  std::uint64_t identity_failures = 0;
  std::uint64_t roundtrip_failures = 0;
  std::uint64_t oracle_mismatches = 0;
  std::vector<std::string> failure_samples;  // capped, human-readable

  std::vector<PeriodOrderWarning> period_order_warnings;

  std::size_t max_preperiod = 0;
  std::size_t max_period = 0;

  /// Everything that must be zero for the scan to count as clean.
  std::uint64_t hard_failure_count() const {
    return violations.size() + identity_failures + roundtrip_failures + oracle_mismatches;
  }

  void merge(ScanReport&& other);
};

/// Runs every check over the grid: period detection, the step identity at
/// every index, case classification with bound checks, the reconstruction
/// round trip, and optionally oracle digits and the period/order comparison.
/// Instances are distributed over worker threads; the aggregate is
/// deterministic regardless of scheduling.
ScanReport scan(const ScanOptions& options);

}  // namespace padicexp
