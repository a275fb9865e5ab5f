#pragma once

// Brute-force ground truth for the sign of x(n): run decomposition, zero
// sets and extrema over explicit ranges.
//
// The default entry points partition the range across OpenMP threads and
// merge partial results in range order, so their output is bit-identical to
// the single-threaded kernels in `xsign::serial`, which are kept as the
// reference implementation.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "xsign/core.hpp"

namespace xsign {

enum class Sign { Negative, Zero, Positive };

constexpr Sign sign_of(std::int64_t v) {
  return v < 0 ? Sign::Negative : (v == 0 ? Sign::Zero : Sign::Positive);
}

std::string_view to_string(Sign s);

struct SignRun {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  Sign sign = Sign::Negative;

  friend bool operator==(const SignRun&, const SignRun&) = default;
};

struct ScanSummary {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<std::uint64_t> zeros;
  std::uint64_t min_at = 0;
  std::int64_t min_value = 0;
  std::uint64_t max_at = 0;
  std::int64_t max_value = 0;
  std::optional<std::uint64_t> last_nonpositive;

  friend bool operator==(const ScanSummary&, const ScanSummary&) = default;
};

namespace serial {

std::vector<SignRun> scan_signs(std::uint64_t lo, std::uint64_t hi);
ScanSummary scan_summary(std::uint64_t lo, std::uint64_t hi);

}  // namespace serial

/// Maximal constant-sign runs tiling [lo, hi]. Requires 1 <= lo <= hi <= 2^62.
std::vector<SignRun> scan_signs(std::uint64_t lo, std::uint64_t hi);

/// Same as scan_signs but with an explicit chunk size for the partition.
/// Output does not depend on `chunk`.
std::vector<SignRun> scan_signs_chunked(std::uint64_t lo, std::uint64_t hi,
                                        std::uint64_t chunk);

ScanSummary scan_summary(std::uint64_t lo, std::uint64_t hi);
ScanSummary scan_summary_chunked(std::uint64_t lo, std::uint64_t hi,
                                 std::uint64_t chunk);

/// Appends `next` to `runs`, merging with the last run when the signs agree
/// and the ranges touch.
void append_run(std::vector<SignRun>& runs, const SignRun& next);

/// Minimum of x over [1, hi] without `exclude`; ties go to the smallest n.
std::pair<std::uint64_t, std::int64_t> second_minimum(std::uint64_t hi,
                                                      std::uint64_t exclude);

/// The 21 rows n = 1..13, 20, 50, 100, 200, 300, 400, 500, 1000.
std::vector<EvalRow> emit_exercise_table();

struct ExceedWitness {
  std::uint64_t k = 0;  // n = 2^(2k+2)
  BigInt n;
  BigInt x;
};

/// Smallest k >= 6 with 2^(k+2) > 3B + 1 gives n = 2^(2k+2) with x(n) > B.
/// The returned x is evaluated exactly and checked against B.
ExceedWitness find_exceeding(const BigInt& bound);

}  // namespace xsign
