#include "xsign/oracle.hpp"

#include <algorithm>
#include <array>

#include <omp.h>

namespace xsign {

namespace {

constexpr std::uint64_t kDefaultChunk = std::uint64_t{1} << 16;

void require_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo == 0) throw DomainError("range must start at n >= 1");
  if (lo > hi) throw DomainError("empty range: lo > hi");
  if (hi > kWordLimit) throw DomainError("range exceeds 2^62");
}

void merge_summary(ScanSummary& into, const ScanSummary& part) {
  into.zeros.insert(into.zeros.end(), part.zeros.begin(), part.zeros.end());
  // Parts arrive in increasing n, so strict comparisons keep the smallest n.
  if (part.min_value < into.min_value) {
    into.min_value = part.min_value;
    into.min_at = part.min_at;
  }
  if (part.max_value > into.max_value) {
    into.max_value = part.max_value;
    into.max_at = part.max_at;
  }
  if (part.last_nonpositive) into.last_nonpositive = part.last_nonpositive;
  into.hi = part.hi;
}

std::uint64_t chunk_count(std::uint64_t lo, std::uint64_t hi, std::uint64_t chunk) {
  return (hi - lo) / chunk + 1;
}

}  // namespace

std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Negative: return "neg";
    case Sign::Zero: return "zero";
    case Sign::Positive: return "pos";
  }
  return "?";
}

void append_run(std::vector<SignRun>& runs, const SignRun& next) {
  if (!runs.empty() && runs.back().sign == next.sign && runs.back().hi + 1 == next.lo) {
    runs.back().hi = next.hi;
  } else {
    runs.push_back(next);
  }
}

namespace serial {

std::vector<SignRun> scan_signs(std::uint64_t lo, std::uint64_t hi) {
  require_range(lo, hi);
  std::vector<SignRun> runs;
  SignRun current{lo, lo, sign_of(x_of(lo))};
  for (std::uint64_t n = lo + 1; n <= hi; ++n) {
    const Sign s = sign_of(x_of(n));
    if (s == current.sign) {
      current.hi = n;
    } else {
      runs.push_back(current);
      current = SignRun{n, n, s};
    }
  }
  runs.push_back(current);
  return runs;
}

ScanSummary scan_summary(std::uint64_t lo, std::uint64_t hi) {
  require_range(lo, hi);
  ScanSummary out;
  out.lo = lo;
  out.hi = hi;
  out.min_at = out.max_at = lo;
  out.min_value = out.max_value = x_of(lo);
  for (std::uint64_t n = lo;; ++n) {
    const std::int64_t x = x_of(n);
    if (x == 0) out.zeros.push_back(n);
    if (x < out.min_value) {
      out.min_value = x;
      out.min_at = n;
    }
    if (x > out.max_value) {
      out.max_value = x;
      out.max_at = n;
    }
    if (x <= 0) out.last_nonpositive = n;
    if (n == hi) break;
  }
  return out;
}

}  // namespace serial

std::vector<SignRun> scan_signs_chunked(std::uint64_t lo, std::uint64_t hi,
                                        std::uint64_t chunk) {
  require_range(lo, hi);
  if (chunk == 0) throw DomainError("chunk size must be positive");
  const std::uint64_t parts = chunk_count(lo, hi, chunk);
  std::vector<std::vector<SignRun>> partial(parts);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(parts); ++i) {
    const std::uint64_t a = lo + static_cast<std::uint64_t>(i) * chunk;
    const std::uint64_t b = std::min(hi, a + (chunk - 1));
    partial[i] = serial::scan_signs(a, b);
  }

  std::vector<SignRun> runs;
  for (const auto& part : partial) {
    for (const auto& run : part) append_run(runs, run);
  }
  return runs;
}

std::vector<SignRun> scan_signs(std::uint64_t lo, std::uint64_t hi) {
  return scan_signs_chunked(lo, hi, kDefaultChunk);
}

ScanSummary scan_summary_chunked(std::uint64_t lo, std::uint64_t hi,
                                 std::uint64_t chunk) {
  require_range(lo, hi);
  if (chunk == 0) throw DomainError("chunk size must be positive");
  const std::uint64_t parts = chunk_count(lo, hi, chunk);
  std::vector<ScanSummary> partial(parts);

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(parts); ++i) {
    const std::uint64_t a = lo + static_cast<std::uint64_t>(i) * chunk;
    const std::uint64_t b = std::min(hi, a + (chunk - 1));
    partial[i] = serial::scan_summary(a, b);
  }

  ScanSummary out = partial.front();
  for (std::size_t i = 1; i < partial.size(); ++i) merge_summary(out, partial[i]);
  out.lo = lo;
  out.hi = hi;
  return out;
}

ScanSummary scan_summary(std::uint64_t lo, std::uint64_t hi) {
  return scan_summary_chunked(lo, hi, kDefaultChunk);
}

std::pair<std::uint64_t, std::int64_t> second_minimum(std::uint64_t hi,
                                                      std::uint64_t exclude) {
  if (hi == 0 || exclude == 0) throw DomainError("hi and exclude must be positive");
  if (hi < exclude) throw DomainError("second_minimum requires hi >= exclude");
  if (hi == 1 && exclude == 1) throw DomainError("empty search set");
  if (exclude == 1) {
    const ScanSummary s = scan_summary(2, hi);
    return {s.min_at, s.min_value};
  }
  ScanSummary below = scan_summary(1, exclude - 1);
  if (exclude < hi) {
    const ScanSummary above = scan_summary(exclude + 1, hi);
    if (above.min_value < below.min_value) return {above.min_at, above.min_value};
  }
  return {below.min_at, below.min_value};
}

std::vector<EvalRow> emit_exercise_table() {
  static constexpr std::array<std::uint64_t, 21> kRows{
      1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 20, 50, 100, 200, 300, 400, 500, 1000};
  std::vector<EvalRow> rows;
  rows.reserve(kRows.size());
  for (std::uint64_t n : kRows) rows.push_back(eval_row(n));
  return rows;
}

ExceedWitness find_exceeding(const BigInt& bound) {
  if (bound < 0) throw DomainError("bound must be non-negative");
  const BigInt target = 3 * bound + 1;
  ExceedWitness w;
  w.k = 6;
  while (pow2(w.k + 2) <= target) ++w.k;
  w.n = pow2(2 * w.k + 2);
  w.x = x_of(w.n);
  if (w.x <= bound) {
    throw std::logic_error("exceed witness failed exact verification");
  }
  return w;
}

}  // namespace xsign
