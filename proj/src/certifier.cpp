#include "xsign/certifier.hpp"

#include <algorithm>

namespace xsign {

namespace {

// First n in [lo, hi] with x(n) >= threshold, or hi + 1. x must be
// non-decreasing on [lo, hi].
std::uint64_t first_at_least(std::uint64_t lo, std::uint64_t hi, std::int64_t threshold) {
  std::uint64_t a = lo;
  std::uint64_t b = hi + 1;
  while (a < b) {
    const std::uint64_t mid = a + (b - a) / 2;
    if (x_of(mid) >= threshold) {
      b = mid;
    } else {
      a = mid + 1;
    }
  }
  return a;
}

void push_if_nonempty(std::vector<Segment>& out, std::uint64_t lo, std::uint64_t hi,
                      Sign sign, std::uint64_t anchor) {
  if (lo <= hi) out.push_back(Segment{lo, hi, sign, Method::Lemma3Block, anchor});
}

}  // namespace

std::string_view to_string(Method m) {
  switch (m) {
    case Method::BruteForce: return "brute";
    case Method::Lemma2NegUp: return "lemma2-neg";
    case Method::Lemma2PosDown: return "lemma2-pos";
    case Method::Lemma3Block: return "lemma3-block";
  }
  return "?";
}

std::pair<std::int64_t, std::int64_t> sandwich_bounds(std::uint64_t a, std::uint64_t b) {
  if (a == 0) throw DomainError("a must be positive");
  if (a > b) throw DomainError("sandwich_bounds requires a <= b");
  const auto za = static_cast<std::int64_t>(z_of(a));
  const auto zb = static_cast<std::int64_t>(z_of(b));
  const auto ra = static_cast<std::int64_t>(r_of(a));
  const auto rb = static_cast<std::int64_t>(r_of(b));
  const auto ma = static_cast<std::int64_t>(m_of(a));
  const auto mb = static_cast<std::int64_t>(m_of(b));
  return {za - (rb + 1) * mb, zb - (ra + 1) * ma};
}

std::uint64_t extend_negative(std::uint64_t a) {
  if (x_of(a) >= 0) {
    throw PreconditionError("extend_negative requires x(a) < 0, a = " + std::to_string(a));
  }
  return 3 * (r_of(a) + 1) * m_of(a) / 2;
}

std::uint64_t extend_positive(std::uint64_t b) {
  if (x_of(b) <= 0) {
    throw PreconditionError("extend_positive requires x(b) > 0, b = " + std::to_string(b));
  }
  return (3 * (r_of(b) + 1) * m_of(b) + 4 + 1) / 2;
}

std::uint64_t block_end(std::uint64_t a) {
  const std::uint64_t s = r_of(a);
  const std::uint64_t t = m_of(a);
  const std::uint64_t q = ((t + 1) * (t + 1) - 1) / 2;
  return std::min(q, std::uint64_t{1} << s);
}

std::uint64_t block_start(std::uint64_t a) {
  const std::uint64_t s = r_of(a);
  const std::uint64_t t = m_of(a);
  const std::uint64_t first_with_r = s == 0 ? 1 : (std::uint64_t{1} << (s - 1)) + 1;
  const std::uint64_t first_with_m = (t * t + 1) / 2;
  return std::max({first_with_r, first_with_m, std::uint64_t{1}});
}

Block make_block(std::uint64_t start) {
  Block b;
  b.start = start;
  b.end = block_end(start);
  b.r_val = r_of(start);
  b.m_val = m_of(start);
  b.x_min = x_of(b.start);
  b.x_max = x_of(b.end);
  return b;
}

std::vector<Block> block_chain(std::uint64_t count) {
  if (count == 0) throw DomainError("block count must be positive");
  std::vector<Block> blocks;
  blocks.reserve(count);
  std::uint64_t k = 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    blocks.push_back(make_block(k));
    k = blocks.back().end + 1;
  }
  return blocks;
}

std::vector<ChainStep> negative_chain(std::uint64_t start) {
  std::vector<ChainStep> steps;
  std::uint64_t a = start;
  for (;;) {
    const std::uint64_t b = extend_negative(a);
    steps.push_back(ChainStep{a, b, ChainDirection::NegativeUp, x_of(a)});
    if (b >= kWordLimit || x_of(b + 1) >= 0) break;
    a = b + 1;
  }
  return steps;
}

std::vector<ChainStep> positive_chain(std::uint64_t top) {
  std::vector<ChainStep> steps;
  std::uint64_t b = top;
  for (;;) {
    const std::uint64_t a = extend_positive(b);
    if (a > b) break;
    steps.push_back(ChainStep{b, a, ChainDirection::PositiveDown, x_of(b)});
    if (a == 1 || x_of(a - 1) <= 0) break;
    b = a - 1;
  }
  if (steps.empty()) {
    throw CertificationError("positive_chain made no progress from " + std::to_string(top));
  }
  return steps;
}

BigInt tail_margin(std::uint64_t s) {
  if (s < kTailExponent) throw DomainError("tail_margin requires s >= 12");
  const PowerOfTwoFacts facts = z_at_power(s);
  // m(2^(s+1)) = isqrt(2^(s+2))
  const BigInt m_next = isqrt(pow2(s + 2));
  return facts.z_val - BigInt(s + 2) * m_next;
}

DominanceRecord dominance_check(std::int64_t coeff_a, std::int64_t coeff_b, std::uint64_t k0) {
  if (coeff_a < 1) throw DomainError("dominance_check requires coeff_a >= 1");
  DominanceRecord rec{coeff_a, coeff_b, k0, false, false, {}};
  const BigInt a = coeff_a;
  const BigInt b = coeff_b;
  const BigInt k = k0;

  const BigInt lhs = pow2(k0);
  const BigInt rhs = a * k + b;
  rec.base_ok = lhs >= rhs;
  if (!rec.base_ok) {
    rec.failure = "base: 2^" + std::to_string(k0) + " = " + to_decimal(lhs) + " < " +
                  to_decimal(rhs);
    return rec;
  }
  // 2^(k+1) >= 2(ak + b) >= a(k+1) + b  <=>  ak >= a - b. The slope a is
  // positive, so checking k = k0 covers every larger k.
  rec.step_ok = a * k >= a - b;
  if (!rec.step_ok) {
    rec.failure = "step: " + to_decimal(a * k) + " < " + to_decimal(a - b) + " at k = " +
                  std::to_string(k0);
  }
  return rec;
}

TailCertificate build_tail(std::uint64_t tail_s_max) {
  if (tail_s_max < kTailExponent) throw DomainError("tail_s_max must be >= 12");
  TailCertificate tail;
  tail.s_min = kTailExponent;
  tail.s_checked_max = tail_s_max;
  tail.margins.reserve(tail_s_max - kTailExponent + 1);
  for (std::uint64_t s = kTailExponent; s <= tail_s_max; ++s) {
    BigInt margin = tail_margin(s);
    if (margin <= 0) {
      throw CertificationError("tail margin not positive at s = " + std::to_string(s));
    }
    tail.margins.emplace_back(s, std::move(margin));
  }
  tail.dominance =
      dominance_check(kTailDominance.coeff_a, kTailDominance.coeff_b, kTailDominance.k0);
  if (!tail.dominance.proven()) throw CertificationError(tail.dominance.failure);
  return tail;
}

Certificate build_certificate(std::uint64_t tail_s_max) {
  Certificate cert;
  cert.tail = build_tail(tail_s_max);
  cert.boundary = kTailBoundary;
  const std::uint64_t top = kTailBoundary - 1;

  // 1..12 by direct evaluation, then extension chains from both ends.
  constexpr std::uint64_t kNegativeSeed = 13;
  for (const SignRun& run : serial::scan_signs(1, kNegativeSeed - 1)) {
    cert.segments.push_back(Segment{run.lo, run.hi, run.sign, Method::BruteForce, {}});
  }

  const std::vector<ChainStep> neg = negative_chain(kNegativeSeed);
  for (const ChainStep& step : neg) {
    cert.segments.push_back(
        Segment{step.anchor, step.derived_bound, Sign::Negative, Method::Lemma2NegUp, step.anchor});
  }
  const std::vector<ChainStep> pos = positive_chain(top);
  const std::uint64_t mixed_lo = neg.back().derived_bound + 1;
  const std::uint64_t mixed_hi = pos.back().derived_bound - 1;

  // Between the chains, walk blocks; x is non-decreasing on each, so every
  // block splits into at most a negative, a zero and a positive run.
  for (std::uint64_t a = mixed_lo; a <= mixed_hi;) {
    const std::uint64_t start = block_start(a);
    const std::uint64_t end = std::min(block_end(a), mixed_hi);
    const std::uint64_t first_nonneg = first_at_least(a, end, 0);
    const std::uint64_t first_pos = first_at_least(first_nonneg, end, 1);
    push_if_nonempty(cert.segments, a, first_nonneg - 1, Sign::Negative, start);
    push_if_nonempty(cert.segments, first_nonneg, first_pos - 1, Sign::Zero, start);
    push_if_nonempty(cert.segments, first_pos, end, Sign::Positive, start);
    a = end + 1;
  }

  for (auto it = pos.rbegin(); it != pos.rend(); ++it) {
    cert.segments.push_back(
        Segment{it->derived_bound, it->anchor, Sign::Positive, Method::Lemma2PosDown, it->anchor});
  }

  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < cert.segments.size(); ++i) {
    if (cert.segments[i].lo != expected) {
      throw CertificationError("segment " + std::to_string(i) + " does not start at " +
                               std::to_string(expected));
    }
    expected = cert.segments[i].hi + 1;
  }
  if (expected != cert.boundary) {
    throw CertificationError("segments end at " + std::to_string(expected - 1) +
                             ", expected " + std::to_string(cert.boundary - 1));
  }
  return cert;
}

}  // namespace xsign
