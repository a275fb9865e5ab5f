// Independent verification of a Certificate. Every rule is re-derived here
// from z_of / m_of / r_of / x_of alone; nothing produced by the builder
// (chain steps, block ends, margins) is trusted.

#include <algorithm>
#include <vector>

#include "xsign/certifier.hpp"

namespace xsign {

namespace {

struct Failure {
  std::string rule;
  std::string detail;
};

using MaybeFailure = std::optional<Failure>;

std::string describe(const Segment& s) {
  std::string out = std::to_string(s.lo) + ".." + std::to_string(s.hi) + " " +
                    std::string(to_string(s.sign)) + " via " + std::string(to_string(s.method));
  if (s.anchor) out += " anchor " + std::to_string(*s.anchor);
  return out;
}

MaybeFailure fail(std::string rule, std::string detail) {
  return Failure{std::move(rule), std::move(detail)};
}

MaybeFailure check_brute(const Segment& s) {
  if (s.anchor) return fail("brute", "brute-force segment carries an anchor");
  for (std::uint64_t n = s.lo; n <= s.hi; ++n) {
    if (sign_of(x_of(n)) != s.sign) {
      return fail("brute", "x(" + std::to_string(n) + ") = " + std::to_string(x_of(n)));
    }
  }
  return std::nullopt;
}

MaybeFailure check_negative_extension(const Segment& s) {
  if (!s.anchor) return fail("lemma2-neg", "missing anchor");
  const std::uint64_t a = *s.anchor;
  if (s.sign != Sign::Negative) return fail("lemma2-neg", "claims a non-negative sign");
  if (s.lo != a) return fail("lemma2-neg", "segment must start at its anchor");
  if (x_of(a) >= 0) return fail("lemma2-neg", "x(anchor) is not negative");
  // largest b with 2b <= 3 (r(a)+1) m(a)
  const std::uint64_t limit = 3 * (r_of(a) + 1) * m_of(a);
  if (2 * s.hi > limit) {
    return fail("lemma2-neg", "hi exceeds the extension bound " + std::to_string(limit / 2));
  }
  return std::nullopt;
}

MaybeFailure check_positive_extension(const Segment& s) {
  if (!s.anchor) return fail("lemma2-pos", "missing anchor");
  const std::uint64_t b = *s.anchor;
  if (s.sign != Sign::Positive) return fail("lemma2-pos", "claims a non-positive sign");
  if (s.hi != b) return fail("lemma2-pos", "segment must end at its anchor");
  if (x_of(b) <= 0) return fail("lemma2-pos", "x(anchor) is not positive");
  // least a with 2a >= 3 (r(b)+1) m(b) + 4
  const std::uint64_t need = 3 * (r_of(b) + 1) * m_of(b) + 4;
  if (2 * s.lo < need) {
    return fail("lemma2-pos", "lo is below the extension bound " + std::to_string((need + 1) / 2));
  }
  return std::nullopt;
}

MaybeFailure check_block(const Segment& s) {
  if (!s.anchor) return fail("lemma3-block", "missing anchor");
  const std::uint64_t a = *s.anchor;
  if (a == 0 || a > s.lo) return fail("lemma3-block", "anchor must not exceed lo");
  if (a > 1 && r_of(a - 1) == r_of(a) && m_of(a - 1) == m_of(a)) {
    return fail("lemma3-block", "anchor is not the first n of its block");
  }
  // r and m are non-decreasing, so equality at both ends means constant.
  if (r_of(s.hi) != r_of(a) || m_of(s.hi) != m_of(a)) {
    return fail("lemma3-block", "r or m changes between anchor and hi");
  }
  // Within a block x is non-decreasing; the endpoints decide the sign.
  const std::int64_t x_lo = x_of(s.lo);
  const std::int64_t x_hi = x_of(s.hi);
  bool ok = false;
  switch (s.sign) {
    case Sign::Negative: ok = x_hi < 0; break;
    case Sign::Zero: ok = x_lo == 0 && x_hi == 0; break;
    case Sign::Positive: ok = x_lo > 0; break;
  }
  if (!ok) {
    return fail("lemma3-block", "endpoint values x(lo) = " + std::to_string(x_lo) +
                                    ", x(hi) = " + std::to_string(x_hi));
  }
  return std::nullopt;
}

MaybeFailure check_segment(const Segment& s, std::uint64_t boundary) {
  if (s.lo == 0 || s.lo > s.hi) return fail("range", "malformed interval");
  if (s.hi >= boundary) return fail("range", "segment reaches the tail boundary");
  switch (s.method) {
    case Method::BruteForce: return check_brute(s);
    case Method::Lemma2NegUp: return check_negative_extension(s);
    case Method::Lemma2PosDown: return check_positive_extension(s);
    case Method::Lemma3Block: return check_block(s);
  }
  return fail("method", "unknown method");
}

CheckReport report(std::optional<std::size_t> index, const Failure& f) {
  return CheckReport{false, index, f.rule, f.detail};
}

}  // namespace

CheckReport check_certificate(const Certificate& cert) {
  if (cert.version != "1") return report(std::nullopt, {"version", "unsupported version"});

  const TailCertificate& tail = cert.tail;
  if (tail.s_min != kTailExponent) {
    return report(std::nullopt, {"tail", "s_min must be 12"});
  }
  if (cert.boundary != (std::uint64_t{1} << tail.s_min) + 1) {
    return report(std::nullopt,
                  {"boundary", "boundary " + std::to_string(cert.boundary) + " is not 2^s_min + 1"});
  }
  if (cert.segments.empty()) return report(std::nullopt, {"coverage", "no segments"});

  // Per-segment derivations, checked in parallel; the smallest failing
  // index is reported.
  const auto count = static_cast<std::int64_t>(cert.segments.size());
  std::vector<MaybeFailure> failures(cert.segments.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      failures[i] = check_segment(cert.segments[i], cert.boundary);
    } catch (const std::exception& e) {
      failures[i] = Failure{"evaluation", e.what()};
    }
  }
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (failures[i]) {
      Failure f = *failures[i];
      f.detail = describe(cert.segments[i]) + ": " + f.detail;
      return report(i, f);
    }
  }

  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < cert.segments.size(); ++i) {
    const Segment& s = cert.segments[i];
    if (s.lo > expected) {
      return report(i, {"coverage", "gap " + std::to_string(expected) + ".." +
                                        std::to_string(s.lo - 1)});
    }
    if (s.lo < expected) {
      return report(i, {"coverage", "overlap at " + std::to_string(s.lo)});
    }
    expected = s.hi + 1;
  }
  if (expected != cert.boundary) {
    return report(std::nullopt, {"coverage", "gap " + std::to_string(expected) + ".." +
                                                 std::to_string(cert.boundary - 1)});
  }

  // Second opinion below the boundary: evaluate every n directly.
  for (std::size_t i = 0; i < cert.segments.size(); ++i) {
    const Segment& s = cert.segments[i];
    for (std::uint64_t n = s.lo; n <= s.hi; ++n) {
      if (sign_of(x_of(n)) != s.sign) {
        return report(i, {"cross-check", describe(s) + ": x(" + std::to_string(n) +
                                             ") = " + std::to_string(x_of(n))});
      }
    }
  }

  if (tail.s_checked_max < tail.s_min) {
    return report(std::nullopt, {"tail", "s_checked_max below s_min"});
  }
  if (tail.margins.size() != tail.s_checked_max - tail.s_min + 1) {
    return report(std::nullopt, {"tail", "margins do not cover s_min..s_checked_max"});
  }
  for (std::size_t i = 0; i < tail.margins.size(); ++i) {
    const auto& [s, listed] = tail.margins[i];
    if (s != tail.s_min + i) {
      return report(std::nullopt, {"tail", "margin entry " + std::to_string(i) +
                                               " has s = " + std::to_string(s)});
    }
    // z(2^s) - (s+2) m(2^(s+1)) by direct big-integer evaluation.
    const BigInt recomputed = z_of(pow2(s)) - BigInt(s + 2) * m_of(pow2(s + 1));
    if (recomputed != listed) {
      return report(std::nullopt, {"tail", "margin at s = " + std::to_string(s) + " is " +
                                               to_decimal(recomputed) + ", listed " +
                                               to_decimal(listed)});
    }
    if (recomputed <= 0) {
      return report(std::nullopt, {"tail", "margin not positive at s = " + std::to_string(s)});
    }
  }

  const DominanceRecord& dom = tail.dominance;
  if (dom.coeff_a != kTailDominance.coeff_a || dom.coeff_b != kTailDominance.coeff_b ||
      dom.k0 != kTailDominance.k0) {
    return report(std::nullopt, {"dominance", "parameters must be (6, 10, 6)"});
  }
  {
    // 2^k0 >= a k0 + b, and the step a k >= a - b at k0.
    const BigInt a = dom.coeff_a;
    const BigInt b = dom.coeff_b;
    const BigInt k0 = dom.k0;
    if (pow2(dom.k0) < a * k0 + b) {
      return report(std::nullopt, {"dominance", "base case fails"});
    }
    if (a * k0 < a - b) {
      return report(std::nullopt, {"dominance", "induction step fails"});
    }
  }
  // Exponents s > s_checked_max have k = floor(s/2) >= floor((s_checked_max+1)/2).
  if ((tail.s_checked_max + 1) / 2 < dom.k0) {
    return report(std::nullopt, {"dominance", "does not reach past s_checked_max"});
  }

  return CheckReport{true, std::nullopt, "", ""};
}

}  // namespace xsign
