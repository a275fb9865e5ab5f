#pragma once

// Proof machinery for the sign of x(n) over all n >= 1.
//
//  * Sandwich bounds: for a <= n <= b,
//      z(a) - (r(b)+1) m(b) <= x(n) <= z(b) - (r(a)+1) m(a).
//  * Extension: a negative x(a) stays negative up to floor(3 (r(a)+1) m(a) / 2);
//    a positive x(b) stays positive down to ceil((3 (r(b)+1) m(b) + 4) / 2).
//  * Blocks: maximal intervals with constant r and m. x is non-decreasing on
//    each block since only z varies there.
//  * Tail: for 2^s < n <= 2^(s+1), x(n) >= z(2^s) - (s+2) m(2^(s+1)), which is
//    positive for every s >= 12.
//
// A Certificate packages these into segments tiling [1, 4096] plus a tail
// record covering every n > 4096. check_certificate re-derives each claim.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xsign/core.hpp"
#include "xsign/oracle.hpp"

namespace xsign {

/// Raised when a certificate cannot be assembled consistently.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Block {
  std::uint64_t start = 0;
  std::uint64_t end = 0;
  std::uint64_t r_val = 0;
  std::uint64_t m_val = 0;
  std::int64_t x_min = 0;
  std::int64_t x_max = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

enum class ChainDirection { NegativeUp, PositiveDown };

struct ChainStep {
  std::uint64_t anchor = 0;
  std::uint64_t derived_bound = 0;
  ChainDirection direction = ChainDirection::NegativeUp;
  std::int64_t anchor_x = 0;
};

struct DominanceRecord {
  std::int64_t coeff_a = 0;
  std::int64_t coeff_b = 0;
  std::uint64_t k0 = 0;
  bool base_ok = false;
  bool step_ok = false;
  std::string failure;  // empty when proven

  bool proven() const { return base_ok && step_ok; }
};

struct TailCertificate {
  std::uint64_t s_min = 12;
  std::uint64_t s_checked_max = 0;
  std::vector<std::pair<std::uint64_t, BigInt>> margins;
  DominanceRecord dominance;
};

enum class Method { BruteForce, Lemma2NegUp, Lemma2PosDown, Lemma3Block };

std::string_view to_string(Method m);

struct Segment {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  Sign sign = Sign::Negative;
  Method method = Method::BruteForce;
  std::optional<std::uint64_t> anchor;
};

inline constexpr std::uint64_t kTailExponent = 12;
inline constexpr std::uint64_t kTailBoundary = (std::uint64_t{1} << kTailExponent) + 1;
inline constexpr std::uint64_t kDefaultTailSMax = 200;

struct DominanceParams {
  std::int64_t coeff_a;
  std::int64_t coeff_b;
  std::uint64_t k0;
};

/// 2^k >= 6k + 10 for k >= 6 gives both 2^k - 6k - 6 > 0 and 2^k - 6k - 9 > 0.
inline constexpr DominanceParams kTailDominance{6, 10, 6};

struct Certificate {
  std::string version = "1";
  std::vector<Segment> segments;
  TailCertificate tail;
  std::uint64_t boundary = kTailBoundary;
};

/// Returns (lower, upper) with lower <= x(n) <= upper for every n in [a, b].
std::pair<std::int64_t, std::int64_t> sandwich_bounds(std::uint64_t a, std::uint64_t b);

/// Requires x(a) < 0. Returns the largest b with 2b <= 3 (r(a)+1) m(a).
std::uint64_t extend_negative(std::uint64_t a);

/// Requires x(b) > 0. Returns the least a with 2a >= 3 (r(b)+1) m(b) + 4.
std::uint64_t extend_positive(std::uint64_t b);

/// Last n of the block containing a: min(q, 2^r(a)) with q the largest
/// integer such that 2q < (m(a)+1)^2.
std::uint64_t block_end(std::uint64_t a);

/// First n of the block containing a.
std::uint64_t block_start(std::uint64_t a);

Block make_block(std::uint64_t start);

/// The first `count` blocks starting from n = 1.
std::vector<Block> block_chain(std::uint64_t count);

/// Applies extend_negative repeatedly with the next anchor at b + 1, stopping
/// once x(b + 1) >= 0.
std::vector<ChainStep> negative_chain(std::uint64_t start);

/// Applies extend_positive repeatedly with the next anchor at a - 1, stopping
/// once x(a - 1) <= 0, a reaches 1, or the derived a would exceed its anchor.
std::vector<ChainStep> positive_chain(std::uint64_t top);

/// L(s) = z(2^s) - (s+2) m(2^(s+1)), exact. Requires s >= 12.
BigInt tail_margin(std::uint64_t s);

/// Proves 2^k >= a k + b for all k >= k0 by a base check at k0 and the
/// linear induction step a k >= a - b.
DominanceRecord dominance_check(std::int64_t coeff_a, std::int64_t coeff_b, std::uint64_t k0);

TailCertificate build_tail(std::uint64_t tail_s_max);

Certificate build_certificate(std::uint64_t tail_s_max = kDefaultTailSMax);

struct CheckReport {
  bool passed = false;
  std::optional<std::size_t> segment;  // index into Certificate::segments
  std::string rule;
  std::string detail;
};

/// Re-derives every claim of `cert` from core evaluations only.
CheckReport check_certificate(const Certificate& cert);

class CertificateParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

}  // namespace xsign
