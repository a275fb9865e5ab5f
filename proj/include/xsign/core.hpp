#pragma once

// Exact evaluation of
//   z(n) = largest z with 3z < 2n
//   m(n) = largest m with m^2 <= 2n
//   r(n) = least r >= 0 with n <= 2^r
//   x(n) = z(n) - (r(n) + 1) * m(n)
// for positive n. Two tiers: a machine-word path for n <= 2^62 and an
// arbitrary-precision path for anything larger. No floating point is used.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace xsign {

using BigInt = boost::multiprecision::cpp_int;

/// Largest n accepted by the machine-word evaluation path.
inline constexpr std::uint64_t kWordLimit = std::uint64_t{1} << 62;

/// Raised for arguments outside an operation's domain (n = 0, lo > hi, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an operation's stated precondition on x does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Floor of the square root. Newton iteration followed by a correction step,
/// so the result always satisfies s*s <= v < (s+1)*(s+1).
std::uint64_t isqrt(std::uint64_t v);
BigInt isqrt(const BigInt& v);

std::uint64_t z_of(std::uint64_t n);
std::uint64_t m_of(std::uint64_t n);
std::uint64_t r_of(std::uint64_t n);
std::int64_t x_of(std::uint64_t n);

BigInt z_of(const BigInt& n);
BigInt m_of(const BigInt& n);
std::uint64_t r_of(const BigInt& n);
BigInt x_of(const BigInt& n);

struct EvalRow {
  std::uint64_t n = 0;
  std::uint64_t z = 0;
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::int64_t x = 0;

  friend bool operator==(const EvalRow&, const EvalRow&) = default;
};

struct BigEvalRow {
  BigInt n;
  BigInt z;
  BigInt m;
  std::uint64_t r = 0;
  BigInt x;

  friend bool operator==(const BigEvalRow&, const BigEvalRow&) = default;
};

EvalRow eval_row(std::uint64_t n);
BigEvalRow eval_row(const BigInt& n);

/// Closed forms for z and m at n = 2^s.
///   s = 2k:   z = (2^(s+1) - 2) / 3,  2^k <= m < 2^(k+1)
///   s = 2k+1: z = (2^(s+1) - 1) / 3,  m = 2^(k+1)
struct PowerOfTwoFacts {
  std::uint64_t s = 0;
  BigInt z_val;
  BigInt m_lower;
  BigInt m_upper_exclusive;
  std::optional<BigInt> m_exact;
};

PowerOfTwoFacts z_at_power(std::uint64_t s);

/// 2^e as a big integer.
BigInt pow2(std::uint64_t e);

/// Parses a non-negative decimal integer (digits only, no sign or separators).
/// Throws DomainError on anything else.
BigInt parse_decimal(const std::string& text);

std::string to_decimal(const BigInt& v);

}  // namespace xsign
