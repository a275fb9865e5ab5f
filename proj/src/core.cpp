#include "xsign/core.hpp"

#include <bit>

namespace xsign {

namespace {

void require_positive(std::uint64_t n) {
  if (n == 0) throw DomainError("n must be a positive integer");
  if (n > kWordLimit) throw DomainError("n exceeds the machine-word range (2^62)");
}

void require_positive(const BigInt& n) {
  if (n <= 0) throw DomainError("n must be a positive integer");
}

}  // namespace

std::uint64_t isqrt(std::uint64_t v) {
  if (v < 2) return v;
  // Start from a power of two that is >= sqrt(v); Newton then decreases
  // monotonically to the floor.
  const int half_bits = (std::bit_width(v) + 1) / 2;
  std::uint64_t s = std::uint64_t{1} << half_bits;
  for (;;) {
    const std::uint64_t next = (s + v / s) / 2;
    if (next >= s) break;
    s = next;
  }
  using Wide = unsigned __int128;
  while (Wide{s} * s > v) --s;
  while (Wide{s + 1} * (s + 1) <= v) ++s;
  return s;
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw DomainError("isqrt of a negative value");
  if (v < 2) return v;
  const std::uint64_t bits = boost::multiprecision::msb(v) + 1;
  BigInt s = pow2((bits + 1) / 2);
  for (;;) {
    BigInt next = (s + v / s) >> 1;
    if (next >= s) break;
    s = std::move(next);
  }
  while (s * s > v) --s;
  while ((s + 1) * (s + 1) <= v) ++s;
  return s;
}

std::uint64_t z_of(std::uint64_t n) {
  require_positive(n);
  return (2 * n - 1) / 3;
}

std::uint64_t m_of(std::uint64_t n) {
  require_positive(n);
  return isqrt(2 * n);
}

std::uint64_t r_of(std::uint64_t n) {
  require_positive(n);
  return static_cast<std::uint64_t>(std::bit_width(n - 1));
}

std::int64_t x_of(std::uint64_t n) {
  const auto z = static_cast<std::int64_t>(z_of(n));
  const auto m = static_cast<std::int64_t>(m_of(n));
  const auto r = static_cast<std::int64_t>(r_of(n));
  return z - (r + 1) * m;
}

BigInt z_of(const BigInt& n) {
  require_positive(n);
  return (2 * n - 1) / 3;
}

BigInt m_of(const BigInt& n) {
  require_positive(n);
  return isqrt(2 * n);
}

std::uint64_t r_of(const BigInt& n) {
  require_positive(n);
  if (n == 1) return 0;
  return boost::multiprecision::msb(BigInt(n - 1)) + 1;
}

BigInt x_of(const BigInt& n) {
  return z_of(n) - BigInt(r_of(n) + 1) * m_of(n);
}

EvalRow eval_row(std::uint64_t n) {
  return EvalRow{n, z_of(n), m_of(n), r_of(n), x_of(n)};
}

BigEvalRow eval_row(const BigInt& n) {
  BigEvalRow row;
  row.n = n;
  row.z = z_of(n);
  row.m = m_of(n);
  row.r = r_of(n);
  row.x = row.z - BigInt(row.r + 1) * row.m;
  return row;
}

BigInt pow2(std::uint64_t e) {
  BigInt v = 1;
  v <<= e;
  return v;
}

PowerOfTwoFacts z_at_power(std::uint64_t s) {
  PowerOfTwoFacts facts;
  facts.s = s;
  const std::uint64_t k = s / 2;
  if (s % 2 == 0) {
    // 2^(2k+1) = 3p + 2
    facts.z_val = (pow2(s + 1) - 2) / 3;
    facts.m_lower = pow2(k);
    facts.m_upper_exclusive = pow2(k + 1);
  } else {
    // 2^(2k+2) = 3q + 1 and (2^(k+1))^2 = 2 * 2^s
    facts.z_val = (pow2(s + 1) - 1) / 3;
    facts.m_exact = pow2(k + 1);
    facts.m_lower = *facts.m_exact;
    facts.m_upper_exclusive = *facts.m_exact + 1;
  }
  return facts;
}

BigInt parse_decimal(const std::string& text) {
  if (text.empty()) throw DomainError("empty number");
  for (char c : text) {
    if (c < '0' || c > '9') throw DomainError("not a decimal integer: " + text);
  }
  return BigInt(text);
}

std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace xsign
