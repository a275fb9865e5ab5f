#include <random>

#include <gtest/gtest.h>

#include "mutations.hpp"
#include "xsign/certifier.hpp"

namespace {

using xsign::Certificate;
using xsign::Sign;

const Certificate& reference() {
  static const Certificate cert = xsign::build_certificate(200);
  return cert;
}

std::size_t segment_containing(const Certificate& cert, std::uint64_t n) {
  for (std::size_t i = 0; i < cert.segments.size(); ++i) {
    if (cert.segments[i].lo <= n && n <= cert.segments[i].hi) return i;
  }
  return cert.segments.size();
}

TEST(Check, BuiltCertificatePasses) {
  const auto rep = xsign::check_certificate(reference());
  EXPECT_TRUE(rep.passed) << rep.rule << ": " << rep.detail;
}

TEST(Check, FlippedZeroSegmentFailsThere) {
  Certificate cert = reference();
  const std::size_t i = segment_containing(cert, 436);
  ASSERT_EQ(cert.segments[i].lo, 436u);
  ASSERT_EQ(cert.segments[i].hi, 436u);
  cert.segments[i].sign = Sign::Positive;
  const auto rep = xsign::check_certificate(cert);
  EXPECT_FALSE(rep.passed);
  ASSERT_TRUE(rep.segment.has_value());
  EXPECT_EQ(*rep.segment, i);
}

TEST(Check, RemovedSegmentIsACoverageGap) {
  Certificate cert = reference();
  // Split 1..12 so that 100..100 style single-point removal is possible
  // inside a chain segment: carve n = 100 out of its lemma2-neg segment.
  const std::size_t i = segment_containing(cert, 100);
  auto seg = cert.segments[i];
  ASSERT_LT(seg.lo, 100u);
  cert.segments[i].hi = 99;
  auto rest = seg;
  rest.lo = 101;
  rest.method = xsign::Method::BruteForce;
  rest.anchor.reset();
  cert.segments.insert(cert.segments.begin() + static_cast<std::ptrdiff_t>(i) + 1, rest);

  const auto rep = xsign::check_certificate(cert);
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.rule, "coverage");
  EXPECT_NE(rep.detail.find("gap 100..100"), std::string::npos) << rep.detail;
}

TEST(Check, SubdividedCertificateStillPasses) {
  // Same claims, finer segments: still a valid proof.
  Certificate cert = reference();
  const std::size_t i = segment_containing(cert, 100);
  auto seg = cert.segments[i];
  cert.segments[i].hi = 99;
  seg.lo = 100;
  seg.method = xsign::Method::BruteForce;
  seg.anchor.reset();
  cert.segments.insert(cert.segments.begin() + static_cast<std::ptrdiff_t>(i) + 1, seg);
  EXPECT_TRUE(xsign::check_certificate(cert).passed);
}

TEST(Check, TailRules) {
  {
    Certificate cert = reference();
    cert.tail.margins.pop_back();
    EXPECT_EQ(xsign::check_certificate(cert).rule, "tail");
  }
  {
    Certificate cert = reference();
    cert.tail.dominance = xsign::dominance_check(6, 100, 3);
    EXPECT_EQ(xsign::check_certificate(cert).rule, "dominance");
  }
  {
    Certificate cert = reference();
    cert.boundary = 4096;
    EXPECT_EQ(xsign::check_certificate(cert).rule, "boundary");
  }
}

TEST(Check, SegmentPastBoundaryRejectedBeforeEvaluation) {
  Certificate cert = reference();
  cert.segments.back().hi = std::uint64_t{1} << 40;
  const auto rep = xsign::check_certificate(cert);
  EXPECT_FALSE(rep.passed);
  EXPECT_EQ(rep.rule, "range");
}

TEST(Check, HugeAnchorDoesNotThrow) {
  Certificate cert = reference();
  cert.segments[1].anchor = ~std::uint64_t{0};
  const auto rep = xsign::check_certificate(cert);
  EXPECT_FALSE(rep.passed);
}

TEST(Serialization, RoundTripPasses) {
  const std::string text = xsign::serialize_certificate(reference());
  const Certificate parsed = xsign::parse_certificate(text);
  EXPECT_EQ(xsign::serialize_certificate(parsed), text);
  EXPECT_TRUE(xsign::check_certificate(parsed).passed);
}

TEST(Serialization, Layout) {
  const std::string text = xsign::serialize_certificate(reference());
  EXPECT_NE(text.find("\"version\": \"1\""), std::string::npos);
  EXPECT_NE(text.find("\"boundary\": 4097"), std::string::npos);
  EXPECT_NE(text.find("\"method\": \"lemma2-neg\""), std::string::npos);
  EXPECT_NE(text.find("\"method\": \"lemma2-pos\""), std::string::npos);
  EXPECT_NE(text.find("\"method\": \"lemma3-block\""), std::string::npos);
  // L(12) = 938 as a decimal string
  EXPECT_NE(text.find("\"938\""), std::string::npos);
  EXPECT_NE(text.find("\"a\": 6"), std::string::npos);
}

TEST(Serialization, MalformedDocumentsAreParseErrors) {
  const std::string good = xsign::serialize_certificate(reference());
  auto replaced = [&](const std::string& from, const std::string& to) {
    std::string t = good;
    t.replace(t.find(from), from.size(), to);
    return t;
  };
  for (const std::string& text :
       {std::string(""), std::string("{"), std::string("[]"), std::string("{\"version\": \"1\"}"),
        replaced("\"neg\"", "\"negative\""), replaced("\"brute\"", "\"guess\""),
        replaced("\"boundary\": 4097", "\"boundary\": -4097"),
        replaced("\"938\"", "\"9x8\""), replaced("\"938\"", "938"),
        replaced("\"version\": \"1\"", "\"version\": 1")}) {
    EXPECT_THROW(xsign::parse_certificate(text), xsign::CertificateParseError) << text.substr(0, 80);
  }
}

bool rejected_after_round_trip(const Certificate& cert) {
  try {
    const Certificate parsed = xsign::parse_certificate(xsign::serialize_certificate(cert));
    return !xsign::check_certificate(parsed).passed;
  } catch (const xsign::CertificateParseError&) {
    return true;
  }
}

TEST(Mutations, EveryClaimCorruptionFails) {
  using xsign::testing::MutationKind;
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 600; ++trial) {
    Certificate cert = reference();
    const auto kind = static_cast<MutationKind>(trial % xsign::testing::kMutationKinds);
    if (kind == MutationKind::MethodSwap) continue;
    const auto m = xsign::testing::mutate(cert, kind, rng);
    ASSERT_TRUE(rejected_after_round_trip(cert)) << "accepted corruption: " << m.description;
  }
}

TEST(Mutations, MethodSwapAcceptedOnlyWhenStillAProof) {
  // Swapping the method keeps the claim; the checker may accept it only when
  // the new rule derives it too (e.g. 421..435 is also inside one block).
  std::mt19937_64 rng(9090);
  int rejected = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Certificate cert = reference();
    xsign::testing::mutate(cert, xsign::testing::MutationKind::MethodSwap, rng);
    if (rejected_after_round_trip(cert)) {
      ++rejected;
      continue;
    }
    for (const auto& seg : cert.segments) {
      for (std::uint64_t n = seg.lo; n <= seg.hi; ++n) {
        ASSERT_EQ(xsign::sign_of(xsign::x_of(n)), seg.sign);
      }
    }
  }
  EXPECT_GT(rejected, 250);
}

}  // namespace
