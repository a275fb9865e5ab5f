#include <limits>

#include <json.hpp>

#include "xsign/certifier.hpp"

namespace xsign {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw CertificateParseError(what); }

const Json& field(const Json& obj, const char* name) {
  if (!obj.is_object()) bad("expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) bad(std::string("missing field '") + name + "'");
  return *it;
}

std::uint64_t as_u64(const Json& v, const char* name) {
  if (!v.is_number_unsigned()) bad(std::string("field '") + name + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

std::int64_t as_i64(const Json& v, const char* name) {
  if (!v.is_number_integer()) bad(std::string("field '") + name + "' must be an integer");
  return v.get<std::int64_t>();
}

Sign parse_sign(const std::string& s) {
  if (s == "neg") return Sign::Negative;
  if (s == "zero") return Sign::Zero;
  if (s == "pos") return Sign::Positive;
  bad("unknown sign '" + s + "'");
}

Method parse_method(const std::string& s) {
  if (s == "brute") return Method::BruteForce;
  if (s == "lemma2-neg") return Method::Lemma2NegUp;
  if (s == "lemma2-pos") return Method::Lemma2PosDown;
  if (s == "lemma3-block") return Method::Lemma3Block;
  bad("unknown method '" + s + "'");
}

BigInt parse_signed_decimal(const std::string& s) {
  if (s.empty()) bad("empty margin value");
  const bool negative = s.front() == '-';
  try {
    BigInt v = parse_decimal(negative ? s.substr(1) : s);
    return negative ? BigInt(-v) : v;
  } catch (const DomainError&) {
    bad("margin value '" + s + "' is not a decimal integer");
  }
}

}  // namespace

std::string serialize_certificate(const Certificate& cert) {
  Json doc;
  doc["version"] = cert.version;
  doc["boundary"] = cert.boundary;
  Json segments = Json::array();
  for (const Segment& s : cert.segments) {
    Json seg;
    seg["lo"] = s.lo;
    seg["hi"] = s.hi;
    seg["sign"] = std::string(to_string(s.sign));
    seg["method"] = std::string(to_string(s.method));
    if (s.anchor) seg["anchor"] = *s.anchor;
    segments.push_back(std::move(seg));
  }
  doc["segments"] = std::move(segments);

  Json tail;
  tail["s_min"] = cert.tail.s_min;
  tail["s_checked_max"] = cert.tail.s_checked_max;
  Json margins = Json::array();
  for (const auto& [s, value] : cert.tail.margins) {
    margins.push_back(Json::array({s, to_decimal(value)}));
  }
  tail["margins"] = std::move(margins);
  tail["dominance"] = Json{{"a", cert.tail.dominance.coeff_a},
                           {"b", cert.tail.dominance.coeff_b},
                           {"k0", cert.tail.dominance.k0}};
  doc["tail"] = std::move(tail);
  return doc.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed document: ") + e.what());
  }

  Certificate cert;
  const Json& version = field(doc, "version");
  if (!version.is_string()) bad("field 'version' must be a string");
  cert.version = version.get<std::string>();
  cert.boundary = as_u64(field(doc, "boundary"), "boundary");

  const Json& segments = field(doc, "segments");
  if (!segments.is_array()) bad("field 'segments' must be an array");
  for (const Json& seg : segments) {
    Segment s;
    s.lo = as_u64(field(seg, "lo"), "lo");
    s.hi = as_u64(field(seg, "hi"), "hi");
    const Json& sign = field(seg, "sign");
    const Json& method = field(seg, "method");
    if (!sign.is_string() || !method.is_string()) bad("sign and method must be strings");
    s.sign = parse_sign(sign.get<std::string>());
    s.method = parse_method(method.get<std::string>());
    if (auto it = seg.find("anchor"); it != seg.end()) s.anchor = as_u64(*it, "anchor");
    cert.segments.push_back(s);
  }

  const Json& tail = field(doc, "tail");
  cert.tail.s_min = as_u64(field(tail, "s_min"), "s_min");
  cert.tail.s_checked_max = as_u64(field(tail, "s_checked_max"), "s_checked_max");
  const Json& margins = field(tail, "margins");
  if (!margins.is_array()) bad("field 'margins' must be an array");
  for (const Json& entry : margins) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_string()) {
      bad("margin entries must be [s, \"decimal\"] pairs");
    }
    cert.tail.margins.emplace_back(as_u64(entry[0], "margin s"),
                                   parse_signed_decimal(entry[1].get<std::string>()));
  }
  const Json& dom = field(tail, "dominance");
  cert.tail.dominance.coeff_a = as_i64(field(dom, "a"), "a");
  cert.tail.dominance.coeff_b = as_i64(field(dom, "b"), "b");
  cert.tail.dominance.k0 = as_u64(field(dom, "k0"), "k0");
  return cert;
}

}  // namespace xsign
