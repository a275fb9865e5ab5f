#include "xsign/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "xsign/certifier.hpp"
#include "xsign/core.hpp"
#include "xsign/oracle.hpp"

namespace xsign::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_word(const std::string& text, const char* what) {
  BigInt v;
  try {
    v = parse_decimal(text);
  } catch (const DomainError&) {
    throw UsageError(std::string(what) + " is not a non-negative decimal integer: " + text);
  }
  if (v > kWordLimit) throw UsageError(std::string(what) + " exceeds 2^62");
  return v.convert_to<std::uint64_t>();
}

void write_table(std::ostream& out, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, bool csv) {
  if (csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
      out << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << cells[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::vector<std::string> cells(const EvalRow& row) {
  return {std::to_string(row.n), std::to_string(row.z), std::to_string(row.m),
          std::to_string(row.r), std::to_string(row.x)};
}

int cmd_eval(const std::string& n_text, std::ostream& out) {
  BigInt n;
  try {
    n = parse_decimal(n_text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (n == 0) throw UsageError("n must be a positive integer");
  if (n <= kWordLimit) {
    const EvalRow row = eval_row(n.convert_to<std::uint64_t>());
    out << "n=" << row.n << " z=" << row.z << " m=" << row.m << " r=" << row.r
        << " x=" << row.x << '\n';
  } else {
    const BigEvalRow row = eval_row(n);
    out << "n=" << row.n << " z=" << row.z << " m=" << row.m << " r=" << row.r
        << " x=" << row.x << '\n';
  }
  return kExitOk;
}

int cmd_table(const std::string& from_text, const std::string& to_text,
              const std::string& preset, bool csv, std::ostream& out) {
  std::vector<EvalRow> rows;
  if (!preset.empty()) {
    if (preset != "exercise1") throw UsageError("unknown preset: " + preset);
    rows = emit_exercise_table();
  } else {
    if (from_text.empty() || to_text.empty()) {
      throw UsageError("table needs --from and --to, or --preset");
    }
    const std::uint64_t from = parse_word(from_text, "--from");
    const std::uint64_t to = parse_word(to_text, "--to");
    if (from == 0 || from > to) throw UsageError("table needs 1 <= from <= to");
    for (std::uint64_t n = from;; ++n) {
      rows.push_back(eval_row(n));
      if (n == to) break;
    }
  }
  std::vector<std::vector<std::string>> text;
  text.reserve(rows.size());
  for (const auto& r : rows) text.push_back(cells(r));
  write_table(out, {"n", "z", "m", "r", "x"}, text, csv);
  return kExitOk;
}

int cmd_intervals(const std::string& count_text, bool csv, std::ostream& out) {
  const std::uint64_t count = parse_word(count_text, "--count");
  if (count == 0) throw UsageError("--count must be positive");
  std::vector<std::vector<std::string>> text;
  std::uint64_t i = 0;
  for (const Block& b : block_chain(count)) {
    text.push_back({std::to_string(++i), std::to_string(b.start), std::to_string(b.end),
                    std::to_string(b.r_val), std::to_string(b.m_val), std::to_string(b.x_min),
                    std::to_string(b.x_max)});
  }
  write_table(out, {"i", "start", "end", "r", "m", "x_min", "x_max"}, text, csv);
  return kExitOk;
}

int cmd_scan(const std::string& lo_text, const std::string& hi_text, std::ostream& out) {
  const std::uint64_t lo = parse_word(lo_text, "LO");
  const std::uint64_t hi = parse_word(hi_text, "HI");
  if (lo == 0 || lo > hi) throw UsageError("scan needs 1 <= LO <= HI");
  for (const SignRun& run : scan_signs(lo, hi)) {
    out << to_string(run.sign) << ' ' << run.lo << ' ' << run.hi << '\n';
  }
  const ScanSummary s = scan_summary(lo, hi);
  out << "zeros";
  if (s.zeros.empty()) out << " none";
  for (std::uint64_t z : s.zeros) out << ' ' << z;
  out << '\n';
  out << "min " << s.min_at << ' ' << s.min_value << '\n';
  out << "max " << s.max_at << ' ' << s.max_value << '\n';
  out << "last_nonpositive ";
  if (s.last_nonpositive) {
    out << *s.last_nonpositive;
  } else {
    out << "none";
  }
  out << '\n';
  return kExitOk;
}

int cmd_certify(const std::string& smax_text, const std::string& path, std::ostream& out,
                std::ostream& err) {
  const std::uint64_t smax = parse_word(smax_text, "--tail-smax");
  if (smax < kTailExponent) throw UsageError("--tail-smax must be at least 12");
  const Certificate cert = build_certificate(smax);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot open " << path << " for writing\n";
    return kExitUsage;
  }
  file << serialize_certificate(cert);
  if (!file.flush()) {
    err << "write to " << path << " failed\n";
    return kExitUsage;
  }
  out << "wrote " << path << ": " << cert.segments.size() << " segments, tail margins s = "
      << cert.tail.s_min << ".." << cert.tail.s_checked_max << '\n';
  return kExitOk;
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot read " << path << '\n';
    return kExitUsage;
  }
  std::ostringstream text;
  text << file.rdbuf();
  Certificate cert;
  try {
    cert = parse_certificate(text.str());
  } catch (const CertificateParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  const CheckReport rep = check_certificate(cert);
  if (!rep.passed) {
    err << "FAIL";
    if (rep.segment) err << " segment " << *rep.segment;
    err << " [" << rep.rule << "] " << rep.detail << '\n';
    return kExitCertificationFailure;
  }
  out << "PASS: x(n) sign certified for every n >= 1 (" << cert.segments.size()
      << " segments below " << cert.boundary << ", tail from " << cert.boundary << ")\n";
  return kExitOk;
}

int cmd_exceed(const std::string& bound_text, std::ostream& out) {
  BigInt bound;
  try {
    bound = parse_decimal(bound_text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const ExceedWitness w = find_exceeding(bound);
  out << "n=" << w.n << " x=" << w.x << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation and sign certification of x(n) = z(n) - (r(n)+1) m(n)", "xsign"};
  app.require_subcommand(1);

  std::string eval_n;
  auto* eval = app.add_subcommand("eval", "Print n, z, m, r, x for one n");
  eval->add_option("N", eval_n, "positive integer, any size")->required();

  std::string from, to, preset, table_format = "csv";
  auto* table = app.add_subcommand("table", "Emit evaluation rows");
  table->add_option("--from", from, "first n");
  table->add_option("--to", to, "last n");
  table->add_option("--preset", preset, "named row set (exercise1)");
  table->add_option("--format", table_format, "csv or plain")
      ->check(CLI::IsMember({"csv", "plain"}));

  std::string count = "37", intervals_format = "plain";
  auto* intervals = app.add_subcommand("intervals", "List blocks of constant r and m");
  intervals->add_option("--count", count, "number of blocks from n = 1");
  intervals->add_option("--format", intervals_format, "csv or plain")
      ->check(CLI::IsMember({"csv", "plain"}));

  std::string lo, hi;
  auto* scan = app.add_subcommand("scan", "Sign runs and summary over [LO, HI]");
  scan->add_option("LO", lo)->required();
  scan->add_option("HI", hi)->required();

  std::string smax = std::to_string(kDefaultTailSMax), out_path;
  auto* certify = app.add_subcommand("certify", "Build and write a sign certificate");
  certify->add_option("--tail-smax", smax, "largest exponent with an explicit tail margin");
  certify->add_option("--out", out_path, "output path")->required();

  std::string cert_path;
  auto* check = app.add_subcommand("check", "Verify a certificate file");
  check->add_option("--cert", cert_path, "certificate path")->required();

  std::string bound;
  auto* exceed = app.add_subcommand("exceed", "Find n with x(n) > B");
  exceed->add_option("B", bound, "non-negative integer")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_n, out);
    if (*table) return cmd_table(from, to, preset, table_format == "csv", out);
    if (*intervals) return cmd_intervals(count, intervals_format == "csv", out);
    if (*scan) return cmd_scan(lo, hi, out);
    if (*certify) return cmd_certify(smax, out_path, out, err);
    if (*check) return cmd_check(cert_path, out, err);
    if (*exceed) return cmd_exceed(bound, out);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const CertificationError& e) {
    err << "certification failure: " << e.what() << '\n';
    return kExitCertificationFailure;
  }
  return kExitUsage;
}

}  // namespace xsign::cli
