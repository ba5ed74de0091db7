#include "davenport/certificate.hpp"

#include <charconv>

#include "davenport/error.hpp"

namespace davenport {

namespace {

constexpr std::string_view kHeader = "DAVENPORT-CERT 1";

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
  throw Error(ErrorKind::ParseError,
              "certificate line " + std::to_string(line) + ": " + why);
}

std::int64_t parse_count(std::string_view s, std::size_t line) {
  if (s.empty() || (s.size() > 1 && s[0] == '0')) parse_fail(line, "bad integer '" + std::string(s) + "'");
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
    parse_fail(line, "bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

std::string serialize(const Certificate& cert) {
  std::string out;
  out += kHeader;
  out += "\ngroup: " + format_group(cert.group) + "\nclaim: ";
  if (cert.claim == ClaimKind::ZeroSumFree)
    out += "zero-sum-free";
  else
    out += "non-dispersive " + std::to_string(cert.unique_length);
  out += "\nlength: " + std::to_string(cert.terms.size());
  out += "\nprovenance: " + cert.provenance + "\nterms:\n";
  for (const auto& t : cert.terms) out += format_element(t) + "\n";
  return out;
}

Certificate parse_certificate(std::string_view text) {
  if (text.find('\r') != std::string_view::npos)
    throw Error(ErrorKind::ParseError, "certificate must use LF line endings");
  if (text.empty() || text.back() != '\n')
    throw Error(ErrorKind::ParseError, "certificate must end with a newline");

  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    const auto nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.size() < 6) parse_fail(lines.size(), "truncated header");
  if (lines[0] != kHeader) parse_fail(1, "expected '" + std::string(kHeader) + "'");

  static constexpr std::string_view keys[] = {"group: ", "claim: ", "length: ",
                                              "provenance: "};
  std::string_view values[4];
  for (std::size_t i = 0; i < 4; ++i) {
    const auto line = lines[i + 1];
    if (!line.starts_with(keys[i]))
      parse_fail(i + 2, "expected key '" + std::string(keys[i].substr(0, keys[i].size() - 2)) +
                            "', found '" + std::string(line) + "'");
    values[i] = line.substr(keys[i].size());
  }
  if (lines[5] != "terms:") parse_fail(6, "expected 'terms:'");

  GroupSpec group = [&] {
    try {
      return parse_group_literal(values[0]);
    } catch (const Error& e) {
      parse_fail(2, e.what());
    }
  }();

  Certificate cert{group, ClaimKind::ZeroSumFree, 0, std::string(values[3]), {}};
  if (values[1] == "zero-sum-free") {
    cert.claim = ClaimKind::ZeroSumFree;
  } else if (values[1].starts_with("non-dispersive ")) {
    cert.claim = ClaimKind::NonDispersive;
    cert.unique_length = parse_count(values[1].substr(15), 3);
    if (cert.unique_length < 1) parse_fail(3, "unique length must be positive");
  } else {
    parse_fail(3, "unknown claim '" + std::string(values[1]) + "'");
  }
  const std::int64_t length = parse_count(values[2], 4);
  if (cert.provenance.empty()) parse_fail(5, "empty provenance");

  const std::size_t term_lines = lines.size() - 6;
  if (static_cast<std::int64_t>(term_lines) != length)
    parse_fail(6, "length is " + std::to_string(length) + " but " +
                      std::to_string(term_lines) + " terms follow");
  for (std::size_t i = 6; i < lines.size(); ++i) {
    try {
      cert.terms.push_back(parse_element_literal(group, lines[i]));
    } catch (const Error& e) {
      parse_fail(i + 1, e.what());
    }
  }
  return cert;
}

VerifyReport verify_certificate(const Certificate& cert, SpectrumLimits limits) {
  VerifyReport rep;
  rep.spectrum = length_spectrum(cert.sequence(), limits);
  if (cert.claim == ClaimKind::ZeroSumFree) {
    rep.pass = rep.spectrum.empty();
    rep.detail = rep.pass ? "zero-sum free" : "has zero-sum subsequences";
  } else {
    rep.pass = rep.spectrum.lengths == std::set<std::int64_t>{cert.unique_length};
    rep.detail = rep.pass ? "unique zero-sum length " + std::to_string(cert.unique_length)
                          : "expected spectrum {" + std::to_string(cert.unique_length) + "}";
  }
  return rep;
}

}  // namespace davenport
