#include <doctest.h>

#include <random>

#include "davenport/certificate.hpp"
#include "davenport/constructions.hpp"
#include "davenport/error.hpp"
#include "oracles.hpp"

using namespace davenport;

namespace {

const std::string kSample =
    "DAVENPORT-CERT 1\n"
    "group: 6\n"
    "claim: zero-sum-free\n"
    "length: 2\n"
    "provenance: manual\n"
    "terms:\n"
    "1\n"
    "5\n";

}  // namespace

TEST_CASE("serialize and parse round-trip byte for byte") {
  CHECK(serialize(parse_certificate(kSample)) == kSample);
  const auto lz = build_lzfs_certificate({2, 3, 4, 2, 3, 1, 3});
  const auto text = serialize(lz);
  const auto back = parse_certificate(text);
  CHECK(back.terms == lz.terms);
  CHECK(back.group == lz.group);
  CHECK(back.provenance == lz.provenance);
  CHECK(serialize(back) == text);

  std::mt19937 rng(8);
  for (int iter = 0; iter < 30; ++iter) {
    const auto g = make_group({2, 3 + iter % 5, 4});
    Certificate c{g, iter % 2 ? ClaimKind::NonDispersive : ClaimKind::ZeroSumFree,
                  iter % 2 ? 1 + iter : 0, "random " + std::to_string(iter),
                  oracle::random_sequence(rng, g, static_cast<std::size_t>(iter % 7)).terms};
    const auto s = serialize(c);
    CHECK(serialize(parse_certificate(s)) == s);
  }
}

TEST_CASE("verification outcomes") {
  const auto zsf_fail = verify_certificate(parse_certificate(kSample));
  CHECK_FALSE(zsf_fail.pass);
  CHECK(zsf_fail.spectrum.lengths == std::set<std::int64_t>{2});

  CHECK(verify_certificate(build_lzfs_certificate({2, 3, 4, 2, 3, 1, 3})).pass);

  const auto nd = build_nondispersive({2, 2, 3, 4});
  Certificate c{nd.sequence.group, ClaimKind::NonDispersive, 4, "manual", nd.sequence.terms};
  CHECK(verify_certificate(c).pass);
  c.unique_length = 3;
  CHECK_FALSE(verify_certificate(c).pass);
}

TEST_CASE("tampering with a term breaks a valid certificate") {
  auto cert = build_lzfs_certificate({2, 3, 4, 2, 3, 1, 3});
  cert.terms.push_back(cert.terms.front());
  CHECK_FALSE(verify_certificate(cert).pass);
  cert.terms.pop_back();
  cert.terms[0] = cert.group.zero();
  CHECK_FALSE(verify_certificate(cert).pass);
}

TEST_CASE("malformed certificates are rejected") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      parse_certificate(text);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::ParseError;
    }
    return false;
  };
  auto replace = [](std::string s, const std::string& from, const std::string& to) {
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK(expect_parse_error(""));
  CHECK(expect_parse_error(kSample.substr(0, kSample.size() - 1)));
  CHECK(expect_parse_error(replace(kSample, "\n", "\r\n")));
  CHECK(expect_parse_error(replace(kSample, "CERT 1", "CERT 2")));
  CHECK(expect_parse_error(replace(kSample, "group: 6", "group: 6,")));
  CHECK(expect_parse_error(replace(kSample, "claim: zero-sum-free", "claim: maybe")));
  CHECK(expect_parse_error(replace(kSample, "claim: zero-sum-free", "claim: non-dispersive 0")));
  CHECK(expect_parse_error(replace(kSample, "length: 2", "length: 3")));
  CHECK(expect_parse_error(replace(kSample, "length: 2", "length: 02")));
  CHECK(expect_parse_error(replace(kSample, "provenance: manual", "provenance: ")));
  CHECK(expect_parse_error(replace(kSample, "5\n", "6\n")));
  CHECK(expect_parse_error(replace(kSample, "5\n", "1,5\n")));
  CHECK(expect_parse_error(replace(kSample, "group: 6\nclaim: zero-sum-free",
                                   "claim: zero-sum-free\ngroup: 6")));
  CHECK(expect_parse_error(kSample + "\n"));
}
