#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "davenport/certificate.hpp"
#include "davenport/cli.hpp"

using namespace davenport;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "davenport");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "davenport_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("bounds subcommand") {
  auto a = run({"bounds", "--group", "2,2,2,2,6"});
  CHECK(a.code == kExitOk);
  CHECK(contains(a.out, "* LZFS"));
  CHECK(contains(a.out, "best: LZFS 11 (delta 1)"));

  auto b = run({"bounds", "--group", "9"});
  CHECK(contains(b.out, "best: DSTAR 9"));

  auto c = run({"bounds", "--group", "3,3,3,3,3,3,6"});
  CHECK(contains(c.out, "best: LZFS 19"));

  CHECK(run({"bounds", "--group", "2,,6"}).code == kExitParse);
  CHECK(run({"bounds", "--group", "4,8", "--formula", "gene"}).code == kExitPGroup);
  CHECK(run({"bounds", "--group", "2,6", "--formula", "gene"}).code == kExitOk);
  CHECK(run({"bounds", "--group", "2,6", "--formula", "nonsense"}).code == kExitParse);
}

TEST_CASE("construct, verify and spectrum") {
  const auto nd = temp_path("nd.cert");
  auto a = run({"construct", "--mode", "nondispersive", "--n", "2", "--p", "2", "--ell", "3", "--r", "4",
                "--out", nd});
  CHECK(a.code == kExitOk);
  const auto cert = parse_certificate(slurp(nd));
  CHECK(cert.terms.size() == 7);
  CHECK(cert.claim == ClaimKind::NonDispersive);
  CHECK(cert.unique_length == 4);
  CHECK(run({"verify", nd}).code == kExitOk);

  const auto lz = temp_path("lz.cert");
  CHECK(run({"construct", "--mode", "lzfs", "--n", "2", "--k", "3", "--r", "4", "--p", "2", "--k1",
             "3", "--t", "1", "--ell", "3", "--out", lz})
            .code == kExitOk);
  auto v = run({"verify", lz});
  CHECK(v.code == kExitOk);
  CHECK(contains(v.out, "PASS"));
  CHECK(contains(v.out, "spectrum {}"));
  CHECK(contains(run({"spectrum", lz}).out, "length 10 spectrum {}"));

  // Turn the final e into 4e: then e + e + 4e sums to zero.
  auto text = slurp(lz);
  const auto pos = text.rfind("0,0,0,0,1\n");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 10, "0,0,0,0,4\n");
  const auto bad = temp_path("bad.cert");
  std::ofstream(bad, std::ios::binary) << text;
  auto f = run({"verify", bad});
  CHECK(f.code == kExitVerifyFailed);
  CHECK(contains(f.out, "FAIL"));
  CHECK(contains(f.out, "3"));
  CHECK(run({"spectrum", bad}).code == kExitOk);

  const auto junk = temp_path("junk.cert");
  std::ofstream(junk, std::ios::binary) << "DAVENPORT-CERT 1\ngroup: 6\n";
  CHECK(run({"verify", junk}).code == kExitParse);
  CHECK(run({"verify", temp_path("missing.cert")}).code == kExitParse);

  CHECK(run({"construct", "--mode", "nondispersive", "--n", "2", "--p", "2", "--ell", "1", "--r", "1"})
            .code == kExitPrecondition);
  CHECK(run({"construct", "--mode", "lzfs", "--n", "3", "--k", "2", "--r", "5", "--p", "3", "--k1",
             "2", "--t", "1", "--ell", "2"})
            .code == kExitPrecondition);
}

TEST_CASE("construct output always verifies") {
  struct P {
    std::string n, p, ell, r;
  };
  for (auto [n, p, ell, r] : {P{"2", "2", "2", "1"}, P{"2", "2", "3", "4"}, P{"3", "3", "1", "1"},
                              P{"3", "3", "2", "6"}, P{"4", "2", "2", "1"}, P{"4", "2", "3", "4"},
                              P{"6", "3", "1", "1"}, P{"6", "2", "2", "1"}}) {
    const auto path = temp_path("grid.cert");
    REQUIRE(run({"construct", "--mode", "nondispersive", "--n", n, "--p", p, "--ell", ell, "--r", r,
                 "--out", path})
                .code == kExitOk);
    CHECK(run({"verify", path}).code == kExitOk);
  }
  const auto path = temp_path("grid.cert");
  REQUIRE(run({"construct", "--mode", "lzfs", "--n", "3", "--k", "2", "--r", "6", "--p", "3", "--k1",
               "2", "--t", "1", "--ell", "2", "--out", path})
              .code == kExitOk);
  CHECK(run({"verify", path}).code == kExitOk);
}

TEST_CASE("exact subcommand") {
  auto a = run({"exact", "--group", "3,3", "--what", "davenport"});
  CHECK(a.code == kExitOk);
  CHECK(contains(a.out, "D(3,3) = 5"));
  auto b = run({"exact", "--group", "2", "--what", "disc"});
  CHECK(contains(b.out, "disc(2) = 4"));
  auto c = run({"exact", "--group", "2,2,2,2,6", "--what", "davenport", "--budget", "1000"});
  CHECK(c.code == kExitBudget);
  CHECK(contains(c.out, ">= 11"));
  CHECK(run({"exact", "--group", "2,2", "--what", "eta"}).code == kExitParse);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitParse);
  CHECK(run({"frobnicate"}).code == kExitParse);
  CHECK(run({"--help"}).code == kExitOk);
}
