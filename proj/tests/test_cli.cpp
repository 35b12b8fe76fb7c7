#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "exceptio/cli.hpp"
#include "exceptio/report.hpp"

using namespace exceptio;
using nlohmann::json;

namespace {

const std::filesystem::path kGolden = EXCEPTIO_GOLDEN_DIR;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "exceptio");
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

json envelope(const Run& r) {
  json j = json::parse(r.out);
  REQUIRE(j.contains("elapsed_ms"));
  CHECK(j["elapsed_ms"].is_number());
  j.erase("elapsed_ms");
  return j;
}

struct Golden {
  const char* name;
  std::vector<std::string> args;
  int status;
};

const std::vector<Golden> kCases{
    {"verdict_quintic", {"verdict", "--poly", "x^2+108; x^3+2", "--limit", "100000", "--no-cache"}, 0},
    {"verdict_sextic", {"verdict", "--poly", "x^2-2; x^2-3; x^2-6", "--limit", "100000", "--no-cache"}, 0},
    {"verdict_root", {"verdict", "--poly", "x-1; x^2+1", "--limit", "10", "--no-cache"}, 0},
    {"verdict_x2m2", {"verdict", "--poly", "x^2-2", "--limit", "100", "--no-cache"}, 0},
    {"scan_x2m2", {"scan", "--poly", "x^2-2", "--limit", "100", "--no-cache"}, 0},
    {"density_x3m2", {"density", "--poly", "x^3-2", "--limit", "1000", "--no-cache", "--group-file", "d5.group"}, 0},
    {"pattern_x4p1", {"pattern", "--poly", "x^4+1", "--p", "17"}, 0},
    {"pattern_x3m2", {"pattern", "--poly", "x^3-2", "--p", "31"}, 0},
    {"group_d5", {"group", "--group-file", "d5.group"}, 0},
    {"group_klein6", {"group", "--group-file", "klein6.group"}, 0},
    {"kummer_primes", {"kummer", "--p", "3", "--primes", "2,3"}, 0},
    {"kummer_radicands", {"kummer", "--p", "2", "--radicands", "2,3,6"}, 0},
    {"goodsets_3_3", {"goodsets", "--p", "3", "--n", "3", "--budget", "7"}, 0},
    {"goodsets_all_n", {"goodsets", "--p", "2", "--n", "4", "--all-n"}, 0},
    {"complete_x3p2", {"complete", "--poly", "x^3+2", "--limit", "10000"}, 0},
    {"complete_d", {"complete-d", "--bad", "3,5", "--bound", "10000"}, 0},
    {"screen_quintic", {"intersective-screen", "--poly", "x^2+108; x^3+2", "--bound", "100"}, 0},
    {"error_not_prime", {"pattern", "--poly", "x^4+1", "--p", "15"}, 1},
    {"error_square_disc", {"complete", "--poly", "x^3-3x-1"}, 1},
    {"error_group_file", {"group", "--group-file", "missing.group"}, 1},
};

}  // namespace

TEST_CASE("golden envelopes") {
  const auto previous = std::filesystem::current_path();
  std::filesystem::current_path(kGolden);
  const bool update = std::getenv("EXCEPTIO_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : kCases) {
    CAPTURE(c.name);
    const Run r = run(c.args);
    CHECK(r.status == c.status);
    CHECK((c.status == 0) == r.err.empty());
    const json got = envelope(r);
    const auto path = kGolden / (std::string(c.name) + ".json");
    if (update) std::ofstream(path) << got.dump(2) << '\n';
    std::ifstream in(path);
    REQUIRE(in.good());
    CHECK(got == json::parse(in));
    CHECK(got["tool"] == "exceptio");
    CHECK(got.contains("inputs"));
    CHECK(got.contains("result") != got.contains("error"));
  }
  std::filesystem::current_path(previous);
}

TEST_CASE("results equal the serialised library calls") {
  CHECK(envelope(run({"scan", "--poly", "x^3-2", "--limit", "5000", "--no-cache"}))["result"] ==
        json(CachedScan{scan(parse_factored("x^3-2"), 5000), false, false, false}));
  CHECK(envelope(run({"verdict", "--poly", "x^2-2; x^2-3; x^2-6", "--limit", "5000", "--no-cache"}))["result"] ==
        json(exceptional_verdict(parse_factored("x^2-2; x^2-3; x^2-6"), 5000)));
  const std::vector<u64> l{2, 3, 5};
  json k = is_exceptional_exact(radicands_from_primes(3, l));
  const json got = envelope(run({"kummer", "--p", "3", "--primes", "2,3,5"}))["result"];
  CHECK(got["exceptional_exact"] == k["exceptional_exact"]);
  CHECK(got["witness"] == k["witness"]);
  CHECK(got["theorem_verdict"] == true);
  CHECK(envelope(run({"goodsets", "--p", "3", "--n", "3"}))["result"] == json(min_good_size(3, 3, 7)));
  CHECK(envelope(run({"complete-d", "--bad", "3", "--bound", "100"}))["result"] ==
        json(find_intersective_d(std::vector<u64>{3}, 100)));
  CHECK(envelope(run({"group", "--group-file", (kGolden / "d5.group").string()}))["result"] == json(summarize(dihedral_group(5))));
}

TEST_CASE("usage errors exit 2") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"scan", "--poly", "x^2-2", "--limit", "0"},
           {},
           {"scan"},
           {"nonsense"},
           {"kummer", "--p", "3"},
           {"kummer", "--p", "3", "--primes", "2", "--radicands", "2"},
           {"goodsets", "--p", "3", "--n", "0"},
           {"intersective-screen", "--poly", "x", "--bound", "2000000"},
           {"scan", "--poly", "x^2-2", "--threads", "0"},
       }) {
    const Run r = run(args);
    CHECK(r.status == kExitUsageError);
    CHECK_FALSE(r.err.empty());
  }
  CHECK(run({"--help"}).status == kExitOk);
}

TEST_CASE("domain errors carry the machine code") {
  const Run r = run({"scan", "--poly", "x^2-", "--no-cache"});
  CHECK(r.status == kExitDomainError);
  CHECK(envelope(r)["error"]["code"] == "ParseError");
  CHECK(envelope(run({"kummer", "--p", "4", "--primes", "2"}))["error"]["code"] == "NotPrime");
  CHECK(envelope(run({"kummer", "--p", "3", "--radicands", "12"}))["error"]["code"] == "InvalidRadicand");
  CHECK(envelope(run({"verdict", "--poly", "x^2-2; x^2-2", "--no-cache", "--limit", "100"}))["error"]["code"] == "ZeroResultant");
}

TEST_CASE("pretty output is a table") {
  const Run r = run({"kummer", "--p", "3", "--primes", "2,3", "--pretty"});
  CHECK(r.status == 0);
  CHECK(r.out.starts_with("kummer\n"));
  CHECK(r.out.find("exceptional_exact") != std::string::npos);
  CHECK(r.out.find('{') != 0);
}

TEST_CASE("cache through the command line") {
  const auto dir = std::filesystem::temp_directory_path() / "exceptio-cli-cache";
  std::filesystem::remove_all(dir);
  const std::string d = dir.string();
  const std::string sextic = "x^2-2; x^2-3; x^2-6";

  const json first = envelope(run({"scan", "--poly", sextic, "--limit", "10000", "--cache-dir", d}))["result"];
  CHECK(first["cache"]["hit"] == false);
  const json again = envelope(run({"scan", "--poly", sextic, "--limit", "10000", "--cache-dir", d}))["result"];
  CHECK(again["cache"]["hit"] == true);
  json a = first, b = again;
  a.erase("cache");
  b.erase("cache");
  CHECK(a == b);

  const std::string cubic = "x^3-2";
  const json small = envelope(run({"scan", "--poly", cubic, "--limit", "10000", "--cache-dir", d}))["result"];
  const json big = envelope(run({"scan", "--poly", cubic, "--limit", "100000", "--cache-dir", d}))["result"];
  CHECK(big["cache"]["extended"] == true);
  const auto sf = small["failures"].get<std::vector<u64>>();
  const auto bf = big["failures"].get<std::vector<u64>>();
  CHECK(std::equal(sf.begin(), sf.end(), bf.begin()));
  CHECK(bf == scan(parse_factored(cubic), 100000).failures);

  std::ofstream(ScanCache(dir).path_for(cubic), std::ios::app) << "garbage line\n";
  const json fixed = envelope(run({"scan", "--poly", cubic, "--limit", "100000", "--cache-dir", d}))["result"];
  CHECK(fixed["cache"]["recovered"] == true);
  CHECK(fixed["failures"] == big["failures"]);

  setenv("EXCEPTIO_CACHE_DIR", d.c_str(), 1);
  const json env = envelope(run({"scan", "--poly", sextic, "--limit", "10000"}))["result"];
  CHECK(env["cache"]["hit"] == true);
  unsetenv("EXCEPTIO_CACHE_DIR");
}
