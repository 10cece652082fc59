#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "support/fixtures.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = qrk::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (qrk::testing::data_dir() / name).string(); }

}  // namespace

TEST_CASE("simulate | extract | certify") {
  const auto sim = run({"simulate", "--phi", "0.1", "--n", "1000000", "--seed", "42"});
  REQUIRE(sim.code == 0);
  CHECK(sim.out.size() == 1'000'000);

  const auto ext = run({"extract", "--in", "-", "--stats", "-"}, sim.out);
  REQUIRE(ext.code == 0);
  CHECK(ext.err.find("\"consumed\": 500000") != std::string::npos);

  const auto cert = run({"certify", "--in", "-"}, ext.out);
  CHECK(cert.code == 0);
  CHECK(cert.out.find("PASS") != std::string::npos);

  // Byte-identical reruns.
  CHECK(run({"simulate", "--phi", "0.1", "--n", "1000000", "--seed", "42"}).out == sim.out);
  CHECK(run({"simulate", "--phi", "0.1", "--n", "1000000", "--seed", "0x2a"}).out == sim.out);
}

TEST_CASE("packed output round-trips through extract") {
  const auto ascii = run({"simulate", "--phi", "0.7", "--n", "999", "--seed", "5"});
  const auto packed = run({"simulate", "--phi", "0.7", "--n", "999", "--seed", "5", "--packed"});
  REQUIRE(packed.code == 0);
  CHECK(packed.out.starts_with("len=999\n"));
  CHECK(run({"extract", "--in", "-"}, packed.out).out == run({"extract", "--in", "-"}, ascii.out).out);
}

TEST_CASE("certify exit codes") {
  CHECK(run({"certify", "--in", "-"}, std::string(1024, '0')).code == 2);
  const auto champ = run({"champernowne", "--n", "10", "--base", "10"});
  CHECK(champ.out == "1234567891");
  CHECK(run({"champernowne", "--n", "6"}).out == "110111");
  CHECK(run({"certify", "--in", "-", "--json"}, std::string(1024, '0')).out.find("\"pass\": false") !=
        std::string::npos);
}

TEST_CASE("born") {
  CHECK(run({"born", "--pre", "1,0,0", "--post", "1.4142135623730951,1,1"}).out == "0.5\n");
  CHECK(run({"born", "--pre", "1,0", "--post", "0,1"}).out == "0\n");
  CHECK(run({"born", "--pre", "0.5+0.5i,0.5", "--post", "0.5+0.5i,0.5"}).out == "1\n");
  CHECK(run({"born", "--pre", "0,0", "--post", "1,0"}).code == 1);
}

TEST_CASE("sweep") {
  const auto r = run({"sweep", "--phi-list", "0,0.7853981633974483", "--n", "1000", "--seed", "1", "--json"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"extracted_frequency\": null") != std::string::npos);
  CHECK(run({"sweep", "--phi-list", "0.1", "--n", "1"}).code == 1);
}

TEST_CASE("hypergraph subcommands on the gadget fixtures") {
  CHECK(run({"hypergraph", "validate", fixture("composed.json")}).out == "valid\n");
  CHECK(run({"hypergraph", "classify", fixture("tifs.json"), "--from", "PSI", "--to", "PHI"}).out.starts_with(
      "TrueImpliesFalse\n"));
  CHECK(run({"hypergraph", "classify", fixture("tits.json"), "--from", "PSI", "--to", "PHI"}).out.starts_with(
      "TrueImpliesTrue\n"));
  CHECK(run({"hypergraph", "classify", fixture("composed.json"), "--from", "PSI", "--to", "PHI"})
            .out.starts_with("NoStateWithSourceTrue\n"));
  CHECK(run({"hypergraph", "verify", fixture("composed.json")}).code == 0);
  CHECK(run({"hypergraph", "states", fixture("tifs.json"), "--require", "PSI=1", "--count"}).out == "81\n");

  const auto report = run({"hypergraph", "report", fixture("composed.json"), "--prepared", "PSI", "--json"});
  REQUIRE(report.code == 0);
  CHECK(report.out.find("undefined-required") != std::string::npos);

  const auto closure = run({"hypergraph", "closure", fixture("composed.json"), "--require", "PSI=1",
                            "--expect-contradiction"});
  CHECK(closure.code == 0);
  CHECK(closure.out.starts_with("Contradiction at "));
  CHECK(run({"hypergraph", "closure", fixture("tifs.json"), "--require", "PSI=1", "--expect-contradiction"}).code ==
        2);

  const auto gap = run({"hypergraph", "gap", fixture("tifs.json"), "--from", "PSI", "--to", "PHI"});
  CHECK(gap.code == 0);
  CHECK(gap.out.find("0.5") != std::string::npos);

  const auto merged = run({"hypergraph", "merge", fixture("tifs.json"), fixture("tits.json")});
  REQUIRE(merged.code == 0);
  CHECK(run({"hypergraph", "classify", "-", "--from", "PSI", "--to", "PHI"}, merged.out)
            .out.starts_with("NoStateWithSourceTrue\n"));
}

TEST_CASE("usage and input errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"simulate", "--phi", "0.1"}).code == 1);
  CHECK(run({"simulate", "--phi", "0.1", "--n", "10", "--seed", "-3"}).code == 1);
  CHECK(run({"certify", "--in", "-"}, "01x1").code == 1);
  CHECK(run({"hypergraph", "validate", "/nonexistent/graph.json"}).code == 1);
  CHECK(run({"hypergraph", "classify", "-", "--from", "a", "--to", "b"}, "{not json").code == 1);
  CHECK(run({"hypergraph", "states", fixture("tifs.json"), "--require", "PSI=2"}).code == 1);
  const auto r = run({"hypergraph", "classify", fixture("tifs.json"), "--from", "PSI", "--to", "nope"});
  CHECK(r.code == 1);
  CHECK(r.err.find("UnknownAtom") != std::string::npos);
}
