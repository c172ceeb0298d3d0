#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

const std::string kData = std::string(PIGEONPOST_TEST_DATA) + "/data/";

Run run(const std::string& args) {
  const std::string cmd = std::string(PIGEONPOST_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve reference instances") {
  const Run hub = run("solve " + kData + "hub6.json --mode twohop --algorithm coordinator");
  REQUIRE(hub.code == 0);
  CHECK(parse(hub)["pigeon_count"] == 5);

  const Run cyc = run("solve " + kData + "cycle6.json --mode multihop --algorithm exact");
  REQUIRE(cyc.code == 0);
  CHECK(parse(cyc)["pigeon_count"] == 6);
  CHECK(parse(cyc)["proven_optimal"] == true);

  const Run empty = run("solve " + kData + "empty.json --mode singlehop --algorithm direct");
  REQUIRE(empty.code == 0);
  CHECK(parse(empty)["pigeon_count"] == 0);
}

TEST_CASE("solve output matches golden file") {
  const Run hub = run("solve " + kData + "hub6.json --mode twohop --algorithm coordinator --report");
  REQUIRE(hub.code == 0);
  CHECK(hub.out == read_file(std::string(PIGEONPOST_TEST_DATA) + "/golden/hub6_coordinator.json"));
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify " + kData + "hub6.json " + kData + "hub6_plan.json --mode twohop").code == 0);
  const Run bad = run("verify " + kData + "hub6.json " + kData + "hub6_plan_reversed.json --mode twohop");
  CHECK(bad.code == 1);
  CHECK(parse(bad)["failures"].size() == 3);
  CHECK(run("verify " + kData + "hub6.json " + kData + "hub6_plan.json --mode singlehop").code == 1);
}

TEST_CASE("solve output pipes into verify") {
  for (const char* spec : {"--mode singlehop", "--mode twohop --algorithm coordinator",
                           "--mode twohop --algorithm exact", "--mode multihop --algorithm cycle",
                           "--mode multihop --algorithm exact", "--mode multihop --algorithm ilp"}) {
    const std::string mode = std::string(spec).substr(7, std::string(spec).find(' ', 7) - 7);
    const Run r = run("solve " + kData + "hub6.json " + spec + " | " + PIGEONPOST_CLI + " verify " + kData +
                      "hub6.json - --mode " + mode);
    CHECK_MESSAGE(r.code == 0, spec);
  }
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("solve " + kData + "hub6.json --mode twohop --algorithm cycle").code == 2);
  CHECK(run("solve " + kData + "hub6.json --mode singlehop --algorithm exact").code == 2);
  CHECK(run("solve " + kData + "hub6.json --mode sideways").code == 2);
  CHECK(run("solve " + kData + "hub6.json").code == 2);
  CHECK(run("verify " + kData + "hub6.json " + kData + "hub6_plan.json").code == 2);
  CHECK(run("solve " + kData + "hub6.json --mode multihop --time-budget 0").code == 2);
  CHECK(run("reduce vc-to-multihop " + kData + "vc_example.json").code == 2);
  CHECK(run("gen cycle --n 1").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("parse errors exit 3") {
  CHECK(run("bounds " + kData + "sat_example.cnf").code == 3);
  CHECK(run("bounds " + kData + "does_not_exist.json").code == 3);
  CHECK(run("reduce vc-to-multihop " + kData + "disconnected.json --k 1").code == 3);
  CHECK(run("reduce 3sat-to-twohop " + kData + "hub6.json").code == 3);
}

TEST_CASE("strict budget exits 4") {
  CHECK(run("solve " + kData + "hub6.json --mode multihop --algorithm exact --max-nodes 3 --strict").code == 4);
  CHECK(run("solve " + kData + "hub6.json --mode multihop --algorithm exact --max-nodes 3").code == 0);
}

TEST_CASE("reductions") {
  const Run vc = run("reduce vc-to-multihop " + kData + "vc_example.json --k 2");
  REQUIRE(vc.code == 0);
  CHECK(parse(vc)["budget"] == 5);
  CHECK(parse(vc)["demands"].size() == 8);

  const Run sat = run("reduce 3sat-to-twohop " + kData + "sat_example.cnf");
  REQUIRE(sat.code == 0);
  CHECK(parse(sat)["budget"] == 693);
  CHECK(parse(sat)["forced_edges"].size() == 16);

  // The reduction output doubles as a demand graph.
  const Run solved = run("reduce vc-to-multihop " + kData + "vc_example.json --k 2 | " + PIGEONPOST_CLI +
                         " solve - --mode multihop --algorithm exact");
  REQUIRE(solved.code == 0);
  CHECK(parse(solved)["pigeon_count"] == 5);
}

TEST_CASE("3sat witness plan verifies") {
  const Run sat = run("reduce 3sat-to-twohop " + kData + "sat_example.cnf --assignment TFTFF");
  REQUIRE(sat.code == 0);
  const auto doc = parse(sat);
  CHECK(doc["witness_plan"].size() == 693);
  CHECK(run("reduce 3sat-to-twohop " + kData + "sat_example.cnf --assignment FFFFF").code == 3);
}

TEST_CASE("bounds") {
  const Run b = run("bounds " + kData + "hub6.json");
  REQUIRE(b.code == 0);
  CHECK(parse(b)["lower_bound"] == 3);
  CHECK(parse(b)["sources"] == nlohmann::json({0, 1, 2}));
  CHECK(parse(b)["duplicates_dropped"] == 0);

  const Run dup = run("bounds " + kData + "duplicates.json");
  REQUIRE(dup.code == 0);
  CHECK(parse(dup)["demand_count"] == 2);
  CHECK(parse(dup)["duplicates_dropped"] == 1);
}

TEST_CASE("export-lp") {
  const Run lp = run("export-lp " + kData + "single_demand.json --mode multihop");
  REQUIRE(lp.code == 0);
  CHECK(lp.out == read_file(std::string(PIGEONPOST_TEST_DATA) + "/golden/single_demand_multihop.lp"));
  CHECK(run("export-lp " + kData + "hub6.json --mode singlehop").code == 2);
}

TEST_CASE("gen is deterministic") {
  const Run cyc = run("gen cycle --n 6");
  REQUIRE(cyc.code == 0);
  CHECK(parse(cyc)["demands"].size() == 6);
  CHECK(parse(cyc)["demands"][5] == nlohmann::json({5, 0}));

  CHECK(parse(run("gen hub6")) == nlohmann::json::parse(read_file(kData + "hub6.json")));

  const Run a = run("gen random --n 5 --p 0.4 --seed 7");
  const Run b = run("gen random --n 5 --p 0.4 --seed 7");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != run("gen random --n 5 --p 0.4 --seed 8").out);
}

TEST_CASE("output file option") {
  const std::string path = std::string(PIGEONPOST_BINARY_DIR) + "/cli_output_test.json";
  std::remove(path.c_str());
  REQUIRE(run("bounds " + kData + "hub6.json -o " + path).code == 0);
  CHECK(nlohmann::json::parse(read_file(path))["lower_bound"] == 3);
  std::remove(path.c_str());
}

TEST_CASE("identical commands give identical bytes") {
  const std::string cmd = "solve " + kData + "hub6.json --mode multihop --algorithm exact --certify";
  CHECK(run(cmd).out == run(cmd).out);
}

}  // TEST_SUITE
