#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "hermrank/json_io.hpp"
#include "hermrank/oracle.hpp"

using namespace hermrank;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "hermrank_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

}  // namespace

TEST_CASE("params") {
  const fs::path dir = scratch();
  const Run r = run({"params", "--q", "2", "--n", "5", "--d", "3"});
  REQUIRE(r.code == cli::kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["k"] == 3);
  CHECK(j["m"] == 3);
  CHECK(j["kappa"] == 1);

  const Run even = run({"params", "--q", "2", "--n", "4", "--d", "3"});
  CHECK(even.code == cli::kExitUsage);
  CHECK(even.err.find("n must be odd") != std::string::npos);
  CHECK(run({"params", "--q", "4", "--n", "3", "--d", "3"}).code == cli::kExitUsage);
  CHECK(run({"params", "--q", "2"}).code == cli::kExitUsage);
  CHECK(run({"nonsense"}).code == cli::kExitUsage);

  // round trip through the file
  REQUIRE(run({"params", "--q", "2", "--n", "7", "--d", "5", "--out", (dir / "p.json").string()}).code == 0);
  const CodeParams loaded = params_from_json(json::parse(slurp(dir / "p.json")));
  const CodeParams built = build_params(2, 7, 5);
  CHECK(loaded.alpha == built.alpha);
  CHECK(loaded.eta == built.eta);
  CHECK(loaded.d == 5);
}

TEST_CASE("params file tampering is rejected") {
  const fs::path dir = scratch();
  json j = params_to_json(build_params(2, 5, 3));
  j["alpha"][0][0] = 1 - j["alpha"][0][0].get<int>();
  spit(dir / "bad.json", j.dump());
  const Run r = run({"message", "--params", (dir / "bad.json").string(), "--seed", "1"});
  CHECK(r.code == cli::kExitUsage);
  spit(dir / "garbage.json", "{not json");
  CHECK(run({"message", "--params", (dir / "garbage.json").string(), "--seed", "1"}).code == cli::kExitUsage);
  CHECK(run({"message", "--params", (dir / "missing.json").string(), "--seed", "1"}).code == cli::kExitUsage);
}

TEST_CASE("encode / corrupt / decode pipeline") {
  const fs::path dir = scratch();
  const std::string params = (dir / "p253.json").string();
  const std::string msg = (dir / "m.json").string(), cw = (dir / "c.json").string(), rx = (dir / "r.json").string();
  REQUIRE(run({"params", "--q", "2", "--n", "5", "--d", "3", "--out", params}).code == 0);
  REQUIRE(run({"message", "--params", params, "--seed", "7", "--out", msg}).code == 0);
  REQUIRE(run({"encode", "--params", params, "--message", msg, "--out", cw}).code == 0);
  const json message = json::parse(slurp(msg));

  SUBCASE("rank 0") {
    REQUIRE(run({"corrupt", "--params", params, "--codeword", cw, "--rank", "0", "--seed", "1", "--out", rx}).code == 0);
    const Run r = run({"decode", "--params", params, "--received", rx});
    CHECK(r.code == cli::kExitOk);
    CHECK(json::parse(r.out)["f"] == message["f"]);
  }
  SUBCASE("rank 1, seed 42, deterministic") {
    REQUIRE(run({"corrupt", "--params", params, "--codeword", cw, "--rank", "1", "--seed", "42", "--out", rx}).code == 0);
    const Run a = run({"decode", "--params", params, "--received", rx});
    const Run b = run({"decode", "--params", params, "--received", rx});
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    CHECK(j["status"] == "Success");
    CHECK(j["t"] == 1);
    CHECK(j["f"] == message["f"]);
  }
  SUBCASE("rank 2 agrees with the oracle") {
    const CodeParams p = params_from_json(json::parse(slurp(params)));
    const CodeTable table = enumerate_code(p);
    for (int seed = 0; seed < 10; ++seed) {
      REQUIRE(run({"corrupt", "--params", params, "--codeword", cw, "--rank", "2", "--seed", std::to_string(seed),
                   "--out", rx})
                  .code == 0);
      const Run r = run({"decode", "--params", params, "--received", rx});
      const auto received = word_from_json(p, json::parse(slurp(rx)));
      const NearestResult near = nearest_codeword(p, table, received);
      if (near.distance <= 1) {
        CHECK(r.code == cli::kExitOk);
      } else {
        CHECK(r.code == cli::kExitDecodeFailure);
        CHECK(json::parse(r.out)["reason"] == "RadiusExceeded");
      }
    }
  }
  SUBCASE("dump") {
    REQUIRE(run({"corrupt", "--params", params, "--codeword", cw, "--rank", "1", "--seed", "3", "--out", rx}).code == 0);
    const std::string dump = (dir / "dump.json").string();
    REQUIRE(run({"decode", "--params", params, "--received", rx, "--dump", dump}).code == 0);
    const json j = json::parse(slurp(dump));
    CHECK(j["beta"].size() == 5);
    CHECK(j["dickson"].size() == 5);
  }
  SUBCASE("malformed inputs exit 2") {
    spit(dir / "short.json", R"({"v": [[0,0,0,0,0,0,0,0,0,0]]})");
    CHECK(run({"decode", "--params", params, "--received", (dir / "short.json").string()}).code == cli::kExitUsage);
    CHECK(run({"corrupt", "--params", params, "--codeword", cw, "--rank", "9", "--seed", "1"}).code == cli::kExitUsage);
    CHECK(run({"corrupt", "--params", params, "--codeword", cw, "--rank", "1"}).code == cli::kExitUsage);
    CHECK(run({"corrupt", "--params", params, "--codeword", cw, "--rank", "1", "--seed", "1", "--mode", "x"}).code ==
          cli::kExitUsage);
    // params for a different code
    const std::string other = (dir / "p273.json").string();
    REQUIRE(run({"params", "--q", "2", "--n", "7", "--d", "3", "--out", other}).code == 0);
    CHECK(run({"decode", "--params", other, "--received", cw}).code == cli::kExitUsage);
  }
}

TEST_CASE("simulate") {
  const Run empty = run({"simulate", "--q", "2", "--n", "5", "--d", "3", "--trials", "0", "--seed", "1"});
  CHECK(empty.code == 0);
  CHECK(json::parse(empty.out)["mismatch_total"] == 0);

  const Run a = run({"simulate", "--q", "2", "--n", "5", "--d", "3", "--trials", "1000", "--ranks", "1", "--seed", "9"});
  REQUIRE(a.code == 0);
  const json j = json::parse(a.out);
  CHECK(j["per_rank"][0]["success_rate"] == 1.0);
  CHECK(j["mismatch_total"] == 0);

  const Run b =
      run({"simulate", "--q", "2", "--n", "5", "--d", "3", "--trials", "1000", "--ranks", "1", "--seed", "9", "--threads", "4"});
  CHECK(a.out == b.out);

  const Run range = run({"simulate", "--q", "2", "--n", "7", "--d", "7", "--trials", "500", "--ranks", "0-3", "--seed", "2"});
  REQUIRE(range.code == 0);
  for (const auto& row : json::parse(range.out)["per_rank"]) CHECK(row["success_rate"] == 1.0);

  CHECK(run({"simulate", "--q", "2", "--n", "5", "--d", "3", "--trials", "1", "--ranks", "3-1", "--seed", "1"}).code ==
        cli::kExitUsage);
  CHECK(run({"simulate", "--q", "2", "--n", "5", "--d", "3", "--trials", "1"}).code == cli::kExitUsage);

  const Run timed =
      run({"simulate", "--q", "2", "--n", "5", "--d", "3", "--trials", "5", "--ranks", "1", "--seed", "1", "--timing"});
  CHECK(json::parse(timed.out)["per_rank"][0].contains("mean_latency_ms"));
}

TEST_CASE("mindist and matrix") {
  const fs::path dir = scratch();
  const Run r = run({"mindist", "--q", "2", "--n", "3", "--d", "3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["min_distance"] == 3);
  CHECK(j["code_size"] == 8);
  CHECK(run({"mindist", "--q", "2", "--n", "5", "--d", "3", "--limit", "100"}).code == cli::kExitUsage);
  CHECK(run({"mindist"}).code == cli::kExitUsage);

  const std::string params = (dir / "p333.json").string();
  REQUIRE(run({"params", "--q", "3", "--n", "3", "--d", "3", "--out", params}).code == 0);
  const CodeParams p = params_from_json(json::parse(slurp(params)));
  spit(dir / "zero.json", word_to_json(p, std::vector<Felt>(3)).dump());
  const Run zero = run({"matrix", "--params", params, "--codeword", (dir / "zero.json").string()});
  CHECK(zero.code == 0);
  CHECK(zero.out.find("hermitian=true") != std::string::npos);

  REQUIRE(run({"message", "--params", params, "--seed", "3", "--out", (dir / "m333.json").string()}).code == 0);
  REQUIRE(run({"encode", "--params", params, "--message", (dir / "m333.json").string(), "--out",
               (dir / "c333.json").string()})
              .code == 0);
  const Run m = run({"matrix", "--params", params, "--codeword", (dir / "c333.json").string(), "--json"});
  CHECK(m.code == 0);
  CHECK(json::parse(m.out)["hermitian"] == true);
}

TEST_CASE("params output is byte-identical across runs") {
  CHECK(run({"params", "--q", "3", "--n", "5", "--d", "3"}).out == run({"params", "--q", "3", "--n", "5", "--d", "3"}).out);
}
