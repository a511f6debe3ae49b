#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "ordstop/json_io.hpp"
#include "test_support.hpp"

using namespace ordstop;
using namespace ordstop::testing;
using nlohmann::json;

namespace {

std::filesystem::path scratch_dir() {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "ordstop_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_scratch(const std::string& name, const std::string& body) {
  const std::filesystem::path path = scratch_dir() / name;
  std::ofstream out(path);
  out << body;
  return path.string();
}

struct CliOutcome {
  int exit_code = 0;
  std::string out;
  std::string err;
  json report;
};

CliOutcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  CliOutcome outcome;
  outcome.exit_code = ordstop::cli::run(args, out, err);
  outcome.out = out.str();
  outcome.err = err.str();
  if (outcome.exit_code == 0 && !outcome.out.empty() &&
      outcome.out.front() == '{') {
    outcome.report = json::parse(outcome.out);
  }
  return outcome;
}

const char* kIntroInstance = R"({
  "version": 1,
  "variables": [
    {"type": "two_point", "a": 0, "b": 1, "p": 0.1},
    {"type": "finite", "atoms": [0.1], "masses": [1.0]}
  ]
})";

const char* kTightInstance = R"({
  "version": 1,
  "variables": [
    {"type": "two_point", "a": 0.5, "b": 5.0, "p": 0.1},
    {"type": "two_point", "a": 0.0, "b": 1.0, "p": 0.5}
  ]
})";

}  // namespace

TEST_CASE("all four distribution encodings parse") {
  Dist finite = dist_from_json_string(
      R"({"type":"finite","atoms":[0.0,1.0],"masses":[0.9,0.1]})");
  CHECK(near(mean(finite), 0.1, 1e-15));

  Dist uni = dist_from_json_string(R"({"type":"uniform","lo":0.2,"hi":0.8})");
  CHECK(near(mean(uni), 0.5, 1e-15));

  Dist two = dist_from_json_string(
      R"({"type":"two_point","a":0.5,"b":5.0,"p":0.1})");
  CHECK(near(mean(two), 0.95, 1e-15));

  Dist three = dist_from_json_string(
      R"({"type":"three_point","a":0.0,"m":0.5,"b":1.0,"p":0.25,"q":0.5})");
  CHECK(near(mean(three), 0.625, 1e-15));
}

TEST_CASE("distribution parsing failures") {
  CHECK_THROWS_AS(dist_from_json_string("not json"), ArgumentError);
  CHECK_THROWS_AS(dist_from_json_string(R"({"type":"mystery"})"),
                  ArgumentError);
  CHECK_THROWS_AS(dist_from_json_string(R"({"type":"uniform","lo":0.5})"),
                  ArgumentError);
  CHECK_THROWS_AS(
      dist_from_json_string(R"({"type":"finite","atoms":[0.1],"masses":[2]})"),
      ArgumentError);
}

TEST_CASE("canonical serialization round-trips") {
  Rng rng(34);
  for (int trial = 0; trial < 100; ++trial) {
    Dist d = trial % 3 == 0
                 ? Dist(UniformDist(uniform(rng, 0.0, 0.4),
                                    uniform(rng, 0.5, 2.0)))
                 : Dist(random_finite(rng, 4));
    const std::string text = dist_to_json_string(d);
    Dist back = dist_from_json_string(text);
    if (const UniformDist* u = std::get_if<UniformDist>(&back)) {
      // Uniform supports re-serialize byte-identically.
      CHECK(dist_to_json_string(*u) == text);
      continue;
    }
    // Finite supports renormalize on construction, which may move the last
    // bit of each mass; atoms come back exactly.
    const FiniteDist& orig = std::get<FiniteDist>(d);
    const FiniteDist& copy = std::get<FiniteDist>(back);
    REQUIRE(copy.size() == orig.size());
    for (std::size_t i = 0; i < orig.size(); ++i) {
      CHECK(copy.atoms()[i] == orig.atoms()[i]);
      CHECK(near(copy.masses()[i], orig.masses()[i], 1e-15));
    }
  }
}

TEST_CASE("instance files validate") {
  CHECK_THROWS_AS(instance_from_json_string(R"({"version":2,"variables":[]})"),
                  ArgumentError);
  CHECK_THROWS_AS(instance_from_json_string(R"({"version":1,"variables":[]})"),
                  ArgumentError);
  CHECK_THROWS_AS(instance_from_json_string(R"({"variables":[1]})"),
                  ArgumentError);

  InstanceFile file = instance_from_json_string(kIntroInstance);
  CHECK(file.variables.size() == 2);
  const std::string text = instance_to_json_string(file);
  InstanceFile again = instance_from_json_string(text);
  CHECK(instance_to_json_string(again) == text);
  CHECK(instance_digest(file) == instance_digest(again));
}

TEST_CASE("evaluate command reproduces the intro pair") {
  const std::string path = write_scratch("intro.json", kIntroInstance);

  CliOutcome forward =
      run_cli({"--json", "evaluate", path, "--order", "0,1"});
  REQUIRE(forward.exit_code == 0);
  CHECK(near(forward.report["result"]["value"].get<double>(), 0.19, 1e-15));
  CHECK(forward.report["result"]["excesses"][0].get<double>() ==
        doctest::Approx(0.09));

  CliOutcome backward =
      run_cli({"--json", "evaluate", path, "--order", "1,0"});
  REQUIRE(backward.exit_code == 0);
  CHECK(near(backward.report["result"]["value"].get<double>(), 0.1, 1e-15));

  CliOutcome bad = run_cli({"evaluate", path, "--order", "0,0"});
  CHECK(bad.exit_code == 2);
  CliOutcome missing = run_cli({"evaluate", "/no/such/file", "--order", "0"});
  CHECK(missing.exit_code == 2);
  CliOutcome no_order = run_cli({"evaluate", path});
  CHECK(no_order.exit_code == 2);

  const std::string solo = write_scratch("solo.json", R"({
    "version": 1,
    "variables": [{"type": "two_point", "a": 0.0, "b": 1.0, "p": 0.3}]
  })");
  CliOutcome identity = run_cli({"--json", "evaluate", solo, "--order", "0"});
  REQUIRE(identity.exit_code == 0);
  CHECK(near(identity.report["result"]["value"].get<double>(), 0.3, 1e-15));

  // Uniform variables evaluate through the closed form.
  const std::string mixed = write_scratch("mixed.json", R"({
    "version": 1,
    "variables": [
      {"type": "uniform", "lo": 0.0, "hi": 1.0},
      {"type": "two_point", "a": 0.0, "b": 1.0, "p": 0.5}
    ]
  })");
  CliOutcome with_uniform =
      run_cli({"--json", "evaluate", mixed, "--order", "0,1"});
  REQUIRE(with_uniform.exit_code == 0);
  CHECK(near(with_uniform.report["result"]["value"].get<double>(), 0.625,
             1e-12));
}

TEST_CASE("solve command dispatches by method") {
  const std::string tight = write_scratch("tight.json", kTightInstance);

  CliOutcome two_point_run =
      run_cli({"--json", "solve", tight, "--method", "two-point"});
  REQUIRE(two_point_run.exit_code == 0);
  CHECK(near(two_point_run.report["result"]["value"].get<double>(), 0.975,
             1e-15));

  CliOutcome brute_run =
      run_cli({"--json", "solve", tight, "--method", "brute"});
  REQUIRE(brute_run.exit_code == 0);
  CHECK(near(brute_run.report["result"]["value"].get<double>(), 0.975, 1e-15));

  CliOutcome missing_eps =
      run_cli({"--json", "solve", tight, "--method", "fptas"});
  CHECK(missing_eps.exit_code == 2);

  CliOutcome wrong_method =
      run_cli({"--json", "solve", tight, "--method", "magic"});
  CHECK(wrong_method.exit_code == 2);

  CliOutcome not_uniform =
      run_cli({"--json", "solve", tight, "--method", "nested-uniform"});
  CHECK(not_uniform.exit_code == 2);

  const std::string nested = write_scratch("nested.json", R"({
    "version": 1,
    "variables": [
      {"type": "uniform", "lo": 0.25, "hi": 0.75},
      {"type": "uniform", "lo": 0.0, "hi": 1.0}
    ]
  })");
  CliOutcome chain =
      run_cli({"--json", "solve", nested, "--method", "nested-uniform"});
  REQUIRE(chain.exit_code == 0);
  CHECK(chain.report["result"]["ordering"] == json::array({1, 0}));
  CHECK(near(chain.report["result"]["value"].get<double>(), 0.625, 1e-12));
}

TEST_CASE("solve agrees across methods on random two-point instances") {
  Rng rng(35);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = uniform_index(rng, 2, 8);
    TwoPointInstance inst = random_two_point_instance(rng, n);
    InstanceFile file;
    for (const Dist& d : inst.dists()) file.variables.push_back(d);
    const std::string path = write_scratch("random_two_point.json",
                                           instance_to_json_string(file));
    CliOutcome fast = run_cli({"--json", "solve", path, "--method",
                               "two-point"});
    CliOutcome brute = run_cli({"--json", "solve", path, "--method", "brute"});
    REQUIRE(fast.exit_code == 0);
    REQUIRE(brute.exit_code == 0);
    CHECK(near(fast.report["result"]["value"].get<double>(),
               brute.report["result"]["value"].get<double>(), 1e-9));
  }
}

TEST_CASE("fptas solve reports its trim trace") {
  CliOutcome gen = run_cli({"--json", "gen-hardness", "--integers", "2,3,5",
                            "--target", "6", "--out",
                            (scratch_dir() / "h235.json").string()});
  REQUIRE(gen.exit_code == 0);
  CliOutcome res = run_cli({"--json", "solve",
                            (scratch_dir() / "h235.json").string(),
                            "--method", "fptas", "--eps", "0.1"});
  REQUIRE(res.exit_code == 0);
  CHECK(res.report["result"]["variant"] == "common-endpoints");
  CHECK(res.report["result"]["partitions_kept"].size() == 3);

  CliOutcome brute = run_cli({"--json", "solve",
                              (scratch_dir() / "h235.json").string(),
                              "--method", "brute"});
  REQUIRE(brute.exit_code == 0);
  CHECK(res.report["result"]["value"].get<double>() >=
        0.9 * brute.report["result"]["value"].get<double>() - 1e-9);
}

TEST_CASE("prophet command emits ratio and certificate") {
  const std::string tight = write_scratch("tight2.json", kTightInstance);
  CliOutcome res = run_cli({"--json", "prophet", tight});
  REQUIRE(res.exit_code == 0);
  CHECK(near(res.report["result"]["e_max"].get<double>(), 1.175, 1e-12));
  CHECK(near(res.report["result"]["ratio"].get<double>(), 1.175 / 0.975,
             1e-12));
  CHECK(res.report["result"]["certificate"]["w_indices"].size() == 1);

  const std::string intro = write_scratch("intro2.json", kIntroInstance);
  CliOutcome one = run_cli({"--json", "prophet", intro});
  REQUIRE(one.exit_code == 0);
  CHECK(near(one.report["result"]["ratio"].get<double>(), 1.0, 1e-12));

  // Three-atom variables are not a two-point instance.
  CliOutcome gen = run_cli({"--json", "gen-hardness", "--integers", "2,3",
                            "--target", "6", "--out",
                            (scratch_dir() / "h23.json").string()});
  REQUIRE(gen.exit_code == 0);
  CliOutcome bad =
      run_cli({"--json", "prophet", (scratch_dir() / "h23.json").string()});
  CHECK(bad.exit_code == 2);
}

TEST_CASE("gen-hardness writes a loadable instance with metadata") {
  const std::string out_path = (scratch_dir() / "hardness_out.json").string();
  CliOutcome gen = run_cli({"--json", "gen-hardness", "--integers", "2,3",
                            "--target", "6", "--out", out_path});
  REQUIRE(gen.exit_code == 0);
  CHECK(near(gen.report["result"]["m"][0].get<double>(), 34.0 / 37.0, 1e-15));
  CHECK(near(gen.report["result"]["m"][1].get<double>(), 33.0 / 37.0, 1e-15));

  InstanceFile file = load_instance(out_path);
  CHECK(file.variables.size() == 2);
  CHECK(file.metadata.at("gamma") == 6.0);
  CHECK(file.metadata.at("B") == 6.0);

  CliOutcome rejected = run_cli({"--json", "gen-hardness", "--integers",
                                 "2,3", "--target", "1", "--out", out_path});
  CHECK(rejected.exit_code == 2);
}

TEST_CASE("check-structure command") {
  CliOutcome gen = run_cli({"--json", "gen-hardness", "--integers", "2,3",
                            "--target", "6", "--out",
                            (scratch_dir() / "h23b.json").string()});
  REQUIRE(gen.exit_code == 0);
  CliOutcome res = run_cli({"--json", "check-structure",
                            (scratch_dir() / "h23b.json").string(),
                            "--order", "0,1"});
  REQUIRE(res.exit_code == 0);
  CHECK(res.report["result"]["satisfies_claim"].get<bool>());
  CHECK(res.report["result"]["t_indices"].size() == 2);
}

TEST_CASE("reports re-serialize byte-identically") {
  const std::string intro = write_scratch("intro3.json", kIntroInstance);
  CliOutcome res = run_cli({"--json", "evaluate", intro, "--order", "0,1"});
  REQUIRE(res.exit_code == 0);
  json parsed = json::parse(res.out);
  CHECK(parsed.dump(2) + "\n" == res.out);
}

TEST_CASE("human-readable output carries the same values") {
  const std::string intro = write_scratch("intro4.json", kIntroInstance);
  CliOutcome res = run_cli({"evaluate", intro, "--order", "0,1"});
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("command: evaluate") != std::string::npos);
  CHECK(res.out.find("value") != std::string::npos);
}

TEST_CASE("help is not an error") {
  CliOutcome help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("solve") != std::string::npos);
}
