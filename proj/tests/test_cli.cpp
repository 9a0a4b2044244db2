#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

namespace {

std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the tool with stderr folded into stdout.
RunResult run(const std::string& arguments, const std::string& env = "") {
  std::string command = env.empty() ? "" : env + " ";
  command += g_binary + " " + arguments + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  std::size_t count = 0;
  while ((count = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    output.append(buffer, count);
  }
  int status = pclose(pipe);
  RunResult result;
  result.output = std::move(output);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("laws listing") {
  RunResult result = run("laws");
  CHECK(result.exit_code == 0);
  CHECK(contains(result.output, "SG: StrongGetPut [GetPut]"));
  CHECK(contains(result.output, "∀s,s′: put(s, get(s′)) = s′"));
  CHECK(contains(result.output, "WP: WeakPutGet [GetPut, PutGet]"));
  CHECK(contains(result.output, "SS: SourceStability [GetPut] (put-only)"));

  RunResult structured = run("laws --format structured");
  CHECK(structured.exit_code == 0);
  auto document = nlohmann::json::parse(structured.output);
  REQUIRE(document.is_array());
  REQUIRE(document.size() == 11);
  CHECK(document[0]["name"] == "SG");
  CHECK(document[10]["name"] == "PI");
  CHECK(document[4]["families"] == nlohmann::json::array({"GetPut", "PutGet"}));
  CHECK(document[3]["put_only"] == true);
}

TEST_CASE("checking a lens document") {
  auto path = temp_file("lenslab_cli_almost.json",
                        R"({"s_size": 2, "v_size": 1, "get": [0, 0], "put": [[0], [1]]})");

  RunResult all = run("check " + path.string());
  CHECK(all.exit_code == 1);
  CHECK(contains(all.output, "profile: GP PG PP WP UD PT SS PS VD PI"));
  CHECK(contains(all.output, "SG violated {s=0, s′=1}: lhs=0 rhs=1"));
  CHECK(contains(all.output, "GP: holds"));

  RunResult some = run("check " + path.string() + " --laws gp,pg");
  CHECK(some.exit_code == 0);
  CHECK(contains(some.output, "GP: holds"));
  CHECK(!contains(some.output, "SG"));

  RunResult structured = run("check " + path.string() + " --format structured");
  CHECK(structured.exit_code == 1);
  auto document = nlohmann::json::parse(structured.output);
  CHECK(document["lens"]["put"] == nlohmann::json::array({{0}, {1}}));
  CHECK(document["results"][0]["law"] == "SG");
  CHECK(document["results"][0]["holds"] == false);
  CHECK(document["results"][0]["witness"]["binding"]["s_prime"] == 1);
  CHECK(document["results"][1]["holds"] == true);
}

TEST_CASE("checking a put-only document") {
  auto path = temp_file("lenslab_cli_putonly.json",
                        R"({"s_size": 2, "v_size": 1, "put": [[1], [0]]})");

  RunResult defaulted = run("check " + path.string());
  CHECK(defaulted.exit_code == 1);
  CHECK(contains(defaulted.output, "PP violated"));
  CHECK(!contains(defaulted.output, "GP:"));

  RunResult surjective = run("check " + path.string() + " --laws ps");
  CHECK(surjective.exit_code == 0);

  RunResult impossible = run("check " + path.string() + " --laws sg");
  CHECK(impossible.exit_code == 2);
  CHECK(contains(impossible.output, "error:"));
}

TEST_CASE("check input failures") {
  CHECK(run("check /nonexistent/lens.json").exit_code == 2);

  auto malformed = temp_file("lenslab_cli_bad.json", "{\"s_size\": 2");
  CHECK(run("check " + malformed.string()).exit_code == 2);

  auto out_of_range = temp_file("lenslab_cli_range.json",
                                R"({"s_size": 2, "v_size": 1, "put": [[2], [0]]})");
  RunResult result = run("check " + out_of_range.string());
  CHECK(result.exit_code == 2);
  CHECK(contains(result.output, "put"));
}

TEST_CASE("closure command") {
  RunResult full = run("closure sg pg");
  CHECK(full.exit_code == 0);
  CHECK(contains(full.output, "start: SG PG"));
  CHECK(contains(full.output, "closed: SG GP PG PP WP UD PT SS PS VD PI"));
  CHECK(contains(full.output, "rule 1 (SG ⇒ GP)"));

  RunResult structured = run("closure ud --format structured");
  CHECK(structured.exit_code == 0);
  auto document = nlohmann::json::parse(structured.output);
  CHECK(document["closed"] == nlohmann::json::array({"WP", "UD", "PS"}));
  CHECK(document["traces"]["WP"]["steps"][0]["rule"] == 6);

  CHECK(run("closure bogus").exit_code == 2);
  CHECK(run("closure").exit_code == 2);
}

TEST_CASE("implies resolves by derivation") {
  RunResult derived = run("implies SG GP");
  CHECK(derived.exit_code == 0);
  CHECK(contains(derived.output, "derivable: SG ⇒ GP"));
  CHECK(contains(derived.output, "rule 1 (SG ⇒ GP)"));

  RunResult conjunction = run("implies WP SS '->' GP");
  CHECK(conjunction.exit_code == 0);
  CHECK(contains(conjunction.output, "derivable: WP SS ⇒ GP"));
  CHECK(contains(conjunction.output, "rule 7"));
}

TEST_CASE("implies refutes by search") {
  RunResult refuted = run("implies GP SG");
  CHECK(refuted.exit_code == 1);
  CHECK(contains(refuted.output, "refuted: GP ⇏ SG"));
  CHECK(contains(refuted.output, "counterexample at (2, 1) get_code=0 put_code=2"));
  CHECK(contains(refuted.output, "SG violated {s=0, s′=1}"));

  RunResult structured = run("implies GP SG --format structured");
  auto document = nlohmann::json::parse(structured.output);
  CHECK(document["verdict"] == "refuted");
  CHECK(document["scale_searched"] == nlohmann::json::array({2, 1}));
  CHECK(document["lenses_visited"] == 6);
  CHECK(document["counterexample"]["put_code"] == 2);
  CHECK(document["counterexample"]["witness"]["binding"]["s_prime"] == 1);
}

TEST_CASE("implies reports open verdicts and seeded fallbacks") {
  RunResult open = run("implies PS '=>' SS --max-s 1 --max-v 1");
  CHECK(open.exit_code == 3);
  CHECK(contains(open.output, "open"));
  CHECK(contains(open.output, "(1, 1)"));

  std::string seeded_args =
      "implies GP SG --max-s 1 --max-v 1 --seed 11 --samples 400 "
      "--rand-s 2 --rand-v 1";
  RunResult seeded = run(seeded_args);
  CHECK(seeded.exit_code == 1);
  CHECK(contains(seeded.output, "refuted: GP ⇏ SG"));
  CHECK(contains(seeded.output, "found by seeded sampling after"));
  CHECK(run(seeded_args).output == seeded.output);

  CHECK(run("implies SG").exit_code == 2);
  CHECK(run("implies XX SG").exit_code == 2);
}

TEST_CASE("sweep command") {
  RunResult sweep = run("sweep --max-s 2 --max-v 2");
  CHECK(sweep.exit_code == 0);
  CHECK(contains(sweep.output, "soundness sweep up to (2, 2)"));
  CHECK(contains(sweep.output, "total lenses: 71"));
  CHECK(contains(sweep.output, "0 violations"));

  RunResult threaded = run("sweep --max-s 2 --max-v 2 --threads 4");
  CHECK(threaded.exit_code == 0);
  CHECK(threaded.output == sweep.output);

  RunResult via_env = run("sweep", "LENSLAB_MAX_S=2 LENSLAB_MAX_V=2");
  CHECK(via_env.output == sweep.output);

  RunResult flag_wins = run("sweep --max-s 2 --max-v 2", "LENSLAB_MAX_S=3");
  CHECK(flag_wins.output == sweep.output);

  RunResult structured = run("sweep --max-s 2 --max-v 2 --format structured");
  auto document = nlohmann::json::parse(structured.output);
  CHECK(document["total_lenses"] == 71);
  CHECK(document["violation_count"] == 0);
  CHECK(document["spaces"].size() == 4);
  CHECK(document["spaces"][0]["law_hold_counts"]["SG"] == 1);

  RunResult too_small = run("sweep --max-s 3 --max-v 3 --budget 100");
  CHECK(too_small.exit_code == 2);
  CHECK(contains(too_small.output, "budget"));
}

TEST_CASE("census command") {
  RunResult census = run("census 2 1");
  CHECK(census.exit_code == 0);
  CHECK(contains(census.output, "profile census at (2, 1): 4 lenses, 3 distinct profiles"));
  CHECK(contains(census.output, "2  PG PP WP PT VD PI"));
  CHECK(contains(census.output, "1  GP PG PP WP UD PT SS PS VD PI"));

  CHECK(run("census 2").exit_code == 2);
  CHECK(run("census 0 2").exit_code == 2);

  RunResult structured = run("census 1 1 --format structured");
  auto document = nlohmann::json::parse(structured.output);
  CHECK(document["total_lenses"] == 1);
  CHECK(document["profiles"][0]["count"] == 1);
}

TEST_CASE("survey command") {
  RunResult survey = run("survey 1 --max-s 2 --max-v 2");
  CHECK(survey.exit_code == 0);
  CHECK(contains(survey.output, "candidates: 110"));
  CHECK(contains(survey.output, "SG ⇒ GP: derivable [rule 1 (SG ⇒ GP)]"));
  CHECK(contains(survey.output, "GP ⇒ SG: refuted at (2, 1) get_code=0 put_code=2"));
}

TEST_CASE("dot export") {
  RunResult dot = run("dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.output.rfind("digraph lens_law_implications {", 0) == 0);
  CHECK(contains(dot.output, "SG -> GP;"));
  CHECK(contains(dot.output, "and_7"));
  CHECK(run("dot").output == dot.output);

  auto out_path = std::filesystem::temp_directory_path() / "lenslab_cli_graph.dot";
  std::filesystem::remove(out_path);
  RunResult filed = run("dot --out " + out_path.string());
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  std::ifstream in(out_path);
  std::string written((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  CHECK(written == dot.output);
}

TEST_CASE("gallery commands") {
  RunResult listing = run("gallery");
  CHECK(listing.exit_code == 0);
  for (const char* name : {"sg_double", "gp_diff", "wp_pair", "ud_parity",
                           "ss_affine", "ps_linear", "pg_halve", "vd_pow",
                           "pi_pow", "pp_floor", "pt_floor", "identity"}) {
    CHECK(contains(listing.output, name));
  }

  RunResult checked = run("gallery gp_diff --window 4");
  CHECK(checked.exit_code == 0);
  CHECK(contains(checked.output, "entry gp_diff at window 4"));
  CHECK(contains(checked.output, "GP: consistent with claim"));
  CHECK(contains(checked.output, "SG: witness found"));
  CHECK(contains(checked.output, "SG violated {s=0, s′=1}: lhs=2 rhs=1"));

  RunResult narrow = run("gallery pi_pow --window 1");
  CHECK(narrow.exit_code == 3);
  CHECK(contains(narrow.output, "VD: window too small"));

  CHECK(run("gallery pi_pow", "LENSLAB_WINDOW=1").exit_code == 3);
  CHECK(run("gallery pi_pow --window 2", "LENSLAB_WINDOW=1").exit_code == 0);

  CHECK(run("gallery nonsense").exit_code == 2);
  CHECK(run("gallery identity --window 0").exit_code == 2);

  RunResult structured = run("gallery pi_pow --window 2 --format structured");
  auto document = nlohmann::json::parse(structured.output);
  CHECK(document["conforms"] == true);
  CHECK(document["laws"][0]["law"] == "VD");
  CHECK(document["laws"][0]["verdict"] == "witness found");
  CHECK(document["laws"][0]["witness"]["binding"]["v"] == "2");
}

TEST_CASE("usage errors") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("sweep --no-such-flag").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("implies --format yaml SG GP").exit_code == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <lenslab binary> [doctest options]\n", argv[0]);
    return 1;
  }
  g_binary = argv[1];
  doctest::Context context;
  context.applyCommandLine(argc - 1, argv + 1);
  return context.run();
}
