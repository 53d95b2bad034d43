#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string &args, const std::string &env = "env -u MTT_SEED") {
  Run r;
  std::string cmd = env + " '" + std::string(MTT_BIN) + "' " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string corpus(const char *file) { return std::string("'") + MTT_CORPUS_DIR + "/" + file + "'"; }

}  // namespace

TEST_CASE("check exit codes") {
  Run ok = run("check " + corpus("good/nat_add.mtt"));
  CHECK(ok.status == 0);
  CHECK(ok.out.find("add : Nat -> Nat -> Nat") != std::string::npos);

  Run bad = run("check " + corpus("bad/mismatch.mtt"));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("mismatch.mtt:") != std::string::npos);

  CHECK(run("check /nonexistent/missing.mtt").status == 2);
}

TEST_CASE("eval") {
  Run r = run("eval '2/3 + 1/3'");
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
  CHECK(run("eval 'if true then 2 else 3'").out == "2\n");
  CHECK(run("eval 'J ('").status == 1);
}

TEST_CASE("laws output is deterministic and seedable") {
  const std::string args = "laws --count 20 --filter groupoid,tap.idp.Pi,j.refl";
  Run a = run(args + " --seed 7");
  Run b = run(args + " --seed 7");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(run(args, "env MTT_SEED=7").out == a.out);

  auto reports = nlohmann::ordered_json::parse(a.out);
  REQUIRE(reports.size() == 8);
  for (const auto &r : reports) {
    std::vector<std::string> keys;
    for (const auto &[k, v] : r.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"law", "instances", "passed", "counterexample", "elapsed_ms"});
    CHECK(r["passed"] == true);
    CHECK(r["counterexample"].is_null());
  }
  CHECK(reports[0]["instances"] == 20);
}

TEST_CASE("degeneracy depends on the ring") {
  CHECK(run("laws --filter degeneracy --ring integers").status == 0);
  Run trivial = run("laws --filter degeneracy --ring trivial");
  CHECK(trivial.status == 1);
  CHECK(trivial.out.find("\"passed\": false") != std::string::npos);
}
