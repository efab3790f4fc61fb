#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "cohrealiz/barrec.hpp"

using namespace coh;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(COHREAL_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("eval") {
  Run a = run("eval \"(num 2)\" \"(stack bot bot top)\"");
  CHECK(a.code == 0);
  CHECK(has(a.out, "Top"));
  CHECK(has(a.out, "[[2,[]]]"));
  Run b = run("eval \"(num 2)\" \"(stack bot bot bot)\"");
  CHECK(b.code == 0);
  CHECK(has(b.out, "Bot"));
  // cc t pi = t (k_pi . pi)
  CHECK(has(run("eval cc \"(stack (num 1) top)\"").out, "Top"));
  CHECK(has(run("eval \"(num 1)\" \"(stack (k (stack top)) top)\"").out, "Top"));
  Run j = run("--format json eval \"(app id (num 0))\" \"(stack top)\"");
  CHECK(j.code == 0);
  json parsed = json::parse(j.out);
  CHECK(parsed["verdict"] == "Top");
}

TEST_CASE("usage and parse errors") {
  CHECK(run("eval \"(num 2\" \"(stack top)\"").code == 2);
  CHECK(run("eval x \"(stack top)\"").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("suite nosuch").code == 2);
  CHECK(run("--width 0 suite web").code == 2);
  CHECK(run("--level 0 suite web").code == 2);
  CHECK(run("--format yaml enumerate tokens").code == 2);
  CHECK(run("br /nonexistent/instance.json").code == 2);
}

TEST_CASE("enumerate") {
  Run one = run("--level 1 enumerate tokens");
  CHECK(one.code == 0);
  CHECK(has(one.out, "[]"));
  CHECK(has(one.out, "count 1"));
  Run zero = run("--level 0 --format json enumerate tokens");
  CHECK(zero.code == 0);
  CHECK(json::parse(zero.out)["count"] == 0);
  CHECK(json::parse(run("--format json enumerate tokens").out)["count"] == 25);

  // at (2,2) the proof-like cliques avoid the grade 0 token []
  json pl = json::parse(run("--level 2 --format json enumerate prooflike").out);
  CHECK(pl["count"].get<int>() > 0);
  for (const json& t : pl["items"]) CHECK(t != json::parse("[[]]"));
  json all = json::parse(run("--level 2 --format json enumerate terms").out);
  CHECK(all["count"].get<int>() > pl["count"].get<int>());
}

TEST_CASE("prooflike and realize") {
  Run a = run("prooflike \"(num 3)\"");
  CHECK(a.code == 0);
  CHECK(has(a.out, "yes"));
  Run b = run("prooflike top");
  CHECK(b.code == 0);
  CHECK(has(b.out, "no"));
  CHECK(has(run("prooflike \"(lam x (lam y x))\"").out, "yes"));
  CHECK(run("realize \"0 = 0\"").code == 0);
  CHECK(run("realize \"forall x<=2. x+0 = x\"").code == 0);
  CHECK(run("realize \"1 = 2\"").code == 1);
  CHECK(run("realize \"forall x<=2. x = y\"").code == 2);
}

TEST_CASE("suite") {
  Run w = run("--level 2 suite web");
  CHECK(w.code == 0);
  CHECK(has(w.out, "4 tokens"));
  Run a = run("--format json --seed 3 suite barrec");
  Run b = run("--format json --seed 3 suite barrec");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j["suite"] == "barrec");
  CHECK(j["failed"] == 0);
  CHECK(j["config"]["seed"] == 3);
  CHECK(j["checks"].size() == j["passed"].get<std::size_t>());
}

TEST_CASE("br instance files") {
  Context c;
  auto dir = std::filesystem::temp_directory_path();
  std::string good = (dir / "cohreal_br_good.json").string(), bad = (dir / "cohreal_br_bad.json").string();
  BRInstance inst = constructed_instance(c);
  std::ofstream(good) << instance_to_json(c, inst).dump();
  inst.g[0].rows.clear();
  std::ofstream(bad) << instance_to_json(c, inst).dump();
  std::string garbled = (dir / "cohreal_br_garbled.json").string();
  std::ofstream(garbled) << "{\"N\": ";

  Run g = run("br " + good);
  CHECK(g.code == 0);
  CHECK(has(g.out, "dns_check: Realizes"));
  json gj = json::parse(run("--format json br " + good).out);
  CHECK(gj["br"]["result"] == "top");
  CHECK(run("br " + bad).code == 1);
  CHECK(run("br " + garbled).code == 2);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
  std::filesystem::remove(garbled);
}
