// Runs the facheck binary and checks exit codes and payloads.

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run facheck(const std::string& args) {
  const std::string cmd = std::string(FACHECK_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(FINANN_TEST_DATA) + "/" + name; }

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, AnalyzeKlein) {
  const auto r = facheck("--format json analyze " + data("klein.pres"));
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j["verdict"], "FA");
  EXPECT_EQ(j["easily_fa"], true);
  EXPECT_EQ(j["invariants"]["free_rank"], 0);
  EXPECT_EQ(j["invariants"]["factors"], nlohmann::json::array({2, 2}));
  for (const char* key : {"presentation", "hint", "property", "verdict", "reason", "invariants", "easily_fa"})
    EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, AnalyzeTorsionTripleAndHigman) {
  const auto k = json_of(facheck("--format json analyze " + data("k235.pres")));
  EXPECT_EQ(k["verdict"], "Unknown");
  EXPECT_EQ(k["invariants"]["factors"], nlohmann::json::array({30}));
  const auto h = json_of(facheck("--format json analyze " + data("higman.pres")));
  EXPECT_EQ(h["verdict"], "Unknown");
  EXPECT_EQ(h["perfect"], true);
  EXPECT_EQ(h["abelian_a"]["verdict"], "NotFA");
  const auto n = json_of(facheck("--format json analyze " + data("klein.pres") + " --nfa 2 --hint abelian"));
  EXPECT_EQ(n["nfa"]["verdict"], "NotFA");
}

TEST(Cli, TextAndJsonAgree) {
  for (const char* f : {"klein.pres", "k235.pres", "higman.pres", "hnn.pres", "coprime23.pres", "free2.pres"}) {
    const auto j = json_of(facheck("--format json analyze " + data(f)));
    const auto t = facheck("analyze " + data(f));
    ASSERT_EQ(t.code, 0);
    EXPECT_NE(t.out.find("F-A:          " + j["verdict"].get<std::string>() + " "), std::string::npos) << f;
  }
}

TEST(Cli, ParseErrorsExitTwo) {
  EXPECT_EQ(facheck("analyze " + data("broken.pres")).code, 2);
  EXPECT_EQ(facheck("analyze " + data("klein.pres") + " --hint nilpotent").code, 2);
  EXPECT_EQ(facheck("finite \"X 3\"").code, 2);
  EXPECT_EQ(facheck("finite " + data("malformed.perm") + " --load permutations").code, 2);
  EXPECT_EQ(facheck("--format yaml finite Q8").code, 2);
  EXPECT_EQ(facheck("frobnicate").code, 2);
  EXPECT_EQ(facheck("witness " + data("k235.pres") + " w --bound 5").code, 2);
}

TEST(Cli, IoErrorExitFour) { EXPECT_EQ(facheck("analyze " + data("nope.pres")).code, 4); }

TEST(Cli, LimitsExitThree) {
  EXPECT_EQ(facheck("--caps order=128 finite \"SL 7\"").code, 3);
  EXPECT_EQ(facheck("finite \"SL 7\" --caps order=128").code, 3);
  EXPECT_EQ(facheck("--caps normal=100 finite \"S 5\"").code, 3);
  EXPECT_EQ(facheck("--caps budget=3 witness " + data("free2.pres") + " a --bound 4").code, 3);
}

TEST(Cli, FiniteExamples) {
  const auto c15 = json_of(facheck("--format json finite \"C 15\""));
  EXPECT_EQ(c15["fa"]["verdict"], false);
  EXPECT_EQ(c15["fa"]["uncovered"].size(), 1u);
  const auto q8 = json_of(facheck("--format json finite Q8 --verify"));
  EXPECT_EQ(q8["verify"]["pass"], true);
  const auto s5 = json_of(facheck("--format json finite \"S 5\" --weight"));
  EXPECT_EQ(s5["weight"]["weight"], 1);
  const auto nfa = json_of(facheck("--format json finite \"E 2 3\" --nfa 2"));
  EXPECT_EQ(nfa["nfa"]["property"], "2-F-A");
  EXPECT_EQ(nfa["nfa"]["verdict"], true);
  const auto loaded = json_of(facheck("--format json finite " + data("s5.perm") + " --load permutations"));
  EXPECT_EQ(loaded["group"], "s5");
  EXPECT_EQ(loaded["order"], 120);
  const auto el = json_of(facheck("--format json finite \"CxC 2 2\" --element 1"));
  EXPECT_EQ(el["element_witness"]["subgroup"], "0x3");
}

TEST(Cli, WitnessExamples) {
  const auto k = json_of(facheck("--format json witness " + data("k235.pres") + " x --bound 5"));
  EXPECT_EQ(k["target"]["name"], "C3");
  EXPECT_EQ(k["target"]["order"], 3);
  EXPECT_EQ(k["verified"], true);
  EXPECT_EQ(k["images"]["x"], 0);
  const auto h = facheck("witness " + data("higman.pres") + " a --bound 30");
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("none ≤ 30"), std::string::npos) << h.out;
  EXPECT_EQ(h.out.find("not F-A"), std::string::npos);
  const auto f = json_of(facheck("--format json witness " + data("free2.pres") + " a --bound 4"));
  EXPECT_EQ(f["target"]["name"], "C2");
  EXPECT_EQ(f["images"]["a"], 0);
  EXPECT_EQ(f["images"]["b"], 1);
  const auto q = json_of(facheck("--format json quotient " + data("higman.pres") + " --bound 30"));
  EXPECT_EQ(q["result"], "none ≤ 30");
}

TEST(Cli, Scan) {
  const auto s = json_of(facheck("--format json scan " + data("k235.pres") + " --length 1 --bound 5"));
  EXPECT_EQ(s["words"].size(), 7u);
  EXPECT_EQ(s["unwitnessed"], 0);
  EXPECT_EQ(s["words"][1]["word"], "x");
  EXPECT_EQ(s["words"][1]["status"], "witnessed");
}

TEST(Cli, VerifyAll) {
  const auto t = facheck("verify-all --max-order 1");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("skipped-convention"), std::string::npos) << t.out;
  const auto all = facheck("--format json --jobs 2 verify-all --max-order 32 --nfa-max 3");
  ASSERT_EQ(all.code, 0) << all.out.substr(0, 2000);
  const auto j = nlohmann::json::parse(all.out);
  EXPECT_EQ(j["mismatches"], 0);
  EXPECT_GE(j["checked"].get<int>(), 50);
  EXPECT_EQ(j["groups"][0]["group"], "C1");
  const auto bad = facheck("verify-all --max-order 24 --group-file cayley:" + data("corrupt.cayley"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("corrupt"), std::string::npos);
  EXPECT_NE(bad.out.find("validate"), std::string::npos);
}

TEST(Cli, ConfigFile) {
  const std::string cfg = std::string(FINANN_TEST_TMP) + "/facheck.toml";
  FILE* f = fopen(cfg.c_str(), "w");
  ASSERT_TRUE(f);
  fputs("format = \"json\"\ncaps = [\"order=128\"]\n", f);
  fclose(f);
  EXPECT_EQ(facheck("--config " + cfg + " finite \"SL 7\"").code, 3);
  const auto ok = facheck("--config " + cfg + " --caps order=400 normal=400 finite \"SL 7\"");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_EQ(json_of(ok)["order"], 336);
}
