#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CSTKIT_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, DecomposeText) {
  const auto r = run("decompose --group S2 --poly \"z1^2\"");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(contains(r.out, "f_1 = -z1*z2")) << r.out;
  EXPECT_TRUE(contains(r.out, "f_2 = z1 + z2")) << r.out;
  EXPECT_TRUE(contains(r.out, "reconstructed: yes")) << r.out;
}

TEST(Cli, DecomposeJson) {
  const auto r = run("--json decompose --group S2 --poly \"z1^2\"");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["group"], "S2");
  EXPECT_EQ(j["basis"], nlohmann::json::array({"1", "z1"}));
  EXPECT_EQ(j["coefficients"], nlohmann::json::array({"-z1*z2", "z1 + z2"}));
  EXPECT_EQ(j["theta_forms"], nlohmann::json::array({"-u2", "u1"}));
  EXPECT_EQ(j["reconstructed"], true);
  // trailing global flag is accepted too, with identical output
  EXPECT_EQ(run("decompose --group S2 --poly \"z1^2\" --json").out, r.out);
}

TEST(Cli, SeriesDecomposition) {
  const auto r = run("--json decompose --group Z2 --poly \"1 + z + z^2 + z^3 + z^4 + z^5\" --series 5");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["coefficients"], nlohmann::json::array({"z^4 + z^2 + 1", "z^4 + z^2 + 1"}));
}

TEST(Cli, ProjectAndFine) {
  const auto r = run("project --group D3 --irrep std --poly z1");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "P f = z1")) << r.out;
  const auto f = run("--json project --group D3 --irrep std --fine 1,1 --poly z1");
  EXPECT_EQ(nlohmann::json::parse(f.out)["projection"], "0");
  const auto s = run("--json project --group S3 --irrep std --poly z1");
  EXPECT_EQ(nlohmann::json::parse(s.out)["projection"], "2/3*z1 - 1/3*z2 - 1/3*z3");
}

TEST(Cli, KernelBlock) {
  const auto r = run("--json kernel --spec bergman:2 --group Z3 --block sign --degree 8");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["transported"], nlohmann::json::array({"1/3", "2/3", "1"}));
  EXPECT_EQ(j["kernel"], "bergman:2");
  EXPECT_EQ(j["generator"], "z^2");
  // (z wbar)^2, (z wbar)^5, (z wbar)^8 with a_k = k + 1
  EXPECT_EQ(j["block_coeffs"].size(), 3u);
  for (const auto& t : j["block_coeffs"]) EXPECT_EQ(t[2].get<std::string>(), std::to_string(t[0][0].get<int>() + 1));
}

TEST(Cli, GroupAndHsop) {
  const auto g = nlohmann::json::parse(run("--json group S3").out);
  EXPECT_EQ(g["order"], 6);
  EXPECT_EQ(g["pseudoreflections"], 3);
  EXPECT_EQ(g["irreps"].size(), 3u);
  const auto h = run("hsop D3");
  EXPECT_TRUE(contains(h.out, "theta2 = z1^3 + z2^3")) << h.out;
  EXPECT_TRUE(contains(h.out, "1 + 2*t + 2*t^2 + t^3")) << h.out;
  EXPECT_TRUE(contains(run("basis S2").out, "p2 = z1"));
}

TEST(Cli, VerifyPasses) {
  const auto r = run("verify --group D3 --suite all --degree 6");
  EXPECT_EQ(r.code, 0) << r.out;
  for (const std::string s : {"suite lambda", "suite cst", "suite isotypic", "suite kernels"}) EXPECT_TRUE(contains(r.out, s)) << s;
  EXPECT_FALSE(contains(r.out, "FAIL"));
  const auto j = nlohmann::json::parse(run("--json verify --group S2 --suite lambda --degree 4").out);
  EXPECT_EQ(j["ok"], true);
  for (const auto& c : j["suites"][0]["checks"]) {
    EXPECT_EQ(c["status"], "pass");
    EXPECT_TRUE(c.contains("relation"));
  }
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "--json --seed 7 verify --group Z3 --suite cst --degree 5";
  const auto a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitCodes) {
  const auto parse = run("decompose --group S2 --poly \"z1 +\"");
  EXPECT_EQ(parse.code, 1);
  EXPECT_TRUE(contains(parse.out, "ParseError")) << parse.out;
  const auto group = run("decompose --group Q7 --poly z1");
  EXPECT_EQ(group.code, 1);
  const auto cap = run("--degree-cap 4 decompose --group S2 --poly \"z1^6\"");
  EXPECT_EQ(cap.code, 1) << cap.out;
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("decompose --group S2").code, 2);
  EXPECT_EQ(run("decompose --group S2 --poly z1 --frobnicate").code, 2);
  EXPECT_EQ(run("verify --group S2 --suite bogus --degree 3").code, 2);
}
