#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(H2D_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  std::string l;
  while (std::getline(is, l)) v.push_back(l);
  return v;
}

std::vector<double> fields(const std::string& line) {
  std::vector<double> v;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) v.push_back(std::stod(f));
  return v;
}

}  // namespace

TEST(CliEigen, Rows) {
  const auto r = run("eigen --n-max 2");
  ASSERT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[0], "n,q0,energy");
  EXPECT_EQ(l[1], "0,2,-4");
  const auto row1 = fields(l[2]);
  EXPECT_DOUBLE_EQ(row1[1], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(row1[2], -4.0 / 9.0);
  const auto row2 = fields(l[3]);
  EXPECT_DOUBLE_EQ(row2[1], 0.4);
  EXPECT_DOUBLE_EQ(row2[2], -4.0 / 25.0);
}

TEST(CliEigen, SingleRowAndUsageErrors) {
  const auto r = run("eigen --n-max 0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 2u);
  EXPECT_EQ(run("eigen --n-max -1").code, 2);
  EXPECT_EQ(run("eigen --n-max 51").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(CliTable, PositionGroundState) {
  const auto r = run("table --space position --n 0 --m 0 --grid 0:5:6 --angle 0 --format csv");
  ASSERT_EQ(r.code, 0);
  const auto l = lines(r.out);
  ASSERT_EQ(l.size(), 7u);
  EXPECT_EQ(l[0], "rho,re_psi,im_psi,abs2_psi");
  const auto f = fields(l[1]);
  EXPECT_EQ(f[0], 0.0);
  EXPECT_NEAR(f[1], 1.5957691216057308, 1e-15);
  EXPECT_EQ(f[2], 0.0);
  EXPECT_NEAR(f[3], 8.0 / M_PI, 1e-15);
  EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(CliTable, MomentumGroundStateAtOrigin) {
  const auto r = run("table --space momentum --n 0 --m 0 --grid 0:3:4");
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(fields(lines(r.out)[1])[3], 1.0 / (2.0 * M_PI), 1e-15);
}

TEST(CliTable, MomentumPhasePurelyImaginary) {
  const auto r = run("table --space momentum --n 1 --m 1 --grid 0.1:3:8 --angle 0");
  ASSERT_EQ(r.code, 0);
  const auto l = lines(r.out);
  for (std::size_t i = 1; i < l.size(); ++i) {
    const auto f = fields(l[i]);
    EXPECT_EQ(f[1], 0.0);
    EXPECT_NE(f[2], 0.0);
  }
}

TEST(CliTable, JsonAndMesh) {
  const auto r = run("table --space position --n 1 --m -1 --grid 0:2:3 --mesh 0:3:4 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 12u);
  EXPECT_TRUE(j[5].contains("phi"));
  EXPECT_TRUE(j[5].contains("abs2_psi"));
}

TEST(CliTable, UsageErrors) {
  EXPECT_EQ(run("table --n 1 --m 3").code, 2);
  EXPECT_EQ(run("table --n 1 --grid 0:1").code, 2);
  EXPECT_EQ(run("table --n 1 --grid -1:1:3").code, 2);
  EXPECT_EQ(run("table --n 1 --space spin").code, 2);
  EXPECT_EQ(run("table --n 1 --format xml").code, 2);
}

TEST(CliTable, Deterministic) {
  const std::string args = "table --space momentum --n 3 --m 2 --grid 0.05:20:50:log --angle 1.3";
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(CliVerify, LeviCivitaReport) {
  const auto r = run("verify levicivita");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  bool found = false;
  for (const auto& rep : j) {
    for (const char* key : {"check_name", "grid_desc", "max_abs_err", "max_rel_err", "tolerance", "pass", "notes"})
      EXPECT_TRUE(rep.contains(key)) << key;
    if (rep["check_name"] == "levicivita.measure_factor") {
      found = true;
      EXPECT_NE(rep["notes"].get<std::string>().find("measured measure factor c = 2"), std::string::npos);
    }
  }
  EXPECT_TRUE(found);
}

TEST(CliVerify, ForcedFailure) { EXPECT_EQ(run("verify ft --n-max 4 --tol 1e-20").code, 1); }

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run("verify everything").code, 2);
  EXPECT_EQ(run("verify ft --n-max 11").code, 2);
  EXPECT_EQ(run("verify ft --tol abc").code, 2);
}

TEST(CliVerify, OutFileAndDeterminism) {
  const std::string path = std::string(H2D_TEST_TMP) + "/verify_momentum.json";
  ASSERT_EQ(run("verify momentum --n-max 3 --out " + path).code, 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run("verify momentum --n-max 3").out);
  const auto stamped = nlohmann::json::parse(run("verify momentum --n-max 3 --stamp").out);
  EXPECT_TRUE(stamped[0].contains("generated_at"));
  EXPECT_FALSE(nlohmann::json::parse(ss.str())[0].contains("generated_at"));
}

TEST(CliVerify, AllPassesAtNMax4) {
  const auto r = run("verify all --n-max 4");
  EXPECT_EQ(r.code, 0);
  for (const auto& rep : nlohmann::json::parse(r.out)) EXPECT_TRUE(rep["pass"].get<bool>()) << rep["check_name"];
}
