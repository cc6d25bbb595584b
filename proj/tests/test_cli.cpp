#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(HQGEO_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST(Cli, DistBoth) {
  const CliRun r = run("dist --from 0,0,0,0,0,0,0 --to 1,0,0,0,0,0,0 --metric both");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "hqgeo/1");
  EXPECT_EQ(j["d_cc"].get<double>(), 1.0);
  EXPECT_EQ(j["d_K"].get<double>(), 1.0);
  EXPECT_EQ(j["ratio"].get<double>(), 1.0);
}

TEST(Cli, DistCsvAndPublished) {
  const CliRun r = run("dist --to 0,0,0,0,1,0,0 --metric cc --format csv --as-published");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string head, row;
  std::getline(in, head);
  std::getline(in, row);
  EXPECT_EQ(head, "d_cc");
  EXPECT_NEAR(std::stod(row), std::sqrt(M_PI / 2), 1e-12);
}

TEST(Cli, HmcKoranyi) {
  const CliRun r = run("hmc --surface koranyi-sphere --params R=1 --grid r=0.5");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string head, row;
  std::getline(in, head);
  std::getline(in, row);
  EXPECT_EQ(head, "r,h0,reference,profile_formula");
  EXPECT_NEAR(std::stod(row.substr(row.find(',') + 1)), 4.5, 1e-9);
}

TEST(Cli, HmcEuclideanSphereReportsPrintedDisplay) {
  const CliRun r = run("hmc --surface euclidean-sphere --grid r=0.7071067811865476 --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& v = j["values"][0];
  EXPECT_NEAR(v["h0"].get<double>(), 6.259807120445899, 1e-6);
  EXPECT_TRUE(v.contains("printed_display"));
}

TEST(Cli, HmcCharacteristicPointIsDomainError) {
  EXPECT_EQ(run("hmc --surface paraboloid-sqrt43 --grid r=0").code, 1);
}

TEST(Cli, FlagErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("dist --to 1,2,3").code, 2);
  EXPECT_EQ(run("dist --to 1,0,0,0,0,0,0 --metric euclid").code, 2);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run("hmc --surface torus").code, 2);
  EXPECT_EQ(run("curvature --L 1,2").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, GeodesicAndPathCsv) {
  for (const std::string args : {"geodesic --target 0.5,0,0,0,0.2,0,0 --samples 16", "geodesic --target 0.5,0,0,0,0.2,0,0 --L 2 --samples 16",
                                 "path --from 1,0,0,0,0,0,0 --to 0,1,0,0,1,0,0 --samples 8"}) {
    const CliRun r = run(args);
    ASSERT_EQ(r.code, 0) << args;
    EXPECT_EQ(r.out.rfind("lambda,x1,x2,x3,x4,t1,t2,t3,theta1,theta2,theta3,res_horizontality\n", 0), 0u);
  }
  EXPECT_EQ(run("geodesic --target 0,0,0,0,0,0,0 --L 1").code, 1);
}

TEST(Cli, SphereAndCurvatureJson) {
  const CliRun s = run("sphere --radius 1 --samples 10 --format json");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out)["points"].size(), 10u);
  const CliRun c = run("curvature --L 1,2,3");
  ASSERT_EQ(c.code, 0);
  const auto j = nlohmann::json::parse(c.out);
  EXPECT_TRUE(j["paper_match_flags"]["ricci_vertical_mismatch"].get<bool>());
}

TEST(Cli, OutputFileAndDirectoryOverride) {
  const auto dir = std::filesystem::temp_directory_path() / "hqgeo_cli_test";
  std::filesystem::create_directories(dir);
  const CliRun r = run("sphere --radius 2 --samples 5 --output " + (dir / "a.csv").string());
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(std::filesystem::exists(dir / "a.csv"));
  const std::string env = "HQGEO_OUTPUT_DIR=" + dir.string() + " ";
  const int code = std::system((env + HQGEO_CLI_PATH + " sphere --radius 2 --samples 5 --output b.csv").c_str());
  EXPECT_EQ(code, 0);
  std::ifstream a(dir / "a.csv"), b(dir / "b.csv");
  std::string sa((std::istreambuf_iterator<char>(a)), {}), sb((std::istreambuf_iterator<char>(b)), {});
  EXPECT_EQ(sa, sb);
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = run("verify --suite all --seed 42"), b = run("verify --suite all --seed 42");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("0 failures"), std::string::npos);
  const CliRun j = run("verify --suite hmc --format json");
  EXPECT_EQ(nlohmann::json::parse(j.out)["failures"], 0);
}
