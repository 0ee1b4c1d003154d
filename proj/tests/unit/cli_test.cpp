#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cli/commands.hpp"
#include "oracles.hpp"

using namespace wonderful;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, PosetJson) {
  const auto r = run({"poset", "A1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["group"], "A1");
  EXPECT_TRUE(j.contains("generator_conventions"));
  ASSERT_EQ(j["payload"].size(), 6u);
  const auto& first = j["payload"][0];
  EXPECT_EQ(first["I"], nlohmann::json::array());
  EXPECT_EQ(first["x"], nlohmann::json::array());
  EXPECT_EQ(first["dim"], 1);
  EXPECT_FALSE(first.contains("below"));
}

TEST(Cli, PosetJsonRoundTrips) {
  for (const char* g : {"A1", "A2"}) {
    const auto r = run({"poset", g, "--full-order"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(nlohmann::ordered_json::parse(r.out).dump(2) + "\n", r.out);
    EXPECT_TRUE(nlohmann::ordered_json::parse(r.out)["payload"][0].contains("below"));
  }
}

TEST(Cli, PosetCsvAndDot) {
  const auto csv = run({"poset", "A2", "--format", "csv"});
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "I,x,w,dim,covers");
  EXPECT_EQ(lines(csv.out), 79u);

  const auto dot = run({"poset", "A2", "--format", "dot"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
  std::size_t nodes = 0;
  std::istringstream in(dot.out);
  for (std::string line; std::getline(in, line);)
    if (line.find("[label=") != std::string::npos) ++nodes;
  EXPECT_EQ(nodes, 78u);
}

TEST(Cli, PosetErrors) {
  auto r = run({"poset", "Z9"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("unknown type"), std::string::npos);
  EXPECT_NE(r.err.find("Z"), std::string::npos);
  r = run({"poset", "A2", "--format", "xml"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("xml"), std::string::npos);
  r = run({"poset", "B3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("envelope"), std::string::npos);
  r = run({"poset", "A9"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("A9"), std::string::npos);
}

TEST(Cli, Paths) {
  auto r = run({"paths", "A1", "--weight", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "id,endpoint,initial_direction,segments\n0,2,e,2:1\n1,0,s1,-2:1/2;2:1/2\n2,-2,s1,-2:1\n");
  r = run({"paths", "A2", "--weight", "0,0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 2u);
  r = run({"paths", "A1", "--weight", "-1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("weight not dominant"), std::string::npos);
  r = run({"paths", "A2", "--weight", "1"});
  EXPECT_EQ(r.code, 1);
  r = run({"paths", "A2", "--weight", "1,x"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("'x'"), std::string::npos);
}

TEST(Cli, PathsJson) {
  const auto r = run({"paths", "A1", "--weight", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(j["payload"].size(), 3u);
  EXPECT_EQ(j["payload"][1]["initial_direction"], nlohmann::json::array({1}));
  EXPECT_EQ(j["payload"][1]["segments"][0]["duration"], "1/2");
}

TEST(Cli, MonomialCounts) {
  const std::pair<const char*, const char*> cases[] = {
      {"I=1;x=e;w=w0", "10\n"}, {"I=;x=e;w=w0", "9\n"}, {"I=1;x=e;w=e", "6\n"}};
  for (const auto& [orbit, expected] : cases) {
    const auto r = run({"monomials", "A1", "--weight", "2", "--orbit", orbit, "--count-only"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, expected) << orbit;
  }
}

TEST(Cli, MonomialTables) {
  auto r = run({"monomials", "A1", "--weight", "2", "--orbit", "I=1;x=e;w=e"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,mu,left,right,weight_left,weight_right");
  EXPECT_NE(r.out.find("\n\ndegree,n,mu,count\n0,0,2,5\n1,1,0,1\n"), std::string::npos);

  r = run({"monomials", "A2", "--weight", "1,1", "--orbit", "I=1,2;x=e;w=s1 s2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["count"], j["payload"].size());
  std::size_t graded = 0;
  for (const auto& row : j["graded"])
    for (const auto& e : row["entries"]) graded += e["count"].get<std::size_t>();
  EXPECT_EQ(graded, j["count"].get<std::size_t>());
}

TEST(Cli, OrbitParsing) {
  const auto& g = oracle::group('A', 2);
  EXPECT_EQ(cli::parse_word(g, "s1s2"), cli::parse_word(g, "s1 s2"));
  EXPECT_EQ(cli::parse_word(g, "w0"), g.longest());
  EXPECT_EQ(cli::parse_word(g, "e"), g.identity());
  EXPECT_THROW(cli::parse_word(g, "s3"), DomainError);
  EXPECT_THROW(cli::parse_word(g, "t1"), DomainError);
  const auto z = cli::parse_orbit(g, "I=2;x=s1;w=w0");
  EXPECT_EQ(z.I, SubsetD::of({1}));
  EXPECT_THROW(cli::parse_orbit(g, "I=1;x=s1;w=e"), DomainError);
  EXPECT_THROW(cli::parse_orbit(g, "I=1;x=e"), DomainError);
  EXPECT_THROW(cli::parse_orbit(g, "I=1;x=e;w=e;q=1"), DomainError);

  const auto r = run({"monomials", "A1", "--weight", "2", "--orbit", "I=1;x=s1;w=e"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("not a minimal coset representative"), std::string::npos);
}

TEST(Cli, Verify) {
  auto r = run({"verify", "A1", "--max-weight", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("0 failed"), std::string::npos);
  r = run({"verify", "A2", "--max-weight", "1", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::ordered_json::parse(r.out)["failures"], 0);
}

TEST(Cli, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "wonderful_cli_test.json";
  const auto r = run({"poset", "A1", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), run({"poset", "A1"}).out);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"paths", "A1"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"poset", "A2"}, {"poset", "B2", "--format", "dot"}, {"paths", "G2", "--weight", "1,1"},
      {"monomials", "A2", "--weight", "1,1", "--orbit", "I=1;x=e;w=w0"},
      {"verify", "A1", "--max-weight", "2"}};
  for (const auto& c : commands) EXPECT_EQ(run(c).out, run(c).out);
}
